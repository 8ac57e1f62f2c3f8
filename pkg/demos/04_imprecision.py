"""Robustness to boundary jitter: the no-signalling witness survives
measurement imprecision far worse than the standard quantum limit.

Real boundaries sit at beta + eps with run-to-run jitter eps; the observed
witness is the average over the jitter distribution.  Averaging uniformly
over dimensionless offsets in [-1, 1]^2 - i.e. dimensional jitter up to
sqrt(hbar/(m w)), sqrt(2) times the standard quantum limit - leaves a
clear NSIT violation, while the two-time inequality stops violating: the
inequality needs precise boundaries, the no-signalling test does not.

Pass --plot to write imprecision_heatmap.png (needs matplotlib).
"""

import sys

import numpy as np

from mrosc import OscillatorParams, averaged_witness, dimensional_offset_range, heatmap

SQRT2 = np.sqrt(2.0)
theta = np.pi / 2

print("witness averaged over uniform offsets in [-a, a]^2 at theta = pi/2:")
print(f"{'a':>5} {'avg |N|':>10} {'avg max(-L)':>12}")
for a in (0.0, 0.25, 0.5, 1.0, 2.0):
    r = averaged_witness(theta, (-a, a), (-a, a), SQRT2, 1, n=21)
    print(f"{a:5.2f} {r.nsit_violation:10.6f} {r.lgi_violation:+12.6f}")

print()
print("At a = 1 (the standard-quantum-limit scale) the averaged NSIT")
print("violation is still ~0.10 while the averaged LGI no longer violates.")

params = OscillatorParams(mass=1e-14, omega=1.0)
print(f"\nfor a 1e-14 kg / 1 rad/s trap that jitter allowance is "
      f"+-{dimensional_offset_range(params):.3e} m per boundary")

hm = heatmap(theta, (-2, 2), (-2, 2), 21, SQRT2, 1)
mag = np.abs(hm.n_plus)
i, j = np.unravel_index(np.argmax(mag), mag.shape)
print(f"\noffset grid 21x21 over [-2, 2]^2: |N| peaks at "
      f"(eps1, eps2) = ({hm.eps1_axis[i]:+.2f}, {hm.eps2_axis[j]:+.2f}) "
      f"with {mag[i, j]:.4f}, corners are "
      f"{np.max([mag[0, 0], mag[0, -1], mag[-1, 0], mag[-1, -1]]):.4f} or less")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 4))
    im = ax.pcolormesh(hm.eps2_axis, hm.eps1_axis, np.abs(hm.n_plus),
                       shading="auto")
    fig.colorbar(im, ax=ax, label="|N|")
    ax.set_xlabel("eps2")
    ax.set_ylabel("eps1")
    ax.set_title("NSIT violation vs boundary offsets")
    fig.tight_layout()
    fig.savefig("imprecision_heatmap.png", dpi=150)
    print("wrote imprecision_heatmap.png")
