"""What an experiment needs: closed-form feasibility numbers.

For a trapped oscillator of given mass and frequency: the standard
quantum limit of position measurement (= ground-state spread), the
boundary-jitter half-range the witnesses tolerate, the force-noise
amplitude ceiling for coherence over a period, and the photon budget of
scattered-light detection.
"""

import numpy as np

from mrosc import feasibility_report, scatter_resolution

systems = [
    ("levitated bead, 1e-14 kg, 1 rad/s", 1e-14, 1.0),
    ("milligram mass, 1e-6 kg, 10 rad/s", 1e-6, 10.0),
    ("mirror-scale,   10 kg, 100 rad/s ", 10.0, 100.0),
]

for name, mass, omega in systems:
    period = 2 * np.pi / omega
    rep = feasibility_report(mass, omega)
    print(name)
    print(f"  position resolution limit (SQL):  {rep.sql:.3e} m")
    print(f"  tolerated boundary jitter:        +-{rep.offset_half_range:.3e} m")
    print(f"  force-noise ceiling:              {rep.force_noise_ceiling:.3e} N/sqrt(Hz)")
    print()

print("decoherence gate for the mirror-scale system over one period")
print("(rate must sit one decade below 1/t2):")
for sqrt_sff in (1e-15, 3e-16):
    rep = feasibility_report(10.0, 100.0, s_ff=sqrt_sff ** 2, t2=2 * np.pi / 100.0)
    print(f"  sqrt(S_FF) = {sqrt_sff:.0e} N/sqrt(Hz): ok = {rep.decoherence_ok}")
print()

print("scattered-light detection with micron light:")
for photons in (1e4, 1e6, 1e8):
    print(f"  {photons:8.0e} photons -> {scatter_resolution(1e-6, photons):.2e} m resolution")
print()
print("~1e8 collected photons resolve the ground-state spread of a")
print("1e-14 kg particle in a 1 rad/s trap; the witnesses themselves only")
print("need boundary placement at that same sqrt(hbar/(m w)) scale.")
