"""The headline result: both macrorealism witnesses violated by amounts
that depend only on when (as a fraction of the period) the second
measurement happens.

Two sharp which-side position measurements on an oscillator coherent
state: the first at t=0 with the boundary through the packet center, the
second at t2 with the boundary riding along at (peak + sqrt(2)*spread).
Classically the earlier measurement cannot change later statistics
(N = 0) and the two-time correlators obey L >= 0; quantum mechanically
both fail, identically for every mass, frequency, and momentum.
"""

from mrosc import table1
from mrosc.witness import TABLE_ROWS

print(f"{'t2/T':>6} {'theta':>9} {'|N|':>8} {'max(-L)':>10}  verdict")
for (num, den), report in zip(TABLE_ROWS, table1()):
    verdict = "LGI violated" if report.lgi_violated else "LGI holds"
    print(f"{f'{num}/{den}':>6} {report.theta:9.5f} {report.nsit_violation:8.4f} "
          f"{report.lgi_violation:+10.4f}  NSIT violated, {verdict}")

print()
print("The no-signalling defect survives at every tested time; the")
print("two-time inequality flips sign near quarter-period multiples.")
print("Nothing in this table depends on the oscillator's mass: run")
print("demos/03_mass_independence.py to see the same numbers emerge from")
print("SI inputs spanning 26 orders of magnitude.")
