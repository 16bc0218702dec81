"""Reflection coefficients of a single plasma sheet and its surface plasmon.

A sheet with coupling Omega reflects TE and TM waves differently: the TM
coefficient has a pole below the light cone, which is the surface plasmon.
Everything here is in units with hbar = c = 1.
"""

import numpy as np

from plasmasheet import (
    MinkowskiMomentum,
    SheetParameters,
    reflection_te,
    reflection_tm,
    te_plasmon_exists,
    tm_plasmon_closed,
    tm_plasmon_root,
)

sheet = SheetParameters(omega=1.0)

print("Reflection at fixed k0 = 2, sweeping the parallel momentum")
print(f"{'kpar':>8} {'|rTE|':>10} {'|rTM|':>10}")
for kpar in (0.2, 1.0, 1.8, 1.99, 2.2, 3.0):
    k = MinkowskiMomentum.from_parallel(2.0, kpar)
    rte = reflection_te(k, sheet)
    rtm = reflection_tm(k, sheet)
    print(f"{kpar:8.2f} {abs(rte):10.4f} {abs(rtm):10.4f}")
print("Below the light cone (kpar > k0) the TM modulus can exceed 1;")
print("the growth signals the nearby plasmon pole.\n")

print("Static limit: the TM mode reflects perfectly at k0 = 0")
k_static = MinkowskiMomentum.from_parallel(0.0, 1.5)
print("  r_TM(k0=0) =", reflection_tm(k_static, sheet))
print()

print("TM surface plasmon: closed form against the root finder")
print(f"{'kpar':>10} {'k0 closed':>14} {'k0 root':>14} {'rel diff':>10}")
for kpar in np.geomspace(1e-2, 1e2, 5):
    closed = tm_plasmon_closed(float(kpar), sheet)
    root = tm_plasmon_root(float(kpar), sheet)
    rel = abs(closed - root) / closed
    print(f"{kpar:10.3g} {closed:14.8f} {root:14.8f} {rel:10.2e}")
print("The branch always lies below the light cone: k0 < kpar.\n")

print("TE plasmon scan (the TE mode equation has no solution):")
for kpar in (0.1, 1.0, 10.0):
    exists = te_plasmon_exists(kpar, sheet)
    print(f"  kpar = {kpar:5.1f}: solution found = {exists}")
