"""Casimir energy between two identical plasma sheets.

The energy per unit area at separation a depends only on x = Omega a after
rescaling: a^3 E = F(x). F interpolates between 0 (transparent sheets) and
the ideal-conductor value -pi^2/720, and the TM mode dominates at weak
coupling because its static reflection stays perfect.
"""

import math

from plasmasheet import (
    IDEAL_REDUCED_ENERGY,
    SheetParameters,
    casimir_result,
    lifshitz_pressure,
    reduced_energy_parts,
)

print("Reduced energy F(x) = a^3 E and its polarization split")
print(f"{'x = Omega a':>12} {'F(x)':>14} {'TE share':>10} {'TM share':>10}")
for x in (1e-3, 1e-1, 1.0, 10.0, 100.0, 1e4):
    te, tm = reduced_energy_parts(x)
    total = te + tm
    print(f"{x:12.0e} {total:14.6e} {te / total:10.3f} {tm / total:10.3f}")
print(f"ideal conductor: {IDEAL_REDUCED_ENERGY:14.6e}  (= -pi^2/720)\n")

print("Weak coupling: F falls like sqrt(x), so one decade in x is sqrt(10)")
f2 = sum(reduced_energy_parts(1e-2))
f3 = sum(reduced_energy_parts(1e-3))
print(f"  F(1e-2)/F(1e-3) = {f2 / f3:.4f}   sqrt(10) = {math.sqrt(10.0):.4f}\n")

print("Distance dependence at fixed Omega = 10")
sheet = SheetParameters(omega=10.0)
print(f"{'a':>6} {'E/A':>14} {'pressure':>14}")
for a in (0.5, 1.0, 2.0):
    result = casimir_result(a, sheet)
    print(f"{a:6.1f} {result.energy_per_area:14.6e} {result.pressure:14.6e}")
print("Both are negative: the sheets attract, more strongly when closer.\n")

print("Ideal limit of the pressure at Omega a = 1e5, a = 1:")
pressure = lifshitz_pressure(1.0, SheetParameters(omega=1e5))
ideal = -math.pi**2 / 240.0
print(f"  P = {pressure:.6e}   -pi^2/240 = {ideal:.6e}"
      f"   rel dev = {abs(pressure - ideal) / abs(ideal):.2e}")
