"""Energy of a charge and of a polarizable atom near a plasma sheet.

The leading interaction of a static charge is the classical image potential;
the finite-mass correction and the full Casimir-Polder shift are controlled
by reduction functions of x = Omega a that run from 0 to 1.
"""

import math

from plasmasheet import (
    AtomProperties,
    IDEAL_SHEET_CP_COEFFICIENT,
    BULK_CONDUCTOR_CP_COEFFICIENT,
    SheetParameters,
    casimir_polder_energy,
    charge_sheet_energy,
    delta1,
    delta1_integral_form,
    image_potential,
    reduction_functions,
)

print("Image potential of a unit charge at distance a = 1 from the sheet")
print("  on axis, from the sheet side:", image_potential(0.0, 0.0, 0.0, 1.0, 1.0))
print("  mirror-charge Coulomb value :", 1.0 / (4.0 * math.pi * 2.0))
print()

print("Reduction functions interpolate from 0 (transparent) to 1 (conductor)")
print(f"{'x':>8} {'fTE':>8} {'fTM':>8} {'gTE':>8} {'gTM':>8} {'g3':>8}")
for x in (0.01, 1.0, 100.0):
    r = reduction_functions(x)
    print(f"{x:8.2f} {r.fTE:8.4f} {r.fTM:8.4f} {r.gTE:8.4f} {r.gTM:8.4f}"
          f" {r.g3:8.4f}")
print()

atom = AtomProperties(e=1.0, m=1.0, p2par=0.3, p23=0.2)
print("Charge-sheet energy at a = 1 (electrostatic + kinetic parts)")
print(f"{'Omega':>8} {'electrostatic':>14} {'kinetic':>14}")
for omega in (0.5, 5.0, 50.0):
    es, kin = charge_sheet_energy(1.0, SheetParameters(omega), atom)
    print(f"{omega:8.1f} {es:14.6e} {kin:14.6e}")
print("The electrostatic part is the pinned image value -e^2/(8 pi a).\n")

print("First-order shift delta1: closed form vs 3-D Euclidean integral")
for omega in (0.1, 1.0, 10.0):
    sheet = SheetParameters(omega)
    closed = delta1(1.0, sheet, atom)
    integral = delta1_integral_form(1.0, sheet, atom)
    rel = abs(closed - integral) / abs(closed)
    print(f"  Omega = {omega:5.1f}: {closed:.10e}  (routes differ {rel:.1e})")
print()

print("Casimir-Polder shift of an isotropic atom, a = 1")
iso = AtomProperties.isotropic(1.0)
print(f"{'Omega a':>10} {'a^4 shift':>14} {'braces coeff':>13}")
for x in (1.0, 100.0, 1e6):
    value = casimir_polder_energy(1.0, SheetParameters(x), iso)
    coeff = -value * 32.0 * math.pi**2
    print(f"{x:10.0e} {value:14.6e} {coeff:13.6f}")
print(f"sheet limit {IDEAL_SHEET_CP_COEFFICIENT} vs bulk conductor "
      f"{BULK_CONDUCTOR_CP_COEFFICIENT}: the thin sheet binds "
      f"{1 - IDEAL_SHEET_CP_COEFFICIENT / BULK_CONDUCTOR_CP_COEFFICIENT:.0%}"
      " weaker.")
