"""The angular-momentum eigenbasis of the Landau Hamiltonian.

Shows the basis functions phi_{k,q}, their orthonormality under polar
quadrature, membership of the lowest level in the kernel of the
annihilation operator, nodal circles, and magnetic translations.
"""

import math

import numpy as np

from landaudelta.basis import (
    BasisIndex,
    MagneticField,
    annihilation_residual,
    basis_eval,
    basis_inner_product,
    magnetic_translate,
)
from landaudelta.laguerre import positive_zeros

field = MagneticField(2.0)
print(f"field b = {field.b}, Landau levels:", [field.landau_level(q) for q in range(4)])

# ---------------------------------------------------------------------
# Values along a ray: the k < q members carry conjugate powers, the
# k = q member is purely radial times the Laguerre factor.
# ---------------------------------------------------------------------
print("\n|phi_{k,1}| along the positive x axis:")
rs = np.array([0.5, 1.0, 1.5, 2.0])
for k in (0, 1, 3):
    vals = [abs(basis_eval(field, BasisIndex(k, 1), (r, 0.0))) for r in rs]
    print(f"   k={k}: " + "  ".join(f"{v:.6f}" for v in vals))

# ---------------------------------------------------------------------
# Orthonormality: Gram matrix of the first six members of level 2.
# ---------------------------------------------------------------------
gram = np.array(
    [[basis_inner_product(field, BasisIndex(i, 2), BasisIndex(j, 2)) for j in range(6)] for i in range(6)]
)
print(f"\nGram deviation from identity (level 2, k <= 5): {np.max(np.abs(gram - np.eye(6))):.2e}")

# ---------------------------------------------------------------------
# Annihilation: the lowest level is killed by the annihilation operator;
# the residual below is pure finite-difference error.
# ---------------------------------------------------------------------
print("\nannihilation residuals |a phi_{k,0}| at x = (0.7, -0.4):")
for k in (0, 2, 5, 9):
    res = annihilation_residual(field, BasisIndex(k, 0), np.array([0.7, -0.4]))
    print(f"   k={k}: {res:.2e}")

# ---------------------------------------------------------------------
# Nodal circles: phi_{k,q} vanishes on |x| = r exactly when b r^2 / 2
# is a zero of the attached Laguerre polynomial.
# ---------------------------------------------------------------------
k, q = 5, 2
print(f"\nnodal circles of phi_{{{k},{q}}}:")
for t in positive_zeros(q, float(k - q)):
    r = math.sqrt(2 * t / field.b)
    worst = max(
        abs(basis_eval(field, BasisIndex(k, q), (r * math.cos(a), r * math.sin(a))))
        for a in np.linspace(0, 2 * math.pi, 32)
    )
    print(f"   r = {r:.8f}: max |phi| on the circle = {worst:.2e}")

# ---------------------------------------------------------------------
# Magnetic translation: a unitary phase twist; moduli just translate.
# ---------------------------------------------------------------------
y = np.array([0.5, -1.2])
x = np.array([1.0, 0.3])
f = lambda pts: basis_eval(field, BasisIndex(2, 1), pts)
tv = magnetic_translate(field, y, f, x)
print(f"\nmagnetic translate at x={tuple(x)}, y={tuple(y)}:")
print(f"   |T_y phi|(x) = {abs(tv):.10f}   |phi|(x-y) = {abs(f(x - y)):.10f}")
