"""Exact arithmetic in the three supported coefficient rings.

Every computation in this package is exact: integers are arbitrary precision,
polynomials and Laurent polynomials keep integer coefficients, and nothing is
ever rounded. Generators carry a chosen degree so that elements are graded.
"""

from gradedtrace import (
    GRADING_Z2,
    ANY_DEGREE,
    INHOMOGENEOUS,
    RingMap,
    integers,
    laurent_ring,
    polynomial_ring,
)

Z = integers()
ZX = polynomial_ring(["x"], [2])  # x sits in degree 2
ZL = laurent_ring(["t"], [0])  # t is invertible and degree 0

print("== arithmetic ==")
x = ZX.gen("x")
p = (x + 1) * (x - 1)
print(f"(x + 1)(x - 1) = {p}")
print(f"degree of x^2: {(x * x).degree()}")

t = ZL.gen("t")
q = t + t.unit_inverse()
print(f"t + 1/t = {q}")
print(f"t * t^-1 = {t * t.unit_inverse()}")

print()
print("== grading ==")
# a sum of different degrees has no degree of its own
mixed = x + ZX.one()
print(f"degree of x + 1: {mixed.degree() is INHOMOGENEOUS and 'inhomogeneous'}")
print(f"degree of 0: {ZX.zero().degree() is ANY_DEGREE and 'any'}")
print(f"degree 2 part of x^2 + 3x: {(x * x + 3 * x).homogeneous_component(2)}")

# gradings may also live in Z/2; degrees then only matter mod 2
L2 = laurent_ring(["t"], [2], GRADING_Z2)
u = L2.gen("t")
print(f"over a Z/2 graded ring, deg(t) = {u.degree()} and deg(t^2) = {(u * u).degree()}")

print()
print("== ring maps ==")
# counting evaluation: send t to 1, Laurent ring to the integers
augment = RingMap(ZL, Z, (Z.one(),))
v = t ** 5 - 2 * t.unit_inverse() ** 3 + 4
print(f"t^5 - 2t^-3 + 4 evaluated at t = 1: {augment(v)}")

# a degree preserving map must send each generator to an element of the
# right degree in the target grading; x has degree 2, t + 1/t has degree 0
# over Z but degree 0 = 2 mod 2 over the Z/2 graded Laurent ring
restrict = RingMap(ZX, L2, (u + u.unit_inverse(),))
print(f"x^2 - 2 maps to: {restrict(x * x - 2)}")
