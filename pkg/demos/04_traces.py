"""Signed traces of graded endomorphisms.

The trace of an endomorphism of a graded free module weights each diagonal
entry by the parity of its position: entries on odd shifted generators count
negatively. For a finitely presented module the trace is computed by lifting
the endomorphism through a free resolution and alternating the stage traces;
the result does not depend on the resolution or on the lift.
"""

from gradedtrace import (
    GradedFreeModule,
    GradedMatrixHom,
    RingMap,
    ShortExactSequence,
    additivity_defect,
    base_change_trace,
    free_trace,
    hs_trace,
    identity_module_hom,
    integers,
    laurent_ring,
    module_hom,
    polynomial_ring,
    presented_module,
)

Z = integers()
ZX = polynomial_ring(["x"], [2])
ZL = laurent_ring(["t"], [0])

print("== the sign rule ==")
m = GradedFreeModule(Z, (0, 1, 2, -1))
f = GradedMatrixHom(m, m, 0, [[3, 0, 0, 0], [0, 5, 0, 0], [0, 0, 7, 0], [0, 0, 0, 11]])
print(f"shifts {m.shifts}, diagonal (3, 5, 7, 11)")
print(f"signed trace: {free_trace(f).value}  (3 - 5 + 7 - 11)")

print()
print("== trace of a module endomorphism ==")
x = ZX.gen("x")
dual = presented_module(ZX, [0], [[x * x]])
mult_x = module_hom(dual, dual, 2, [[x]])
t = hs_trace(mult_x)
print(f"trace of mult-x on Z[x]/(x^2): {t.value} (degree {t.degree})")
print("the two resolution stages contribute x and x with opposite signs")

ident = identity_module_hom(presented_module(Z, [0], [[2]]))
print(f"trace of the identity on Z/2: {hs_trace(ident).value}")
print("torsion modules are invisible to the integer rank but not by accident:")
print("the two stages of the resolution cancel exactly")

print()
print("== additivity over a short exact sequence ==")
# 0 -> Z/2 -> Z/4 -> Z/2 -> 0 does not split, additivity holds regardless
left = presented_module(Z, [0], [[2]])
middle = presented_module(Z, [0], [[4]])
right = presented_module(Z, [0], [[2]])
ses = ShortExactSequence(
    left,
    middle,
    right,
    module_hom(left, middle, 0, [[2]]),
    module_hom(middle, right, 0, [[1]]),
)
report = additivity_defect(ses, identity_module_hom(left), identity_module_hom(middle))
print(
    f"left {report.left.value}, middle {report.middle.value}, "
    f"right {report.right.value}, defect {report.defect}"
)

print()
print("== base change ==")
# push the coefficients along t -> 1 before or after taking the trace
tl = ZL.gen("t")
m = GradedFreeModule(ZL, (0, 0))
f = GradedMatrixHom(m, m, 0, [[tl, 0], [1 - tl, tl.unit_inverse()]])
augment = RingMap(ZL, Z, (Z.one(),))
pushed, after = base_change_trace(augment, f)
print(f"trace then map: {pushed.value}")
print(f"map then trace: {after.value}")
