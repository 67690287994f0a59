"""Finitely presented graded modules and their free resolutions.

A module is given by generators (with degrees) and relation columns. The
resolver peels off syzygies until the kernel is free, producing a finite
chain of free modules whose exactness is verified step by step. Module maps
are given on generators and checked to descend through the relations.
"""

from gradedtrace import (
    integers,
    lift_endomorphism,
    module_hom,
    polynomial_ring,
    presented_module,
    resolve,
    verify_lift,
    verify_resolution,
)

Z = integers()
ZXY = polynomial_ring(["x", "y"], [2, 4])

print("== a torsion module over the integers ==")
mod4 = presented_module(Z, [0], [[4]])
res = resolve(mod4)
verify_resolution(res)
print(f"Z/4 resolves with free ranks {[m.rank for m in res.modules]}")

print()
print("== the coordinate point over Z[x, y] ==")
x, y = ZXY.gen("x"), ZXY.gen("y")
point = presented_module(ZXY, [0], [[x], [y]])
res = resolve(point)
verify_resolution(res)
print(f"Z[x,y]/(x,y) resolves with free ranks {[m.rank for m in res.modules]}")
print("the length 2 step records the Koszul syzygy between x and y")

print()
print("== endomorphisms descend through relations ==")
ZX = polynomial_ring(["x"], [2])
xx = ZX.gen("x")
dual = presented_module(ZX, [0], [[xx * xx]])  # Z[x]/(x^2)
mult_x = module_hom(dual, dual, 2, [[xx]])
print(f"multiplication by x on Z[x]/(x^2) is a degree {mult_x.degree} endomorphism")

# the identity on generators does not define a map Z[x]/(x^2) -> Z[x]
try:
    module_hom(dual, presented_module(ZX, [0], []), 0, [[1]])
except ValueError as exc:
    print(f"rejected as expected: {exc}")

print()
print("== chain lifts ==")
res = resolve(dual)
lifts = lift_endomorphism(res, mult_x)
verify_lift(res, mult_x, lifts)
print(f"lift of mult-x through the resolution: {len(lifts)} chain maps, all squares commute")
for j, lift in enumerate(lifts):
    entries = [[str(e) for e in row] for row in lift.entries]
    print(f"  stage {j}: {entries}")
