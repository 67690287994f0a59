"""Exact linear algebra with certificates.

The solver layer never answers yes or no without evidence. Smith normal form
returns the change of basis matrices, membership tests return the coefficients
that rebuild the vector, and syzygy computations return maps that visibly
compose to zero.
"""

from gradedtrace import (
    ColumnSpan,
    GradedFreeModule,
    int_determinant,
    integers,
    laurent_ring,
    polynomial_ring,
    smith_normal_form,
)

print("== Smith normal form ==")
mat = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
snf = smith_normal_form(mat)
print(f"input:    {mat}")
print(f"diagonal: {snf.diagonal}")
print(f"det(U) = {int_determinant(snf.U)}, det(V) = {int_determinant(snf.V)}")


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


print(f"U D V == input: {mat_mul(mat_mul(snf.U, snf.D), snf.V) == mat}")

print()
print("== membership with certificates ==")
Z = integers()
m = GradedFreeModule(Z, (0, 0))
cols = [m.coerce_vector([2, 0]), m.coerce_vector([0, 3]), m.coerce_vector([1, 1])]
span = ColumnSpan(m, cols)
v = m.coerce_vector([3, 4])
remainder, cert = span.normal_form(v)
print(f"(3, 4) in span of (2,0), (0,3), (1,1): {span.contains(v)}")
print(f"certificate coefficients: {[str(c) for c in cert]}")
rebuilt = list(remainder)
for c, col in zip(cert, cols):
    for i in range(m.rank):
        rebuilt[i] = rebuilt[i] + c * col[i]
print(f"certificate rebuilds the vector: {tuple(rebuilt) == v}")

print()
print("== rings where membership is subtle ==")
# 2 is a combination of 2t and t^2 only once t is invertible
ZT = polynomial_ring(["t"], [0])
ZL = laurent_ring(["t"], [0])
tp = ZT.gen("t")
tl = ZL.gen("t")
mp = GradedFreeModule(ZT, (0,))
ml = GradedFreeModule(ZL, (0,))
over_poly = ColumnSpan(mp, [(2 * tp,), (tp * tp,)]).contains((ZT.const(2),))
over_laurent = ColumnSpan(ml, [(2 * tl,), (tl * tl,)]).contains((ZL.const(2),))
print(f"2 in (2t, t^2) over Z[t]:      {over_poly}")
print(f"2 in (2t, t^2) over Z[t,1/t]:  {over_laurent}")

print()
print("== syzygies ==")
# the relations among x and y inside Z[x, y] are generated by (y, -x)
ZXY = polynomial_ring(["x", "y"], [2, 4])
x, y = ZXY.gen("x"), ZXY.gen("y")
target = GradedFreeModule(ZXY, (0,))
span_xy = ColumnSpan(target, [(x,), (y,)])
for s in span_xy.syzygy_vectors():
    print(f"syzygy: {tuple(str(e) for e in s)}")
