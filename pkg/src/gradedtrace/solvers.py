"""Exact membership, normal forms, and syzygies for column spans.

Two backends sit behind one interface.  Over the integers, Smith normal form
(with all four unimodular transforms tracked) answers membership and kernel
questions block-by-block along the grading.  Over polynomial and Laurent
rings, a strong Groebner engine for modules over Z[x_1..x_n] does the same
work: leading terms of submodule elements are divisible, coefficient and
monomial both, by a basis leading term, so normal forms certify membership.
The term order is fixed once and for all: position-over-term (lower index
wins) with degree-reverse-lexicographic monomials; it is not configurable.

Laurent rings are handled by adjoining a formal inverse for every variable
(degrees negated, still even) and appending the relation columns
(x_i*y_i - 1)*e_k for every coordinate; membership and syzygies then reduce
to the polynomial engine and map back along y_i -> x_i^-1.  Rescaling columns
by unit monomials alone would compute membership in the wrong module (the
polynomial span is not saturated), so the inverse variables are essential.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .freemod import GradedFreeModule, GradedMatrixHom, Vector, hom_from_columns
from .rings import (
    ANY_DEGREE,
    INHOMOGENEOUS,
    INTEGERS,
    LAURENT,
    POLYNOMIAL,
    RingElement,
    RingSpec,
)


class EngineError(RuntimeError):
    """An internal solver invariant failed; indicates a bug, not bad input."""


# ---------------------------------------------------------------------------
# Integer matrices: Smith normal form and exact determinants
# ---------------------------------------------------------------------------


def _eye(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    inner = len(b)
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def int_determinant(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class SNFResult:
    """M = U . D . V with U, V unimodular and D a diagonal divisibility chain."""

    U: list[list[int]]
    D: list[list[int]]
    V: list[list[int]]
    Uinv: list[list[int]]
    Vinv: list[list[int]]

    @property
    def diagonal(self) -> list[int]:
        return [
            self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))
        ]


def smith_normal_form(rows: list[list[int]]) -> SNFResult:
    """Diagonalize an integer matrix, tracking all four transforms."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    D = [list(r) for r in rows]
    U, Uinv = _eye(m), _eye(m)
    V, Vinv = _eye(n), _eye(n)

    def row_swap(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        for r in U:
            r[i], r[j] = r[j], r[i]
        Uinv[i], Uinv[j] = Uinv[j], Uinv[i]

    def row_add(i: int, j: int, k: int) -> None:
        # row_i += k * row_j
        D[i] = [a + k * b for a, b in zip(D[i], D[j])]
        for r in U:
            r[j] -= k * r[i]
        Uinv[i] = [a + k * b for a, b in zip(Uinv[i], Uinv[j])]

    def row_negate(i: int) -> None:
        D[i] = [-a for a in D[i]]
        for r in U:
            r[i] = -r[i]
        Uinv[i] = [-a for a in Uinv[i]]

    def col_swap(i: int, j: int) -> None:
        for r in D:
            r[i], r[j] = r[j], r[i]
        V[i], V[j] = V[j], V[i]
        for r in Vinv:
            r[i], r[j] = r[j], r[i]

    def col_add(j: int, i: int, k: int) -> None:
        # col_j += k * col_i
        for r in D:
            r[j] += k * r[i]
        V[i] = [a - k * b for a, b in zip(V[i], V[j])]
        for r in Vinv:
            r[j] += k * r[i]

    def diagonalize() -> None:
        t = 0
        while t < min(m, n):
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = D[i][j]
                    if v != 0 and (best is None or abs(v) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                row_swap(best[0], t)
            if best[1] != t:
                col_swap(best[1], t)
            while True:
                progress = False
                for i in range(m):
                    if i != t and D[i][t] != 0:
                        q = D[i][t] // D[t][t]
                        if q:
                            row_add(i, t, -q)
                        if D[i][t] != 0:
                            row_swap(i, t)
                            progress = True
                for j in range(n):
                    if j != t and D[t][j] != 0:
                        q = D[t][j] // D[t][t]
                        if q:
                            col_add(j, t, -q)
                        if D[t][j] != 0:
                            col_swap(j, t)
                            progress = True
                if not progress:
                    clear_col = all(D[i][t] == 0 for i in range(m) if i != t)
                    clear_row = all(D[t][j] == 0 for j in range(n) if j != t)
                    if clear_col and clear_row:
                        break
            if D[t][t] < 0:
                row_negate(t)
            t += 1

    diagonalize()
    while True:
        violation = None
        for t in range(min(m, n) - 1):
            a, b = D[t][t], D[t + 1][t + 1]
            if a != 0 and b % a != 0:
                violation = t
                break
        if violation is None:
            break
        col_add(violation, violation + 1, 1)
        diagonalize()
    return SNFResult(U, D, V, Uinv, Vinv)


# ---------------------------------------------------------------------------
# The strong Groebner engine for modules over Z[x_1..x_n]
# ---------------------------------------------------------------------------
#
# Engine vectors are dicts {(position, exponents): coeff}; certificates are
# dicts {input index: {exponents: coeff}}.  All coefficients are Python ints.


def _term_key(term: tuple[int, tuple[int, ...]]) -> tuple:
    pos, exp = term
    return (-pos, sum(exp), tuple(-e for e in reversed(exp)))


def _vec_iadd_scaled(
    acc: dict, mono: tuple[int, ...], coeff: int, v: dict
) -> None:
    for (pos, exp), c in v.items():
        key = (pos, tuple(a + b for a, b in zip(mono, exp)))
        s = acc.get(key, 0) + coeff * c
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)


def _poly_iadd_scaled(
    acc: dict, mono: tuple[int, ...], coeff: int, p: dict
) -> None:
    for exp, c in p.items():
        key = tuple(a + b for a, b in zip(mono, exp))
        s = acc.get(key, 0) + coeff * c
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)


def _cert_iadd_scaled(acc: dict, mono: tuple[int, ...], coeff: int, cert: dict) -> None:
    for j, poly in cert.items():
        tgt = acc.setdefault(j, {})
        _poly_iadd_scaled(tgt, mono, coeff, poly)
        if not tgt:
            del acc[j]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class _GBElem:
    __slots__ = ("vec", "cert", "lt", "lc")

    def __init__(self, vec: dict, cert: dict):
        self.vec = vec
        self.cert = cert
        self.lt = max(vec, key=_term_key)
        self.lc = vec[self.lt]
        if self.lc < 0:
            self.vec = {k: -c for k, c in vec.items()}
            self.cert = {
                j: {e: -c for e, c in poly.items()} for j, poly in cert.items()
            }
            self.lc = -self.lc


def _reduce(v: dict, basis: list[_GBElem]) -> tuple[dict, list[dict]]:
    """Deterministic strong division: v = sum(q_k g_k) + remainder.

    A term c.X reduces against g when lt(g)'s position matches, its monomial
    divides X, and the Euclidean quotient c // lc(g) is nonzero; remainders
    keep coefficients in [0, lc) of every dividing basis element, which makes
    normal forms canonical for a fixed basis order.
    """
    work = dict(v)
    remainder: dict = {}
    qs: list[dict] = [dict() for _ in basis]
    while work:
        term = max(work, key=_term_key)
        c = work[term]
        pos, exp = term
        hit = None
        for bi, g in enumerate(basis):
            gpos, gexp = g.lt
            if gpos != pos:
                continue
            if any(e < ge for e, ge in zip(exp, gexp)):
                continue
            q = c // g.lc
            if q == 0:
                continue
            hit = (bi, g, q)
            break
        if hit is None:
            remainder[term] = c
            del work[term]
        else:
            bi, g, q = hit
            mono = tuple(e - ge for e, ge in zip(exp, g.lt[1]))
            _poly_iadd_scaled(qs[bi], mono, q, {(0,) * len(mono): 1})
            _vec_iadd_scaled(work, mono, -q, g.vec)
    return remainder, qs


class _ModuleGB:
    """Strong Groebner basis with certificates and recorded syzygies.

    Completion processes every S-pair (lcm of leading terms) and G-pair
    (Bezout gcd of leading coefficients) of same-position basis elements;
    each zero reduction contributes a syzygy of the input columns.  After
    completion the inputs themselves are re-reduced, which contributes the
    remaining syzygy generators, and the basis is interreduced into a
    canonical form (sorted leading terms, positive leading coefficients,
    tails Euclidean-reduced).
    """

    def __init__(self, nvars: int, columns: list[dict]):
        self.nvars = nvars
        self.zero_exp = (0,) * nvars
        self.inputs = columns
        self.basis: list[_GBElem] = []
        self.syzygies: list[dict] = []
        self._queue: list[tuple] = []
        for j, col in enumerate(columns):
            cert = {j: {self.zero_exp: 1}}
            if not col:
                self.syzygies.append(cert)
            else:
                self._reduce_and_admit(dict(col), cert)
        while self._queue:
            _, kind, i, j = heapq.heappop(self._queue)
            if i >= len(self.basis) or j >= len(self.basis):
                raise EngineError("pair references a missing basis element")
            vec, cert = self._build_pair(kind, i, j)
            # A pair that cancels outright still certifies a syzygy, so it
            # goes through the same admission path as everything else.
            self._reduce_and_admit(vec, cert)
        self._interreduce()
        for j, col in enumerate(self.inputs):
            if not col:
                continue
            rem, qs = _reduce(col, self.basis)
            if rem:
                raise EngineError(
                    "input column fails to reduce to zero against its own basis"
                )
            cert = {j: {self.zero_exp: 1}}
            for qi, q in enumerate(qs):
                if q:
                    _cert_iadd_scaled(cert, self.zero_exp, -1, _scaled_cert(q, self.basis[qi].cert))
            if cert:
                self.syzygies.append(cert)

    def _register_pairs(self, t: int) -> None:
        g = self.basis[t]
        for i in range(t):
            h = self.basis[i]
            if h.lt[0] != g.lt[0]:
                continue
            lcm = tuple(max(a, b) for a, b in zip(h.lt[1], g.lt[1]))
            key = (sum(lcm), lcm, i, t)
            heapq.heappush(self._queue, (key, "s", i, t))
            if h.lc % g.lc != 0 and g.lc % h.lc != 0:
                heapq.heappush(self._queue, (key, "g", i, t))

    def _build_pair(self, kind: str, i: int, j: int) -> tuple[dict, dict]:
        gi, gj = self.basis[i], self.basis[j]
        lcm = tuple(max(a, b) for a, b in zip(gi.lt[1], gj.lt[1]))
        mi = tuple(a - b for a, b in zip(lcm, gi.lt[1]))
        mj = tuple(a - b for a, b in zip(lcm, gj.lt[1]))
        vec: dict = {}
        cert: dict = {}
        if kind == "s":
            g = gi.lc * gj.lc // _xgcd(gi.lc, gj.lc)[0]
            ci, cj = g // gi.lc, -(g // gj.lc)
        else:
            _, ci, cj = _xgcd(gi.lc, gj.lc)
        _vec_iadd_scaled(vec, mi, ci, gi.vec)
        _vec_iadd_scaled(vec, mj, cj, gj.vec)
        _cert_iadd_scaled(cert, mi, ci, gi.cert)
        _cert_iadd_scaled(cert, mj, cj, gj.cert)
        return vec, cert

    def _reduce_and_admit(self, vec: dict, cert: dict) -> None:
        rem, qs = _reduce(vec, self.basis)
        for qi, q in enumerate(qs):
            if q:
                _cert_iadd_scaled(cert, self.zero_exp, -1, _scaled_cert(q, self.basis[qi].cert))
        if not rem:
            if cert:
                self.syzygies.append(cert)
            return
        self.basis.append(_GBElem(rem, cert))
        self._register_pairs(len(self.basis) - 1)

    def _interreduce(self) -> None:
        # Sorting by (term, coefficient) puts every potential strong divisor
        # before the elements it divides, ties included.
        ordered = sorted(self.basis, key=lambda g: (_term_key(g.lt), g.lc))
        kept: list[_GBElem] = []
        for g in ordered:
            divisible = False
            for h in kept:
                if h.lt[0] != g.lt[0]:
                    continue
                if any(e < he for e, he in zip(g.lt[1], h.lt[1])):
                    continue
                if g.lc % h.lc == 0:
                    divisible = True
                    break
            if not divisible:
                kept.append(g)
        changed = True
        while changed:
            changed = False
            for idx, g in enumerate(kept):
                others = kept[:idx] + kept[idx + 1 :]
                rem, qs = _reduce(g.vec, others)
                if rem != g.vec:
                    cert = {
                        j: dict(poly) for j, poly in g.cert.items()
                    }
                    for qi, q in enumerate(qs):
                        if q:
                            _cert_iadd_scaled(
                                cert, self.zero_exp, -1, _scaled_cert(q, others[qi].cert)
                            )
                    if not rem:
                        raise EngineError("interreduction killed a basis element")
                    kept[idx] = _GBElem(rem, cert)
                    changed = True
        self.basis = kept


def _scaled_cert(poly: dict, cert: dict) -> dict:
    """poly * cert, as a certificate dict."""
    out: dict = {}
    for mono, coeff in poly.items():
        _cert_iadd_scaled(out, mono, coeff, cert)
    return out


# ---------------------------------------------------------------------------
# Ring element <-> engine conversions
# ---------------------------------------------------------------------------


def _to_engine_column(col: Vector) -> dict:
    out: dict = {}
    for pos, entry in enumerate(col):
        for exp, c in entry.items():
            out[(pos, exp)] = c
    return out


def _from_engine_vector(ring: RingSpec, rank: int, vec: dict) -> Vector:
    per_pos: list[dict] = [dict() for _ in range(rank)]
    for (pos, exp), c in vec.items():
        per_pos[pos][exp] = c
    return tuple(RingElement(ring, d) for d in per_pos)


def _laurent_partner(ring: RingSpec) -> RingSpec:
    names = ring.var_names + tuple(f"{n}__inv" for n in ring.var_names)
    degrees = ring.var_degrees + tuple(-d for d in ring.var_degrees)
    return RingSpec(POLYNOMIAL, names, degrees, ring.grading)


def _laurent_to_poly(poly_ring: RingSpec, a: RingElement) -> RingElement:
    n = len(a.ring.var_names)
    terms: dict = {}
    for exp, c in a.items():
        key = tuple(max(e, 0) for e in exp) + tuple(max(-e, 0) for e in exp)
        terms[key] = terms.get(key, 0) + c
    return RingElement(poly_ring, terms)


def _poly_to_laurent(laurent: RingSpec, a: RingElement) -> RingElement:
    n = len(laurent.var_names)
    terms: dict = {}
    for exp, c in a.items():
        key = tuple(exp[i] - exp[n + i] for i in range(n))
        terms[key] = terms.get(key, 0) + c
    return RingElement(laurent, terms)


# ---------------------------------------------------------------------------
# Column spans: one membership interface over all three ring kinds
# ---------------------------------------------------------------------------


class _IntBackend:
    """Blockwise Smith normal form over the integers.

    Columns are grouped by grading class (exact shift for Z grading, parity
    for Z/2); each class touches a disjoint set of rows, so membership,
    certificates, and kernels decompose blockwise and stay homogeneous.
    """

    def __init__(self, ambient: GradedFreeModule, columns: list[Vector]):
        self.ambient = ambient
        self.columns = columns
        ring = ambient.ring
        self.zero_column_indices: list[int] = []
        class_cols: dict[int, list[int]] = {}
        for j, col in enumerate(columns):
            k = ambient.vector_degree(col)
            if k is ANY_DEGREE:
                self.zero_column_indices.append(j)
                continue
            if k is INHOMOGENEOUS:
                raise EngineError("integer-backend columns must be homogeneous")
            class_cols.setdefault(ring.reduce_degree(-k), []).append(j)
        class_rows: dict[int, list[int]] = {}
        for i, n in enumerate(ambient.shifts):
            class_rows.setdefault(ring.reduce_degree(n), []).append(i)
        self.blocks: dict[int, tuple[list[int], list[int], SNFResult | None]] = {}
        for c in sorted(set(class_cols) | set(class_rows)):
            rows = class_rows.get(c, [])
            cols = class_cols.get(c, [])
            snf = None
            if cols:
                mat = [
                    [columns[j][i].coefficient((0,) * ring.nvars) for j in cols]
                    for i in rows
                ]
                for j in cols:
                    for i in range(ambient.rank):
                        if i not in rows and columns[j][i]:
                            raise EngineError("column escapes its grading block")
                snf = smith_normal_form(mat)
            self.blocks[c] = (rows, cols, snf)

    def normal_form(self, v: Vector) -> tuple[Vector, list[RingElement]]:
        ring = self.ambient.ring
        zero_exp = (0,) * ring.nvars
        rem = [entry.coefficient(zero_exp) for entry in v]
        cert = [0] * len(self.columns)
        for rows, cols, snf in self.blocks.values():
            sub = [rem[i] for i in rows]
            if snf is None or not cols:
                continue
            m_c, s_c = len(rows), len(cols)
            w = [sum(snf.Uinv[i][k] * sub[k] for k in range(m_c)) for i in range(m_c)]
            residues = list(w)
            x = [0] * s_c
            for i in range(min(m_c, s_c)):
                d = snf.D[i][i]
                if d != 0:
                    r = w[i] % d
                    residues[i] = r
                    x[i] = (w[i] - r) // d
            coeffs = [
                sum(snf.Vinv[i][k] * x[k] for k in range(s_c)) for i in range(s_c)
            ]
            rem_block = [
                sum(snf.U[i][k] * residues[k] for k in range(m_c)) for i in range(m_c)
            ]
            for local, i in enumerate(rows):
                rem[i] = rem_block[local]
            for local, j in enumerate(cols):
                cert[j] = coeffs[local]
        remainder = tuple(ring.const(c) for c in rem)
        certificate = [ring.const(c) for c in cert]
        return remainder, certificate

    def syzygy_vectors(self) -> list[tuple[RingElement, ...]]:
        ring = self.ambient.ring
        s = len(self.columns)
        out: list[tuple[RingElement, ...]] = []
        for j in self.zero_column_indices:
            out.append(
                tuple(ring.const(1 if k == j else 0) for k in range(s))
            )
        for rows, cols, snf in self.blocks.values():
            if snf is None or not cols:
                continue
            m_c, s_c = len(rows), len(cols)
            diag = snf.diagonal
            for k in range(s_c):
                if k < len(diag) and diag[k] != 0:
                    continue
                column = [snf.Vinv[i][k] for i in range(s_c)]
                full = [0] * s
                for local, j in enumerate(cols):
                    full[j] = column[local]
                if any(full):
                    out.append(tuple(ring.const(c) for c in full))
        return out

    def basis_vectors(self) -> list[Vector]:
        ring = self.ambient.ring
        out: list[Vector] = []
        for rows, cols, snf in self.blocks.values():
            if snf is None or not cols:
                continue
            m_c, s_c = len(rows), len(cols)
            ud = _mat_mul(snf.U, snf.D)
            for k in range(s_c):
                col = [ud[i][k] for i in range(m_c)]
                if not any(col):
                    continue
                full = [0] * self.ambient.rank
                for local, i in enumerate(rows):
                    full[i] = col[local]
                out.append(tuple(ring.const(c) for c in full))
        return out


class _PolyBackend:
    def __init__(self, ambient: GradedFreeModule, columns: list[Vector]):
        self.ambient = ambient
        self.columns = columns
        self.ring = ambient.ring
        self.gb = _ModuleGB(
            self.ring.nvars, [_to_engine_column(c) for c in columns]
        )

    def normal_form(self, v: Vector) -> tuple[Vector, list[RingElement]]:
        rem, qs = _reduce(_to_engine_column(v), self.gb.basis)
        cert_total: dict = {}
        for qi, q in enumerate(qs):
            if q:
                _cert_iadd_scaled(
                    cert_total, self.gb.zero_exp, 1, _scaled_cert(q, self.gb.basis[qi].cert)
                )
        remainder = _from_engine_vector(self.ring, self.ambient.rank, rem)
        certificate = [
            RingElement(self.ring, cert_total.get(j, {}))
            for j in range(len(self.columns))
        ]
        return remainder, certificate

    def syzygy_vectors(self) -> list[tuple[RingElement, ...]]:
        s = len(self.columns)
        out = []
        for cert in self.gb.syzygies:
            vec = tuple(RingElement(self.ring, cert.get(j, {})) for j in range(s))
            if any(vec):
                out.append(vec)
        return out

    def basis_vectors(self) -> list[Vector]:
        return [
            _from_engine_vector(self.ring, self.ambient.rank, g.vec)
            for g in self.gb.basis
        ]


class _LaurentBackend:
    def __init__(self, ambient: GradedFreeModule, columns: list[Vector]):
        self.ambient = ambient
        self.columns = columns
        self.ring = ambient.ring
        self.poly_ring = _laurent_partner(self.ring)
        pcols = [
            tuple(_laurent_to_poly(self.poly_ring, e) for e in col) for col in columns
        ]
        self.relation_count = 0
        engine_cols = [_to_engine_column(c) for c in pcols]
        n = len(self.ring.var_names)
        zero = (0,) * (2 * n)
        for k in range(ambient.rank):
            for i in range(n):
                unit_exp = tuple(
                    1 if t == i or t == n + i else 0 for t in range(2 * n)
                )
                engine_cols.append({(k, unit_exp): 1, (k, zero): -1})
                self.relation_count += 1
        self.gb = _ModuleGB(2 * n, engine_cols)

    def normal_form(self, v: Vector) -> tuple[Vector, list[RingElement]]:
        pv = tuple(_laurent_to_poly(self.poly_ring, e) for e in v)
        rem, qs = _reduce(_to_engine_column(pv), self.gb.basis)
        cert_total: dict = {}
        for qi, q in enumerate(qs):
            if q:
                _cert_iadd_scaled(
                    cert_total, self.gb.zero_exp, 1, _scaled_cert(q, self.gb.basis[qi].cert)
                )
        poly_rem = _from_engine_vector(self.poly_ring, self.ambient.rank, rem)
        remainder = tuple(_poly_to_laurent(self.ring, e) for e in poly_rem)
        certificate = []
        for j in range(len(self.columns)):
            poly = RingElement(self.poly_ring, cert_total.get(j, {}))
            certificate.append(_poly_to_laurent(self.ring, poly))
        return remainder, certificate

    def syzygy_vectors(self) -> list[tuple[RingElement, ...]]:
        s = len(self.columns)
        out = []
        for cert in self.gb.syzygies:
            vec = tuple(
                _poly_to_laurent(
                    self.ring, RingElement(self.poly_ring, cert.get(j, {}))
                )
                for j in range(s)
            )
            if any(vec):
                out.append(vec)
        return out

    def basis_vectors(self) -> list[Vector]:
        out = []
        for g in self.gb.basis:
            pv = _from_engine_vector(self.poly_ring, self.ambient.rank, g.vec)
            lv = tuple(_poly_to_laurent(self.ring, e) for e in pv)
            if any(lv):
                out.append(lv)
        return out


class ColumnSpan:
    """The submodule generated by a list of columns of a graded free module.

    normal_form(v) returns (remainder, certificate) with
    v = sum(certificate[j] * column_j) + remainder, remainder zero iff v lies
    in the span.  Results are deterministic for a fixed column order.
    """

    def __init__(self, ambient: GradedFreeModule, columns: list[Vector]):
        self.ambient = ambient
        self.columns = [ambient.coerce_vector(c) for c in columns]
        kind = ambient.ring.kind
        if kind == INTEGERS:
            self._backend = _IntBackend(ambient, self.columns)
        elif kind == POLYNOMIAL:
            self._backend = _PolyBackend(ambient, self.columns)
        elif kind == LAURENT:
            self._backend = _LaurentBackend(ambient, self.columns)
        else:  # pragma: no cover
            raise EngineError(f"no backend for ring kind {kind}")
        self._syz: list[tuple[RingElement, ...]] | None = None

    def normal_form(self, v) -> tuple[Vector, list[RingElement]]:
        v = self.ambient.coerce_vector(v)
        remainder, certificate = self._backend.normal_form(v)
        return remainder, certificate

    def contains(self, v) -> bool:
        remainder, _ = self.normal_form(v)
        return all(e.is_zero() for e in remainder)

    def syzygy_vectors(self) -> list[tuple[RingElement, ...]]:
        if self._syz is None:
            self._syz = self._backend.syzygy_vectors()
        return self._syz

    def basis_vectors(self) -> list[Vector]:
        return self._backend.basis_vectors()


def column_span(ambient: GradedFreeModule, columns) -> ColumnSpan:
    return ColumnSpan(ambient, list(columns))


def span_of_hom(f: GradedMatrixHom) -> ColumnSpan:
    return ColumnSpan(f.target, f.columns())


def groebner_basis(f: GradedMatrixHom) -> list[Vector]:
    """The deterministic interreduced strong basis of the column span."""
    return span_of_hom(f).basis_vectors()


def normal_form(v, span: ColumnSpan) -> tuple[Vector, list[RingElement]]:
    return span.normal_form(v)


def prune_columns(
    ambient: GradedFreeModule, columns: list
) -> tuple[list[Vector], list[int]]:
    """Drop columns lying in the span of the others (greedy, deterministic)."""
    cols = [ambient.coerce_vector(c) for c in columns]
    kept = list(range(len(cols)))
    i = 0
    while i < len(kept):
        others = [cols[k] for k in kept if k != kept[i]]
        if others and ColumnSpan(ambient, others).contains(cols[kept[i]]):
            kept.pop(i)
        else:
            i += 1
    return [cols[k] for k in kept], kept


def kernel_columns(ambient: GradedFreeModule, columns: list) -> list[tuple[RingElement, ...]]:
    """Generators of {c : sum c_j * column_j = 0}, as tuples over the ring."""
    return ColumnSpan(ambient, list(columns)).syzygy_vectors()


def syzygies(f: GradedMatrixHom, prune: bool = True) -> GradedMatrixHom:
    """The kernel of f, packaged as a degree-1 map onto its generators.

    Each kernel generator is homogeneous as an element of f.source; giving
    the generator shift 1 - (its module degree) makes the resulting map have
    degree exactly 1, which is the resolution convention used throughout.
    """
    raw = kernel_columns(f.target, f.columns())
    vectors: list[Vector] = []
    for vec in raw:
        v = f.source.coerce_vector(vec)
        if all(e.is_zero() for e in v):
            continue
        vectors.append(v)
    if prune and vectors and f.ring.kind != INTEGERS:
        vectors, _ = prune_columns(f.source, vectors)
    shifts = []
    for v in vectors:
        k = f.source.vector_degree(v)
        if k is INHOMOGENEOUS:
            raise EngineError("syzygy generator is not homogeneous")
        if k is ANY_DEGREE:
            raise EngineError("zero syzygy column survived filtering")
        shifts.append(1 - k)
    source = GradedFreeModule(f.ring, tuple(shifts))
    return hom_from_columns(source, f.source, 1, vectors)
