"""The cochain complex of a Lie-Yamaguti algebra with module coefficients.

Degree 1 cochains are linear maps g -> V. A degree n+1 cochain (n >= 1) is a
pair (f, g) with f: (wedge^2 g)^(tensor n) -> V and g: (wedge^2 g)^(tensor n)
(tensor) g -> V. Wedge arguments are expanded over the lexicographic basis
e_i ^ e_j (i < j), so cochains are stored as flat tuples of value vectors:
f-block first, then g-block, wedge-tuple index most significant, module
coordinates innermost.

The two differentials (delta_I into the f-slot, delta_II into the g-slot)
follow a fixed sign convention; the D-type sum of delta_I stops at slot n
while that of delta_II runs to slot n+1. The square-zero property over both
paths is enforced by the test battery rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix, Vector, is_zero_vector, rat, vadd, vscale, vsub, vzero
from .structures import (
    InvalidRepresentation,
    LYAlgebra,
    Representation,
    check_representation,
)

__all__ = [
    "wedge_basis",
    "ComplexContext",
    "Cochain",
    "cochain_dim",
    "coboundary",
    "coboundary_matrix",
    "cohomology_dims",
    "CohomologySummary",
]

Sparse = List[Tuple[int, Fraction]]  # (index, coefficient) pairs, coefficient != 0


def wedge_basis(m: int) -> Tuple[Tuple[int, int], ...]:
    """Lexicographic basis (i, j), i < j, of the second exterior power."""
    return tuple((i, j) for i in range(m) for j in range(i + 1, m))


@dataclass(frozen=True)
class CohomologySummary:
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_h: int


class ComplexContext:
    """An algebra together with a validated representation and the fixed
    wedge-basis enumeration used for all cochain indexing."""

    __slots__ = ("algebra", "rep", "wedge", "_windex")

    def __init__(self, algebra: LYAlgebra, rep: Representation, validate: bool = True):
        if rep.algebra is not algebra and rep.algebra != algebra:
            raise ValueError("representation belongs to a different algebra")
        if validate:
            report = check_representation(rep)
            if not report.valid:
                first = report.violations[0]
                raise InvalidRepresentation(
                    f"representation fails {first.identity} at {first.args}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "wedge", wedge_basis(algebra.dim))
        object.__setattr__(self, "_windex",
                           {pair: idx for idx, pair in enumerate(wedge_basis(algebra.dim))})

    def __setattr__(self, name, value):
        raise AttributeError("ComplexContext is immutable")

    @property
    def m(self) -> int:
        return self.algebra.dim

    @property
    def v(self) -> int:
        return self.rep.dim_v

    @property
    def w(self) -> int:
        return len(self.wedge)

    def wedge_index(self, i: int, j: int) -> int:
        return self._windex[(i, j)]


def cochain_dim(ctx: ComplexContext, p: int) -> int:
    """Dimension of the degree-p cochain space. Degree 0 lives only in the
    operator complex, not here."""
    if p < 1:
        raise ValueError("cochain degree must be at least 1")
    if p == 1:
        return ctx.m * ctx.v
    n = p - 1
    return (ctx.w ** n) * ctx.v + (ctx.w ** n) * ctx.m * ctx.v


@dataclass(frozen=True)
class Cochain:
    """Flat storage for one cochain.

    degree 1: f_part has one value vector per algebra basis element, g_part
    is None. degree n+1 >= 2: f_part has w^n value vectors (wedge tuples in
    lexicographic mixed-radix order), g_part has w^n * m.
    """

    degree: int
    f_part: Tuple[Vector, ...]
    g_part: Optional[Tuple[Vector, ...]]

    @classmethod
    def zero(cls, ctx: ComplexContext, p: int) -> "Cochain":
        z = vzero(ctx.v)
        if p == 1:
            return cls(1, (z,) * ctx.m, None)
        if p < 1:
            raise ValueError("cochain degree must be at least 1")
        n = p - 1
        return cls(p, (z,) * (ctx.w ** n), (z,) * (ctx.w ** n * ctx.m))

    @classmethod
    def from_flat(cls, ctx: ComplexContext, p: int, coeffs: Sequence) -> "Cochain":
        total = cochain_dim(ctx, p)
        vals = [rat(c) for c in coeffs]
        if len(vals) != total:
            raise ValueError(f"expected {total} coefficients for degree {p}, got {len(vals)}")
        v = ctx.v
        chunks = [tuple(vals[i:i + v]) for i in range(0, total, v)]
        if p == 1:
            return cls(1, tuple(chunks), None)
        nf = ctx.w ** (p - 1)
        return cls(p, tuple(chunks[:nf]), tuple(chunks[nf:]))

    def flatten(self) -> Vector:
        parts: List[Fraction] = []
        for val in self.f_part:
            parts.extend(val)
        if self.g_part is not None:
            for val in self.g_part:
                parts.extend(val)
        return tuple(parts)

    def as_matrix(self) -> Matrix:
        """Degree-1 cochains as value-space x algebra-space matrices
        (column b is the image of the b-th basis element)."""
        if self.degree != 1:
            raise ValueError("as_matrix applies to degree-1 cochains only")
        if self.f_part:
            return Matrix.from_columns(list(self.f_part))
        return Matrix.from_columns([], rows=0)

    def is_zero(self) -> bool:
        if any(not is_zero_vector(v) for v in self.f_part):
            return False
        return self.g_part is None or all(is_zero_vector(v) for v in self.g_part)


def _flat_windex(ctx: ComplexContext, idx: Sequence[int]) -> int:
    out = 0
    for t in idx:
        out = out * ctx.w + t
    return out


def _lookup_f(ctx: ComplexContext, c: Cochain, idx: Sequence[int]) -> Vector:
    return c.f_part[_flat_windex(ctx, idx)]


def _lookup_g(ctx: ComplexContext, c: Cochain, idx: Sequence[int], z: int) -> Vector:
    return c.g_part[_flat_windex(ctx, idx) * ctx.m + z]


def _eval_f(ctx: ComplexContext, c: Cochain, slots: Sequence[Sparse]) -> Vector:
    """Multilinear evaluation of the f-component on sparse wedge arguments."""
    total = [Fraction(0)] * ctx.v

    def rec(k: int, coeff: Fraction, flat: int) -> None:
        if k == len(slots):
            val = c.f_part[flat]
            for i, x in enumerate(val):
                if x:
                    total[i] += coeff * x
            return
        for widx, co in slots[k]:
            rec(k + 1, coeff * co, flat * ctx.w + widx)

    rec(0, Fraction(1), 0)
    return tuple(total)


def _eval_g(ctx: ComplexContext, c: Cochain, slots: Sequence[Sparse], zslot: Sparse) -> Vector:
    total = [Fraction(0)] * ctx.v

    def rec(k: int, coeff: Fraction, flat: int) -> None:
        if k == len(slots):
            base = flat * ctx.m
            for z, cz in zslot:
                val = c.g_part[base + z]
                cc = coeff * cz
                for i, x in enumerate(val):
                    if x:
                        total[i] += cc * x
            return
        for widx, co in slots[k]:
            rec(k + 1, coeff * co, flat * ctx.w + widx)

    rec(0, Fraction(1), 0)
    return tuple(total)


def _sparse_vec(vec: Vector) -> Sparse:
    return [(i, c) for i, c in enumerate(vec) if c]


def _sparse_unit(idx: int) -> Sparse:
    return [(idx, Fraction(1))]


def _wedge_decompose(ctx: ComplexContext, u: Vector, v: Vector) -> Dict[int, Fraction]:
    """Coefficients of u ^ v over the wedge basis: coeff(i,j) = u_i v_j - u_j v_i."""
    out: Dict[int, Fraction] = {}
    for idx, (i, j) in enumerate(ctx.wedge):
        c = u[i] * v[j] - u[j] * v[i]
        if c:
            out[idx] = c
    return out


def _compose_wedges(ctx: ComplexContext, wk: int, wl: int) -> Sparse:
    """The composed wedge argument <x_k,y_k,x_l> ^ y_l + x_l ^ <x_k,y_k,y_l>,
    expanded over the wedge basis."""
    a = ctx.algebra
    xk, yk = ctx.wedge[wk]
    xl, yl = ctx.wedge[wl]
    acc: Dict[int, Fraction] = {}
    for idx, c in _wedge_decompose(ctx, a.triple_basis(xk, yk, xl), a.basis(yl)).items():
        acc[idx] = acc.get(idx, Fraction(0)) + c
    for idx, c in _wedge_decompose(ctx, a.basis(xl), a.triple_basis(xk, yk, yl)).items():
        acc[idx] = acc.get(idx, Fraction(0)) + c
    return [(idx, c) for idx, c in sorted(acc.items()) if c]


def _coboundary_degree1(ctx: ComplexContext, c: Cochain) -> Cochain:
    a, r = ctx.algebra, ctx.rep

    def f_of(vec: Vector) -> Vector:
        out = vzero(ctx.v)
        for i, co in enumerate(vec):
            if co:
                out = vadd(out, vscale(co, c.f_part[i]))
        return out

    f_out: List[Vector] = []
    g_out: List[Vector] = []
    for (i, j) in ctx.wedge:
        val = r.rho(i).apply(c.f_part[j])
        val = vsub(val, r.rho(j).apply(c.f_part[i]))
        val = vsub(val, f_of(a.bracket_basis(i, j)))
        f_out.append(val)
    for (i, j) in ctx.wedge:
        for z in range(ctx.m):
            val = r.d_basis(i, j).apply(c.f_part[z])
            val = vadd(val, r.mu(j, z).apply(c.f_part[i]))
            val = vsub(val, r.mu(i, z).apply(c.f_part[j]))
            val = vsub(val, f_of(a.triple_basis(i, j, z)))
            g_out.append(val)
    return Cochain(2, tuple(f_out), tuple(g_out))


def _coboundary_general(ctx: ComplexContext, c: Cochain) -> Cochain:
    a, r = ctx.algebra, ctx.rep
    n = c.degree - 1  # number of wedge slots of the input
    assert n >= 1
    w = ctx.w
    sign_n = Fraction(-1) ** n

    def unit(widx: int) -> Sparse:
        return [(widx, Fraction(1))]

    f_out: List[Vector] = []
    g_out: List[Vector] = []

    for ws in itertools.product(range(w), repeat=n + 1):
        pairs = [ctx.wedge[t] for t in ws]
        xe, ye = pairs[-1]
        head = ws[:n]

        # (-1)^n ( rho(x_{n+1}) g(..., y_{n+1}) - rho(y_{n+1}) g(..., x_{n+1})
        #          - g(..., [x_{n+1}, y_{n+1}]) )
        val = r.rho(xe).apply(_lookup_g(ctx, c, head, ye))
        val = vsub(val, r.rho(ye).apply(_lookup_g(ctx, c, head, xe)))
        br = a.bracket_basis(xe, ye)
        for zc, co in enumerate(br):
            if co:
                val = vsub(val, vscale(co, _lookup_g(ctx, c, head, zc)))
        val = vscale(sign_n, val)

        # sum_{k=1}^{n} (-1)^{k+1} D(x_k,y_k) f(... hat k ...)
        for k0 in range(n):
            rest = ws[:k0] + ws[k0 + 1:]
            term = r.d_basis(*pairs[k0]).apply(_lookup_f(ctx, c, rest))
            val = vadd(val, vscale(Fraction(-1) ** k0, term))

        # sum_{k<l} (-1)^k f(... hat k ..., composed at l, ...)
        for k0 in range(n + 1):
            for l0 in range(k0 + 1, n + 1):
                comp = _compose_wedges(ctx, ws[k0], ws[l0])
                slots: List[Sparse] = []
                for pos in range(n + 1):
                    if pos == k0:
                        continue
                    slots.append(comp if pos == l0 else unit(ws[pos]))
                term = _eval_f(ctx, c, slots)
                val = vadd(val, vscale(-(Fraction(-1) ** k0), term))

        f_out.append(val)

    for ws in itertools.product(range(w), repeat=n + 1):
        pairs = [ctx.wedge[t] for t in ws]
        xe, ye = pairs[-1]
        head = ws[:n]
        for z in range(ctx.m):
            # (-1)^n ( mu(y_{n+1}, z) g(..., x_{n+1}) - mu(x_{n+1}, z) g(..., y_{n+1}) )
            val = r.mu(ye, z).apply(_lookup_g(ctx, c, head, xe))
            val = vsub(val, r.mu(xe, z).apply(_lookup_g(ctx, c, head, ye)))
            val = vscale(sign_n, val)

            # sum_{k=1}^{n+1} (-1)^{k+1} D(x_k,y_k) g(... hat k ..., z)
            for k0 in range(n + 1):
                rest = ws[:k0] + ws[k0 + 1:]
                term = r.d_basis(*pairs[k0]).apply(_lookup_g(ctx, c, rest, z))
                val = vadd(val, vscale(Fraction(-1) ** k0, term))

            # sum_{k<l} (-1)^k g(... hat k ..., composed at l, ..., z)
            for k0 in range(n + 1):
                for l0 in range(k0 + 1, n + 1):
                    comp = _compose_wedges(ctx, ws[k0], ws[l0])
                    slots = []
                    for pos in range(n + 1):
                        if pos == k0:
                            continue
                        slots.append(comp if pos == l0 else unit(ws[pos]))
                    term = _eval_g(ctx, c, slots, _sparse_unit(z))
                    val = vadd(val, vscale(-(Fraction(-1) ** k0), term))

            # sum_{k=1}^{n+1} (-1)^k g(... hat k ..., <x_k, y_k, z>)
            for k0 in range(n + 1):
                rest = ws[:k0] + ws[k0 + 1:]
                tz = _sparse_vec(a.triple_basis(pairs[k0][0], pairs[k0][1], z))
                if tz:
                    term = _eval_g(ctx, c, [unit(t) for t in rest], tz)
                    val = vadd(val, vscale(-(Fraction(-1) ** k0), term))

            g_out.append(val)

    return Cochain(c.degree + 1, tuple(f_out), tuple(g_out))


def coboundary(ctx: ComplexContext, c: Cochain) -> Cochain:
    """Apply the differential, raising the degree by one."""
    if c.degree == 1:
        if len(c.f_part) != ctx.m or c.g_part is not None:
            raise ValueError("malformed degree-1 cochain")
        return _coboundary_degree1(ctx, c)
    if c.degree < 1:
        raise ValueError("cochain degree must be at least 1")
    nf = ctx.w ** (c.degree - 1)
    if len(c.f_part) != nf or c.g_part is None or len(c.g_part) != nf * ctx.m:
        raise ValueError(f"malformed degree-{c.degree} cochain")
    return _coboundary_general(ctx, c)


def coboundary_matrix(ctx: ComplexContext, p: int) -> Matrix:
    """Matrix of the degree-p differential over the flat cochain bases:
    cochain_dim(p) columns, cochain_dim(p+1) rows."""
    dim_in = cochain_dim(ctx, p)
    dim_out = cochain_dim(ctx, p + 1)
    cols: List[Vector] = []
    unit = [Fraction(0)] * dim_in
    for idx in range(dim_in):
        unit[idx] = Fraction(1)
        cols.append(coboundary(ctx, Cochain.from_flat(ctx, p, unit)).flatten())
        unit[idx] = Fraction(0)
    return Matrix.from_columns(cols, rows=dim_out)


def cohomology_dims(ctx: ComplexContext, p: int,
                    include_coboundaries: bool = True) -> CohomologySummary:
    """Cocycle/coboundary/quotient dimensions at degree p.

    dim_coboundaries counts the rank of the degree-(p-1) differential only
    for p >= 2 (and only when requested): the complex here starts at degree
    1, so first cohomology is plain cocycles.
    """
    from .linalg import rank_kernel

    dim_c = cochain_dim(ctx, p)
    rank_p, kernel = rank_kernel(coboundary_matrix(ctx, p))
    dim_z = dim_c - rank_p
    assert dim_z == len(kernel)
    if p >= 2 and include_coboundaries:
        rank_prev, _ = rank_kernel(coboundary_matrix(ctx, p - 1))
        dim_b = rank_prev
    else:
        dim_b = 0
    return CohomologySummary(degree=p, dim_cochains=dim_c, dim_cocycles=dim_z,
                             dim_coboundaries=dim_b, dim_h=dim_z - dim_b)
