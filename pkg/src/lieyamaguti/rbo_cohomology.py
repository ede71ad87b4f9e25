"""Cohomology of a relative Rota-Baxter operator.

The degree-(>=1) part is the Yamaguti complex of the sub-adjacent algebra on
the module, with coefficients in the induced representation on g. Degree 0 is
the second exterior power of g, mapped into 1-cochains by

    (delta X)(v) = T( D(X) v ) - <X, Tv>.

Cohomology in every positive degree therefore quotients by coboundaries,
degree 1 included.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .linalg import Matrix, Vector, rank_kernel, vadd, vsub, vzero
from .complexes import (
    Cochain,
    CohomologySummary,
    ComplexContext,
    cochain_dim,
    coboundary_matrix,
    wedge_basis,
)
from .rbo import RelRBO, Wedge2, _require_verified, _unit

__all__ = [
    "RboComplex",
    "rbo_delta0",
    "rbo_coboundary_matrix",
    "rbo_cohomology_dims",
    "rbo_delta1_expanded",
]


@dataclass(frozen=True)
class RboComplex:
    """A verified operator together with the cochain context of its
    sub-adjacent algebra and induced representation."""

    operator: RelRBO
    ctx: ComplexContext

    @classmethod
    def build(cls, o: RelRBO) -> "RboComplex":
        _require_verified(o)
        from .rbo import induced_rep_on_g
        rep = induced_rep_on_g(o)
        # induced_rep_on_g asserts validity, so skip the context's re-check.
        ctx = ComplexContext(rep.algebra, rep, validate=False)
        return cls(o, ctx)


def rbo_delta0(o: RelRBO, x: Wedge2) -> Cochain:
    """The degree-0 coboundary of a wedge element, as a 1-cochain V -> g."""
    _require_verified(o)
    a, r, t = o.algebra, o.rep, o.t_matrix
    if x.dim != a.dim:
        raise ValueError("wedge element and algebra dimensions differ")
    dx = x.d_matrix(r)
    images: List[Vector] = []
    for b in range(r.dim_v):
        u = _unit(r.dim_v, b)
        images.append(vsub(t.apply(dx.apply(u)), x.bracket_with(a, t.apply(u))))
    return Cochain(1, tuple(images), None)


def rbo_coboundary_matrix(rc: RboComplex, p: int) -> Matrix:
    """Matrix of the operator-complex coboundary leaving degree p. Degree 0
    maps wedge elements of g (lexicographic wedge coordinates) to 1-cochains;
    higher degrees delegate to the Yamaguti complex of the context."""
    if p < 0:
        raise ValueError(f"degree must be >= 0, got {p}")
    if p == 0:
        o = rc.operator
        m = o.algebra.dim
        cols = [rbo_delta0(o, Wedge2.basis(m, i, j)).flatten()
                for (i, j) in wedge_basis(m)]
        return Matrix.from_columns(cols, rows=cochain_dim(rc.ctx, 1))
    return coboundary_matrix(rc.ctx, p)


def rbo_cohomology_dims(rc: RboComplex, p: int) -> CohomologySummary:
    """Cocycle / coboundary / quotient dimensions in degree p >= 1. Unlike
    the bare Yamaguti complex, degree 1 already quotients by the image of the
    wedge elements under delta."""
    if p < 1:
        raise ValueError(f"cohomology degree must be >= 1, got {p}")
    mat = rbo_coboundary_matrix(rc, p)
    rank, kernel = rank_kernel(mat)
    dim_z = len(kernel)
    prev_rank, _ = rank_kernel(rbo_coboundary_matrix(rc, p - 1))
    assert prev_rank <= dim_z, "coboundaries must sit inside cocycles"
    return CohomologySummary(
        degree=p,
        dim_cochains=cochain_dim(rc.ctx, p),
        dim_cocycles=dim_z,
        dim_coboundaries=prev_rank,
        dim_h=dim_z - prev_rank,
    )


def rbo_delta1_expanded(o: RelRBO, c1: Cochain) -> Cochain:
    """Degree-1 coboundary written out directly in terms of T, the brackets
    on g, and the representation maps:

        (dI f)(u, v)     = [Tu, f(v)] - [Tv, f(u)]
                           + T( rho(f(v)) u - rho(f(u)) v ) - f([u, v]_T)
        (dII f)(u, v, w) = <Tu, Tv, f(w)> + <f(u), Tv, Tw> - <f(v), Tu, Tw>
                           - f(<u, v, w>_T)
                           - T( D(f(u), Tv) w - D(f(v), Tu) w
                                + mu(Tv, f(w)) u - mu(Tu, f(w)) v
                                - mu(f(u), Tw) v + mu(f(v), Tw) u )

    This is an independent route to the same map as the generic Yamaguti
    coboundary on the operator complex; the two are compared in tests."""
    _require_verified(o)
    a, r, t = o.algebra, o.rep, o.t_matrix
    m, v = a.dim, r.dim_v
    if c1.degree != 1 or c1.g_part is not None or len(c1.f_part) != v \
            or any(len(img) != m for img in c1.f_part):
        raise ValueError("expected a degree-1 cochain of the operator complex")

    units = [_unit(v, b) for b in range(v)]
    timg = [o.column(b) for b in range(v)]
    fimg = list(c1.f_part)

    def f_of(uvec: Vector) -> Vector:
        total = vzero(m)
        for b, coeff in enumerate(uvec):
            if coeff:
                total = vadd(total, tuple(coeff * x for x in fimg[b]))
        return total

    def sub_bracket(b1: int, b2: int) -> Vector:
        return vsub(r.rho_of(timg[b1]).apply(units[b2]),
                    r.rho_of(timg[b2]).apply(units[b1]))

    def sub_triple(b1: int, b2: int, b3: int) -> Vector:
        out = r.d_of(timg[b1], timg[b2]).apply(units[b3])
        out = vadd(out, r.mu_of(timg[b2], timg[b3]).apply(units[b1]))
        return vsub(out, r.mu_of(timg[b1], timg[b3]).apply(units[b2]))

    pairs = wedge_basis(v)
    f_out: List[Vector] = []
    g_out: List[Vector] = []
    for (b1, b2) in pairs:
        val = vsub(a.bracket(timg[b1], fimg[b2]), a.bracket(timg[b2], fimg[b1]))
        inner = vsub(r.rho_of(fimg[b2]).apply(units[b1]),
                     r.rho_of(fimg[b1]).apply(units[b2]))
        val = vadd(val, t.apply(inner))
        f_out.append(vsub(val, f_of(sub_bracket(b1, b2))))
    for (b1, b2) in pairs:
        for b3 in range(v):
            val = a.triple(timg[b1], timg[b2], fimg[b3])
            val = vadd(val, a.triple(fimg[b1], timg[b2], timg[b3]))
            val = vsub(val, a.triple(fimg[b2], timg[b1], timg[b3]))
            val = vsub(val, f_of(sub_triple(b1, b2, b3)))
            inner = vsub(r.d_of(fimg[b1], timg[b2]).apply(units[b3]),
                         r.d_of(fimg[b2], timg[b1]).apply(units[b3]))
            inner = vadd(inner, r.mu_of(timg[b2], fimg[b3]).apply(units[b1]))
            inner = vsub(inner, r.mu_of(timg[b1], fimg[b3]).apply(units[b2]))
            inner = vsub(inner, r.mu_of(fimg[b1], timg[b3]).apply(units[b2]))
            inner = vadd(inner, r.mu_of(fimg[b2], timg[b3]).apply(units[b1]))
            g_out.append(vsub(val, t.apply(inner)))
    return Cochain(2, tuple(f_out), tuple(g_out))
