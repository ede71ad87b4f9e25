"""Relative Rota-Baxter operators and the structures they induce.

An operator T: V -> g is relative Rota-Baxter for a representation
(V; rho, mu) when

    [Tu, Tv]     = T( rho(Tu)v - rho(Tv)u )
    <Tu, Tv, Tw> = T( D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v )

Verified operators induce a Lie-Yamaguti structure on V, a representation of
it back on g, pre-Lie-Yamaguti products, and a Nijenhuis operator on the
semidirect sum; all of that lives here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .linalg import (
    Matrix,
    Vector,
    inverse,
    is_zero_vector,
    rat,
    vadd,
    vneg,
    vsub,
    vzero,
)
from .structures import (
    AxiomReport,
    LYAlgebra,
    Representation,
    Violation,
    check_lya,
)
from .complexes import wedge_basis

__all__ = [
    "UnverifiedOperator",
    "NotIntertwining",
    "NotAutomorphism",
    "RelRBO",
    "Wedge2",
    "check_rbo",
    "induced_lya_on_v",
    "induced_rep_on_g",
    "pre_ly_products",
    "lift_to_nijenhuis",
    "rbo_homomorphism_check",
    "conjugate_rbo",
]


class UnverifiedOperator(Exception):
    """A construction that is only meaningful for verified operators was
    asked to run on an unverified one."""


class NotIntertwining(Exception):
    """The map pair fails the rho/mu intertwining conditions."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"fails {violation.identity} at {violation.args}")


class NotAutomorphism(Exception):
    """The algebra-side map is not an algebra automorphism."""


@dataclass(frozen=True)
class RelRBO:
    """An operator matrix (columns = images of module basis vectors in g)
    bundled with its algebra and representation.

    `verified` records that `check_rbo` passed; constructions that rely on
    the defining identities gate on it. Use `build` to verify-and-wrap.
    """

    algebra: LYAlgebra
    rep: Representation
    t_matrix: Matrix
    verified: bool = False

    def __post_init__(self):
        t = self.t_matrix
        if (t.rows, t.cols) != (self.algebra.dim, self.rep.dim_v):
            raise ValueError(
                f"operator must be {self.algebra.dim}x{self.rep.dim_v}, got {t.rows}x{t.cols}")

    @classmethod
    def build(cls, algebra: LYAlgebra, rep: Representation, t_matrix: Matrix) -> "RelRBO":
        report = check_rbo(algebra, rep, t_matrix)
        if not report.valid:
            first = report.violations[0]
            raise ValueError(
                f"not a relative Rota-Baxter operator: fails {first.identity} at {first.args}")
        return cls(algebra, rep, t_matrix, verified=True)

    def column(self, b: int) -> Vector:
        return self.t_matrix.column(b)

    def apply(self, u: Vector) -> Vector:
        return self.t_matrix.apply(u)


def _unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if c == i else 0) for c in range(n))


def check_rbo(a: LYAlgebra, r: Representation, t: Matrix) -> AxiomReport:
    """Check the two defining identities on module basis tuples. Both sides
    are skew in (u, v), so pairs are checked for u < v only; witnesses carry
    module basis indices and the residual LHS - RHS in g."""
    if (t.rows, t.cols) != (a.dim, r.dim_v):
        raise ValueError(f"operator must be {a.dim}x{r.dim_v}, got {t.rows}x{t.cols}")
    v = r.dim_v
    units = [_unit(v, b) for b in range(v)]
    timg = [t.column(b) for b in range(v)]
    viols: List[Violation] = []

    for b1 in range(v):
        for b2 in range(b1 + 1, v):
            lhs = a.bracket(timg[b1], timg[b2])
            inner = vsub(r.rho_of(timg[b1]).apply(units[b2]),
                         r.rho_of(timg[b2]).apply(units[b1]))
            res = vsub(lhs, t.apply(inner))
            if not is_zero_vector(res):
                viols.append(Violation("rota-baxter-binary", (b1, b2), res))

    for b1 in range(v):
        for b2 in range(b1 + 1, v):
            for b3 in range(v):
                lhs = a.triple(timg[b1], timg[b2], timg[b3])
                inner = r.d_of(timg[b1], timg[b2]).apply(units[b3])
                inner = vadd(inner, r.mu_of(timg[b2], timg[b3]).apply(units[b1]))
                inner = vsub(inner, r.mu_of(timg[b1], timg[b3]).apply(units[b2]))
                res = vsub(lhs, t.apply(inner))
                if not is_zero_vector(res):
                    viols.append(Violation("rota-baxter-ternary", (b1, b2, b3), res))

    return AxiomReport.from_violations(viols)


def _require_verified(o: RelRBO) -> None:
    if not o.verified:
        raise UnverifiedOperator("operator has not passed check_rbo")


def _sub_adjacent_constants(o: RelRBO) -> Tuple[Dict, Dict]:
    """Structure constants of the bracket/triple induced on the module:

        [u,v]_T   = rho(Tu)v - rho(Tv)u
        <u,v,w>_T = D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v
    """
    r = o.rep
    v = r.dim_v
    units = [_unit(v, b) for b in range(v)]
    timg = [o.column(b) for b in range(v)]
    binary: Dict[Tuple[int, int], Vector] = {}
    ternary: Dict[Tuple[int, int, int], Vector] = {}
    for b1 in range(v):
        for b2 in range(b1 + 1, v):
            val = vsub(r.rho_of(timg[b1]).apply(units[b2]),
                       r.rho_of(timg[b2]).apply(units[b1]))
            if not is_zero_vector(val):
                binary[(b1, b2)] = val
            for b3 in range(v):
                tval = r.d_of(timg[b1], timg[b2]).apply(units[b3])
                tval = vadd(tval, r.mu_of(timg[b2], timg[b3]).apply(units[b1]))
                tval = vsub(tval, r.mu_of(timg[b1], timg[b3]).apply(units[b2]))
                if not is_zero_vector(tval):
                    ternary[(b1, b2, b3)] = tval
    return binary, ternary


def induced_lya_on_v(o: RelRBO) -> LYAlgebra:
    """The sub-adjacent Lie-Yamaguti algebra on the module of a verified
    operator. The axioms are re-verified, and T is confirmed to be an algebra
    homomorphism into the original brackets."""
    _require_verified(o)
    binary, ternary = _sub_adjacent_constants(o)
    v = o.rep.dim_v
    sub = LYAlgebra(v, binary=binary, ternary=ternary)
    assert check_lya(sub).valid, "induced brackets must satisfy the axioms"
    a, t = o.algebra, o.t_matrix
    timg = [o.column(b) for b in range(v)]
    for b1 in range(v):
        for b2 in range(b1 + 1, v):
            assert t.apply(sub.bracket_basis(b1, b2)) == a.bracket(timg[b1], timg[b2])
            for b3 in range(v):
                assert t.apply(sub.triple_basis(b1, b2, b3)) == a.triple(timg[b1], timg[b2], timg[b3])
    return sub


def induced_rep_on_g(o: RelRBO) -> Representation:
    """The induced representation of the sub-adjacent algebra back on g:

        rho'(u) x    = [Tu, x] + T( rho(x) u )
        mu'(u, v) x  = <x, Tu, Tv> - T( D(x, Tu) v - mu(x, Tv) u )

    Its derived D action has the closed form
        D'(u, v) x = <Tu, Tv, x> - T( mu(Tv, x) u - mu(Tu, x) v ),
    which is asserted against the generic construction."""
    _require_verified(o)
    sub = induced_lya_on_v(o)
    a, r, t = o.algebra, o.rep, o.t_matrix
    m, v = a.dim, r.dim_v
    units = [_unit(v, b) for b in range(v)]
    timg = [o.column(b) for b in range(v)]
    bas = [a.basis(i) for i in range(m)]

    rho2 = []
    for b in range(v):
        cols = [vadd(a.bracket(timg[b], bas[c]), t.apply(r.rho(c).apply(units[b])))
                for c in range(m)]
        rho2.append(Matrix.from_columns(cols, rows=m))

    mu2 = []
    for b1 in range(v):
        row = []
        for b2 in range(v):
            cols = []
            for c in range(m):
                val = a.triple(bas[c], timg[b1], timg[b2])
                adj = vsub(r.d_of(bas[c], timg[b1]).apply(units[b2]),
                           r.mu_of(bas[c], timg[b2]).apply(units[b1]))
                cols.append(vsub(val, t.apply(adj)))
            row.append(Matrix.from_columns(cols, rows=m))
        mu2.append(row)

    rep2 = Representation(sub, m, rho2, mu2)

    from .structures import check_representation
    assert check_representation(rep2).valid, "induced representation must be valid"
    for b1 in range(v):
        for b2 in range(v):
            cols = []
            for c in range(m):
                val = a.triple(timg[b1], timg[b2], bas[c])
                adj = vsub(r.mu_of(timg[b2], bas[c]).apply(units[b1]),
                           r.mu_of(timg[b1], bas[c]).apply(units[b2]))
                cols.append(vsub(val, t.apply(adj)))
            closed = Matrix.from_columns(cols, rows=m)
            assert rep2.d_of(units[b1], units[b2]) == closed, \
                "derived D of the induced representation must match its closed form"
    return rep2


def pre_ly_products(o: RelRBO) -> Tuple[Tuple[Tuple[Vector, ...], ...],
                                        Tuple[Tuple[Tuple[Vector, ...], ...], ...]]:
    """Pre-Lie-Yamaguti products on the module:

        u * v     = rho(Tu) v          (binary table [a][b])
        {u, v, w} = mu(Tv, Tw) u       (ternary table [a][b][c])

    The commutator of * is confirmed to be the sub-adjacent bracket."""
    _require_verified(o)
    r = o.rep
    v = r.dim_v
    units = [_unit(v, b) for b in range(v)]
    timg = [o.column(b) for b in range(v)]
    binary = tuple(tuple(r.rho_of(timg[a]).apply(units[b]) for b in range(v))
                   for a in range(v))
    ternary = tuple(tuple(tuple(r.mu_of(timg[b], timg[c]).apply(units[a])
                                for c in range(v)) for b in range(v))
                    for a in range(v))
    sub_binary, _ = _sub_adjacent_constants(o)
    for a_i in range(v):
        for b_i in range(v):
            comm = vsub(binary[a_i][b_i], binary[b_i][a_i])
            if a_i < b_i:
                expect = sub_binary.get((a_i, b_i), vzero(v))
            elif a_i > b_i:
                expect = vneg(sub_binary.get((b_i, a_i), vzero(v)))
            else:
                expect = vzero(v)
            assert comm == expect, "u*v - v*u must equal the sub-adjacent bracket"
    return binary, ternary


def lift_to_nijenhuis(o: RelRBO) -> Matrix:
    """The block operator (x, u) -> (Tu, 0) on the semidirect sum g (+) V.

    For a verified operator this is a Nijenhuis operator there, and its
    deformed brackets restrict to the sub-adjacent structure on V and the
    induced representation data on g (verified by the test battery)."""
    _require_verified(o)
    m, v = o.algebra.dim, o.rep.dim_v
    n = m + v
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * m + list(o.t_matrix.row(i)))
    for _ in range(v):
        rows.append([Fraction(0)] * n)
    return Matrix(rows, cols=n)


def rbo_homomorphism_check(o1: RelRBO, o2: RelRBO,
                           phi_g: Matrix, phi_v: Matrix) -> AxiomReport:
    """Check (phi_g, phi_v) as a homomorphism of operators from o1 to o2
    (both over the same algebra and representation):

        phi_g is an algebra homomorphism,
        o2.T o phi_v = phi_g o o1.T,
        phi_v rho(x) = rho(phi_g x) phi_v,
        phi_v mu(x,y) = mu(phi_g x, phi_g y) phi_v,

    plus the derived D-intertwining, which follows from the mu/rho ones and
    is reported as its own identity."""
    if o1.algebra != o2.algebra or o1.rep != o2.rep:
        raise ValueError("homomorphisms are defined between operators on the same data")
    a, r = o1.algebra, o1.rep
    m, v = a.dim, r.dim_v
    if (phi_g.rows, phi_g.cols) != (m, m):
        raise ValueError(f"phi_g must be {m}x{m}")
    if (phi_v.rows, phi_v.cols) != (v, v):
        raise ValueError(f"phi_v must be {v}x{v}")
    viols: List[Violation] = []
    bas = [a.basis(i) for i in range(m)]
    pg = [phi_g.apply(b) for b in bas]

    for i in range(m):
        for j in range(i + 1, m):
            res = vsub(phi_g.apply(a.bracket_basis(i, j)), a.bracket(pg[i], pg[j]))
            if not is_zero_vector(res):
                viols.append(Violation("phi-binary-hom", (i, j), res))
            for k in range(m):
                res = vsub(phi_g.apply(a.triple_basis(i, j, k)),
                           a.triple(pg[i], pg[j], pg[k]))
                if not is_zero_vector(res):
                    viols.append(Violation("phi-ternary-hom", (i, j, k), res))

    tcond = o2.t_matrix @ phi_v - phi_g @ o1.t_matrix
    for b in range(v):
        col = tcond.column(b)
        if not is_zero_vector(col):
            viols.append(Violation("t-intertwine", (b,), col))

    for i in range(m):
        res = phi_v @ r.rho(i) - r.rho_of(pg[i]) @ phi_v
        for b in range(v):
            col = res.column(b)
            if not is_zero_vector(col):
                viols.append(Violation("rho-intertwine", (i, b), col))

    for i in range(m):
        for j in range(m):
            res = phi_v @ r.mu(i, j) - r.mu_of(pg[i], pg[j]) @ phi_v
            for b in range(v):
                col = res.column(b)
                if not is_zero_vector(col):
                    viols.append(Violation("mu-intertwine", (i, j, b), col))

    for i in range(m):
        for j in range(m):
            res = phi_v @ r.d_basis(i, j) - r.d_of(pg[i], pg[j]) @ phi_v
            for b in range(v):
                col = res.column(b)
                if not is_zero_vector(col):
                    viols.append(Violation("d-intertwine", (i, j, b), col))

    return AxiomReport.from_violations(viols)


def conjugate_rbo(o: RelRBO, phi_g: Matrix, phi_v: Matrix) -> RelRBO:
    """phi_g^{-1} o T o phi_v, which is again a relative Rota-Baxter operator
    when phi_g is an algebra automorphism and (phi_g, phi_v) intertwines rho
    and mu. Raises NotAutomorphism / NotIntertwining when the hypotheses
    fail; the result is rebuilt through `check_rbo`."""
    _require_verified(o)
    a, r = o.algebra, o.rep
    m, v = a.dim, r.dim_v
    if (phi_g.rows, phi_g.cols) != (m, m):
        raise ValueError(f"phi_g must be {m}x{m}")
    if (phi_v.rows, phi_v.cols) != (v, v):
        raise ValueError(f"phi_v must be {v}x{v}")
    try:
        phi_g_inv = inverse(phi_g)
    except ValueError as exc:
        raise NotAutomorphism(f"phi_g is not invertible: {exc}") from exc
    try:
        inverse(phi_v)
    except ValueError as exc:
        raise ValueError(f"phi_v must be invertible: {exc}") from exc

    bas = [a.basis(i) for i in range(m)]
    pg = [phi_g.apply(b) for b in bas]
    for i in range(m):
        for j in range(i + 1, m):
            if phi_g.apply(a.bracket_basis(i, j)) != a.bracket(pg[i], pg[j]):
                raise NotAutomorphism(f"phi_g fails the binary bracket at ({i}, {j})")
            for k in range(m):
                if phi_g.apply(a.triple_basis(i, j, k)) != a.triple(pg[i], pg[j], pg[k]):
                    raise NotAutomorphism(f"phi_g fails the ternary bracket at ({i}, {j}, {k})")

    for i in range(m):
        res = phi_v @ r.rho(i) - r.rho_of(pg[i]) @ phi_v
        if not res.is_zero():
            b = next(b for b in range(v) if not is_zero_vector(res.column(b)))
            raise NotIntertwining(Violation("rho-intertwine", (i, b), res.column(b)))
    for i in range(m):
        for j in range(m):
            res = phi_v @ r.mu(i, j) - r.mu_of(pg[i], pg[j]) @ phi_v
            if not res.is_zero():
                b = next(b for b in range(v) if not is_zero_vector(res.column(b)))
                raise NotIntertwining(Violation("mu-intertwine", (i, j, b), res.column(b)))

    return RelRBO.build(a, r, phi_g_inv @ o.t_matrix @ phi_v)


@dataclass(frozen=True)
class Wedge2:
    """An element of the second exterior power of the algebra, stored as
    nonzero coefficients over the lexicographic wedge basis."""

    dim: int
    entries: Tuple[Tuple[int, int, Fraction], ...]

    @classmethod
    def from_dict(cls, dim: int, coeffs: Dict[Tuple[int, int], object]) -> "Wedge2":
        entries = []
        for (i, j), c in sorted(coeffs.items()):
            if not (0 <= i < j < dim):
                raise ValueError(f"wedge index ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            c = rat(c)
            if c:
                entries.append((i, j, c))
        return cls(dim, tuple(entries))

    @classmethod
    def basis(cls, dim: int, i: int, j: int) -> "Wedge2":
        return cls.from_dict(dim, {(i, j): 1})

    @classmethod
    def zero(cls, dim: int) -> "Wedge2":
        return cls(dim, ())

    @classmethod
    def from_flat(cls, dim: int, coeffs: Iterable) -> "Wedge2":
        pairs = wedge_basis(dim)
        vals = [rat(c) for c in coeffs]
        if len(vals) != len(pairs):
            raise ValueError(f"expected {len(pairs)} wedge coefficients, got {len(vals)}")
        return cls.from_dict(dim, {pair: c for pair, c in zip(pairs, vals)})

    def flat(self) -> Vector:
        out = {(i, j): c for i, j, c in self.entries}
        return tuple(out.get(pair, Fraction(0)) for pair in wedge_basis(self.dim))

    def bracket_with(self, a: LYAlgebra, z: Vector) -> Vector:
        """<X, z> = sum X_ij <e_i, e_j, z>."""
        out = vzero(a.dim)
        for i, j, c in self.entries:
            out = vadd(out, tuple(c * x for x in a.triple(a.basis(i), a.basis(j), z)))
        return out

    def action_matrix(self, a: LYAlgebra) -> Matrix:
        """Matrix of z -> <X, z> on the algebra."""
        if a.dim != self.dim:
            raise ValueError("wedge element and algebra dimensions differ")
        cols = [self.bracket_with(a, a.basis(k)) for k in range(a.dim)]
        return Matrix.from_columns(cols, rows=a.dim)

    def d_matrix(self, r: Representation) -> Matrix:
        """D(X) = sum X_ij D(e_i, e_j) acting on the module."""
        if r.algebra.dim != self.dim:
            raise ValueError("wedge element and algebra dimensions differ")
        out = Matrix.zero(r.dim_v, r.dim_v)
        for i, j, c in self.entries:
            out = out + r.d_basis(i, j).scale(c)
        return out
