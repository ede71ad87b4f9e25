"""Deformations of relative Rota-Baxter operators.

A truncated deformation is a polynomial T_t = sum_s t^s T_s with T_0 the
verified operator. Substituting it into the two defining identities and
collecting powers of t gives, for each s, a pair of coefficient residuals

    S_bin(s)(u, v)    = sum_{i+j=s}   [T_i u, T_j v]
                        - T_i( rho(T_j u) v - rho(T_j v) u )
    S_ter(s)(u, v, w) = sum_{i+j+k=s} <T_i u, T_j v, T_k w>
                        - T_i( D(T_j u, T_k v) w + mu(T_j v, T_k w) u
                               - mu(T_j u, T_k w) v )

(indices running over the available terms). Linear deformations need the full
expansion to vanish; order-n deformations only need it mod t^{n+1}; the
residual at t^{n+1} is the obstruction to extending one more order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .linalg import (
    Matrix,
    Vector,
    is_zero_vector,
    rank_kernel,
    solve_linear,
    vadd,
    vneg,
    vsub,
    vzero,
)
from .structures import AxiomReport, Violation
from .complexes import Cochain, coboundary, wedge_basis
from .rbo import RelRBO, Wedge2, _require_verified, _unit, check_rbo
from .rbo_cohomology import RboComplex, rbo_coboundary_matrix, rbo_delta0

__all__ = [
    "NotNijenhuisElement",
    "NotLinearDeformation",
    "NotOrderN",
    "TruncatedDeformation",
    "ObstructionResult",
    "NijenhuisReport",
    "RigidityProbe",
    "linear_deformation_check",
    "nijenhuis_element_check",
    "trivial_deformation_from",
    "equivalence_check_linear",
    "order_n_check",
    "obstruction",
    "extend_deformation",
    "pre_ly_deformation_terms",
    "rigidity_probe",
]


class NotNijenhuisElement(Exception):
    """The wedge element fails one of the Nijenhuis conditions."""

    def __init__(self, label: str, violation: Violation):
        self.label = label
        self.violation = violation
        super().__init__(f"fails {label} at {violation.args}")


class NotLinearDeformation(Exception):
    """T + t*frak_t is not a relative Rota-Baxter operator for all t."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"fails {violation.identity} at {violation.args}")


class NotOrderN(Exception):
    """The truncated deformation fails its own order-n conditions."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"fails {violation.identity} at {violation.args}")


@dataclass(frozen=True)
class TruncatedDeformation:
    """Coefficient matrices (T_0, T_1, ..., T_n) of a polynomial deformation;
    the order is n."""

    terms: Tuple[Matrix, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("a deformation needs at least its constant term")
        shape = (terms[0].rows, terms[0].cols)
        for k, term in enumerate(terms):
            if (term.rows, term.cols) != shape:
                raise ValueError(f"term {k} has shape {term.rows}x{term.cols}, expected {shape[0]}x{shape[1]}")

    @property
    def order(self) -> int:
        return len(self.terms) - 1


@dataclass(frozen=True)
class ObstructionResult:
    """The residual 2-cochain at order n+1, whether it is a cocycle, and a
    degree-1 preimage of its negative under the operator coboundary when one
    exists (then the deformation extends by that term)."""

    ob: Cochain
    is_cocycle: bool
    trivial: bool
    witness: Optional[Cochain]


@dataclass(frozen=True)
class NijenhuisReport:
    """Per-condition reports for a wedge element. `plain_conditions` carries
    the reduced condition set that applies when the representation is the
    adjoint one (operator on the algebra itself); otherwise None."""

    element: Wedge2
    conditions: Tuple[Tuple[str, AxiomReport], ...]
    plain_conditions: Optional[Tuple[Tuple[str, AxiomReport], ...]] = None

    @property
    def is_nijenhuis(self) -> bool:
        return all(report.valid for _, report in self.conditions)


@dataclass(frozen=True)
class RigidityProbe:
    """Dimensions feeding the rigidity discussion: the space of 1-cocycles,
    the image of wedge elements under delta, and whether every 1-cocycle lies
    in that image. A True flag does not by itself prove rigidity (the wedge
    preimages must also be Nijenhuis elements)."""

    dim_z1: int
    dim_delta_image: int
    nijenhuis_image_contained: bool


def _binary_sum_residual(o: RelRBO, terms: Tuple[Matrix, ...], s: int,
                         a_i: int, b_i: int) -> Vector:
    """S_bin(s) evaluated on module basis elements u_a, u_b."""
    a, r = o.algebra, o.rep
    v = r.dim_v
    ua, ub = _unit(v, a_i), _unit(v, b_i)
    out = vzero(a.dim)
    top = len(terms) - 1
    for i in range(max(0, s - top), min(s, top) + 1):
        j = s - i
        ti, tj = terms[i], terms[j]
        out = vadd(out, a.bracket(ti.apply(ua), tj.apply(ub)))
        inner = vsub(r.rho_of(tj.apply(ua)).apply(ub),
                     r.rho_of(tj.apply(ub)).apply(ua))
        out = vsub(out, ti.apply(inner))
    return out


def _ternary_sum_residual(o: RelRBO, terms: Tuple[Matrix, ...], s: int,
                          a_i: int, b_i: int, c_i: int) -> Vector:
    """S_ter(s) evaluated on module basis elements u_a, u_b, u_c."""
    a, r = o.algebra, o.rep
    v = r.dim_v
    ua, ub, uc = _unit(v, a_i), _unit(v, b_i), _unit(v, c_i)
    out = vzero(a.dim)
    top = len(terms) - 1
    for i in range(0, min(s, top) + 1):
        for j in range(0, min(s - i, top) + 1):
            k = s - i - j
            if k > top:
                continue
            ti, tj, tk = terms[i], terms[j], terms[k]
            out = vadd(out, a.triple(ti.apply(ua), tj.apply(ub), tk.apply(uc)))
            inner = r.d_of(tj.apply(ua), tk.apply(ub)).apply(uc)
            inner = vadd(inner, r.mu_of(tj.apply(ub), tk.apply(uc)).apply(ua))
            inner = vsub(inner, r.mu_of(tj.apply(ua), tk.apply(uc)).apply(ub))
            out = vsub(out, ti.apply(inner))
    return out


def _coefficient_violations(o: RelRBO, terms: Tuple[Matrix, ...],
                            binary_orders, ternary_orders) -> List[Violation]:
    """Collect nonzero coefficient residuals. Both sums are skew in the first
    two module slots (relabel i <-> j in the sum), so pairs run over a < b."""
    v = o.rep.dim_v
    viols: List[Violation] = []
    for s in binary_orders:
        for a_i in range(v):
            for b_i in range(a_i + 1, v):
                res = _binary_sum_residual(o, terms, s, a_i, b_i)
                if not is_zero_vector(res):
                    viols.append(Violation(f"binary@t^{s}", (a_i, b_i), res))
    for s in ternary_orders:
        for a_i in range(v):
            for b_i in range(a_i + 1, v):
                for c_i in range(v):
                    res = _ternary_sum_residual(o, terms, s, a_i, b_i, c_i)
                    if not is_zero_vector(res):
                        viols.append(Violation(f"ternary@t^{s}", (a_i, b_i, c_i), res))
    return viols


def linear_deformation_check(o: RelRBO, frak_t: Matrix) -> AxiomReport:
    """Is T + t*frak_t a relative Rota-Baxter operator for every t? The full
    expansion has binary coefficients at t^1..t^2 and ternary ones at
    t^1..t^3 (the t^0 parts vanish because T is verified)."""
    _require_verified(o)
    if (frak_t.rows, frak_t.cols) != (o.t_matrix.rows, o.t_matrix.cols):
        raise ValueError(
            f"deformation direction must be {o.t_matrix.rows}x{o.t_matrix.cols}, got {frak_t.rows}x{frak_t.cols}")
    terms = (o.t_matrix, frak_t)
    report = AxiomReport.from_violations(
        _coefficient_violations(o, terms, binary_orders=(1, 2), ternary_orders=(1, 2, 3)))
    # the expansion vanishes identically iff it vanishes at three sample
    # points (Vandermonde in t, t^2, t^3)
    sampled = all(check_rbo(o.algebra, o.rep,
                            o.t_matrix + frak_t.scale(t)).valid for t in (1, 2, 3))
    assert sampled == report.valid, "coefficient residuals must match sampled substitution"
    return report


def _is_adjoint(o: RelRBO) -> bool:
    a, r = o.algebra, o.rep
    m = a.dim
    if r.dim_v != m:
        return False
    for i in range(m):
        ad = Matrix.from_columns([a.bracket_basis(i, k) for k in range(m)], rows=m)
        if r.rho(i) != ad:
            return False
    for i in range(m):
        for j in range(m):
            mu = Matrix.from_columns([a.triple_basis(k, i, j) for k in range(m)], rows=m)
            if r.mu(i, j) != mu:
                return False
    return True


def nijenhuis_element_check(o: RelRBO, x: Wedge2) -> NijenhuisReport:
    """Check the six conditions that make a wedge element X generate a
    trivial linear deformation T + t*delta(X):

        bracket-binary             [<X,x>, <X,y>] = 0
        bracket-ternary-quadratic  <<X,x>,<X,y>,z> + <<X,x>,y,<X,z>>
                                   + <x,<X,y>,<X,z>> = 0
        bracket-ternary-cubic      <<X,x>,<X,y>,<X,z>> = 0
        mu-quadratic               mu(z,<X,w>)D(X) + mu(<X,z>,w)D(X)
                                   + mu(<X,z>,<X,w>) = 0
        mu-cubic                   mu(<X,z>,<X,w>)D(X) = 0
        closing                    <X, T(D(X)v) - <X,Tv>> = 0 for v in V

    When the representation is the adjoint one the report also carries the
    reduced set that suffices there (the bracket conditions plus a closing
    condition phrased through the operator on g)."""
    _require_verified(o)
    a, r, t = o.algebra, o.rep, o.t_matrix
    if x.dim != a.dim:
        raise ValueError("wedge element and algebra dimensions differ")
    m, v = a.dim, r.dim_v
    bas = [a.basis(i) for i in range(m)]
    xb = [x.bracket_with(a, e) for e in bas]
    dx = x.d_matrix(r)

    viols: List[Violation] = []
    for i in range(m):
        for j in range(i + 1, m):
            res = a.bracket(xb[i], xb[j])
            if not is_zero_vector(res):
                viols.append(Violation("bracket-binary", (i, j), res))
    binary_rep = AxiomReport.from_violations(viols)

    viols = []
    for i in range(m):
        for j in range(m):
            for k in range(m):
                res = vadd(vadd(a.triple(xb[i], xb[j], bas[k]),
                                a.triple(xb[i], bas[j], xb[k])),
                           a.triple(bas[i], xb[j], xb[k]))
                if not is_zero_vector(res):
                    viols.append(Violation("bracket-ternary-quadratic", (i, j, k), res))
    quad_rep = AxiomReport.from_violations(viols)

    viols = []
    for i in range(m):
        for j in range(m):
            for k in range(m):
                res = a.triple(xb[i], xb[j], xb[k])
                if not is_zero_vector(res):
                    viols.append(Violation("bracket-ternary-cubic", (i, j, k), res))
    cubic_rep = AxiomReport.from_violations(viols)

    viols = []
    for z in range(m):
        for w in range(m):
            mat = (r.mu_of(bas[z], xb[w]) + r.mu_of(xb[z], bas[w])) @ dx \
                + r.mu_of(xb[z], xb[w])
            for col in range(v):
                res = mat.column(col)
                if not is_zero_vector(res):
                    viols.append(Violation("mu-quadratic", (z, w, col), res))
    mu_quad_rep = AxiomReport.from_violations(viols)

    viols = []
    for z in range(m):
        for w in range(m):
            mat = r.mu_of(xb[z], xb[w]) @ dx
            for col in range(v):
                res = mat.column(col)
                if not is_zero_vector(res):
                    viols.append(Violation("mu-cubic", (z, w, col), res))
    mu_cubic_rep = AxiomReport.from_violations(viols)

    viols = []
    delta_x = rbo_delta0(o, x)
    for b in range(v):
        res = x.bracket_with(a, delta_x.f_part[b])
        if not is_zero_vector(res):
            viols.append(Violation("closing", (b,), res))
    closing_rep = AxiomReport.from_violations(viols)

    conditions = (
        ("bracket-binary", binary_rep),
        ("bracket-ternary-quadratic", quad_rep),
        ("bracket-ternary-cubic", cubic_rep),
        ("mu-quadratic", mu_quad_rep),
        ("mu-cubic", mu_cubic_rep),
        ("closing", closing_rep),
    )

    plain = None
    if _is_adjoint(o):
        viols = []
        for y in range(m):
            inner = vsub(t.apply(xb[y]), x.bracket_with(a, t.apply(bas[y])))
            res = x.bracket_with(a, inner)
            if not is_zero_vector(res):
                viols.append(Violation("closing", (y,), res))
        plain = (
            ("bracket-binary", binary_rep),
            ("bracket-ternary-quadratic", quad_rep),
            ("bracket-ternary-cubic", cubic_rep),
            ("closing", AxiomReport.from_violations(viols)),
        )

    return NijenhuisReport(element=x, conditions=conditions, plain_conditions=plain)


def trivial_deformation_from(o: RelRBO, x: Wedge2) -> TruncatedDeformation:
    """The linear deformation T + t*delta(X) generated by a Nijenhuis
    element. Raises NotNijenhuisElement when X fails a condition."""
    report = nijenhuis_element_check(o, x)
    for label, rep in report.conditions:
        if not rep.valid:
            raise NotNijenhuisElement(label, rep.violations[0])
    direction = rbo_delta0(o, x).as_matrix()
    d = TruncatedDeformation((o.t_matrix, direction))
    assert linear_deformation_check(o, direction).valid, \
        "a Nijenhuis element must generate a linear deformation"
    return d


def equivalence_check_linear(o: RelRBO, d1: TruncatedDeformation,
                             d2: TruncatedDeformation, x: Wedge2) -> AxiomReport:
    """Check whether the wedge element X realizes an equivalence from the
    linear deformation d2 onto d1 through the maps

        phi_t = Id_g + t <X, .>        psi_t = Id_V + t D(X).

    Each homomorphism-of-operators condition is polynomial in t; its
    coefficients are reported per degree (labels like "mu-intertwine@t^2").
    The t^1 parts of the bracket and rho/mu conditions hold automatically by
    the algebra and representation axioms and are included for completeness."""
    _require_verified(o)
    a, r = o.algebra, o.rep
    m, v = a.dim, r.dim_v
    for d in (d1, d2):
        if d.order != 1:
            raise ValueError("equivalence check applies to linear deformations")
        if d.terms[0] != o.t_matrix:
            raise ValueError("deformation must start at the operator")
    if x.dim != m:
        raise ValueError("wedge element and algebra dimensions differ")
    lx = x.action_matrix(a)
    dx = x.d_matrix(r)
    t1, t2 = d1.terms[1], d2.terms[1]
    bas = [a.basis(i) for i in range(m)]
    lxb = [lx.apply(e) for e in bas]
    viols: List[Violation] = []

    for i in range(m):
        for j in range(i + 1, m):
            res = vsub(vadd(a.bracket(lxb[i], bas[j]), a.bracket(bas[i], lxb[j])),
                       lx.apply(a.bracket_basis(i, j)))
            if not is_zero_vector(res):
                viols.append(Violation("binary-hom@t^1", (i, j), res))
            res = a.bracket(lxb[i], lxb[j])
            if not is_zero_vector(res):
                viols.append(Violation("binary-hom@t^2", (i, j), res))

    for i in range(m):
        for j in range(m):
            for k in range(m):
                res = vadd(vadd(a.triple(lxb[i], bas[j], bas[k]),
                                a.triple(bas[i], lxb[j], bas[k])),
                           a.triple(bas[i], bas[j], lxb[k]))
                res = vsub(res, lx.apply(a.triple_basis(i, j, k)))
                if not is_zero_vector(res):
                    viols.append(Violation("ternary-hom@t^1", (i, j, k), res))
                res = vadd(vadd(a.triple(lxb[i], lxb[j], bas[k]),
                                a.triple(lxb[i], bas[j], lxb[k])),
                           a.triple(bas[i], lxb[j], lxb[k]))
                if not is_zero_vector(res):
                    viols.append(Violation("ternary-hom@t^2", (i, j, k), res))
                res = a.triple(lxb[i], lxb[j], lxb[k])
                if not is_zero_vector(res):
                    viols.append(Violation("ternary-hom@t^3", (i, j, k), res))

    for i in range(m):
        mat1 = dx @ r.rho(i) - r.rho_of(lxb[i]) - r.rho(i) @ dx
        mat2 = (r.rho_of(lxb[i]) @ dx).scale(-1)
        for label, mat in (("rho-intertwine@t^1", mat1), ("rho-intertwine@t^2", mat2)):
            for col in range(v):
                res = mat.column(col)
                if not is_zero_vector(res):
                    viols.append(Violation(label, (i, col), res))

    for i in range(m):
        for j in range(m):
            mat1 = dx @ r.mu(i, j) - r.mu_of(lxb[i], bas[j]) \
                - r.mu_of(bas[i], lxb[j]) - r.mu(i, j) @ dx
            mat2 = (r.mu_of(lxb[i], lxb[j])
                    + (r.mu_of(lxb[i], bas[j]) + r.mu_of(bas[i], lxb[j])) @ dx).scale(-1)
            mat3 = (r.mu_of(lxb[i], lxb[j]) @ dx).scale(-1)
            for label, mat in (("mu-intertwine@t^1", mat1),
                               ("mu-intertwine@t^2", mat2),
                               ("mu-intertwine@t^3", mat3)):
                for col in range(v):
                    res = mat.column(col)
                    if not is_zero_vector(res):
                        viols.append(Violation(label, (i, j, col), res))

    mat1 = t1 + o.t_matrix @ dx - t2 - lx @ o.t_matrix
    mat2 = t1 @ dx - lx @ t2
    for label, mat in (("t-intertwine@t^1", mat1), ("t-intertwine@t^2", mat2)):
        for col in range(v):
            res = mat.column(col)
            if not is_zero_vector(res):
                viols.append(Violation(label, (col,), res))

    return AxiomReport.from_violations(viols)


def order_n_check(o: RelRBO, d: TruncatedDeformation) -> AxiomReport:
    """The defining identities for T_t mod t^{n+1}: every coefficient
    residual at t^0..t^n must vanish."""
    _require_verified(o)
    if d.terms[0] != o.t_matrix:
        raise ValueError("deformation must start at the operator")
    orders = tuple(range(d.order + 1))
    return AxiomReport.from_violations(
        _coefficient_violations(o, d.terms, binary_orders=orders, ternary_orders=orders))


def obstruction(o: RelRBO, d: TruncatedDeformation) -> ObstructionResult:
    """The coefficient residual at t^{n+1}, packaged as a 2-cochain Ob of the
    operator complex. The deformation extends to order n+1 by a term frak_t
    iff delta(frak_t) = -Ob; the witness is such a preimage when it exists.

    Raises NotOrderN when d itself fails its order-n conditions."""
    report = order_n_check(o, d)
    if not report.valid:
        raise NotOrderN(report.violations[0])
    n = d.order
    v = o.rep.dim_v
    rc = RboComplex.build(o)
    pairs = wedge_basis(v)
    f_part = tuple(_binary_sum_residual(o, d.terms, n + 1, a_i, b_i)
                   for (a_i, b_i) in pairs)
    g_part = tuple(_ternary_sum_residual(o, d.terms, n + 1, a_i, b_i, c_i)
                   for (a_i, b_i) in pairs for c_i in range(v))
    ob = Cochain(2, f_part, g_part)
    is_cocycle = coboundary(rc.ctx, ob).is_zero()
    sol = solve_linear(rbo_coboundary_matrix(rc, 1), vneg(ob.flatten()))
    witness = None
    if sol is not None:
        witness = Cochain.from_flat(rc.ctx, 1, sol)
    return ObstructionResult(ob=ob, is_cocycle=is_cocycle,
                             trivial=sol is not None, witness=witness)


def extend_deformation(o: RelRBO, d: TruncatedDeformation) -> Optional[TruncatedDeformation]:
    """Extend an order-n deformation to order n+1 when its obstruction is
    trivial; None when it is not."""
    result = obstruction(o, d)
    if not result.trivial:
        return None
    extended = TruncatedDeformation(d.terms + (result.witness.as_matrix(),))
    assert order_n_check(o, extended).valid, "a trivial obstruction must allow extension"
    return extended


def pre_ly_deformation_terms(o: RelRBO, frak_t: Matrix) -> Tuple[tuple, tuple, tuple]:
    """Deformation terms induced on the pre-Lie-Yamaguti products of a linear
    deformation:

        phi(u, v)       = rho(frak_t u) v
        omega1(u, v, w) = mu(Tv, frak_t w) u + mu(frak_t v, Tw) u
        omega2(u, v, w) = mu(frak_t v, frak_t w) u

    so that the deformed operator's products are * + t*phi and
    {.} + t*omega1 + t^2*omega2. Raises NotLinearDeformation when frak_t is
    not a linear deformation direction."""
    report = linear_deformation_check(o, frak_t)
    if not report.valid:
        raise NotLinearDeformation(report.violations[0])
    r = o.rep
    v = r.dim_v
    units = [_unit(v, b) for b in range(v)]
    timg = [o.column(b) for b in range(v)]
    simg = [frak_t.column(b) for b in range(v)]
    phi = tuple(tuple(r.rho_of(simg[a]).apply(units[b]) for b in range(v))
                for a in range(v))
    omega1 = tuple(tuple(tuple(vadd(r.mu_of(timg[b], simg[c]).apply(units[a]),
                                    r.mu_of(simg[b], timg[c]).apply(units[a]))
                               for c in range(v)) for b in range(v))
                   for a in range(v))
    omega2 = tuple(tuple(tuple(r.mu_of(simg[b], simg[c]).apply(units[a])
                               for c in range(v)) for b in range(v))
                   for a in range(v))
    return phi, omega1, omega2


def rigidity_probe(o: RelRBO) -> RigidityProbe:
    """Dimensions of the degree-1 cocycle space and of the image of wedge
    elements under delta, plus whether the image exhausts the cocycles."""
    rc = RboComplex.build(o)
    _, kernel = rank_kernel(rbo_coboundary_matrix(rc, 1))
    mat0 = rbo_coboundary_matrix(rc, 0)
    image_rank, _ = rank_kernel(mat0)
    contained = all(solve_linear(mat0, k) is not None for k in kernel)
    return RigidityProbe(dim_z1=len(kernel), dim_delta_image=image_rank,
                         nijenhuis_image_contained=contained)
