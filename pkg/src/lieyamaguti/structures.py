"""Lie-Yamaguti algebras, their representations, and operator-level checks.

A Lie-Yamaguti algebra carries a skew binary bracket [.,.] and a ternary
bracket <.,.,.> skew in its first two slots, tied together by four axioms
(checked in `check_lya`). Structure constants are stored for i < j only and
completed by skewness; all arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .linalg import (
    Matrix,
    Vector,
    commutator,
    is_zero_vector,
    rat,
    vadd,
    vneg,
    vscale,
    vsub,
    vector,
    vzero,
)

__all__ = [
    "LYAlgebra",
    "Violation",
    "AxiomReport",
    "JacobiViolation",
    "InvalidAlgebra",
    "InvalidRepresentation",
    "NotNijenhuis",
    "check_lya",
    "lya_from_lie",
    "Representation",
    "d_map",
    "check_representation",
    "adjoint_rep",
    "zero_rep",
    "semidirect",
    "nijenhuis_operator_check",
    "deformed_brackets",
]


class Violation(NamedTuple):
    """One failed instance of a named identity on a basis tuple."""

    identity: str
    args: Tuple[int, ...]
    residual: Vector


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: Tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "AxiomReport":
        vs = tuple(violations)
        return cls(valid=not vs, violations=vs)

    def first(self, identity: Optional[str] = None) -> Optional[Violation]:
        for v in self.violations:
            if identity is None or v.identity == identity:
                return v
        return None


class JacobiViolation(Exception):
    """A claimed Lie bracket fails the Jacobi identity."""

    def __init__(self, triple: Tuple[int, ...], residual: Vector):
        self.triple = triple
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple {triple}")


class InvalidAlgebra(Exception):
    """An operation required a valid Lie-Yamaguti algebra and got a broken one."""


class InvalidRepresentation(Exception):
    """An operation required a valid representation and got a broken one."""


class NotNijenhuis(Exception):
    """Deformed brackets were requested for a non-Nijenhuis operator."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(
            f"operator fails {violation.identity} at basis tuple {violation.args}")


def _names(prefix: str, n: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


class LYAlgebra:
    """Finite-dimensional algebra with a skew binary bracket and a ternary
    bracket skew in its first two slots.

    `binary` maps (i, j) with i < j to the coefficient vector of [e_i, e_j];
    `ternary` maps (i, j, k) with i < j to that of <e_i, e_j, e_k>. Missing
    entries are zero. Whether the axioms hold is a separate question answered
    by `check_lya`.
    """

    __slots__ = ("dim", "basis_names", "_binary", "_ternary", "_basis")

    def __init__(self, dim: int,
                 binary: Optional[Dict[Tuple[int, int], Iterable]] = None,
                 ternary: Optional[Dict[Tuple[int, int, int], Iterable]] = None,
                 basis_names: Optional[Sequence[str]] = None):
        if dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        names = tuple(basis_names) if basis_names is not None else _names("e", dim)
        if len(names) != dim:
            raise ValueError(f"expected {dim} basis names, got {len(names)}")

        zero = vzero(dim)
        btab: List[List[Vector]] = [[zero] * dim for _ in range(dim)]
        for key, val in (binary or {}).items():
            i, j = key
            self._check_pair(i, j, dim)
            v = vector(val)
            if len(v) != dim:
                raise ValueError(f"binary constant at {key} has length {len(v)}, expected {dim}")
            btab[i][j] = v
            btab[j][i] = vneg(v)

        ttab: List[List[List[Vector]]] = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for key, val in (ternary or {}).items():
            i, j, k = key
            self._check_pair(i, j, dim)
            if not 0 <= k < dim:
                raise ValueError(f"ternary index {k} out of range")
            v = vector(val)
            if len(v) != dim:
                raise ValueError(f"ternary constant at {key} has length {len(v)}, expected {dim}")
            ttab[i][j][k] = v
            ttab[j][i][k] = vneg(v)

        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "_binary", tuple(tuple(r) for r in btab))
        object.__setattr__(self, "_ternary",
                           tuple(tuple(tuple(c) for c in r) for r in ttab))
        object.__setattr__(self, "_basis",
                           tuple(tuple(Fraction(1 if c == i else 0) for c in range(dim))
                                 for i in range(dim)))

    def __setattr__(self, name, value):
        raise AttributeError("LYAlgebra is immutable")

    @staticmethod
    def _check_pair(i: int, j: int, dim: int) -> None:
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"basis index out of range in ({i}, {j})")
        if i >= j:
            raise ValueError(f"structure constants are stored for i < j only, got ({i}, {j})")

    def basis(self, i: int) -> Vector:
        return self._basis[i]

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._binary[i][j]

    def triple_basis(self, i: int, j: int, k: int) -> Vector:
        return self._ternary[i][j][k]

    def bracket(self, u: Vector, v: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if not cj:
                    continue
                w = self._binary[i][j]
                c = ci * cj
                for l, wl in enumerate(w):
                    if wl:
                        out[l] += c * wl
        return tuple(out)

    def triple(self, u: Vector, v: Vector, w: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if not cj:
                    continue
                cij = ci * cj
                for k, ck in enumerate(w):
                    if not ck:
                        continue
                    t = self._ternary[i][j][k]
                    c = cij * ck
                    for l, tl in enumerate(t):
                        if tl:
                            out[l] += c * tl
        return tuple(out)

    def binary_constants(self) -> Dict[Tuple[int, int], Vector]:
        return {(i, j): self._binary[i][j]
                for i in range(self.dim) for j in range(i + 1, self.dim)
                if not is_zero_vector(self._binary[i][j])}

    def ternary_constants(self) -> Dict[Tuple[int, int, int], Vector]:
        return {(i, j, k): self._ternary[i][j][k]
                for i in range(self.dim) for j in range(i + 1, self.dim)
                for k in range(self.dim)
                if not is_zero_vector(self._ternary[i][j][k])}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LYAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self._binary == other._binary
                and self._ternary == other._ternary)

    def __hash__(self) -> int:
        return hash((self.dim, self._binary, self._ternary))

    def __repr__(self) -> str:
        return f"LYAlgebra(dim={self.dim})"


def check_lya(a: LYAlgebra) -> AxiomReport:
    """Check the four defining identities on every basis tuple.

    Multilinearity extends basis-tuple validity to the whole space, so an
    empty violation list certifies the algebra. Violations carry the basis
    index tuple and the nonzero residual (always "LHS sum" in the orientation
    written below).
    """
    viols: List[Violation] = []
    rng = range(a.dim)
    bas = [a.basis(i) for i in rng]

    # [[x,y],z] + [[y,z],x] + [[z,x],y] + <x,y,z> + <y,z,x> + <z,x,y> = 0
    for i, j, k in itertools.product(rng, repeat=3):
        r = a.bracket(a.bracket_basis(i, j), bas[k])
        r = vadd(r, a.bracket(a.bracket_basis(j, k), bas[i]))
        r = vadd(r, a.bracket(a.bracket_basis(k, i), bas[j]))
        r = vadd(r, a.triple_basis(i, j, k))
        r = vadd(r, a.triple_basis(j, k, i))
        r = vadd(r, a.triple_basis(k, i, j))
        if not is_zero_vector(r):
            viols.append(Violation("jacobi-defect", (i, j, k), r))

    # <[x,y],z,w> + <[y,z],x,w> + <[z,x],y,w> = 0
    for i, j, k, l in itertools.product(rng, repeat=4):
        r = a.triple(a.bracket_basis(i, j), bas[k], bas[l])
        r = vadd(r, a.triple(a.bracket_basis(j, k), bas[i], bas[l]))
        r = vadd(r, a.triple(a.bracket_basis(k, i), bas[j], bas[l]))
        if not is_zero_vector(r):
            viols.append(Violation("cyclic-ternary", (i, j, k, l), r))

    # <x,y,[z,w]> = [<x,y,z>,w] + [z,<x,y,w>]
    for i, j, k, l in itertools.product(rng, repeat=4):
        r = a.triple(bas[i], bas[j], a.bracket_basis(k, l))
        r = vsub(r, a.bracket(a.triple_basis(i, j, k), bas[l]))
        r = vsub(r, a.bracket(bas[k], a.triple_basis(i, j, l)))
        if not is_zero_vector(r):
            viols.append(Violation("binary-derivation", (i, j, k, l), r))

    # <x,y,<z,w,t>> = <<x,y,z>,w,t> + <z,<x,y,w>,t> + <z,w,<x,y,t>>
    for i, j, k, l, m in itertools.product(rng, repeat=5):
        r = a.triple(bas[i], bas[j], a.triple_basis(k, l, m))
        r = vsub(r, a.triple(a.triple_basis(i, j, k), bas[l], bas[m]))
        r = vsub(r, a.triple(bas[k], a.triple_basis(i, j, l), bas[m]))
        r = vsub(r, a.triple(bas[k], bas[l], a.triple_basis(i, j, m)))
        if not is_zero_vector(r):
            viols.append(Violation("ternary-derivation", (i, j, k, l, m), r))

    return AxiomReport.from_violations(viols)


def lya_from_lie(dim: int,
                 binary: Optional[Dict[Tuple[int, int], Iterable]] = None,
                 basis_names: Optional[Sequence[str]] = None) -> LYAlgebra:
    """Lift a Lie algebra to a Lie-Yamaguti algebra via <x,y,z> := [[x,y],z].

    The Jacobi identity is verified first; the first failing basis triple is
    raised as `JacobiViolation` with its residual.
    """
    lie = LYAlgebra(dim, binary=binary, basis_names=basis_names)
    rng = range(dim)
    bas = [lie.basis(i) for i in rng]
    for i, j, k in itertools.product(rng, repeat=3):
        r = lie.bracket(lie.bracket_basis(i, j), bas[k])
        r = vadd(r, lie.bracket(lie.bracket_basis(j, k), bas[i]))
        r = vadd(r, lie.bracket(lie.bracket_basis(k, i), bas[j]))
        if not is_zero_vector(r):
            raise JacobiViolation((i, j, k), r)
    ternary = {}
    for i in rng:
        for j in range(i + 1, dim):
            for k in rng:
                v = lie.bracket(lie.bracket_basis(i, j), bas[k])
                if not is_zero_vector(v):
                    ternary[(i, j, k)] = v
    return LYAlgebra(dim, binary=binary, ternary=ternary, basis_names=basis_names)


class Representation:
    """Module data (rho, mu) for a Lie-Yamaguti algebra.

    rho assigns a dim_v x dim_v matrix to each algebra basis element; mu
    assigns one to each ordered pair. `d_basis` caches the derived skew
    action D(x,y) = mu(y,x) - mu(x,y) + [rho(x),rho(y)] - rho([x,y]).
    Validity is a separate question answered by `check_representation`.
    """

    __slots__ = ("algebra", "dim_v", "_rho", "_mu", "_d")

    def __init__(self, algebra: LYAlgebra, dim_v: int,
                 rho: Sequence[Matrix], mu: Sequence[Sequence[Matrix]]):
        if dim_v < 0:
            raise ValueError("module dimension must be nonnegative")
        if len(rho) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} rho matrices, got {len(rho)}")
        for m in rho:
            if (m.rows, m.cols) != (dim_v, dim_v):
                raise ValueError(f"rho matrix has shape {m.rows}x{m.cols}, expected {dim_v}x{dim_v}")
        if len(mu) != algebra.dim or any(len(row) != algebra.dim for row in mu):
            raise ValueError(f"mu must be a {algebra.dim}x{algebra.dim} array of matrices")
        for row in mu:
            for m in row:
                if (m.rows, m.cols) != (dim_v, dim_v):
                    raise ValueError(f"mu matrix has shape {m.rows}x{m.cols}, expected {dim_v}x{dim_v}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim_v", dim_v)
        object.__setattr__(self, "_rho", tuple(rho))
        object.__setattr__(self, "_mu", tuple(tuple(row) for row in mu))
        object.__setattr__(self, "_d", {})

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def rho(self, i: int) -> Matrix:
        return self._rho[i]

    def mu(self, i: int, j: int) -> Matrix:
        return self._mu[i][j]

    def rho_of(self, x: Vector) -> Matrix:
        out = Matrix.zero(self.dim_v, self.dim_v)
        for i, c in enumerate(x):
            if c:
                out = out + self._rho[i].scale(c)
        return out

    def mu_of(self, x: Vector, y: Vector) -> Matrix:
        out = Matrix.zero(self.dim_v, self.dim_v)
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if cj:
                    out = out + self._mu[i][j].scale(ci * cj)
        return out

    def d_basis(self, i: int, j: int) -> Matrix:
        key = (i, j)
        cached = self._d.get(key)
        if cached is None:
            a = self.algebra
            cached = (self._mu[j][i] - self._mu[i][j]
                      + commutator(self._rho[i], self._rho[j])
                      - self.rho_of(a.bracket_basis(i, j)))
            self._d[key] = cached
        return cached

    def d_of(self, x: Vector, y: Vector) -> Matrix:
        out = Matrix.zero(self.dim_v, self.dim_v)
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if cj:
                    out = out + self.d_basis(i, j).scale(ci * cj)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra == other.algebra and self.dim_v == other.dim_v
                and self._rho == other._rho and self._mu == other._mu)

    def __hash__(self) -> int:
        return hash((self.algebra, self.dim_v, self._rho, self._mu))

    def __repr__(self) -> str:
        return f"Representation(dim_v={self.dim_v} over dim={self.algebra.dim})"


def d_map(r: Representation, i: int, j: int) -> Matrix:
    """D(e_i, e_j) = mu(e_j, e_i) - mu(e_i, e_j) + [rho(e_i), rho(e_j)] - rho([e_i, e_j])."""
    return r.d_basis(i, j)


def _matrix_violations(viols: List[Violation], identity: str,
                       args: Tuple[int, ...], residual: Matrix) -> None:
    # one violation per nonzero column, so residuals stay vectors
    for c in range(residual.cols):
        col = residual.column(c)
        if not is_zero_vector(col):
            viols.append(Violation(identity, args + (c,), col))


def check_representation(r: Representation) -> AxiomReport:
    """Check the five representation conditions plus three derived identities
    for D that downstream constructions rely on. Identities are evaluated as
    matrix equations per basis tuple; a violation is recorded per nonzero
    residual column, with the module index appended to the argument tuple.
    """
    a = r.algebra
    rng = range(a.dim)
    bas = [a.basis(i) for i in rng]
    viols: List[Violation] = []

    for i, j, k in itertools.product(rng, repeat=3):
        # mu([x,y],z) = mu(x,z) rho(y) - mu(y,z) rho(x)
        res = (r.mu_of(a.bracket_basis(i, j), bas[k])
               - r.mu(i, k) @ r.rho(j) + r.mu(j, k) @ r.rho(i))
        _matrix_violations(viols, "mu-bracket-left", (i, j, k), res)

        # mu(x,[y,z]) = rho(y) mu(x,z) - rho(z) mu(x,y)
        res = (r.mu_of(bas[i], a.bracket_basis(j, k))
               - r.rho(j) @ r.mu(i, k) + r.rho(k) @ r.mu(i, j))
        _matrix_violations(viols, "mu-bracket-right", (i, j, k), res)

        # rho(<x,y,z>) = [D(x,y), rho(z)]
        res = r.rho_of(a.triple_basis(i, j, k)) - commutator(r.d_basis(i, j), r.rho(k))
        _matrix_violations(viols, "rho-triple-commutator", (i, j, k), res)

        # D([x,y],z) + D([y,z],x) + D([z,x],y) = 0   (derived)
        res = (r.d_of(a.bracket_basis(i, j), bas[k])
               + r.d_of(a.bracket_basis(j, k), bas[i])
               + r.d_of(a.bracket_basis(k, i), bas[j]))
        _matrix_violations(viols, "d-bracket-cyclic", (i, j, k), res)

    for i, j, k, l in itertools.product(rng, repeat=4):
        # mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,<y,z,w>) + D(y,z) mu(x,w) = 0
        res = (r.mu(k, l) @ r.mu(i, j) - r.mu(j, l) @ r.mu(i, k)
               - r.mu_of(bas[i], a.triple_basis(j, k, l))
               + r.d_basis(j, k) @ r.mu(i, l))
        _matrix_violations(viols, "mu-composition", (i, j, k, l), res)

        # mu(<x,y,z>,w) + mu(z,<x,y,w>) = [D(x,y), mu(z,w)]
        res = (r.mu_of(a.triple_basis(i, j, k), bas[l])
               + r.mu_of(bas[k], a.triple_basis(i, j, l))
               - commutator(r.d_basis(i, j), r.mu(k, l)))
        _matrix_violations(viols, "mu-triple-commutator", (i, j, k, l), res)

        # D(<x,y,z>,w) + D(z,<x,y,w>) = [D(x,y), D(z,w)]   (derived)
        res = (r.d_of(a.triple_basis(i, j, k), bas[l])
               + r.d_of(bas[k], a.triple_basis(i, j, l))
               - commutator(r.d_basis(i, j), r.d_basis(k, l)))
        _matrix_violations(viols, "d-triple-commutator", (i, j, k, l), res)

        # mu(<x,y,z>,w) = mu(x,w) mu(z,y) - mu(y,w) mu(z,x) - mu(z,w) D(x,y)   (derived)
        res = (r.mu_of(a.triple_basis(i, j, k), bas[l])
               - r.mu(i, l) @ r.mu(k, j) + r.mu(j, l) @ r.mu(k, i)
               + r.mu(k, l) @ r.d_basis(i, j))
        _matrix_violations(viols, "mu-triple-expansion", (i, j, k, l), res)

    return AxiomReport.from_violations(viols)


def adjoint_rep(a: LYAlgebra) -> Representation:
    """The algebra acting on itself: rho(x) = [x, .], mu(x, y) = <., x, y>.

    Requires a valid algebra (raises InvalidAlgebra otherwise); validity of
    the result is then automatic and D(x,y) acts as <x,y,.>.
    """
    report = check_lya(a)
    if not report.valid:
        first = report.violations[0]
        raise InvalidAlgebra(
            f"algebra fails {first.identity} at basis tuple {first.args}")
    n = a.dim
    rho = [Matrix.from_columns([a.bracket(a.basis(i), a.basis(k)) for k in range(n)], rows=n)
           for i in range(n)]
    mu = [[Matrix.from_columns([a.triple(a.basis(k), a.basis(i), a.basis(j))
                                for k in range(n)], rows=n)
           for j in range(n)] for i in range(n)]
    return Representation(a, n, rho, mu)


def zero_rep(a: LYAlgebra, dim_v: int) -> Representation:
    """The trivial action on a dim_v-dimensional module."""
    z = Matrix.zero(dim_v, dim_v)
    return Representation(a, dim_v, [z] * a.dim, [[z] * a.dim for _ in range(a.dim)])


def semidirect(a: LYAlgebra, r: Representation) -> LYAlgebra:
    """Brackets on g (+) V induced by (rho, mu):

        [x+u, y+v]   = [x,y] + rho(x)v - rho(y)u
        <x+u,y+v,z+w> = <x,y,z> + D(x,y)w + mu(y,z)u - mu(x,z)v

    Built unconditionally; it passes `check_lya` exactly when `r` passes
    `check_representation`, which makes it an independent validity probe.
    """
    if r.algebra is not a and r.algebra != a:
        raise ValueError("representation belongs to a different algebra")
    m, v = a.dim, r.dim_v
    n = m + v

    def pad_g(x: Vector) -> Vector:
        return tuple(x) + vzero(v)

    def pad_v(u: Vector) -> Vector:
        return vzero(m) + tuple(u)

    uvec = [tuple(Fraction(1 if c == b else 0) for c in range(v)) for b in range(v)]

    binary: Dict[Tuple[int, int], Vector] = {}
    ternary: Dict[Tuple[int, int, int], Vector] = {}

    for p in range(n):
        for q in range(p + 1, n):
            if q < m:
                val = pad_g(a.bracket_basis(p, q))
            elif p < m:
                val = pad_v(r.rho(p).apply(uvec[q - m]))
            else:
                val = vzero(n)
            if not is_zero_vector(val):
                binary[(p, q)] = val
            for k in range(n):
                if q < m:
                    if k < m:
                        t = pad_g(a.triple_basis(p, q, k))
                    else:
                        t = pad_v(r.d_basis(p, q).apply(uvec[k - m]))
                elif p < m:
                    # <e_p + 0, 0 + u_b, z + w> = mu(0,z)0 - mu(e_p,z)u_b on the V side
                    if k < m:
                        t = pad_v(vneg(r.mu(p, k).apply(uvec[q - m])))
                    else:
                        t = vzero(n)
                else:
                    t = vzero(n)
                if not is_zero_vector(t):
                    ternary[(p, q, k)] = t

    names = a.basis_names + _names("u", v)
    return LYAlgebra(n, binary=binary, ternary=ternary, basis_names=names)


def nijenhuis_operator_check(a: LYAlgebra, n: Matrix) -> AxiomReport:
    """Check the Nijenhuis conditions for a linear operator N on the algebra:

        [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y])
        <Nx,Ny,Nz> = N(<Nx,Ny,z> + <Nx,y,Nz> + <x,Ny,Nz>
                       - N<Nx,y,z> - N<x,Ny,z> - N<x,y,Nz> + N^2 <x,y,z>)
    """
    if (n.rows, n.cols) != (a.dim, a.dim):
        raise ValueError(f"operator must be {a.dim}x{a.dim}")
    rng = range(a.dim)
    bas = [a.basis(i) for i in rng]
    nb = [n.apply(b) for b in bas]
    viols: List[Violation] = []

    for i in rng:
        for j in range(i + 1, a.dim):
            lhs = a.bracket(nb[i], nb[j])
            inner = vadd(a.bracket(nb[i], bas[j]), a.bracket(bas[i], nb[j]))
            inner = vsub(inner, n.apply(a.bracket_basis(i, j)))
            res = vsub(lhs, n.apply(inner))
            if not is_zero_vector(res):
                viols.append(Violation("nijenhuis-binary", (i, j), res))

    for i in rng:
        for j in range(i + 1, a.dim):
            for k in rng:
                lhs = a.triple(nb[i], nb[j], nb[k])
                inner = a.triple(nb[i], nb[j], bas[k])
                inner = vadd(inner, a.triple(nb[i], bas[j], nb[k]))
                inner = vadd(inner, a.triple(bas[i], nb[j], nb[k]))
                inner = vsub(inner, n.apply(a.triple(nb[i], bas[j], bas[k])))
                inner = vsub(inner, n.apply(a.triple(bas[i], nb[j], bas[k])))
                inner = vsub(inner, n.apply(a.triple(bas[i], bas[j], nb[k])))
                inner = vadd(inner, n.apply(n.apply(a.triple_basis(i, j, k))))
                res = vsub(lhs, n.apply(inner))
                if not is_zero_vector(res):
                    viols.append(Violation("nijenhuis-ternary", (i, j, k), res))

    return AxiomReport.from_violations(viols)


def deformed_brackets(a: LYAlgebra, n: Matrix) -> LYAlgebra:
    """The brackets deformed by a Nijenhuis operator:

        [x,y]_N   = [Nx,y] + [x,Ny] - N[x,y]
        <x,y,z>_N = <Nx,Ny,z> + <Nx,y,Nz> + <x,Ny,Nz>
                    - N<Nx,y,z> - N<x,Ny,z> - N<x,y,Nz> + N^2 <x,y,z>

    Raises NotNijenhuis when the operator fails `nijenhuis_operator_check`.
    The result is again a Lie-Yamaguti algebra, and N is a homomorphism from
    it to the original; both facts are re-verified here.
    """
    report = nijenhuis_operator_check(a, n)
    if not report.valid:
        raise NotNijenhuis(report.violations[0])
    rng = range(a.dim)
    bas = [a.basis(i) for i in rng]
    nb = [n.apply(b) for b in bas]

    binary: Dict[Tuple[int, int], Vector] = {}
    ternary: Dict[Tuple[int, int, int], Vector] = {}
    for i in rng:
        for j in range(i + 1, a.dim):
            val = vadd(a.bracket(nb[i], bas[j]), a.bracket(bas[i], nb[j]))
            val = vsub(val, n.apply(a.bracket_basis(i, j)))
            if not is_zero_vector(val):
                binary[(i, j)] = val
            for k in rng:
                t = a.triple(nb[i], nb[j], bas[k])
                t = vadd(t, a.triple(nb[i], bas[j], nb[k]))
                t = vadd(t, a.triple(bas[i], nb[j], nb[k]))
                t = vsub(t, n.apply(a.triple(nb[i], bas[j], bas[k])))
                t = vsub(t, n.apply(a.triple(bas[i], nb[j], bas[k])))
                t = vsub(t, n.apply(a.triple(bas[i], bas[j], nb[k])))
                t = vadd(t, n.apply(n.apply(a.triple_basis(i, j, k))))
                if not is_zero_vector(t):
                    ternary[(i, j, k)] = t

    deformed = LYAlgebra(a.dim, binary=binary, ternary=ternary,
                         basis_names=a.basis_names)
    assert check_lya(deformed).valid, "deformed brackets must satisfy the axioms"
    for i in rng:
        for j in range(i + 1, a.dim):
            assert n.apply(deformed.bracket_basis(i, j)) == a.bracket(nb[i], nb[j])
            for k in rng:
                assert n.apply(deformed.triple_basis(i, j, k)) == a.triple(nb[i], nb[j], nb[k])
    return deformed
