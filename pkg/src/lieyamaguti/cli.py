"""The `lyat` command line tool.

Model files (.lyat) are JSON documents describing an algebra over the
rationals, optionally a representation, a candidate Rota-Baxter operator, a
truncated deformation, and named wedge elements:

    {
      "scalar": "rational",
      "dim": 2,
      "basis": ["e1", "e2"],
      "binary":  [{"args": [1, 2], "value": {"e1": "1"}}],
      "ternary": [{"args": [1, 2, 2], "value": {"e1": "1"}}],
      "representation": "adjoint",
      "operator": [["0", "0"], ["0", "1"]],
      "deformation": {"terms": [[["0","0"],["0","1"]], [["0","-1"],["0","0"]]]},
      "elements": {"X": [{"args": [1, 2], "coeff": "1"}]}
    }

Basis indices in `args` are 1-based. Structure constants and wedge terms are
stored for ascending indices only (i < j); coefficients are integers or
strings like "-3/2" (decimal notation is rejected: arithmetic is exact).
Matrices act on coordinate columns, so `operator` rows are g-coordinates and
columns are module basis vectors. An explicit representation is
{"dim": v, "rho": [M...], "mu": [[M...]...]} with v x v matrices.

Exit codes: 0 when the checked property holds, 1 when a check ran and found
violations, 2 for unusable input or any other error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .linalg import Matrix, Vector, rank_kernel, rat_str
from .structures import (
    InvalidAlgebra,
    InvalidRepresentation,
    LYAlgebra,
    Representation,
    Violation,
    adjoint_rep,
    check_lya,
    check_representation,
)
from .complexes import ComplexContext, coboundary_matrix, cohomology_dims, wedge_basis
from .rbo import RelRBO, UnverifiedOperator, Wedge2, check_rbo
from .rbo_cohomology import RboComplex, rbo_coboundary_matrix, rbo_cohomology_dims
from .deformation import (
    NotLinearDeformation,
    NotNijenhuisElement,
    NotOrderN,
    TruncatedDeformation,
    extend_deformation,
    nijenhuis_element_check,
    obstruction,
    order_n_check,
)

__all__ = ["ParseError", "InvariantError", "ModelFile", "Report",
           "parse_model", "main"]


class ParseError(Exception):
    """The model file is malformed."""


class InvariantError(Exception):
    """The model file is well-formed but breaks a storage invariant."""


_RAT_RE = re.compile(r"-?\d+(?:/\d+)?")

_TOP_KEYS = {"scalar", "dim", "basis", "binary", "ternary", "representation",
             "operator", "deformation", "elements"}


def _parse_rat(x: Any, where: str) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise ParseError(f"{where}: decimal notation is not exact; "
                         f'write rationals as strings like "-3/2"')
    if isinstance(x, str):
        if not _RAT_RE.fullmatch(x):
            raise ParseError(f"{where}: malformed rational {x!r}")
        try:
            return Fraction(x)
        except ZeroDivisionError:
            raise ParseError(f"{where}: zero denominator in {x!r}") from None
    raise ParseError(f"{where}: expected a rational, got {type(x).__name__}")


def _parse_args_list(entry: Any, count: int, dim: int, where: str) -> Tuple[int, ...]:
    if not isinstance(entry, list) or len(entry) != count:
        raise ParseError(f"{where}: args must be a list of {count} basis indices")
    out = []
    for x in entry:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ParseError(f"{where}: basis indices must be integers")
        if not 1 <= x <= dim:
            raise ParseError(f"{where}: basis index {x} out of range 1..{dim}")
        out.append(x - 1)
    return tuple(out)


def _value_vector(value: Any, names: Sequence[str], where: str) -> Vector:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: value must map basis names to rationals")
    coeffs = {}
    for name, c in value.items():
        if name not in names:
            raise ParseError(f"{where}: unknown basis name {name!r}")
        coeffs[name] = _parse_rat(c, f"{where}, entry {name!r}")
    return tuple(coeffs.get(n, Fraction(0)) for n in names)


def _parse_matrix(obj: Any, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError(f"{where}: expected a matrix with {rows} rows")
    entries = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{where}: row {i + 1} must have {cols} entries")
        entries.append([_parse_rat(x, f"{where}, row {i + 1}") for x in row])
    return Matrix(entries, cols=cols)


@dataclass
class ModelFile:
    """Parsed contents of a .lyat file."""

    path: str
    algebra: LYAlgebra
    rep_kind: Optional[str]                 # None | "adjoint" | "explicit"
    explicit_rep: Optional[Representation]
    operator: Optional[Matrix]
    deformation: Optional[Tuple[Matrix, ...]]
    elements: Dict[str, Wedge2]

    def rep(self) -> Representation:
        if self.rep_kind is None:
            raise ParseError(f"{self.path}: file declares no representation")
        if self.rep_kind == "adjoint":
            return adjoint_rep(self.algebra)
        return self.explicit_rep

    def require_operator(self) -> Matrix:
        if self.operator is None:
            raise ParseError(f"{self.path}: file declares no operator")
        return self.operator


def parse_model(text: str, path: str = "<input>") -> ModelFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    unknown = sorted(set(data) - _TOP_KEYS)
    if unknown:
        raise ParseError(f"{path}: unknown keys: {', '.join(unknown)}")
    if data.get("scalar") != "rational":
        raise ParseError(f'{path}: "scalar" must be "rational"')
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f'{path}: "dim" must be a positive integer')

    if "basis" in data:
        basis = data["basis"]
        if (not isinstance(basis, list) or len(basis) != dim
                or not all(isinstance(n, str) and n for n in basis)
                or len(set(basis)) != dim):
            raise ParseError(f'{path}: "basis" must list {dim} distinct names')
        names = tuple(basis)
    else:
        names = tuple(f"e{i + 1}" for i in range(dim))

    binary: Dict[Tuple[int, int], Vector] = {}
    for pos, entry in enumerate(data.get("binary", [])):
        where = f"{path}: binary entry {pos + 1}"
        if not isinstance(entry, dict) or set(entry) != {"args", "value"}:
            raise ParseError(f"{where}: expected keys args and value")
        i, j = _parse_args_list(entry["args"], 2, dim, where)
        if i >= j:
            raise InvariantError(
                f"{where}: constants are stored for ascending indices only "
                f"(got [{i + 1}, {j + 1}]); state the i < j case and the skew "
                f"completion is implied")
        if (i, j) in binary:
            raise ParseError(f"{where}: duplicate args [{i + 1}, {j + 1}]")
        binary[(i, j)] = _value_vector(entry["value"], names, where)

    ternary: Dict[Tuple[int, int, int], Vector] = {}
    for pos, entry in enumerate(data.get("ternary", [])):
        where = f"{path}: ternary entry {pos + 1}"
        if not isinstance(entry, dict) or set(entry) != {"args", "value"}:
            raise ParseError(f"{where}: expected keys args and value")
        i, j, k = _parse_args_list(entry["args"], 3, dim, where)
        if i >= j:
            raise InvariantError(
                f"{where}: constants are stored for ascending first indices "
                f"only (got [{i + 1}, {j + 1}, {k + 1}])")
        if (i, j, k) in ternary:
            raise ParseError(f"{where}: duplicate args [{i + 1}, {j + 1}, {k + 1}]")
        ternary[(i, j, k)] = _value_vector(entry["value"], names, where)

    algebra = LYAlgebra(dim, binary=binary, ternary=ternary, basis_names=names)

    rep_kind: Optional[str] = None
    explicit_rep: Optional[Representation] = None
    dim_v: Optional[int] = None
    if "representation" in data:
        spec = data["representation"]
        if spec == "adjoint":
            rep_kind = "adjoint"
            dim_v = dim
        elif isinstance(spec, dict):
            if set(spec) != {"dim", "rho", "mu"}:
                raise ParseError(f"{path}: representation needs keys dim, rho, mu")
            v = spec["dim"]
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ParseError(f"{path}: representation dim must be a nonnegative integer")
            rho_spec = spec["rho"]
            if not isinstance(rho_spec, list) or len(rho_spec) != dim:
                raise ParseError(f"{path}: rho must list {dim} matrices")
            rho = [_parse_matrix(mx, v, v, f"{path}: rho[{i + 1}]")
                   for i, mx in enumerate(rho_spec)]
            mu_spec = spec["mu"]
            if not isinstance(mu_spec, list) or len(mu_spec) != dim \
                    or not all(isinstance(row, list) and len(row) == dim for row in mu_spec):
                raise ParseError(f"{path}: mu must be a {dim}x{dim} array of matrices")
            mu = [[_parse_matrix(mu_spec[i][j], v, v, f"{path}: mu[{i + 1}][{j + 1}]")
                   for j in range(dim)] for i in range(dim)]
            rep_kind = "explicit"
            explicit_rep = Representation(algebra, v, rho, mu)
            dim_v = v
        else:
            raise ParseError(f'{path}: representation must be "adjoint" or an object')

    operator: Optional[Matrix] = None
    if "operator" in data:
        if dim_v is None:
            raise ParseError(f"{path}: operator requires a representation")
        operator = _parse_matrix(data["operator"], dim, dim_v, f"{path}: operator")

    deformation: Optional[Tuple[Matrix, ...]] = None
    if "deformation" in data:
        spec = data["deformation"]
        if not isinstance(spec, dict) or set(spec) != {"terms"}:
            raise ParseError(f"{path}: deformation needs the single key terms")
        if operator is None:
            raise ParseError(f"{path}: deformation requires an operator")
        terms_spec = spec["terms"]
        if not isinstance(terms_spec, list) or not terms_spec:
            raise ParseError(f"{path}: deformation terms must be a nonempty list")
        terms = tuple(_parse_matrix(mx, dim, dim_v, f"{path}: deformation term {k}")
                      for k, mx in enumerate(terms_spec))
        if terms[0] != operator:
            raise InvariantError(f"{path}: deformation term 0 must equal the operator")
        deformation = terms

    elements: Dict[str, Wedge2] = {}
    if "elements" in data:
        spec = data["elements"]
        if not isinstance(spec, dict):
            raise ParseError(f"{path}: elements must map names to wedge terms")
        for name, terms_spec in spec.items():
            if not isinstance(name, str) or not name:
                raise ParseError(f"{path}: element names must be nonempty strings")
            where = f"{path}: element {name!r}"
            if not isinstance(terms_spec, list):
                raise ParseError(f"{where}: expected a list of wedge terms")
            coeffs: Dict[Tuple[int, int], Fraction] = {}
            for pos, term in enumerate(terms_spec):
                twhere = f"{where}, term {pos + 1}"
                if not isinstance(term, dict) or set(term) != {"args", "coeff"}:
                    raise ParseError(f"{twhere}: expected keys args and coeff")
                i, j = _parse_args_list(term["args"], 2, dim, twhere)
                if i >= j:
                    raise InvariantError(
                        f"{twhere}: wedge terms are stored for ascending "
                        f"indices only (got [{i + 1}, {j + 1}])")
                if (i, j) in coeffs:
                    raise ParseError(f"{twhere}: duplicate args [{i + 1}, {j + 1}]")
                coeffs[(i, j)] = _parse_rat(term["coeff"], twhere)
            elements[name] = Wedge2.from_dict(dim, coeffs)

    return ModelFile(path=path, algebra=algebra, rep_kind=rep_kind,
                     explicit_rep=explicit_rep, operator=operator,
                     deformation=deformation, elements=elements)


def _load_model(path: str) -> ModelFile:
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return parse_model(fh.read(), path)
        except OSError as exc:
            raise ParseError(f"{path}: {exc}") from None
    if os.path.basename(path) == path:
        res = resources.files("lieyamaguti").joinpath("data", path)
        if res.is_file():
            return parse_model(res.read_text(encoding="utf-8"), path)
    raise ParseError(f"{path}: no such file on disk or among bundled examples "
                     f"(see `lyat examples list`)")


def _bundled_names() -> List[str]:
    data = resources.files("lieyamaguti").joinpath("data")
    return sorted(p.name for p in data.iterdir() if p.name.endswith(".lyat"))


# -- violation rendering ------------------------------------------------------

# argument domains per identity: 'g' = algebra basis index, 'v' = module
# basis index. Labels with an @t^s suffix match on the part before '@'.
_ARG_TABLE = {
    "jacobi-defect": "ggg",
    "cyclic-ternary": "gggg",
    "binary-derivation": "gggg",
    "ternary-derivation": "ggggg",
    "mu-bracket-left": "gggv",
    "mu-bracket-right": "gggv",
    "rho-triple-commutator": "gggv",
    "d-bracket-cyclic": "gggv",
    "mu-composition": "ggggv",
    "mu-triple-commutator": "ggggv",
    "d-triple-commutator": "ggggv",
    "mu-triple-expansion": "ggggv",
    "nijenhuis-binary": "gg",
    "nijenhuis-ternary": "ggg",
    "rota-baxter-binary": "vv",
    "rota-baxter-ternary": "vvv",
    "phi-binary-hom": "gg",
    "phi-ternary-hom": "ggg",
    "t-intertwine": "v",
    "rho-intertwine": "gv",
    "mu-intertwine": "ggv",
    "d-intertwine": "ggv",
    "bracket-binary": "gg",
    "bracket-ternary-quadratic": "ggg",
    "bracket-ternary-cubic": "ggg",
    "mu-quadratic": "ggv",
    "mu-cubic": "ggv",
    "closing": "v",
    "binary": "vv",
    "ternary": "vvv",
    "binary-hom": "gg",
    "ternary-hom": "ggg",
}

# identities whose residual lives in the module; all others land in g
_V_RESIDUAL = frozenset({
    "mu-bracket-left", "mu-bracket-right", "rho-triple-commutator",
    "d-bracket-cyclic", "mu-composition", "mu-triple-commutator",
    "d-triple-commutator", "mu-triple-expansion", "rho-intertwine",
    "mu-intertwine", "d-intertwine", "mu-quadratic", "mu-cubic",
})


def _combo(vec: Vector, names: Sequence[str]) -> str:
    parts = []
    for c, n in zip(vec, names):
        if not c:
            continue
        if not parts:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        c = abs(c)
        parts.append(f"{sign}{n}" if c == 1 else f"{sign}{rat_str(c)}*{n}")
    return "".join(parts) if parts else "0"


def _render_violation(v: Violation, g_names: Sequence[str],
                      v_names: Sequence[str], plain: bool = False) -> Dict[str, Any]:
    base = v.identity.split("@", 1)[0]
    domains = _ARG_TABLE.get(base, "")
    if plain and base == "closing":
        domains = "g"
    if len(domains) != len(v.args):
        domains = "g" * len(v.args)
    args = [g_names[a] if d == "g" else v_names[a]
            for d, a in zip(domains, v.args)]
    res_names = v_names if base in _V_RESIDUAL else g_names
    return {"identity": v.identity, "args": args,
            "residual": _combo(v.residual, res_names)}


def _render_violations(viols, g_names, v_names, plain=False) -> List[Dict[str, Any]]:
    return [_render_violation(v, g_names, v_names, plain=plain) for v in viols]


def _render_matrix(m: Matrix) -> List[List[str]]:
    return [[rat_str(x) for x in row] for row in m.entries]


def _module_names(dim_v: int) -> Tuple[str, ...]:
    return tuple(f"u{i + 1}" for i in range(dim_v))


# -- reports ------------------------------------------------------------------

_EXIT = {"ok": 0, "violated": 1, "error": 2}


@dataclass
class Report:
    command: str
    status: str
    details: Dict[str, Any]

    @property
    def exit_code(self) -> int:
        return _EXIT[self.status]


def _emit(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"command": report.command, "status": report.status,
                           "details": report.details}, indent=2)
    lines = [f"command: {report.command}", f"status: {report.status}"]
    lines.extend(_text_lines(report.details))
    return "\n".join(lines)


def _text_scalar(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, str) and "\n" in v:
                lines.append(f"{pad}{k}:")
                lines.extend(f"{pad}  {ln}" for ln in v.splitlines())
            elif isinstance(v, (dict, list)):
                if v:
                    lines.append(f"{pad}{k}:")
                    lines.extend(_text_lines(v, indent + 1))
                else:
                    lines.append(f"{pad}{k}: []" if isinstance(v, list) else f"{pad}{k}: {{}}")
            else:
                lines.append(f"{pad}{k}: {_text_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) and set(item) == {"identity", "args", "residual"}:
                lines.append(f"{pad}- {item['identity']} at "
                             f"({', '.join(item['args'])}): residual {item['residual']}")
            elif isinstance(item, list) and all(not isinstance(x, (dict, list)) for x in item):
                lines.append(f"{pad}- [{', '.join(_text_scalar(x) for x in item)}]")
            elif isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_text_scalar(item)}")
    else:
        lines.append(f"{pad}{_text_scalar(value)}")
    return lines


# -- commands -----------------------------------------------------------------

def _validated_rep(model: ModelFile) -> Representation:
    """Representation of a validated algebra, itself validated."""
    alg_report = check_lya(model.algebra)
    if not alg_report.valid:
        first = alg_report.violations[0]
        raise InvalidAlgebra(f"algebra fails {first.identity} at basis tuple {first.args}")
    r = model.rep()
    rep_report = check_representation(r)
    if not rep_report.valid:
        first = rep_report.violations[0]
        raise InvalidRepresentation(f"representation fails {first.identity} at {first.args}")
    return r


def _cmd_check_algebra(model: ModelFile) -> Report:
    report = check_lya(model.algebra)
    gn = model.algebra.basis_names
    return Report("check-algebra", "ok" if report.valid else "violated", {
        "dim": model.algebra.dim,
        "basis": list(gn),
        "violations": _render_violations(report.violations, gn, gn),
    })


def _cmd_check_rep(model: ModelFile) -> Report:
    r = model.rep()
    report = check_representation(r)
    gn = model.algebra.basis_names
    vn = _module_names(r.dim_v)
    return Report("check-rep", "ok" if report.valid else "violated", {
        "dim": model.algebra.dim,
        "dim_v": r.dim_v,
        "kind": model.rep_kind,
        "violations": _render_violations(report.violations, gn, vn),
    })


def _cmd_check_rbo(model: ModelFile) -> Report:
    r = _validated_rep(model)
    t = model.require_operator()
    report = check_rbo(model.algebra, r, t)
    gn = model.algebra.basis_names
    vn = _module_names(r.dim_v)
    return Report("check-rbo", "ok" if report.valid else "violated", {
        "dim": model.algebra.dim,
        "dim_v": r.dim_v,
        "operator": _render_matrix(t),
        "violations": _render_violations(report.violations, gn, vn),
    })


def _cmd_cohomology(model: ModelFile, args) -> Report:
    degree = args.degree
    if degree < 1:
        raise ValueError(f"cohomology degree must be >= 1, got {degree}")
    if degree > 3 and not args.force:
        raise ValueError(
            f"degree {degree} cochain spaces grow exponentially; "
            f"pass --force to compute anyway")
    details: Dict[str, Any] = {"degree": degree}
    r = _validated_rep(model)
    if args.rbo:
        o = RelRBO.build(model.algebra, r, model.require_operator())
        rc = RboComplex.build(o)
        summary = rbo_cohomology_dims(rc, degree)
        details["complex"] = "operator"
        kernel_matrix = rbo_coboundary_matrix(rc, degree) if args.kernel_dump else None
    else:
        ctx = ComplexContext(model.algebra, r, validate=False)
        summary = cohomology_dims(ctx, degree)
        details["complex"] = "bare"
        kernel_matrix = coboundary_matrix(ctx, degree) if args.kernel_dump else None
    details["dim_cochains"] = summary.dim_cochains
    details["dim_cocycles"] = summary.dim_cocycles
    details["dim_coboundaries"] = summary.dim_coboundaries
    details["dim_h"] = summary.dim_h
    if kernel_matrix is not None:
        _, kernel = rank_kernel(kernel_matrix)
        details["kernel_basis"] = [[rat_str(x) for x in vec] for vec in kernel]
    return Report("cohomology", "ok", details)


def _cmd_nijenhuis(model: ModelFile, args) -> Report:
    r = _validated_rep(model)
    o = RelRBO.build(model.algebra, r, model.require_operator())
    gn = model.algebra.basis_names
    vn = _module_names(r.dim_v)
    if args.element is not None:
        if args.element not in model.elements:
            raise ParseError(f"{model.path}: no element named {args.element!r}")
        chosen = [(args.element, model.elements[args.element])]
    else:
        chosen = [(f"{gn[i]}^{gn[j]}", Wedge2.basis(model.algebra.dim, i, j))
                  for (i, j) in wedge_basis(model.algebra.dim)]
    entries = []
    all_ok = True
    for name, x in chosen:
        nrep = nijenhuis_element_check(o, x)
        all_ok = all_ok and nrep.is_nijenhuis
        entry: Dict[str, Any] = {
            "name": name,
            "is_nijenhuis": nrep.is_nijenhuis,
            "conditions": [
                {"identity": label, "valid": rep.valid,
                 "violations": _render_violations(rep.violations, gn, vn)}
                for label, rep in nrep.conditions
            ],
        }
        if nrep.plain_conditions is not None:
            entry["plain_conditions"] = [
                {"identity": label, "valid": rep.valid,
                 "violations": _render_violations(rep.violations, gn, vn, plain=True)}
                for label, rep in nrep.plain_conditions
            ]
        else:
            entry["plain_conditions"] = None
        entries.append(entry)
    return Report("nijenhuis", "ok" if all_ok else "violated", {"elements": entries})


def _cmd_deform(model: ModelFile, args) -> Report:
    r = _validated_rep(model)
    o = RelRBO.build(model.algebra, r, model.require_operator())
    if model.deformation is None:
        raise ParseError(f"{model.path}: file declares no deformation")
    d = TruncatedDeformation(model.deformation)
    gn = model.algebra.basis_names
    vn = _module_names(r.dim_v)

    if args.action == "check":
        report = order_n_check(o, d)
        return Report("deform", "ok" if report.valid else "violated", {
            "action": "check",
            "order": d.order,
            "violations": _render_violations(report.violations, gn, vn),
        })

    if args.action == "obstruction":
        result = obstruction(o, d)
        return Report("deform", "ok" if result.trivial else "violated", {
            "action": "obstruction",
            "order": d.order,
            "obstruction_is_zero": result.ob.is_zero(),
            "is_cocycle": result.is_cocycle,
            "trivial": result.trivial,
            "witness": _render_matrix(result.witness.as_matrix())
                       if result.witness is not None else None,
        })

    # extend
    target = args.max_order if args.max_order is not None else d.order + 1
    if target <= d.order:
        raise ValueError(f"--max-order must exceed the current order {d.order}")
    start = d.order
    stuck: Optional[int] = None
    while d.order < target:
        extended = extend_deformation(o, d)
        if extended is None:
            stuck = d.order
            break
        d = extended
    return Report("deform", "ok" if d.order == target else "violated", {
        "action": "extend",
        "start_order": start,
        "target_order": target,
        "achieved_order": d.order,
        "stuck_at": stuck,
        "terms": [_render_matrix(t) for t in d.terms],
    })


def _cmd_examples(args) -> Report:
    if args.action == "list":
        return Report("examples", "ok", {"examples": _bundled_names()})
    if not args.name:
        raise ParseError("examples show requires a name (see `lyat examples list`)")
    res = resources.files("lieyamaguti").joinpath("data", args.name)
    if os.path.basename(args.name) != args.name or not res.is_file():
        raise ParseError(f"no bundled example named {args.name!r}")
    return Report("examples", "ok", {"name": args.name,
                                     "content": res.read_text(encoding="utf-8")})


# -- entry point --------------------------------------------------------------

def _add_format(sp) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text",
                    help="output format (default: text)")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lyat",
        description="Exact checks and cohomology for Lie-Yamaguti algebras "
                    "and relative Rota-Baxter operators on them.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check-algebra", help="verify the algebra axioms")
    sp.add_argument("file")
    _add_format(sp)

    sp = sub.add_parser("check-rep", help="verify the representation conditions")
    sp.add_argument("file")
    _add_format(sp)

    sp = sub.add_parser("check-rbo", help="verify the Rota-Baxter identities")
    sp.add_argument("file")
    _add_format(sp)

    sp = sub.add_parser("cohomology", help="cocycle/coboundary/quotient dimensions")
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, required=True, help="cochain degree (>= 1)")
    sp.add_argument("--rbo", action="store_true",
                    help="operator complex instead of the bare algebra complex")
    sp.add_argument("--kernel-dump", action="store_true",
                    help="include a basis of the cocycle space (flat coordinates)")
    sp.add_argument("--force", action="store_true",
                    help="allow degrees above 3 despite the cost")
    _add_format(sp)

    sp = sub.add_parser("nijenhuis", help="check wedge elements for the Nijenhuis conditions")
    sp.add_argument("file")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--element", help="name of an element from the file")
    grp.add_argument("--all-basis", action="store_true",
                     help="check every basis wedge e_i^e_j")
    _add_format(sp)

    sp = sub.add_parser("deform", help="order-n checks, obstructions, extensions")
    sp.add_argument("action", choices=("check", "obstruction", "extend"))
    sp.add_argument("file")
    sp.add_argument("--max-order", type=int, default=None,
                    help="extend until this order (default: current order + 1)")
    _add_format(sp)

    sp = sub.add_parser("examples", help="list or show bundled model files")
    sp.add_argument("action", choices=("list", "show"))
    sp.add_argument("name", nargs="?")
    _add_format(sp)

    return p


def _dispatch(args) -> Report:
    if args.command == "examples":
        return _cmd_examples(args)
    model = _load_model(args.file)
    if args.command == "check-algebra":
        return _cmd_check_algebra(model)
    if args.command == "check-rep":
        return _cmd_check_rep(model)
    if args.command == "check-rbo":
        return _cmd_check_rbo(model)
    if args.command == "cohomology":
        return _cmd_cohomology(model, args)
    if args.command == "nijenhuis":
        return _cmd_nijenhuis(model, args)
    assert args.command == "deform"
    return _cmd_deform(model, args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = _dispatch(args)
    except (ParseError, InvariantError, InvalidAlgebra, InvalidRepresentation,
            UnverifiedOperator, NotOrderN, NotNijenhuisElement,
            NotLinearDeformation, ValueError) as exc:
        report = Report(args.command, "error", {"message": str(exc)})
    print(_emit(report, args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
