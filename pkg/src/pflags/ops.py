"""JSON-in, JSON-out wrappers around every library operation.

The CLI subcommands and the fixture selftest both dispatch through this
table, so fixtures exercise exactly the surface the CLI exposes.  Payload
validation errors raise ParseError; domain violations raise through from the
library untouched.
"""

from __future__ import annotations

from typing import Any, Callable

from . import elliptic, hitchin, jsonio, pone
from .errors import ParseError
from .poly import find_irreducible, roots_in_field
from .pone import BundleP1
from .ratfunc import in_frobenius_subfield, sqrt_ratfunc


def _require(payload: Any, *keys: str) -> None:
    if not isinstance(payload, dict):
        raise ParseError("input payload must be a JSON object")
    missing = [k for k in keys if k not in payload]
    if missing:
        raise ParseError(f"input payload is missing {', '.join(missing)}")


def _int(payload: dict, key: str) -> int:
    v = payload.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{key} must be an integer")
    return v


# -- algebra ----------------------------------------------------------------------


def op_find_irreducible(payload: dict) -> Any:
    _require(payload, "p", "k")
    return jsonio.poly_to_json(find_irreducible(_int(payload, "p"), _int(payload, "k")))


def op_charpoly(payload: dict) -> Any:
    _require(payload, "field", "A")
    field = jsonio.field_from_json(payload["field"])
    m = jsonio.matrix_from_json(field, payload["A"])
    from .matrix import charpoly_berkowitz

    return [jsonio.ratfunc_to_json(c) for c in charpoly_berkowitz(m)]


def op_sqrt_ratfunc(payload: dict) -> Any:
    _require(payload, "field", "f")
    field = jsonio.field_from_json(payload["field"])
    root = sqrt_ratfunc(jsonio.ratfunc_from_json(field, payload["f"]))
    return None if root is None else jsonio.ratfunc_to_json(root)


def op_in_frobenius_subfield(payload: dict) -> Any:
    _require(payload, "field", "f", "s")
    field = jsonio.field_from_json(payload["field"])
    return in_frobenius_subfield(jsonio.ratfunc_from_json(field, payload["f"]),
                                 _int(payload, "s"))


def op_roots_in_field(payload: dict) -> Any:
    _require(payload, "field", "f")
    field = jsonio.field_from_json(payload["field"])
    f = jsonio.poly_from_json(field, payload["f"])
    return [jsonio.elem_to_json(field, a) for a in roots_in_field(f)]


# -- projective line ------------------------------------------------------------------


def op_admits_level(payload: dict) -> Any:
    _require(payload, "degrees", "p", "m")
    degrees = payload["degrees"]
    if not isinstance(degrees, list) or not all(isinstance(d, int) for d in degrees):
        raise ParseError("degrees must be an integer array")
    return pone.admits_level(BundleP1(degrees), _int(payload, "p"), _int(payload, "m"))


def op_canonical_connection(payload: dict) -> Any:
    _require(payload, "degrees", "field", "m")
    field = jsonio.field_from_json(payload["field"])
    d = pone.canonical_connection(BundleP1(payload["degrees"]), field, _int(payload, "m"))
    return jsonio.connection_to_json(d)


def op_validate(payload: dict) -> Any:
    _require(payload, "connection")
    d = jsonio.connection_from_json(payload["connection"])
    violations = pone.validate(d.base)
    return [{"row": v.row, "col": v.col, "order": v.order} for v in violations]


def op_pm1_curvature(payload: dict) -> Any:
    _require(payload, "connection")
    d = jsonio.connection_from_json(payload["connection"])
    psi = pone.pm1_curvature(d)
    return {"psi": jsonio.matrix_to_json(psi), "zero": psi.is_zero()}


def op_frobenius_pullback(payload: dict) -> Any:
    _require(payload, "connection", "s")
    d = jsonio.connection_from_json(payload["connection"])
    out = pone.frobenius_pullback(d, _int(payload, "s"))
    return {
        "connection": jsonio.connection_to_json(out),
        "underlying_degrees": list(out.underlying_degrees()),
        "psi": jsonio.matrix_to_json(pone.pm1_curvature(out)),
    }


def op_tensor(payload: dict) -> Any:
    _require(payload, "a", "b")
    a = jsonio.connection_from_json(payload["a"], "a")
    b = jsonio.connection_from_json(payload["b"], "b")
    if a.m or b.m:
        raise ParseError("tensor operates on level-0 connections")
    conn, perm = pone.tensor(a.base, b.base)
    return {
        "connection": jsonio.connection_to_json(pone.as_level(conn)),
        "perm": list(perm),
        "valid": not pone.validate(conn),
    }


def op_dual(payload: dict) -> Any:
    _require(payload, "connection")
    d = jsonio.connection_from_json(payload["connection"])
    if d.m:
        raise ParseError("dual operates on level-0 connections")
    conn, perm = pone.dual(d.base)
    return {
        "connection": jsonio.connection_to_json(pone.as_level(conn)),
        "perm": list(perm),
        "valid": not pone.validate(conn),
    }


def op_cartier_descent(payload: dict) -> Any:
    _require(payload, "connection")
    d = jsonio.connection_from_json(payload["connection"])
    if d.m:
        raise ParseError("descent operates on level-0 connections")
    bundle, frame = pone.cartier_descent(d.base)
    return {
        "descended_degrees": list(bundle.degrees),
        "frame": jsonio.matrix_to_json(frame),
    }


def op_complete_flag(payload: dict) -> Any:
    _require(payload, "connection")
    d = jsonio.connection_from_json(payload["connection"])
    flag = pone.complete_flag(d)
    return jsonio.flag_to_json(flag)


def op_verify_flag(payload: dict) -> Any:
    _require(payload, "connection", "flag")
    d = jsonio.connection_from_json(payload["connection"])
    flag = jsonio.flag_from_json(payload["flag"])
    return pone.verify_flag(d.base, flag)


# -- elliptic ---------------------------------------------------------------------------


def op_atiyah_profile(payload: dict) -> Any:
    _require(payload, "r", "d")
    pr = elliptic.atiyah_profile(_int(payload, "r"), _int(payload, "d"))
    return {
        "pairs": [list(p) for p in pr.pairs],
        "degL": list(pr.deg_l),
        "grRanks": list(pr.gr_ranks),
        "m": pr.m,
        "ell": pr.ell,
        "h": pr.h,
    }


def _group_and_atoms(payload: dict, key: str = "atoms"):
    group = jsonio.group_from_json(payload.get("group", {"factors": []}))
    atoms_json = payload.get(key)
    if not isinstance(atoms_json, list) or not atoms_json:
        raise ParseError(f"{key} must be a nonempty array of atoms")
    atoms = [jsonio.atom_from_json(group, a, f"{key}[{i}]") for i, a in enumerate(atoms_json)]
    return group, atoms


def op_line_classes(payload: dict) -> Any:
    _require(payload, "atom")
    group = jsonio.group_from_json(payload.get("group", {"factors": []}))
    atom = jsonio.atom_from_json(group, payload["atom"])
    return [jsonio.pic_class_to_json(c) for c in elliptic.line_classes(atom)]


def op_admits_connection(payload: dict) -> Any:
    _require(payload, "atoms", "p")
    _, atoms = _group_and_atoms(payload)
    return elliptic.admits_connection(atoms, _int(payload, "p"))


def op_flag_skeleton(payload: dict) -> Any:
    _require(payload, "atoms", "p")
    _, atoms = _group_and_atoms(payload)
    return jsonio.skeleton_to_json(elliptic.flag_skeleton(atoms, _int(payload, "p")))


def op_hom_constraint(payload: dict) -> Any:
    _require(payload, "src", "dst")
    group = jsonio.group_from_json(payload.get("group", {"factors": []}))
    src = jsonio.atom_from_json(group, payload["src"], "src")
    dst = jsonio.atom_from_json(group, payload["dst"], "dst")
    return elliptic.hom_constraint(src, dst).value


def op_peel_order(payload: dict) -> Any:
    _require(payload, "atoms")
    _, atoms = _group_and_atoms(payload)
    return [jsonio.pic_class_to_json(c) for c in elliptic.peel_order(atoms)]


# -- hyperbolic chart ---------------------------------------------------------------------


def op_p_curvature_chart(payload: dict) -> Any:
    _require(payload, "chart")
    chart = jsonio.chart_from_json(payload["chart"])
    return jsonio.matrix_to_json(hitchin.p_curvature_chart(chart))


def op_char_poly_psi(payload: dict) -> Any:
    _require(payload, "chart")
    chart = jsonio.chart_from_json(payload["chart"])
    return jsonio.charpoly_to_json(hitchin.char_poly_psi(chart))


def op_hitchin_dims(payload: dict) -> Any:
    _require(payload, "g", "r")
    dims = hitchin.hitchin_dims(_int(payload, "g"), _int(payload, "r"))
    return {"dimB": dims.dim_b, "dimD": dims.dim_d,
            "gamma_nondominant": dims.gamma_nondominant}


def op_no_flag_certificate(payload: dict) -> Any:
    _require(payload, "chart")
    chart = jsonio.chart_from_json(payload["chart"])
    return jsonio.certificate_to_json(hitchin.no_flag_certificate_rank2(chart))


def op_nilpotent_flag(payload: dict) -> Any:
    _require(payload, "chart")
    chart = jsonio.chart_from_json(payload["chart"])
    result = hitchin.nilpotent_flag_chart(chart)
    return {"gauge": jsonio.matrix_to_json(result.gauge), "perm": list(result.perm)}


OP_TABLE: dict[str, Callable[[dict], Any]] = {
    "find_irreducible": op_find_irreducible,
    "charpoly": op_charpoly,
    "sqrt_ratfunc": op_sqrt_ratfunc,
    "in_frobenius_subfield": op_in_frobenius_subfield,
    "roots_in_field": op_roots_in_field,
    "admits_level": op_admits_level,
    "canonical_connection": op_canonical_connection,
    "validate": op_validate,
    "pm1_curvature": op_pm1_curvature,
    "frobenius_pullback": op_frobenius_pullback,
    "tensor": op_tensor,
    "dual": op_dual,
    "cartier_descent": op_cartier_descent,
    "complete_flag": op_complete_flag,
    "verify_flag": op_verify_flag,
    "atiyah_profile": op_atiyah_profile,
    "line_classes": op_line_classes,
    "admits_connection": op_admits_connection,
    "flag_skeleton": op_flag_skeleton,
    "hom_constraint": op_hom_constraint,
    "peel_order": op_peel_order,
    "p_curvature_chart": op_p_curvature_chart,
    "char_poly_psi": op_char_poly_psi,
    "hitchin_dims": op_hitchin_dims,
    "no_flag_certificate": op_no_flag_certificate,
    "nilpotent_flag": op_nilpotent_flag,
}
