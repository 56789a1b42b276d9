"""JSON codecs for every value the library exchanges.

Encodings (documented in docs/formats.md): a field element is an integer for
prime fields and an ascending residue array otherwise; polynomials are
ascending coefficient arrays; rational functions are {"num", "den"} pairs;
matrices are row-major nested arrays.  Decoders raise ParseError with a
location string on malformed input; encoders produce values whose canonical
json.dumps is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .elliptic import AtiyahAtom, FlagSkeleton, Pic0Group, PicClass
from .errors import InvalidFieldError, ParseError, PflagsError
from .fields import Field, GF
from .hitchin import ChartConn, CharPolyP, NoFlagCertificate
from .matrix import MatRF
from .poly import Poly
from .pone import BundleP1, Conn0, DmBundle, FlagP1
from .ratfunc import RatFunc


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj: Any) -> str:
    return hashlib.sha256(canonical_dumps(obj).encode()).hexdigest()


def _expect(cond: bool, where: str, msg: str):
    if not cond:
        raise ParseError(f"{where}: {msg}")


# -- fields and algebra ----------------------------------------------------------


def field_to_json(field: Field) -> dict:
    out = {"p": field.p, "k": field.k}
    if field.k > 1:
        out["modulus"] = list(field.modulus)
    return out


def field_from_json(obj: Any, where: str = "field") -> Field:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect(isinstance(obj.get("p"), int), where, "p must be an integer")
    k = obj.get("k", 1)
    _expect(isinstance(k, int), where, "k must be an integer")
    modulus = obj.get("modulus")
    if modulus is not None:
        _expect(isinstance(modulus, list) and all(isinstance(c, int) for c in modulus),
                where, "modulus must be an integer array")
        modulus = tuple(modulus)
    try:
        return GF(obj["p"], k, modulus)
    except InvalidFieldError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def elem_to_json(field: Field, e: int) -> Any:
    return e if field.k == 1 else field.coeffs(e)


def elem_from_json(field: Field, obj: Any, where: str = "element") -> int:
    if isinstance(obj, int):
        _expect(0 <= obj < field.q if field.k == 1 else 0 <= obj < field.p,
                where, f"residue out of range for {field!r}")
        return obj if field.k == 1 else field.from_coeffs([obj])
    _expect(isinstance(obj, list) and all(isinstance(c, int) for c in obj),
            where, "expected an integer or residue array")
    _expect(all(0 <= c < field.p for c in obj), where, "residues must be in [0, p)")
    try:
        return field.from_coeffs(obj)
    except InvalidFieldError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def poly_to_json(f: Poly) -> list:
    return [elem_to_json(f.field, c) for c in f.coeffs]


def poly_from_json(field: Field, obj: Any, where: str = "poly") -> Poly:
    _expect(isinstance(obj, list), where, "expected a coefficient array")
    return Poly(field, [elem_from_json(field, c, f"{where}[{i}]") for i, c in enumerate(obj)])


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(field: Field, obj: Any, where: str = "ratfunc") -> RatFunc:
    if isinstance(obj, list):  # a bare polynomial is accepted
        return RatFunc(poly_from_json(field, obj, where))
    _expect(isinstance(obj, dict) and "num" in obj and "den" in obj,
            where, "expected {num, den}")
    num = poly_from_json(field, obj["num"], f"{where}.num")
    den = poly_from_json(field, obj["den"], f"{where}.den")
    if den.is_zero():
        raise ParseError(f"{where}: zero denominator")
    return RatFunc(num, den)


def matrix_to_json(m: MatRF) -> list:
    return [[ratfunc_to_json(e) for e in row] for row in m.rows]


def matrix_from_json(field: Field, obj: Any, where: str = "matrix") -> MatRF:
    _expect(isinstance(obj, list) and obj, where, "expected a nonempty nested array")
    rows = []
    for i, row in enumerate(obj):
        _expect(isinstance(row, list) and len(row) == len(obj), where,
                f"row {i} must have length {len(obj)}")
        rows.append([ratfunc_from_json(field, e, f"{where}[{i}][{j}]")
                     for j, e in enumerate(row)])
    try:
        return MatRF(field, rows)
    except PflagsError as exc:
        raise ParseError(f"{where}: {exc}") from exc


# -- projective line ---------------------------------------------------------------


def connection_to_json(d: DmBundle) -> dict:
    base = d.base
    return {
        "field": field_to_json(base.field),
        "level": d.m,
        "twist_degrees": list(base.degrees),
        "A": [[poly_to_json(e) for e in row] for row in base.A],
    }


def connection_from_json(obj: Any, where: str = "connection") -> DmBundle:
    _expect(isinstance(obj, dict), where, "expected an object")
    field = field_from_json(obj.get("field"), f"{where}.field")
    level = obj.get("level", 0)
    _expect(isinstance(level, int) and level >= 0, where, "level must be a nonnegative integer")
    degs = obj.get("twist_degrees")
    _expect(isinstance(degs, list) and degs and all(isinstance(x, int) for x in degs),
            where, "twist_degrees must be a nonempty integer array")
    sorted_degs = sorted(degs, reverse=True)
    _expect(list(degs) == sorted_degs, where, "twist_degrees must be descending")
    amat = obj.get("A")
    _expect(isinstance(amat, list) and len(amat) == len(degs), where,
            f"A must be a {len(degs)}x{len(degs)} matrix of polynomials")
    rows = []
    for i, row in enumerate(amat):
        _expect(isinstance(row, list) and len(row) == len(degs), where,
                f"A row {i} must have length {len(degs)}")
        rows.append([poly_from_json(field, e, f"{where}.A[{i}][{j}]")
                     for j, e in enumerate(row)])
    base = Conn0(field, BundleP1(degs), rows)
    return DmBundle(level, base)


def flag_to_json(f: FlagP1) -> dict:
    return {"perm": list(f.perm)}


def flag_from_json(obj: Any, where: str = "flag") -> FlagP1:
    _expect(isinstance(obj, dict) and isinstance(obj.get("perm"), list), where,
            "expected {perm: [...]}")
    try:
        return FlagP1(obj["perm"])
    except PflagsError as exc:
        raise ParseError(f"{where}: {exc}") from exc


# -- elliptic -----------------------------------------------------------------------


def group_to_json(g: Pic0Group) -> dict:
    return {"factors": list(g.factors)}


def group_from_json(obj: Any, where: str = "group") -> Pic0Group:
    _expect(isinstance(obj, dict) and isinstance(obj.get("factors"), list), where,
            "expected {factors: [...]}")
    _expect(all(isinstance(n, int) and n >= 1 for n in obj["factors"]), where,
            "factors must be integers >= 1")
    return Pic0Group(tuple(obj["factors"]))


def atom_to_json(a: AtiyahAtom) -> dict:
    return {"r": a.r, "d": a.d, "lam": list(a.lam)}


def atom_from_json(group: Pic0Group, obj: Any, where: str = "atom") -> AtiyahAtom:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect(isinstance(obj.get("r"), int) and isinstance(obj.get("d"), int), where,
            "r and d must be integers")
    lam = obj.get("lam", [0] * len(group.factors))
    _expect(isinstance(lam, list) and all(isinstance(t, int) for t in lam), where,
            "lam must be an integer array")
    try:
        return AtiyahAtom(group, obj["r"], obj["d"], tuple(lam))
    except PflagsError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def pic_class_to_json(c: PicClass) -> dict:
    return {"degree": c.degree, "tor": list(c.tor)}


def skeleton_to_json(s: FlagSkeleton) -> list:
    return [{"degree": cls.degree, "tor": list(cls.tor), "mult": m} for cls, m in s.entries]


# -- hyperbolic chart ------------------------------------------------------------------


def chart_to_json(c: ChartConn) -> dict:
    return {"field": field_to_json(c.field), "r": c.r, "A": matrix_to_json(c.A)}


def chart_from_json(obj: Any, where: str = "chart") -> ChartConn:
    _expect(isinstance(obj, dict), where, "expected an object")
    field = field_from_json(obj.get("field"), f"{where}.field")
    a = matrix_from_json(field, obj.get("A"), f"{where}.A")
    r = obj.get("r", a.n)
    _expect(isinstance(r, int) and r == a.n, where, "r must match the matrix size")
    return ChartConn(field, r, a)


def charpoly_to_json(cp: CharPolyP) -> dict:
    return {
        "charpoly": [ratfunc_to_json(c) for c in cp.full()],
        "descent_ok": cp.descent_ok,
    }


def certificate_to_json(cert: NoFlagCertificate) -> dict:
    return {
        **charpoly_to_json(cert.char),
        "verdict": cert.verdict.value,
        "witness": None if cert.witness is None else ratfunc_to_json(cert.witness),
        "reason": cert.reason,
    }
