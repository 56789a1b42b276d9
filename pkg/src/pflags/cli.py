"""Command-line front end.

Every subcommand parses a JSON payload (from --input FILE or --inline), runs
one library operation through the shared op table, and emits either a short
text summary or, with --json, a canonical machine-readable report that is
byte-identical across runs.

Exit codes: 0 success; 1 validation or invariant violations (reported, not
crashed); 2 precondition or needs-extension errors; 3 parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any

from . import ops, properties
from .errors import (
    InternalInvariantError,
    InvalidFieldError,
    NeedsExtensionError,
    ParseError,
    PreconditionError,
)
from .jsonio import canonical_dumps, digest

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3

# subcommand -> (op name, payload builder inputs, invariants the op verifies)
SUBCOMMANDS = {
    "pone-check": ("validate", "connection", ["infinity-chart-regularity"]),
    "pone-pcurv": ("pm1_curvature", "connection", ["connection-valid"]),
    "pone-flag": ("complete_flag", "connection",
                  ["connection-valid", "flag-stability-verified"]),
    "pone-descend": ("cartier_descent", "connection",
                     ["connection-valid", "psi-vanishes", "frame-horizontal",
                      "frame-invertible"]),
    "pone-pullback": ("frobenius_pullback", "connection", ["connection-valid"]),
    "ell-profile": ("atiyah_profile", "scalars", ["gcd-invariance", "conservation"]),
    "ell-classes": ("line_classes", "payload", ["gcd-invariance", "conservation"]),
    "ell-admits": ("admits_connection", "payload", ["profile-conservation"]),
    "ell-skeleton": ("flag_skeleton", "payload",
                     ["connection-existence", "profile-conservation"]),
    "ell-peel": ("peel_order", "payload", ["deterministic-order"]),
    "hit-charpoly": ("char_poly_psi", "chart", ["psi-O-linearity", "coefficient-descent"]),
    "hit-dims": ("hitchin_dims", "scalars", ["genus-bound"]),
    "hit-cert": ("no_flag_certificate", "chart",
                 ["psi-O-linearity", "coefficient-descent"]),
    "hit-nilflag": ("nilpotent_flag", "chart",
                    ["psi-O-linearity", "psi-nilpotent", "gauge-triangularizes"]),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pflags",
        description="Exact calculations with flags of flat bundles in characteristic p.",
    )
    sub = parser.add_subparsers(dest="subcommand")
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, help=f"run the {SUBCOMMANDS[name][0]} operation")
        sp.add_argument("--input", help="path to the JSON input payload")
        sp.add_argument("--inline", help="inline JSON input payload")
        sp.add_argument("--json", action="store_true", help="emit the full JSON report")
        if name == "pone-pullback":
            sp.add_argument("--s", type=int, default=1, help="Frobenius pullback steps")
        if name == "ell-profile":
            sp.add_argument("--r", type=int, help="rank")
            sp.add_argument("--d", type=int, help="degree")
        if name == "hit-dims":
            sp.add_argument("--g", type=int, help="genus (>= 2)")
            sp.add_argument("--r", type=int, help="rank")
        if name in ("ell-admits", "ell-skeleton"):
            sp.add_argument("--p", type=int, help="characteristic")
    st = sub.add_parser("selftest", help="run the fixture corpus and fast property suites")
    st.add_argument("--filter", default="", help="only run items whose name contains this")
    st.add_argument("--seed", type=int, default=0, help="seed for the property suites")
    st.add_argument("--corpus", help="override the fixture corpus directory")
    st.add_argument("--json", action="store_true", help="emit the full JSON report")
    return parser


def _load_payload(args) -> Any:
    if args.input and args.inline:
        raise ParseError("give either --input or --inline, not both")
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from exc
    elif args.inline:
        text = args.inline
    else:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON input: {exc}") from exc


def _assemble(name: str, args, payload: Any) -> dict:
    kind = SUBCOMMANDS[name][1]
    if kind == "connection":
        if payload is None:
            raise ParseError("a connection JSON payload is required (--input or --inline)")
        out = {"connection": payload}
        if name == "pone-pullback":
            out["s"] = args.s
        return out
    if kind == "chart":
        if payload is None:
            raise ParseError("a chart connection JSON payload is required")
        return {"chart": payload}
    if kind == "scalars":
        if name == "ell-profile":
            if payload is not None:
                return payload
            if args.r is None or args.d is None:
                raise ParseError("ell-profile needs --r and --d (or an input payload)")
            return {"r": args.r, "d": args.d}
        if payload is not None:
            return payload
        if args.g is None or args.r is None:
            raise ParseError("hit-dims needs --g and --r (or an input payload)")
        return {"g": args.g, "r": args.r}
    # kind == "payload": the input object is the op payload itself
    if payload is None:
        raise ParseError(f"{name} requires a JSON input payload")
    if name in ("ell-admits", "ell-skeleton") and getattr(args, "p", None) is not None:
        payload = dict(payload)
        payload["p"] = args.p
    return payload


def _report(subcommand: str, payload: Any, result: Any, invariants: list[str],
            status: str, exit_code: int, error: str | None = None) -> dict:
    report = {
        "subcommand": subcommand,
        "inputs_digest": digest(payload),
        "result": result,
        "invariants_checked": invariants,
        "status": status,
        "exit_code": exit_code,
    }
    if error is not None:
        report["error"] = error
    return report


def _emit(report: dict, as_json: bool):
    if as_json:
        print(canonical_dumps(report))
        return
    print(f"{report['subcommand']}: {report['status']}")
    if report.get("error"):
        print(f"  error: {report['error']}")
    else:
        print(f"  result: {canonical_dumps(report['result'])}")
    if report["invariants_checked"]:
        print(f"  invariants: {', '.join(report['invariants_checked'])}")


def _run_subcommand(name: str, args) -> int:
    op_name, _, invariants = SUBCOMMANDS[name]
    try:
        payload = _assemble(name, args, _load_payload(args))
        result = ops.OP_TABLE[op_name](payload)
    except ParseError as exc:
        _emit(_report(name, None, None, [], "parse-error", EXIT_PARSE, str(exc)), args.json)
        return EXIT_PARSE
    except (PreconditionError, NeedsExtensionError, InvalidFieldError) as exc:
        _emit(_report(name, None, None, invariants, "precondition-error",
                      EXIT_PRECONDITION, str(exc)), args.json)
        return EXIT_PRECONDITION
    except InternalInvariantError as exc:
        _emit(_report(name, None, None, invariants, "invariant-violation",
                      EXIT_VIOLATION, str(exc)), args.json)
        return EXIT_VIOLATION
    if name == "pone-check" and result:
        report = _report(name, payload, result, invariants, "violations", EXIT_VIOLATION)
        _emit(report, args.json)
        return EXIT_VIOLATION
    _emit(_report(name, payload, result, invariants, "ok", EXIT_OK), args.json)
    return EXIT_OK


# -- selftest ---------------------------------------------------------------------------


def _load_fixtures(corpus: str | None) -> list[dict]:
    if corpus:
        items: list[dict] = []
        for path in sorted(Path(corpus).glob("*.json")):
            items.extend(json.loads(path.read_text()))
        return items
    text = resources.files("pflags").joinpath("fixtures/fixtures.json").read_text()
    return json.loads(text)


def _run_fixture(item: dict) -> tuple[bool, str]:
    op = ops.OP_TABLE.get(item.get("op", ""))
    if op is None:
        return False, f"unknown op {item.get('op')!r}"
    expect = item.get("expect", {})
    try:
        result = op(item.get("input", {}))
    except PreconditionError:
        if expect.get("error") == "precondition":
            return True, ""
        return False, "unexpected precondition error"
    except ParseError as exc:
        return False, f"input did not parse: {exc}"
    if "error" in expect:
        return False, f"expected a {expect['error']} error, got a result"
    if "value_subset" in expect:
        subset = expect["value_subset"]
        if not isinstance(result, dict):
            return False, "result is not an object"
        for key, want in subset.items():
            if canonical_dumps(result.get(key)) != canonical_dumps(want):
                return False, f"field {key!r} mismatch"
        return True, ""
    if canonical_dumps(result) != canonical_dumps(expect.get("value")):
        return False, "value mismatch"
    return True, ""


def _run_selftest(args) -> int:
    try:
        fixtures = _load_fixtures(args.corpus)
    except (OSError, json.JSONDecodeError) as exc:
        _emit(_report("selftest", None, None, [], "parse-error", EXIT_PARSE,
                      f"cannot load fixture corpus: {exc}"), args.json)
        return EXIT_PARSE
    lines = []
    failures = []
    for item in fixtures:
        name = item.get("name", "<unnamed>")
        if args.filter and args.filter not in name:
            continue
        ok, detail = _run_fixture(item)
        lines.append({"item": name, "passed": ok, "detail": detail})
        if not ok:
            failures.append(name)
    for res in properties.run_fast_suite(seed=args.seed, name_filter=args.filter):
        lines.append({"item": f"property:{res.name}", "passed": res.passed,
                      "detail": res.detail, "checked": res.checked})
        if not res.passed:
            failures.append(f"property:{res.name}")
    status = "ok" if not failures else "violations"
    exit_code = EXIT_OK if not failures else EXIT_VIOLATION
    report = _report("selftest", {"filter": args.filter, "seed": args.seed},
                     {"items": lines, "failures": failures}, ["fixture-corpus",
                     "fast-property-suites"], status, exit_code)
    if args.json:
        print(canonical_dumps(report))
    else:
        for line in lines:
            mark = "PASS" if line["passed"] else "FAIL"
            detail = f" ({line['detail']})" if line.get("detail") else ""
            print(f"{mark} {line['item']}{detail}")
        print(f"selftest: {len(lines) - len(failures)}/{len(lines)} passed")
        if failures:
            print("failing items: " + ", ".join(failures))
    return exit_code


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    if not args.subcommand:
        parser.print_usage()
        return EXIT_PARSE
    if args.subcommand == "selftest":
        return _run_selftest(args)
    return _run_subcommand(args.subcommand, args)


if __name__ == "__main__":
    sys.exit(main())
