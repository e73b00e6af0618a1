"""Command-line interface.

Subcommands read a JSON document (a path, or ``-`` for stdin) and write a
JSON report to stdout. Exit status: 0 success, 1 rejection or computation
error (the report says why), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complex import BoundaryComplexInput, pushforward_fan, realize_weighted_complex
from .errors import InputError, TropError
from .fan import WeightedFan, check_balanced
from .generic import GenericInput, build_generic_graph, certify_generic
from .graph import f_vector, make_fan2d, merge_realized, suppress_bivalent
from .io import parse_input, serialize, to_json
from .resolution import ProjArrangement, build_nongeneric_graph, resolve_arrangement

DEFAULT_SEED = 20240601


def _read(path) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", location=f"line {exc.lineno}") from None


def _opt(args, doc, name, default=None):
    value = getattr(args, name, None)
    if value not in (None, False):
        return value
    return doc.options.get(name, default)


def _emit_graph(args, g, extra):
    realized = merge_realized(g)
    if args.suppress_bivalent:
        realized = suppress_bivalent(realized)
    fan = make_fan2d(realized)
    report = {
        "graph": g.to_dict(),
        "realized": realized.to_dict(),
        "f_vector": list(f_vector(realized)),
        "fan": fan.to_dict(),
        "balanced": check_balanced(fan)["balanced"],
    }
    report.update(extra)
    if args.dot:
        Path(args.dot).write_bytes(serialize(g, "dot"))
    if args.svg:
        Path(args.svg).write_bytes(serialize(realized, "svg", args.seed))
    return report


def _generic_input(args, doc):
    return GenericInput(
        doc.polys,
        delta=args.delta or doc.delta,
        keep_zero_edges=_opt(args, doc, "keep_zero_edges", True),
        use_mixed_volume=_opt(args, doc, "mixed_volume", False),
        force=_opt(args, doc, "force", False),
        seed=args.seed,
    )


def cmd_generic(args):
    doc = parse_input(_read(args.input))
    inp = _generic_input(args, doc)
    cert = certify_generic(inp)
    if not cert.accepted and not inp.force:
        return 1, {"certificate": cert.to_dict()}
    g = build_generic_graph(inp, cert)
    return 0, _emit_graph(args, g, {"certificate": cert.to_dict()})


def cmd_nongeneric(args):
    doc = parse_input(_read(args.input))
    arr = ProjArrangement.from_polys(doc.polys)
    diag = resolve_arrangement(arr, max_steps=args.max_blowups or doc.options.get("max_blowups", 64))
    g = build_nongeneric_graph(diag, args.delta or doc.delta)
    return 0, _emit_graph(args, g, {"resolution": diag.to_dict()})


def cmd_check(args):
    doc = parse_input(_read(args.input))
    cert = certify_generic(_generic_input(args, doc))
    return (0 if cert.accepted else 1), {"certificate": cert.to_dict()}


def cmd_complex(args):
    cx = BoundaryComplexInput.from_dict(_read_json(args.input))
    fan = realize_weighted_complex(cx)
    report = {"fan": fan.to_dict()}
    if fan.dim == 2:
        report["balance"] = check_balanced(fan)
    return 0, report


def cmd_pushforward(args):
    fan = WeightedFan.from_dict(_read_json(args.input))
    spec = _read_json(args.matrix)
    if isinstance(spec, list):
        spec = {"matrix": spec}
    out = pushforward_fan(fan, spec["matrix"], args.delta or spec.get("delta", 1))
    return 0, {"fan": out.to_dict()}


def cmd_balance(args):
    fan = WeightedFan.from_dict(_read_json(args.input))
    report = check_balanced(fan)
    return (0 if report["balanced"] else 1), report


def cmd_fixtures(args):
    from .fixtures import run_fixtures

    results = run_fixtures(args.seed)
    ok = all(r["passed"] for r in results)
    return (0 if ok else 1), {"results": results, "passed": sum(r["passed"] for r in results),
                              "total": len(results)}


def build_parser():
    p = argparse.ArgumentParser(prog="tropimpl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="input JSON file, or - for stdin")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--delta", type=int, default=None)

    for name in ("generic", "nongeneric", "check"):
        sp = sub.add_parser(name)
        common(sp)
        sp.add_argument("--suppress-bivalent", action="store_true")
        sp.add_argument("--keep-zero-edges", action="store_true", default=None)
        sp.add_argument("--mixed-volume", action="store_true")
        sp.add_argument("--force", action="store_true")
        sp.add_argument("--max-blowups", type=int, default=None)
        sp.add_argument("--dot", metavar="PATH")
        sp.add_argument("--svg", metavar="PATH")
    common(sub.add_parser("complex"))
    sp = sub.add_parser("pushforward")
    common(sp)
    sp.add_argument("--matrix", required=True, help="JSON file with {\"matrix\": [[...]], \"delta\": d}")
    common(sub.add_parser("balance"))
    common(sub.add_parser("fixtures"), needs_input=False)
    return p


COMMANDS = {
    "generic": cmd_generic,
    "nongeneric": cmd_nongeneric,
    "check": cmd_check,
    "complex": cmd_complex,
    "pushforward": cmd_pushforward,
    "balance": cmd_balance,
    "fixtures": cmd_fixtures,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.delta is not None and args.delta < 1:
        sys.stdout.write(to_json({"error": {"kind": "input", "message": "--delta must be positive"}}))
        return 2
    try:
        code, report = COMMANDS[args.command](args)
    except InputError as exc:
        sys.stdout.write(to_json({"error": exc.to_dict()}))
        return 2
    except (TropError, KeyError, TypeError) as exc:
        err = exc.to_dict() if isinstance(exc, TropError) else {"kind": "input", "message": str(exc)}
        sys.stdout.write(to_json({"error": err}))
        return 2 if not isinstance(exc, TropError) else 1
    sys.stdout.write(to_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
