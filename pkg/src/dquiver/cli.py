"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
Every subcommand has a ``--json`` switch emitting exactly the result
object the HTTP service would return for the same input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .equivalence import (
    count_derived_classes,
    count_is_exact,
    enumerate_standard_forms,
)
from .quiver import QuiverError, dynkin_d, mutation_class, parse_quiver, to_json
from .service import DEFAULT_PORT, RequestError, handle_request, serve


def _load_quiver(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise QuiverError(f"cannot read {path}: {e}") from None
    return parse_quiver(text)


def _quiver_payload(path: str) -> dict:
    q = _load_quiver(path)
    return {"n": q.n, "arrows": [list(a) for a in sorted(q.arrows())]}


def _emit(args, result: dict, text: str) -> None:
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(text)


def _cmd_mutate(args) -> int:
    result = handle_request(
        "mutate", {"quiver": _quiver_payload(args.quiver), "k": args.k}
    )
    rq = result["quiver"]
    text = "\n".join(f"{i} -> {j}" for i, j in rq["arrows"])
    _emit(args, result, text)
    return 0


def _cmd_classify(args) -> int:
    result = handle_request("classify", {"quiver": _quiver_payload(args.quiver)})
    _emit(args, result, result["form"])
    return 0


def _cmd_invariants(args) -> int:
    payload = {"quiver": _quiver_payload(args.quiver), "chi": args.chi}
    if args.modp is not None:
        payload["modp"] = args.modp
    result = handle_request("invariants", payload)
    lines = [
        "cartan:",
        *("  " + " ".join(str(x) for x in row) for row in result["cartan"]),
        f"det: {result['det']}",
        f"associated polynomial: {result['associated']['pretty']}",
        f"associated coefficients (low to high): {result['associated']['coeffs']}",
    ]
    if args.chi:
        if result.get("chi"):
            lines.append(f"chi closed form: {result['chi']['pretty']}")
        else:
            lines.append(f"chi closed form: unavailable ({result.get('chi_note')})")
    if args.modp is not None:
        fr = result["frobenius_mod_p"]
        lines.append(
            f"invariant factors of the asymmetry mod {fr['p']}: "
            + "; ".join(str(f) for f in fr["invariant_factors"])
        )
    _emit(args, result, "\n".join(lines))
    return 0


def _cmd_mutation_report(args) -> int:
    result = handle_request(
        "mutation_report", {"quiver": _quiver_payload(args.quiver)}
    )
    lines = []
    for row in result["vertices"]:
        b, a = row["before"], row["after"]

        def fmt(d):
            return {
                (True, True): "neg,pos",
                (True, False): "neg",
                (False, True): "pos",
                (False, False): "none",
            }[(d["neg"], d["pos"])]

        lines.append(
            f"vertex {row['k']}: before={fmt(b)} after={fmt(a)} -> {row['verdict']}"
        )
    _emit(args, result, "\n".join(lines))
    return 0


def _cmd_std_form(args) -> int:
    result = handle_request(
        "std_form",
        {"quiver": _quiver_payload(args.quiver), "relation": args.relation},
    )
    _emit(args, result, result["form"])
    return 0


def _cmd_good_equiv(args) -> int:
    result = handle_request(
        "good_equiv",
        {
            "quiver1": _quiver_payload(args.quiver[0]),
            "quiver2": _quiver_payload(args.quiver[1]),
        },
    )
    text = ("equivalent" if result["equivalent"] else "not equivalent") + (
        f" ({result['witness']})"
    )
    _emit(args, result, text)
    return 0


def _cmd_enumerate_forms(args) -> int:
    forms = enumerate_standard_forms(args.n, op_identify=args.op_identify)
    result = {
        "n": args.n,
        "op_identify": args.op_identify,
        "count": len(forms),
        "forms": [str(f) for f in forms],
    }
    _emit(args, result, "\n".join(result["forms"]) + f"\ntotal: {len(forms)}")
    return 0


def _cmd_count_classes(args) -> int:
    count = count_derived_classes(args.n)
    exact = count_is_exact(args.n)
    result = {"n": args.n, "count": count, "exact": exact}
    note = "" if exact else " (distinct polynomials only: bounds, not exact)"
    _emit(args, result, f"{count}{note}")
    return 0


def _cmd_mutation_class(args) -> int:
    if args.start.lower().startswith("d") and args.start[1:].isdigit():
        q = dynkin_d(int(args.start[1:]))
    else:
        q = _load_quiver(args.start)
    report = mutation_class(q, cap=args.cap)
    result = {
        "size": report.size,
        "truncated": report.truncated,
        "generator": json.loads(to_json(report.generator)),
    }
    text = f"class size: {report.size}" + (" (truncated)" if report.truncated else "")
    _emit(args, result, text)
    return 0


def _cmd_serve(args) -> int:
    print(f"serving on http://127.0.0.1:{args.port}", file=sys.stderr)
    serve(port=args.port, static_dir=args.static_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dquiver",
        description="Mutation, recognition and derived invariants for "
        "quivers in Dynkin A/D mutation classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit the JSON result object")
        return p

    p = add("mutate", _cmd_mutate, help="mutate a quiver at a vertex")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("-k", type=int, required=True)

    p = add("classify", _cmd_classify, help="parametric form of a quiver")
    p.add_argument("-q", "--quiver", required=True)

    p = add("invariants", _cmd_invariants, help="Cartan matrix, determinant, polynomials")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("--chi", action="store_true", help="include the closed-form chi")
    p.add_argument("--modp", type=int, default=None,
                   help="include Frobenius invariant factors of the asymmetry mod p")

    p = add("mutation-report", _cmd_mutation_report,
            help="per-vertex definedness and good/bad verdicts")
    p.add_argument("-q", "--quiver", required=True)

    p = add("std-form", _cmd_std_form, help="standard form of the quiver's class")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("--relation", choices=["good", "derived"], required=True)

    p = add("good-equiv", _cmd_good_equiv,
            help="decide good mutation equivalence of two quivers")
    p.add_argument("-q", "--quiver", action="append", required=True,
                   help="quiver file (give twice)")

    p = add("enumerate-forms", _cmd_enumerate_forms,
            help="derived standard forms on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--op-identify", action="store_true")

    p = add("count-classes", _cmd_count_classes,
            help="number of derived equivalence classes (exact for n <= 14)")
    p.add_argument("--n", type=int, required=True)

    p = add("mutation-class", _cmd_mutation_class, help="enumerate a mutation class")
    p.add_argument("--start", required=True, help="dN (e.g. d6) or a quiver file")
    p.add_argument("--cap", type=int, default=5_000_000)

    p = add("serve", _cmd_serve, help="run the local JSON-over-HTTP service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.add_argument("--static-dir", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.command == "good-equiv" and len(args.quiver) != 2:
        print("good-equiv needs exactly two -q arguments", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (QuiverError, RequestError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
