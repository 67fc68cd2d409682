"""Command-line interface: verification suites, invariants, and tables.

Commands:

    uqsl2 verify --p 2 --suite all [--out report.json]
    uqsl2 invariant presentation.json [--mode hlog|jlog|hennings] [--out out.json]
    uqsl2 tables --p 2 [--out tables.json]

The verify command runs the selected exact verification suites and exits
nonzero if any identity fails.  The invariant command reads a
presentation (schema below) and prints the exact value with its float
embedding.  Output is deterministic: fixed key order, canonical scalar
forms.

Presentation schema::

    {"p": 2, "strands": 2, "word": [1, 1],
     "components": [
        {"strands": [1], "cut": 1, "role": "surgery", "framing": -1},
        {"strands": [2], "cut": 2, "role": "minus", "framing": 0,
         "color": "h-2"}]}

Braid letters are signed generator indices (+i is a right-handed
crossing of columns i, i+1).  Center colors are names "e0".."ep",
"w+j" / "w-j", or {name: coeff} combinations; trace-class colors are
"h+k" / "h-k" / "hj" likewise.  Coefficients may be integers,
[num, den] pairs, or {"terms": [[k, num, den], ...]} meaning the sum of
(num/den) zeta_N^k.
"""

from __future__ import annotations

import argparse
import json
import sys

from .session import Tower

SUITES = ("hopf", "ribbon", "integral", "center", "trace", "pairing",
          "tangle", "invariance")


def _run_suite(tower: Tower, name: str):
    if name == "hopf":
        from .hopf_checks import verify_hopf_axioms
        return [verify_hopf_axioms(tower.U), verify_hopf_axioms(tower.D)]
    if name == "ribbon":
        from .ribbon import verify_quasitriangular, verify_ribbon
        return [verify_quasitriangular(tower.p, tower.ribbon),
                verify_ribbon(tower.p, tower.ribbon)]
    if name == "integral":
        from .integral import verify_qchar, verify_right_integral
        return [verify_right_integral(tower.integral),
                verify_qchar(tower.integral, [z for _, z in
                                              tower.center.ordered_basis()])]
    if name == "center":
        from .center import verify_casimir_coproduct, verify_center
        return [verify_center(tower.center), verify_casimir_coproduct(tower.U)]
    if name == "trace":
        from .mtrace import verify_trace_recursion
        return [verify_trace_recursion(tower)]
    if name == "pairing":
        from .mtrace import verify_pairing
        return [verify_pairing(tower)]
    if name == "tangle":
        from .tangle import verify_tangle_oracles
        return [verify_tangle_oracles(tower)]
    if name == "invariance":
        from .corpus import invariance_suite
        return [invariance_suite(tower)]
    raise ValueError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    tower = Tower(args.p, args.convention)
    names = SUITES if "all" in args.suite else tuple(args.suite)
    for name in names:
        if name not in SUITES:
            print(f"error: unknown suite {name!r}; choose from "
                  f"{', '.join(SUITES)} or 'all'", file=sys.stderr)
            return 2
    reports = []
    for name in names:
        for rep in _run_suite(tower, name):
            reports.append(rep)
            status = "pass" if rep.ok else "FAIL"
            print(f"[{status}] {rep.suite} ({len(rep.items)} checks)")
            for item in rep.failures():
                print(f"    failed: {item.name}  {item.witness}")
    payload = {"p": args.p, "convention": args.convention,
               "passed": all(r.ok for r in reports),
               "suites": [r.to_json() for r in reports]}
    _emit(payload, args.out)
    return 0 if payload["passed"] else 1


def cmd_invariant(args) -> int:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read presentation: {exc}", file=sys.stderr)
        return 2
    from .tangle import ClosurePresentation
    try:
        pres = ClosurePresentation.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: bad presentation: {exc}", file=sys.stderr)
        return 2
    tower = Tower(pres.p, args.convention)
    from .invariant import h_log, hennings, j_log
    try:
        if args.mode == "jlog":
            payload = j_log(tower, pres).to_json()
        elif args.mode == "hennings":
            payload = hennings(tower, pres).to_json()
        else:
            payload = h_log(tower, pres).to_json()
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.out)
    return 0


def cmd_tables(args) -> int:
    tower = Tower(args.p, args.convention)
    from .mtrace import pairing_table, trace_table
    table = trace_table(args.p, tower.field)
    gram, det = pairing_table(tower)
    payload = {
        "p": args.p,
        "trace_table": {
            f"{kind}:{j}:{'+' if sign == 1 else '-'}": val.to_json()
            for (kind, j, sign), val in sorted(table.items(), key=str)},
        "pairing": {
            "center_basis": [n for n, _ in tower.center.ordered_basis()],
            "trace_basis": tower.hh0.basis_names(),
            "gram": [[entry.to_json() for entry in row] for row in gram.rows],
            "determinant": det.to_json(),
        },
    }
    _emit(payload, args.out)
    return 0


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqsl2",
        description="Exact verification and surgery invariants for restricted "
                    "quantum sl2 at a 2p-th root of unity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, default=2,
                        help="order parameter p >= 2 (default 2)")
        sp.add_argument("--convention", choices=("A", "B"), default="A",
                        help="crossing bead side convention")
        sp.add_argument("--out", help="write JSON output to this path")

    sv = sub.add_parser("verify", help="run exact verification suites")
    common(sv)
    sv.add_argument("--suite", action="append", default=None,
                    help="suite name or 'all' (repeatable)")
    sv.set_defaults(func=cmd_verify)

    si = sub.add_parser("invariant", help="evaluate an invariant from JSON")
    si.add_argument("input", help="presentation JSON file")
    si.add_argument("--mode", choices=("hlog", "jlog", "hennings"),
                    default="hlog")
    si.add_argument("--convention", choices=("A", "B"), default="A")
    si.add_argument("--out", help="write JSON output to this path")
    si.set_defaults(func=cmd_invariant)

    st = sub.add_parser("tables", help="emit trace and pairing tables")
    common(st)
    st.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.p < 2:
            parser.error("p must be >= 2")
        if not args.suite:
            args.suite = ["all"]
    if getattr(args, "p", 2) < 2:
        parser.error("p must be >= 2")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
