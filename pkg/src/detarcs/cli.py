"""Command-line interface: ``detarcs <command> ...``.

Exit codes are 0 on success, 1 when a verification suite fails and 2 for
usage or domain errors.  All numbers printed are exact.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .invariants import lct, lct_vertex_values, orbit_codimension
from .orbits import ContactSpec, MatrixShape, count_contact_components, minimal_contact_orbits
from .partitions import INF, PrePartition, hasse_diagram, parse_prepartition, truncate, universe_size
from .zeta import evaluate_motivic_zeta, motivic_zeta_terms, topological_zeta, zeta_poles

MAX_POSET_NODES = 10**4

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad input detected after argument parsing; reported with exit code 2."""


def _rational(x) -> "int | str":
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _terms_json(lam: PrePartition) -> list:
    return ["inf" if t is INF else t for t in lam.terms]


def _shape(rows: int, cols: int) -> MatrixShape:
    try:
        return MatrixShape(rows, cols)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_rank(shape: MatrixShape, k: int):
    if not 0 <= k <= shape.r - 1:
        raise UsageError(f"--rank must lie in 0..{shape.r - 1}, got {k}")


# -- commands ----------------------------------------------------------------


def cmd_components(args) -> tuple[str, object]:
    shape = _shape(args.rows, args.cols)
    _check_rank(shape, args.rank)
    if args.jet is not None:
        if args.jet < 0:
            raise UsageError(f"--jet must be >= 0, got {args.jet}")
        p = args.jet + 1
    else:
        if args.contact < 1:
            raise UsageError(f"--contact must be >= 1, got {args.contact}")
        p = args.contact
    contact = ContactSpec(shape, args.rank, p)
    minimal = minimal_contact_orbits(contact)
    if args.jet is not None:
        minimal = [truncate(lam, args.jet + 1) for lam in minimal]
    count = count_contact_components(contact)
    data = {"count": count, "minimal_partitions": [list(lam.compact()) for lam in minimal]}
    text = [f"components: {count}", "minimal partitions:"]
    text += ["  (" + ",".join(map(str, lam.compact())) + ")" for lam in minimal]
    return "\n".join(text), data


def cmd_lct(args) -> tuple[str, object]:
    shape = _shape(args.rows, args.cols)
    _check_rank(shape, args.rank)
    value = lct(shape, args.rank)
    vertices = lct_vertex_values(shape, args.rank)
    data = {"lct": _rational(value), "vertex_values": [_rational(v) for v in vertices]}
    text = f"{_rational(value)}\nvertex values: " + ", ".join(str(_rational(v)) for v in vertices)
    return text, data


def cmd_codim(args) -> tuple[str, object]:
    shape = _shape(args.rows, args.cols)
    try:
        lam = parse_prepartition(args.partition, shape.r)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid partition {args.partition!r}: {exc}") from None
    codim = orbit_codimension(lam, shape)
    shown = "infinite" if codim is INF else codim
    return str(shown), {"partition": _terms_json(lam), "codimension": shown}


def cmd_zeta(args) -> tuple[str, object]:
    if args.cols is not None and args.cols != args.rows:
        raise UsageError("square matrices only")
    if args.rows < 1:
        raise UsageError(f"--rows must be >= 1, got {args.rows}")
    shape = _shape(args.rows, args.rows)
    _check_rank(shape, args.rank)
    r, k = args.rows, args.rank
    if args.topological:
        z = topological_zeta(r, k)
        return str(z), {"topological_zeta": str(z)}
    if args.poles:
        poles = zeta_poles(r, k)
        return ", ".join(str(_rational(x)) for x in poles), {"poles": [_rational(x) for x in poles]}
    terms = motivic_zeta_terms(r, k)
    if args.eval is not None:
        try:
            q, s0 = (Fraction(x) for x in args.eval)
            value = evaluate_motivic_zeta(terms, q, s0)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from None
        return str(_rational(value)), {"q": _rational(q), "s": _rational(s0), "value": _rational(value)}
    rows = []
    for t in terms:
        rows.append(
            {
                "subset": list(t.subset),
                "eta": str(t.eta),
                "prefactor": str(t.prefactor),
                "denominators": [str(d) for d in t.denominators],
            }
        )
    lines = []
    for row in rows:
        dens = "".join(f" / (L^({d}) - 1)" for d in row["denominators"])
        lines.append(f"I={{{','.join(map(str, row['subset']))}}}: ({row['eta']}) * L^({row['prefactor']}){dens}")
    return "\n".join(lines), {"terms": rows}


def _dot(nodes, edges) -> str:
    out = ["digraph orbit_poset {", "  rankdir=TB;"]
    for i, lam in enumerate(nodes):
        out.append(f'  n{i} [label="{lam}"];')
    for i, j in edges:
        out.append(f"  n{i} -> n{j};")
    out.append("}")
    return "\n".join(out)


def cmd_poset(args) -> tuple[str, object]:
    if args.rows < 1 or args.max_term < 0:
        raise UsageError("need --rows >= 1 and --max-term >= 0")
    size = universe_size(args.rows, args.max_term)
    if size > MAX_POSET_NODES:
        raise UsageError(f"universe has {size} nodes, above the limit of {MAX_POSET_NODES}")
    nodes, edges = hasse_diagram(args.rows, args.max_term)
    data = {
        "rows": args.rows,
        "max_term": args.max_term,
        "nodes": [_terms_json(lam) for lam in nodes],
        "edges": [list(e) for e in edges],
    }
    if args.format == "dot":
        return _dot(nodes, edges), None
    text = [f"{len(nodes)} nodes, {len(edges)} covers"]
    text += [f"{nodes[i]} -> {nodes[j]}" for i, j in edges]
    return "\n".join(text), data


def cmd_verify(args) -> tuple[str, object]:
    from .verify import run_suite

    results = run_suite(args.suite, args.seed)
    width = max(len(r.name) for r in results)
    lines = [f"{'suite':<11} {'check':<{width}}  result  seconds"]
    for r in results:
        lines.append(f"{r.suite:<11} {r.name:<{width}}  {'pass' if r.passed else 'FAIL':<6}  {r.seconds:7.2f}")
    failed = [r for r in results if not r.passed]
    if failed:
        lines.append(f"counterexample ({failed[0].suite} / {failed[0].name}): {failed[0].counterexample}")
    data = {
        "passed": not failed,
        "checks": [
            {"suite": r.suite, "name": r.name, "passed": r.passed, "counterexample": r.counterexample}
            for r in results
        ],
    }
    return "\n".join(lines), data


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detarcs",
        description="Arc-space invariants of generic determinantal varieties, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, dot=False):
        choices = ["text", "json", "dot"] if dot else ["text", "json"]
        p.add_argument("--format", choices=choices, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    p = sub.add_parser("components", help="irreducible components of contact loci and jet schemes")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    level = p.add_mutually_exclusive_group(required=True)
    level.add_argument("--jet", type=int, metavar="N", help="jet level n")
    level.add_argument("--contact", type=int, metavar="P", help="contact order p")
    add_common(p)
    p.set_defaults(handler=cmd_components)

    p = sub.add_parser("lct", help="log canonical threshold of the rank-k locus")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    add_common(p)
    p.set_defaults(handler=cmd_lct)

    p = sub.add_parser("codim", help="codimension of an orbit in the arc space")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--partition", required=True, help='comma separated, e.g. "inf,2,0"')
    add_common(p)
    p.set_defaults(handler=cmd_codim)

    p = sub.add_parser("zeta", help="motivic and topological zeta functions (square matrices)")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, help="must equal --rows if given")
    p.add_argument("--rank", type=int, required=True)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--topological", action="store_true")
    what.add_argument("--poles", action="store_true")
    what.add_argument("--eval", nargs=2, metavar=("Q", "S"))
    add_common(p)
    p.set_defaults(handler=cmd_zeta)

    p = sub.add_parser("poset", help="Hasse diagram of the orbit poset on a bounded universe")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--max-term", type=int, required=True)
    add_common(p, dot=True)
    p.set_defaults(handler=cmd_poset)

    p = sub.add_parser("verify", help="run the brute-force oracle suites")
    p.add_argument("--suite", choices=["poset", "components", "counting", "lct", "zeta", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, data = args.handler(args)
    except UsageError as exc:
        print(f"detarcs {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        out = json.dumps(data, indent=2)
    else:
        out = text
    out += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if args.command == "verify" and not data["passed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
