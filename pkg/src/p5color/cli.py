"""Command line: ``p5color solve|detect|gen|verify|accept``.

Exit codes: 0 SAT / valid / P5-free / all criteria pass, 1 UNSAT / invalid,
2 input not P5-free, 3 usage or I/O error, 4 an acceptance criterion failed.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .engine import InputNotP5Free, Stats, solve, verify_coloring
from .graph import DimacsError, Graph, parse_dimacs
from .instance import Instance, full_colorset, parse_lists
from .oracle import MODELS, GeneratorError, GeneratorSpec, generate_dimacs
from .p5detect import P5Certificate, find_induced_p5

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_REJECTED = 2
EXIT_USAGE = 3
EXIT_ACCEPT_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments, which here means "rejected input"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return parse_dimacs(_read(path))
    except DimacsError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_lists(path: str, g: Graph, k: int | None) -> list[int]:
    try:
        given = parse_lists(_read(path), g.n)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    default = full_colorset(k) if k else 0
    lists = []
    for v in range(g.n):
        if v in given:
            lists.append(sum(1 << c for c in given[v]))
        elif default:
            lists.append(default)
        else:
            raise UsageError(f"{path}: no list for vertex {v + 1} and no -k given")
    return lists


def _print_certificate(cert: P5Certificate, out) -> None:
    print("p5 " + " ".join(map(str, cert.one_based())), file=out)


def parse_coloring(text: str, n: int) -> dict[int, int]:
    """Read ``v <id> <color>`` lines (1-based ids) into a 0-based mapping."""
    col = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] in ("c", "SAT"):
            continue
        if len(parts) != 3 or parts[0] != "v":
            raise ValueError(f"line {lineno}: expected 'v <id> <color>'")
        v, c = int(parts[1]) - 1, int(parts[2])
        if not 0 <= v < n:
            raise ValueError(f"line {lineno}: vertex id {v + 1} out of range")
        col[v] = c
    return col


def cmd_solve(args, out) -> int:
    if args.k is None and args.lists is None:
        raise UsageError("solve needs -k or --lists")
    if args.k is not None and args.k < 1:
        raise UsageError("k must be at least 1")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    g = _load_graph(args.path)
    lists = _load_lists(args.lists, g, args.k) if args.lists else [full_colorset(args.k)] * g.n
    start = time.perf_counter()
    stats = Stats()
    if args.certify:
        cert = find_induced_p5(g)
        if cert is not None:
            print("REJECTED", file=out)
            _print_certificate(cert, out)
            return EXIT_REJECTED
    workers = 1 if args.deterministic else args.threads
    try:
        sol = solve(Instance.from_lists(g, lists), stats=stats, workers=workers)
    except InputNotP5Free as exc:
        print("REJECTED", file=out)
        _print_certificate(exc.certificate, out)
        return EXIT_REJECTED
    wall = time.perf_counter() - start
    if sol is None:
        print("UNSAT", file=out)
    else:
        if not verify_coloring(g, lists, sol):
            raise RuntimeError("solver returned a coloring that does not verify")
        print("SAT", file=out)
        body = "".join(f"v {v + 1} {sol[v]}\n" for v in range(g.n))
        if args.output:
            try:
                Path(args.output).write_text(body)
            except OSError as exc:
                raise UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from exc
            print(f"c coloring written to {args.output}", file=out)
        else:
            out.write(body)
    if args.stats:
        for line in stats.as_lines():
            print(line, file=out)
        print(f"wall_time={wall:.6f}", file=out)
    return EXIT_SAT if sol is not None else EXIT_UNSAT


def cmd_detect(args, out) -> int:
    cert = find_induced_p5(_load_graph(args.path))
    if cert is None:
        print("P5-FREE", file=out)
        return 0
    _print_certificate(cert, out)
    return EXIT_REJECTED


def cmd_gen(args, out) -> int:
    try:
        spec = GeneratorSpec(args.model, args.n, args.density, args.seed, args.clique_size)
        text = generate_dimacs(spec)
    except GeneratorError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        out.write(text)
    return 0


def cmd_verify(args, out) -> int:
    g = _load_graph(args.graph)
    if args.lists:
        lists = _load_lists(args.lists, g, args.k)
    elif args.k is not None:
        lists = [full_colorset(args.k)] * g.n
    else:
        lists = None
    try:
        col = parse_coloring(_read(args.coloring), g.n)
    except ValueError as exc:
        raise UsageError(f"{args.coloring}: {exc}") from exc
    ok = verify_coloring(g, lists, col)
    print("VALID" if ok else "INVALID", file=out)
    return 0 if ok else 1


def cmd_accept(args, out) -> int:
    from .acceptance import run_suite

    results = run_suite(args.suite, max_n=args.max_n, echo=lambda line: print(line, file=out, flush=True))
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed", file=out)
    return EXIT_ACCEPT_FAILED if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="p5color", description="k-coloring and list coloring of P5-free graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide k-colorability (or a list coloring) of a DIMACS graph")
    p.add_argument("path")
    p.add_argument("-k", type=int, help="number of colors")
    p.add_argument("--lists", help="per-vertex color lists, lines 'v <id> : c1,c2,...'")
    p.add_argument("--certify", action="store_true", help="check P5-freeness before solving")
    p.add_argument("--stats", action="store_true", help="print engine counters as key=value lines")
    p.add_argument("--deterministic", action="store_true", help="force the single-threaded search")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", help="write the coloring lines here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("detect", help="look for an induced P5")
    p.add_argument("path")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("gen", help="generate a seeded P5-free graph in DIMACS format")
    p.add_argument("model", choices=MODELS)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clique-size", type=int, help="split model only: size of the clique side")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("-k", type=int, help="colors must lie in 1..k")
    p.add_argument("--lists", help="per-vertex color lists")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("accept", help="run the acceptance sweeps")
    p.add_argument("suite", nargs="?", default="all", choices=("small", "generated", "all"))
    p.add_argument("--max-n", type=int, default=7, help="largest n of the exhaustive sweep")
    p.set_defaults(func=cmd_accept)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"p5color: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
