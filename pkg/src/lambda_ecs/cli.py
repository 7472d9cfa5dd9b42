"""Command-line front end. Exit codes: 0 yes, 1 no, 2 bad input, 3 budget exceeded, 4 internal error."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .classify import classify_edges
from .exceptions import BudgetExceededError, DomainError, GenerationError, InternalInconsistencyError, ParseError, PreconditionError
from .flow import is_lambda_connected
from .generators import gen_blob_cycle, gen_ham_union
from .oracle import oracle_max_deletion, oracle_max_equivalent_deletion, oracle_max_weight
from .pipeline import DEFAULT_BUDGET, minimum_equivalent_digraph, search
from .weighted import solve_weighted

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _out(record: dict) -> None:
    print(io.dumps(record))


def cmd_classify(args) -> int:
    g = io.read_graph(args.input)
    restrict = None
    if args.restrict:
        restrict = io.parse_edge_list(Path(args.restrict).read_text(encoding="utf-8"), g.m)
    c = classify_edges(g, args.lam, restrict=restrict)
    rows = []
    for e in sorted(c.deletable | c.undeletable):
        u, v = g.edges[e]
        rows.append({"edge": e + 1, "u": u + 1, "v": v + 1, "deletable": e in c.deletable})
    _out({"lambda": args.lam, "edges": rows, "deletable_count": len(c.deletable)})
    return EXIT_YES


def cmd_solve(args) -> int:
    g = io.read_graph(args.input)
    rep = search(g, args.lam, args.k, args.enum_budget)
    if rep.found:
        ds = rep.deletion_set
        _out(io.result_record("deletion_set", args.lam, args.k, ds.edges, ds.verified,
                              irrelevant_count=len(rep.marked), candidate_count=rep.candidate_count))
        return EXIT_YES
    _out(io.result_record("no_solution", args.lam, args.k, (), False,
                          irrelevant_count=len(rep.marked), candidate_count=rep.candidate_count))
    return EXIT_NO


def cmd_solve_weighted(args) -> int:
    g = io.read_graph(args.input)
    if not g.weighted:
        raise PreconditionError("solve-weighted needs a weighted instance")
    sol = solve_weighted(g, args.lam, args.k)
    _out(io.result_record("deletion_set", args.lam, args.k, sol.edges, sol.verified, weight=sol.weight))
    return EXIT_YES


def cmd_verify(args) -> int:
    g = io.read_graph(args.input)
    removed = io.parse_edge_list(args.remove, g.m)
    if len(set(removed)) != len(removed):
        raise DomainError("repeated edge index in --remove")
    ok = is_lambda_connected(g, args.lam, removed)
    weight = g.total_weight(removed) if g.weighted else None
    _out(io.result_record("deletion_set" if ok else "no_solution", args.lam, len(removed), removed, ok, weight))
    return EXIT_YES if ok else EXIT_NO


def cmd_med(args) -> int:
    g = io.read_graph(args.input)
    ds = minimum_equivalent_digraph(g, args.k, args.enum_budget)
    if ds is None:
        _out(io.result_record("no_solution", 1, args.k))
        return EXIT_NO
    _out(io.result_record("deletion_set", 1, args.k, ds.edges, ds.verified))
    return EXIT_YES


def cmd_gen(args) -> int:
    if args.model == "ham-union":
        if args.n is None:
            raise DomainError("ham-union needs --n")
        g = gen_ham_union(args.n, args.lam, args.extra, args.seed, args.directed)
        note = f"ham-union n={args.n} lambda={args.lam} extra={args.extra} seed={args.seed} directed={int(args.directed)}"
    else:
        if args.blocks is None or args.block_size is None:
            raise DomainError("blob-cycle needs --blocks and --block-size")
        g = gen_blob_cycle(args.blocks, args.block_size, args.lam, args.seed)
        note = f"blob-cycle blocks={args.blocks} block_size={args.block_size} lambda={args.lam} seed={args.seed}"
    text = io.emit(g, [note])
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_YES


def cmd_oracle(args) -> int:
    g = io.read_graph(args.input)
    if args.med:
        size, wit = oracle_max_equivalent_deletion(g, args.k, force=args.force)
        ok = size >= args.k
        _out(io.result_record("deletion_set" if ok else "no_solution", 1, args.k, wit if ok else (), ok))
        return EXIT_YES if ok else EXIT_NO
    if args.weighted:
        if not g.weighted:
            raise PreconditionError("--weighted needs a weighted instance")
        best, wit = oracle_max_weight(g, args.lam, args.k, force=args.force)
        if wit is None:
            raise PreconditionError(f"input graph is not {args.lam}-edge-connected")
        _out(io.result_record("deletion_set", args.lam, args.k, wit, True, weight=best))
        return EXIT_YES
    size, wit = oracle_max_deletion(g, args.lam, args.k, force=args.force)
    if size < 0:
        raise PreconditionError(f"input graph is not {args.lam}-edge-connected")
    ok = size >= args.k
    _out(io.result_record("deletion_set" if ok else "no_solution", args.lam, args.k, wit if ok else (), ok))
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lambda-ecs", description="Edge deletion under lambda-edge-connectivity.")
    p.add_argument("-v", "--verbose", action="store_true", help="log solver progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k=True):
        sp.add_argument("-i", "--input", required=True)
        sp.add_argument("--lambda", dest="lam", type=int, required=True)
        if k:
            sp.add_argument("-k", type=int, required=True)

    sp = sub.add_parser("classify", help="list deletable and undeletable edges")
    common(sp, k=False)
    sp.add_argument("--restrict", help="file with 1-based edge indices")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("solve", help="find k edges whose removal keeps lambda-connectivity")
    common(sp)
    sp.add_argument("--enum-budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("solve-weighted", help="heaviest deletion set of at most k edges")
    common(sp)
    sp.set_defaults(func=cmd_solve_weighted)

    sp = sub.add_parser("verify", help="check that removing the given edges keeps lambda-connectivity")
    common(sp, k=False)
    sp.add_argument("--remove", required=True, help="comma-separated 1-based edge indices")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("med", help="remove k arcs without changing reachability")
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--enum-budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_med)

    sp = sub.add_parser("gen", help="write a random lambda-connected instance")
    sp.add_argument("--model", choices=["ham-union", "blob-cycle"], required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--lambda", dest="lam", type=int, required=True)
    sp.add_argument("--blocks", type=int)
    sp.add_argument("--block-size", type=int)
    sp.add_argument("--extra", type=int, default=0)
    sp.add_argument("--directed", action="store_true")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("oracle", help="brute-force answer for small instances")
    sp.add_argument("-i", "--input", required=True)
    sp.add_argument("--lambda", dest="lam", type=int, default=1)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--weighted", action="store_true")
    sp.add_argument("--med", action="store_true")
    sp.add_argument("--force", action="store_true", help="skip the instance size guard")
    sp.set_defaults(func=cmd_oracle)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        code, msg = EXIT_BUDGET, str(exc)
    except InternalInconsistencyError as exc:
        code, msg = EXIT_INTERNAL, str(exc)
    except (ParseError, DomainError, PreconditionError, GenerationError, OSError, ValueError) as exc:
        code, msg = EXIT_INPUT, str(exc)
    print(f"error: {msg}", file=sys.stderr)
    _out(io.result_record("error", message=msg))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
