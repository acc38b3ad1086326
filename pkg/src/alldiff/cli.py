"""Command-line front end: ``alldiff {filter,solve,count,bench,gen}``.

Exit codes: 0 success, 1 infeasible or no solution, 2 usage or input error.
Results go to stdout, diagnostics and ``--stats`` to stderr.
"""

from __future__ import annotations

import argparse
import inspect
import sys
import time

from . import engine
from .fileformat import ParseError, parse_problem, serialize_problem
from .generators import GENERATORS, gen_benchmark
from .model import Infeasible, Level, Problem, ValidationError
from .regin import build_value_graph, dump_value_graph, maximum_matching, warm_up

LEVELS = {lvl.value: lvl for lvl in Level}
GEN_PARAMS = ("n", "lo", "hi", "density", "max_size", "seed")


class UsageError(Exception):
    pass


def _input_args(p: argparse.ArgumentParser, *, file_allowed: bool = True) -> None:
    if file_allowed:
        p.add_argument("problem", nargs="?", help="problem file, or - for stdin")
        p.add_argument("--gen", metavar="NAME", choices=sorted(GENERATORS),
                       help="use a generated instance instead of a file")
    g = p.add_argument_group("generator parameters")
    g.add_argument("--n", type=int, help="number of variables (default 8)")
    g.add_argument("--lo", type=int, help="smallest value for random (default 1)")
    g.add_argument("--hi", type=int, help="largest value for random (default n)")
    g.add_argument("--density", type=float, help="value inclusion probability (default 0.5)")
    g.add_argument("--max-size", type=int, dest="max_size",
                   help="domain size cap for planted/nested (default n)")
    g.add_argument("--seed", type=int, help="random seed (default 0)")


def _gen_params(name: str, args: argparse.Namespace) -> dict:
    accepted = inspect.signature(GENERATORS[name]).parameters
    given = {k: getattr(args, k) for k in GEN_PARAMS if getattr(args, k) is not None}
    extra = sorted(set(given) - set(accepted))
    if extra:
        flags = ", ".join("--" + k.replace("_", "-") for k in extra)
        raise UsageError(f"generator {name!r} does not take {flags}")
    n = given.get("n", 8)
    defaults = {"n": n, "lo": 1, "hi": n, "density": 0.5, "max_size": n, "seed": 0}
    return {k: given.get(k, defaults[k]) for k in accepted}


def _load(args: argparse.Namespace) -> tuple[Problem, str]:
    if args.gen is not None:
        if args.problem is not None:
            raise UsageError("give either a problem file or --gen, not both")
        params = _gen_params(args.gen, args)
        label = " ".join([args.gen] + [f"{k}={v}" for k, v in params.items()])
        return gen_benchmark(args.gen, **params), label
    if args.problem is None:
        raise UsageError("no problem given (pass a file, - for stdin, or --gen NAME)")
    if any(getattr(args, k) is not None for k in GEN_PARAMS):
        raise UsageError("generator parameters need --gen")
    if args.problem == "-":
        return parse_problem(sys.stdin.read()), "<stdin>"
    with open(args.problem, encoding="utf-8") as fh:
        return parse_problem(fh.read()), args.problem


def _print_stats(stats: dict) -> None:
    print(" ".join(f"{k}={v}" for k, v in stats.items()), file=sys.stderr)


def _cmd_filter(args) -> int:
    p, _ = _load(args)
    level = LEVELS[args.level]
    start = time.perf_counter()
    try:
        store = engine.propagate(p, level)
    except Infeasible as exc:
        print("INFEASIBLE")
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    finally:
        elapsed = time.perf_counter() - start
        if args.stats:
            _print_stats({"level": args.level, "wall_time": f"{elapsed:.6f}"})
    for name, d in zip(p.names, store):
        print(f"{name}: {d}")
    if args.stats:
        _print_stats({"removed": p.domains.size() - store.size()})
    if args.dump_graph:
        for ci, c in enumerate(p.constraints):
            g = build_value_graph(c, store)
            print(f"# constraint {ci}", file=sys.stderr)
            sys.stderr.write(dump_value_graph(g, maximum_matching(g), p.names))
    return 0


def _cmd_solve(args) -> int:
    p, _ = _load(args)
    sol, stats = engine.solve(p, LEVELS[args.level], "first")
    if args.stats:
        _print_stats(stats.as_dict())
    if sol is None:
        print("NO SOLUTION")
        return 1
    for name, v in zip(p.names, sol):
        print(f"{name} = {v}")
    return 0


def _cmd_count(args) -> int:
    p, _ = _load(args)
    count, stats = engine.solve(p, LEVELS[args.level], "count")
    if args.stats:
        _print_stats(stats.as_dict())
    print(count)
    return 0 if count else 1


def _cmd_bench(args) -> int:
    if args.gen is None and args.problem is None:
        args.gen = "nqueens"
    p, label = _load(args)
    levels = [LEVELS[args.level]] if args.level else list(Level)
    if Level.HYPER_ARC in levels:
        warm_up()
    print(f"instance: {label} ({p.n} variables, {len(p.constraints)} constraints)")
    print(f"{'level':<7} {'root':>8} {args.mode:>10} {'nodes':>9} {'failures':>9} "
          f"{'prunings':>9} {'root_ms':>9} {'search_ms':>10}")
    status = 0
    for level in levels:
        start = time.perf_counter()
        try:
            root = str(p.domains.size() - engine.propagate(p, level).size())
        except Infeasible:
            root = "fail"
        root_ms = (time.perf_counter() - start) * 1e3
        result, stats = engine.solve(p, level, args.mode)
        if args.mode == "first":
            result = "none" if result is None else "found"
            status = 1 if result == "none" else status
        else:
            status = 1 if result == 0 else status
        print(f"{level.value:<7} {root:>8} {result!s:>10} {stats.nodes_explored:>9} "
              f"{stats.failures:>9} {stats.prunings:>9} {root_ms:>9.2f} "
              f"{stats.wall_time * 1e3:>10.2f}")
    return status


def _cmd_gen(args) -> int:
    params = _gen_params(args.name, args)
    sys.stdout.write(serialize_problem(gen_benchmark(args.name, **params)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alldiff", description="Filter and solve alldifferent problems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def level_arg(p, default):
        p.add_argument("--level", choices=list(LEVELS), default=default,
                       help="consistency level (default %(default)s)")

    f = sub.add_parser("filter", help="print the propagated domains")
    _input_args(f)
    level_arg(f, "gac")
    f.add_argument("--stats", action="store_true", help="timing on stderr")
    f.add_argument("--dump-graph", action="store_true",
                   help="value graph and matching of each constraint on stderr")
    f.set_defaults(func=_cmd_filter)

    for name, func, text in (("solve", _cmd_solve, "print the first solution"),
                             ("count", _cmd_count, "print the number of solutions")):
        s = sub.add_parser(name, help=text)
        _input_args(s)
        level_arg(s, "gac")
        s.add_argument("--stats", action="store_true", help="search statistics on stderr")
        s.set_defaults(func=func)

    b = sub.add_parser("bench", help="time propagation and search at each level")
    _input_args(b)
    level_arg(b, None)
    b.add_argument("--mode", choices=("count", "first"), default="count")
    b.set_defaults(func=_cmd_bench)

    g = sub.add_parser("gen", help="write a generated instance as a problem file")
    g.add_argument("name", choices=sorted(GENERATORS))
    _input_args(g, file_allowed=False)
    g.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, ValidationError, ValueError, OSError) as exc:
        print(f"alldiff: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
