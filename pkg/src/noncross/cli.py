"""Command-line front end: ``noncross <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 invalid input or structure or a
hard audit violation, 3 oracle needed but above its size cap.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io, oracle
from .errors import GeneralPositionError, NoncrossError, OracleCapExceeded, ParseError
from .generate import Distribution, generate
from .geometry import PointSet, check_structure, diameter, validate_general_position, validate_noncrossing
from .hamcycle import a4, a4_grid
from .hampath import a1, a1_grid
from .spantree import a2, a3
from .svg import write_svg

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
PERTURB = 1e-9
PERTURB_SEED = 0
PERTURB_TRIES = 20

ALGOS = {
    "path": ("a1", "a1-grid"),
    "tree": ("a3", "a2"),
    "cycle": ("a4", "a4-grid"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p, algo=True):
    src = p.add_argument_group("instance")
    src.add_argument("--input", help="points file")
    src.add_argument("--dist", choices=[d.value for d in Distribution])
    src.add_argument("--n", type=int)
    src.add_argument("--seed", type=int, default=0)
    src.add_argument("--perturb", action="store_true",
                     help="jitter coordinates by 1e-9 x diameter to break degeneracies")
    if algo:
        p.add_argument("--algo")
        p.add_argument("--epsilon", type=float, default=0.1)
        p.add_argument("--b", type=float, default=1.0)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--output", help="write the structure here")
        p.add_argument("--svg", help="write an SVG drawing here")
    p.add_argument("--require-oracle", action="store_true",
                   help="fail with exit 3 if the exact reference is above its size cap")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="noncross", description="Long non-crossing paths, trees and cycles.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for cmd in ("path", "tree", "cycle"):
        _common(sub.add_parser(cmd, help=f"long non-crossing {cmd}"))
    p = sub.add_parser("audit", help="run algorithms with oracles and check every inequality")
    _common(p)
    p.add_argument("--all", action="store_true", help="run every algorithm")
    p = sub.add_parser("oracle", help="exact reference values")
    _common(p, algo=False)
    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--dist", required=True, choices=[d.value for d in Distribution])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.add_argument("--svg")
    p = sub.add_parser("render", help="draw points and an optional structure as SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--structure")
    p.add_argument("--svg", required=True)
    return ap


def _perturb(s: PointSet) -> PointSet:
    _, d = diameter(PointSet(s.xy, validate=False))
    rng = np.random.default_rng(PERTURB_SEED)
    for _ in range(PERTURB_TRIES):
        xy = s.xy + rng.uniform(-1.0, 1.0, s.xy.shape) * PERTURB * (d or 1.0)
        t = PointSet(xy, validate=False)
        try:
            validate_general_position(t)
            return t
        except GeneralPositionError:
            continue
    raise GeneralPositionError("perturbation did not reach general position")


def load_instance(args) -> PointSet:
    if args.input and args.dist:
        raise UsageError("give either --input or --dist/--n, not both")
    if args.input:
        try:
            s = io.load(args.input, validate=False)
        except OSError as e:
            raise UsageError(str(e)) from None
    elif args.dist:
        if args.n is None:
            raise UsageError("--dist needs --n")
        s = generate(args.dist, args.n, args.seed)
    else:
        raise UsageError("no instance: give --input or --dist/--n")
    if args.perturb:
        return _perturb(s)
    if args.input:
        validate_general_position(s)
    return s


def _oracle_or_none(args, s, key, fn):
    if s.n <= oracle.oracle_caps()[key]:
        return fn()
    if args.require_oracle:
        raise OracleCapExceeded(s.n, oracle.oracle_caps()[key], key)
    return None


def run_algorithm(cmd, algo, s, args):
    eps, b, threads = args.epsilon, args.b, args.threads
    if cmd == "path":
        h_opt = _oracle_or_none(args, s, "path", lambda: oracle.brute_longest_path(s).length)
        if algo == "a1":
            return a1(s, threads=threads, h_opt=h_opt)
        return a1_grid(s, eps, b, threads=threads, h_opt=h_opt)
    if cmd == "tree":
        mst = _oracle_or_none(args, s, "mst", lambda: oracle.max_spanning_tree(s).length)
        if algo == "a2":
            return a2(s, mst_length=mst)
        bound = None if mst is None else oracle.dmax_profile(s)[1]
        return a3(s, mst_length=mst, dmax_bound=bound)
    q_opt = None
    if s.n >= 3:
        q_opt = _oracle_or_none(args, s, "cycle", lambda: oracle.brute_longest_cycle(s).length)
    if algo == "a4":
        return a4(s, threads=threads, q_opt=q_opt)
    return a4_grid(s, eps, b, threads=threads, q_opt=q_opt)


def _summary(rep) -> str:
    lines = [f"{rep.algorithm}: n={rep.n} h={rep.h} length={rep.length:.12g} ({rep.kind})"]
    for r in rep.ratios:
        lines.append(f"  ratio {r.name} = {r.value:.6f} (oracle {r.oracle} = {r.oracle_length:.12g})")
    for a in rep.audits:
        mark = "ok" if a.satisfied else ("VIOLATED" if a.hard else "violated (soft)")
        lines.append(f"  audit {a.name}: {a.lhs:.12g} >= {a.rhs:.12g}  {mark}")
    return "\n".join(lines)


def _check(s, st):
    validate_noncrossing(s, st)
    check_structure(s, st)


def cmd_structure(args) -> int:
    algos = ALGOS[args.command]
    algo = args.algo or algos[0]
    if algo not in algos:
        raise UsageError(f"--algo for {args.command} must be one of {', '.join(algos)}")
    s = load_instance(args)
    st, rep = run_algorithm(args.command, algo, s, args)
    _check(s, st)
    if args.output:
        io.save_structure(args.output, st, s.n)
        _check(s, io.load_structure(args.output, s))
    if args.svg:
        write_svg(args.svg, s, st, title=f"{rep.algorithm} length {rep.length:.6g}")
    print(rep.to_json() if args.json else _summary(rep))
    return EXIT_INVALID if rep.hard_violations else EXIT_OK


def cmd_audit(args) -> int:
    s = load_instance(args)
    if args.all or not args.algo:
        todo = [(cmd, a) for cmd, algos in ALGOS.items() for a in algos]
    else:
        todo = [(cmd, a) for cmd, algos in ALGOS.items() for a in algos if a == args.algo]
        if not todo:
            raise UsageError(f"unknown --algo {args.algo}")
    reports = []
    for cmd, algo in todo:
        if cmd == "cycle" and s.n < 3:
            continue
        st, rep = run_algorithm(cmd, algo, s, args)
        _check(s, st)
        reports.append(rep)
    bad = [(r.algorithm, a.name) for r in reports for a in r.hard_violations]
    if args.json:
        print(json.dumps({"n": s.n, "reports": [r.to_dict() for r in reports],
                          "hard_violations": [list(b) for b in bad]}, sort_keys=True))
    else:
        print("\n".join(_summary(r) for r in reports))
        print("all hard audits satisfied" if not bad else f"{len(bad)} hard audit violation(s)")
    return EXIT_INVALID if bad else EXIT_OK


def cmd_oracle(args) -> int:
    s = load_instance(args)
    caps = oracle.oracle_caps()
    out = {"n": s.n}
    if s.n <= caps["mst"]:
        out["max_spanning_tree"] = oracle.max_spanning_tree(s).length
        out["dmax_bound"] = oracle.dmax_profile(s)[1]
    todo = [
        ("longest_path", "path", lambda nc: oracle.brute_longest_path(s, nc), 2),
        ("longest_cycle", "cycle", lambda nc: oracle.brute_longest_cycle(s, nc), 3),
        ("longest_tree", "tree", lambda nc: oracle.brute_longest_tree(s, nc), 2),
    ]
    skipped = []
    for name, key, fn, min_n in todo:
        if s.n < min_n:
            continue
        if s.n > caps[key]:
            skipped.append(name)
            continue
        out[name] = fn(False).length
        out["longest_noncrossing_" + name.split("_", 1)[1]] = fn(True).length
    if skipped and args.require_oracle:
        raise OracleCapExceeded(s.n, min(caps[k] for k in ("path", "cycle", "tree")), ", ".join(skipped))
    out["skipped"] = skipped
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        for k in sorted(out):
            print(f"{k}: {out[k]}")
    return EXIT_OK


def cmd_gen(args) -> int:
    s = generate(args.dist, args.n, args.seed)
    if args.output:
        io.save(args.output, s)
    else:
        sys.stdout.write(io.format_points(s))
    if args.svg:
        write_svg(args.svg, s, title=f"{args.dist} n={args.n} seed={args.seed}")
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        s = io.load(args.input, validate=False)
    except OSError as e:
        raise UsageError(str(e)) from None
    st = None
    if args.structure:
        st = io.load_structure(args.structure, s)
        _check(s, st)
    write_svg(args.svg, s, st)
    return EXIT_OK


COMMANDS = {
    "path": cmd_structure,
    "tree": cmd_structure,
    "cycle": cmd_structure,
    "audit": cmd_audit,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "render": cmd_render,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"noncross: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OracleCapExceeded as e:
        print(f"noncross: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, NoncrossError, ValueError) as e:
        print(f"noncross: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
