"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick] [--json out.json]

Each row is the best-of-``repeat`` wall time per call.  Only the kernels
are timed, so the ratio is the speedup of the hot loops themselves.
"""
import argparse
import json
import time

import numpy as np

from noncross import generate, kernels
from noncross.bipartition import enumerate_balanced_bipartitions


def best_of(fn, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return min(out)


def cases(quick):
    big = 2000 if quick else 20000
    mid = 300 if quick else 1000
    s_big = generate("UNIFORM_SQUARE", big, 1, check=False)
    s_mid = generate("UNIFORM_SQUARE", mid, 1)
    # quadratic number of candidate directions; keep the Python side bearable
    s_half = generate("UNIFORM_SQUARE", mid // 2, 1)
    bp = enumerate_balanced_bipartitions(generate("UNIFORM_SQUARE", mid, 2))[0]
    s_bp = generate("UNIFORM_SQUARE", mid, 2)
    red = np.array(bp.red, dtype=np.intp)
    blue = np.array(bp.blue, dtype=np.intp)
    rng = np.random.default_rng(0)
    eu = rng.integers(0, s_mid.n, 5000).astype(np.intp)
    ev = rng.integers(0, s_mid.n, 5000).astype(np.intp)
    s9 = generate("UNIFORM_SQUARE", 9, 3)
    s8 = generate("UNIFORM_SQUARE", 8, 3)
    d9, d8 = s9.distance_matrix(), s8.distance_matrix()
    s_col = generate("UNIFORM_SQUARE", 200 if quick else 600, 4)
    return [
        (f"convex_hull n={big}", lambda k: k.convex_hull(s_big.xs, s_big.ys)),
        (f"prim_max_tree n={mid}", lambda k: k.prim_max_tree(s_mid.xs, s_mid.ys)),
        (f"halving_pairs n={s_half.n}", lambda k: k.halving_pairs(s_half.xs, s_half.ys)),
        ("segment_crossings 5000 edges", lambda k: k.segment_crossings(s_mid.xs, s_mid.ys, 0, 1, eu, ev)),
        (f"top_bridge_order n={mid}", lambda k: k.top_bridge_order(s_bp.xs, s_bp.ys, red, blue)),
        (f"collinear_triple n={s_col.n}", lambda k: k.collinear_triple(s_col.xs, s_col.ys)),
        ("brute_path n=9", lambda k: k.brute_path(s9.xs, s9.ys, d9, False)),
        ("brute_cycle n=9 noncrossing", lambda k: k.brute_cycle(s9.xs, s9.ys, d9, True)),
        ("brute_tree n=8 noncrossing", lambda k: k.brute_tree(s8.xs, s8.ys, d8, True)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    ap.add_argument("--json", help="also write the rows here")
    args = ap.parse_args(argv)

    impls = {b.BACKEND: b for b in kernels.backends()}
    if "cython" not in impls:
        print("compiled extension not built; timing the Python backend only")
    rows = []
    print(f"{'kernel':34s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases(args.quick):
        t = {k: best_of(lambda: fn(m), args.repeat) for k, m in impls.items()}
        py, cy = t.get("python"), t.get("cython")
        sp = py / cy if py and cy else None
        rows.append({"kernel": name, "python": py, "cython": cy, "speedup": sp})
        print(f"{name:34s} {py:10.4f} {cy if cy is not None else float('nan'):10.4f} "
              f"{sp if sp else float('nan'):8.1f}x", flush=True)
    if args.json:
        with open(args.json, "w") as f:
            json.dump(rows, f, indent=2)


if __name__ == "__main__":
    main()
