"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--n 20000] [--repeat 3]

Both backends get the same packed edge table and the same seeded inputs; the
script also reports the largest disagreement between them.
"""
import argparse
import time

import numpy as np

from polyhilbert import _pykernels
from polyhilbert.sampling import directions, interior_points, rng
from polyhilbert.verify import default_polygons

try:
    from polyhilbert import _ckernels
except ImportError:
    _ckernels = None


def edge_rows(C):
    return [(e.inward_normal[0], e.inward_normal[1],
             -(e.inward_normal[0] * e.origin[0] + e.inward_normal[1] * e.origin[1]))
            for e in C.edges]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled kernels not built; run pip install -e . --no-build-isolation")

    print(f"{'polygon':<9} {'kernel':<14} {'cython s':>10} {'python s':>10} {'speedup':>8} {'max rel diff':>13}")
    for name, C in default_polygons().items():
        g = rng(0)
        P, Q = interior_points(C, args.n, g), interior_points(C, args.n, g)
        V = directions(args.n, g)
        rows = edge_rows(C)
        E_c, E_p = _ckernels.pack(rows), _pykernels.pack(rows)
        for kernel, call in (
            ("min_slack_many", lambda m, E: m.min_slack_many(E, P)),
            ("finsler_many", lambda m, E: m.finsler_many(E, P, V)),
            ("distance_many", lambda m, E: m.distance_many(E, P, Q)),
        ):
            tc, rc = best_of(lambda: call(_ckernels, E_c), args.repeat)
            tp, rp = best_of(lambda: call(_pykernels, E_p), args.repeat)
            diff = float(np.max(np.abs(rc - rp) / np.maximum(np.abs(rp), 1e-300)))
            print(f"{name:<9} {kernel:<14} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.0f}x {diff:>13.2e}")


if __name__ == "__main__":
    main()
