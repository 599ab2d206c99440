"""Seeded sampling helpers.

All sweeps draw from ``numpy.random.Generator(PCG64(seed))``. PCG64 and the
Generator's float64 stream are specified bit-for-bit by numpy, so a given
(seed, numpy version) reproduces the same samples on every platform.
"""
import numpy as np


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def interior_points(C, n: int, gen: np.random.Generator) -> np.ndarray:
    """``n`` points uniform in ``C`` (rejection from the bounding box).

    Candidates closer to the boundary than ``C.interior_margin`` are rejected
    too, so every returned row is a valid query point.
    """
    V = C.as_array()
    lo, hi = V.min(axis=0), V.max(axis=0)
    out = []
    have = 0
    while have < n:
        m = max(2 * (n - have), 64)
        cand = gen.uniform(lo, hi, size=(m, 2))
        cand = cand[C.contains_many(cand)]
        out.append(cand)
        have += len(cand)
    return np.concatenate(out)[:n]


def delta_points(n: int, gen: np.random.Generator) -> np.ndarray:
    """``n`` points uniform in the open triangle ``|y| < x < 1``."""
    u = gen.random((n, 2))
    flip = u.sum(axis=1) > 1.0
    u[flip] = 1.0 - u[flip]
    # s (1,-1) + t (1,1)
    P = np.column_stack([u[:, 0] + u[:, 1], u[:, 1] - u[:, 0]])
    bad = ~((np.abs(P[:, 1]) < P[:, 0]) & (P[:, 0] < 1.0))
    if bad.any():
        P[bad] = delta_points(int(bad.sum()), gen)
    return P


def directions(n: int, gen: np.random.Generator) -> np.ndarray:
    """``n`` unit vectors with uniform angle."""
    th = gen.uniform(0.0, 2.0 * np.pi, size=n)
    return np.column_stack([np.cos(th), np.sin(th)])
