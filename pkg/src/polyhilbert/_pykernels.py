"""Pure-Python twin of ``_ckernels``; same signatures, same arithmetic order.

Used when the compiled module is missing or ``POLYHILBERT_PURE=1`` is set.
"""
import math

import numpy as np

BACKEND = "python"
_INF = math.inf


def pack(normals):
    return tuple((float(a), float(b), float(c)) for a, b, c in np.asarray(normals, dtype=float))


def min_slack(E, x, y):
    best = _INF
    for nx, ny, c in E:
        s = nx * x + ny * y + c
        if s < best:
            best = s
    return best


def ray_exit(E, px, py, vx, vy):
    best = _INF
    edge = -1
    for i, (nx, ny, c) in enumerate(E):
        rate = nx * vx + ny * vy
        if rate < 0.0:
            t = (nx * px + ny * py + c) / (-rate)
            if t < best:
                best = t
                edge = i
    return best, edge


def finsler(E, px, py, vx, vy):
    if vx == 0.0 and vy == 0.0:
        return 0.0
    tp = ray_exit(E, px, py, vx, vy)[0]
    tm = ray_exit(E, px, py, -vx, -vy)[0]
    return 0.5 * (1.0 / tm + 1.0 / tp)


def distance(E, px, py, qx, qy):
    vx = qx - px
    vy = qy - py
    if vx == 0.0 and vy == 0.0:
        return 0.0
    tp, k = ray_exit(E, px, py, vx, vy)
    tm = ray_exit(E, px, py, -vx, -vy)[0]
    if tp < 2.0:
        # q close to the far edge: 1 - 1/tp cancels, use the two slacks instead
        nx, ny, c = E[k]
        far = math.log((nx * px + ny * py + c) / (nx * qx + ny * qy + c))
    else:
        far = -math.log1p(-1.0 / tp)
    return 0.5 * (math.log1p(1.0 / tm) + far)


def min_slack_many(E, P):
    return np.array([min_slack(E, x, y) for x, y in np.asarray(P).tolist()], dtype=float)


def finsler_many(E, P, V):
    return np.array(
        [finsler(E, px, py, vx, vy)
         for (px, py), (vx, vy) in zip(np.asarray(P).tolist(), np.asarray(V).tolist())],
        dtype=float,
    )


def distance_many(E, P, Q):
    return np.array(
        [distance(E, px, py, qx, qy)
         for (px, py), (qx, qy) in zip(np.asarray(P).tolist(), np.asarray(Q).tolist())],
        dtype=float,
    )
