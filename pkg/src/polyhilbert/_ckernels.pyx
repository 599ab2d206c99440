# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: half-plane slack, ray exit, Finsler norm, Hilbert distance.

Edges are packed as an (n, 3) float64 array of rows ``(nx, ny, c)`` where
``(nx, ny)`` is the unit inward normal and ``nx*x + ny*y + c`` is the signed
Euclidean distance of ``(x, y)`` to the supporting line (positive inside).
"""
import numpy as np

from libc.math cimport INFINITY, log, log1p

BACKEND = "cython"


def pack(normals):
    return np.ascontiguousarray(normals, dtype=np.float64)


cdef inline double _min_slack(const double[:, ::1] E, double x, double y) noexcept nogil:
    cdef Py_ssize_t i
    cdef double s, best = INFINITY
    for i in range(E.shape[0]):
        s = E[i, 0] * x + E[i, 1] * y + E[i, 2]
        if s < best:
            best = s
    return best


cdef inline double _exit(const double[:, ::1] E, double px, double py,
                         double vx, double vy, Py_ssize_t* edge) noexcept nogil:
    cdef Py_ssize_t i
    cdef double rate, t, best = INFINITY
    edge[0] = -1
    for i in range(E.shape[0]):
        rate = E[i, 0] * vx + E[i, 1] * vy
        if rate < 0.0:
            t = (E[i, 0] * px + E[i, 1] * py + E[i, 2]) / (-rate)
            if t < best:
                best = t
                edge[0] = i
    return best


cdef inline double _finsler(const double[:, ::1] E, double px, double py,
                            double vx, double vy) noexcept nogil:
    cdef Py_ssize_t k
    cdef double tp, tm
    if vx == 0.0 and vy == 0.0:
        return 0.0
    tp = _exit(E, px, py, vx, vy, &k)
    tm = _exit(E, px, py, -vx, -vy, &k)
    return 0.5 * (1.0 / tm + 1.0 / tp)


cdef inline double _distance(const double[:, ::1] E, double px, double py,
                             double qx, double qy) noexcept nogil:
    cdef Py_ssize_t k, j
    cdef double vx = qx - px, vy = qy - py, tp, tm, far
    if vx == 0.0 and vy == 0.0:
        return 0.0
    tp = _exit(E, px, py, vx, vy, &k)
    tm = _exit(E, px, py, -vx, -vy, &j)
    if tp < 2.0:
        # q close to the far edge: 1 - 1/tp cancels, use the two slacks instead
        far = log((E[k, 0] * px + E[k, 1] * py + E[k, 2])
                  / (E[k, 0] * qx + E[k, 1] * qy + E[k, 2]))
    else:
        far = -log1p(-1.0 / tp)
    return 0.5 * (log1p(1.0 / tm) + far)


def min_slack(const double[:, ::1] E, double x, double y):
    return _min_slack(E, x, y)


def ray_exit(const double[:, ::1] E, double px, double py, double vx, double vy):
    cdef Py_ssize_t k
    cdef double t = _exit(E, px, py, vx, vy, &k)
    return t, k


def finsler(const double[:, ::1] E, double px, double py, double vx, double vy):
    return _finsler(E, px, py, vx, vy)


def distance(const double[:, ::1] E, double px, double py, double qx, double qy):
    return _distance(E, px, py, qx, qy)


def min_slack_many(const double[:, ::1] E, const double[:, ::1] P):
    cdef Py_ssize_t i, m = P.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(m):
            o[i] = _min_slack(E, P[i, 0], P[i, 1])
    return out


def finsler_many(const double[:, ::1] E, const double[:, ::1] P, const double[:, ::1] V):
    cdef Py_ssize_t i, m = P.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(m):
            o[i] = _finsler(E, P[i, 0], P[i, 1], V[i, 0], V[i, 1])
    return out


def distance_many(const double[:, ::1] E, const double[:, ::1] P, const double[:, ::1] Q):
    cdef Py_ssize_t i, m = P.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(m):
            o[i] = _distance(E, P[i, 0], P[i, 1], Q[i, 0], Q[i, 1])
    return out
