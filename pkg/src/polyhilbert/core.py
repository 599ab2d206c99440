"""Hilbert geometry of an open convex polygon.

Points and tangent vectors are plain pairs of floats. Wherever a norm is not
specified it is the l1 norm ``|x| + |y|``.

The per-query hot paths (half-plane slack, boundary exit, Finsler norm,
distance) live in :mod:`polyhilbert.kernels`; this module adds validation,
the chord/cross-ratio view, quadrature along segments and metric balls.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    CoincidentPoints,
    Degenerate,
    NotConvex,
    PointNotInterior,
    TooFewVertices,
    ZeroVector,
)
from .kernels import backend as _k
from .quadrature import adaptive_simpson

INTERIOR_MARGIN = 1e-12  # times the l1 diameter
EDGE_SLACK = 1e-12


class Vec2(NamedTuple):
    x: float
    y: float


Point2 = Vec2
Vector2 = Vec2


def as_vec(p) -> Vec2:
    x, y = p
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinates {p!r}")
    return Vec2(x, y)


def l1(v) -> float:
    return abs(v[0]) + abs(v[1])


def cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class Edge:
    origin: Vec2
    direction: Vec2
    inward_normal: Vec2  # unit length


@dataclass(frozen=True)
class ConvexPolygon:
    """A validated, strictly convex polygon with counterclockwise vertices.

    Build instances with :func:`validate_polygon`. The set is open: points on
    (or within ``interior_margin`` of) the boundary are not members.
    """

    vertices: tuple[Vec2, ...]
    edges: tuple[Edge, ...]
    diameter: float  # l1
    interior_margin: float
    packed: object = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    def slack(self, p) -> float:
        """Smallest signed Euclidean distance from ``p`` to an edge line."""
        return _k.min_slack(self.packed, float(p[0]), float(p[1]))

    def contains(self, p) -> bool:
        return self.slack(p) > self.interior_margin

    def contains_many(self, P) -> np.ndarray:
        P = np.ascontiguousarray(P, dtype=float)
        return _k.min_slack_many(self.packed, P) > self.interior_margin

    def transformed(self, matrix) -> "ConvexPolygon":
        """Image of the polygon under the linear map ``matrix`` (2x2)."""
        M = np.asarray(matrix, dtype=float)
        return validate_polygon((M @ self.as_array().T).T)

    def centroid(self) -> Vec2:
        """Area centroid."""
        V = self.as_array()
        x, y = V[:, 0], V[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        w = x * yn - xn * y
        area = 0.5 * w.sum()
        return Vec2(float(((x + xn) * w).sum() / (6 * area)),
                    float(((y + yn) * w).sum() / (6 * area)))


def validate_polygon(raw: Sequence) -> ConvexPolygon:
    """Check and normalise a vertex list into a :class:`ConvexPolygon`.

    Clockwise input is reversed. Duplicate or collinear consecutive vertices
    raise :class:`Degenerate`; reflex corners or self-winding raise
    :class:`NotConvex`.
    """
    pts = [as_vec(p) for p in raw]
    if len(pts) < 3:
        raise TooFewVertices(f"TooFewVertices: need at least 3 vertices, got {len(pts)}")
    n = len(pts)
    scale = max(l1(p) for p in pts) or 1.0
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if l1((b[0] - a[0], b[1] - a[1])) <= 1e-14 * scale:
            raise Degenerate(f"Degenerate: duplicate vertex at index {(i + 1) % n}")
    area2 = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
    if area2 < 0:
        pts.reverse()

    turning = 0.0
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        u = (b[0] - a[0], b[1] - a[1])
        w = (c[0] - b[0], c[1] - b[1])
        z = cross(u, w)
        if abs(z) <= 1e-12 * math.hypot(*u) * math.hypot(*w):
            raise Degenerate(f"Degenerate: collinear vertices around index {i}")
        if z < 0:
            raise NotConvex(f"NotConvex: reflex turn at vertex {i}")
        turning += math.atan2(z, u[0] * w[0] + u[1] * w[1])
    if abs(turning - 2 * math.pi) > 1e-6:
        raise NotConvex("NotConvex: boundary winds more than once")

    edges = []
    normals = []
    for i in range(n):
        o, e = pts[i], pts[(i + 1) % n]
        d = Vec2(e[0] - o[0], e[1] - o[1])
        h = math.hypot(*d)
        nrm = Vec2(-d[1] / h, d[0] / h)
        edges.append(Edge(o, d, nrm))
        normals.append((nrm[0], nrm[1], -(nrm[0] * o[0] + nrm[1] * o[1])))
    diam = max(l1((p[0] - q[0], p[1] - q[1])) for p in pts for q in pts)
    return ConvexPolygon(
        vertices=tuple(pts),
        edges=tuple(edges),
        diameter=diam,
        interior_margin=INTERIOR_MARGIN * diam,
        packed=_k.pack(normals),
    )


def _require_interior(C: ConvexPolygon, p, name="point") -> Vec2:
    p = as_vec(p)
    s = C.slack(p)
    if not s > C.interior_margin:
        raise PointNotInterior(
            f"PointNotInterior: {name} ({p.x!r}, {p.y!r}) has boundary slack {s:.3g}"
        )
    return p


def _require_interior_many(C: ConvexPolygon, P, name="points") -> np.ndarray:
    P = np.ascontiguousarray(P, dtype=float)
    if P.ndim != 2 or P.shape[1] != 2:
        raise ValueError(f"{name} must have shape (m, 2)")
    if not np.isfinite(P).all():
        raise ValueError(f"non-finite {name}")
    bad = ~C.contains_many(P)
    if bad.any():
        i = int(np.argmax(bad))
        raise PointNotInterior(f"PointNotInterior: {name}[{i}] = {tuple(P[i])} is not interior")
    return P


# ---------------------------------------------------------------- ray exits


@dataclass(frozen=True)
class RayExit:
    t_plus: float
    hit: Vec2
    edge: int


def ray_exit(C: ConvexPolygon, p, v) -> RayExit:
    """First boundary point of the ray ``p + t v``, ``t > 0``.

    The exit time is the smallest positive crossing over the edges' supporting
    lines whose inward normal opposes ``v``; for a convex polygon this is the
    boundary hit, corners included.
    """
    p = _require_interior(C, p)
    v = as_vec(v)
    if v.x == 0.0 and v.y == 0.0:
        raise ZeroVector("ZeroVector: direction must be nonzero")
    t, k = _k.ray_exit(C.packed, p.x, p.y, v.x, v.y)
    return RayExit(t, Vec2(p.x + t * v.x, p.y + t * v.y), int(k))


def exit_times(C: ConvexPolygon, p, v) -> tuple[float, float]:
    """``(t_minus, t_plus)``: backward and forward boundary exit parameters."""
    p = _require_interior(C, p)
    v = as_vec(v)
    if v.x == 0.0 and v.y == 0.0:
        raise ZeroVector("ZeroVector: direction must be nonzero")
    tp = _k.ray_exit(C.packed, p.x, p.y, v.x, v.y)[0]
    tm = _k.ray_exit(C.packed, p.x, p.y, -v.x, -v.y)[0]
    return tm, tp


# -------------------------------------------------------- chord and distance


@dataclass(frozen=True)
class ChordParam:
    """Boundary hits ``a`` (behind p) and ``b`` (beyond q) of the line pq.

    ``p = (1 - s) a + s b`` and ``q = (1 - t) a + t b`` with ``0 < s < t < 1``.
    """

    a: Vec2
    b: Vec2
    s: float
    t: float
    edge_a: int
    edge_b: int

    def point(self, u: float) -> Vec2:
        return Vec2((1 - u) * self.a.x + u * self.b.x, (1 - u) * self.a.y + u * self.b.y)


def chord(C: ConvexPolygon, p, q) -> ChordParam:
    p = _require_interior(C, p, "p")
    q = _require_interior(C, q, "q")
    if p == q:
        raise CoincidentPoints("CoincidentPoints: p and q coincide")
    vx, vy = q.x - p.x, q.y - p.y
    tp, eb = _k.ray_exit(C.packed, p.x, p.y, vx, vy)
    tm, ea = _k.ray_exit(C.packed, p.x, p.y, -vx, -vy)
    a = Vec2(p.x - tm * vx, p.y - tm * vy)
    b = Vec2(p.x + tp * vx, p.y + tp * vy)
    # parametrise along the dominant coordinate of b - a
    i = 0 if abs(b.x - a.x) >= abs(b.y - a.y) else 1
    span = b[i] - a[i]
    s = (p[i] - a[i]) / span
    t = (q[i] - a[i]) / span
    return ChordParam(a, b, s, t, int(ea), int(eb))


def cross_ratio_st(s: float, t: float) -> float:
    return ((1.0 - s) / s) * (t / (1.0 - t))


def cross_ratio(ch: ChordParam) -> float:
    """Cross ratio ``[a, p, q, b] = (1-s)/s * t/(1-t)``."""
    return cross_ratio_st(ch.s, ch.t)


def hilbert_distance(C: ConvexPolygon, p, q) -> float:
    """Half the log of the cross ratio of ``(a, p, q, b)``; exactly 0 when p == q.

    Evaluated from the exit times ``t-`` and ``t+`` of ``p`` along ``q - p``,
    for which the cross ratio is ``(1 + 1/t-) / (1 - 1/t+)``. When ``t+ < 2``
    the second factor is taken as the ratio of the exit edge's slacks at ``p``
    and ``q``, which avoids the cancellation in ``1 - 1/t+``.
    """
    p = as_vec(p)
    q = as_vec(q)
    if p == q:
        return 0.0
    _require_interior(C, p, "p")
    _require_interior(C, q, "q")
    return _k.distance(C.packed, p.x, p.y, q.x, q.y)


def hilbert_distances(C: ConvexPolygon, P, Q) -> np.ndarray:
    """Vectorised :func:`hilbert_distance` over rows of ``P`` and ``Q``."""
    P = _require_interior_many(C, P, "P")
    Q = _require_interior_many(C, Q, "Q")
    return _k.distance_many(C.packed, P, Q)


def finsler_norm(C: ConvexPolygon, p, v) -> float:
    """``F_C(p, v) = (1/t- + 1/t+) / 2``, and 0 for ``v = 0``."""
    p = _require_interior(C, p)
    v = as_vec(v)
    return _k.finsler(C.packed, p.x, p.y, v.x, v.y)


def finsler_norms(C: ConvexPolygon, P, V) -> np.ndarray:
    P = _require_interior_many(C, P, "P")
    V = np.ascontiguousarray(V, dtype=float)
    return _k.finsler_many(C.packed, P, V)


def finsler_norm_form(C: ConvexPolygon, p, v, norm=l1) -> float:
    """Finsler norm written with boundary points instead of exit times.

    ``F = |v| / 2 * (1/|p - p-| + 1/|p - p+|)`` for any norm ``| . |``.
    """
    v = as_vec(v)
    if v.x == 0.0 and v.y == 0.0:
        return 0.0
    tm, tp = exit_times(C, p, v)
    p = as_vec(p)
    pm = (p.x - tm * v.x, p.y - tm * v.y)
    pp = (p.x + tp * v.x, p.y + tp * v.y)
    dm = norm((p.x - pm[0], p.y - pm[1]))
    dp = norm((p.x - pp[0], p.y - pp[1]))
    return 0.5 * norm(v) * (1.0 / dm + 1.0 / dp)


def segment_length(C: ConvexPolygon, p, q, tol: float = 1e-9) -> float:
    """Finsler length of the affine segment from ``p`` to ``q``.

    Adaptive Simpson (depth cap 40) on ``F_C((1-t) p + t q, q - p)``.
    """
    p = _require_interior(C, p, "p")
    q = _require_interior(C, q, "q")
    if p == q:
        return 0.0
    vx, vy = q.x - p.x, q.y - p.y

    def integrand(t):
        return finsler_norm(C, (p.x + t * vx, p.y + t * vy), (vx, vy))

    return adaptive_simpson(integrand, 0.0, 1.0, tol=tol, max_depth=40)


# -------------------------------------------------------------- metric balls


def metric_ball(C: ConvexPolygon, center, r: float, n_dirs: int = 64,
                tol: float = 1e-9) -> np.ndarray:
    """Boundary of the Hilbert ball of radius ``r`` as an ``(n_dirs, 2)`` array.

    Directions are equally spaced in angle starting along +x; the polyline
    closes from the last row back to the first. Each radius is located by
    bisection on ``u -> d(center, center + u dir)``, which increases along
    the chord through the center.
    """
    c = _require_interior(C, center, "center")
    if not r > 0:
        raise ValueError("radius must be positive")
    if n_dirs < 8:
        raise ValueError("n_dirs must be at least 8")
    out = np.empty((n_dirs, 2))
    for j in range(n_dirs):
        th = 2.0 * math.pi * j / n_dirs
        dx, dy = math.cos(th), math.sin(th)
        hi = _k.ray_exit(C.packed, c.x, c.y, dx, dy)[0]
        lo = 0.0
        u = 0.5 * hi
        for _ in range(200):
            u = 0.5 * (lo + hi)
            x, y = c.x + u * dx, c.y + u * dy
            if _k.min_slack(C.packed, x, y) <= C.interior_margin:
                hi = u
                continue
            d = _k.distance(C.packed, c.x, c.y, x, y)
            if abs(d - r) <= 0.1 * tol:
                break
            if d < r:
                lo = u
            else:
                hi = u
            if hi - lo <= 4e-16 * hi:
                break
        x, y = c.x + u * dx, c.y + u * dy
        if _k.min_slack(C.packed, x, y) <= C.interior_margin:
            raise PointNotInterior(f"PointNotInterior: radius {r!r} reaches the boundary margin")
        d = _k.distance(C.packed, c.x, c.y, x, y)
        if abs(d - r) > tol:
            raise PointNotInterior(
                f"PointNotInterior: radius {r!r} not resolvable in direction {j} (got {d!r})"
            )
        out[j] = (x, y)
    return out
