"""Explicit constants behind the comparison and bi-Lipschitz bounds.

Two families live here.

* For a triangle ``T = hull{(1,-1), (1,1), (-a,0)}`` inside a quadrilateral
  ``Q = hull{(1,-1), (1,1), (-b,c), (-b,-c)}`` (``0 < a < 1 <= b < c``) the
  constant ``A`` with ``A F_T <= F_Q <= F_T`` on the model triangle, assembled
  from six case constants.
* For a polygon with a fan around the origin, the per-edge comparison
  constants ``B_k = 1/A``, the ray constants ``Lambda_k`` and the global
  bi-Lipschitz constant ``C`` of the flattening map.

Each constant is recorded with a provenance string describing how it is
obtained, and every one has an empirical check in this module or in
:mod:`polyhilbert.verify`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import core
from .core import ConvexPolygon, Vec2, cross, l1, validate_polygon
from .errors import (
    BadAlpha,
    BadConfig,
    Collinear,
    HypothesisViolated,
    ParallelConfig,
    ParallelLines,
    PreconditionUnmet,
)
from .flatten import FanDecomposition, forward_many, opnorm_l1
from .sampling import delta_points, directions, interior_points, rng
from .square import SQUARE

# ----------------------------------------------------------------- ledger type


@dataclass
class ConstantLedger:
    """Ordered name -> (value, provenance) record."""

    entries: dict = field(default_factory=dict)

    def add(self, name: str, value: float, provenance: str) -> float:
        self.entries[name] = (float(value), provenance)
        return float(value)

    def __getitem__(self, name: str) -> float:
        return self.entries[name][0]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def merge(self, other: "ConstantLedger", suffix: str = "") -> None:
        for name, (v, prov) in other.entries.items():
            self.entries[name + suffix] = (v, prov)

    def to_records(self) -> list[dict]:
        return [{"name": k, "value": v, "provenance": p} for k, (v, p) in self.entries.items()]


# ------------------------------------------------------------ T / Q constants


@dataclass(frozen=True)
class TQConfig:
    a: float
    b: float
    c: float

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not all(math.isfinite(x) for x in (a, b, c)) or not (0 < a < 1 <= b < c):
            raise BadConfig(f"BadConfig: need 0 < a < 1 <= b < c, got a={a!r}, b={b!r}, c={c!r}")

    def triangle(self) -> ConvexPolygon:
        return validate_polygon([(1.0, -1.0), (1.0, 1.0), (-self.a, 0.0)])

    def quadrilateral(self) -> ConvexPolygon:
        b, c = self.b, self.c
        return validate_polygon([(1.0, -1.0), (1.0, 1.0), (-b, c), (-b, -c)])


def alpha0(b: float, c: float) -> float:
    """Height at which the diagonal ``y = x`` meets the line through (1,-1) and (-b,c)."""
    if not (1 <= b < c):
        raise BadConfig(f"BadConfig: need 1 <= b < c, got b={b!r}, c={c!r}")
    return (c - b) / (c + b + 2)


def kappa0(cfg: TQConfig) -> float:
    """l1 diameter of Q (attained at a vertex pair)."""
    V = cfg.quadrilateral().vertices
    return max(l1((p[0] - q[0], p[1] - q[1])) for p in V for q in V)


def _point_segment_l1(p, a, b) -> float:
    """Exact l1 distance from ``p`` to segment ``[a, b]``.

    ``w -> |p - a - w (b - a)|_1`` is convex piecewise linear, so its minimum
    over ``[0, 1]`` is at an endpoint or at a kink.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    cands = [0.0, 1.0]
    if dx != 0.0:
        cands.append((p[0] - a[0]) / dx)
    if dy != 0.0:
        cands.append((p[1] - a[1]) / dy)
    best = math.inf
    for w in cands:
        w = min(max(w, 0.0), 1.0)
        best = min(best, abs(p[0] - a[0] - w * dx) + abs(p[1] - a[1] - w * dy))
    return best


def _segments_cross(p1, p2, q1, q2) -> bool:
    d1 = cross((p2[0] - p1[0], p2[1] - p1[1]), (q1[0] - p1[0], q1[1] - p1[1]))
    d2 = cross((p2[0] - p1[0], p2[1] - p1[1]), (q2[0] - p1[0], q2[1] - p1[1]))
    d3 = cross((q2[0] - q1[0], q2[1] - q1[1]), (p1[0] - q1[0], p1[1] - q1[1]))
    d4 = cross((q2[0] - q1[0], q2[1] - q1[1]), (p2[0] - q1[0], p2[1] - q1[1]))
    return d1 * d2 <= 0 and d3 * d4 <= 0


def segment_distance_l1(p1, p2, q1, q2) -> float:
    """Exact l1 distance between two segments in the plane.

    The joint objective is convex piecewise linear on the parameter square;
    off the boundary its only vertex is a crossing of the segments, so the
    minimum is either 0 or an endpoint-to-segment distance.
    """
    if _segments_cross(p1, p2, q1, q2):
        return 0.0
    return min(
        _point_segment_l1(p1, q1, q2),
        _point_segment_l1(p2, q1, q2),
        _point_segment_l1(q1, p1, p2),
        _point_segment_l1(q2, p1, p2),
    )


def lower_region(alpha: float) -> list[tuple[float, float]]:
    """Closure of ``{0 <= y < x < 1, y < alpha}`` as a CCW vertex list."""
    return [(0.0, 0.0), (1.0, 0.0), (1.0, alpha), (alpha, alpha)]


def delta0(a: float, alpha: float) -> float:
    """l1 distance from the lower region to the segment ``[(1,1), (-a,0)]``.

    The two convex sets are disjoint, so the distance is attained on the
    region's boundary: minimise the exact segment-to-segment distance over
    the region's four edges.
    """
    if not (0 < a < 1) or not (0 < alpha < 1):
        raise BadConfig(f"BadConfig: need a, alpha0 in (0, 1), got {a!r}, {alpha!r}")
    R = lower_region(alpha)
    top, tip = (1.0, 1.0), (-a, 0.0)
    return min(segment_distance_l1(R[i], R[(i + 1) % 4], top, tip) for i in range(4))


def delta0_grid(a: float, alpha: float, n: int = 2000) -> tuple[float, float]:
    """Brute-force ``delta0``: ``n`` points on the region's perimeter against
    ``n`` points on the segment. Returns ``(value, step)`` where ``step`` is
    the larger l1 spacing of the two samplings; the value overshoots the true
    distance by at most ``step``.
    """
    R = np.array(lower_region(alpha) + [lower_region(alpha)[0]])
    seg_len = np.abs(np.diff(R, axis=0)).sum(axis=1)
    per = seg_len.sum()
    u = np.linspace(0.0, per, n)
    cum = np.concatenate([[0.0], np.cumsum(seg_len)])
    idx = np.clip(np.searchsorted(cum, u, side="right") - 1, 0, 3)
    w = ((u - cum[idx]) / seg_len[idx])[:, None]
    A = R[idx] * (1 - w) + R[idx + 1] * w
    top, tip = np.array([1.0, 1.0]), np.array([-a, 0.0])
    w2 = np.linspace(0.0, 1.0, n)[:, None]
    B = top * (1 - w2) + tip * w2
    best = math.inf
    for chunk in np.array_split(np.arange(n), 8):
        D = np.abs(A[chunk, None, :] - B[None, :, :]).sum(axis=2)
        best = min(best, float(D.min()))
    step = max(per, float(np.abs(top - tip).sum())) / (n - 1)
    return best, step


def _line_intersection(p1, p2, q1, q2):
    """Intersection of lines (p1 p2) and (q1 q2) as ``(point, mu)`` where
    ``point = q1 + mu (q2 - q1)``; None if parallel."""
    d = (p2[0] - p1[0], p2[1] - p1[1])
    e = (q2[0] - q1[0], q2[1] - q1[1])
    den = cross(d, e)
    scale = max(l1(d) * l1(e), 1e-300)
    if abs(den) <= 1e-14 * scale:
        return None
    w = (q1[0] - p1[0], q1[1] - p1[1])
    mu = cross(d, w) / -den
    return Vec2(q1[0] + mu * e[0], q1[1] + mu * e[1]), mu


def m0_ratio(cfg: TQConfig) -> float:
    """Signed ratio ``|m0 p0| / |m0 q0|`` along the line from ``m0 = (1,-1)``
    to ``q0 = (-b, c)``, where ``p0`` is where that line meets the line
    through ``(1, 1)`` and ``(-a, 0)``."""
    m0, q0 = (1.0, -1.0), (-cfg.b, cfg.c)
    hit = _line_intersection((1.0, 1.0), (-cfg.a, 0.0), m0, q0)
    if hit is None:
        raise ParallelLines("ParallelLines: the point p0 is undefined for this configuration")
    return hit[1]


@dataclass(frozen=True)
class CaseConstants:
    alpha0: float
    kappa0: float
    delta0: float
    ratio_m0: float
    K1: float
    K2: float
    K3: float
    K4: float
    K5: float
    K6: float
    K: float
    A: float

    @property
    def B(self) -> float:
        return 1.0 / self.A


def case_constants(cfg: TQConfig) -> CaseConstants:
    a, b, c = cfg.a, cfg.b, cfg.c
    al = alpha0(b, c)
    ka = kappa0(cfg)
    de = delta0(a, al)
    r = m0_ratio(cfg)
    K1 = min(al / ka, r)
    K2 = a * (1 + b) / ((1 + a) * (b + c))
    K3 = a * (b - a) / ((1 + a) * (b - a + c))
    K4 = min(1.0, al / ka)
    K5 = min(1.0, de / ka)
    K6 = de / ka
    K = min(K1, K2, K3, K4)
    return CaseConstants(al, ka, de, r, K1, K2, K3, K4, K5, K6, K, min(K, K5, K6))


_TQ_PROVENANCE = {
    "alpha0": "(c - b)/(c + b + 2): where the line (1,-1)-(-b,c) crosses the diagonal y = x",
    "kappa0": "l1 diameter of Q, maximised over vertex pairs",
    "delta0": "l1 distance from {0<=y<=x<=1, y<=alpha0} to the segment [(1,1),(-a,0)], "
              "exact edge-pair minimisation",
    "ratio_m0": "m0p0/m0q0 with m0=(1,-1), q0=(-b,c), p0 on the line through (1,1),(-a,0)",
    "K1": "min(alpha0/kappa0, m0p0/m0q0): V between the directions to (1,1) and from (1,-1)",
    "K2": "a(1+b)/((1+a)(b+c)): forward exit through the upper edges",
    "K3": "a(b-a)/((1+a)(b-a+c)): forward exit through the left edge of Q",
    "K4": "min(1, alpha0/kappa0): forward exit through the lower edge of T",
    "K5": "min(1, delta0/kappa0): base points below alpha0, backward exit through x = 1",
    "K6": "delta0/kappa0: base points below alpha0, both exits off x = 1",
    "K": "min(K1, K2, K3, K4)",
    "A": "min(K, K5, K6): A F_T <= F_Q <= F_T on the model triangle",
    "B": "1/A",
}


def tq_ledger(cfg: TQConfig) -> ConstantLedger:
    cc = case_constants(cfg)
    led = ConstantLedger()
    led.add("a", cfg.a, "triangle apex (-a, 0)")
    led.add("b", cfg.b, "quadrilateral left edge x = -b")
    led.add("c", cfg.c, "quadrilateral corners (-b, +-c)")
    for name in ("alpha0", "kappa0", "delta0", "ratio_m0", "K1", "K2", "K3", "K4", "K5", "K6",
                 "K", "A"):
        led.add(name, getattr(cc, name), _TQ_PROVENANCE[name])
    led.add("B", cc.B, _TQ_PROVENANCE["B"])
    return led


@dataclass(frozen=True)
class ComparisonSweep:
    n: int
    inf_ratio: float
    sup_ratio: float
    violations: int
    A: float


def verify_A_empirically(cfg: TQConfig, n_samples: int = 100_000, seed: int = 42,
                         slack: float = 1e-9) -> ComparisonSweep:
    """Sample ``F_Q / F_T`` over the model triangle and all directions.

    A violation is a ratio below ``A - slack`` or above ``1 + slack``.
    """
    A = case_constants(cfg).A
    T, Q = cfg.triangle(), cfg.quadrilateral()
    g = rng(seed)
    M = delta_points(n_samples, g)
    V = directions(n_samples, g)
    ok = T.contains_many(M) & Q.contains_many(M)
    M, V = M[ok], V[ok]
    ratio = core.finsler_norms(Q, M, V) / core.finsler_norms(T, M, V)
    bad = (ratio < A - slack) | (ratio > 1.0 + slack)
    return ComparisonSweep(len(ratio), float(ratio.min()), float(ratio.max()), int(bad.sum()), A)


# -------------------------------------------------------------------- M(alpha)


def _h(alpha: float, lam: float) -> float:
    return (1 + alpha * lam) / (alpha * (1 + lam))


def M_of_alpha(alpha: float) -> float:
    """Smallest ``M >= 1`` with ``1/M <= phi <= M`` for the log-ratio ``phi``.

    ``phi(s, t) = log((1+t)/(1+s)) / log((1+alpha t)/(1+alpha s))`` is, by the
    Cauchy mean value theorem, ``h(xi) = (1 + alpha xi)/(alpha (1 + xi))`` for
    some ``xi`` in ``(s, t)``; ``h`` is monotone on ``[0, 1]``, so the extremes
    are ``h(0) = 1/alpha`` and ``h(1) = (1 + alpha)/(2 alpha)``.
    """
    if not (alpha > 0 and math.isfinite(alpha)):
        raise BadAlpha(f"BadAlpha: alpha must be positive, got {alpha!r}")
    if alpha == 1.0:
        return 1.0
    h0, h1 = _h(alpha, 0.0), _h(alpha, 1.0)
    return max(h0, h1, 1.0 / h0, 1.0 / h1)


def M_grid(alpha: float, n: int = 400) -> float:
    """Grid supremum of ``max(phi, 1/phi)`` over ``0 <= s < t <= 1``.

    Nodes are Chebyshev-Lobatto points on ``[0, 1]`` so the grid reaches the
    corners, where the supremum sits, to within ``~1e-5``.
    """
    x = 0.5 * (1.0 - np.cos(np.pi * np.arange(n) / (n - 1)))
    s, t = np.meshgrid(x, x, indexing="ij")
    keep = s < t
    s, t = s[keep], t[keep]
    phi = np.log1p((t - s) / (1 + s)) / np.log1p(alpha * (t - s) / (1 + alpha * s))
    return float(np.maximum(phi, 1.0 / phi).max())


# ---------------------------------------------------- enclosing T and Q


@dataclass(frozen=True)
class EnclosingParameters:
    a: float
    b: float
    c: float
    c1: float
    c2: float

    @property
    def config(self) -> TQConfig:
        return TQConfig(self.a, self.b, self.c)


def _vertex_index(C: ConvexPolygon, point, tol: float) -> int | None:
    for i, v in enumerate(C.vertices):
        if abs(v.x - point[0]) <= tol and abs(v.y - point[1]) <= tol:
            return i
    return None


def check_enclosing_hypotheses(C: ConvexPolygon, name: str = "C") -> tuple[int, int]:
    """Indices of the corners ``(1,-1)`` and ``(1,1)`` of ``C``.

    Raises:
        HypothesisViolated: naming the failed condition (1)-(4): (1) the
            segment ``{1} x [-1, 1]`` is on the boundary, (2) ``(1, +-1)`` are
            corners, (3) the origin is interior, (4) the model triangle is
            inside.
    """
    tol = 1e-9 * max(1.0, C.diameter)
    lo, hi = (1.0, -1.0), (1.0, 1.0)
    for pt in (lo, hi):
        if abs(C.slack(pt)) > tol:
            raise HypothesisViolated(
                f"HypothesisViolated: (1) {pt} is not on the boundary of {name}", which=1)
    on_right = any(
        abs(e.origin.x - 1.0) <= tol and abs(e.origin.x + e.direction.x - 1.0) <= tol
        for e in C.edges
    )
    if not on_right:
        raise HypothesisViolated(
            f"HypothesisViolated: (1) segment {{1}}x[-1,1] is not on the boundary of {name}",
            which=1)
    i_lo, i_hi = _vertex_index(C, lo, tol), _vertex_index(C, hi, tol)
    if i_lo is None or i_hi is None:
        raise HypothesisViolated(f"HypothesisViolated: (2) (1,+-1) are not both corners of {name}",
                                 which=2)
    if not C.contains((0.0, 0.0)):
        raise HypothesisViolated(f"HypothesisViolated: (3) origin not interior to {name}", which=3)
    # with (1)-(3), convexity already puts the open model triangle inside
    if not (C.slack(lo) >= -tol and C.slack(hi) >= -tol):
        raise HypothesisViolated(f"HypothesisViolated: (4) model triangle not in {name}", which=4)
    return i_lo, i_hi


def _support_heights(C: ConvexPolygon, i_lo: int, i_hi: int, b: float) -> float:
    """Largest |y| where the non-vertical support lines at (1,+-1) hit x = -b.

    The support line at each corner is the supporting line of the adjacent
    edge that is not ``x = 1``.
    """
    n = C.n
    heights = []
    for i, nb in ((i_hi, (i_hi + 1) % n), (i_lo, (i_lo - 1) % n)):
        v, w = C.vertices[i], C.vertices[nb]
        slope = (w.y - v.y) / (w.x - v.x)
        heights.append(abs(v.y + slope * (-b - v.x)))
    return max(heights)


def enclosing_parameters(C1: ConvexPolygon, C2: ConvexPolygon) -> EnclosingParameters:
    """``(a, b, c)`` with ``T(a) inside C1 and C2`` and both inside ``Q(b, c)``."""
    idx1 = check_enclosing_hypotheses(C1, "C1")
    idx2 = check_enclosing_hypotheses(C2, "C2")
    reach = min(
        core.ray_exit(C, (0.0, 0.0), d).t_plus
        for C in (C1, C2)
        for d in ((1.0, 0.0), (-1.0, 0.0))
    )
    a = 0.99 * min(reach, 1.0)
    b = max(1.0, max(max(abs(v.x), abs(v.y)) for C in (C1, C2) for v in C.vertices))
    c1 = _support_heights(C1, *idx1, b)
    c2 = _support_heights(C2, *idx2, b)
    return EnclosingParameters(a, b, max(c1, c2) + b + 1.0, c1, c2)


def comparison_constant_B(C1: ConvexPolygon, C2: ConvexPolygon) -> float:
    return case_constants(enclosing_parameters(C1, C2).config).B


# ------------------------------------------------------- theorem constants


def theorem_constants(fan: FanDecomposition) -> ConstantLedger:
    """All constants of the bi-Lipschitz bound for ``fan``.

    Per edge ``k`` (names are 1-based, ``v_1`` is the first vertex): the
    comparison constant ``B_k`` of ``S`` against ``L_k(P)``, the operator norms
    of ``L_k`` and its inverse, ``alpha_k = 1/t^-(0, v_k)``, ``M_k = M(alpha_k)``
    and ``Lambda_k``. Globally ``K_global`` and ``C``.
    """
    led = ConstantLedger()
    P = fan.polygon
    K_terms = []
    lambdas = []
    for k in range(fan.n):
        j = k + 1
        Pk = P.transformed(fan.L[k])
        ep = enclosing_parameters(SQUARE, Pk)
        cc = case_constants(ep.config)
        nL, nLi = opnorm_l1(fan.L[k]), opnorm_l1(fan.L_inv[k])
        vk = fan.vertices[k]
        t_minus = core.ray_exit(P, (0.0, 0.0), (-vk[0], -vk[1])).t_plus
        alpha = 1.0 / t_minus
        M = M_of_alpha(alpha)
        nv = l1(vk)
        lam = M * max(nv, 1.0 / nv)
        led.add(f"a_{j}", ep.a, "0.99 x half-width of the x-axis interval inside S and L_k(P)")
        led.add(f"b_{j}", ep.b, "max(1, largest |coordinate| of S and L_k(P))")
        led.add(f"c_{j}", ep.c, "max support-line height at x = -b over S and L_k(P), plus b + 1")
        led.add(f"A_{j}", cc.A, _TQ_PROVENANCE["A"] + ", for (a_k, b_k, c_k)")
        led.add(f"B_{j}", cc.B, "1/A_k: Finsler comparison of S and L_k(P) on the model triangle")
        led.add(f"normL_{j}", nL, "l1 operator norm of L_k (max column sum)")
        led.add(f"normLinv_{j}", nLi, "l1 operator norm of L_k^{-1} (max column sum)")
        led.add(f"alpha_{j}", alpha, "1/t^-(0, v_k): inverse backward exit time from the origin")
        led.add(f"M_{j}", M, "M(alpha_k) = max(h(0), h(1), 1/h(0), 1/h(1)), "
                             "h(l) = (1 + alpha l)/(alpha (1 + l))")
        led.add(f"Lambda_{j}", lam, "M(alpha_k) x max(|v_k|, 1/|v_k|): distortion along [0,1) v_k")
        K_terms.append(cc.B * nL + 2.0 * cc.B * nLi + 1.0)
        lambdas.append(lam)
    K = led.add("K_global", max(K_terms), "max_k (B_k |L_k| + 2 B_k |L_k^{-1}| + 1): "
                                          "Jacobian of f against F_P")
    led.add("C", max(lambdas) + K, "max_k Lambda_k + K_global: bi-Lipschitz constant of f")
    return led


@dataclass(frozen=True)
class LipschitzSweep:
    n: int
    min_ratio: float
    max_ratio: float


def empirical_lipschitz(fan: FanDecomposition, n_pairs: int = 100_000,
                        seed: int = 42) -> LipschitzSweep:
    """Extremes of ``|f(p) - f(q)|_1 / d_P(p, q)`` over uniform interior pairs."""
    g = rng(seed)
    P = interior_points(fan.polygon, n_pairs, g)
    Q = interior_points(fan.polygon, n_pairs, g)
    keep = (P != Q).any(axis=1)
    P, Q = P[keep], Q[keep]
    d = core.hilbert_distances(fan.polygon, P, Q)
    e = np.abs(forward_many(fan, P) - forward_many(fan, Q)).sum(axis=1)
    r = e / d
    return LipschitzSweep(len(r), float(r.min()), float(r.max()))


# ------------------------------------------------------- projection lemma


def _ray_ratio(omega, q, p) -> float:
    """``omega q / omega p`` for ``q`` on the ray from ``omega`` through ``p``,
    read along the dominant coordinate of ``p - omega``."""
    dp = (p[0] - omega[0], p[1] - omega[1])
    i = 0 if abs(dp[0]) >= abs(dp[1]) else 1
    return (q[i] - omega[i]) / dp[i]


def projection_configuration(omega, q1, q2, p1_param, p2_param):
    """Build ``p1, p2`` and the meeting point ``omega0`` of lines (p1 p2), (q1 q2).

    Returns ``(p1, p2, omega0, between)`` where ``between`` says whether ``q1``
    lies strictly between ``omega0`` and ``q2``.
    """
    omega, q1, q2 = core.as_vec(omega), core.as_vec(q1), core.as_vec(q2)
    u = (q1.x - omega.x, q1.y - omega.y)
    w = (q2.x - omega.x, q2.y - omega.y)
    if abs(cross(u, w)) <= 1e-12 * l1(u) * l1(w):
        raise Collinear("Collinear: omega, q1, q2 are collinear")
    p1 = Vec2(omega.x + p1_param * u[0], omega.y + p1_param * u[1])
    p2 = Vec2(omega.x + p2_param * w[0], omega.y + p2_param * w[1])
    hit = _line_intersection(p1, p2, q1, q2)
    if hit is None:
        raise ParallelConfig("ParallelConfig: lines (p1 p2) and (q1 q2) are parallel")
    omega0, mu = hit
    # q1 strictly between omega0 = q1 + mu (q2 - q1) and q2  <=>  mu < 0
    return p1, p2, omega0, mu < 0.0


def projection_lemma_check(omega, q1, q2, p1_param: float, p2_param: float) -> bool:
    """Whether ``omega q2 / omega p2 > omega q1 / omega p1`` holds.

    Raises:
        PreconditionUnmet: if ``q1`` is not strictly between ``omega0`` and ``q2``,
            or a parameter is outside ``(0, 1)``.
    """
    if not (0 < p1_param < 1 and 0 < p2_param < 1):
        raise PreconditionUnmet("PreconditionUnmet: ray parameters must lie in (0, 1)")
    p1, p2, _, between = projection_configuration(omega, q1, q2, p1_param, p2_param)
    if not between:
        raise PreconditionUnmet("PreconditionUnmet: q1 is not strictly between omega0 and q2")
    omega = core.as_vec(omega)
    return _ray_ratio(omega, q2, p2) > _ray_ratio(omega, q1, p1)


def random_projection_configs(n: int, gen: np.random.Generator, max_tries: int = 100):
    """Yield ``n`` random inputs that satisfy the lemma's preconditions."""
    made = 0
    while made < n:
        for _ in range(max_tries):
            omega, q1, q2 = gen.uniform(-1.0, 1.0, size=(3, 2))
            l1_, l2_ = gen.uniform(1e-6, 1.0 - 1e-6, size=2)
            try:
                *_, between = projection_configuration(omega, q1, q2, l1_, l2_)
            except (Collinear, ParallelConfig):
                continue
            if between:
                yield tuple(omega), tuple(q1), tuple(q2), float(l1_), float(l2_)
                made += 1
                break
        else:
            raise RuntimeError("could not draw a valid projection configuration")
