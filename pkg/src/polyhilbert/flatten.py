"""Bi-Lipschitz flattening of a polygon onto the plane.

The polygon is cut into triangles ``Delta_k`` with apex at the origin and
base the edge ``[v_k, v_{k+1}]``. ``L_k`` is the linear map sending ``v_k`` to
``(1, -1)`` and ``v_{k+1}`` to ``(1, 1)``, so ``L_k(Delta_k)`` is the model
triangle of :mod:`polyhilbert.square`, and on ``Delta_k``

    f(p) = L_k^{-1} phi(L_k p),    g(P) = L_k^{-1} phi^{-1}(L_k P).

Indices ``k`` are 0-based here; triangle ``k`` uses vertices ``k`` and
``k + 1`` (mod n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ConvexPolygon, Vec2, as_vec
from .square import PHI_GUARD, phi
from .errors import (
    NearDegenerateTriangle,
    OutOfDomain,
    OnFanRay,
    OriginNotInterior,
    PointNotInterior,
    SaturationOverflow,
)

SATURATION = 20.0
RAY_TOL = 1e-12
_NORMAL_POSITION = np.array([[1.0, 1.0], [-1.0, 1.0]])  # columns (1,-1), (1,1)


def opnorm_l1(M) -> float:
    """l1 -> l1 operator norm: largest absolute column sum."""
    return float(np.abs(np.asarray(M)).sum(axis=0).max())


@dataclass(frozen=True, eq=False)
class FanDecomposition:
    polygon: ConvexPolygon
    vertices: np.ndarray  # (n, 2)
    L: np.ndarray  # (n, 2, 2)
    L_inv: np.ndarray  # (n, 2, 2)
    basis_inv: np.ndarray  # (n, 2, 2): p -> (s, t) with p = s v_k + t v_{k+1}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, k: int) -> np.ndarray:
        return self.vertices[k % self.n]


def build_fan(P: ConvexPolygon) -> FanDecomposition:
    """Fan of ``P`` around the origin, which must be strictly interior."""
    if not P.contains((0.0, 0.0)):
        c = P.centroid()
        raise OriginNotInterior(
            f"OriginNotInterior: translate by centroid ({c.x!r},{c.y!r})", centroid=c
        )
    V = P.as_array()
    n = len(V)
    L = np.empty((n, 2, 2))
    L_inv = np.empty((n, 2, 2))
    B_inv = np.empty((n, 2, 2))
    for k in range(n):
        vk, vk1 = V[k], V[(k + 1) % n]
        angle = math.atan2(vk[0] * vk1[1] - vk[1] * vk1[0], vk @ vk1)
        if not angle > 1e-10:
            raise NearDegenerateTriangle(
                f"NearDegenerateTriangle: angle {angle!r} at the origin for triangle {k}"
            )
        B = np.column_stack([vk, vk1])
        B_inv[k] = np.linalg.inv(B)
        L[k] = _NORMAL_POSITION @ B_inv[k]
        L_inv[k] = np.linalg.inv(L[k])
    return FanDecomposition(P, V, L, L_inv, B_inv)


def _coords(fan: FanDecomposition, p) -> np.ndarray:
    """(n, 2) array of fan coordinates of ``p`` against every triangle."""
    return fan.basis_inv @ np.asarray(p, dtype=float)


def locate_triangle(fan: FanDecomposition, p) -> int:
    """Lowest ``k`` with ``p = s v_k + t v_{k+1}``, ``s, t >= 0`` and ``s + t < 1``."""
    p = as_vec(p)
    if not fan.polygon.contains(p):
        raise PointNotInterior(f"PointNotInterior: {tuple(p)}")
    st = _coords(fan, p)
    ok = (st[:, 0] >= -RAY_TOL) & (st[:, 1] >= -RAY_TOL) & (st.sum(axis=1) < 1.0)
    return int(np.argmax(ok))


def _locate_sector(fan: FanDecomposition, P) -> int:
    st = _coords(fan, P)
    ok = (st[:, 0] >= -RAY_TOL) & (st[:, 1] >= -RAY_TOL)
    return int(np.argmax(ok))


def forward(fan: FanDecomposition, p) -> Vec2:
    """The flattening map ``f``."""
    k = locate_triangle(fan, p)
    m = fan.L[k] @ np.asarray(p, dtype=float)
    out = fan.L_inv[k] @ np.asarray(phi(m))
    return Vec2(float(out[0]), float(out[1]))


def inverse(fan: FanDecomposition, P) -> Vec2:
    """The inverse map ``g``, defined on the whole plane.

    Raises:
        SaturationOverflow: if ``|L_k P|_inf > 20``, where ``tanh`` is within an
            ulp of 1 and the round trip carries no information.
    """
    P = as_vec(P)
    k = _locate_sector(fan, P)
    m = fan.L[k] @ np.asarray(P)
    mag = float(np.abs(m).max())
    if mag > SATURATION:
        raise SaturationOverflow(
            f"SaturationOverflow: |L_k P|_inf = {mag!r} exceeds {SATURATION}", magnitude=mag
        )
    out = fan.L_inv[k] @ np.tanh(m)
    return Vec2(float(out[0]), float(out[1]))


def forward_many(fan: FanDecomposition, P) -> np.ndarray:
    """Vectorised :func:`forward` over the rows of ``P``."""
    P = np.asarray(P, dtype=float)
    if not fan.polygon.contains_many(P).all():
        raise PointNotInterior("PointNotInterior: some rows are not interior")
    st = np.einsum("kij,mj->mki", fan.basis_inv, P)
    ok = (st[..., 0] >= -RAY_TOL) & (st[..., 1] >= -RAY_TOL) & (st.sum(axis=2) < 1.0)
    k = ok.argmax(axis=1)
    m = np.einsum("mij,mj->mi", fan.L[k], P)
    if (np.abs(m) > 1.0 - PHI_GUARD).any():
        raise OutOfDomain("OutOfDomain: a row maps within the atanh guard of the model square")
    return np.einsum("mij,mj->mi", fan.L_inv[k], np.arctanh(m))


def inverse_many(fan: FanDecomposition, Q) -> np.ndarray:
    Q = np.asarray(Q, dtype=float)
    st = np.einsum("kij,mj->mki", fan.basis_inv, Q)
    ok = (st[..., 0] >= -RAY_TOL) & (st[..., 1] >= -RAY_TOL)
    k = ok.argmax(axis=1)
    m = np.einsum("mij,mj->mi", fan.L[k], Q)
    mag = np.abs(m).max(axis=1)
    if (mag > SATURATION).any():
        worst = float(mag.max())
        raise SaturationOverflow(
            f"SaturationOverflow: |L_k P|_inf = {worst!r} exceeds {SATURATION}", magnitude=worst
        )
    return np.einsum("mij,mj->mi", fan.L_inv[k], np.tanh(m))


def ray_distance(fan: FanDecomposition, p) -> float:
    """Euclidean distance from ``p`` to the union of the rays ``[0, 1) v_k``."""
    p = np.asarray(p, dtype=float)
    best = math.inf
    for v in fan.vertices:
        u = min(max(float(p @ v) / float(v @ v), 0.0), 1.0)
        best = min(best, float(np.hypot(*(p - u * v))))
    return best


def jacobian(fan: FanDecomposition, p) -> np.ndarray:
    """Derivative of ``f`` at ``p``, off the fan rays."""
    k = locate_triangle(fan, p)
    if ray_distance(fan, p) <= RAY_TOL:
        raise OnFanRay(f"OnFanRay: {tuple(p)} lies on a fan ray; f is not differentiable there")
    x, y = fan.L[k] @ np.asarray(p, dtype=float)
    D = np.diag([1.0 / ((1.0 - x) * (1.0 + x)), 1.0 / ((1.0 - y) * (1.0 + y))])
    return fan.L_inv[k] @ D @ fan.L[k]
