"""The standard square and the coordinatewise atanh map.

``S = (-1, 1)^2`` is the model domain, ``DELTA = {|y| < x < 1}`` the triangle
with apex at the origin and ``Z = {|Y| < X}`` its cone. ``phi`` sends ``S``
onto the plane, ``DELTA`` onto ``Z``, and on ``DELTA`` its tangent map is
within a factor ``[1, 2]`` of the Hilbert-Finsler norm of ``S`` (l1 target).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import Vec2, as_vec, cross, l1, validate_polygon
from .errors import DegenerateBasis, OutOfDomain, ZeroVector

PHI_GUARD = 1e-15
SECTOR_TOL = 1e-12

SQUARE = validate_polygon([(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])


def _check_square(m) -> Vec2:
    m = as_vec(m)
    lim = 1.0 - PHI_GUARD
    if not (abs(m.x) <= lim and abs(m.y) <= lim):
        raise OutOfDomain(f"OutOfDomain: {tuple(m)} is not inside the square by {PHI_GUARD}")
    return m


def in_delta(m) -> bool:
    x, y = m
    return abs(y) < x < 1.0


def _check_delta(m) -> Vec2:
    m = as_vec(m)
    if not in_delta(m):
        raise OutOfDomain(f"OutOfDomain: {tuple(m)} is not in the triangle |y| < x < 1")
    return m


def _one_minus_sq(x: float) -> float:
    # 1 - x*x loses most digits near |x| = 1; 1 - |x| is exact there
    return (1.0 - x) * (1.0 + x)


def phi(m) -> Vec2:
    m = _check_square(m)
    return Vec2(math.atanh(m.x), math.atanh(m.y))


def phi_inv(P) -> Vec2:
    P = as_vec(P)
    return Vec2(math.tanh(P.x), math.tanh(P.y))


def tangent_phi(m, V) -> Vec2:
    m = _check_square(m)
    V = as_vec(V)
    return Vec2(V.x / _one_minus_sq(m.x), V.y / _one_minus_sq(m.y))


# ------------------------------------------------------------------ sectors


@dataclass(frozen=True)
class SectorPair:
    """Basis ``(v1, v2)`` spanning the sector ``{s v1 + t v2 : s, t >= 0}``."""

    v1: Vec2
    v2: Vec2

    def __post_init__(self):
        if cross(self.v1, self.v2) == 0.0:
            raise DegenerateBasis(f"DegenerateBasis: {tuple(self.v1)}, {tuple(self.v2)}")

    @property
    def orientation(self) -> int:
        return 1 if cross(self.v1, self.v2) > 0 else -1


def sector_coordinates(basis: SectorPair, V) -> tuple[float, float]:
    """Coordinates ``(s, t)`` with ``V = s v1 + t v2``, by Cramer's rule."""
    V = as_vec(V)
    det = cross(basis.v1, basis.v2)
    if det == 0.0:
        raise DegenerateBasis("DegenerateBasis: zero determinant")
    return cross(V, basis.v2) / det, cross(basis.v1, V) / det


def in_sector(basis: SectorPair, V, tol: float = SECTOR_TOL) -> bool:
    s, t = sector_coordinates(basis, V)
    return s >= -tol and t >= -tol


class ZoneLabel(enum.Enum):
    Z12 = "Z12"
    Z23 = "Z23"
    Z34 = "Z34"
    Z4m1 = "Z4m1"
    Zm12 = "Zm12"
    Zm23 = "Zm23"
    Zm34 = "Zm34"
    Z1m4 = "Z1m4"

    @property
    def antipode(self) -> "ZoneLabel":
        return _ANTIPODE[self]

    @property
    def is_antipodal(self) -> bool:
        return self in _ANTIPODE_OF_BASE


_ANTIPODE = {
    ZoneLabel.Z12: ZoneLabel.Zm12,
    ZoneLabel.Z23: ZoneLabel.Zm23,
    ZoneLabel.Z34: ZoneLabel.Zm34,
    ZoneLabel.Z4m1: ZoneLabel.Z1m4,
}
_ANTIPODE_OF_BASE = {v: k for k, v in _ANTIPODE.items()}
_ANTIPODE.update(_ANTIPODE_OF_BASE)


def zone_vectors(m) -> tuple[Vec2, Vec2, Vec2, Vec2]:
    """Vectors from ``m`` towards the corners of the square, as in the zone lemma."""
    x, y = m
    return (
        Vec2(1.0 - x, 1.0 - y),
        Vec2(-1.0 + x, 1.0 + y),
        Vec2(-1.0 - x, 1.0 - y),
        Vec2(-1.0 - x, -1.0 - y),
    )


def zone_sectors(m) -> list[tuple[ZoneLabel, SectorPair]]:
    V1, V2, V3, V4 = zone_vectors(m)
    n1 = Vec2(-V1.x, -V1.y)
    n2 = Vec2(-V2.x, -V2.y)
    n3 = Vec2(-V3.x, -V3.y)
    n4 = Vec2(-V4.x, -V4.y)
    return [
        (ZoneLabel.Z12, SectorPair(V1, V2)),
        (ZoneLabel.Z23, SectorPair(V2, V3)),
        (ZoneLabel.Z34, SectorPair(V3, V4)),
        (ZoneLabel.Z4m1, SectorPair(V4, n1)),
        (ZoneLabel.Zm12, SectorPair(n1, n2)),
        (ZoneLabel.Zm23, SectorPair(n2, n3)),
        (ZoneLabel.Zm34, SectorPair(n3, n4)),
        (ZoneLabel.Z1m4, SectorPair(n4, V1)),
    ]


def classify_zone(m, V) -> ZoneLabel:
    """First sector (in label order) containing ``V`` at the base point ``m``."""
    m = _check_delta(m)
    V = as_vec(V)
    n = l1(V)
    if n == 0.0:
        raise ZeroVector("ZeroVector: V must be nonzero")
    U = Vec2(V.x / n, V.y / n)
    for label, basis in zone_sectors(m):
        if in_sector(basis, U):
            return label
    raise AssertionError(f"no zone contains {tuple(V)} at {tuple(m)}")  # sectors cover the plane


def zone_inclusion_holds(m, V, label: ZoneLabel, slack: float = SECTOR_TOL) -> bool:
    """Whether ``V`` satisfies the sign/inequality condition implied by ``label``.

    Antipodal labels are checked on ``-V``. ``slack`` is relative to ``|V|``.
    """
    x, y = m
    lam, mu = V
    if label.is_antipodal:
        lam, mu = -lam, -mu
        label = label.antipode
    eps = slack * (abs(lam) + abs(mu))
    ax = _one_minus_sq(x)
    ay = _one_minus_sq(y)
    if label is ZoneLabel.Z12:
        return mu > -eps and abs(lam) / ax <= mu / ay + eps / min(ax, ay)
    if label is ZoneLabel.Z23:
        return lam < eps and mu > -eps
    if label is ZoneLabel.Z34:
        return lam < eps and abs(mu) / ay <= -lam / ax + eps / min(ax, ay)
    return lam < eps and mu < eps


def finsler_square(m, V) -> float:
    """``F_S(m, V)`` for ``m`` in DELTA by the per-zone closed forms.

    Antipodal zones reuse their base zone through reversibility.
    """
    m = _check_delta(m)
    V = as_vec(V)
    if V.x == 0.0 and V.y == 0.0:
        return 0.0
    label = classify_zone(m, V)
    lam, mu = V
    if label.is_antipodal:
        lam, mu = -lam, -mu
        label = label.antipode
    x, y = m
    if label is ZoneLabel.Z12:
        return mu / _one_minus_sq(y)
    if label is ZoneLabel.Z23:
        return 0.5 * (-lam / (1.0 - x) + mu / (1.0 - y))
    if label is ZoneLabel.Z34:
        return -lam / _one_minus_sq(x)
    return 0.5 * (-lam / (1.0 - x) - mu / (1.0 + y))


def sandwich_check(m, V) -> tuple[float, float, float]:
    """``(F_S(m, V), |T_m phi V|_1, ratio)``; the ratio lies in ``[1, 2]`` on DELTA."""
    m = _check_delta(m)
    V = as_vec(V)
    if V.x == 0.0 and V.y == 0.0:
        raise ZeroVector("ZeroVector: V must be nonzero")
    fs = finsler_square(m, V)
    img = l1(tangent_phi(m, V))
    return fs, img, img / fs
