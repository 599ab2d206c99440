import math

import numpy as np
import pytest

from polyhilbert import core, flatten
from polyhilbert.errors import (
    NearDegenerateTriangle,
    OnFanRay,
    OriginNotInterior,
    PointNotInterior,
    SaturationOverflow,
)
from polyhilbert.flatten import build_fan, forward, inverse, jacobian, locate_triangle
from polyhilbert.sampling import directions, interior_points, rng


def test_square_fan(square):
    fan = build_fan(square)
    assert fan.n == 4
    # edge (1,-1) -> (1,1) is already in normal position
    k = [tuple(v) for v in fan.vertices].index((1.0, -1.0))
    assert np.array_equal(fan.L[k], np.eye(2))


def test_triangle_fan(triangle):
    fan = build_fan(triangle)
    assert fan.n == 3
    for k in range(3):
        assert abs(np.linalg.det(fan.L[k])) > 0
        assert fan.L[k] @ fan.vertex(k) == pytest.approx((1, -1), abs=1e-15)
        assert fan.L[k] @ fan.vertex(k + 1) == pytest.approx((1, 1), abs=1e-15)
        assert np.allclose(fan.L[k] @ fan.L_inv[k], np.eye(2), atol=1e-15)


def test_origin_guard():
    P = core.validate_polygon([(1, 1), (3, 1), (2, 3)])
    with pytest.raises(OriginNotInterior) as err:
        build_fan(P)
    assert "translate by centroid (2.0,1.6666666666666667)" in str(err.value)
    assert err.value.centroid == pytest.approx((2.0, 5 / 3))


def test_near_degenerate_guard():
    # a sliver edge seen from a far origin subtends less than 1e-10 rad
    P = core.validate_polygon([(-1, -1), (1e9, -1), (1e9, -1 + 1e-3), (-1, 1)])
    with pytest.raises(NearDegenerateTriangle):
        build_fan(P)


def test_fan_covers_polygon(polygon):
    fan = build_fan(polygon)
    P = interior_points(polygon, 2000, rng(1))
    for p in P:
        st = fan.basis_inv @ p
        inside = (st[:, 0] >= -1e-12) & (st[:, 1] >= -1e-12) & (st.sum(axis=1) < 1)
        assert inside.any()
        k = locate_triangle(fan, p)
        assert inside[k] and not inside[:k].any()
        # L_k sends the triangle into the model triangle's closure
        x, y = fan.L[k] @ p
        assert abs(y) <= x + 1e-12 and x < 1


def test_locate_conventions(pentagon):
    fan = build_fan(pentagon)
    assert locate_triangle(fan, (0, 0)) == 0
    assert locate_triangle(fan, 0.5 * fan.vertex(1)) == 0
    inner = 0.3 * fan.vertex(2) + 0.3 * fan.vertex(3)
    assert locate_triangle(fan, inner) == 2
    with pytest.raises(PointNotInterior):
        locate_triangle(fan, (5, 5))


def test_forward_examples(square):
    fan = build_fan(square)
    assert forward(fan, (0, 0)) == (0.0, 0.0)
    assert forward(fan, (0.5, 0)) == pytest.approx((math.atanh(0.5), 0.0), abs=1e-15)


def test_ray_formula(polygon):
    fan = build_fan(polygon)
    for k in range(fan.n):
        v = fan.vertex(k)
        for s in np.linspace(0.01, 0.99, 25):
            f = np.asarray(forward(fan, s * v))
            assert np.abs(f - math.atanh(s) * v).sum() <= 1e-12


def test_cross_ray_consistency(hexagon):
    fan = build_fan(hexagon)
    from polyhilbert.square import phi
    for k in range(fan.n):
        for s in (0.1, 0.5, 0.9):
            p = s * fan.vertex(k)
            a = fan.L_inv[k - 1] @ np.asarray(phi(fan.L[k - 1] @ p))
            b = fan.L_inv[k] @ np.asarray(phi(fan.L[k] @ p))
            assert np.abs(a - b).sum() <= 1e-12


def test_continuity_across_rays(pentagon):
    fan = build_fan(pentagon)
    for k in range(fan.n):
        v, w = fan.vertex(k), fan.vertex(k + 1)
        p = 0.6 * v
        nudge = 1e-9 * (w - v)
        assert np.abs(np.subtract(forward(fan, p + nudge), forward(fan, p - nudge))).sum() < 1e-7


def test_forward_stays_in_sector(polygon):
    fan = build_fan(polygon)
    for p in interior_points(polygon, 500, rng(2)):
        k = locate_triangle(fan, p)
        st = fan.basis_inv[k] @ np.asarray(forward(fan, p))
        assert (st >= -1e-12).all()


def test_inverse_examples(pentagon):
    fan = build_fan(pentagon)
    assert inverse(fan, (0, 0)) == (0.0, 0.0)
    for k in range(fan.n):
        v = fan.vertex(k)
        assert inverse(fan, math.atanh(0.5) * v) == pytest.approx(tuple(0.5 * v), abs=1e-15)


def test_round_trips(polygon):
    fan = build_fan(polygon)
    P = interior_points(polygon, 10_000, rng(3))
    F = flatten.forward_many(fan, P)
    assert np.abs(flatten.inverse_many(fan, F) - P).sum(axis=1).max() <= 1e-9
    # f o g on images of moderate size, where tanh has not yet flattened out
    Q = rng(4).uniform(-4, 4, size=(5000, 2))
    G = flatten.inverse_many(fan, Q)
    ok = polygon.contains_many(G)
    assert ok.mean() > 0.99
    assert np.abs(flatten.forward_many(fan, G[ok]) - Q[ok]).sum(axis=1).max() <= 1e-9


def test_scalar_and_vector_paths_agree(hexagon):
    fan = build_fan(hexagon)
    P = interior_points(hexagon, 300, rng(5))
    F = flatten.forward_many(fan, P)
    for p, f in zip(P, F):
        assert np.abs(np.subtract(forward(fan, p), f)).sum() <= 1e-14 * np.abs(f).sum()
        assert np.allclose(inverse(fan, f), p, atol=1e-12)


def test_saturation(square):
    fan = build_fan(square)
    with pytest.raises(SaturationOverflow) as err:
        inverse(fan, (25.0, 0.0))
    assert err.value.magnitude == 25.0
    with pytest.raises(SaturationOverflow):
        flatten.inverse_many(fan, [[0.0, 0.0], [0.0, -30.0]])


def test_jacobian_near_origin(square):
    fan = build_fan(square)
    J = jacobian(fan, (1e-4, 3e-5))
    assert np.allclose(J, np.eye(2), atol=1e-7)


def test_jacobian_finite_differences(polygon):
    fan = build_fan(polygon)
    g = rng(6)
    P, V = interior_points(polygon, 300, g), directions(300, g)
    h = 1e-7
    for p, v in zip(P, V):
        if flatten.ray_distance(fan, p) < 1e-4 or polygon.slack(p) < 1e-2:
            continue
        J = jacobian(fan, p)
        assert np.linalg.det(J) > 0
        fd = (np.asarray(forward(fan, p + h * v)) - np.asarray(forward(fan, p))) / h
        Jv = J @ v
        assert np.abs(fd - Jv).sum() <= 1e-5 * np.abs(Jv).sum()


def test_jacobian_on_ray(pentagon):
    fan = build_fan(pentagon)
    with pytest.raises(OnFanRay):
        jacobian(fan, 0.4 * fan.vertex(2))


def test_images_avoid_rays(polygon):
    # off the rays, f(p) stays a positive distance from every line R v_k
    fan = build_fan(polygon)
    V = fan.vertices
    for p in interior_points(polygon, 500, rng(7)):
        if flatten.ray_distance(fan, p) < 1e-6:
            continue
        f = np.asarray(forward(fan, p))
        for v in V:
            assert abs(core.cross(v, f)) / np.hypot(*v) > 0


def test_opnorm_l1():
    assert flatten.opnorm_l1([[1, -2], [3, 0.5]]) == 4.0
