import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from polyhilbert import core
from polyhilbert.core import (
    chord,
    cross_ratio,
    cross_ratio_st,
    exit_times,
    finsler_norm,
    finsler_norm_form,
    hilbert_distance,
    metric_ball,
    ray_exit,
    segment_length,
    validate_polygon,
)
from polyhilbert.errors import (
    CoincidentPoints,
    Degenerate,
    NotConvex,
    PointNotInterior,
    ToleranceNotReached,
    TooFewVertices,
    ZeroVector,
)
from polyhilbert.quadrature import adaptive_simpson
from polyhilbert.sampling import directions, interior_points, rng

from conftest import regular


# ------------------------------------------------------------- validation


def test_ccw_triangle_kept():
    P = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert P.vertices == ((0, 0), (1, 0), (0, 1))


def test_cw_triangle_reversed():
    P = validate_polygon([(0, 0), (0, 1), (1, 0)])
    assert set(P.vertices) == {(0, 0), (1, 0), (0, 1)}
    V = P.as_array()
    area2 = sum(core.cross(V[i], V[(i + 1) % 3]) for i in range(3))
    assert area2 > 0


def test_collinear_rejected():
    with pytest.raises(Degenerate):
        validate_polygon([(0, 0), (1, 0), (2, 0), (0, 1)])


def test_duplicate_rejected():
    with pytest.raises(Degenerate):
        validate_polygon([(0, 0), (1, 0), (1, 0), (0, 1)])


def test_too_few():
    with pytest.raises(TooFewVertices):
        validate_polygon([(0, 0), (1, 0)])


def test_reflex_rejected():
    with pytest.raises(NotConvex):
        validate_polygon([(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)])


def test_pentagram_rejected():
    star = [regular(5)[(2 * k) % 5] for k in range(5)]
    with pytest.raises(NotConvex):
        validate_polygon(star)


def test_boundary_is_open(square):
    assert square.contains((0.0, 0.0))
    assert not square.contains((1.0, 0.0))
    assert not square.contains((1.0, 1.0))
    assert not square.contains((1.0 - 1e-13, 0.0))  # inside the interior margin


# -------------------------------------------------------------- ray exits


def test_ray_exit_axis(square):
    r = ray_exit(square, (0, 0), (1, 0))
    assert r.t_plus == 1.0
    assert r.hit == (1.0, 0.0)


def test_ray_exit_vertical(square):
    r = ray_exit(square, (0.5, 0), (0, 1))
    assert r.t_plus == 1.0
    assert r.hit == (0.5, 1.0)


def test_ray_exit_corner(square):
    r = ray_exit(square, (0, 0), (1, 1))
    assert r.t_plus == pytest.approx(1.0, abs=1e-15)
    assert r.hit == pytest.approx((1.0, 1.0), abs=1e-15)


def test_ray_exit_guards(square):
    with pytest.raises(PointNotInterior):
        ray_exit(square, (2, 0), (1, 0))
    with pytest.raises(ZeroVector):
        ray_exit(square, (0, 0), (0, 0))


def test_ray_hit_on_boundary(polygon):
    g = rng(7)
    P = interior_points(polygon, 200, g)
    V = directions(200, g)
    for p, v in zip(P, V):
        r = ray_exit(polygon, p, v)
        assert abs(polygon.slack(r.hit)) <= 1e-12 * polygon.diameter


# ------------------------------------------------------------------ chord


def test_chord_axis(square):
    x = 0.3
    ch = chord(square, (0, 0), (x, 0))
    assert ch.a == (-1, 0) and ch.b == (1, 0)
    assert ch.s == 0.5
    assert ch.t == pytest.approx((1 + x) / 2, rel=1e-15)


def test_chord_vertical(square):
    ch = chord(square, (0, 0), (0, 0.5))
    assert ch.a == (0, -1) and ch.b == (0, 1)
    assert (ch.s, ch.t) == (0.5, 0.75)


def test_chord_reconstructs(polygon):
    g = rng(11)
    P, Q = interior_points(polygon, 100, g), interior_points(polygon, 100, g)
    for p, q in zip(P, Q):
        ch = chord(polygon, p, q)
        assert 0 < ch.s < ch.t < 1
        scale = 1e-9 * (1 + np.abs(p).max())
        assert np.allclose(ch.point(ch.s), p, atol=scale, rtol=0)
        assert np.allclose(ch.point(ch.t), q, atol=scale, rtol=0)


def test_chord_swap(pentagon):
    p, q = (0.1, -0.2), (-0.3, 0.4)
    c1, c2 = chord(pentagon, p, q), chord(pentagon, q, p)
    assert c2.a == pytest.approx(c1.b) and c2.b == pytest.approx(c1.a)
    assert c2.s == pytest.approx(1 - c1.t, abs=1e-14)
    assert c2.t == pytest.approx(1 - c1.s, abs=1e-14)


def test_chord_coincident(square):
    with pytest.raises(CoincidentPoints):
        chord(square, (0.1, 0.1), (0.1, 0.1))


def test_cross_ratio_values():
    assert cross_ratio_st(1 / 3, 2 / 3) == pytest.approx(4.0, rel=1e-15)
    assert cross_ratio_st(0.4, 0.4) == pytest.approx(1.0, rel=1e-15)
    assert cross_ratio_st(0.5, 0.75) == 3.0


def test_cross_ratio_of_chord(square):
    assert cross_ratio(chord(square, (0, 0), (0, 0.5))) == 3.0


# --------------------------------------------------------------- distance


def test_distance_identity_short_circuit(square):
    assert hilbert_distance(square, (0.3, 0.2), (0.3, 0.2)) == 0.0


def test_distance_axis_atanh(square):
    for x in (0.1, 0.5, 0.9, 0.999):
        assert hilbert_distance(square, (0, 0), (x, 0)) == pytest.approx(math.atanh(x), rel=1e-14)
    assert hilbert_distance(square, (0, 0), (0.5, 0)) == pytest.approx(0.5493061443340549,
                                                                      rel=1e-15)


def test_distance_matches_cross_ratio(polygon):
    g = rng(3)
    P, Q = interior_points(polygon, 200, g), interior_points(polygon, 200, g)
    for p, q in zip(P, Q):
        d = hilbert_distance(polygon, p, q)
        assert d == pytest.approx(0.5 * math.log(cross_ratio(chord(polygon, p, q))), rel=1e-9)


def test_distance_near_far_edge_symmetric(hexagon):
    # q close to the far boundary: the slack form keeps d(p,q) = d(q,p)
    p = (-0.5273868066489098, -1.1635138293967668)
    q = (0.9365991029828755, 1.680961458895503)
    d1, d2 = hilbert_distance(hexagon, p, q), hilbert_distance(hexagon, q, p)
    assert abs(d1 - d2) <= 1e-14 * (1 + d1)


@settings(max_examples=60, deadline=None)
@given(
    M=st.tuples(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3)),
    seed=st.integers(0, 2**32 - 1),
)
def test_linear_invariance(M, seed):
    A = np.array(M).reshape(2, 2)
    assume(abs(np.linalg.det(A)) > 1e-2)
    C = validate_polygon(regular(6, phase=0.3))
    LC = C.transformed(A)
    g = rng(seed)
    P, Q = interior_points(C, 20, g), interior_points(C, 20, g)
    for p, q in zip(P, Q):
        Lp, Lq = A @ p, A @ q
        if not (LC.contains(Lp) and LC.contains(Lq)):
            continue
        d = hilbert_distance(C, p, q)
        assert abs(hilbert_distance(LC, Lp, Lq) - d) <= 1e-9 * (1 + d)


# ---------------------------------------------------------------- finsler


def test_finsler_zero_vector(square):
    assert finsler_norm(square, (0.2, 0.1), (0, 0)) == 0.0


def test_finsler_witness(square):
    assert exit_times(square, (0.5, 0), (0, 1)) == (1.0, 1.0)
    assert finsler_norm(square, (0.5, 0), (0, 1)) == 1.0


def test_finsler_center(square):
    assert finsler_norm(square, (0, 0), (1, 0)) == 1.0


def test_finsler_homogeneous(polygon):
    g = rng(5)
    P, V = interior_points(polygon, 100, g), directions(100, g)
    for p, v in zip(P, V):
        f = finsler_norm(polygon, p, v)
        assert finsler_norm(polygon, p, 3.5 * v) == pytest.approx(3.5 * f, rel=1e-14)
        assert finsler_norm(polygon, p, -v) == pytest.approx(
            0.5 * (1 / exit_times(polygon, p, v)[1] + 1 / exit_times(polygon, p, v)[0]), rel=1e-14)


def test_norm_form(polygon):
    g = rng(6)
    P, V = interior_points(polygon, 300, g), directions(300, g)
    for p, v in zip(P, V):
        f = finsler_norm(polygon, p, v)
        assert abs(finsler_norm_form(polygon, p, v) - f) <= 1e-12 * f
        euclid = finsler_norm_form(polygon, p, v, norm=lambda w: math.hypot(*w))
        assert abs(euclid - f) <= 1e-12 * f


def test_derivative_consistency(polygon):
    g = rng(8)
    P, V = interior_points(polygon, 300, g), directions(300, g)
    t = 1e-6
    for p, v in zip(P, V):
        if polygon.slack(p) < 0.05:
            continue
        f = finsler_norm(polygon, p, v)
        d = hilbert_distance(polygon, p, p + t * v)
        assert abs(d / t - f) <= 1e-4 * f


def test_monotone_under_inclusion(square):
    big = validate_polygon([(-2, -1.5), (1.5, -1.5), (1.5, 2), (-2, 2)])
    g = rng(9)
    P, V = interior_points(square, 500, g), directions(500, g)
    small_f = core.finsler_norms(square, P, V)
    big_f = core.finsler_norms(big, P, V)
    assert (big_f <= small_f * (1 + 1e-12)).all()


# --------------------------------------------------------- segment length


def test_segment_length_trivial(square):
    assert segment_length(square, (0.1, 0.1), (0.1, 0.1)) == 0.0


def test_segment_length_axis(square):
    L = segment_length(square, (0, 0), (0.5, 0), tol=1e-9)
    assert abs(L - 0.5493061443340549) <= 1e-8


def test_segment_length_pentagon(pentagon):
    g = rng(12)
    P, Q = interior_points(pentagon, 40, g), interior_points(pentagon, 40, g)
    for p, q in zip(P, Q):
        assert abs(segment_length(pentagon, p, q) - hilbert_distance(pentagon, p, q)) <= 1e-8


def test_simpson_polynomial_exact():
    assert adaptive_simpson(lambda x: x**3 - 2 * x, 0.0, 2.0) == pytest.approx(0.0, abs=1e-14)
    assert adaptive_simpson(math.sin, 0.0, math.pi, tol=1e-12) == pytest.approx(2.0, abs=1e-11)


def test_simpson_depth_cap():
    with pytest.raises(ToleranceNotReached):
        adaptive_simpson(lambda x: 1.0 / math.sqrt(x) if x > 0 else 1e300, 0.0, 1.0,
                         tol=1e-12, max_depth=8)


# ------------------------------------------------------------ metric ball


def test_ball_axis_crossings(square):
    ring = metric_ball(square, (0, 0), math.atanh(0.5), n_dirs=8)
    assert ring[0] == pytest.approx((0.5, 0.0), abs=1e-9)
    assert ring[4] == pytest.approx((-0.5, 0.0), abs=1e-9)
    assert ring[2] == pytest.approx((0.0, 0.5), abs=1e-9)


def test_ball_symmetry(square):
    n = 64
    ring = metric_ball(square, (0, 0), 0.8, n_dirs=n)
    for j in range(n):
        assert np.allclose(ring[(j + n // 2) % n], -ring[j], atol=1e-9)  # central
        assert np.allclose(ring[(-j) % n], ring[j] * (1, -1), atol=1e-9)  # x-axis mirror


def test_ball_radii_hit_r(hexagon):
    c = (0.4, 0.3)
    ring = metric_ball(hexagon, c, 1.3, n_dirs=32)
    for p in ring:
        assert abs(hilbert_distance(hexagon, c, p) - 1.3) <= 1e-9


def test_ball_shrinks(pentagon):
    sizes = [np.abs(metric_ball(pentagon, (0, 0), r, 16)).sum(axis=1).max()
             for r in (1e-1, 1e-3, 1e-6)]
    assert sizes[0] > sizes[1] > sizes[2] and sizes[2] < 1e-5


def test_ball_guards(square):
    with pytest.raises(ValueError):
        metric_ball(square, (0, 0), 0.5, n_dirs=7)
    with pytest.raises(ValueError):
        metric_ball(square, (0, 0), 0.0)
    with pytest.raises(PointNotInterior):
        metric_ball(square, (0, 0), 40.0)
