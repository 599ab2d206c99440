"""Seeded verification sweeps behind ``hilbert verify``.

Each suite returns a plain dict report::

    {"suite", "samples", "seed", "tolerance", "failures": [...], "extrema": {...}}

``samples`` drives the main sweeps directly; the slower sub-checks scale from
it (geodesic pairs ``samples // 100``, round trips, Jacobians and projection
configurations ``samples // 10``). ``tolerance`` is the additive slack on the
inequality checks. The fixed-precision identities (symmetry, ray formula,
cross-ray consistency, case-formula agreement, geodesic length) keep their own
thresholds. Reports carry no timings, so equal inputs give equal bytes.
"""
from __future__ import annotations

import math

import numpy as np

from . import core, flatten, ledger, square
from .core import validate_polygon
from .sampling import delta_points, directions, interior_points, rng

SUITES = ("metric", "sandwich", "zones", "comparison", "flatten", "constants")

SYMMETRY_REL = 1e-12
GEODESIC_ABS = 1e-8
GEODESIC_QUAD_TOL = 1e-9
RAY_FORMULA_ABS = 1e-12
CROSS_RAY_ABS = 1e-12
ROUND_TRIP_ABS = 1e-9
CASE_FORMULA_REL = 1e-12
ZONE_SLACK = 1e-12
M_GRID_ABS = 1e-3
WITNESS_ABS = 1e-12
SHARPNESS_MIN = 1.99
MAX_EXAMPLES = 5

_PENTAGON = [
    (math.cos(math.pi / 2 + 2 * math.pi * k / 5), math.sin(math.pi / 2 + 2 * math.pi * k / 5))
    for k in range(5)
]
DEFAULT_POLYGONS = {
    "square": [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)],
    "pentagon": _PENTAGON,
    "hexagon": [(2.0, -0.5), (2.6, 0.8), (1.2, 2.1), (-0.9, 1.7), (-1.8, 0.2), (-0.4, -1.3)],
}

COMPARISON_CONFIGS = [
    (0.5, 1.0, 2.0),
    (0.9, 1.0, 1.5),
    (0.1, 1.0, 10.0),
    (0.5, 3.0, 4.0),
    (0.99, 1.2, 50.0),
]
M_ALPHAS = (0.1, 0.5, 1.0, 2.0, 10.0)


class _Report:
    def __init__(self, suite: str, samples: int, seed: int, tolerance: float):
        self.suite = suite
        self.samples = samples
        self.seed = seed
        self.tolerance = tolerance
        self.failures: list[dict] = []
        self.extrema: dict[str, float] = {}

    def note(self, key: str, value) -> None:
        self.extrema[f"{self.suite}.{key}"] = float(value)

    def check(self, name: str, bad, worst: float, examples=()) -> None:
        """Record ``name`` as failed when ``bad`` is a nonzero count or True."""
        count = int(np.count_nonzero(bad)) if isinstance(bad, np.ndarray) else int(bad)
        if count:
            self.failures.append({
                "suite": self.suite,
                "check": name,
                "count": count,
                "worst": float(worst),
                "examples": [list(map(float, np.ravel(e))) for e in list(examples)[:MAX_EXAMPLES]],
            })

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "failures": self.failures,
            "extrema": self.extrema,
        }


def default_polygons() -> dict[str, core.ConvexPolygon]:
    return {name: validate_polygon(v) for name, v in DEFAULT_POLYGONS.items()}


# ----------------------------------------------------------------- metric


def metric_suite(samples: int, seed: int, tolerance: float, polygons=None) -> dict:
    rep = _Report("metric", samples, seed, tolerance)
    for name, C in (polygons or default_polygons()).items():
        g = rng(seed)
        P, Q, R = (interior_points(C, samples, g) for _ in range(3))
        dpq = core.hilbert_distances(C, P, Q)
        dqp = core.hilbert_distances(C, Q, P)
        dqr = core.hilbert_distances(C, Q, R)
        dpr = core.hilbert_distances(C, P, R)

        sym = np.abs(dpq - dqp) / (1.0 + dpq)
        rep.note(f"{name}.max_symmetry_rel", sym.max())
        bad = sym > SYMMETRY_REL
        rep.check(f"{name}.symmetry", bad, sym.max(), np.hstack([P, Q])[bad])

        dpp = core.hilbert_distances(C, P, P)
        distinct = (P != Q).any(axis=1)
        bad_id = (dpp != 0.0).sum() + (dpq[distinct] <= 0.0).sum()
        rep.check(f"{name}.identity", bad_id, float(np.abs(dpp).max()))

        excess = dpr - dpq - dqr
        rep.note(f"{name}.max_triangle_excess", excess.max())
        bad = excess > tolerance
        rep.check(f"{name}.triangle", bad, excess.max(), np.hstack([P, Q, R])[bad])
        rep.note(f"{name}.max_distance", dpq.max())

        n_geo = max(1, samples // 100)
        err = np.array([
            abs(core.segment_length(C, p, q, tol=GEODESIC_QUAD_TOL) - d)
            for p, q, d in zip(P[:n_geo], Q[:n_geo], dpq[:n_geo])
        ])
        rep.note(f"{name}.geodesic_pairs", n_geo)
        rep.note(f"{name}.max_geodesic_err", err.max())
        bad = err > GEODESIC_ABS
        rep.check(f"{name}.geodesic", bad, err.max(), np.hstack([P[:n_geo], Q[:n_geo]])[bad])
    return rep.as_dict()


# --------------------------------------------------------------- sandwich


def sandwich_suite(samples: int, seed: int, tolerance: float) -> dict:
    rep = _Report("sandwich", samples, seed, tolerance)
    g = rng(seed)
    M = delta_points(samples, g)
    V = directions(samples, g)
    fs = np.array([square.finsler_square(m, v) for m, v in zip(M.tolist(), V.tolist())])
    img = np.abs(V / ((1.0 - M) * (1.0 + M))).sum(axis=1)
    ratio = img / fs
    rep.note("min_ratio", ratio.min())
    rep.note("max_ratio", ratio.max())
    bad = (ratio < 1.0 - tolerance) | (ratio > 2.0 + tolerance)
    rep.check("ratio_in_1_2", bad, ratio[bad].max() if bad.any() else 0.0, np.hstack([M, V])[bad])

    # case formulas against the generic exit-time norm; looked up on ``core`` at
    # call time so a patched implementation is what gets compared
    generic = core.finsler_norms(square.SQUARE, M, V)
    rel = np.abs(fs - generic) / generic
    rep.note("max_case_formula_rel", rel.max())
    bad = rel > CASE_FORMULA_REL
    rep.check("case_formula_vs_generic", bad, rel.max(), np.hstack([M, V])[bad])

    _, _, r_w = square.sandwich_check((0.5, 0.0), (0.0, 1.0))
    rep.note("witness_ratio", r_w)
    rep.check("witness", abs(r_w - 1.0) > WITNESS_ABS, abs(r_w - 1.0))
    g_w = core.finsler_norm(square.SQUARE, (0.5, 0.0), (0.0, 1.0))
    rep.check("witness_generic", abs(g_w - 1.0) > WITNESS_ABS, abs(g_w - 1.0))

    _, _, r_s = square.sandwich_check((1e-6, 0.0), (1.0, 1.0))
    rep.note("sharpness_ratio", r_s)
    rep.check("sharpness", r_s < SHARPNESS_MIN, r_s)
    return rep.as_dict()


# ------------------------------------------------------------------ zones


def zones_suite(samples: int, seed: int, tolerance: float) -> dict:
    rep = _Report("zones", samples, seed, tolerance)
    g = rng(seed)
    M = delta_points(samples, g)
    V = directions(samples, g)
    bad_incl = []
    worst_rec = 0.0
    bad_rec = 0
    counts = {label.value: 0 for label in square.ZoneLabel}
    for m, v in zip(M.tolist(), V.tolist()):
        label = square.classify_zone(m, v)
        counts[label.value] += 1
        if not square.zone_inclusion_holds(m, v, label, ZONE_SLACK):
            bad_incl.append(m + v)
        basis = dict(square.zone_sectors(m))[label]
        s, t = square.sector_coordinates(basis, v)
        rx = s * basis.v1.x + t * basis.v2.x - v[0]
        ry = s * basis.v1.y + t * basis.v2.y - v[1]
        rec = (abs(rx) + abs(ry)) / (abs(v[0]) + abs(v[1]))
        worst_rec = max(worst_rec, rec)
        bad_rec += rec > 1e-12
    for label, c in counts.items():
        rep.note(f"count.{label}", c)
    rep.note("max_reconstruction_rel", worst_rec)
    rep.check("inclusion", len(bad_incl), float(len(bad_incl)), bad_incl)
    rep.check("sector_reconstruction", bad_rec, worst_rec)
    return rep.as_dict()


# ------------------------------------------------------------- comparison


def comparison_suite(samples: int, seed: int, tolerance: float) -> dict:
    rep = _Report("comparison", samples, seed, tolerance)
    for a, b, c in COMPARISON_CONFIGS:
        tag = f"({a},{b},{c})"
        sweep = ledger.verify_A_empirically(ledger.TQConfig(a, b, c), samples, seed, tolerance)
        rep.note(f"{tag}.A", sweep.A)
        rep.note(f"{tag}.inf_ratio", sweep.inf_ratio)
        rep.note(f"{tag}.sup_ratio", sweep.sup_ratio)
        rep.note(f"{tag}.n", sweep.n)
        worst = max(sweep.A - sweep.inf_ratio, sweep.sup_ratio - 1.0)
        rep.check(f"{tag}.A_le_ratio_le_1", sweep.violations, worst)
    return rep.as_dict()


# ---------------------------------------------------------------- flatten


def _ray_errors(fan: flatten.FanDecomposition, s_values) -> tuple[float, float]:
    """Largest ray-formula error and largest cross-ray disagreement."""
    worst_ray = 0.0
    worst_cross = 0.0
    for k in range(fan.n):
        v = fan.vertex(k)
        for s in s_values:
            p = s * v
            f = np.asarray(flatten.forward(fan, p))
            worst_ray = max(worst_ray, float(np.abs(f - math.atanh(s) * v).sum()))
            # p sits on the ray shared by triangles k - 1 and k
            a = fan.L_inv[k - 1] @ np.asarray(square.phi(fan.L[k - 1] @ p))
            b = fan.L_inv[k] @ np.asarray(square.phi(fan.L[k] @ p))
            worst_cross = max(worst_cross, float(np.abs(a - b).sum()))
    return worst_ray, worst_cross


def flatten_suite(samples: int, seed: int, tolerance: float, polygons=None) -> dict:
    rep = _Report("flatten", samples, seed, tolerance)
    n_small = max(1, samples // 10)
    s_values = np.linspace(0.01, 0.99, 99)
    for name, C in (polygons or default_polygons()).items():
        fan = flatten.build_fan(C)
        consts = ledger.theorem_constants(fan)
        Cb, K = consts["C"], consts["K_global"]
        rep.note(f"{name}.C", Cb)
        rep.note(f"{name}.K_global", K)

        g = rng(seed)
        P = interior_points(C, n_small, g)
        back = flatten.inverse_many(fan, flatten.forward_many(fan, P))
        err = np.abs(back - P).sum(axis=1)
        rep.note(f"{name}.max_round_trip", err.max())
        bad = err > ROUND_TRIP_ABS
        rep.check(f"{name}.round_trip", bad, err.max(), P[bad])

        worst_ray, worst_cross = _ray_errors(fan, s_values)
        rep.note(f"{name}.max_ray_formula_err", worst_ray)
        rep.note(f"{name}.max_cross_ray_err", worst_cross)
        rep.check(f"{name}.ray_formula", worst_ray > RAY_FORMULA_ABS, worst_ray)
        rep.check(f"{name}.cross_ray", worst_cross > CROSS_RAY_ABS, worst_cross)

        sweep = ledger.empirical_lipschitz(fan, samples, seed)
        rep.note(f"{name}.min_lipschitz_ratio", sweep.min_ratio)
        rep.note(f"{name}.max_lipschitz_ratio", sweep.max_ratio)
        lo_bad = sweep.min_ratio < 1.0 / Cb - tolerance
        hi_bad = sweep.max_ratio > Cb + tolerance
        rep.check(f"{name}.bi_lipschitz", int(lo_bad) + int(hi_bad),
                  max(1.0 / Cb - sweep.min_ratio, sweep.max_ratio - Cb))

        V = directions(n_small, g)
        lo, hi, bad_j = math.inf, 0.0, []
        for p, v in zip(P.tolist(), V.tolist()):
            if flatten.ray_distance(fan, p) <= 1e-9:
                continue
            Jv = flatten.jacobian(fan, p) @ np.asarray(v)
            r = float(np.abs(Jv).sum()) / core.finsler_norm(C, p, v)
            lo, hi = min(lo, r), max(hi, r)
            if r < 1.0 / K - tolerance or r > K + tolerance:
                bad_j.append(p + v)
        rep.note(f"{name}.min_jacobian_ratio", lo)
        rep.note(f"{name}.max_jacobian_ratio", hi)
        rep.check(f"{name}.jacobian_sandwich", len(bad_j), max(1.0 / K - lo, hi - K), bad_j)
    return rep.as_dict()


# -------------------------------------------------------------- constants


def constants_suite(samples: int, seed: int, tolerance: float, polygons=None) -> dict:
    rep = _Report("constants", samples, seed, tolerance)
    for alpha in M_ALPHAS:
        closed, grid = ledger.M_of_alpha(alpha), ledger.M_grid(alpha)
        rep.note(f"M({alpha}).closed", closed)
        rep.note(f"M({alpha}).grid", grid)
        gap = closed - grid
        # the closed form must dominate every grid value and sit within M_GRID_ABS
        rep.check(f"M({alpha}).vs_grid", gap < -tolerance or gap > M_GRID_ABS, gap)
    m1 = ledger.M_of_alpha(1.0)
    rep.check("M(1).exact", m1 != 1.0, m1 - 1.0)

    n_proj = max(1, samples // 10)
    g = rng(seed)
    fails = []
    for cfg in ledger.random_projection_configs(n_proj, g):
        if not ledger.projection_lemma_check(*cfg):
            fails.append([*cfg[0], *cfg[1], *cfg[2], cfg[3], cfg[4]])
    rep.note("projection_configs", n_proj)
    rep.check("projection_lemma", len(fails), float(len(fails)), fails)

    for a, b, c in COMPARISON_CONFIGS:
        tag = f"({a},{b},{c})"
        cfg = ledger.TQConfig(a, b, c)
        cc = ledger.case_constants(cfg)
        exact = cc.delta0
        grid, step = ledger.delta0_grid(a, cc.alpha0)
        rep.note(f"{tag}.delta0", exact)
        rep.note(f"{tag}.delta0_grid", grid)
        rep.check(f"{tag}.delta0_vs_grid", abs(grid - exact) > 2.0 * step, grid - exact)
        ks = [cc.K1, cc.K2, cc.K3, cc.K4, cc.K5, cc.K6, cc.A]
        rep.check(f"{tag}.ranges", sum(not (0.0 < k <= 1.0) for k in ks), min(ks))

    for name, C in (polygons or default_polygons()).items():
        consts = ledger.theorem_constants(flatten.build_fan(C))
        ms = [v for k, (v, _) in consts.entries.items() if k.startswith("M_")]
        Cb = consts["C"]
        rep.note(f"{name}.C", Cb)
        rep.check(f"{name}.ranges", int(Cb < 1.0) + sum(m < 1.0 for m in ms), Cb)
    return rep.as_dict()


# ----------------------------------------------------------------- driver

_RUNNERS = {
    "metric": metric_suite,
    "sandwich": sandwich_suite,
    "zones": zones_suite,
    "comparison": comparison_suite,
    "flatten": flatten_suite,
    "constants": constants_suite,
}


_TAKES_POLYGONS = ("metric", "flatten", "constants")


def run(suite: str, samples: int = 100_000, seed: int = 42, tolerance: float = 1e-9,
        polygons: dict | None = None) -> dict:
    """Run one suite, or every suite in order for ``"all"``.

    ``polygons`` (name -> ConvexPolygon) replaces the three built-in polygons
    in the suites that take polygons.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not tolerance > 0:
        raise ValueError("tolerance must be > 0")
    if suite == "all":
        out = _Report("all", samples, seed, tolerance).as_dict()
        for name in SUITES:
            part = _call(name, samples, seed, tolerance, polygons)
            out["failures"].extend(part["failures"])
            out["extrema"].update(part["extrema"])
        return out
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}, all")
    return _call(suite, samples, seed, tolerance, polygons)


def _call(name, samples, seed, tolerance, polygons):
    if name in _TAKES_POLYGONS:
        return _RUNNERS[name](samples, seed, tolerance, polygons)
    return _RUNNERS[name](samples, seed, tolerance)
