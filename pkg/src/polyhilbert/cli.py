"""``hilbert`` command line.

Exit status: 0 on success, 1 on bad input, 2 when a verification suite fails.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import core, flatten, ledger, verify
from .errors import HilbertError
from .serialize import dumps, fmt

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
COMMANDS = ("distance", "ball", "flatten", "verify", "constants")
_FORMATS = {
    "distance": ("csv", "json"),  # a bare number is valid as either
    "ball": ("svg",),
    "flatten": ("csv", "svg"),
    "verify": ("json",),
    "constants": ("json",),
}


class InputError(Exception):
    """Bad command-line input; reported on stderr with exit status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which here means a failed verification
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ----------------------------------------------------------------- parsing


def _pair(text: str, what: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"{what} must be 'x,y', got {text!r}")
    try:
        x, y = (float(t) for t in parts)
    except ValueError:
        raise InputError(f"{what} must be 'x,y', got {text!r}") from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InputError(f"{what} must be finite, got {text!r}")
    return x, y


def _triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    try:
        a, b, c = (float(t) for t in parts)
    except ValueError:
        raise InputError(f"--tq must be 'a,b,c', got {text!r}") from None
    return a, b, c


def load_polygon(path: str | None) -> core.ConvexPolygon:
    """Read ``{"vertices": [[x, y], ...]}`` and validate it."""
    if path is None:
        raise InputError("--polygon FILE is required")
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read polygon file {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"polygon file {path!r} is not JSON: {exc.msg}") from None
    verts = raw.get("vertices") if isinstance(raw, dict) else None
    if not isinstance(verts, list):
        raise InputError(f"polygon file {path!r} needs a 'vertices' list")
    pts = []
    for v in verts:
        if (not isinstance(v, list) or len(v) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)):
            raise InputError(f"vertex {v!r} is not a pair of numbers")
        pts.append((float(v[0]), float(v[1])))
    return core.validate_polygon(pts)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(
        prog="hilbert",
        description="Hilbert geometry on convex polygons.",
    )
    # let "--p -0.5,1" through as a value; stock argparse only accepts bare -1.5
    ap._negative_number_matcher = re.compile(r"^-\.?\d[\d.eE+\-,]*$")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--polygon", metavar="FILE", help='JSON file {"vertices": [[x, y], ...]}')
    ap.add_argument("--p", metavar="X,Y", help="first point, or ball centre")
    ap.add_argument("--q", metavar="X,Y", help="second point")
    ap.add_argument("--r", type=float, metavar="R", help="ball radius")
    ap.add_argument("--dirs", type=int, default=64, metavar="N", help="ball directions (>= 8)")
    ap.add_argument("--grid", type=int, default=21, metavar="N", help="flatten grid size per axis")
    ap.add_argument("--suite", default="all", metavar="NAME",
                    help=f"one of {', '.join(verify.SUITES)}, all")
    ap.add_argument("--samples", type=int, default=100_000, metavar="N")
    ap.add_argument("--seed", type=int, default=42, metavar="S")
    ap.add_argument("--tolerance", type=float, default=1e-9, metavar="T")
    ap.add_argument("--tq", metavar="a,b,c", help="triangle/quadrilateral parameters")
    ap.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    ap.add_argument("--format", choices=("csv", "json", "svg"))
    return ap


# ---------------------------------------------------------------- svg


def _svg(view: tuple[float, float, float, float], body: list[str]) -> str:
    x, y, w, h = view
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="{fmt(x)} {fmt(y)} {fmt(w)} {fmt(h)}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _fit(points: np.ndarray, margin: float = 0.05) -> tuple[float, float, float, float]:
    """viewBox around ``points`` (already y-flipped) with a relative margin."""
    lo, hi = points.min(axis=0), points.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    lo, span = lo - margin * span, span * (1 + 2 * margin)
    return float(lo[0]), float(lo[1]), float(span[0]), float(span[1])


def _flip(P) -> np.ndarray:
    P = np.asarray(P, dtype=float).copy()
    P[:, 1] = -P[:, 1]  # svg y grows downwards
    return P


def _coords(P) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in P)


def _stroke(view) -> str:
    return fmt(0.004 * max(view[2], view[3]))


def ball_svg(C: core.ConvexPolygon, ring: np.ndarray) -> str:
    outline = _flip(C.as_array())
    view = _fit(outline)
    ring = _flip(np.vstack([ring, ring[:1]]))
    sw = _stroke(view)
    d = "M " + " L ".join(f"{fmt(x)} {fmt(y)}" for x, y in outline) + " Z"
    return _svg(view, [
        f'<rect x="{fmt(view[0])}" y="{fmt(view[1])}" width="{fmt(view[2])}" '
        f'height="{fmt(view[3])}" fill="white"/>',
        f'<path d="{d}" fill="none" stroke="black" stroke-width="{sw}"/>',
        f'<polyline points="{_coords(ring)}" fill="none" stroke="crimson" stroke-width="{sw}"/>',
    ])


def flatten_svg(grid_img: np.ndarray, inside: np.ndarray) -> str:
    """Images of the grid rows and columns, broken where the grid leaves P."""
    flat = _flip(grid_img[inside])
    view = _fit(flat)
    sw = _stroke(view)
    body = [f'<rect x="{fmt(view[0])}" y="{fmt(view[1])}" width="{fmt(view[2])}" '
            f'height="{fmt(view[3])}" fill="white"/>']
    n = inside.shape[0]
    lines = [(grid_img[i, :], inside[i, :]) for i in range(n)]
    lines += [(grid_img[:, j], inside[:, j]) for j in range(n)]
    for pts, ok in lines:
        run: list = []
        for p, o in zip(pts, ok):
            if o:
                run.append(p)
                continue
            if len(run) > 1:
                body.append(_polyline(run, sw))
            run = []
        if len(run) > 1:
            body.append(_polyline(run, sw))
    return _svg(view, body)


def _polyline(run, sw) -> str:
    return f'<polyline points="{_coords(_flip(run))}" fill="none" stroke="steelblue" stroke-width="{sw}"/>'


# ------------------------------------------------------------- commands


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_distance(args) -> int:
    C = load_polygon(args.polygon)
    if args.p is None or args.q is None:
        raise InputError("distance needs --p X,Y and --q X,Y")
    d = core.hilbert_distance(C, _pair(args.p, "--p"), _pair(args.q, "--q"))
    _emit(fmt(d) + "\n", args.out)
    return EXIT_OK


def cmd_ball(args) -> int:
    C = load_polygon(args.polygon)
    if args.p is None or args.r is None:
        raise InputError("ball needs --p X,Y (centre) and --r R")
    if args.dirs < 8:
        raise InputError(f"--dirs must be at least 8, got {args.dirs}")
    ring = core.metric_ball(C, _pair(args.p, "--p"), args.r, n_dirs=args.dirs)
    _emit(ball_svg(C, ring), args.out)
    return EXIT_OK


def flatten_grid(C: core.ConvexPolygon, n: int):
    """``n x n`` grid over the bounding box, its images, and the interior mask."""
    fan = flatten.build_fan(C)
    V = C.as_array()
    lo, hi = V.min(axis=0), V.max(axis=0)
    xs = np.linspace(lo[0], hi[0], n)
    ys = np.linspace(lo[1], hi[1], n)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    pts = np.stack([X, Y], axis=-1)
    inside = C.contains_many(pts.reshape(-1, 2)).reshape(n, n)
    img = np.zeros_like(pts)
    img[inside] = flatten.forward_many(fan, pts[inside])
    return pts, img, inside


def cmd_flatten(args) -> int:
    C = load_polygon(args.polygon)
    if args.grid < 2:
        raise InputError(f"--grid must be at least 2, got {args.grid}")
    pts, img, inside = flatten_grid(C, args.grid)
    if (args.format or "csv") == "svg":
        _emit(flatten_svg(img, inside), args.out)
        return EXIT_OK
    rows = ["x,y,fx,fy"]
    for (x, y), (fx, fy) in zip(pts[inside], img[inside]):
        rows.append(f"{fmt(x)},{fmt(y)},{fmt(fx)},{fmt(fy)}")
    _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise InputError(f"--samples must be >= 1, got {args.samples}")
    if not args.tolerance > 0:
        raise InputError(f"--tolerance must be > 0, got {args.tolerance}")
    if args.suite not in (*verify.SUITES, "all"):
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}, all")
    polygons = {"polygon": load_polygon(args.polygon)} if args.polygon else None
    try:
        report = verify.run(args.suite, args.samples, args.seed, args.tolerance, polygons)
    except HilbertError as exc:
        # a geometric error mid-sweep is itself a failed check
        report = {"suite": args.suite, "samples": args.samples, "seed": args.seed,
                  "tolerance": args.tolerance,
                  "failures": [{"suite": args.suite, "check": "exception", "count": 1,
                                "worst": 0.0, "examples": [], "message": str(exc)}],
                  "extrema": {}}
    _emit(dumps(report), args.out)
    return EXIT_VERIFY if report["failures"] else EXIT_OK


def cmd_constants(args) -> int:
    if (args.polygon is None) == (args.tq is None):
        raise InputError("constants needs exactly one of --polygon FILE or --tq a,b,c")
    if args.tq is not None:
        led = ledger.tq_ledger(ledger.TQConfig(*_triple(args.tq)))
        source = {"tq": [led["a"], led["b"], led["c"]]}
    else:
        C = load_polygon(args.polygon)
        led = ledger.theorem_constants(flatten.build_fan(C))
        source = {"polygon": C.as_array().tolist()}
    _emit(dumps({**source, "constants": led.to_records()}), args.out)
    return EXIT_OK


_HANDLERS = {
    "distance": cmd_distance,
    "ball": cmd_ball,
    "flatten": cmd_flatten,
    "verify": cmd_verify,
    "constants": cmd_constants,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format is not None and args.format not in _FORMATS[args.command]:
            raise InputError(f"{args.command} cannot write --format {args.format}")
        return _HANDLERS[args.command](args)
    except (InputError, HilbertError, ValueError) as exc:
        print(f"hilbert {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
