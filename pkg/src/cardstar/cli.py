"""Command-line front end.

Subcommands:

  constants                     tabulate every registry constant with its
                                oracle value and flags
  verify [--filter PAT]         run the verification suites; exit 1 on any
                                non-flagged failure
  member RE IM                  classify a point against the cardioid region
  radius CLASS [--param V]      look up a radius constant by class tag
  coeff-check FILE              coefficient-condition test of a series file
  plot FIGURE                   emit figure curve data (CSV or SVG)

Exit codes: 0 success, 1 verification failure, 2 usage error.  The sample
count defaults to 4096 and may be overridden with --samples or the
CARDIOID_SAMPLES environment variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import cardioid, domains, functions, radii, series, verify


@dataclass
class CliConfig:
    samples: int = 4096
    tolerance: float = 1e-6
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.samples < 256:
            raise ValueError("sample count must be at least 256")
        if not 1e-12 <= self.tolerance <= 1e-2:
            raise ValueError("tolerance must lie in [1e-12, 1e-2]")
        if self.output_format not in ("text", "csv", "svg"):
            raise ValueError("output format must be text, csv or svg")


# ---------------------------------------------------------------------------
# constants table
# ---------------------------------------------------------------------------

def constants_table(config: CliConfig, with_oracle: bool = True) -> str:
    rows = []
    header = ("key", "value", "method", "published", "oracle", "diff", "flags")
    for entry in radii.constants_registry():
        oracle_val = ""
        diff = ""
        if with_oracle and entry.oracle is not None:
            measured = verify.measure_constant(entry, config.samples, config.tolerance)
            oracle_val = f"{measured:.9g}"
            diff = f"{abs(measured - entry.value):.2e}"
        published = f"{entry.published:.9g}" if entry.published is not None else "-"
        rows.append((entry.key, f"{entry.value:.9g}", entry.method, published,
                     oracle_val or "-", diff or "-", ",".join(entry.flags) or "-"))
    if config.output_format == "csv":
        out = [",".join(header)]
        out += [",".join(str(c) for c in row) for row in rows]
        return "\n".join(out) + "\n"
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)))
    bz = radii.beta_zero_candidates()
    lines.append("")
    lines.append("notes:")
    lines.append(f"  strong-order candidates: statement form {bz['statement_form']:.9g}, "
                 f"variant reading {bz['proof_form']:.9g}, "
                 f"published decimal {bz['published_decimal']:.9g}; "
                 f"measured maximum {verify.measured_max_arg_order():.9g}")
    for entry in radii.constants_registry():
        if entry.note:
            lines.append(f"  {entry.key}: {entry.note}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# figures
# ---------------------------------------------------------------------------

def _curve(name: str, pts: np.ndarray, outer: domains.Domain | None = None,
           tol: float = 1e-6):
    return {"name": name, "points": np.asarray(pts), "outer": outer, "tol": tol}


def _circle_pts(center: complex, radius: float, n: int) -> np.ndarray:
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return center + radius * np.exp(1j * t)


def _boundary_pts(d: domains.Domain, n: int) -> np.ndarray:
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.asarray(d.boundary(t))


def _image_circle(w_of, r: float, n: int) -> np.ndarray:
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.asarray(w_of(r * np.exp(1j * t)))


def figure_curves(tag: str, n: int = 512) -> list[dict]:
    """Curves of a registered figure; inner curves carry the region they must
    lie inside, which the figure self-check samples."""
    card = domains.CardioidDomain()
    boundary = _boundary_pts(card, n)

    def cardioid_curve():
        return _curve("cardioid", boundary)

    if tag in ("lemma_disks_a1", "lemma_disks_a2"):
        a = 1.0 if tag.endswith("a1") else 2.0
        r_in, r_out = cardioid.inner_outer_radii(a)
        return [
            cardioid_curve(),
            _curve(f"inscribed_disk_a{a:g}", _circle_pts(a, r_in, n), outer=card),
            _curve(f"cardioid_in_circumscribed_a{a:g}", boundary,
                   outer=domains.Disk(a, r_out + 1e-9)),
            _curve(f"circumscribed_disk_a{a:g}", _circle_pts(a, r_out, n)),
        ]
    if tag == "inclusion_g1":
        half = domains.HalfPlaneReAbove(0.25)
        return [cardioid_curve(),
                _curve("order_line", _boundary_pts(half, n)),
                _curve("cardioid_in_half_plane", boundary, outer=half)]
    if tag == "inclusion_g2":
        sector = domains.Sector(radii.beta_zero())
        return [cardioid_curve(),
                _curve("sector_rays", _boundary_pts(sector, n)),
                _curve("cardioid_in_sector", boundary, outer=sector)]
    if tag == "inclusion_g3":
        conic = domains.ConicRegion(5.0 / 3.0)
        return [cardioid_curve(),
                _curve("conic_ellipse", _boundary_pts(conic, n), outer=card)]
    if tag == "inclusion_g4":
        d = domains.ExponentialRegion(radii.alpha_zero())
        return [cardioid_curve(),
                _curve("exponential_region", _boundary_pts(d, n), outer=card)]
    if tag == "inclusion_g5":
        d = domains.LemniscateRegion(0.5)
        return [cardioid_curve(),
                _curve("lemniscate_region", _boundary_pts(d, n), outer=card)]
    if tag == "inclusion_g6":
        d = domains.CassinianRegion(0.75)
        return [cardioid_curve(),
                _curve("cassinian_loop", _boundary_pts(d, n), outer=card)]
    if tag == "inclusion_g7":
        m0 = radii.m_fixed_point()
        return [cardioid_curve(),
                _curve("self_centered_circle", _circle_pts(m0, m0, n)),
                _curve("cardioid_in_disk", boundary, outer=domains.Disk(m0, m0 + 1e-9))]
    table = {
        "radius_r5": ("cardioid_wide", radii.radius_of_class_in_cardioid("cardioid_wide").value),
        "radius_r6": ("limacon", radii.radius_of_class_in_cardioid("limacon").value),
        "radius_r7": ("lune", radii.radius_of_class_in_cardioid("lune").value),
        "radius_r8": ("sine", radii.radius_of_class_in_cardioid("sine").value),
        "radius_r9": ("nephroid", radii.radius_of_class_in_cardioid("nephroid").value),
    }
    if tag in table:
        gen_name, r = table[tag]
        gen = functions.generator(gen_name)
        return [cardioid_curve(),
                _curve(f"{gen_name}_subdisk_image", _image_circle(gen, r, n), outer=card)]
    if tag == "univalent_p_disk":
        w = functions.extremal("koebe").w_of
        return [cardioid_curve(),
                _curve("half_plane_quotient_subdisk", _image_circle(w, 1.0 / 3.0, n),
                       outer=card)]
    if tag == "sharpness_s2_s3_s7_s8":
        phi = functions.gen_cardioid
        curves = [cardioid_curve()]
        targets = (
            ("lemniscate", ("lemniscate", (0.0,)),
             radii.radius_of_cardioid_in_class("lemniscate", 0.0).value),
            ("rational_lemniscate", ("rational_lemniscate", ()),
             radii.radius_of_cardioid_in_class("rational_lemniscate").value),
            ("nephroid", ("nephroid", ()),
             radii.radius_of_cardioid_in_class("nephroid").value),
            ("sigmoid", ("sigmoid", ()),
             radii.radius_of_cardioid_in_class("sigmoid").value),
        )
        for name, (kind, params), r in targets:
            outer = domains.make_domain(kind, *params)
            curves.append(_curve(f"{name}_target", _boundary_pts(outer, n)))
            curves.append(_curve(f"cardioid_subdisk_in_{name}",
                                 _image_circle(phi, r, n), outer=outer, tol=2e-5))
        return curves
    if tag == "scar_in_psiC":
        outer = domains.make_domain("cardioid_wide")
        return [_curve("wide_cardioid", _boundary_pts(outer, n)),
                _curve("cardioid_inside_wide", boundary, outer=outer)]
    raise ValueError(f"unknown figure tag {tag!r}; known: {', '.join(sorted(FIGURE_TAGS))}")


FIGURE_TAGS = (
    "lemma_disks_a1", "lemma_disks_a2",
    "inclusion_g1", "inclusion_g2", "inclusion_g3", "inclusion_g4",
    "inclusion_g5", "inclusion_g6", "inclusion_g7",
    "radius_r5", "radius_r6", "radius_r7", "radius_r8", "radius_r9",
    "univalent_p_disk", "sharpness_s2_s3_s7_s8", "scar_in_psiC",
)


def check_figure(tag: str, n: int = 512) -> list[tuple[str, bool]]:
    """Numeric check of the visual claim: inner curves inside outer regions."""
    results = []
    for curve in figure_curves(tag, n):
        if curve["outer"] is not None:
            ok = curve["outer"].contains_all(curve["points"], curve["tol"])
            results.append((curve["name"], bool(ok)))
    return results


def figure_csv(tag: str, n: int = 512) -> str:
    lines = ["curve,t,x,y"]
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    for curve in figure_curves(tag, n):
        pts = curve["points"]
        for ti, w in zip(t, pts):
            lines.append(f"{curve['name']},{ti:.9g},{w.real:.9g},{w.imag:.9g}")
    return "\n".join(lines) + "\n"


def figure_svg(tag: str, n: int = 512, size: int = 480) -> str:
    curves = figure_curves(tag, n)
    pts = np.concatenate([c["points"] for c in curves])
    x0, x1 = float(pts.real.min()), float(pts.real.max())
    y0, y1 = float(pts.imag.min()), float(pts.imag.max())
    pad = 0.05 * max(x1 - x0, y1 - y0)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    scale = size / max(x1 - x0, y1 - y0)

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return (y1 - y) * scale

    w = int(round((x1 - x0) * scale))
    h = int(round((y1 - y0) * scale))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    palette = ("#000000", "#c02020", "#2040c0", "#208040", "#806020", "#602080")
    for i, curve in enumerate(curves):
        color = palette[i % len(palette)]
        coords = " ".join(f"{sx(p.real):.3f},{sy(p.imag):.3f}" for p in curve["points"])
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1" '
                   f'points="{coords}"/>')
        first = curve["points"][0]
        out.append(f'<text x="{sx(first.real):.3f}" y="{sy(first.imag):.3f}" '
                   f'font-size="10" fill="{color}">{curve["name"]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# radius lookup grammar
# ---------------------------------------------------------------------------

_RADIUS_CLASSES = {
    # tag -> (callable(param) -> RadiusResult, needs_param)
    "cassinian": (lambda p: radii.radius_of_class_in_cardioid("cassinian", p), False),
    "lemniscate": (lambda p: radii.radius_of_class_in_cardioid("lemniscate", p), False),
    "exponential": (lambda p: radii.radius_of_class_in_cardioid("exponential", p), False),
    "rational-lemniscate": (lambda p: radii.radius_of_class_in_cardioid("rational_lemniscate"), False),
    "cardioid-wide": (lambda p: radii.radius_of_class_in_cardioid("cardioid_wide"), False),
    "limacon": (lambda p: radii.radius_of_class_in_cardioid("limacon"), False),
    "lune": (lambda p: radii.radius_of_class_in_cardioid("lune"), False),
    "sine": (lambda p: radii.radius_of_class_in_cardioid("sine"), False),
    "nephroid": (lambda p: radii.radius_of_class_in_cardioid("nephroid"), False),
    "booth": (lambda p: radii.radius_of_class_in_cardioid("booth", p), False),
    "bounded-re": (lambda p: radii.radius_of_class_in_cardioid("bounded_re", p), False),
    "order": (lambda p: radii.corollary_radius("order", p or 0.0), False),
    "ram-singh": (lambda p: radii.corollary_radius("ram_singh", p or 0.0), False),
    "padmanabhan": (lambda p: radii.corollary_radius("padmanabhan", p or 1.0), False),
    "janowski-m": (lambda p: radii.corollary_radius("janowski_M", p or 1.0), False),
    "starlike": (lambda p: radii.radius_of_class_in_cardioid("starlike"), False),
    "convex": (lambda p: radii.radius_of_class_in_cardioid("convex"), False),
    "univalent": (lambda p: radii.radius_of_class_in_cardioid("univalent"), False),
    "close-to-convex": (lambda p: radii.radius_of_class_in_cardioid("close_to_convex"), False),
    "cardioid-in-order": (lambda p: radii.radius_of_cardioid_in_class("order", p or 0.0), False),
    "cardioid-in-lemniscate": (lambda p: radii.radius_of_cardioid_in_class("lemniscate", p or 0.0), False),
    "cardioid-in-rational-lemniscate": (lambda p: radii.radius_of_cardioid_in_class("rational_lemniscate"), False),
    "cardioid-in-rational": (lambda p: radii.radius_of_cardioid_in_class("rational"), False),
    "cardioid-in-sine": (lambda p: radii.radius_of_cardioid_in_class("sine"), False),
    "cardioid-in-cosh": (lambda p: radii.radius_of_cardioid_in_class("cosh"), False),
    "cardioid-in-nephroid": (lambda p: radii.radius_of_cardioid_in_class("nephroid"), False),
    "cardioid-in-sigmoid": (lambda p: radii.radius_of_cardioid_in_class("sigmoid"), False),
    "cardioid-in-ram-singh": (lambda p: radii.radius_of_cardioid_in_class("ram_singh", p or 0.0), False),
    "cardioid-in-padmanabhan": (lambda p: radii.radius_of_cardioid_in_class("padmanabhan", p), True),
    "cardioid-in-janowski-m": (lambda p: radii.radius_of_cardioid_in_class("janowski_M", p), True),
    "cardioid-in-cardioid-wide": (lambda p: radii.radius_of_cardioid_in_class("cardioid_wide"), False),
    "cardioid-in-bounded-re": (lambda p: radii.radius_of_cardioid_in_class("bounded_re", p), True),
}


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def cmd_constants(config: CliConfig, args) -> int:
    sys.stdout.write(constants_table(config, with_oracle=not args.no_oracle))
    return 0


def cmd_verify(config: CliConfig, args) -> int:
    reports = verify.run_all_suites(config.samples, seed=config.seed,
                                    key_filter=args.filter)
    hard_failures = sum(1 for r in reports if not r.passed and not r.flags)
    if config.output_format == "csv":
        sys.stdout.write(verify.reports_to_csv(reports))
        return 1 if hard_failures else 0
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        extra = f"  [{','.join(r.flags)}]" if r.flags else ""
        measured = f"  measured={r.measured_value:.9g}" if r.measured_value is not None else ""
        note = "  (flagged, non-blocking)" if r.flags and not r.passed else ""
        sys.stdout.write(f"{status}  {r.claim}{measured}{extra}{note}\n")
    total = len(reports)
    sys.stdout.write(f"{total - sum(not r.passed for r in reports)}/{total} checks passed\n")
    return 1 if hard_failures else 0


def cmd_member(config: CliConfig, args) -> int:
    w = complex(args.re, args.im)
    v = cardioid.contains(w)
    also = cardioid.contains_implicit(w)
    line = f"{w:g}: {v.verdict}"
    if v.inside:
        line += f", generator preimage {v.preimage:.9g}"
    if v.near_cusp:
        line += " (near the cusp at 1/2)"
    line += f"; implicit-quartic test: {'inside' if also else 'not inside'}"
    sys.stdout.write(line + "\n")
    return 0


def cmd_radius(config: CliConfig, args) -> int:
    tag = args.klass.lower()
    if tag not in _RADIUS_CLASSES:
        sys.stderr.write("unknown class; available tags:\n")
        for k in sorted(_RADIUS_CLASSES):
            sys.stderr.write(f"  {k}\n")
        return 2
    fn, needs_param = _RADIUS_CLASSES[tag]
    if needs_param and args.param is None:
        sys.stderr.write(f"class {tag!r} requires --param\n")
        return 2
    try:
        res = fn(args.param)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    line = f"{res.claim}: {res.value:.9g} ({res.method}"
    if res.clamped:
        line += ", capped at 1"
    line += ")"
    if res.defining_polynomial:
        line += f"  polynomial coefficients (ascending): {res.defining_polynomial}"
    if res.flags:
        line += f"  flags: {','.join(res.flags)}"
    sys.stdout.write(line + "\n")
    return 0


def cmd_coeff_check(config: CliConfig, args) -> int:
    try:
        with open(args.series_file, "r", encoding="utf-8") as fh:
            f = series.from_text(fh.read())
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error reading series file: {exc}\n")
        return 2
    if not f.is_normalized:
        sys.stderr.write("series is not normalized (first coefficient must be 1)\n")
        return 2
    total = series.coefficient_condition_sum(f)
    ok = total <= 1.0
    sys.stdout.write(f"coefficient sum {total:.9g} -> "
                     f"{'member (sufficient condition met)' if ok else 'inconclusive (condition not met)'}\n")
    return 0


def cmd_plot(config: CliConfig, args) -> int:
    tag = args.figure
    if tag not in FIGURE_TAGS:
        sys.stderr.write(f"unknown figure tag; known: {', '.join(FIGURE_TAGS)}\n")
        return 2
    checks = check_figure(tag)
    for name, ok in checks:
        if not ok:
            sys.stderr.write(f"containment self-check failed for curve {name}\n")
            return 1
    if config.output_format == "svg":
        sys.stdout.write(figure_svg(tag))
    else:
        sys.stdout.write(figure_csv(tag))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cardstar",
        description="radius constants and verification for the cardioid starlike class")
    parser.add_argument("--samples", type=int,
                        default=int(os.environ.get("CARDIOID_SAMPLES", "4096")))
    parser.add_argument("--tolerance", type=float, default=1e-6)
    parser.add_argument("--format", choices=("text", "csv", "svg"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the constants table")
    p.add_argument("--no-oracle", action="store_true",
                   help="skip the oracle column (fast)")
    p.set_defaults(fn=cmd_constants)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--filter", default=None, help="only claims containing this text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("member", help="classify a point against the region")
    p.add_argument("re", type=float)
    p.add_argument("im", type=float)
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("radius", help="look up a radius constant")
    p.add_argument("klass", metavar="class")
    p.add_argument("--param", type=float, default=None)
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser("coeff-check", help="coefficient condition for a series file")
    p.add_argument("series_file")
    p.set_defaults(fn=cmd_coeff_check)

    p = sub.add_parser("plot", help="emit figure curve data")
    p.add_argument("figure")
    p.set_defaults(fn=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig(samples=args.samples, tolerance=args.tolerance,
                           output_format=args.format, seed=args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.fn(config, args)
    except BrokenPipeError:
        # downstream consumer (head, less) closed the stream; not an error
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0


if __name__ == "__main__":
    sys.exit(main())
