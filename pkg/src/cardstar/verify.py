"""Independent numerical oracles for every tabulated constant and claim.

The verification strategy mirrors how the radius statements are proved:
containment of a sampled circle image inside a target region, located by
bisection.  Closed-form constants are recomputed this way and compared at
sampling-limited tolerance (2e-3 at 4096 circle samples, 5e-3 below).
Containment is tested on the circle |z| = r only; the quotients involved
are analytic, so the image boundary lies on the circle image, and a small
interior spot-check guards against misuse.

Near-boundary points count as inside within a small tolerance so that the
sharp radii themselves (tangential touches) pass: 1e-7 for regions with a
defining inequality, 1e-6 for sampled-polygon regions, whose distance
measure is only curve-resolution accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cardioid, domains, functions, radii
from .functions import FunctionSpec
from .series import PowerSeries, f_cardioid_series

DEFAULT_SAMPLES = 4096
DEFAULT_TOL = 1e-6
AGREEMENT_TOL = 2e-3        # oracle vs formula at >= 4096 samples
AGREEMENT_TOL_COARSE = 5e-3


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    method: str
    samples: int
    verdict: str                       # "pass" | "fail"
    witness: complex | None = None     # worst point; always present on fail
    measured_value: float | None = None
    flags: tuple[str, ...] = ()
    detail: str = ""

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError("verdict must be 'pass' or 'fail'")
        if self.verdict == "fail" and self.witness is None:
            raise ValueError("fail verdicts must carry a witness point")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def near_tolerance(d: domains.Domain) -> float:
    if isinstance(d, domains.GeneratorImageRegion):
        return 1e-6
    return 1e-7


def _circle(n: int) -> np.ndarray:
    # includes t = 0 and, for n divisible by 4, t = pi/2 and pi: the touch
    # points of every sharp radius live on these rays
    return np.exp(1j * np.linspace(0.0, 2.0 * math.pi, n, endpoint=False))


def image_in_domain(spec: FunctionSpec, r: float, d: domains.Domain,
                    n: int = DEFAULT_SAMPLES, near: float | None = None) -> VerificationReport:
    """Does spec.w_of map the closed subdisk of radius r into d?

    Tested on the circle |z| = r (maximum principle) plus a 64-point
    interior spot-check on two inner rings.
    """
    if not 0.0 < r <= 1.0:
        raise ValueError("radius must lie in (0, 1]")
    if n < 256:
        raise ValueError("need at least 256 samples")
    tol = near_tolerance(d) if near is None else near
    e = _circle(n)
    pts = np.asarray(spec.w_of(r * e))
    inner = np.concatenate([np.asarray(spec.w_of(0.5 * r * _circle(32))),
                            np.asarray(spec.w_of(0.75 * r * _circle(32)))])
    ok = d.contains_all(pts, tol) and d.contains_all(inner, tol)
    if ok:
        return VerificationReport(
            f"{spec.name} image of |z|<{r:g} inside {d.describe()}",
            "circle-sampling", n, "pass")
    witness, margin = d.worst_point(pts)
    return VerificationReport(
        f"{spec.name} image of |z|<{r:g} inside {d.describe()}",
        "circle-sampling", n, "fail", witness=witness, measured_value=margin)


def _bisect_radius(ok, tol: float) -> float:
    # Coarse upward scan for the first failure, then bisection.  The scan
    # matters for quotients with poles inside the disk (the convexity
    # functional of z + z^2), where containment is not monotone in r and a
    # single probe near 1 would be fooled.
    lo = 1e-4
    if not ok(lo):
        raise ArithmeticError("no positive radius: containment fails even at 1e-4")
    hi = None
    for r in np.linspace(lo, 1.0 - 1e-9, 65)[1:]:
        if not ok(float(r)):
            hi = float(r)
            break
        lo = float(r)
    if hi is None:
        return 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def subordination_radius(spec: FunctionSpec, d: domains.Domain,
                         tol: float = DEFAULT_TOL, n: int = DEFAULT_SAMPLES) -> float:
    """Largest r with spec's image of |z| < r inside d, by bisection.

    Returns 1.0 when the full-disk image fits.  The bracket property
    (pass at r - tol, fail at r + tol) is asserted before returning.
    """
    near = near_tolerance(d)
    e = _circle(n)

    def ok(r: float) -> bool:
        return d.contains_all(np.asarray(spec.w_of(r * e)), near)

    r_star = _bisect_radius(ok, tol)
    if r_star < 1.0:
        assert ok(max(r_star - tol, 1e-5)) and not ok(min(r_star + tol, 1.0 - 1e-10)), \
            "bisection bracket violated"
    return r_star


def disk_family_radius(center, spread, d: domains.Domain,
                       tol: float = DEFAULT_TOL, n: int = DEFAULT_SAMPLES) -> float:
    """Largest r with the disk |w - center(r)| <= spread(r) inside d."""
    near = near_tolerance(d)
    e = _circle(n)

    def ok(r: float) -> bool:
        return d.contains_all(center(r) + spread(r) * e, near)

    return _bisect_radius(ok, tol)


def sharpness_touch(spec: FunctionSpec, r_star: float, touch_point_z: complex,
                    expected_w: complex, d: domains.Domain | None = None,
                    tol: float = 1e-9) -> VerificationReport:
    """Check that the quotient hits its boundary value at the touch point."""
    if abs(abs(touch_point_z) - r_star) > 1e-12:
        raise ValueError("touch point modulus must equal the radius")
    w = complex(np.asarray(spec.w_of(touch_point_z)).reshape(()))
    err = abs(w - expected_w)
    gap = d.boundary_gap(expected_w) if d is not None else 0.0
    claim = f"{spec.name} touches {expected_w:g} at |z| = {r_star:g}"
    if err < tol and gap < tol:
        return VerificationReport(claim, "closed-form-evaluation", 1, "pass",
                                  measured_value=err)
    return VerificationReport(claim, "closed-form-evaluation", 1, "fail",
                              witness=w, measured_value=max(err, gap))


def convolution_membership_check(f: PowerSeries, g: PowerSeries, rho: float,
                                 n: int = 2048, r_test: float = 0.999) -> VerificationReport:
    """Is (f * g)(rho z)/rho cardioid-starlike, judged from truncated series?

    The quotient is evaluated from the truncated polynomial on |z| = r_test;
    the report carries a truncation flag when |a_N| r_test^N is not
    negligible.
    """
    if not 0.0 < rho <= 1.0:
        raise ValueError("dilation factor must lie in (0, 1]")
    if not 0.0 < r_test < 1.0:
        raise ValueError("test radius must lie in (0, 1)")
    h = f.hadamard(g).dilate(rho)
    tail = abs(h.coeffs[-1]) * r_test ** h.order
    flags = ("truncation-limited",) if tail >= 1e-8 else ()
    z = r_test * _circle(n)
    w = np.asarray(h.eval_log_derivative(z))
    margins = cardioid.preimage_margin(w)
    i = int(np.argmin(margins))
    claim = f"convolution dilated by {rho:g} stays in the cardioid class"
    if margins[i] > -1e-7:
        return VerificationReport(claim, "series-sampling", n, "pass",
                                  measured_value=float(margins[i]), flags=flags,
                                  detail=f"truncation tail {tail:.2e}")
    return VerificationReport(claim, "series-sampling", n, "fail",
                              witness=complex(w[i]), measured_value=float(margins[i]),
                              flags=flags, detail=f"truncation tail {tail:.2e}")


# ---------------------------------------------------------------------------
# special threshold measurements
# ---------------------------------------------------------------------------

def measured_min_re_limit(n: int = 1 << 16) -> float:
    w = cardioid.boundary_samples(n)
    return float(np.min(w.real))


def measured_max_arg_order(n: int = 1 << 18) -> float:
    """(2/pi) max |arg| over the boundary, grid search plus golden refinement."""
    t = np.linspace(0.0, math.pi, n)
    a = np.angle(np.asarray(cardioid.eval_phi(np.exp(1j * t))))
    j = int(np.argmax(a))
    lo = t[max(j - 1, 0)]
    hi = t[min(j + 1, n - 1)]

    def neg_arg(tt: float) -> float:
        return -np.angle(complex(cardioid.eval_phi(np.exp(1j * tt))))

    inv = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv * (hi - lo)
    d = lo + inv * (hi - lo)
    for _ in range(120):
        if neg_arg(c) < neg_arg(d):
            hi = d
        else:
            lo = c
        c = hi - inv * (hi - lo)
        d = lo + inv * (hi - lo)
    return (2.0 / math.pi) * (-neg_arg(0.5 * (lo + hi)))


def _bisect_parameter(f, lo: float, hi: float, iters: int = 60) -> float:
    f_lo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (f_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _inclusion_margin(inner: domains.Domain, outer: domains.Domain, n: int) -> float:
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return float(np.min(outer.margin(np.asarray(inner.boundary(t)))))


def measured_conic_threshold(n: int = DEFAULT_SAMPLES) -> float:
    card = domains.CardioidDomain()
    return _bisect_parameter(
        lambda k: -_inclusion_margin(domains.ConicRegion(k), card, n), 1.2, 4.0)


def measured_exponential_threshold(n: int = DEFAULT_SAMPLES) -> float:
    card = domains.CardioidDomain()
    return _bisect_parameter(
        lambda a: -_inclusion_margin(domains.ExponentialRegion(a), card, n), 0.05, 0.6)


def measured_lemniscate_threshold(n: int = DEFAULT_SAMPLES) -> float:
    card = domains.CardioidDomain()
    return _bisect_parameter(
        lambda a: -_inclusion_margin(domains.LemniscateRegion(a), card, n), 0.2, 0.9)


def measured_cassinian_threshold(n: int = DEFAULT_SAMPLES) -> float:
    card = domains.CardioidDomain()
    return _bisect_parameter(
        lambda c: _inclusion_margin(domains.CassinianRegion(c), card, n), 0.3, 1.0)


def measured_outer_disk_parameter(n: int = DEFAULT_SAMPLES) -> float:
    w = cardioid.boundary_samples(n)

    def margin(M: float) -> float:
        return float(np.min(M - np.abs(w - M)))

    return _bisect_parameter(lambda M: -margin(M), 1.0, 2.4)


def measured_apollonius_threshold(n: int = DEFAULT_SAMPLES) -> float:
    w = cardioid.boundary_samples(n)

    def margin(a: float) -> float:
        c = (1.0 + a * a) / (1.0 - a * a)
        rr = 2.0 * a / (1.0 - a * a)
        return float(np.min(rr - np.abs(w - c)))

    return _bisect_parameter(lambda a: -margin(a), 0.3, 0.95)


def _measured_disk_radius(M: float, tol: float, n: int) -> float:
    e = _circle(n)

    def ok(r: float) -> bool:
        w = cardioid.eval_phi(r * e)
        return bool(np.min(M - np.abs(w - M)) > -1e-9)

    return _bisect_radius(ok, tol)


def _disk_touch_angle(M: float, n: int) -> float:
    """Circle angle of the binding tangency at the containment radius."""
    r = _measured_disk_radius(M, 1e-9, n)
    t = np.linspace(0.0, math.pi, n // 2 + 1)
    w = cardioid.eval_phi(r * np.exp(1j * t))
    return float(t[int(np.argmin(M - np.abs(w - M)))])


def measured_disk_branch_crossover(n: int = 8192) -> float:
    """Disk parameter where the binding tangency leaves the real axis.

    Below the crossover the containment radius is set by the rightmost
    image point (touch angle 0); above it an interior tangency binds.  The
    touch angle grows like sqrt(M - M*), so thresholding it at 0.02 locates
    the crossover to a few times 1e-5.
    """
    return _bisect_parameter(
        lambda M: 0.02 - _disk_touch_angle(M, n),
        1.05, cardioid.self_centered_fixed_point() - 1e-6, 40)


def apollonius_positivity_margin(alpha: float, r: float, grid: int = 512) -> float:
    """min over x = cos t of a^2 |phi + 1|^2 - |phi - 1|^2 on |z| = r.

    Positive exactly while the quotient disk condition |(w-1)/(w+1)| < alpha
    holds on the circle; an independent route to the interior-tangency radius
    that never forms the tangency formula itself.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("parameter must lie in (0, 1]")
    x = np.linspace(-1.0, 1.0, grid)
    a2 = alpha * alpha
    g = (4.0 * a2 + 4.0 * a2 * r * x - a2 * r * r + 4.0 * a2 * r * r * x * x
         + a2 * r**3 * x + a2 * r**4 / 4.0 - r * r - r**3 * x - r**4 / 4.0)
    return float(np.min(g))


def measured_generator_convexity_radius(n: int = DEFAULT_SAMPLES) -> float:
    e = _circle(n)

    def min_conv(r: float) -> float:
        z = r * e
        return float(np.min((1.0 + z / (1.0 + z)).real))

    return _bisect_parameter(min_conv, 1e-3, 1.0 - 1e-9, 80)


def measured_growth_lower_limit(order: int = 64) -> float:
    f = f_cardioid_series(order)
    return abs(f.eval(-1.0))


def measured_series_coefficient(index: int, order: int = 16) -> float:
    f = f_cardioid_series(order)
    return abs(f.coeffs[index - 1])


_THRESHOLDS = {
    "min_re_limit": lambda n: measured_min_re_limit(max(n, 1 << 16)),
    "max_arg": lambda n: measured_max_arg_order(),
    "conic_inclusion": measured_conic_threshold,
    "exponential_inclusion": measured_exponential_threshold,
    "lemniscate_inclusion": measured_lemniscate_threshold,
    "cassinian_inclusion": measured_cassinian_threshold,
    "outer_disk_fixed_point": measured_outer_disk_parameter,
    "apollonius_full_inclusion": measured_apollonius_threshold,
    "disk_branch_crossover": lambda n: measured_disk_branch_crossover(max(n, 8192)),
    "generator_convexity": measured_generator_convexity_radius,
    "growth_lower_limit": lambda n: measured_growth_lower_limit(),
}


_DOMAIN_CACHE: dict[tuple, domains.Domain] = {}


def _domain(kind: str, params: tuple) -> domains.Domain:
    key = (kind, tuple(params))
    if key not in _DOMAIN_CACHE:
        _DOMAIN_CACHE[key] = domains.make_domain(kind, *params)
    return _DOMAIN_CACHE[key]


def measure_constant(entry: radii.ConstantEntry, samples: int = DEFAULT_SAMPLES,
                     tol: float = DEFAULT_TOL) -> float:
    """Evaluate the registry entry's oracle descriptor."""
    spec = entry.oracle
    if spec is None:
        raise ValueError(f"registry entry {entry.key} has no oracle")
    kind, payload = spec.kind, spec.payload
    if kind == "generator_into_cardioid":
        fn = functions.generator(payload["name"], **payload.get("params", {}))
        return subordination_radius(FunctionSpec(payload["name"], fn),
                                    _domain("cardioid", ()), tol, samples)
    if kind == "quotient_into_cardioid":
        return subordination_radius(functions.extremal(payload["name"]),
                                    _domain("cardioid", ()), tol, samples)
    if kind == "quotient_into_domain":
        return subordination_radius(functions.extremal(payload["name"]),
                                    _domain(payload["domain"], tuple(payload["params"])),
                                    tol, samples)
    if kind == "cardioid_into_domain":
        return subordination_radius(functions.extremal("cardioid_extremal"),
                                    _domain(payload["domain"], tuple(payload["params"])),
                                    tol, samples)
    if kind == "disk_family":
        return disk_family_radius(payload["center"], payload["spread"],
                                  _domain(payload["domain"], tuple(payload["params"])),
                                  tol, samples)
    if kind == "threshold":
        name = payload["name"]
        if name == "series_coefficient":
            return measured_series_coefficient(payload["index"])
        return _THRESHOLDS[name](samples)
    raise ValueError(f"unknown oracle kind {kind!r}")


def agreement_tolerance(samples: int) -> float:
    return AGREEMENT_TOL if samples >= DEFAULT_SAMPLES else AGREEMENT_TOL_COARSE


def verify_all_constants(samples: int = DEFAULT_SAMPLES,
                         keys: tuple[str, ...] | None = None) -> list[VerificationReport]:
    """Reproduce every registry constant by its oracle and compare."""
    reports = []
    tol = agreement_tolerance(samples)
    for entry in radii.constants_registry():
        if entry.oracle is None or (keys is not None and entry.key not in keys):
            continue
        measured = measure_constant(entry, samples)
        diff = abs(measured - entry.value)
        verdict = "pass" if diff < tol else "fail"
        reports.append(VerificationReport(
            f"{entry.key}: {entry.description}", f"oracle:{entry.oracle.kind}",
            samples, verdict,
            witness=complex(entry.value) if verdict == "fail" else None,
            measured_value=measured, flags=entry.flags,
            detail=f"formula {entry.value:.9g}, oracle {measured:.9g}, diff {diff:.2e}"))
    return reports


# ---------------------------------------------------------------------------
# claim suites
# ---------------------------------------------------------------------------

def _sharp_inclusion_report(name: str, build_inner, threshold: float, offset: float,
                            n: int, outer: domains.Domain | None = None,
                            flip: bool = False) -> VerificationReport:
    """Inclusion holds at `threshold` and fails at `threshold - offset`
    (or + offset when `flip`), matching the sharpness direction."""
    card = domains.CardioidDomain()
    outer_at = (lambda p: outer) if outer is not None else (lambda p: card)
    inner_at = build_inner
    good = threshold
    bad = threshold + offset if flip else threshold - offset
    ok_at = _inclusion_margin(inner_at(good), outer_at(good), n) > -1e-7
    bad_margin = _inclusion_margin(inner_at(bad), outer_at(bad), n)
    ok_beyond = bad_margin > -1e-7
    if ok_at and not ok_beyond:
        return VerificationReport(name, "boundary-sampling", n, "pass",
                                  measured_value=bad_margin)
    return VerificationReport(name, "boundary-sampling", n, "fail",
                              witness=0j, measured_value=bad_margin)


def inclusion_suite(samples: int = DEFAULT_SAMPLES) -> list[VerificationReport]:
    """The inclusion relations, their special-case disks, and the unity-radius claims."""
    n = samples
    card = domains.CardioidDomain()
    reports = []

    # cardioid region inside half-plane / sector: outer varies, inner fixed
    def outer_inclusion(name, build_outer, threshold, offset):
        ok_at = _inclusion_margin(card, build_outer(threshold), n) > -1e-7
        bad_margin = _inclusion_margin(card, build_outer(threshold - offset), n)
        if ok_at and not bad_margin > -1e-7:
            return VerificationReport(name, "boundary-sampling", n, "pass",
                                      measured_value=bad_margin)
        return VerificationReport(name, "boundary-sampling", n, "fail", witness=0j,
                                  measured_value=bad_margin)

    reports.append(outer_inclusion(
        "class lies in starlike functions of order up to 1/4",
        lambda a: domains.HalfPlaneReAbove(a), 0.25, -0.01))  # fails at 0.26
    reports.append(outer_inclusion(
        "class lies in strongly starlike functions of published order",
        lambda b: domains.Sector(b), 0.743253, 0.01))
    reports.append(_sharp_inclusion_report(
        "conic regions fit inside from parameter 5/3 on",
        lambda k: domains.ConicRegion(k), 5.0 / 3.0, 0.01, n))
    reports.append(_sharp_inclusion_report(
        "exponential regions fit inside from the threshold on",
        lambda a: domains.ExponentialRegion(a), radii.alpha_zero(), 0.01, n))
    reports.append(_sharp_inclusion_report(
        "lemniscate regions fit inside from parameter 1/2 on",
        lambda a: domains.LemniscateRegion(a), 0.5, 0.01, n))
    reports.append(_sharp_inclusion_report(
        "Cassinian loops fit inside up to parameter 3/4",
        lambda c: domains.CassinianRegion(c), 0.75, 0.01, n, flip=True))

    # two-parameter family: tangent disks at the condition boundary
    for A, B in ((3.0 / 8.0, -0.25), (0.25, -0.5)):
        disk_good = domains.janowski_disk(A, B, 1.0)
        disk_bad = domains.janowski_disk(A + 0.01, B, 1.0)
        ok_at = _inclusion_margin(disk_good, card, n) > -1e-7
        bad_margin = _inclusion_margin(disk_bad, card, n)
        verdict = "pass" if ok_at and not bad_margin > -1e-7 else "fail"
        reports.append(VerificationReport(
            f"two-parameter inclusion boundary at A={A:g}, B={B:g}",
            "boundary-sampling", n, verdict,
            witness=None if verdict == "pass" else 0j, measured_value=bad_margin))

    # circumscribed disk with the self-centered parameter
    M0 = radii.m_fixed_point()
    w = cardioid.boundary_samples(n)
    ok_at = float(np.min(M0 - np.abs(w - M0))) > -1e-7
    bad = float(np.min((M0 - 0.01) - np.abs(w - (M0 - 0.01))))
    reports.append(VerificationReport(
        "region fits the self-centered disk and no smaller one",
        "boundary-sampling", n, "pass" if ok_at and bad <= -1e-7 else "fail",
        witness=None if ok_at and bad <= -1e-7 else 0j, measured_value=bad))

    # corollary disks
    reports.append(_sharp_inclusion_report(
        "unit-centered disks fit inside up to radius 1/2",
        lambda a: domains.Disk(1.0, 1.0 - a), 0.5, -0.01, n, flip=True))

    def apol(a):
        return domains.Disk((1.0 + a * a) / (1.0 - a * a), 2.0 * a / (1.0 - a * a))

    reports.append(_sharp_inclusion_report(
        "Apollonius disks fit inside up to parameter 1/3",
        lambda a: apol(a), 1.0 / 3.0, 0.01, n, flip=True))

    # unity-radius inclusions
    for kind in ("sigmoid", "cosh", "rational"):
        d = _domain(kind, ())
        margin = _inclusion_margin(d, card, n)
        reports.append(VerificationReport(
            f"{kind} image lies inside the region (unit radius)",
            "boundary-sampling", n, "pass" if margin > -1e-7 else "fail",
            witness=None if margin > -1e-7 else 0j, measured_value=margin))
    margin = _inclusion_margin(card, _domain("cardioid_wide", ()), n)
    reports.append(VerificationReport(
        "region lies inside the wide-cardioid image (unit radius)",
        "boundary-sampling", n, "pass" if margin > -1e-6 else "fail",
        witness=None if margin > -1e-6 else 0j, measured_value=margin))
    return reports


def coefficient_suite(seed: int = 0, count: int = 100,
                      samples: int = 2048) -> list[VerificationReport]:
    """Random polynomials under the coefficient condition keep |w - 1| < 1/2."""
    rng = np.random.default_rng(seed)
    z = 0.999 * _circle(samples)
    worst = 1.0
    witness = None
    for _ in range(count):
        m = int(rng.integers(2, 12))
        raw = rng.uniform(-1.0, 1.0, m) + 1j * rng.uniform(-1.0, 1.0, m)
        weights = 2.0 * np.arange(2, m + 2) - 1.0
        raw *= rng.uniform(0.1, 1.0) / float(np.sum(weights * np.abs(raw)))
        f = PowerSeries((1.0,) + tuple(raw))
        w = np.asarray(f.eval_log_derivative(z))
        margins = 0.5 - np.abs(w - 1.0)
        i = int(np.argmin(margins))
        if margins[i] < worst:
            worst = float(margins[i])
            witness = complex(w[i])
    verdict = "pass" if worst > -1e-9 else "fail"
    return [VerificationReport(
        f"coefficient condition keeps the quotient within 1/2 of 1 ({count} random polynomials)",
        "series-sampling", samples, verdict,
        witness=None if verdict == "pass" else witness, measured_value=worst)]


def partial_sum_suite(samples: int = DEFAULT_SAMPLES) -> list[VerificationReport]:
    """Second-partial-sum radii plus their boundary-touch displays."""
    reports = []
    tol = agreement_tolerance(samples)
    checks = [
        ("second sums starlike up to 1/2", "second_sum", ("min_re", (0.0,)), 0.5),
        ("second sums convex up to 1/4", "second_sum_convexity", ("min_re", (0.0,)), 0.25),
        ("second-sum dilation bound 1/3", "second_sum", ("cardioid", ()), 1.0 / 3.0),
        ("second-sum dilation bound 1/6 from univalent functions",
         "koebe_second_sum", ("cardioid", ()), 1.0 / 6.0),
    ]
    for claim, name, (kind, params), expected in checks:
        measured = subordination_radius(functions.extremal(name), _domain(kind, params),
                                        DEFAULT_TOL, samples)
        verdict = "pass" if abs(measured - expected) < tol else "fail"
        reports.append(VerificationReport(claim, "oracle:quotient", samples, verdict,
                                          witness=None if verdict == "pass" else 0j,
                                          measured_value=measured))
    touches = [
        ("second_sum", 0.5, -0.5, 0.0),
        ("second_sum", 1.0 / 3.0, -1.0 / 3.0, 0.5),
        ("second_sum_convexity", 0.25, -0.25, 0.0),
    ]
    for name, r_star, z0, expect in touches:
        reports.append(sharpness_touch(functions.extremal(name), r_star, z0, expect))
    return reports


def convolution_suite(samples: int = 2048, order: int = 32) -> list[VerificationReport]:
    """Convolution dilation bounds checked on truncated series."""
    reports = []
    rho0 = radii.convolution_radii()["starlike_pair"]
    koebe = PowerSeries.koebe(order)
    half = PowerSeries.half_plane(order)
    fcar = f_cardioid_series(order)

    rep = convolution_membership_check(koebe, koebe, rho0, samples)
    reports.append(VerificationReport(
        "two-starlike convolution bound holds at the sharp dilation",
        rep.method, rep.samples, rep.verdict, rep.witness, rep.measured_value, rep.flags))
    rep = convolution_membership_check(koebe, koebe, rho0 + 0.02, samples)
    flipped = "pass" if rep.verdict == "fail" else "fail"
    reports.append(VerificationReport(
        "two-starlike convolution bound fails 0.02 past the sharp dilation",
        rep.method, rep.samples, flipped,
        witness=None if flipped == "pass" else (rep.witness or 0j),
        measured_value=rep.measured_value))
    rep = convolution_membership_check(fcar, half, 0.5, samples)
    reports.append(VerificationReport(
        "convolution with a convex factor stays in the class at dilation 1/2",
        rep.method, rep.samples, rep.verdict, rep.witness, rep.measured_value, rep.flags))
    ident = PowerSeries.identity(order)
    rep = convolution_membership_check(ident, koebe, 0.7, samples)
    reports.append(VerificationReport(
        "convolution with the identity series is trivially in the class",
        rep.method, rep.samples, rep.verdict, rep.witness, rep.measured_value, rep.flags))
    return reports


def run_all_suites(samples: int = DEFAULT_SAMPLES, seed: int = 0,
                   key_filter: str | None = None) -> list[VerificationReport]:
    reports = verify_all_constants(samples)
    reports += inclusion_suite(samples)
    reports += coefficient_suite(seed=seed, samples=min(samples, 2048))
    reports += partial_sum_suite(samples)
    reports += convolution_suite(min(samples, 2048))
    if key_filter:
        reports = [r for r in reports if key_filter.lower() in r.claim.lower()]
    return reports


def failed_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if not r.passed]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    lines = ["claim,method,samples,verdict,measured,witness,flags"]
    for r in reports:
        measured = f"{r.measured_value:.9g}" if r.measured_value is not None else ""
        witness = f"{r.witness:.9g}" if r.witness is not None else ""
        claim = r.claim.replace(",", ";")
        lines.append(f"{claim},{r.method},{r.samples},{r.verdict},{measured},"
                     f"{witness},{'|'.join(r.flags)}")
    return "\n".join(lines) + "\n"
