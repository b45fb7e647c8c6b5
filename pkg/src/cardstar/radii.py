"""Closed-form and root-defined radius constants, plus the constants registry.

Conventions used throughout:

  * "radius of X in the cardioid class" (`radius_of_class_in_cardioid`) is
    the largest r such that every member of class X restricted to a subdisk
    of radius r is cardioid-starlike; it equals the largest r for which the
    image of |z| < r under X's generator stays inside the cardioid region.
  * "radius of the cardioid class in X" (`radius_of_cardioid_in_class`) is
    the mirror question: the largest r with the cardioid generator image of
    |z| < r inside X's region.
  * Ratio-class radii (`ratio_class_radius`) come from quotient bounds of
    the form |w - c(r)| <= rho(r); the radius is where that disk stops
    fitting inside the cardioid region.

All transcendental constants are computed from library functions; reference
decimals from the literature appear only in the registry metadata and in
test expectations, never inside formulas.  Rows whose published formula or
decimal is inconsistent carry a flag and are reported with the measured
value rather than silently corrected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import cardioid

SQRT2 = math.sqrt(2.0)
E = math.e

CLOSED_FORM = "closed_form"
ROOT_OF_POLYNOMIAL = "root_of_polynomial"
ORACLE = "oracle"


@dataclass(frozen=True)
class RadiusResult:
    """A radius constant in (0, 1] with its provenance."""

    value: float
    method: str = CLOSED_FORM
    defining_polynomial: tuple[float, ...] | None = None  # ascending coefficients
    claim: str = ""
    clamped: bool = False          # a min{1, .} cap was applied
    flags: tuple[str, ...] = ()
    verified: bool | None = None   # oracle verdict, attached by the verification layer

    def __post_init__(self):
        if not 0.0 < self.value <= 1.0 + 1e-15:
            raise ValueError(f"radius {self.value} outside (0, 1]")


def _poly_eval(coeffs, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def smallest_root_in_unit_interval(coeffs, scan_step: float = 1e-3,
                                   tol: float = 1e-14) -> float:
    """Smallest root in (0, 1) of a real polynomial (ascending coefficients).

    A sign scan at `scan_step` brackets the first crossing, bisection
    finishes to `tol`; the residual is required to vanish to 1e-12.
    """
    coeffs = tuple(float(c) for c in coeffs)
    x_prev, f_prev = 0.0, _poly_eval(coeffs, 0.0)
    bracket = None
    k = 1
    while True:
        x = k * scan_step
        if x >= 1.0:
            break
        f = _poly_eval(coeffs, x)
        if f == 0.0:
            bracket = (x, x)
            break
        if f_prev != 0.0 and (f > 0) != (f_prev > 0):
            bracket = (x_prev, x)
            break
        x_prev, f_prev = x, f
        k += 1
    if bracket is None:
        raise ValueError("no root bracketed in (0, 1)")
    lo, hi = bracket
    flo = _poly_eval(coeffs, lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = _poly_eval(coeffs, mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    if abs(_poly_eval(coeffs, root)) > 1e-12:
        raise ArithmeticError(f"root residual too large at {root}")
    return root


# ---------------------------------------------------------------------------
# named scalar constants
# ---------------------------------------------------------------------------

def alpha_zero() -> float:
    """(e - 2)/(2(e - 1)), the exponential-region inclusion threshold."""
    return (E - 2.0) / (2.0 * (E - 1.0))


def beta_zero() -> float:
    """(2/pi) arctan(3 sqrt(3/5)), the strong-starlikeness order of the class.

    Equals the maximum of (2/pi) |arg| over the cardioid boundary; the
    literature also prints the decimal 0.743253 and the variant reading
    3 sqrt(3)/5 of the tangent value, neither of which matches this number.
    Both appear in `beta_zero_candidates` and the constants table.
    """
    return (2.0 / math.pi) * math.atan(3.0 * math.sqrt(3.0 / 5.0))


def beta_zero_candidates() -> dict[str, float]:
    return {
        "statement_form": beta_zero(),
        "proof_form": (2.0 / math.pi) * math.atan(3.0 * math.sqrt(3.0) / 5.0),
        "published_decimal": 0.743253,
    }


def alpha_knot() -> float:
    """sqrt((5 + 2 sqrt 13)/27): above it the full cardioid region sits in the
    Apollonius disk |(w-1)/(w+1)| < alpha."""
    return math.sqrt((5.0 + 2.0 * math.sqrt(13.0)) / 27.0)


def w_alpha(alpha: float) -> float:
    """Interior-tangency radius for the Apollonius disk target,
    (2a/sqrt(1-a^2)) sqrt(2/sqrt(1+3a^2) - 1)."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError("parameter must lie in (0, 1]")
    a2 = alpha * alpha
    return (2.0 * alpha / math.sqrt(1.0 - a2)) * math.sqrt(2.0 / math.sqrt(1.0 + 3.0 * a2) - 1.0)


def disk_real_axis_radius(M: float) -> float:
    """Radius at which the rightmost image point exits |w - M| < M.

    The exit happens where 1 + r + r^2/2 = 2M, i.e. r = -1 + sqrt(4M - 1);
    derived directly from the real-axis factorization of the containment
    condition, independent of any tabulated branch formula.
    """
    if M <= 0.25:
        raise ValueError("disk parameter too small")
    return -1.0 + math.sqrt(4.0 * M - 1.0)


def disk_interior_radius(M: float) -> float:
    """Interior-tangency radius sqrt(2 sqrt2 M sqrt((M-1)/(2M-1)) - 2(M-1))
    for the disk |w - M| < M, valid for M > 1."""
    if M <= 1.0:
        raise ValueError("interior tangency needs M > 1")
    return math.sqrt(2.0 * SQRT2 * M * math.sqrt((M - 1.0) / (2.0 * M - 1.0)) - 2.0 * (M - 1.0))


def _interior_critical_point(M: float, r: float) -> float:
    # location x0 = cos t of the interior distance extremum on |z| = r
    return (r * r - 2.0 * (M - 1.0)) / (4.0 * (M - 1.0) * r)


@lru_cache(maxsize=1)
def m_knot() -> float:
    """Disk parameter where the binding tangency moves off the real axis.

    Below it the rightmost point exits first (radius `disk_real_axis_radius`),
    above it the interior tangency binds (radius `disk_interior_radius`);
    the two touch-radius curves are tangent here.  Located as the parameter
    where the interior critical point reaches cos t = 1.
    """
    lo, hi = 1.01, cardioid.self_centered_fixed_point() - 1e-9

    def h(M: float) -> float:
        return _interior_critical_point(M, disk_interior_radius(M)) - 1.0

    f_lo = h(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if (h(mid) > 0) == (f_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def m_fixed_point() -> float:
    """(3 + sqrt 5)/4, the unique real center with circumradius equal to it."""
    return cardioid.self_centered_fixed_point()


# ---------------------------------------------------------------------------
# two-parameter family and its corollary special cases
# ---------------------------------------------------------------------------

def janowski_radius_in_cardioid(A: float, B: float) -> RadiusResult:
    """Cardioid-class radius of the two-parameter starlike family [A, B].

    For B >= 0 the answer is min{1, 1/(2A - B)}.  For B < 0 it is
    R2 = min{1, 1/(2A - B)} when R2 <= R1 = 1/sqrt(B(3B - 2A)), otherwise
    R3 = min{1, 3/(2A - 5B)}; R1 marks where the swept disk center passes 3/2.
    """
    if not -1.0 <= B < A <= 1.0:
        raise ValueError("need -1 <= B < A <= 1")
    claim = f"radius of the [A={A:g}, B={B:g}] starlike family in the cardioid class"
    two_a_minus_b = 2.0 * A - B
    r2 = 1.0 / two_a_minus_b if two_a_minus_b > 1.0 else 1.0
    clamped = two_a_minus_b <= 1.0
    if B >= 0.0:
        return RadiusResult(r2, CLOSED_FORM, claim=claim, clamped=clamped)
    r1 = 1.0 / math.sqrt(B * (3.0 * B - 2.0 * A))
    if r2 <= r1:
        return RadiusResult(r2, CLOSED_FORM, claim=claim, clamped=clamped)
    denom = 2.0 * A - 5.0 * B
    r3 = min(1.0, 3.0 / denom)
    return RadiusResult(r3, CLOSED_FORM, claim=claim, clamped=3.0 / denom >= 1.0)


_COROLLARY_TAGS = ("order", "ram_singh", "padmanabhan", "janowski_M")


def corollary_radius(tag: str, param: float) -> RadiusResult:
    """Cardioid-class radius for the classical one-parameter specializations."""
    if tag == "order":
        if not 0.0 <= param < 1.0:
            raise ValueError("order parameter must lie in [0, 1)")
        value = 1.0 / (3.0 - 4.0 * param) if param <= 0.25 else 3.0 / (7.0 - 4.0 * param)
        return RadiusResult(value, CLOSED_FORM,
                            claim=f"radius of starlike functions of order {param:g}")
    if tag == "ram_singh":
        if not 0.0 <= param < 1.0:
            raise ValueError("parameter must lie in [0, 1)")
        value = 1.0 / (2.0 * (1.0 - param)) if param < 0.5 else 1.0
        return RadiusResult(value, CLOSED_FORM, clamped=param >= 0.5,
                            claim=f"radius of the [1-a, 0] family at a={param:g}")
    if tag == "padmanabhan":
        if not 0.0 < param <= 1.0:
            raise ValueError("parameter must lie in (0, 1]")
        value = 1.0 if param <= 1.0 / 3.0 else 1.0 / (3.0 * param)
        return RadiusResult(value, CLOSED_FORM, clamped=param <= 1.0 / 3.0,
                            claim=f"radius of the [a, -a] family at a={param:g}")
    if tag == "janowski_M":
        if param <= 0.5:
            raise ValueError("disk parameter must exceed 1/2")
        return RadiusResult(param / (3.0 * param - 1.0), CLOSED_FORM,
                            claim=f"radius of the bounded-quotient family at M={param:g}")
    raise ValueError(f"unknown corollary tag {tag!r}; known: {', '.join(_COROLLARY_TAGS)}")


# ---------------------------------------------------------------------------
# radii of named classes inside the cardioid class
# ---------------------------------------------------------------------------

def _nephroid_poly() -> tuple[float, ...]:
    return (3.0, -6.0, 0.0, 2.0)  # 2r^3 - 6r + 3 ascending


def radius_of_class_in_cardioid(tag: str, param: float | None = None) -> RadiusResult:
    """Largest subdisk radius on which every member of the named class is
    cardioid-starlike."""
    def claim(text: str) -> str:
        return f"radius of {text} in the cardioid class"

    if tag == "cassinian":
        c = 1.0 if param is None else param
        if not 0.0 < c <= 1.0:
            raise ValueError("Cassinian parameter must lie in (0, 1]")
        if c <= 0.75:
            return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                                claim=claim(f"the Cassinian class (c={c:g})"))
        return RadiusResult(0.75 / c, CLOSED_FORM, claim=claim(f"the Cassinian class (c={c:g})"))
    if tag == "lemniscate":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("lemniscate parameter must lie in [0, 1)")
        if a >= 0.5:
            return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                                claim=claim(f"the lemniscate class (alpha={a:g})"))
        return RadiusResult((3.0 - 4.0 * a) / (4.0 * (1.0 - a) ** 2), CLOSED_FORM,
                            claim=claim(f"the lemniscate class (alpha={a:g})"))
    if tag == "exponential":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("exponential parameter must lie in [0, 1)")
        if a >= alpha_zero():
            return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                                claim=claim(f"the exponential class (alpha={a:g})"))
        return RadiusResult(math.log(2.0 * (1.0 - a) / (1.0 - 2.0 * a)), CLOSED_FORM,
                            claim=claim(f"the exponential class (alpha={a:g})"))
    if tag == "rational_lemniscate":
        return RadiusResult((39.0 + 17.0 * SQRT2) / 82.0, CLOSED_FORM,
                            claim=claim("the shifted-lemniscate class"))
    if tag == "cardioid_wide":
        return RadiusResult(0.5, CLOSED_FORM, claim=claim("the wide-cardioid class"))
    if tag == "limacon":
        return RadiusResult(SQRT2 - 1.0, CLOSED_FORM, claim=claim("the limacon class"))
    if tag == "lune":
        return RadiusResult(0.75, CLOSED_FORM, claim=claim("the lune class"))
    if tag == "sine":
        return RadiusResult(math.asin(0.5), CLOSED_FORM, claim=claim("the sine class"))
    if tag == "nephroid":
        poly = _nephroid_poly()
        return RadiusResult(smallest_root_in_unit_interval(poly), ROOT_OF_POLYNOMIAL,
                            defining_polynomial=poly, claim=claim("the nephroid class"))
    if tag == "booth":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("Booth parameter must lie in [0, 1)")
        return RadiusResult(1.0 / (1.0 + math.sqrt(1.0 + a)), CLOSED_FORM,
                            claim=claim(f"the Booth-curve class (alpha={a:g})"))
    if tag == "bounded_re":
        b = 2.0 if param is None else param
        if b <= 1.0:
            raise ValueError("bounded-real-part parameter must exceed 1")
        return RadiusResult(min(1.0, 1.0 / (4.0 * b - 3.0)), CLOSED_FORM,
                            claim=claim(f"the bounded-real-part class (beta={b:g})"))
    if tag in _COROLLARY_TAGS:
        if param is None:
            raise ValueError(f"tag {tag!r} needs a parameter")
        return corollary_radius(tag, param)
    if tag == "starlike":
        return RadiusResult(1.0 / 3.0, CLOSED_FORM, claim=claim("the starlike class"))
    if tag == "convex":
        return RadiusResult(0.6, CLOSED_FORM, claim=claim("the convex class"))
    if tag in ("univalent", "close_to_convex"):
        # min of the half-plane-quotient bound 1/3 and the starlikeness
        # radius tanh(pi/4) of univalent functions
        return RadiusResult(min(1.0 / 3.0, math.tanh(math.pi / 4.0)), CLOSED_FORM,
                            claim=claim(f"the {tag.replace('_', '-')} class"))
    raise ValueError(f"unknown class tag {tag!r}")


# ---------------------------------------------------------------------------
# radii of the cardioid class inside named classes
# ---------------------------------------------------------------------------

def _cardioid_into_disk_radius(M: float, samples: int = 4096) -> float:
    """Sampled bisection for the largest r with the cardioid generator image
    of |z| < r inside |w - M| < M.  Self-contained oracle used where the
    published branch formula is unreliable."""
    t = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    e = np.exp(1j * t)

    def ok(r: float) -> bool:
        w = cardioid.eval_phi(r * e)
        return bool(np.min(M - np.abs(w - M)) > -1e-9)

    if ok(1.0 - 1e-9):
        return 1.0
    lo, hi = 1e-4, 1.0 - 1e-9
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def radius_of_cardioid_in_class(tag: str, param: float | None = None) -> RadiusResult:
    """Largest subdisk radius on which every cardioid-starlike function
    belongs to the named class."""
    def claim(text: str) -> str:
        return f"radius of the cardioid class in {text}"

    if tag == "order":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("order parameter must lie in [0, 1)")
        if a <= 0.25:
            value, clamped = 1.0, True
        elif a <= 0.625:
            value, clamped = math.sqrt((3.0 - 4.0 * a) / 2.0), False
        else:
            value, clamped = 1.0 - math.sqrt(2.0 * a - 1.0), False
        return RadiusResult(value, CLOSED_FORM, clamped=clamped,
                            claim=claim(f"starlike functions of order {a:g}"))
    if tag == "lemniscate":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("lemniscate parameter must lie in [0, 1)")
        return RadiusResult(-1.0 + math.sqrt((2.0 * SQRT2 - 1.0) - 2.0 * (SQRT2 - 1.0) * a),
                            CLOSED_FORM, claim=claim(f"the lemniscate class (alpha={a:g})"))
    if tag == "rational_lemniscate":
        g = 2.0 * SQRT2 - 2.0
        value = -1.0 + math.sqrt(1.0 + 2.0 * math.sqrt(math.sqrt(g) - g))
        return RadiusResult(value, CLOSED_FORM, claim=claim("the shifted-lemniscate class"),
                            flags=("bounding-disk-route",))
    if tag == "rational":
        return RadiusResult(1.0 - math.sqrt(4.0 * SQRT2 - 5.0), CLOSED_FORM,
                            claim=claim("the rational-generator class"))
    if tag == "sine":
        return RadiusResult(-1.0 + math.sqrt(1.0 + 2.0 * math.sin(1.0)), CLOSED_FORM,
                            claim=claim("the sine class"))
    if tag == "cosh":
        return RadiusResult(-1.0 + math.sqrt(-1.0 + 2.0 * math.cosh(1.0)), CLOSED_FORM,
                            claim=claim("the hyperbolic-cosine class"))
    if tag == "nephroid":
        return RadiusResult((math.sqrt(21.0) - 3.0) / 3.0, CLOSED_FORM,
                            claim=claim("the nephroid class"))
    if tag == "sigmoid":
        return RadiusResult(-1.0 + math.sqrt(1.0 + 2.0 * (E - 1.0) / (E + 1.0)), CLOSED_FORM,
                            claim=claim("the sigmoid class"))
    if tag == "ram_singh":
        a = 0.0 if param is None else param
        if not 0.0 <= a < 1.0:
            raise ValueError("parameter must lie in [0, 1)")
        return RadiusResult(-1.0 + math.sqrt(3.0 - 2.0 * a), CLOSED_FORM,
                            claim=claim(f"the [1-a, 0] family at a={a:g}"))
    if tag == "padmanabhan":
        if param is None:
            raise ValueError("the [a, -a] radius needs a parameter")
        a = param
        if not 0.0 < a <= 1.0:
            raise ValueError("parameter must lie in (0, 1]")
        if a >= alpha_knot():
            return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                                claim=claim(f"the [a, -a] family at a={a:g}"))
        return RadiusResult(w_alpha(a), CLOSED_FORM,
                            claim=claim(f"the [a, -a] family at a={a:g}"))
    if tag == "janowski_M":
        if param is None or param <= 0.5:
            raise ValueError("disk parameter must exceed 1/2")
        M = param
        text = claim(f"the bounded-quotient family at M={M:g}")
        if M >= m_fixed_point():
            return RadiusResult(1.0, CLOSED_FORM, clamped=True, claim=text)
        if M > m_knot():
            return RadiusResult(disk_interior_radius(M), CLOSED_FORM, claim=text)
        # On the first branch the published term -1 + sqrt(M - 1) is not a
        # real positive radius anywhere in the branch; report the measured
        # value and flag the row instead of guessing a repaired formula.
        return RadiusResult(_cardioid_into_disk_radius(M), ORACLE, claim=text,
                            flags=("formula-suspect",))
    if tag == "cardioid_wide":
        return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                            claim=claim("the wide-cardioid class"))
    if tag == "bounded_re":
        if param is None or param <= 1.0:
            raise ValueError("bounded-real-part parameter must exceed 1")
        b = param
        if b >= 2.5:
            return RadiusResult(1.0, CLOSED_FORM, clamped=True,
                                claim=claim(f"the bounded-real-part class (beta={b:g})"))
        return RadiusResult(math.sqrt(2.0 * b - 1.0) - 1.0, CLOSED_FORM,
                            claim=claim(f"the bounded-real-part class (beta={b:g})"))
    raise ValueError(f"unknown class tag {tag!r}")


# ---------------------------------------------------------------------------
# ratio classes
# ---------------------------------------------------------------------------

_CHI_TAGS = ("z", "z_over_1plusz", "z_over_1minusz2", "koebe", "z_plus_half_z2")

# quotient disk |w - center(r)| <= spread(r) for each (i, chi) pair
_RATIO_DISKS: dict[tuple[int, str], tuple[Callable, Callable]] = {
    (1, "z"): (lambda r: 1.0, lambda r: 4.0 * r / (1.0 - r * r)),
    (2, "z"): (lambda r: 1.0, lambda r: (3.0 * r + r * r) / (1.0 - r * r)),
    (3, "z"): (lambda r: 1.0, lambda r: 2.0 * r / (1.0 - r * r)),
    (1, "z_over_1plusz"): (lambda r: 1.0 / (1.0 - r * r), lambda r: 5.0 * r / (1.0 - r * r)),
    (2, "z_over_1plusz"): (lambda r: 1.0 / (1.0 - r * r),
                           lambda r: (4.0 * r + r * r) / (1.0 - r * r)),
    (3, "z_over_1plusz"): (lambda r: 1.0 / (1.0 - r * r), lambda r: 3.0 * r / (1.0 - r * r)),
    (1, "z_over_1minusz2"): (lambda r: (1.0 + r**4) / (1.0 - r**4),
                             lambda r: 2.0 * r * (2.0 * r * r + r + 2.0) / (1.0 - r**4)),
    (2, "z_over_1minusz2"): (lambda r: (1.0 + r**4) / (1.0 - r**4),
                             lambda r: r * (r**3 + 3.0 * r * r + 3.0 * r + 3.0) / (1.0 - r**4)),
    (3, "z_over_1minusz2"): (lambda r: (1.0 + r**4) / (1.0 - r**4),
                             lambda r: 2.0 * r * (r * r + r + 1.0) / (1.0 - r**4)),
    (1, "koebe"): (lambda r: (1.0 + r * r) / (1.0 - r * r), lambda r: 6.0 * r / (1.0 - r * r)),
    (2, "koebe"): (lambda r: (1.0 + r * r) / (1.0 - r * r),
                   lambda r: (5.0 * r + r * r) / (1.0 - r * r)),
    (3, "koebe"): (lambda r: (1.0 + r * r) / (1.0 - r * r), lambda r: 4.0 * r / (1.0 - r * r)),
    (1, "z_plus_half_z2"): (lambda r: (4.0 - 2.0 * r * r) / (4.0 - r * r),
                            lambda r: 6.0 * r * (3.0 - r * r) / ((1.0 - r * r) * (4.0 - r * r))),
    (2, "z_plus_half_z2"): (lambda r: (4.0 - 2.0 * r * r) / (4.0 - r * r),
                            lambda r: r * (-r**3 - 5.0 * r * r + 4.0 * r + 14.0)
                            / ((1.0 - r * r) * (4.0 - r * r))),
    (3, "z_plus_half_z2"): (lambda r: (4.0 - 2.0 * r * r) / (4.0 - r * r),
                            lambda r: 2.0 * r * (5.0 - 2.0 * r * r)
                            / ((1.0 - r * r) * (4.0 - r * r))),
}

# closed forms / defining polynomials, ascending coefficients
_RATIO_VALUES: dict[tuple[int, str], tuple] = {
    (1, "z"): (math.sqrt(17.0) - 4.0, None),
    (2, "z"): (1.0 / (3.0 + 2.0 * math.sqrt(3.0)), None),
    (3, "z"): (math.sqrt(5.0) - 2.0, None),
    (1, "z_over_1plusz"): (5.0 - 2.0 * math.sqrt(6.0), None),
    (2, "z_over_1plusz"): (math.sqrt(17.0) - 4.0, None),
    (3, "z_over_1plusz"): (3.0 - 2.0 * SQRT2, None),
    (1, "z_over_1minusz2"): (None, (1.0, -8.0, -4.0, -8.0, 3.0)),
    (2, "z_over_1minusz2"): (None, (1.0, -6.0, -6.0, -6.0, 1.0)),
    (3, "z_over_1minusz2"): (None, (1.0, -4.0, -4.0, -4.0, 3.0)),
    (1, "koebe"): ((6.0 - math.sqrt(33.0)) / 3.0, None),
    (2, "koebe"): (5.0 - 2.0 * math.sqrt(6.0), None),
    (3, "koebe"): ((4.0 - math.sqrt(13.0)) / 3.0, None),
    (1, "z_plus_half_z2"): (None, (2.0, -19.0, 6.0, 3.0)),
    (2, "z_plus_half_z2"): (None, (2.0, -15.0, 0.0, 5.0)),
    (3, "z_plus_half_z2"): (None, (2.0, -11.0, 2.0, 3.0)),
}


def ratio_disk_family(i: int, chi: str) -> tuple[Callable, Callable]:
    """(center(r), spread(r)) of the quotient disk for the ratio class (i, chi)."""
    try:
        return _RATIO_DISKS[(i, chi)]
    except KeyError:
        raise ValueError(f"unknown ratio class ({i}, {chi!r}); chi tags: {', '.join(_CHI_TAGS)}")


def ratio_class_radius(i: int, chi: str) -> RadiusResult:
    """Cardioid-class radius of the three ratio-comparison classes over chi."""
    if (i, chi) not in _RATIO_VALUES:
        raise ValueError(f"unknown ratio class ({i}, {chi!r}); chi tags: {', '.join(_CHI_TAGS)}")
    closed, poly = _RATIO_VALUES[(i, chi)]
    text = f"radius of the ratio class {i} over chi={chi} in the cardioid class"
    if closed is not None:
        return RadiusResult(closed, CLOSED_FORM, claim=text)
    return RadiusResult(smallest_root_in_unit_interval(poly), ROOT_OF_POLYNOMIAL,
                        defining_polynomial=poly, claim=text)


def ratio2_rotated_closed_form() -> float:
    """Radical form 3/2 + sqrt(17)/2 - sqrt((11 + 3 sqrt 17)/2) of the
    ratio-2 radius over z/(1-z^2); equals the quartic root to working precision."""
    return 1.5 + math.sqrt(17.0) / 2.0 - math.sqrt((11.0 + 3.0 * math.sqrt(17.0)) / 2.0)


# ---------------------------------------------------------------------------
# partial sums and convolution
# ---------------------------------------------------------------------------

def partial_sum_radii() -> dict[str, float]:
    """Sharp constants for second partial sums.

    starlike/convex: where f2 of a cardioid-starlike f keeps the property;
    cardioid_dilation: f2(rho z)/rho stays in the class; from_convex and
    from_univalent: the same dilation bound when f ranges over the convex
    and univalent classes.
    """
    return {
        "starlike": 0.5,
        "convex": 0.25,
        "cardioid_dilation": 1.0 / 3.0,
        "from_convex": 1.0 / 3.0,
        "from_univalent": 1.0 / 6.0,
    }


def convolution_radii() -> dict[str, float]:
    """convex_factor: dilation keeping f * g in the class for convex g;
    starlike_pair: dilation for the convolution of two starlike functions."""
    return {
        "convex_factor": 0.5,
        "starlike_pair": (4.0 - math.sqrt(13.0)) / 3.0,
    }


# ---------------------------------------------------------------------------
# the constants registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleSpec:
    """Declarative description of the independent check for one constant.

    kinds:
      generator_into_cardioid  payload: name, params
      quotient_into_cardioid   payload: name
      quotient_into_domain     payload: name, domain, domain_params
      cardioid_into_domain     payload: domain, domain_params
      disk_family              payload: center, spread, domain, domain_params
      threshold                payload: name (special measurement in `verify`)
    """

    kind: str
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ConstantEntry:
    key: str
    description: str
    value: float
    method: str = CLOSED_FORM
    defining_polynomial: tuple[float, ...] | None = None
    published: float | None = None        # decimal printed in the literature
    published_tol: float = 5e-5
    oracle: OracleSpec | None = None
    flags: tuple[str, ...] = ()
    note: str = ""


def _entry(key, description, result: "RadiusResult | float", published=None,
           published_tol=5e-5, oracle=None, flags=(), note="") -> ConstantEntry:
    if isinstance(result, RadiusResult):
        return ConstantEntry(key, description, result.value, result.method,
                             result.defining_polynomial, published, published_tol,
                             oracle, tuple(flags) + tuple(result.flags), note)
    return ConstantEntry(key, description, float(result), CLOSED_FORM, None,
                         published, published_tol, oracle, tuple(flags), note)


@lru_cache(maxsize=1)
def constants_registry() -> tuple[ConstantEntry, ...]:
    rows: list[ConstantEntry] = []
    add = rows.append

    # ---- inclusion thresholds -------------------------------------
    add(_entry("incl.min_re", "largest order of starlikeness containing the class",
               0.25,
               oracle=OracleSpec("threshold", {"name": "min_re_limit"})))
    bz = beta_zero_candidates()
    add(_entry("incl.strong_order", "strong starlikeness order of the class",
               bz["statement_form"],
               published=bz["published_decimal"], published_tol=5e-5,
               oracle=OracleSpec("threshold", {"name": "max_arg"}),
               flags=("published-decimal-mismatch",),
               note=(f"published decimal {bz['published_decimal']} and variant reading "
                     f"{bz['proof_form']:.6f} both differ from the measured maximum; "
                     "the measured value is reported")))
    add(_entry("incl.conic", "smallest conic parameter whose region fits inside",
               5.0 / 3.0,
               oracle=OracleSpec("threshold", {"name": "conic_inclusion"})))
    add(_entry("incl.exponential", "smallest exponential-region parameter fitting inside",
               alpha_zero(), published=0.209011,
               oracle=OracleSpec("threshold", {"name": "exponential_inclusion"})))
    add(_entry("incl.lemniscate", "smallest lemniscate parameter fitting inside",
               0.5,
               oracle=OracleSpec("threshold", {"name": "lemniscate_inclusion"})))
    add(_entry("incl.cassinian", "largest Cassinian parameter fitting inside",
               0.75,
               oracle=OracleSpec("threshold", {"name": "cassinian_inclusion"})))
    add(_entry("incl.outer_disk", "self-centered circumscribed disk parameter",
               m_fixed_point(), published=1.309017,
               oracle=OracleSpec("threshold", {"name": "outer_disk_fixed_point"})))

    # ---- radii of classes in the cardioid class --------------------
    def of_row(key, tag, param, gen, gen_params, published=None, tol=5e-5, note=""):
        res = radius_of_class_in_cardioid(tag, param)
        add(_entry(f"of.{key}", res.claim, res, published, tol,
                   OracleSpec("generator_into_cardioid",
                              {"name": gen, "params": gen_params}), note=note))

    of_row("cassinian", "cassinian", 1.0, "cassinian", {"c": 1.0}, published=None)
    of_row("lemniscate", "lemniscate", 0.0, "lemniscate", {"alpha": 0.0})
    of_row("exponential", "exponential", 0.0, "exponential", {"alpha": 0.0})
    of_row("rational_lemniscate", "rational_lemniscate", None,
           "rational_lemniscate", {}, published=0.7688)
    of_row("cardioid_wide", "cardioid_wide", None, "cardioid_wide", {}, published=0.5)
    of_row("limacon", "limacon", None, "limacon", {}, published=0.414, tol=5e-4)
    of_row("lune", "lune", None, "lune", {}, published=0.75)
    of_row("sine", "sine", None, "sine", {}, published=0.523598)
    of_row("nephroid", "nephroid", None, "nephroid", {}, published=0.557875)
    of_row("order_low", "order", 0.1, "order", {"alpha": 0.1})
    of_row("order_high", "order", 0.5, "order", {"alpha": 0.5})
    of_row("ram_singh", "ram_singh", 0.25, "ram_singh", {"alpha": 0.25})
    of_row("padmanabhan", "padmanabhan", 0.5, "padmanabhan", {"alpha": 0.5})
    of_row("janowski_M", "janowski_M", 1.0, "janowski", {"A": 1.0, "B": 0.0})
    of_row("booth", "booth", 0.0, "booth", {"alpha": 0.0})
    of_row("booth_half", "booth", 0.5, "booth", {"alpha": 0.5})
    of_row("bounded_re", "bounded_re", 2.0, "bounded_re", {"beta": 2.0})
    of_row("starlike", "starlike", None, "janowski", {"A": 1.0, "B": -1.0})
    of_row("convex", "convex", None, "order", {"alpha": 0.5})
    res = radius_of_class_in_cardioid("univalent")
    add(_entry("of.univalent", res.claim, res,
               oracle=OracleSpec("quotient_into_cardioid", {"name": "koebe"})))
    res = janowski_radius_in_cardioid(0.5, -0.5)
    add(_entry("of.janowski_mixed", res.claim, res,
               oracle=OracleSpec("generator_into_cardioid",
                                 {"name": "janowski", "params": {"A": 0.5, "B": -0.5}})))

    # ---- radii of the cardioid class in other classes --------------
    def within_row(key, tag, param, domain, domain_params, published=None, tol=5e-5,
                   oracle=None, flags=(), note=""):
        res = radius_of_cardioid_in_class(tag, param)
        orc = oracle or OracleSpec("cardioid_into_domain",
                                   {"domain": domain, "params": domain_params})
        add(_entry(f"within.{key}", res.claim, res, published, tol, orc,
                   flags=flags, note=note))

    within_row("order_mid", "order", 0.45, "min_re", (0.45,))
    within_row("order_high", "order", 0.7, "min_re", (0.7,))
    within_row("lemniscate", "lemniscate", 0.0, "lemniscate", (0.0,))
    within_row("lemniscate_quarter", "lemniscate", 0.25, "lemniscate", (0.25,))
    g = 2.0 * SQRT2 - 2.0
    within_row("rational_lemniscate", "rational_lemniscate", None, None, None,
               published=0.253734,
               oracle=OracleSpec("disk_family",
                                 {"center": lambda r: 1.0,
                                  "spread": lambda r: r + 0.5 * r * r,
                                  "domain": "rational_lemniscate", "params": ()}),
               note=("the tabulated bound follows the bounding-disk argument; the direct "
                     "subordination radius is larger (~0.2601) and is reported by the "
                     "verification suite"))
    within_row("rational", "rational", None, "rational", (), published=0.189535)
    within_row("sine", "sine", None, "sine", (), published=0.637969)
    within_row("cosh", "cosh", None, "cosh", (), published=0.444355)
    within_row("nephroid", "nephroid", None, "nephroid", (), published=0.527525)
    within_row("sigmoid", "sigmoid", None, "sigmoid", (), published=0.387168)
    within_row("ram_singh", "ram_singh", 0.0, "disk", (1.0, 0.0, 1.0))
    apol_c = (1.0 + 0.09) / (1.0 - 0.09)
    apol_r = 0.6 / (1.0 - 0.09)
    within_row("padmanabhan", "padmanabhan", 0.3, "disk", (apol_c, 0.0, apol_r))
    add(_entry("within.padmanabhan_knot",
               "parameter above which the whole region fits the Apollonius disk",
               alpha_knot(), published=0.672505,
               oracle=OracleSpec("threshold", {"name": "apollonius_full_inclusion"})))
    within_row("janowski_M_low", "janowski_M", 1.05, "disk", (1.05, 0.0, 1.05),
               note="published first-branch term -1+sqrt(M-1) is not a real radius; "
                    "the measured value is reported")
    within_row("janowski_M_high", "janowski_M", 1.2, "disk", (1.2, 0.0, 1.2))
    add(_entry("within.janowski_M_knot",
               "disk parameter where the binding tangency leaves the real axis",
               m_knot(),
               published=1.1423, published_tol=5e-4,
               oracle=OracleSpec("threshold", {"name": "disk_branch_crossover"})))
    within_row("cardioid_wide", "cardioid_wide", None, "cardioid_wide", ())
    within_row("bounded_re", "bounded_re", 2.0, "bounded_re", (2.0,))
    within_row("bounded_re_capped", "bounded_re", 3.0, "bounded_re", (3.0,))

    # ---- ratio classes ----------------------------------------------
    ratio_published = {
        (1, "z"): 0.1231, (2, "z"): 0.154701, (3, "z"): 0.23606,
        (1, "z_over_1plusz"): 0.10102, (2, "z_over_1plusz"): 0.12310,
        (3, "z_over_1plusz"): 0.17157,
        (1, "z_over_1minusz2"): 0.116675, (2, "z_over_1minusz2"): 0.14326,
        (3, "z_over_1minusz2"): 0.202135,
        (1, "koebe"): 0.0851458, (2, "koebe"): 0.101021, (3, "koebe"): 0.13148,
        (1, "z_plus_half_z2"): 0.10924, (2, "z_plus_half_z2"): 0.134138,
        (3, "z_plus_half_z2"): 0.19028,
    }
    for (i, chi), published in ratio_published.items():
        res = ratio_class_radius(i, chi)
        center, spread = ratio_disk_family(i, chi)
        flags = ()
        note = ""
        if (i, chi) == (2, "z_over_1minusz2"):
            flags = ("published-decimal-ambiguous",)
            note = "printed as 0.14326 in the table and 0.14327 in the derivation; " \
                   "both round the same root"
        add(_entry(f"ratio.f{i}.{chi}", res.claim, res, published,
                   oracle=OracleSpec("disk_family",
                                     {"center": center, "spread": spread,
                                      "domain": "cardioid", "params": ()}),
                   flags=flags, note=note))

    # ---- partial sums and convolution -------------------------------
    ps = partial_sum_radii()
    add(_entry("psum.starlike", "starlikeness radius of second partial sums",
               ps["starlike"],
               oracle=OracleSpec("quotient_into_domain",
                                 {"name": "second_sum", "domain": "min_re",
                                  "params": (0.0,)})))
    add(_entry("psum.convex", "convexity radius of second partial sums",
               ps["convex"],
               oracle=OracleSpec("quotient_into_domain",
                                 {"name": "second_sum_convexity", "domain": "min_re",
                                  "params": (0.0,)})))
    add(_entry("psum.cardioid_dilation", "dilation keeping second sums in the class",
               ps["cardioid_dilation"],
               oracle=OracleSpec("quotient_into_cardioid", {"name": "second_sum"})))
    add(_entry("psum.from_convex", "dilation bound for second sums of convex functions",
               ps["from_convex"],
               oracle=OracleSpec("quotient_into_cardioid", {"name": "second_sum"})))
    add(_entry("psum.from_univalent", "dilation bound for second sums of univalent functions",
               ps["from_univalent"],
               oracle=OracleSpec("quotient_into_cardioid", {"name": "koebe_second_sum"})))
    cv = convolution_radii()
    add(_entry("conv.convex_factor", "dilation keeping convolutions with convex functions",
               cv["convex_factor"],
               oracle=OracleSpec("threshold", {"name": "generator_convexity"})))
    center, spread = ratio_disk_family(3, "koebe")
    add(_entry("conv.starlike_pair", "dilation bound for convolutions of two starlike functions",
               cv["starlike_pair"], published=0.1314829,
               oracle=OracleSpec("disk_family",
                                 {"center": center, "spread": spread,
                                  "domain": "cardioid", "params": ()})))

    # ---- growth and coefficient constants ----------------------------
    add(_entry("growth.inner_disk", "radius of the disk covered by every image",
               math.exp(-0.75), published=0.47236,
               oracle=OracleSpec("threshold", {"name": "growth_lower_limit"})))
    for n, bound in ((2, 1.0), (3, 0.75), (4, 5.0 / 12.0)):
        add(_entry(f"coeff.bound_{n}", f"sharp bound on the coefficient a{n}",
                   bound,
                   oracle=OracleSpec("threshold", {"name": "series_coefficient",
                                                   "index": n})))

    keys = [r.key for r in rows]
    if len(keys) != len(set(keys)):
        raise RuntimeError("duplicate registry keys")
    return tuple(rows)


def registry_row_count() -> int:
    return len(constants_registry())
