"""The cardioid generator 1 + z + z^2/2 and its image domain.

The generator maps the unit disk onto the region bounded by the cardioid
(4x^2 + 4y^2 - 8x - 1)^2 + 4 (4x^2 + 4y^2 - 12x + 1) = 0, which sits in the
right half-plane with real-axis extent (1/2, 5/2).  This module collects
everything specific to that region: evaluation, the circle extrema of the
real part, membership through the quadratic preimage (with the implicit
quartic as an independent cross-check), the largest inscribed and smallest
circumscribed disks about a real center, and the convexity radius of the
generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

RE_MIN = 0.5   # value of the generator at z = -1
RE_MAX = 2.5   # value of the generator at z = +1


def eval_phi(z):
    """1 + z + z^2/2 for scalars or numpy arrays."""
    z = np.asarray(z, dtype=complex)
    out = 1.0 + z + 0.5 * z * z
    return out if out.shape else complex(out)


def boundary_point(t):
    """Boundary parametrization phi(e^{it})."""
    t = np.asarray(t, dtype=float)
    out = eval_phi(np.exp(1j * t))
    return out if np.ndim(out) else complex(out)


def min_re_on_circle(r: float) -> float:
    """min of Re phi on |z| = r: 1 - r + r^2/2 up to r = 1/2, then (3 - 2r^2)/4.

    The interior critical point cos t = -1/(2r) enters [-1, 1] exactly at
    r = 1/2; at the knot both branches give 5/8.
    """
    if not 0 < r < 1:
        raise ValueError("radius must lie in (0, 1)")
    if r <= 0.5:
        return 1.0 - r + 0.5 * r * r
    return (3.0 - 2.0 * r * r) / 4.0


def max_re_on_circle(r: float) -> float:
    """max of Re phi on |z| = r, always attained at z = r."""
    if not 0 < r <= 1:
        raise ValueError("radius must lie in (0, 1]")
    return 1.0 + r + 0.5 * r * r


@dataclass(frozen=True)
class MembershipVerdict:
    verdict: str                  # "inside" | "boundary" | "outside"
    preimage: complex | None      # the in-disk root when inside
    preimage_modulus: float       # modulus of the smaller-|z| root
    near_cusp: bool               # query within 1e-6 of the cusp at w = 1/2

    @property
    def inside(self) -> bool:
        return self.verdict == "inside"


def _preimage_roots(w: complex) -> tuple[complex, complex]:
    # Solve z^2/2 + z + (1 - w) = 0; the principal square root plus the sign
    # flip covers both branches, and univalence guarantees at most one root
    # lies in the open disk.
    s = np.sqrt(complex(2.0 * w - 1.0))
    return -1.0 + s, -1.0 - s


def contains(w: complex, eps_boundary: float = 1e-12) -> MembershipVerdict:
    """Classify w against the open image domain via its generator preimage.

    The verdict tolerance acts on the preimage modulus, not on the implicit
    quartic, which degenerates quartically near the cusp at w = 1/2.
    """
    r1, r2 = _preimage_roots(w)
    z = r1 if abs(r1) <= abs(r2) else r2
    m = abs(z)
    near_cusp = abs(w - 0.5) < 1e-6
    if m < 1.0 - eps_boundary:
        return MembershipVerdict("inside", complex(z), m, near_cusp)
    if m <= 1.0 + eps_boundary:
        return MembershipVerdict("boundary", None, m, near_cusp)
    return MembershipVerdict("outside", None, m, near_cusp)


def preimage_margin(w):
    """Signed membership margin 1 - min |root|, positive inside, vectorized.

    Measured in preimage units: near smooth boundary it scales like
    w-distance / |phi'|, near the cusp it is more permissive from inside.
    """
    w = np.asarray(w, dtype=complex)
    s = np.sqrt(2.0 * w - 1.0)
    m = 1.0 - np.minimum(np.abs(-1.0 + s), np.abs(-1.0 - s))
    return m if m.shape else float(m)


def implicit_value(x, y):
    """The boundary quartic F(x, y); negative exactly on the open domain."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    q = 4.0 * x * x + 4.0 * y * y
    out = (q - 8.0 * x - 1.0) ** 2 + 4.0 * (q - 12.0 * x + 1.0)
    return out if out.shape else float(out)


def contains_implicit(w: complex) -> bool:
    """Membership by sign of the implicit quartic.

    Kept as an independent cross-check oracle for `contains`; the two must
    agree away from the boundary (see the test suite's grid comparison).
    """
    return bool(implicit_value(w.real, w.imag) < 0.0)


@dataclass(frozen=True)
class AnnulusOfDisks:
    """Largest inscribed and smallest circumscribed disk radii about (a, 0)."""

    a: float
    r_inner: float
    r_outer: float

    def __post_init__(self):
        if not (0 < self.r_inner <= self.r_outer):
            raise ValueError("need 0 < r_inner <= r_outer")


def inner_outer_radii(a: float) -> tuple[float, float]:
    """(r_a, R_a) with {|w-a| < r_a} inside the domain inside {|w-a| < R_a}.

    Both are extrema over the boundary of the squared distance
    g(x) = a^2 - a + 5/4 + (3-2a)x + 2(1-a)x^2,  x = cos t:
      r_a = (2a-1)/2 on (1/2, 3/2],  (5-2a)/2 on [3/2, 5/2);
      R_a = (5-2a)/2 on (1/2, 7/6],  sqrt((2a-1)^3 / (8(a-1))) on [7/6, 5/2).
    At a knot either branch applies; the left branch is used by convention.
    """
    if not RE_MIN < a < RE_MAX:
        raise ValueError("center must lie in the open interval (1/2, 5/2)")
    r_in = (2.0 * a - 1.0) / 2.0 if a <= 1.5 else (5.0 - 2.0 * a) / 2.0
    if a <= 7.0 / 6.0:
        r_out = (5.0 - 2.0 * a) / 2.0
    else:
        r_out = math.sqrt((2.0 * a - 1.0) ** 3 / (8.0 * (a - 1.0)))
    return r_in, r_out


def annulus_of_disks(a: float) -> AnnulusOfDisks:
    r_in, r_out = inner_outer_radii(a)
    return AnnulusOfDisks(a, r_in, r_out)


def self_centered_fixed_point() -> float:
    """The unique center with R_a = a, namely (3 + sqrt 5)/4 ~ 1.309017.

    For every M at least this large the domain sits in {|w - M| < M}.
    """
    return (3.0 + math.sqrt(5.0)) / 4.0


def convexity_radius() -> float:
    """Radius 1/2 below which the generator image of the subdisk is convex.

    1 + Re(z phi''/phi') = 1 + Re(z/(1+z)) has circle minimum 1 - r/(1-r),
    positive exactly for r < 1/2.
    """
    return 0.5


def boundary_samples(n: int) -> np.ndarray:
    """n boundary points phi(e^{it}) on the uniform grid t_j = 2 pi j / n."""
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return np.asarray(eval_phi(np.exp(1j * t)))


def boundary_csv(n: int = 512) -> str:
    """CSV rows "t, x, y" tracing the cardioid once."""
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    w = np.asarray(eval_phi(np.exp(1j * t)))
    lines = ["t,x,y"]
    lines += [f"{ti:.9g},{wi.real:.9g},{wi.imag:.9g}" for ti, wi in zip(t, w)]
    return "\n".join(lines) + "\n"
