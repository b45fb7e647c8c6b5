"""Truncated power-series arithmetic for normalized analytic functions.

A normalized function f(z) = z + a2 z^2 + ... + aN z^N is stored through the
coefficients (a1, ..., aN) of f, which coincide with the Taylor coefficients
of f(z)/z about 0.  Everything here is plain O(N^2) coefficient recurrence
arithmetic; N defaults to 32, at which point every quantity handled by this
package has stabilized far below double precision.

Low-level helpers (`multiply_coeffs`, `exp_coeffs`) operate on ordinary
coefficient lists c0, c1, ... with the constant term first.  The class
`PowerSeries` wraps the normalized-function view and provides the quotient
z f'(z)/f(z), the Hadamard (coefficientwise) product, dilation f(rho z)/rho,
and the coefficient tests used for membership in the cardioid starlike class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_ORDER = 32

Coeffs = Sequence[complex]


def multiply_coeffs(p: Coeffs, q: Coeffs) -> list[complex]:
    """Cauchy product of two coefficient lists, truncated to the shorter length."""
    if len(p) == 0 or len(q) == 0:
        raise ValueError("empty coefficient list")
    n = min(len(p), len(q))
    out = [0j] * n
    for i in range(n):
        acc = 0j
        for k in range(i + 1):
            acc += complex(p[k]) * complex(q[i - k])
        out[i] = acc
    return out


def exp_coeffs(p: Coeffs) -> list[complex]:
    """exp of a series with zero constant term, same truncation length.

    Uses the recurrence n c_n = sum_{k=1}^{n} k p_k c_{n-k} with c_0 = 1.
    """
    if len(p) == 0:
        raise ValueError("empty coefficient list")
    if p[0] != 0:
        raise ValueError("exp_coeffs requires zero constant term")
    n = len(p)
    c = [0j] * n
    c[0] = 1.0 + 0j
    for m in range(1, n):
        acc = 0j
        for k in range(1, m + 1):
            acc += k * complex(p[k]) * c[m - k]
        c[m] = acc / m
    return c


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients a1..aN of f(z) = a1 z + a2 z^2 + ... (a1 = 1 when normalized)."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def is_normalized(self) -> bool:
        return self.coeffs[0] == 1

    def require_normalized(self) -> None:
        if not self.is_normalized:
            raise ValueError("series is not normalized (a1 must be exactly 1)")

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """f(z) = z."""
        return cls((1.0,) + (0.0,) * (order - 1))

    @classmethod
    def from_ratio_coeffs(cls, c: Coeffs) -> "PowerSeries":
        """Build from the Taylor coefficients c0, c1, ... of f(z)/z."""
        return cls(tuple(c))

    @classmethod
    def koebe(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """z/(1-z)^2 truncated: a_n = n."""
        return cls(tuple(float(n) for n in range(1, order + 1)))

    @classmethod
    def half_plane(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """z/(1-z) truncated: a_n = 1.  Also the Hadamard identity."""
        return cls((1.0,) * order)

    # -- arithmetic ----------------------------------------------------

    def hadamard(self, other: "PowerSeries") -> "PowerSeries":
        """Coefficientwise product a_n b_n (Hadamard convolution)."""
        self.require_normalized()
        other.require_normalized()
        if self.order != other.order:
            raise ValueError("Hadamard convolution needs equal truncation orders")
        return PowerSeries(tuple(a * b for a, b in zip(self.coeffs, other.coeffs)))

    def dilate(self, rho: float) -> "PowerSeries":
        """f(rho z)/rho, i.e. a_n -> a_n rho^(n-1); requires 0 < rho <= 1."""
        if not 0 < rho <= 1:
            raise ValueError("dilation factor must lie in (0, 1]")
        return PowerSeries(tuple(a * rho**n for n, a in enumerate(self.coeffs)))

    def truncate(self, n: int) -> "PowerSeries":
        if not 1 <= n <= self.order:
            raise ValueError(f"truncation length {n} outside 1..{self.order}")
        return PowerSeries(self.coeffs[:n])

    # -- evaluation ----------------------------------------------------

    def eval(self, z):
        """f(z) by Horner on f(z)/z; accepts scalars or numpy arrays."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        out = z * acc
        return out if out.shape else complex(out)

    def eval_derivative(self, z):
        """f'(z) of the truncated polynomial."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for n in range(self.order, 0, -1):
            acc = acc * z + n * self.coeffs[n - 1]
        return acc if acc.shape else complex(acc)

    def eval_log_derivative(self, z):
        """z f'(z)/f(z) evaluated exactly from the truncated polynomial."""
        z = np.asarray(z, dtype=complex)
        out = z * self.eval_derivative(z) / self.eval(z)
        return out if out.shape else complex(out)

    # -- the central quotient -------------------------------------------

    def log_derivative(self) -> "LogDerivativeSeries":
        """Series of z f'(z)/f(z) - 1, from the recurrence f * (zf'/f) = z f'.

        Division is never formed explicitly; with a1 = 1 the recurrence
        w_{n-1} = (n-1) a_n - sum_{k=2}^{n-1} a_k w_{n-k} is well conditioned.
        Output is truncated to order N-1.
        """
        self.require_normalized()
        a = self.coeffs
        n_out = self.order - 1
        w = [0j] * n_out
        for n in range(2, self.order + 1):
            acc = (n - 1) * a[n - 1]
            for k in range(2, n):
                acc -= a[k - 1] * w[n - k - 1]
            w[n - 2] = acc
        return LogDerivativeSeries(tuple(w))


@dataclass(frozen=True)
class LogDerivativeSeries:
    """Coefficients w1..wM of w(z) = z f'(z)/f(z) - 1 (the constant term of
    zf'/f is always 1 and is therefore not stored)."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def eval(self, z):
        """Value of z f'(z)/f(z) = 1 + sum w_j z^j."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        out = 1.0 + z * acc
        return out if out.shape else complex(out)

    def integrate_to_function(self, order: int | None = None) -> PowerSeries:
        """Reconstruct f = z exp(int (q(t)-1)/t dt) where q = 1 + this series.

        Inverse of PowerSeries.log_derivative up to the truncation order.
        """
        n = order if order is not None else self.order + 1
        if n < 1 or n > self.order + 1:
            raise ValueError(f"order must lie in 1..{self.order + 1}")
        p = [0j] * n
        for j in range(1, n):
            p[j] = self.coeffs[j - 1] / j
        return PowerSeries.from_ratio_coeffs(exp_coeffs(p))


def series_exp(p: Coeffs) -> list[complex]:
    """Alias of exp_coeffs kept close to the other series operations."""
    return exp_coeffs(p)


def f_cardioid_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    """The extremal function z exp(z + z^2/4) of the cardioid starlike class.

    Expansion starts z + z^2 + 3 z^3/4 + 5 z^4/12 + 19 z^5/96 + ...
    """
    p = [0j] * order
    if order > 1:
        p[1] = 1.0
    if order > 2:
        p[2] = 0.25
    return PowerSeries.from_ratio_coeffs(exp_coeffs(p))


def coefficient_condition(f: PowerSeries) -> bool:
    """Sufficient membership test: sum_{n>=2} (2n-1) |a_n| <= 1.

    Only stored coefficients enter; tails of truncations are not bounded.
    """
    f.require_normalized()
    return coefficient_condition_sum(f) <= 1.0


def coefficient_condition_sum(f: PowerSeries) -> float:
    f.require_normalized()
    return float(sum((2 * n - 1) * abs(a) for n, a in enumerate(f.coeffs, start=1) if n >= 2))


def monomial_member(n: int, a_n: complex) -> bool:
    """Exact criterion: z + a_n z^n is in the cardioid class iff |a_n| <= 1/(2n-1)."""
    if n < 2:
        raise ValueError("monomial index must be >= 2")
    return abs(a_n) <= 1.0 / (2 * n - 1)


# -- plain text serialization: one "re im" pair per line, a1 first -------

def to_text(f: PowerSeries) -> str:
    return "\n".join(f"{c.real!r} {c.imag!r}" for c in f.coeffs) + "\n"


def from_text(text: str) -> PowerSeries:
    coeffs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 're im' pair, got {line!r}")
        coeffs.append(complex(float(parts[0]), float(parts[1])))
    if not coeffs:
        raise ValueError("no coefficients found")
    return PowerSeries(tuple(coeffs))
