"""Generator and extremal registries, partial sums, growth bounds."""

import math

import numpy as np
import pytest

from cardstar import domains, functions
from cardstar.functions import (
    extremal,
    extremal_names,
    generator,
    generator_names,
    growth_envelope,
    monomial_image_disk,
    partial_sum,
    registry_listing,
    sine_integral_series,
    w_of_named,
)
from cardstar.series import PowerSeries, f_cardioid_series


def test_generators_normalized_at_origin():
    for name in generator_names():
        psi = generator(name)
        assert abs(complex(psi(0j)) - 1.0) < 1e-14, name
        if name == "cosh":
            continue  # even map, derivative vanishes at 0; image still valid
        # psi'(0) > 0 by central finite difference
        h = 1e-6
        d = (complex(psi(h + 0j)) - complex(psi(-h + 0j))) / (2 * h)
        assert d.real > 0 and abs(d.imag) < 1e-9, name


def test_extremals_normalized_at_origin():
    for name in extremal_names():
        w = extremal(name).w_of
        assert abs(complex(np.asarray(w(0j)).reshape(())) - 1.0) < 1e-14, name


def test_generator_boundaries_match_region_boundaries():
    t = np.linspace(0, 2 * math.pi, 64, endpoint=False)
    for kind in ("nephroid", "limacon", "lune", "sine", "rational",
                 "rational_lemniscate", "cardioid_wide"):
        d = domains.make_domain(kind)
        curve = generator(kind)(np.exp(1j * t))
        assert np.max(np.abs(curve - np.asarray(d.boundary(t)))) < 1e-9, kind


def test_partial_sum_examples():
    f = f_cardioid_series(8)
    assert partial_sum(f, 2).coeffs == pytest.approx((1.0, 1.0))
    assert partial_sum(f, 1).coeffs == (1.0,)
    assert partial_sum(f, 3).coeffs == pytest.approx((1.0, 1.0, 0.75))
    with pytest.raises(ValueError):
        partial_sum(f, 9)
    with pytest.raises(ValueError):
        partial_sum(f, 0)


def test_w_of_named_values():
    assert w_of_named("cardioid_extremal", -1.0 / 3.0) == pytest.approx(13.0 / 18.0)
    # bounded-turning extremal at its sharp point
    w = w_of_named("bounded_re_extremal", 0.2, beta=2.0)
    assert complex(w) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        w_of_named("no_such_function", 0.1)


def test_monomial_quotient_image_disk():
    w = functions.w_monomial(2, 1.0 / 3.0)
    t = np.linspace(0, 2 * math.pi, 512, endpoint=False)
    vals = np.asarray(w(np.exp(1j * t) * 0.99999))
    d = monomial_image_disk(2, 1.0 / 3.0)
    assert d.center == pytest.approx(7.0 / 8.0)
    assert d.radius == pytest.approx(3.0 / 8.0)
    assert np.max(np.abs(vals - d.center)) < d.radius + 1e-4


def test_monomial_image_disk_values():
    d = monomial_image_disk(3, 0.2)
    assert d.center == pytest.approx(11.0 / 12.0)
    assert d.radius == pytest.approx(5.0 / 12.0)
    d = monomial_image_disk(2, 0.0)
    assert d.center == 1.0 and d.radius == 0.0
    with pytest.raises(ValueError):
        monomial_image_disk(2, 1.0)
    with pytest.raises(ValueError):
        monomial_image_disk(1, 0.5)


def test_monomial_boundary_tangency():
    # at the critical coefficient the image disk is internally tangent to the
    # region boundary at 1/2
    for n in range(2, 9):
        a = 1.0 / (2 * n - 1)
        d = monomial_image_disk(n, a)
        assert abs((d.center - d.radius) - 0.5) < 1e-12


def test_growth_envelope():
    lo, hi = growth_envelope(1.0 - 1e-12)
    assert lo == pytest.approx(math.exp(-0.75), abs=1e-9)
    assert hi == pytest.approx(math.exp(1.25), abs=1e-9)
    lo, hi = growth_envelope(0.5)
    assert lo == pytest.approx(0.5 * math.exp(-7.0 / 16.0))
    lo, hi = growth_envelope(1e-12)
    assert lo == pytest.approx(0.0, abs=1e-11) and hi == pytest.approx(0.0, abs=1e-11)
    for bad in (0.0, 1.0, -0.1):
        with pytest.raises(ValueError):
            growth_envelope(bad)


def test_series_and_closed_form_quotients_agree():
    z = 0.5 * np.exp(1j * np.linspace(0, 2 * math.pi, 64, endpoint=False))
    cases = [
        (f_cardioid_series(32), extremal("cardioid_extremal")),
        (PowerSeries.koebe(64), extremal("koebe")),
        (PowerSeries.half_plane(64), extremal("half_plane")),
        (PowerSeries.koebe(64).hadamard(PowerSeries.koebe(64)), extremal("squared_koebe")),
        (PowerSeries((1.0, 1.0)), extremal("second_sum")),
    ]
    for series_f, spec in cases:
        got = np.asarray(series_f.eval_log_derivative(z))
        want = np.asarray(spec.w_of(z))
        assert np.max(np.abs(got - want)) < 1e-8, spec.name


def test_sine_integral_series_head():
    f = sine_integral_series(6)
    assert f.coeffs[0] == pytest.approx(1.0)
    assert f.coeffs[1] == pytest.approx(1.0)
    assert f.coeffs[2] == pytest.approx(0.5)
    # the displayed fourth coefficient 1/9 agrees with the series construction
    assert f.coeffs[3] == pytest.approx(1.0 / 9.0, abs=1e-14)


def test_ratio_extremal_formulas_from_stated_products():
    # spot-check two registered quotient formulas against log-differentiation
    z = 0.3 * np.exp(1j * np.linspace(0.1, 2 * math.pi, 7))

    def quotient(f, z, h=1e-7):
        return z * (f(z + h) - f(z - h)) / (2 * h) / f(z)

    f1 = lambda zz: zz * (1 + zz) ** 2 / (1 - zz) ** 2
    got = np.asarray(extremal("ratio1_z").w_of(z))
    want = np.array([quotient(f1, complex(v)) for v in z])
    assert np.max(np.abs(got - want)) < 1e-6

    f2 = lambda zz: (1 + zz) ** 2 * (zz + zz * zz / 2) / (1 - zz)
    got = np.asarray(extremal("ratio2_half_square").w_of(z))
    want = np.array([quotient(f2, complex(v)) for v in z])
    assert np.max(np.abs(got - want)) < 1e-6

    f3 = lambda zz: zz * (1 + 1j * zz) ** 2 / ((1 - zz * zz) * (1 - 1j * zz) ** 2)
    got = np.asarray(extremal("ratio1_rotated").w_of(z))
    want = np.array([quotient(f3, complex(v)) for v in z])
    assert np.max(np.abs(got - want)) < 1e-6


def test_registry_listing_contains_all_names():
    text = registry_listing()
    for name in extremal_names():
        assert name in text


def test_unknown_generator_raises():
    with pytest.raises(ValueError):
        generator("spiral")


def test_generator_domain_kind_links():
    from cardstar.functions import generator_domain_kind

    for name in generator_names():
        kind = generator_domain_kind(name)
        assert isinstance(kind, str) and kind
    assert generator_domain_kind("nephroid") == "nephroid"
    assert generator_domain_kind("order") == "min_re"
    with pytest.raises(ValueError):
        generator_domain_kind("spiral")
