"""Region kinds: construction, membership, boundaries, containment tests."""

import math

import numpy as np
import pytest

from cardstar import domains, radii
from cardstar.domains import (
    CardioidDomain,
    Disk,
    GeneratorImageRegion,
    disk_in_domain,
    domain_in_domain,
    make_domain,
)

ALL_KINDS = [
    ("cardioid", ()),
    ("disk", (1.0, 0.0, 0.4)),
    ("bounded_re", (2.5,)),
    ("min_re", (0.25,)),
    ("sector", (0.75,)),
    ("conic", (5.0 / 3.0,)),
    ("exponential", (0.2,)),
    ("lemniscate", (0.3,)),
    ("cassinian", (0.75,)),
    ("sigmoid", ()),
    ("cosh", ()),
    ("rational", ()),
    ("rational_lemniscate", ()),
    ("cardioid_wide", ()),
    ("limacon", ()),
    ("lune", ()),
    ("sine", ()),
    ("nephroid", ()),
    ("booth", (0.4,)),
]


def test_make_domain_all_kinds():
    for kind, params in ALL_KINDS:
        d = make_domain(kind, *params)
        assert d.contains(1.0 + 0j) or d.margin(1.0 + 0j) > 0


def test_make_domain_rejects_bad_parameters():
    cases = [
        ("disk", (0.0, 0.0, -1.0)),
        ("bounded_re", (0.9,)),
        ("min_re", (1.2,)),
        ("sector", (0.0,)),
        ("conic", (-0.1,)),
        ("exponential", (1.0,)),
        ("lemniscate", (-0.2,)),
        ("cassinian", (1.5,)),
        ("booth", (1.0,)),
        ("janowski_disk", (0.5, 1.0, 0.5)),      # needs B < A
        ("janowski_disk", (1.0, -1.0, 1.0)),     # degenerate at r = 1, |B| = 1
        ("nonexistent", ()),
    ]
    for kind, params in cases:
        with pytest.raises(ValueError):
            make_domain(kind, *params)


def test_conic_ellipse_parameters():
    d = domains.ConicRegion(5.0 / 3.0)
    lam, a, b = d.ellipse_parameters
    assert lam == pytest.approx(25.0 / 16.0)
    assert a == pytest.approx(15.0 / 16.0)
    assert b == pytest.approx(0.75)


def test_sector_is_half_plane_at_order_one():
    d = domains.Sector(1.0)
    assert d.contains(0.2 - 5.0j)
    assert not d.contains(-0.1 + 0.5j)


def test_membership_examples():
    assert domains.ExponentialRegion(0.0).contains(1.0 + 0j)
    beta0 = radii.beta_zero()
    edge = 0.25 * (1.0 + 1j * math.tan(beta0 * math.pi / 2.0))
    assert not domains.Sector(beta0).contains(edge)
    assert not domains.HalfPlaneReBelow(2.5).contains(2.5 + 0j)


def test_boundary_membership_consistency():
    # boundary points are never interior by more than curve resolution, and
    # points nudged toward the common interior point 1 are members
    t = np.linspace(0.0, 2.0 * math.pi, 256, endpoint=False)
    for kind, params in ALL_KINDS:
        d = make_domain(kind, *params)
        pts = np.asarray(d.boundary(t))
        sag = d._polygon.sag if isinstance(d, GeneratorImageRegion) else 0.0
        margins = np.asarray(d.margin(pts))
        assert margins.max() < 2.0 * sag + 1e-9, kind
        direction = 1.0 - pts
        direction = direction / np.abs(direction)
        nudged = pts + 1e-6 * direction
        nudged_margin = np.asarray(d.margin(nudged))
        assert nudged_margin.min() > -2.0 * sag - 1e-12, kind


def test_boundary_point_examples():
    assert complex(CardioidDomain().boundary(math.pi)) == pytest.approx(0.5)
    assert complex(make_domain("cardioid_wide").boundary(0.0)) == pytest.approx(3.0)
    assert complex(Disk(1.0, 0.5).boundary(0.0)) == pytest.approx(1.5)


def test_disk_in_domain_sharp_at_inscribed_radius():
    card = CardioidDomain()
    assert disk_in_domain(Disk(1.0, 0.49), card)
    assert not disk_in_domain(Disk(1.0, 0.51), card)
    with pytest.raises(ValueError):
        disk_in_domain(Disk(1.0, 0.1), card, n=32)


def test_domain_in_domain_thresholds():
    card = CardioidDomain()
    assert domain_in_domain(domains.ConicRegion(5.0 / 3.0), card)
    assert not domain_in_domain(domains.ConicRegion(1.6), card)
    a0 = radii.alpha_zero()
    assert domain_in_domain(domains.ExponentialRegion(a0 + 1e-6), card)
    assert not domain_in_domain(domains.ExponentialRegion(0.19), card)
    assert domain_in_domain(domains.LemniscateRegion(0.5), card)
    assert not domain_in_domain(domains.LemniscateRegion(0.49), card)
    assert domain_in_domain(domains.CassinianRegion(0.75), card)
    assert not domain_in_domain(domains.CassinianRegion(0.76), card)
    m0 = radii.m_fixed_point()
    assert domain_in_domain(card, Disk(m0, m0))
    assert not domain_in_domain(card, Disk(m0 - 0.01, m0 - 0.01))
    for kind in ("sigmoid", "cosh", "rational"):
        assert domain_in_domain(make_domain(kind), card)
    with pytest.raises(ValueError):
        domain_in_domain(card, card, n=128)


def test_monotone_families_shrink():
    card = CardioidDomain()
    for lo, hi in ((0.25, 0.21), (0.4, 0.3), (0.6, 0.45), (0.8, 0.7), (0.95, 0.9)):
        assert domain_in_domain(domains.ExponentialRegion(lo),
                                domains.ExponentialRegion(hi), tol=1e-9)
        assert domain_in_domain(domains.LemniscateRegion(lo),
                                domains.LemniscateRegion(hi), tol=1e-9)
    for hi_k, lo_k in ((2.0, 5.0 / 3.0), (3.0, 2.0), (5.0, 3.0), (8.0, 5.0), (12.0, 8.0)):
        assert domain_in_domain(domains.ConicRegion(hi_k), domains.ConicRegion(lo_k),
                                tol=1e-9)
    del card


def test_corollary_disk_thresholds_at_limit_radius():
    card = CardioidDomain()
    assert disk_in_domain(domains.janowski_disk(0.5, 0.0, 1.0), card)       # radius 1/2
    assert not disk_in_domain(domains.janowski_disk(0.52, 0.0, 1.0), card)
    a = 1.0 / 3.0
    assert disk_in_domain(domains.janowski_disk(a, -a, 1.0), card)
    a = 1.0 / 3.0 + 0.01
    assert not disk_in_domain(domains.janowski_disk(a, -a, 1.0), card)


def test_winding_region_polar_fast_path_matches_full_test():
    # the fast path may disagree with the strict test only inside the
    # conservative slack band along the boundary
    rng = np.random.default_rng(5)
    for kind, params in (("nephroid", ()), ("rational_lemniscate", ()),
                         ("lune", ()), ("booth", (0.7,))):
        d = make_domain(kind, *params)
        pts = rng.uniform(0.0, 2.2, 400) + 1j * rng.uniform(-1.5, 1.5, 400)
        fast = np.array([d.contains_all(np.array([w])) for w in pts])
        slow = d._polygon.inside(pts) & (d._polygon.distance(pts) > d._polygon.sag)
        band = 8.0 * d._polygon.sag + 1e-9
        for i in np.nonzero(fast != slow)[0]:
            assert d._polygon.distance(pts[i:i + 1])[0] <= band, (kind, pts[i])


def test_winding_region_margin_sign():
    d = make_domain("sine")
    assert d.margin(1.0 + 0j) > 0
    assert d.margin(3.0 + 0j) < 0
    assert d.contains(1.0 + 0j)
    assert not d.contains(3.0 + 0j)


def test_generator_region_boundary_gap_refinement():
    d = make_domain("nephroid")
    # 5/3 is the right cusp of the boundary curve
    assert d.boundary_gap(5.0 / 3.0 + 0j) < 1e-9
    assert d.boundary_gap(1.0 + 0j) > 0.5


def test_cassinian_and_lemniscate_right_lobe_selector():
    c = domains.CassinianRegion(1.0)
    assert c.contains(1.0 + 0j)
    assert not c.contains(-1.0 + 0j)     # left loop excluded
    g = domains.LemniscateRegion(0.0)
    assert g.contains(1.0 + 0j)
    assert not g.contains(-1.0 + 0j)


def test_degenerate_disk_allowed_as_value():
    # monomial image disks may degenerate to a point at zero coefficient
    d = Disk(1.0, 0.0)
    assert not d.contains(1.0 + 0j)
    with pytest.raises(ValueError):
        Disk(1.0, -0.1)


def test_sample_boundary_shape():
    t, pts = domains.sample_boundary(CardioidDomain(), 64)
    assert len(t) == len(pts) == 64
