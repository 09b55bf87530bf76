import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ratesplit import PRESETS, mi_bundle_gaussian
from ratesplit.geometry import (Envelope, RateRegion, contains_region,
                                max_rp, polygon_from_constraints, support,
                                union_envelope, upper_hull)
from ratesplit.regions import corners_decode, region_decode, region_no_decode

from strategies import PRESET_POWER, bundles

rate = st.floats(min_value=0.0, max_value=10.0, allow_nan=False)
coef = st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
constraint_sets = st.lists(st.tuples(coef, rate), min_size=1, max_size=5,
                           unique_by=lambda t: t[0]).map(
    lambda ts: [(n[0], n[1], c) for n, c in ts])


def square(side):
    return RateRegion.from_constraints([(1, 0, side), (0, 1, side)])


def _same_points(a, b, tol=1e-9):
    return (len(a) == len(b)
            and all(any(np.allclose(p, q, atol=tol) for q in b) for p in a))


def test_rectangle():
    v = polygon_from_constraints([(1, 0, 1), (0, 1, 1)])
    assert v == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def test_clipped_square():
    v = polygon_from_constraints([(1, 0, 2), (0, 1, 2), (1, 1, 3)])
    assert _same_points(v, [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])


def test_slack_and_collinear_constraints_dropped():
    # sum constraint exactly through the corner adds no vertex
    v = polygon_from_constraints([(1, 0, 1), (0, 1, 1), (1, 1, 2)])
    assert len(v) == 4
    v = polygon_from_constraints([(1, 0, 1), (0, 1, 1), (1, 0, 1)])
    assert len(v) == 4


def test_degenerate_polygons():
    assert polygon_from_constraints([(1, 0, 0), (0, 1, 0)]) == [(0.0, 0.0)]
    assert polygon_from_constraints([(1, 0, 2), (0, 1, 0)]) == \
        [(0.0, 0.0), (2.0, 0.0)]
    assert polygon_from_constraints([(1, 0, 1), (0, 1, -1)]) == []


@pytest.mark.parametrize('bad', [[(0, 0, 1)], [(-1, 0, 1)], [(1, 0)],
                                 [(1, 0, float('nan'))]])
def test_malformed_constraints(bad):
    with pytest.raises(ValueError):
        polygon_from_constraints(bad)


def test_unbounded_direction_rejected():
    with pytest.raises(ValueError):
        polygon_from_constraints([(1, 0, 1)])


def test_support_basics():
    assert support(square(1), (1, 1)) == 2.0
    mi = mi_bundle_gaussian(PRESETS['split-o'], PRESET_POWER, 0.3)
    r = region_no_decode(mi)
    assert support(r, (0, 1)) == pytest.approx(r.bound(0, 1), abs=1e-12)
    assert support(r, (1, 0)) == pytest.approx(r.bound(1, 0), abs=1e-12)
    empty = RateRegion.from_constraints([(1, 0, -1), (0, 1, 1)])
    with pytest.raises(ValueError):
        support(empty, (1, 1))


def test_containment_examples():
    assert contains_region(square(1), square(1))
    assert contains_region(square(1), square(2))
    assert not contains_region(square(2), square(1))


def test_user_decodability_inclusion_for_one_user_only():
    gains = PRESETS['pdcg-user1']
    for lam in (0.0, 0.3, 0.7, 1.0):
        o = region_no_decode(mi_bundle_gaussian(gains, PRESET_POWER, lam, 1))
        r1 = region_decode(mi_bundle_gaussian(gains, PRESET_POWER, lam, 1))
        r2 = region_decode(mi_bundle_gaussian(gains, PRESET_POWER, lam, 2))
        assert contains_region(o, r1)
        assert not contains_region(o, r2)


def test_decode_polygon_matches_corners():
    rng = np.random.default_rng(8)
    for _ in range(200):
        g = PRESETS['split-r1']
        mi = mi_bundle_gaussian(g, PRESET_POWER, float(rng.uniform()),
                                int(rng.integers(1, 3)))
        verts = region_decode(mi).vertices
        corners = list(corners_decode(mi).values()) + [(0.0, 0.0)]
        for v in verts:
            assert any(np.allclose(v, c, atol=1e-7) for c in corners)


@settings(max_examples=200, deadline=None)
@given(bundles())
def test_decode_polygon_vertices_are_corners(mi):
    verts = region_decode(mi).vertices
    corners = list(corners_decode(mi).values()) + [(0.0, 0.0)]
    for v in verts:
        assert any(np.allclose(v, c, atol=1e-7) for c in corners)


@settings(max_examples=300, deadline=None)
@given(constraint_sets)
def test_polygon_properties(cons):
    has = {(a, b) for a, b, _ in cons}
    assume(any(a > 0 for a, b in has) and any(b > 0 for a, b in has))
    region = RateRegion.from_constraints(cons)
    v = region.vertices
    assert v[0] == (0.0, 0.0)
    for p in v:
        assert region.contains_point(*p)
    # ccw, no duplicate or collinear vertices
    for k in range(len(v)):
        p, q, r = v[k - 1], v[k], v[(k + 1) % len(v)]
        if len(v) >= 3:
            cross = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])
            assert cross > 0
        assert not np.allclose(p, q, atol=1e-9) or len(v) == 1


@settings(max_examples=200, deadline=None)
@given(constraint_sets)
def test_binding_constraint_grows_area(cons):
    has = {(a, b) for a, b, _ in cons}
    assume(any(a > 0 for a, b in has) and any(b > 0 for a, b in has))
    region = RateRegion.from_constraints(cons)
    assume(region.area() > 1e-3)
    for k, (a, b, c) in enumerate(region.constraints):
        on_edge = [p for p in region.vertices
                   if abs(a * p[0] + b * p[1] - c) <= 1e-9]
        if len(on_edge) < 2:
            continue
        bumped = list(region.constraints)
        bumped[k] = (a, b, c + 1e-6)
        assert RateRegion.from_constraints(bumped).area() > region.area()


@settings(max_examples=200, deadline=None)
@given(constraint_sets, st.tuples(rate, rate), st.tuples(rate, rate))
def test_support_sublinear(cons, d1, d2):
    has = {(a, b) for a, b, _ in cons}
    assume(any(a > 0 for a, b in has) and any(b > 0 for a, b in has))
    region = RateRegion.from_constraints(cons)
    d12 = (d1[0] + d2[0], d1[1] + d2[1])
    assert support(region, d12) <= (support(region, d1)
                                    + support(region, d2) + 1e-9)


def test_envelope_examples():
    grid = np.linspace(0, 2, 5)
    env = union_envelope([square(1)], grid)
    assert env.rp_max.tolist() == [1, 1, 1, 0, 0]
    env = union_envelope([square(1), square(2)], grid)
    assert np.array_equal(env.rp_max, max_rp(square(2), grid))
    with pytest.raises(ValueError):
        union_envelope([], grid)
    with pytest.raises(ValueError):
        Envelope(np.array([0.0, 0.0]), np.array([1.0, 1.0]))


def test_envelope_of_crossing_regions():
    gains = PRESETS['split-o']
    regions = [region_no_decode(mi_bundle_gaussian(gains, PRESET_POWER, lam))
               for lam in (0.0, 0.1, 1.0)]
    top = max(v[0] for r in regions for v in r.vertices)
    grid = np.linspace(0, top, 512)
    env = union_envelope(regions, grid)
    for r in regions:
        single = max_rp(r, grid)
        assert np.all(env.rp_max >= single)
        assert np.any(env.rp_max > single + 1e-6)


@settings(max_examples=100, deadline=None)
@given(st.lists(constraint_sets, min_size=2, max_size=4))
def test_envelope_monotone_and_nonincreasing(sets):
    regions = []
    for cons in sets:
        cons = cons + [(1, 0, 5.0), (0, 1, 5.0)]
        regions.append(RateRegion.from_constraints(cons))
    grid = np.linspace(0, 6, 64)
    small = union_envelope(regions[:-1], grid)
    big = union_envelope(regions, grid)
    assert big.dominates(small, tol=0.0)
    assert np.all(np.diff(big.rp_max) <= 1e-12)


def test_upper_hull():
    x = np.array([0.0, 1.0, 2.0, 3.0])
    y = np.array([2.0, 0.5, 1.5, 0.0])
    h = upper_hull(x, y)
    assert h.tolist() == [2.0, 1.75, 1.5, 0.0]
    assert np.all(h >= y)
