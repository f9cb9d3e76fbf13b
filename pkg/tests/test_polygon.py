"""Newton polygons, Legendre transforms, and the commuting diagram."""

import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mnseries import (
    Mode,
    PadicDigits,
    PerfectPoly,
    PLConvexFn,
    Series,
    ZeroSeriesError,
    add,
    gauss_valuation,
    legendre_eval,
    lower_hull,
    mul,
    newton_polygon,
    sup_distance,
    tropical_add,
    tropical_min,
    verify_npf,
)

P3 = PerfectPoly(3)


def hull_by_exhaustion(points, grid_den=8):
    """Independent oracle: the maximal nonincreasing convex minorant, evaluated
    pointwise as the min over all chords and single points dominating x."""
    pts = sorted(points)

    def value(x):
        best = None
        for i, (x1, y1) in enumerate(pts):
            if x1 <= x:
                cand = min(y for xx, y in pts if xx <= x)  # nonincreasing cap
                best = cand if best is None else min(best, cand)
            for x2, y2 in pts[i + 1 :]:
                if x1 <= x <= x2 and x1 != x2:
                    chord = y1 + (y2 - y1) * (x - x1) / (x2 - x1)
                    # chords of envelope points bound the convex minorant
                    lo1 = min(y for xx, y in pts if xx <= x1)
                    lo2 = min(y for xx, y in pts if xx <= x2)
                    chord = lo1 + (lo2 - lo1) * (x - x1) / (x2 - x1)
                    best = chord if best is None else min(best, chord)
        return best

    return value


def test_hull_collinear_middle_point():
    pts = [(Q(0), Q(2)), (Q(1), Q(1)), (Q(2), Q(0))]
    assert lower_hull(pts).nodes == ((Q(0), Q(2)), (Q(2), Q(0)))


def test_hull_increasing_values_flatten():
    pts = [(Q(0), Q(1)), (Q(1), Q(2))]
    F = lower_hull(pts)
    assert F.nodes == ((Q(0), Q(1)),)
    assert F.value_at(Q(5)) == 1


def test_hull_matches_exhaustive_oracle():
    rng = random.Random(21)
    for _ in range(60):
        pts = sorted(
            {
                (Q(rng.randrange(0, 9)), Q(rng.randrange(0, 9), rng.choice([1, 2])))
                for _ in range(rng.randrange(2, 6))
            }
        )
        xs = {x for x, _ in pts}
        if len(xs) != len(pts):
            pts = [(x, min(y for xx, y in pts if xx == x)) for x in sorted(xs)]
        F = lower_hull(pts)
        oracle = hull_by_exhaustion(pts)
        for x, _ in pts:
            assert F.value_at(x) == oracle(x)


def test_polygon_single_term():
    f = Series.make(P3, Mode.FORMAL, [(Q(1), P3.x_power(1))])
    assert newton_polygon(f).nodes == ((Q(1), Q(1)),)


def test_polygon_of_spec_quadratic():
    f = Series.make(
        P3,
        Mode.FORMAL,
        [(Q(0), P3.x_power(2)), (Q(1), P3.x_power(1)), (Q(2), P3.one())],
    )
    assert newton_polygon(f).nodes == ((Q(0), Q(2)), (Q(2), Q(0)))


def test_polygon_zero_series_raises():
    with pytest.raises(ZeroSeriesError):
        newton_polygon(Series.make(P3, Mode.FORMAL, []))


def test_plconvexfn_validation():
    with pytest.raises(ValueError):
        PLConvexFn(((Q(0), Q(0)), (Q(1), Q(1))))  # increasing
    with pytest.raises(ValueError):
        PLConvexFn(((Q(0), Q(3)), (Q(1), Q(2)), (Q(2), Q(0))))  # concave corner
    PLConvexFn(((Q(0), Q(3)), (Q(1), Q(1)), (Q(2), Q(1, 2))))


def test_legendre_single_node():
    F = PLConvexFn(((Q(1), Q(2)),))
    assert legendre_eval(F, Q(3, 2)) == Q(7, 2)  # 2 + s


def test_legendre_node_minimum():
    F = PLConvexFn(((Q(0), Q(2)), (Q(2), Q(0))))
    for s in (Q(1, 2), Q(1), Q(2), Q(5)):
        assert legendre_eval(F, s) == min(Q(2), 2 * s)


def test_legendre_constant():
    F = PLConvexFn(((Q(0), Q(5, 2)),))
    assert legendre_eval(F, Q(9)) == Q(5, 2)


def test_tropical_combinators():
    L1 = lambda s: 2 + s
    L2 = lambda s: 2 * s
    assert tropical_min(L1, L2)(Q(1)) == 2
    assert tropical_add(L1, L2)(Q(1)) == 5
    assert tropical_min(L1, L1)(Q(7)) == L1(Q(7))


def test_sup_distance():
    F = PLConvexFn(((Q(0), Q(2)), (Q(2), Q(0))))
    G = PLConvexFn(((Q(0), Q(5, 2)), (Q(2), Q(1, 2))))
    assert sup_distance(F, G) == Q(1, 2)
    with pytest.raises(ValueError):
        sup_distance(F, PLConvexFn(((Q(1), Q(1)),)))


def test_commutation_on_random_series():
    rng = random.Random(13)
    doms = [(PerfectPoly(p, "p-power"), Mode.FORMAL) for p in (2, 3, 5)]
    doms += [(PadicDigits(p), Mode.ARITHMETIC) for p in (2, 3)]
    for _ in range(150):
        dom, mode = rng.choice(doms)
        terms = []
        for _ in range(rng.randrange(1, 5)):
            e = Q(rng.randrange(0, 9), rng.choice([1, 2, 3]))
            if mode is Mode.FORMAL:
                a = dom.x_power(Q(rng.randrange(0, 9), dom.p), rng.randrange(1, dom.p))
            else:
                a = rng.randrange(1, dom.p ** 2)
            terms.append((e, a))
        f = Series.make(dom, mode, terms)
        if f.is_zero:
            continue
        poly = newton_polygon(f)
        for s in (Q(1, 3), Q(1, 2), Q(1), Q(2), Q(7, 2)):
            assert legendre_eval(poly, s) == gauss_valuation(f, s)[0]


def test_verify_npf_passes_on_spec_pair():
    f = Series.make(P3, Mode.FORMAL, [(Q(0), P3.x_power(1)), (Q(1), P3.one())])
    g = Series.make(P3, Mode.FORMAL, [(Q(0), P3.x_power(1)), (Q(1), P3.from_int(2))])
    report = verify_npf(f, g, [Q(1, 2), Q(1), Q(2)])
    assert report.ok and not report.witnesses


def test_verify_npf_units_trivial():
    one = Series.make(P3, Mode.FORMAL, [(Q(0), P3.one())])
    report = verify_npf(one, one, [Q(1, 2), Q(1), Q(2)])
    assert report.ok
    assert gauss_valuation(mul(one, one)[0], Q(1))[0] == 0


def test_verify_npf_cancellation_case():
    f = Series.make(P3, Mode.FORMAL, [(Q(0), P3.x_power(1)), (Q(1), P3.one())])
    g = Series.make(P3, Mode.FORMAL, [(Q(0), P3.x_power(1, 2)), (Q(1), P3.from_int(2))])
    assert add(f, g).is_zero
    report = verify_npf(f, g, [Q(1, 2), Q(1), Q(2)])
    assert report.superadditive and report.ok


# --- hypothesis: hull is a maximal nonincreasing convex minorant -----------

_pt = st.tuples(
    st.fractions(min_value=0, max_value=10, max_denominator=3),
    st.fractions(min_value=0, max_value=10, max_denominator=3),
)


@given(st.lists(_pt, min_size=1, max_size=7))
@settings(max_examples=200, deadline=None)
def test_hull_below_points_convex_nonincreasing(raw_pts):
    dedup = {}
    for x, y in raw_pts:
        dedup[x] = min(y, dedup.get(x, y))
    pts = sorted(dedup.items())
    F = lower_hull(pts)
    for x, y in pts:
        assert F.value_at(x) <= y
    nodes = F.nodes
    assert all(b[1] <= a[1] for a, b in zip(nodes, nodes[1:]))
    # every node is pinned to the running-minimum envelope of the points
    for x, y in nodes:
        env = min(py for px, py in pts if px <= x)
        assert y <= env


@given(
    st.lists(_pt, min_size=1, max_size=6),
    st.fractions(min_value=0, max_value=2, max_denominator=4),
)
@settings(max_examples=150, deadline=None)
def test_hull_translation_equivariance(raw_pts, dy):
    dedup = {}
    for x, y in raw_pts:
        dedup[x] = min(y, dedup.get(x, y))
    pts = sorted(dedup.items())
    F = lower_hull(pts)
    G = lower_hull([(x, y + dy) for x, y in pts])
    assert G.nodes == tuple((x, y + dy) for x, y in F.nodes)
