"""Profiles, inverse Legendre constants, classification, chains, ideals."""

import math
import random
from fractions import Fraction as Q

import pytest

from mnseries import (
    Mode,
    PadicDigits,
    PerfectPoly,
    PowerLaw,
    ProfileElement,
    RationalInterval,
    Series,
    TargetError,
    chain_report,
    classify,
    deviation_within_bound,
    discretely_approximate,
    in_m,
    inverse_legendre_power,
    iroot,
    legendre_power_law,
    lower_hull,
    materialize,
    newton_polygon,
    sup_distance,
    supremum_example,
)

P2 = PerfectPoly(2, "p-power")


def minimize_on_grid(c, r, s, lo=1e-9, hi=1e9, steps=2000, refinements=4):
    """Independent oracle: coarse geometric grid plus local refinement."""
    best_x, best = None, None
    for _ in range(refinements):
        ratio = (hi / lo) ** (1.0 / steps)
        x = lo
        for _ in range(steps + 1):
            v = c * x**-r + s * x
            if best is None or v < best:
                best, best_x = v, x
            x *= ratio
        lo, hi = best_x / ratio**2, best_x * ratio**2
    return best


def test_iroot():
    assert iroot(3, 8) == 2
    assert iroot(3, 7) == 1
    assert iroot(2, 10**12) == 10**6
    assert iroot(5, 0) == 0
    for n, b in ((2, 17), (3, 1000), (7, 2**70 + 5)):
        root = iroot(n, b)
        assert root**n <= b < (root + 1) ** n


def test_inverse_legendre_half():
    c, r = inverse_legendre_power(Q(1, 2))
    assert (c, r) == (Q(1, 4), Q(1))


def test_inverse_legendre_two_thirds():
    c, r = inverse_legendre_power(Q(2, 3))
    assert r == 2
    assert c == Q(4, 27)


def test_half_is_fixed_point_of_rate_inversion():
    _, r = inverse_legendre_power(Q(1, 2))
    assert r == 1 / r  # mu = r/(r+1) at r = 1 gives mu = 1/2


def test_inverse_legendre_interval_case():
    c, r = inverse_legendre_power(Q(1, 8))
    assert r == Q(1, 7)
    assert isinstance(c, RationalInterval)
    assert c.width < Q(1, 2**60)
    # exact enclosure: c^7 = 1^1 * 7^7 / 8^8
    target = Q(7**7, 8**8)
    assert c.lo**7 <= target <= c.hi**7
    rf = 1 / 7
    true = rf**rf / (1 + rf) ** (1 + rf)
    assert abs(float(c.midpoint) - true) < 1e-12


def test_inverse_legendre_domain():
    for bad in (0, 1, Q(3, 2), -1):
        with pytest.raises(ValueError):
            inverse_legendre_power(bad)


def test_grid_minimization_oracle_confirms_constant():
    c, r = inverse_legendre_power(Q(1, 2))
    for j in range(1, 21):
        s = j / 20
        got = minimize_on_grid(float(c), float(r), s)
        assert abs(got - math.sqrt(s)) <= 1e-6 * math.sqrt(s)


def test_profile_digit_rule_spec_values():
    prof = ProfileElement.for_exponent(Q(1, 2), P2)
    assert prof.digit_exponent(1) == Q(1, 4)
    assert prof.digit_exponent(2) == Q(1, 8)
    q3 = prof.digit_exponent(3)
    assert abs(q3 - Q(1, 12)) < Q(1, 12) / 3  # within the o(G) bound of 1/12


def test_profile_deviation_bound_exact():
    rng = random.Random(2)
    for mu in (Q(1, 8), Q(3, 8), Q(1, 2), Q(5, 8), Q(7, 8)):
        prof = ProfileElement.for_exponent(mu, P2)
        for i in rng.sample(range(1, 200), 12):
            assert deviation_within_bound(prof, i, prof.digit_exponent(i))


def test_materialize_structure():
    prof = ProfileElement.for_exponent(Q(1, 2), P2)
    f = materialize(prof, 2)
    assert f.support == (Q(1), Q(2))
    assert f.prec == Q(3)
    assert f.coefficient(1) == P2.x_power(Q(1, 4))
    single = materialize(prof, 1)
    assert single.support == (Q(1),)
    with pytest.raises(ValueError):
        materialize(prof, 0)


def test_materialize_polygon_tracks_profile():
    prof = ProfileElement.for_exponent(Q(1, 2), P2)
    poly = newton_polygon(materialize(prof, 64))
    for x, y in poly.nodes:
        i = int(x)
        assert deviation_within_bound(prof, i, y)


def test_legendre_power_law_exponent():
    prof = ProfileElement.for_exponent(Q(1, 2), P2)
    law = legendre_power_law(prof)
    assert law.exponent == Q(1, 2)
    assert law.coeff == 1
    prof2 = ProfileElement.for_exponent(Q(2, 3), P2)
    assert legendre_power_law(prof2).exponent == Q(2, 3)
    prof3 = ProfileElement.for_exponent(Q(1, 8), P2)
    law3 = legendre_power_law(prof3)
    assert law3.exponent == Q(1, 8)
    assert abs(float(law3.coeff) - 1.0) < 1e-9


def test_classify_verdicts():
    omega = classify(PowerLaw(Q(1), Q(1, 2)), PowerLaw(Q(1), Q(3, 4)))
    assert omega.verdict == "omega" and not omega.in_O_sup and omega.in_omega_sup
    theta = classify(PowerLaw(Q(2), Q(1, 2)), PowerLaw(Q(1), Q(1, 2)))
    assert theta.verdict == "theta" and theta.in_O_sup and not theta.in_omega_sup
    small = classify(PowerLaw(Q(2), Q(1)), PowerLaw(Q(1), Q(1, 2)))
    assert small.verdict == "o" and small.in_O_sup


def test_discrete_approximation_spec_node():
    series, cert = discretely_approximate([(i, Q(1, i)) for i in range(1, 9)], P2)
    by_index = {i: (q, k) for i, _, q, k in cert.nodes}
    assert by_index[3] == (Q(1, 4), 2)
    assert abs(Q(1, 4) - Q(1, 3)) == Q(1, 12) <= Q(1, 9)
    assert cert.ok
    assert cert.max_deviation <= max(Q(1, i * i) for i in range(1, 9))


def test_discrete_approximation_exact_targets():
    targets = [(1, Q(1)), (2, Q(1, 2)), (4, Q(1, 4))]
    series, cert = discretely_approximate(targets, P2)
    assert all(d == 0 for d in cert.deviations)
    assert [q for _, _, q, _ in cert.nodes] == [Q(1), Q(1, 2), Q(1, 4)]


def test_discrete_approximation_hull_stability():
    targets = [(i, Q(1, i)) for i in range(1, 9)]
    series, cert = discretely_approximate(targets, P2)
    hull_target = lower_hull([(Q(i), g) for i, g in targets])
    hull_got = newton_polygon(series)
    assert sup_distance(hull_target, hull_got) <= cert.max_deviation
    for k, sd in enumerate(cert.secant_deviations):
        assert sd <= cert.deviations[k] + cert.deviations[k + 1]


def test_discrete_approximation_rejects_bad_targets():
    with pytest.raises(TargetError):
        discretely_approximate([(1, Q(1)), (2, Q(2))], P2)  # increasing
    with pytest.raises(TargetError):
        discretely_approximate([(1, Q(1)), (2, Q(1, 2)), (3, Q(1, 3)), (4, Q(0))], P2)
    with pytest.raises(TargetError):
        # concave triple: slopes -1/2 then -1
        discretely_approximate([(1, Q(2)), (2, Q(3, 2)), (3, Q(1, 2))], P2)


def test_chain_report_full_grid():
    grid = [Q(1, 4), Q(1, 2), Q(3, 4)]
    report = chain_report(grid, depth=16)
    assert len(report.pairs) == 3
    assert report.all_separated
    assert report.all_in_ideal
    for _, _, verdict, separated in report.pairs:
        assert verdict == "omega" and separated


def test_chain_report_singleton_and_bad_grids():
    assert chain_report([Q(1, 2)], depth=4).pairs == ()
    with pytest.raises(ValueError):
        chain_report([Q(1, 2), Q(1, 2)], depth=4)
    with pytest.raises(ValueError):
        chain_report([Q(0), Q(1, 2)], depth=4)


def test_in_m_examples():
    pi = Series.make(PadicDigits(2), Mode.ARITHMETIC, [(Q(1), 1)])
    assert not in_m(pi)
    f = Series.make(
        P2,
        Mode.FORMAL,
        [(Q(1), P2.x_power(1)), (Q(2), P2.x_power(Q(1, 2)))],
    )
    assert in_m(f)
    g = Series.make(P2, Mode.FORMAL, [(Q(0), P2.x_power(1)), (Q(1), P2.one())])
    assert not in_m(g)


def test_supremum_example_values():
    values, limit = supremum_example(1, 100)
    assert limit == 3
    assert values[0] == Q(7, 2)
    assert all(v > 3 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))
    single, _ = supremum_example(1, 1)
    assert single == [Q(7, 2)]


def test_supremum_example_general_s_limit():
    for s in (Q(1, 4), Q(1, 2), Q(3, 2)):
        values, limit = supremum_example(s, 30)
        assert limit == 1 + 2 * s
        assert all(v > limit for v in values)


def test_supremum_example_delta_constraint():
    with pytest.raises(ValueError):
        supremum_example(2, 5)  # default delta violates delta_n < 1/(n*s)
    values, limit = supremum_example(2, 5, delta=lambda n: Q(1, 4 * n))
    assert limit == 5 and all(v > 5 for v in values)
