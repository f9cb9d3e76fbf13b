"""Coefficient domains: valuations, digit predicates, reductions."""

import random
from fractions import Fraction as Q

import pytest

from mnseries import INF, DomainError, MixedPoly, PadicDigits, PerfectPoly, ordp


def test_ordp():
    assert ordp(12, 2) == 2
    assert ordp(12, 3) == 1
    assert ordp(7, 5) == 0
    with pytest.raises(ValueError):
        ordp(0, 2)


def test_perfect_coeff_valuation_is_min_exponent():
    dom = PerfectPoly(3)
    a = dom.poly([(Q(3, 2), 1), (Q(2), 2)])
    assert dom.coeff_valuation(a) == Q(3, 2)


def test_zero_coefficient_has_infinite_valuation():
    for dom in (PerfectPoly(3), MixedPoly(2, 4), PadicDigits(5)):
        assert dom.coeff_valuation(dom.zero()) == INF


def test_mixed_valuation_reduces_mod_p_first():
    dom = MixedPoly(2, 4)
    a = dom.poly([(Q(1, 2), 2), (Q(1), 1)])
    assert dom.coeff_valuation(a) == 1


def test_padic_base_valuation():
    dom = PadicDigits(2)
    assert dom.base_valuation_at(12, Q(1, 2)) == 1  # 12 = 2^2 * 3
    assert PadicDigits(5).base_valuation_at(3, Q(7, 3)) == 0
    assert dom.base_valuation_at(0, Q(1)) == INF


def test_mixed_base_valuation_minimum():
    dom = MixedPoly(2)
    a = dom.poly([(Q(1, 2), 2), (Q(1), 1)])
    assert dom.base_valuation_at(a, 3) == min(3 + Q(1, 2), Q(1))


def test_canonical_digit_predicate():
    pd = PadicDigits(2)
    assert not pd.is_canonical_digit(6)
    assert pd.is_canonical_digit(3)
    m3 = MixedPoly(3)
    assert m3.is_canonical_digit(m3.poly([(Q(1), 1), (Q(0), 3)]))
    assert not m3.is_canonical_digit(m3.poly([(Q(1), 3)]))


def test_reduce_mod_p():
    dom = MixedPoly(2)
    a = dom.poly([(Q(1, 2), 2), (Q(1), 1)])
    assert dom.reduce_mod_p(a) == dom.residue_domain.x_power(1)
    pd = PadicDigits(3)
    assert pd.reduce_mod_p(7) == pd.residue_domain.from_int(1)


def test_exponent_lattice_policy():
    strict = PerfectPoly(3, "p-power")
    strict.x_power(Q(1, 9))  # 1/3^2 is fine
    with pytest.raises(DomainError):
        strict.x_power(Q(1, 2))
    loose = PerfectPoly(3, "any")
    loose.x_power(Q(1, 2))


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        PerfectPoly(2).x_power(Q(-1, 2))


def test_digit_range_validation():
    pd = PadicDigits(2, 3)
    with pytest.raises(DomainError):
        pd.validate(8)  # = p^N
    with pytest.raises(DomainError):
        pd.validate(-1)
    with pytest.raises(DomainError):
        pd.validate("7")


def test_perfect_valuation_is_multiplicative():
    rng = random.Random(11)
    dom = PerfectPoly(5, "p-power")
    for _ in range(200):
        a = dom.poly([(Q(rng.randrange(0, 20), 5), rng.randrange(1, 5)) for _ in range(2)])
        b = dom.poly([(Q(rng.randrange(0, 20), 5), rng.randrange(1, 5)) for _ in range(2)])
        assert dom.coeff_valuation(dom.mul(a, b)) == dom.coeff_valuation(a) + dom.coeff_valuation(b)


def test_reduced_digit_valuation_constant_in_s():
    dom = MixedPoly(3, 8)
    digit = dom.poly([(Q(1, 3), 2), (Q(2), 1)])
    assert dom.is_reduced_digit(digit)
    values = {dom.base_valuation_at(digit, Q(k, 7)) for k in range(1, 11)}
    assert values == {dom.coeff_valuation(digit)}


def test_padic_shift_by_p():
    dom = PadicDigits(3)
    s = Q(2, 3)
    for a in (1, 2, 5, 12):
        assert dom.base_valuation_at(3 * a, s) == s + dom.base_valuation_at(a, s)


def test_reduction_is_ring_homomorphism():
    rng = random.Random(7)
    dom = MixedPoly(3, 6)
    res = dom.residue_domain
    for _ in range(100):
        a = dom.poly([(Q(rng.randrange(0, 9), 3), rng.randrange(1, 9)) for _ in range(2)])
        b = dom.poly([(Q(rng.randrange(0, 9), 3), rng.randrange(1, 9)) for _ in range(2)])
        assert dom.reduce_mod_p(dom.add(a, b)) == res.add(dom.reduce_mod_p(a), dom.reduce_mod_p(b))
        assert dom.reduce_mod_p(dom.mul(a, b)) == res.mul(dom.reduce_mod_p(a), dom.reduce_mod_p(b))
