"""Seeded property suites covering every library invariant.

Each suite draws reproducible random instances from a ``random.Random``
seeded with ``f"{seed}:{suite}"`` and checks one invariant family with
exact arithmetic; a failing case is reported as a replayable witness
string.  Suites are deterministic: the same seed and case count always
produce byte-identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from .domains import MixedPoly, PadicDigits, PerfectPoly
from .grammar import format_series, parse_series
from .polygon import (
    legendre_eval,
    lower_hull,
    newton_polygon,
    sup_distance,
    verify_npf,
)
from .profiles import (
    ProfileElement,
    PowerLaw,
    chain_report,
    classify,
    deviation_within_bound,
    discretely_approximate,
    in_m,
    inverse_legendre_power,
    legendre_power_law,
    supremum_example,
)
from .series import (
    Mode,
    Series,
    add,
    argnorm,
    bar_witness,
    box_witness,
    canonicalize,
    gauss_valuation,
    localize,
    mul,
    term_values,
)
from .values import format_value

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all", "format_report", "suite_names"]

_S_POOL = [
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(3),
]


@dataclass(frozen=True, slots=True)
class SuiteResult:
    name: str
    cases: int
    failures: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# generators


def _sample_s(rng: random.Random, n: int = 5) -> List[Fraction]:
    return rng.sample(_S_POOL, n)


def _rand_exponent(rng: random.Random, p: int, lattice: bool, max_num: int = 10) -> Fraction:
    den = p ** rng.randrange(0, 3) if lattice else rng.choice([1, 2, 3, 4])
    return Fraction(rng.randrange(0, max_num * den + 1), den)


def _rand_perfect_coeff(rng: random.Random, dom: PerfectPoly):
    lattice = dom.denominators == "p-power"
    monos = [
        (_rand_exponent(rng, dom.p, lattice, 4), rng.randrange(1, dom.p))
        for _ in range(rng.randrange(1, 4))
    ]
    return dom.poly(monos)


def _rand_mixed_coeff(rng: random.Random, dom: MixedPoly, reduced: bool = False):
    lattice = dom.denominators == "p-power"
    hi = dom.p if reduced else dom.p**2
    while True:
        monos = [
            (_rand_exponent(rng, dom.p, lattice, 4), rng.randrange(1, hi))
            for _ in range(rng.randrange(1, 4))
        ]
        out = dom.poly(monos)
        # colliding exponents can merge into a multiple of p
        if not reduced or dom.is_reduced_digit(out):
            return out


def _rand_coeff(rng: random.Random, dom, reduced: bool = False):
    if isinstance(dom, PerfectPoly):
        return _rand_perfect_coeff(rng, dom)
    if isinstance(dom, MixedPoly):
        return _rand_mixed_coeff(rng, dom, reduced)
    hi = dom.p if reduced else dom.p**3
    return rng.randrange(1, hi)


def _rand_series(
    rng: random.Random,
    dom,
    mode: Mode,
    max_terms: int = 5,
    nonzero: bool = False,
    integer_exponents: bool = False,
) -> Series:
    while True:
        n = rng.randrange(0, max_terms + 1)
        terms = []
        for _ in range(n):
            e = (
                Fraction(rng.randrange(0, 7))
                if integer_exponents
                else _rand_exponent(rng, dom.p, False, 6)
            )
            terms.append((e, _rand_coeff(rng, dom)))
        f = Series.make(dom, mode, terms)
        if not (nonzero and f.is_zero):
            return f


def _formal_dom(rng: random.Random) -> PerfectPoly:
    return PerfectPoly(rng.choice([2, 3, 5]), "p-power")


def _padic_dom(rng: random.Random) -> PadicDigits:
    return PadicDigits(rng.choice([2, 3, 5]), 32)


def _mixed_dom(rng: random.Random) -> MixedPoly:
    return MixedPoly(rng.choice([2, 3, 5]), 32, "p-power")


def _setups(rng: random.Random):
    return [
        (_formal_dom(rng), Mode.FORMAL),
        (_padic_dom(rng), Mode.ARITHMETIC),
        (_mixed_dom(rng), Mode.ARITHMETIC),
    ]


def _witness(case: int, **parts) -> str:
    body = " ".join(f"{k}={v}" for k, v in parts.items())
    return f"case={case} {body}"


# ---------------------------------------------------------------------------
# suites

SUITES: Dict[str, Callable[[random.Random, int], List[str]]] = {}


def _suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


@_suite("base-valuations")
def _suite_base_valuations(rng: random.Random, cases: int) -> List[str]:
    """Base-valuation laws of the three coefficient domains."""
    failures = []
    for case in range(cases):
        p = rng.choice([2, 3, 5])
        perf = PerfectPoly(p, "p-power")
        a, b = _rand_perfect_coeff(rng, perf), _rand_perfect_coeff(rng, perf)
        if perf.coeff_valuation(perf.mul(a, b)) != perf.coeff_valuation(a) + perf.coeff_valuation(b):
            failures.append(_witness(case, law="perfect-multiplicative", a=a, b=b))
        padic = PadicDigits(p, 32)
        digit = rng.randrange(1, p)
        svals = [Fraction(k, 3) for k in range(1, 12)]
        if any(padic.base_valuation_at(digit, s) != padic.coeff_valuation(digit) for s in svals):
            failures.append(_witness(case, law="digit-constant-padic", digit=digit))
        mixed = MixedPoly(p, 32, "p-power")
        md = _rand_mixed_coeff(rng, mixed, reduced=True)
        if any(mixed.base_valuation_at(md, s) != mixed.coeff_valuation(md) for s in svals):
            failures.append(_witness(case, law="digit-constant-mixed", digit=md))
        raw = rng.randrange(1, p**3)
        s = rng.choice(_S_POOL)
        if padic.base_valuation_at(p * raw, s) != s + padic.base_valuation_at(raw, s):
            failures.append(_witness(case, law="padic-shift", a=raw, s=s))
        ma, mb = _rand_mixed_coeff(rng, mixed), _rand_mixed_coeff(rng, mixed)
        res = mixed.residue_domain
        hom_add = mixed.reduce_mod_p(mixed.add(ma, mb)) == res.add(
            mixed.reduce_mod_p(ma), mixed.reduce_mod_p(mb)
        )
        hom_mul = mixed.reduce_mod_p(mixed.mul(ma, mb)) == res.mul(
            mixed.reduce_mod_p(ma), mixed.reduce_mod_p(mb)
        )
        if not (hom_add and hom_mul):
            failures.append(_witness(case, law="reduction-homomorphism", a=ma, b=mb))
    return failures


def _check_multiplicative(rng, case, dom, mode, failures):
    f = _rand_series(rng, dom, mode)
    g = _rand_series(rng, dom, mode)
    fg, _ = mul(f, g)
    for s in _sample_s(rng):
        vf, ef = gauss_valuation(f, s)
        vg, eg = gauss_valuation(g, s)
        vfg, _ = gauss_valuation(fg, s)
        if ef and eg and vfg != vf + vg:
            failures.append(
                _witness(
                    case,
                    f=format_series(f),
                    g=format_series(g),
                    s=s,
                    got=format_value(vfg),
                    expected=format_value(vf + vg),
                )
            )


@_suite("multiplicativity")
def _suite_multiplicativity(rng: random.Random, cases: int) -> List[str]:
    """Gauss valuations are multiplicative (formal and carried modes)."""
    failures: List[str] = []
    for case in range(cases):
        _check_multiplicative(rng, case, _formal_dom(rng), Mode.FORMAL, failures)
        _check_multiplicative(rng, case, _padic_dom(rng), Mode.ARITHMETIC, failures)
    return failures


@_suite("triangle")
def _suite_triangle(rng: random.Random, cases: int) -> List[str]:
    """Strong triangle inequality, with equality at distinct valuations."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode)
            g = _rand_series(rng, dom, mode)
            h = add(f, g)
            for s in _sample_s(rng, 3):
                vf, _ = gauss_valuation(f, s)
                vg, _ = gauss_valuation(g, s)
                vh, _ = gauss_valuation(h, s)
                lower = min(vf, vg)
                if not vh >= lower:
                    failures.append(
                        _witness(case, f=format_series(f), g=format_series(g), s=s, kind="bound")
                    )
                elif vf != vg and vh != lower:
                    failures.append(
                        _witness(case, f=format_series(f), g=format_series(g), s=s, kind="equality")
                    )
    return failures


@_suite("submultiplicativity")
def _suite_submultiplicativity(rng: random.Random, cases: int) -> List[str]:
    """v(fg) >= v(f) + v(g), asserted even where equality is not."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode)
            g = _rand_series(rng, dom, mode)
            fg, _ = mul(f, g)
            for s in _sample_s(rng, 3):
                vf, ef = gauss_valuation(f, s)
                vg, eg = gauss_valuation(g, s)
                vfg, _ = gauss_valuation(fg, s)
                if ef and eg and not vfg >= vf + vg:
                    failures.append(
                        _witness(case, dom=dom.kind, f=format_series(f), g=format_series(g), s=s)
                    )
    return failures


@_suite("support")
def _suite_support(rng: random.Random, cases: int) -> List[str]:
    """Product support sits in the sumset (shifted by N in carried mode)."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode, max_terms=4)
            g = _rand_series(rng, dom, mode, max_terms=4)
            fg, trace = mul(f, g)
            sums = {i + j for i in f.support for j in g.support}
            for k in fg.support:
                if mode is Mode.FORMAL:
                    ok = k in sums
                else:
                    ok = any(k >= s0 and (k - s0).denominator == 1 for s0 in sums)
                if not ok:
                    failures.append(
                        _witness(case, k=k, f=format_series(f), g=format_series(g))
                    )
                if mode is Mode.ARITHMETIC and fg.support and not trace.contributors_to(k):
                    failures.append(_witness(case, k=k, kind="no-contributors"))
            if fg.support:
                top = fg.support[-1]
                if len(trace.pairs_up_to(top)) > len(f.support) * len(g.support):
                    failures.append(_witness(case, kind="trace-overcount"))
    return failures


@_suite("canonicalization")
def _suite_canonicalization(rng: random.Random, cases: int) -> List[str]:
    """Canonical form is idempotent and matches integer base-p arithmetic."""
    failures = []
    for case in range(cases):
        dom = _padic_dom(rng)
        p = dom.p
        f = _rand_series(rng, dom, Mode.ARITHMETIC)
        if canonicalize(f) != f:
            failures.append(_witness(case, kind="idempotence", f=format_series(f)))
        a = _rand_series(rng, dom, Mode.ARITHMETIC, integer_exponents=True)
        b = _rand_series(rng, dom, Mode.ARITHMETIC, integer_exponents=True)
        prod, _ = mul(a, b)
        int_a = sum(c * p ** int(e) for e, c in a.terms)
        int_b = sum(c * p ** int(e) for e, c in b.terms)
        expected = []
        n, idx = int_a * int_b, 0
        while n:
            n, d = divmod(n, p)
            if d:
                expected.append((Fraction(idx), d))
            idx += 1
        if prod.terms != tuple(expected):
            failures.append(
                _witness(case, kind="integer-oracle", a=format_series(a), b=format_series(b))
            )
    return failures


@_suite("concavity")
def _suite_concavity(rng: random.Random, cases: int) -> List[str]:
    """s -> v_s(f) is concave (a finite min of affine functions of s)."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode, nonzero=True)
            s1, s2, s3 = sorted(rng.sample(_S_POOL, 3))
            v1, _ = gauss_valuation(f, s1)
            v2, _ = gauss_valuation(f, s2)
            v3, _ = gauss_valuation(f, s3)
            chord = (v1 * (s3 - s2) + v3 * (s2 - s1)) / (s3 - s1)
            if not v2 >= chord:
                failures.append(_witness(case, f=format_series(f), s=(s1, s2, s3)))
    return failures


@_suite("localization")
def _suite_localization(rng: random.Random, cases: int) -> List[str]:
    """The localized prediction equals the product valuation."""
    failures = []
    for case in range(cases):
        dom, mode = rng.choice(_setups(rng))
        f = _rand_series(rng, dom, mode, nonzero=True)
        g = _rand_series(rng, dom, mode, nonzero=True)
        s = rng.choice(_S_POOL)
        (f_loc, g_loc), prediction = localize(f, g, s)
        fg, _ = mul(f, g)
        actual, _ = gauss_valuation(fg, s)
        if prediction != actual:
            failures.append(
                _witness(case, f=format_series(f), g=format_series(g), s=s,
                         predicted=format_value(prediction), got=format_value(actual))
            )
        if f_loc.is_zero or g_loc.is_zero:
            failures.append(_witness(case, kind="empty-localization", s=s))
    return failures


@_suite("witnesses")
def _suite_witnesses(rng: random.Random, cases: int) -> List[str]:
    """Box and bar witnesses certify genuinely empty windows."""
    failures = []
    for case in range(cases):
        dom, mode = rng.choice(_setups(rng))
        f = _rand_series(rng, dom, mode, nonzero=True)
        s = rng.choice(_S_POOL)
        a_star = argnorm(f, s)
        v0, _ = gauss_valuation(f, s)
        eps_a, delta_a = box_witness(f, s)
        for i, v in term_values(f, s):
            if a_star < i < a_star + eps_a and v <= v0 + delta_a:
                failures.append(_witness(case, kind="box", f=format_series(f), s=s, i=i))
        eps = rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(1)])
        delta_b = bar_witness(f, s, eps)
        if not delta_b > 0:
            failures.append(_witness(case, kind="bar-positivity", f=format_series(f), s=s))
        for i, v in term_values(f, s):
            if i < a_star - eps and v <= v0 + delta_b:
                failures.append(_witness(case, kind="bar", f=format_series(f), s=s, i=i))
    return failures


@_suite("commutation")
def _suite_commutation(rng: random.Random, cases: int) -> List[str]:
    """Legendre transform of the polygon reproduces the Gauss valuation."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode, nonzero=True)
            poly = newton_polygon(f)
            for s in _sample_s(rng):
                lhs = legendre_eval(poly, s)
                rhs, _ = gauss_valuation(f, s)
                if lhs != rhs:
                    failures.append(
                        _witness(case, f=format_series(f), s=s,
                                 legendre=format_value(lhs), gauss=format_value(rhs))
                    )
    return failures


def _rand_polygon_points(rng: random.Random, n: int = 5):
    xs = sorted(rng.sample(range(0, 12), n))
    return [(Fraction(x), Fraction(rng.randrange(0, 12), rng.choice([1, 2, 3]))) for x in xs]


@_suite("hull-stability")
def _suite_hull_stability(rng: random.Random, cases: int) -> List[str]:
    """Perturbing node values by <= eps moves the hull by <= eps."""
    failures = []
    for case in range(cases):
        pts = _rand_polygon_points(rng)
        eps = Fraction(rng.randrange(0, 5), 4)
        perturbed = []
        for x, y in pts:
            shift = Fraction(rng.randrange(-4, 5), 4) * eps / 4
            perturbed.append((x, max(Fraction(0), y + shift)))
        delta = max(abs(y1 - y2) for (_, y1), (_, y2) in zip(pts, perturbed))
        d = sup_distance(lower_hull(pts), lower_hull(perturbed))
        if d > delta:
            failures.append(_witness(case, pts=pts, perturbed=perturbed, d=d, eps=delta))
    return failures


@_suite("legendre-monotonicity")
def _suite_legendre_monotonicity(rng: random.Random, cases: int) -> List[str]:
    """Pointwise-dominated polygons have dominated Legendre transforms."""
    failures = []
    for case in range(cases):
        pts = _rand_polygon_points(rng)
        raised = [(x, y + Fraction(rng.randrange(0, 5), 2)) for x, y in pts]
        F, G = lower_hull(pts), lower_hull(raised)
        for s in _sample_s(rng, 3):
            if not legendre_eval(F, s) <= legendre_eval(G, s):
                failures.append(_witness(case, pts=pts, raised=raised, s=s))
    return failures


@_suite("legendre-translate")
def _suite_legendre_translate(rng: random.Random, cases: int) -> List[str]:
    """Translating a polygon by (dx, dy) shifts its transform by dy + s*dx."""
    failures = []
    for case in range(cases):
        F = lower_hull(_rand_polygon_points(rng))
        dx = Fraction(rng.randrange(0, 9), 2)
        dy = Fraction(rng.randrange(0, 9), 2)
        G = F.translate(dx, dy)
        for s in _sample_s(rng, 3):
            if legendre_eval(G, s) != legendre_eval(F, s) + dy + s * dx:
                failures.append(_witness(case, dx=dx, dy=dy, s=s))
    return failures


@_suite("minkowski")
def _suite_minkowski(rng: random.Random, cases: int) -> List[str]:
    """Legendre side of the product polygon is the sum of the factors'."""
    failures = []
    for case in range(cases):
        dom = _formal_dom(rng)
        f = _rand_series(rng, dom, Mode.FORMAL, nonzero=True)
        g = _rand_series(rng, dom, Mode.FORMAL, nonzero=True)
        fg, _ = mul(f, g)
        if fg.is_zero:
            continue
        Ff, Fg, Fp = newton_polygon(f), newton_polygon(g), newton_polygon(fg)
        for s in _sample_s(rng, 3):
            if legendre_eval(Fp, s) != legendre_eval(Ff, s) + legendre_eval(Fg, s):
                failures.append(_witness(case, f=format_series(f), g=format_series(g), s=s))
    return failures


@_suite("npf-diagram")
def _suite_npf_diagram(rng: random.Random, cases: int) -> List[str]:
    """Full diagram report passes on random pairs."""
    failures = []
    for case in range(cases):
        dom, mode = rng.choice([(_formal_dom(rng), Mode.FORMAL), (_padic_dom(rng), Mode.ARITHMETIC)])
        f = _rand_series(rng, dom, mode)
        g = _rand_series(rng, dom, mode)
        report = verify_npf(f, g, _sample_s(rng, 3))
        if not report.ok:
            failures.append(
                _witness(case, f=format_series(f), g=format_series(g),
                         witnesses=report.witnesses)
            )
    return failures


@_suite("profile-roundtrip")
def _suite_profile_roundtrip(rng: random.Random, cases: int) -> List[str]:
    """mu -> (c, r) -> mu round-trips exactly."""
    failures = []
    for case in range(max(1, cases // 10)):
        den = rng.randrange(2, 9)
        num = rng.randrange(1, den)
        mu = Fraction(num, den)
        c, r = inverse_legendre_power(mu)
        if r != mu / (1 - mu) or r / (r + 1) != mu:
            failures.append(_witness(case, mu=mu, r=r))
            continue
        profile = ProfileElement.for_exponent(mu, PerfectPoly(2, "p-power"))
        if legendre_power_law(profile).exponent != mu:
            failures.append(_witness(case, mu=mu, kind="law-exponent"))
    return failures


@_suite("deviation")
def _suite_deviation(rng: random.Random, cases: int) -> List[str]:
    """Profile digits and discrete approximations respect their bounds."""
    failures = []
    for case in range(max(1, cases // 10)):
        den = rng.randrange(2, 9)
        mu = Fraction(rng.randrange(1, den), den)
        p = rng.choice([2, 3, 5])
        profile = ProfileElement.for_exponent(mu, PerfectPoly(p, "p-power"))
        for i in rng.sample(range(1, 41), 6):
            q = profile.digit_exponent(i)
            if not deviation_within_bound(profile, i, q):
                failures.append(_witness(case, mu=mu, i=i, q=q))
        c0 = Fraction(rng.randrange(1, 8), rng.randrange(1, 5))
        targets = [(i, c0 / i) for i in range(1, 9)]
        dom = PerfectPoly(p, "p-power")
        series, cert = discretely_approximate(targets, dom)
        if not cert.ok:
            failures.append(_witness(case, kind="certificate", c0=c0, p=p))
        hull_t = lower_hull([(Fraction(i), g) for i, g in targets])
        hull_q = newton_polygon(series)
        if sup_distance(hull_t, hull_q) > cert.max_deviation:
            failures.append(_witness(case, kind="hull-stability", c0=c0, p=p))
        for k, sd in enumerate(cert.secant_deviations):
            if sd > cert.deviations[k] + cert.deviations[k + 1]:
                failures.append(_witness(case, kind="secant", c0=c0, p=p, k=k))
    return failures


@_suite("classifier")
def _suite_classifier(rng: random.Random, cases: int) -> List[str]:
    """Verdicts compose like the order on exponents."""
    failures = []
    compose = {("omega", "omega"): "omega", ("o", "o"): "o",
               ("theta", "omega"): "omega", ("omega", "theta"): "omega",
               ("theta", "o"): "o", ("o", "theta"): "o",
               ("theta", "theta"): "theta"}
    for case in range(cases):
        laws = [
            PowerLaw(Fraction(1), Fraction(rng.randrange(0, 13), rng.choice([1, 2, 4])))
            for _ in range(3)
        ]
        fg = classify(laws[0], laws[1]).verdict
        gh = classify(laws[1], laws[2]).verdict
        fh = classify(laws[0], laws[2]).verdict
        expected = compose.get((fg, gh))
        if expected is not None and fh != expected:
            failures.append(_witness(case, exps=[str(l.exponent) for l in laws],
                                     fg=fg, gh=gh, fh=fh))
    return failures


@_suite("chain")
def _suite_chain(rng: random.Random, cases: int) -> List[str]:
    """Strictly increasing grids separate completely; the ideal holds."""
    failures = []
    for case in range(max(1, cases // 40)):
        den = rng.choice([8, 12, 16])
        nums = sorted(rng.sample(range(1, den), rng.randrange(2, 5)))
        grid = [Fraction(n, den) for n in nums]
        report = chain_report(grid, depth=32)
        if not report.all_separated:
            failures.append(_witness(case, grid=grid, kind="separation"))
        if not report.all_in_ideal:
            failures.append(_witness(case, grid=grid, kind="ideal-membership"))
        if len(report.pairs) != len(grid) * (len(grid) - 1) // 2:
            failures.append(_witness(case, grid=grid, kind="pair-count"))
    singleton = chain_report([Fraction(1, 2)], depth=4)
    if singleton.pairs:
        failures.append(_witness(-1, kind="singleton-grid"))
    return failures


@_suite("ideal")
def _suite_ideal(rng: random.Random, cases: int) -> List[str]:
    """Positive-valuation digits are closed under sum and product."""
    failures = []
    for case in range(cases):
        arithmetic = case % 3 == 2
        if arithmetic:
            dom, mode = _mixed_dom(rng), Mode.ARITHMETIC
        else:
            dom, mode = _formal_dom(rng), Mode.FORMAL

        def positive_series():
            terms = []
            for _ in range(rng.randrange(1, 5)):
                e = _rand_exponent(rng, dom.p, False, 5)
                v = _rand_exponent(rng, dom.p, True, 4) + Fraction(1, dom.p)
                terms.append((e, dom.x_power(v, rng.randrange(1, dom.p))))
            return Series.make(dom, mode, terms)

        f, g = positive_series(), positive_series()
        h = _rand_series(rng, dom, mode)
        if not (in_m(f) and in_m(g)):
            failures.append(_witness(case, kind="generator"))
            continue
        if not in_m(add(f, g)):
            failures.append(_witness(case, kind="sum", f=format_series(f), g=format_series(g)))
        prod, _ = mul(f, h)
        if not in_m(prod):
            failures.append(_witness(case, kind="product", f=format_series(f), h=format_series(h)))
    unit = Series.make(PadicDigits(2, 32), Mode.ARITHMETIC, [(Fraction(1), 1)])
    if in_m(unit):
        failures.append(_witness(-1, kind="unit-digit"))
    return failures


@_suite("supremum")
def _suite_supremum(rng: random.Random, cases: int) -> List[str]:
    """Strict-infimum example: values decrease strictly toward the limit."""
    failures = []
    for case in range(max(1, cases // 5)):
        s = rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)])
        depth = rng.randrange(5, 60)
        values, limit = supremum_example(s, depth)
        if limit != 1 + 2 * s:
            failures.append(_witness(case, s=s, kind="limit"))
        if any(v <= limit for v in values):
            failures.append(_witness(case, s=s, kind="above-limit"))
        if any(b >= a for a, b in zip(values, values[1:])):
            failures.append(_witness(case, s=s, kind="strict-decrease"))
    return failures


@_suite("roundtrip")
def _suite_roundtrip(rng: random.Random, cases: int) -> List[str]:
    """print -> parse reproduces the series exactly."""
    failures = []
    for case in range(cases):
        for dom, mode in _setups(rng):
            f = _rand_series(rng, dom, mode)
            if rng.random() < 0.3:
                f = f.with_prec(Fraction(rng.randrange(4, 12)))
            text = format_series(f)
            g = parse_series(text, dom, mode)
            if g != f:
                failures.append(_witness(case, text=text, reparsed=format_series(g)))
    return failures


# ---------------------------------------------------------------------------
# runner


def suite_names() -> List[str]:
    return list(SUITES)


def run_suite(name: str, cases: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    rng = random.Random(f"{seed}:{name}")
    failures = SUITES[name](rng, cases)
    return SuiteResult(name, cases, tuple(failures))


def run_all(cases: int, seed: int) -> List[SuiteResult]:
    return [run_suite(name, cases, seed) for name in SUITES]


def format_report(results: Sequence[SuiteResult]) -> str:
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(f"suite={r.name} cases={r.cases} failures={len(r.failures)} status={status}")
        for w in r.failures[:5]:
            lines.append(f"  witness: {w}")
        if len(r.failures) > 5:
            lines.append(f"  ... {len(r.failures) - 5} more")
    total_fail = sum(len(r.failures) for r in results)
    overall = "pass" if total_fail == 0 else "FAIL"
    lines.append(f"total suites={len(results)} failures={total_fail} status={overall}")
    return "\n".join(lines) + "\n"
