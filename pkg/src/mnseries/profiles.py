"""Decay profiles, discrete approximation, and asymptotic separation chains.

A profile is the closed-form element whose Newton polygon tracks a power
law ``c * x^(-r)``.  Its infimum Legendre transform is ``K * s^mu`` with
``mu = r/(r+1)``; normalizing ``K = 1`` forces ``c = r^r / (r+1)^(r+1)``,
which this module computes exactly (as a rational when it is one, as a
validated rational interval otherwise) and cross-checks against a direct
grid-minimization of ``inf_x (c x^(-r) + s x)``.

Materializing a profile yields a genuine truncated series whose digit at
integer index i is ``x^(q_i)`` with ``q_i`` a lattice rational within the
``o(G)`` deviation bound of ``c * i^(-r)``.  Separation of two profiles is
an exact comparison of Legendre exponents; a chain report aggregates all
pairwise separations over a grid of exponents together with ideal
membership of the materialized elements and empirical Legendre ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .domains import CoefficientDomain, PadicDigits, PerfectPoly
from .errors import MNSeriesError
from .polygon import legendre_eval, newton_polygon
from .series import Mode, Series
from .values import as_gauss_param

__all__ = [
    "RationalInterval",
    "PowerLaw",
    "AsymptoticClass",
    "ProfileElement",
    "ApproxCertificate",
    "ChainReport",
    "TargetError",
    "iroot",
    "inverse_legendre_power",
    "legendre_power_law",
    "materialize",
    "deviation_within_bound",
    "discretely_approximate",
    "classify",
    "chain_report",
    "in_m",
    "supremum_example",
]


class TargetError(MNSeriesError):
    """Discrete-approximation targets were increasing or non-convex."""

    def __init__(self, message: str, triple):
        super().__init__(f"{message}: {triple}")
        self.triple = triple


def iroot(n: int, value: int) -> int:
    """Floor of the integer n-th root of a nonnegative integer."""
    if value < 0:
        raise ValueError("iroot of a negative number")
    if value == 0:
        return 0
    x = 1 << ((value.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + value // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


@dataclass(frozen=True, slots=True)
class RationalInterval:
    """Certified enclosure [lo, hi] of an algebraic constant."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError("empty interval")

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _nth_root_interval(q: Fraction, n: int, precision_bits: int = 64) -> RationalInterval:
    """Enclosure of q**(1/n) with absolute width 1 / (den * 2^bits)."""
    scale = 1 << precision_bits
    num, den = q.numerator, q.denominator
    m = iroot(n, num * den ** (n - 1) * scale**n)
    return RationalInterval(Fraction(m, den * scale), Fraction(m + 1, den * scale))


def _numeric_power_legendre(c: float, r: float, s: float) -> float:
    """Grid/ternary minimization of ``c x^-r + s x`` over x > 0."""
    lo, hi = math.log(1e-12), math.log(1e12)
    fn = lambda lx: c * math.exp(-r * lx) + s * math.exp(lx)
    for _ in range(200):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if fn(m1) < fn(m2):
            hi = m2
        else:
            lo = m1
    return fn((lo + hi) / 2)


def _validate_inverse_constant(c: float, r: float, mu: Fraction) -> None:
    """The minimization oracle must reproduce s^mu to 1e-6 relative error."""
    mu_f = float(mu)
    for j in range(1, 21):
        s = j / 20
        expected = s**mu_f
        got = _numeric_power_legendre(c, r, s)
        if abs(got - expected) > 1e-6 * expected:
            raise MNSeriesError(
                f"inverse Legendre constant failed validation at s={s}: "
                f"{got} vs {expected}"
            )


def inverse_legendre_power(mu) -> Tuple[Union[Fraction, RationalInterval], Fraction]:
    """Constants (c, r) with ``inf_x (c x^-r + s x) = s^mu`` for 0 < mu < 1.

    ``r = mu / (1 - mu)`` exactly.  Writing r = a/b in lowest terms,
    ``c^b = a^a b^b / (a+b)^(a+b)``; c is returned as an exact rational
    when that quotient is a perfect b-th power and as a certified interval
    otherwise.  The constant is accepted only after the grid-minimization
    oracle confirms the transform at twenty sample points.
    """
    return _inverse_legendre_power_cached(Fraction(mu))


@lru_cache(maxsize=None)
def _inverse_legendre_power_cached(mu: Fraction) -> Tuple[Union[Fraction, RationalInterval], Fraction]:
    if not 0 < mu < 1:
        raise ValueError(f"exponent must lie in (0, 1), got {mu}")
    r = mu / (1 - mu)
    a, b = r.numerator, r.denominator
    num = a**a * b**b
    den = (a + b) ** (a + b)
    root_num, root_den = iroot(b, num), iroot(b, den)
    c: Union[Fraction, RationalInterval]
    if root_num**b == num and root_den**b == den:
        c = Fraction(root_num, root_den)
        c_float = float(c)
    else:
        c = _nth_root_interval(Fraction(num, den), b)
        c_float = float(c.midpoint)
    _validate_inverse_constant(c_float, float(r), mu)
    return c, r


@dataclass(frozen=True, slots=True)
class PowerLaw:
    """The function ``s -> coeff * s^exponent`` near s -> 0."""

    coeff: Union[Fraction, float]
    exponent: Fraction

    def __post_init__(self):
        if not self.coeff > 0:
            raise ValueError("power-law coefficient must be positive")


@dataclass(frozen=True, slots=True)
class AsymptoticClass:
    """Comparison verdict of two power laws as s -> 0."""

    verdict: str  # 'omega' | 'theta' | 'o'
    in_O_sup: bool
    in_omega_sup: bool

    def __post_init__(self):
        if self.verdict == "omega" and self.in_O_sup:
            raise ValueError("omega excludes O^sup")
        if self.verdict == "o" and not self.in_O_sup:
            raise ValueError("o implies O^sup")
        if self.verdict == "theta" and (not self.in_O_sup or self.in_omega_sup):
            raise ValueError("theta implies O^sup and excludes omega^sup")


def classify(F: PowerLaw, G: PowerLaw) -> AsymptoticClass:
    """Classify F against G for the limit s -> 0 by exact exponent comparison.

    A smaller exponent dominates as s -> 0: F/G = s^(aF - aG) tends to
    infinity when aF < aG (omega), to a finite nonzero constant when the
    exponents agree (theta), and to zero when aF > aG (o).
    """
    if F.exponent < G.exponent:
        return AsymptoticClass("omega", in_O_sup=False, in_omega_sup=True)
    if F.exponent == G.exponent:
        return AsymptoticClass("theta", in_O_sup=True, in_omega_sup=False)
    return AsymptoticClass("o", in_O_sup=True, in_omega_sup=False)


@dataclass(frozen=True, slots=True)
class ProfileElement:
    """Closed-form element whose polygon tracks ``c * i^(-r)`` at integer i.

    The digit rule places ``x^(q_i)`` at index i, with q_i the nearest
    point of the p-power exponent lattice at a scale fine enough that
    ``|q_i - c i^(-r)| <= c i^(-r) / (2^guard_bits * 2 i^2)``; this sits
    far inside the required o(G) deviation ``G(i)/i`` while keeping all
    denominators powers of p.
    """

    domain: CoefficientDomain
    c: Fraction
    r: Fraction
    guard_bits: int = 12

    def __post_init__(self):
        if isinstance(self.domain, PadicDigits):
            raise ValueError("profiles need a polynomial coefficient domain")
        if not self.c > 0:
            raise ValueError("profile constant must be positive")
        if not self.r > 0:
            raise ValueError("profile decay rate must be positive")

    @classmethod
    def for_exponent(cls, mu, domain: CoefficientDomain, guard_bits: int = 12) -> "ProfileElement":
        """Profile normalized so the exact Legendre transform is s^mu."""
        c, r = inverse_legendre_power(mu)
        c_rat = c if isinstance(c, Fraction) else c.midpoint
        return cls(domain, c_rat, r, guard_bits)

    @property
    def mu(self) -> Fraction:
        return self.r / (self.r + 1)

    def digit_exponent(self, i: int) -> Fraction:
        """Lattice exponent q_i approximating ``c * i^(-r)``, all arithmetic exact."""
        if i < 1:
            raise ValueError("digit indices start at 1")
        p = self.domain.p
        a, b = self.r.numerator, self.r.denominator
        u, v = self.c.numerator, self.c.denominator
        # minimal k with p^-k <= tau / (2^guard * i^2), tau = c i^-r:
        #   (v * i^2 * 2^guard)^b * i^a <= u^b * p^(k b)
        lhs = (v * i * i * (1 << self.guard_bits)) ** b * i**a
        rhs = u**b
        step = p**b
        k = 0
        while rhs < lhs:
            rhs *= step
            k += 1
        # nearest integer m to tau * p^k, via (tau p^k)^b = P / Q
        pk = p**k
        P = (u * pk) ** b
        Q = v**b * i**a
        m = iroot(b, P // Q)
        if (2 * m + 1) ** b * Q <= (1 << b) * P:
            m += 1
        return Fraction(m, pk)


def deviation_within_bound(profile: ProfileElement, i: int, q: Fraction) -> bool:
    """Exact check of ``|q - c i^(-r)| <= c i^(-r) / i`` (irrational target).

    Both inequalities are raised to the b-th power so only integer
    comparisons remain.
    """
    a, b = profile.r.numerator, profile.r.denominator
    u, v = profile.c.numerator, profile.c.denominator
    qm, qd = q.numerator, q.denominator
    upper = (qm * v * i) ** b * i**a <= (u * (i + 1) * qd) ** b
    if i == 1:
        return upper and q >= 0
    lower = (u * (i - 1) * qd) ** b <= (qm * v * i) ** b * i**a
    return upper and lower


def materialize(profile: ProfileElement, up_to: int) -> Series:
    """Truncated series ``sum x^(q_i) r^i`` for i = 1..up_to, prec = up_to + 1."""
    if up_to < 1:
        raise ValueError("materialization depth must be at least 1")
    dom = profile.domain
    mode = Mode.FORMAL if isinstance(dom, PerfectPoly) else Mode.ARITHMETIC
    terms = [
        (Fraction(i), dom.x_power(profile.digit_exponent(i)))
        for i in range(1, up_to + 1)
    ]
    return Series.make(dom, mode, terms, prec=Fraction(up_to + 1))


def legendre_power_law(profile: ProfileElement) -> PowerLaw:
    """Power-law class of the profile's Legendre transform as s -> 0.

    The exponent is exactly ``r/(r+1)``.  The coefficient is exactly 1 when
    the profile constant is the exact normalizing rational; otherwise it is
    the (float) Legendre constant of the stored rational approximation,
    indistinguishable from 1 at the certified interval width.
    """
    mu = profile.mu
    c_exact, _ = inverse_legendre_power(mu)
    if isinstance(c_exact, Fraction) and c_exact == profile.c:
        return PowerLaw(Fraction(1), mu)
    rf = float(profile.r)
    cf = float(profile.c)
    k = cf ** (1 / (rf + 1)) * (rf ** (-rf / (rf + 1)) + rf ** (1 / (rf + 1)))
    return PowerLaw(k, mu)


def _default_deviation_rule(i: int, target: Fraction) -> Fraction:
    # o(G) for any power-law target: the 1/i^2 branch wins for slow decay,
    # the G/i branch for fast decay
    return min(target / i, Fraction(1, i * i))


@dataclass(frozen=True, slots=True)
class ApproxCertificate:
    """Achieved deviations of a discrete approximation, node by node."""

    nodes: Tuple[Tuple[int, Fraction, Fraction, int], ...]  # (i, target, q_i, k)
    deviations: Tuple[Fraction, ...]
    bounds: Tuple[Fraction, ...]
    secant_deviations: Tuple[Fraction, ...]

    @property
    def max_deviation(self) -> Fraction:
        return max(self.deviations)

    @property
    def ok(self) -> bool:
        return all(d <= b for d, b in zip(self.deviations, self.bounds))


def discretely_approximate(
    targets: Sequence[Tuple[int, Fraction]],
    domain: CoefficientDomain,
    deviation_rule: Optional[Callable[[int, Fraction], Fraction]] = None,
) -> Tuple[Series, ApproxCertificate]:
    """Realize convex nonincreasing target nodes as a Newton polygon.

    Each node (i, G(i)) receives the nearest lattice exponent q_i of
    minimal denominator p^k satisfying ``|q_i - G(i)| <= rule(i)``.  The
    certificate lists achieved node deviations and secant-slope deviations.
    Increasing or non-convex targets are rejected with the violating
    triple.
    """
    if isinstance(domain, PadicDigits):
        raise ValueError("discrete approximation needs a polynomial coefficient domain")
    rule = deviation_rule or _default_deviation_rule
    nodes = [(int(i), Fraction(g)) for i, g in targets]
    if not nodes:
        raise ValueError("need at least one target node")
    if any(b[0] <= a[0] for a, b in zip(nodes, nodes[1:])):
        raise ValueError("target indices must be strictly increasing")
    for i, g in nodes:
        if g <= 0:
            raise TargetError("target values must be positive", (i, g))
    for a, b in zip(nodes, nodes[1:]):
        if b[1] > a[1]:
            raise TargetError("targets must be nonincreasing", (a, b))
    for a, b, c3 in zip(nodes, nodes[1:], nodes[2:]):
        s1 = (b[1] - a[1]) / (b[0] - a[0])
        s2 = (c3[1] - b[1]) / (c3[0] - b[0])
        if s2 < s1:
            raise TargetError("targets must be convex", (a, b, c3))

    p = domain.p
    chosen: List[Tuple[int, Fraction, Fraction, int]] = []
    deviations: List[Fraction] = []
    bounds: List[Fraction] = []
    for i, g in nodes:
        bound = rule(i, g)
        k = 0
        while True:
            pk = p**k
            m = (g * pk + Fraction(1, 2)) // 1
            q = Fraction(int(m), pk)
            if abs(q - g) <= bound:
                chosen.append((i, g, q, k))
                deviations.append(abs(q - g))
                bounds.append(bound)
                break
            k += 1

    secants: List[Fraction] = []
    for (i1, g1, q1, _), (i2, g2, q2, _) in zip(chosen, chosen[1:]):
        gap = i2 - i1
        secants.append(abs((q2 - q1) / gap - (g2 - g1) / gap))

    mode = Mode.FORMAL if isinstance(domain, PerfectPoly) else Mode.ARITHMETIC
    series = Series.make(
        domain,
        mode,
        [(Fraction(i), domain.x_power(q)) for i, _, q, _ in chosen],
        prec=Fraction(nodes[-1][0] + 1),
    )
    cert = ApproxCertificate(tuple(chosen), tuple(deviations), tuple(bounds), tuple(secants))
    return series, cert


def in_m(f: Series) -> bool:
    """Membership in the ideal of elements all of whose digits have positive valuation."""
    return all(f.domain.coeff_valuation(a) > 0 for _, a in f.terms)


DEFAULT_RATIO_GRID: Tuple[Fraction, ...] = tuple(Fraction(1, 2**k) for k in range(4, 11))


@dataclass(frozen=True, slots=True)
class ChainReport:
    """All pairwise separations over an exponent grid, plus materializations.

    ``pairs`` holds (mu, lam, verdict, separated) for every mu < lam;
    ``membership`` the ideal-membership flag of each materialized element;
    ``ratios`` the empirical Legendre ratio against the normalized power
    law on the sample grid (floats; reporting only).
    """

    mu_grid: Tuple[Fraction, ...]
    depth: int
    pairs: Tuple[Tuple[Fraction, Fraction, str, bool], ...]
    membership: Tuple[Tuple[Fraction, bool], ...]
    ratios: Tuple[Tuple[Fraction, Tuple[Tuple[Fraction, float], ...]], ...]

    @property
    def all_separated(self) -> bool:
        return all(sep for _, _, _, sep in self.pairs)

    @property
    def all_in_ideal(self) -> bool:
        return all(member for _, member in self.membership)


def chain_report(
    mu_grid: Sequence,
    depth: int = 128,
    domain: Optional[CoefficientDomain] = None,
    s_grid: Sequence = DEFAULT_RATIO_GRID,
) -> ChainReport:
    """Separation witnesses for every pair of exponents in a strictly
    increasing grid inside (0, 1).

    For mu < lam the Legendre class of the mu-profile must be omega of
    ``s^lam`` and outside O^sup of it: an exact exponent comparison.  Each
    profile is also materialized at the requested depth to confirm ideal
    membership and to sample the Legendre ratio of the realized polygon.
    """
    grid = [Fraction(m) for m in mu_grid]
    if any(not 0 < m < 1 for m in grid):
        raise ValueError("grid exponents must lie in (0, 1)")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    dom = domain if domain is not None else PerfectPoly(2, "p-power")

    profiles = {m: ProfileElement.for_exponent(m, dom) for m in grid}
    laws = {m: legendre_power_law(profiles[m]) for m in grid}

    pairs = []
    for idx, m in enumerate(grid):
        for lam in grid[idx + 1 :]:
            cls = classify(laws[m], PowerLaw(Fraction(1), lam))
            separated = cls.verdict == "omega" and not cls.in_O_sup
            pairs.append((m, lam, cls.verdict, separated))

    membership = []
    ratios = []
    for m in grid:
        mat = materialize(profiles[m], depth)
        membership.append((m, in_m(mat)))
        poly = newton_polygon(mat)
        c_norm = float(laws[m].coeff)
        rows = []
        for s in s_grid:
            s = as_gauss_param(s)
            value = float(legendre_eval(poly, s))
            rows.append((s, value / (c_norm * float(s) ** float(m))))
        ratios.append((m, tuple(rows)))

    return ChainReport(tuple(grid), depth, tuple(pairs), tuple(membership), tuple(ratios))


def supremum_example(
    s,
    depth: int,
    delta: Optional[Callable[[int], Fraction]] = None,
) -> Tuple[List[Fraction], Fraction]:
    """Term values of an element whose Gauss valuation is a strict infimum.

    The element ``sum_n x^(1 + 1/n) t^(2 - delta_n)`` has term values
    ``(1 + 1/n) + s (2 - delta_n)``, each strictly above the limit
    ``1 + 2 s`` as long as ``delta_n < 1/(n s)``; the running minima
    decrease toward the limit without reaching it.  Returns the term
    values for n = 1..depth together with the exact limit.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    rule = delta or (lambda n: Fraction(1, 2 * n))
    limit = 1 + 2 * s
    values: List[Fraction] = []
    prev_delta = None
    for n in range(1, depth + 1):
        d = Fraction(rule(n))
        if d <= 0:
            raise ValueError(f"delta_{n} = {d} must be positive")
        if prev_delta is not None and d >= prev_delta:
            raise ValueError(f"delta sequence must strictly decrease at n={n}")
        if d >= Fraction(1, n) / s:
            raise ValueError(f"delta_{n} = {d} violates the bound 1/(n*s)")
        prev_delta = d
        values.append((1 + Fraction(1, n)) + s * (2 - d))
    return values, limit
