"""Truncated Mal'cev-Neumann series arithmetic and the Gauss-valuation toolkit.

A :class:`Series` is a finite-support element ``sum a_i r^i`` with exact
rational exponents, where the variable ``r`` is a formal ``t`` (Formal mode,
plain convolution arithmetic) or the prime ``p`` itself (Arithmetic mode,
where sums and products are followed by p-adic carrying across
integer-shifted exponents).  The precision frontier ``prec`` means the
element is only known modulo ``O(r^prec)``.

Arithmetic-mode series are kept in canonical digit form: every stored
coefficient is a reduced digit of the base-p expansion, which makes the
representation unique.  :func:`canonicalize` converts a raw series into
this form by evaluating each coset ``gamma + Z`` of the support exactly
and re-expanding base p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .domains import CoefficientDomain, MixedPoly, PadicDigits, PerfectPoly
from .errors import ModeMismatchError, PrecisionLossError, ZeroSeriesError
from .values import INF, Infinity, Value, as_exponent, as_gauss_param

__all__ = [
    "Mode",
    "Series",
    "CarryTrace",
    "add",
    "mul",
    "canonicalize",
    "gauss_valuation",
    "argnorm",
    "restrict",
    "box_witness",
    "bar_witness",
    "localize",
]


class Mode(enum.Enum):
    FORMAL = "formal"
    ARITHMETIC = "arithmetic"


@dataclass(frozen=True, slots=True)
class CarryTrace:
    """Provenance of a product: which factor index pairs fed each output index.

    Each entry ``(i, j, k)`` records that the coefficient pair at exponents
    ``i`` of the left factor and ``j`` of the right factor contributes
    (possibly through carrying) to the output index ``k``.  In Formal mode
    ``k = i + j`` always; in Arithmetic mode ``k`` ranges over the output
    support positions of the coset of ``i + j`` at or above ``i + j``.
    """

    entries: Tuple[Tuple[Fraction, Fraction, Fraction], ...]

    def contributors_to(self, k: Fraction) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return tuple((i, j) for i, j, kk in self.entries if kk == k)

    def pairs_up_to(self, k: Fraction) -> Tuple[Tuple[Fraction, Fraction], ...]:
        seen = sorted({(i, j) for i, j, kk in self.entries if kk <= k})
        return tuple(seen)


@dataclass(frozen=True, slots=True)
class Series:
    """Finite-support truncated series over a coefficient domain."""

    domain: CoefficientDomain
    mode: Mode
    terms: Tuple[Tuple[Fraction, object], ...]
    prec: Value  # exponent frontier; INF for an untruncated element

    @classmethod
    def make(
        cls,
        domain: CoefficientDomain,
        mode: Mode,
        terms: Iterable[Tuple[object, object]] = (),
        prec: Value = INF,
        raw: bool = False,
    ) -> "Series":
        """Build a series, merging duplicate exponents and dropping zeros.

        Terms at or beyond ``prec`` are absorbed by the frontier.  In
        Arithmetic mode the result is canonicalized unless ``raw`` is set
        (raw construction is what :func:`canonicalize` itself consumes).
        """
        if mode is Mode.ARITHMETIC and isinstance(domain, PerfectPoly):
            raise ModeMismatchError(
                "arithmetic (p-adic) mode needs a mixed-characteristic domain; "
                "PerfectPoly has characteristic p"
            )
        if not isinstance(prec, Infinity):
            prec = as_exponent(prec)
        acc: dict = {}
        for e, a in terms:
            e = as_exponent(Fraction(e))
            if e >= prec:
                continue
            a = domain.coerce(a)
            if e in acc:
                acc[e] = domain.add(acc[e], a)
            else:
                acc[e] = a
        clean = tuple(sorted((e, a) for e, a in acc.items() if not domain.is_zero(a)))
        out = cls(domain, mode, clean, prec)
        if mode is Mode.ARITHMETIC and not raw:
            out = canonicalize(out)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> Tuple[Fraction, ...]:
        return tuple(e for e, _ in self.terms)

    def order_bound(self) -> Value:
        """Smallest support exponent, or the frontier for a zero truncation."""
        if self.terms:
            return self.terms[0][0]
        return self.prec

    def coefficient(self, e) -> object:
        e = Fraction(e)
        for exp, a in self.terms:
            if exp == e:
                return a
        return self.domain.zero()

    def with_prec(self, prec: Value) -> "Series":
        return Series.make(self.domain, self.mode, self.terms, prec, raw=True)

    def __repr__(self) -> str:  # avoid importing the grammar module here
        parts = " + ".join(f"[{a!r}]r^{e}" for e, a in self.terms) or "0"
        tail = "" if isinstance(self.prec, Infinity) else f" + O(r^{self.prec})"
        return f"<Series {self.mode.value}/{self.domain.kind}: {parts}{tail}>"


def _check_compatible(f: Series, g: Series) -> None:
    if f.domain != g.domain:
        raise ModeMismatchError(f"domain mismatch: {f.domain} vs {g.domain}")
    if f.mode is not g.mode:
        raise ModeMismatchError(f"mode mismatch: {f.mode.value} vs {g.mode.value}")


def add(f: Series, g: Series) -> Series:
    """Coefficient-wise sum; re-canonicalized (carried) in Arithmetic mode."""
    _check_compatible(f, g)
    prec = min(f.prec, g.prec)
    return Series.make(f.domain, f.mode, list(f.terms) + list(g.terms), prec)


def mul(f: Series, g: Series) -> Tuple[Series, CarryTrace]:
    """Convolution product with carry provenance.

    The output precision is ``min(prec_f + ord(g), prec_g + ord(f))`` where
    ``ord`` falls back to the frontier on a zero truncation.
    """
    _check_compatible(f, g)
    prec = min(f.prec + g.order_bound(), g.prec + f.order_bound())
    dom = f.domain
    conv: dict = {}
    pairs: List[Tuple[Fraction, Fraction]] = []
    for i, a in f.terms:
        for j, b in g.terms:
            k = i + j
            if k >= prec:
                continue
            pairs.append((i, j))
            c = dom.mul(a, b)
            conv[k] = dom.add(conv[k], c) if k in conv else c
    raw = Series.make(dom, f.mode, conv.items(), prec, raw=True)
    if f.mode is Mode.FORMAL:
        entries = tuple((i, j, i + j) for i, j in pairs)
        return raw, CarryTrace(entries)
    result = canonicalize(raw)
    out_support = result.support
    entries_list = []
    for i, j in pairs:
        lo = i + j
        for k in out_support:
            if k >= lo and (k - lo).denominator == 1:
                entries_list.append((i, j, k))
    return result, CarryTrace(tuple(entries_list))


def _base_p_digits(n: int, p: int) -> List[int]:
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def canonicalize(f: Series) -> Series:
    """Rewrite an Arithmetic-mode series in canonical digit form.

    The support is grouped by coset ``gamma + Z`` with ``gamma`` in [0, 1);
    each coset sum ``sum_n a_(gamma+n) p^n`` is evaluated exactly and
    re-expanded base p, so every surviving digit is a reduced digit and the
    representation is unique.  A digit that would land at offset >= N
    within its coset (but below the precision frontier) cannot be
    represented modulo p^N and raises :class:`PrecisionLossError`.
    """
    if f.mode is not Mode.ARITHMETIC:
        raise ModeMismatchError("canonicalize applies to arithmetic-mode series")
    dom = f.domain
    p = dom.p
    cosets: dict = {}
    for e, a in f.terms:
        n = int(e // 1)
        gamma = e - n
        cosets.setdefault(gamma, []).append((n, a))
    out_terms: List[Tuple[Fraction, object]] = []
    for gamma, group in cosets.items():
        if isinstance(dom, PadicDigits):
            total = sum(a * p**n for n, a in group)
            for offset, d in enumerate(_base_p_digits(total, p)):
                if d == 0:
                    continue
                k = gamma + offset
                if k >= f.prec:
                    continue
                if offset >= dom.N:
                    raise PrecisionLossError(
                        f"carry reached p^{offset} at index {k}, beyond the p^{dom.N} modulus"
                    )
                out_terms.append((k, d))
        elif isinstance(dom, MixedPoly):
            acc: dict = {}
            for n, a in group:
                for xe, c in a.monomials:
                    acc[xe] = acc.get(xe, 0) + c * p**n
            digit_polys: dict = {}
            for xe, total in acc.items():
                for offset, d in enumerate(_base_p_digits(total, p)):
                    if d:
                        digit_polys.setdefault(offset, []).append((xe, d))
            for offset, monos in digit_polys.items():
                k = gamma + offset
                if k >= f.prec:
                    continue
                if offset >= dom.N:
                    raise PrecisionLossError(
                        f"carry reached p^{offset} at index {k}, beyond the p^{dom.N} modulus"
                    )
                out_terms.append((k, dom.poly(monos)))
        else:  # pragma: no cover - construction forbids it
            raise ModeMismatchError("arithmetic mode over a characteristic-p domain")
    return Series.make(dom, Mode.ARITHMETIC, out_terms, f.prec, raw=True)


def term_values(f: Series, s) -> List[Tuple[Fraction, Value]]:
    """Per-term valuations ``base_valuation(a_i, s) + s*i`` in support order."""
    s = as_gauss_param(s)
    return [(i, f.domain.base_valuation_at(a, s) + s * i) for i, a in f.terms]


def gauss_valuation(f: Series, s) -> Tuple[Value, bool]:
    """Gauss valuation ``min_i (v_s(a_i) + s*i)`` and an exactness flag.

    The flag is False when terms hidden behind the precision frontier could
    undercut the computed minimum, i.e. unless ``prec`` is infinite or
    ``s * prec`` already dominates the result.
    """
    s = as_gauss_param(s)
    best: Value = INF
    for _, v in term_values(f, s):
        if v < best:
            best = v
    if isinstance(f.prec, Infinity):
        return best, True
    if isinstance(best, Infinity):
        return best, False
    return best, s * f.prec >= best


def argnorm(f: Series, s) -> Fraction:
    """Smallest support index attaining the Gauss valuation."""
    if f.is_zero:
        raise ZeroSeriesError("argnorm of the zero series is undefined")
    values = term_values(f, s)
    best = min(v for _, v in values)
    for i, v in values:
        if v == best:
            return i
    raise AssertionError("unreachable")  # pragma: no cover


def restrict(f: Series, lo, hi, threshold: Value, s) -> Series:
    """Sub-series with index in [lo, hi) whose term value is <= threshold."""
    lo = Fraction(lo)
    kept = []
    for (i, a), (_, v) in zip(f.terms, term_values(f, s)):
        if lo <= i and i < hi and v <= threshold:
            kept.append((i, a))
    return Series.make(f.domain, f.mode, kept, f.prec, raw=True)


def _window_is_clear(f: Series, s, lo_open: Fraction, hi_open: Value, bound: Value) -> bool:
    """No term with index strictly inside (lo_open, hi_open) has value <= bound."""
    for i, v in term_values(f, s):
        if lo_open < i and i < hi_open and v <= bound:
            return False
    return True


def box_witness(f: Series, s) -> Tuple[Fraction, Fraction]:
    """Witness (eps_a, delta_a) for the empty box above the argnorm.

    ``eps_a`` is the gap from the argnorm to the next larger support index
    (1 when there is none); ``delta_a`` is half the gap from the Gauss
    valuation to the next-smallest distinct term value (1 when unique).
    The certified window is re-scanned before returning.
    """
    if f.is_zero:
        raise ZeroSeriesError("box witness of the zero series is undefined")
    a_star = argnorm(f, s)
    above = [i for i in f.support if i > a_star]
    eps_a = (above[0] - a_star) if above else Fraction(1)
    values = sorted({v for _, v in term_values(f, s)})
    delta_a = (values[1] - values[0]) / 2 if len(values) > 1 else Fraction(1)
    v0, _ = gauss_valuation(f, s)
    if not _window_is_clear(f, s, a_star, a_star + eps_a, v0 + delta_a):
        raise AssertionError("box witness window not empty")  # pragma: no cover
    return eps_a, delta_a


def bar_witness(f: Series, s, eps) -> Fraction:
    """Witness delta_b: no term left of ``argnorm - eps`` comes within delta_b
    of the Gauss valuation.  Half the scanned gap; 1 when the window is empty.
    """
    if f.is_zero:
        raise ZeroSeriesError("bar witness of the zero series is undefined")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    a_star = argnorm(f, s)
    v0, _ = gauss_valuation(f, s)
    cutoff = a_star - eps
    gaps = [v - v0 for i, v in term_values(f, s) if i < cutoff]
    return min(gaps) / 2 if gaps else Fraction(1)


def localize(f: Series, g: Series, s) -> Tuple[Tuple[Series, Series], Value]:
    """Restrict both factors to small windows at their argnorms and predict
    the product valuation.

    Box witnesses of each factor cap the bar epsilons of the other; the
    value cut is half the smallest of the four witnesses.  The prediction
    ``v_s(f) + v_s(g)`` equals the Gauss valuation of the product.
    """
    _check_compatible(f, g)
    if f.is_zero or g.is_zero:
        raise ZeroSeriesError("localize needs nonzero factors")
    s = as_gauss_param(s)
    eps_box_f, delta_box_f = box_witness(f, s)
    eps_box_g, delta_box_g = box_witness(g, s)
    eps_bar_f = eps_box_g / 2
    eps_bar_g = eps_box_f / 2
    delta_bar_f = bar_witness(f, s, eps_bar_f)
    delta_bar_g = bar_witness(g, s, eps_bar_g)
    delta = min(delta_box_f, delta_bar_f, delta_box_g, delta_bar_g) / 2
    vf, _ = gauss_valuation(f, s)
    vg, _ = gauss_valuation(g, s)

    def window(h: Series, a_star: Fraction, eps: Fraction, bound: Value) -> Series:
        kept = [
            (i, a)
            for (i, a), (_, v) in zip(h.terms, term_values(h, s))
            if a_star - eps < i and i <= a_star and v <= bound
        ]
        return Series.make(h.domain, h.mode, kept, h.prec, raw=True)

    f_loc = window(f, argnorm(f, s), eps_bar_f, vf + delta)
    g_loc = window(g, argnorm(g, s), eps_bar_g, vg + delta)
    return (f_loc, g_loc), vf + vg
