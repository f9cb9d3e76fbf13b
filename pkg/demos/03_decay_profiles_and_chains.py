"""Realizing prescribed convex decay profiles and separating them.

A power-law profile c * x^(-r) has infimum Legendre transform K * s^mu
with mu = r/(r+1); normalizing K = 1 pins c = r^r/(r+1)^(r+1).  Because
the exponent lattice is dense (denominators p^k for every k), the profile
can be realized as the Newton polygon of an actual series to any accuracy
-- and profiles with different mu are asymptotically inseparable classes:
s^mu grows strictly faster than s^lam as s -> 0 whenever mu < lam.

Run:  python demos/03_decay_profiles_and_chains.py
"""

from fractions import Fraction as Q

from mnseries import (
    PerfectPoly,
    PowerLaw,
    ProfileElement,
    chain_report,
    classify,
    discretely_approximate,
    format_series,
    in_m,
    inverse_legendre_power,
    legendre_eval,
    legendre_power_law,
    materialize,
    newton_polygon,
)
from mnseries.export import certificate_text, chain_report_text

D = PerfectPoly(2, "p-power")

# --- the inverse Legendre constants, exactly where possible

for mu in (Q(1, 2), Q(2, 3), Q(1, 8)):
    c, r = inverse_legendre_power(mu)
    print(f"mu={mu}:  r={r}  c={c if isinstance(c, Q) else f'[{float(c.midpoint):.12f}]'}")
print("   (mu=1/2 gives the classic inf_x { 1/(4x) + s x } = sqrt(s))")

# --- materialize a profile as a genuine series

profile = ProfileElement.for_exponent(Q(1, 2), D)
g = materialize(profile, 8)
print("\nmaterialized profile for mu=1/2, depth 8:")
print(" ", format_series(g))
poly = newton_polygon(g)
print("polygon nodes:", [(str(x), str(y)) for x, y in poly.nodes[:4]], "...")

# The realized Legendre values approach s^(1/2) as s -> 0:
print("\ns        L(realized)      s^(1/2)     ratio")
for k in (4, 6, 8, 10):
    s = Q(1, 2**k)
    val = float(legendre_eval(newton_polygon(materialize(profile, 256)), s))
    ref = float(s) ** 0.5
    print(f"2^-{k:<5} {val:<16.8f} {ref:<11.8f} {val / ref:.5f}")

# --- discrete approximation of arbitrary rational convex targets

targets = [(i, Q(1, i)) for i in range(1, 7)]
series, cert = discretely_approximate(targets, D)
print("\napproximating G(i) = 1/i on the p-power lattice:")
print(certificate_text(cert))

# --- asymptotic classification and the separation chain

verdict = classify(PowerLaw(Q(1), Q(1, 2)), PowerLaw(Q(1), Q(3, 4)))
print("s^(1/2) against s^(3/4) as s -> 0:", verdict.verdict,
      "| in O^sup:", verdict.in_O_sup)

report = chain_report([Q(1, 4), Q(1, 2), Q(3, 4)], depth=64)
print("\nchain report over {1/4, 1/2, 3/4}:")
print(chain_report_text(report))

# Every materialized profile lies in the ideal of elements all of whose
# digits have positive valuation; the series variable itself does not.
print("profile in ideal:", in_m(materialize(profile, 16)))
law = legendre_power_law(profile)
print("its Legendre class:", f"{law.coeff} * s^{law.exponent}")
