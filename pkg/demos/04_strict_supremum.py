"""A Gauss valuation that is a strict infimum, never attained.

With fractional exponents the support of a series can accumulate: the
element  sum_n x^(1 + 1/n) t^(2 - d_n)  (with d_n -> 0 picked so every
term value stays above the limit) has term values strictly decreasing to
1 + 2s without any term reaching it.  Finite truncations show the running
minima marching down toward, but never touching, the limit.

Run:  python demos/04_strict_supremum.py
"""

from fractions import Fraction as Q

from mnseries import supremum_example

s = Q(1)
values, limit = supremum_example(s, 12)

print(f"s = {s},  d_n = 1/(2n),  limit = 1 + 2s = {limit}\n")
print(" n   term value          gap above limit")
for n, v in enumerate(values, start=1):
    print(f"{n:2}   {str(v):18}  {str(v - limit)}")

print("\nevery value exceeds the limit; the infimum is never a minimum.")

# The bound d_n < 1/(n*s) is what keeps the values above the limit; a
# faster-shrinking d works for larger s:
values2, limit2 = supremum_example(Q(3, 2), 6, delta=lambda n: Q(1, 4 * n))
print(f"\nwith s = 3/2 and d_n = 1/(4n): limit = {limit2}, "
      f"first values = {[str(v) for v in values2[:3]]}")
