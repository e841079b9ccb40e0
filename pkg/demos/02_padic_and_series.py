"""Truncated p-adic coefficients and the two series fields.

Coefficients live in Q_p, stored as p^val * unit modulo p^precision.
Laurent series K((t)) keep exact coefficients below a truncation order;
elements of the doubly infinite field K{{t}} keep a finite window of
coefficients plus certified valuation bounds on both tails.
"""

from fractions import Fraction

from tdlf import (
    EqualCharSeries,
    LeftValBound,
    MixedSeries,
    PAdic,
    add,
    mul,
    partial_sum,
    rank2_equal,
    rank2_mixed,
    vF_exponent,
)

P = 5
one = PAdic.from_int(1, P)

# Coefficient arithmetic is exact modulo the stored precision.
x = PAdic.from_fraction(Fraction(7, 3), P)
print("7/3 in Q_5:", x)
print("7/3 * 3 - 7 vanishes within precision:",
      (x * PAdic.from_int(3, P) - PAdic.from_int(7, P)))

# Cancellation is honest: the representation remembers only a bound.
print("x - x:", x - x)

# Laurent series multiply by finite convolution, tracking the truncation.
a = EqualCharSeries.from_coeffs(P, {0: one, 1: one})           # 1 + t
b = EqualCharSeries.from_coeffs(P, {0: one, 1: -one})          # 1 - t
print("(1+t)(1-t) coefficients:", dict(mul(a, b).coeffs))

# Doubly infinite series: a geometric tail against its own annihilator.
n = 6
u = MixedSeries.from_coeffs(P, {0: one, -1: -PAdic.pi_power(P, 1)})
g = MixedSeries.from_coeffs(P, {-j: PAdic.pi_power(P, j) for j in range(n + 1)})
telescoped = mul(u, g)
print("(1 - p/t) * sum p^j t^-j:", dict(telescoped.coeffs))
print("valuation of the defect:", vF_exponent(telescoped - MixedSeries.monomial(P, 0, one)))

# Tail guarantees certify products even where coefficients are unknown.
fuzzy = MixedSeries.from_coeffs(P, {0: one}, left=LeftValBound(1, 0))
sq = mul(fuzzy, fuzzy)
print("unknown-but-bounded coefficient at t^-1:", sq.coeff(-1))

# Rank-two valuations, one per field kind.
elem = MixedSeries.from_coeffs(P, {-1: PAdic.pi_power(P, 2), 1: one})
print("rank-two valuation (mixed):", rank2_mixed(elem))
laurent = EqualCharSeries.from_coeffs(P, {-2: PAdic.pi_power(P, 3), 1: one})
print("rank-two valuation (equal):", rank2_equal(laurent))

# Partial sums converge to the element in the higher topology.
s0 = partial_sum(elem, 0)
print("partial sum at 0 keeps:", dict(s0.coeffs))
print("sum with the remainder restores:", dict(add(s0, elem - s0).coeffs))
