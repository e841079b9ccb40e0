"""Admissible seminorms, evaluated exactly in the exponent scale.

A weight sequence (n_i) defines the seminorm sup_i |x_i| q^(n_i). Over
Laurent series the weights must vanish (be -inf) from some index on; over
the doubly infinite field they must be bounded above and tend to -inf on
the right. Values are reported as exponents e with ||x|| = q^e, never as
real numbers.
"""

from tdlf import (
    AffineTail,
    ConstTail,
    ExtInt,
    MINUS_INF,
    MixedSeries,
    PAdic,
    RightValBound,
    SeminormSpec,
    SeqSpec,
    SubmoduleSpec,
    closed_ball_test,
    eval_exponent,
    membership,
    scale,
    tail_remainder,
    validate,
)

P = 5
one = PAdic.from_int(1, P)

# The step seminorm: weight 0 up to the origin, nothing beyond.
step = SeminormSpec(
    SeqSpec.from_window({0: 0}, ConstTail(ExtInt(0)), ConstTail(MINUS_INF)),
    "mixed",
)
validate(step)

x = MixedSeries.from_coeffs(P, {-3: PAdic.pi_power(P, -1), 5: one})
res = eval_exponent(step, x)
print("||p^-1 t^-3 + t^5|| exponent:", res.exponent, "exact:", res.exact)

# Closed balls in the exponent scale.
print("inside radius q^1:", closed_ball_test(step, x, 1))
print("inside radius q^0:", closed_ball_test(step, x, 0))

# The same number through the gauge: the least e with x in p^-e * lattice.
lattice = SubmoduleSpec(step.seq, "mixed")
for e in range(-2, 4):
    inside = membership(scale(lattice, PAdic.pi_power(P, -e)), x)
    print(f"x in p^({-e}) L:", inside)

# Partial sums converge: the norm of the tail collapses monotonically.
slope = SeminormSpec(
    SeqSpec.from_window({0: 0}, ConstTail(ExtInt(0)), AffineTail(-1, 0)),
    "mixed",
)
y = MixedSeries.from_coeffs(P, {0: one}, right=RightValBound(0))
print("tail norms:", [
    str(eval_exponent(slope, tail_remainder(y, n)).exponent) for n in range(1, 8)
])
