"""The pairing, dual seminorms and the polar calculus.

Functionals are series: x acts on y through the t^0 coefficient of x*y.
Pseudo-polar and polar of a coefficientwise module are the reflections
k_i -> 1 - k_{-i} and k_i -> -k_{-i}; they swap open lattices with basic
compactoid submodules, and applying the pseudo-polar twice restores the
module.
"""

from tdlf import (
    MixedSeries,
    PAdic,
    SampleConfig,
    dual_seminorm,
    eval_exponent,
    named,
    pairing,
    polar,
    pseudo_polar,
    sample_elements,
)

P = 5
one = PAdic.from_int(1, P)

# The pairing in its simplest form: only matching degrees survive.
print("(t^-1, 2t):", pairing(MixedSeries.monomial(P, -1, one),
                             MixedSeries.monomial(P, 1, PAdic.from_int(2, P))))

# The polar table for the built-in modules.
for name in ("O{{t}}", "p{{t}}", "rank2_mixed", "K[[t]]", "O+tK[[t]]", "tK[[t]]"):
    m = named(name)
    print(f"{name:<10} pseudo-polar -> {pseudo_polar(m).canonical().to_json()}")
    print(f"{'':<10} polar        -> {polar(m).canonical().to_json()}")

# Note the Taylor-ring row: the closed form gives t*K[[t]], and sampling
# pairs confirms it: every member of the claimed pseudo-polar pairs into
# the maximal ideal against every member of K[[t]].
m = named("K[[t]]")
claimed = pseudo_polar(m)
xs = sample_elements(claimed, SampleConfig(seed=3, count=10, window=(-8, 8)), P)
ys = sample_elements(m, SampleConfig(seed=4, count=10, window=(-8, 8)), P)
print("all pairings land in the maximal ideal:",
      all(pairing(x, y).abs_exponent().exponent <= -1 for x in xs for y in ys))

# Involution: the pseudo-bipolar restores the module.
print("bipolar restores the rank-two ring:",
      pseudo_polar(pseudo_polar(named("rank2_mixed"))).canonical()
      == named("rank2_mixed").canonical())

# The dual seminorm of a compactoid module computes the operator norm of
# the pairing against it: the supremum is attained on boundary monomials.
from tdlf import AffineTail, ConstTail, ExtInt, SeqSpec, SubmoduleSpec

b = SubmoduleSpec(
    SeqSpec.from_window({0: 0}, AffineTail(-1, 0), ConstTail(ExtInt(0))), "mixed"
)
spec = dual_seminorm(b)
x = MixedSeries.from_coeffs(P, {-2: PAdic.pi_power(P, -3), 1: one})
print("dual norm of x:", eval_exponent(spec, x).exponent)
best = max(
    pairing(x, y).abs_exponent().exponent
    for y in sample_elements(b, SampleConfig(seed=5, count=20, window=(-6, 6)), P)
)
print("max sampled pairing:", best)
