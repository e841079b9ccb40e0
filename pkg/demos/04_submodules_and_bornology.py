"""Submodule classification, membership and product bounds.

Coefficientwise O-submodules sum p^(k_i) t^i carry three decidable flags:
open lattice, bounded, compactoid. Over the doubly infinite field the
three classes are genuinely different; the integral ring is the standard
witness (bounded, closed, but neither open nor compactoid).
"""

from tdlf import (
    AffineTail,
    ConstTail,
    ExtInt,
    MINUS_INF,
    MixedSeries,
    PAdic,
    SampleConfig,
    SeqSpec,
    SubmoduleSpec,
    classify,
    eval_exponent,
    membership,
    module_intersect,
    mul,
    named,
    named_module_names,
    literature_classification,
    product_bound,
    sample_elements,
    unbounded_witness,
)

P = 5
one = PAdic.from_int(1, P)

print("built-in modules:", ", ".join(named_module_names()))
for name in named_module_names():
    print(f"{name:<12}", literature_classification(name).to_json())

# Membership is certified coefficient by coefficient.
ring = named("rank2_mixed")
inside = MixedSeries.from_coeffs(P, {-1: PAdic.pi_power(P, 1), 0: one})
outside = MixedSeries.monomial(P, -1, one)
print("p/t + 1 in the rank-two ring:", membership(ring, inside))
print("1/t in the rank-two ring:", membership(ring, outside))

# The integral ring is an intersection of one-coordinate lattices; this is
# the closedness witness made executable.
acc = None
for n in range(-5, 6):
    coordinate = SubmoduleSpec(SeqSpec.delta(n, 0, fill=MINUS_INF), "mixed")
    acc = coordinate if acc is None else module_intersect(acc, coordinate)
print("intersection profile on [-5,5]:", [str(acc.seq.value_at(i)) for i in range(-6, 7)])

# Products of bounded sets stay bounded; the exponent profile of the
# product is the min-plus convolution of the factors' profiles.
hat = SubmoduleSpec(
    SeqSpec.from_window({0: 0}, AffineTail(-1, 0), AffineTail(1, 0)), "mixed"
)
print("hat profile classification:", classify(hat).to_json())
square = product_bound(hat, hat)
print("squared profile:", [str(square.seq.value_at(i)) for i in range(-5, 6)])
print("squared classification:", classify(square).to_json())

# Sampled members of the factors multiply into the bound.
xs = sample_elements(hat, SampleConfig(seed=1, count=4, window=(-5, 5)), P)
ys = sample_elements(hat, SampleConfig(seed=2, count=4, window=(-5, 5)), P)
print("all sampled products inside the bound:",
      all(membership(square, mul(x, y)) == "in" for x in xs for y in ys))

# Unbounded modules come with constructive witnesses: an admissible
# seminorm and members whose exponents pass any target.
loose = SubmoduleSpec(
    SeqSpec.from_window({0: 0}, ConstTail(ExtInt(1)), AffineTail(-1, 0)), "mixed"
)
spec, elems = unbounded_witness(loose, 10, P)
print("witness exponents:",
      sorted(str(eval_exponent(spec, x).exponent) for x in elems))
