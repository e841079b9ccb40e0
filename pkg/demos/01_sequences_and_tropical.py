"""Extended integers and finitely presented sequences.

Every exponent profile in this package (seminorm weights, submodule
exponents) is a total map Z -> Z u {+inf, -inf} stored as a finite window
plus a constant or affine tail per side. This walkthrough shows the core
algebra, ending with min-plus convolution, the tropical operation behind
the product bounds.
"""

from tdlf import (
    MINUS_INF,
    PLUS_INF,
    AffineTail,
    ExtInt,
    SeqSpec,
    minplus_convolve,
    pointwise_max,
    pointwise_min,
    reflect_affine,
    shift_add,
)


def show(label, s, lo=-8, hi=8):
    row = "  ".join(f"{i}:{s.value_at(i)}" for i in range(lo, hi + 1))
    print(f"{label:<28} {row}")


# Extended integers order and saturate.
print("order:", MINUS_INF < ExtInt(-3) < ExtInt(7) < PLUS_INF)
print("saturating:", PLUS_INF + 5, MINUS_INF + 5)

# A sequence: value 0 at index 0, growing like |i| on both sides.
vee = SeqSpec.from_window({0: 0}, AffineTail(-1, 0), AffineTail(1, 0))
show("v-profile |i|", vee)

# Pointwise lattice operations (module sum and intersection use these).
flat = SeqSpec.constant(2)
show("min with constant 2", pointwise_min(vee, flat))
show("max with constant 2", pointwise_max(vee, flat))

# Reflection i -> a - s(-i) is the engine behind polars.
show("reflect (a=1)", reflect_affine(vee, 1))
print("reflect twice is identity:",
      reflect_affine(reflect_affine(vee, 1), 1).eq_pointwise(vee, -30, 30))

# Shifting adds a constant everywhere, with saturation at infinities.
show("shift by 3", shift_add(vee, 3))

# Min-plus convolution: (f # g)(k) = min over i+j=k of f(i)+g(j).
# The v-profile is min-plus idempotent up to scaling: |i| # |i| = |k|.
conv = minplus_convolve(vee, vee)
show("|i| convolved with |i|", conv)

# The delta profile (0 at the origin, +inf elsewhere) is the identity.
delta = SeqSpec.delta()
print("delta is neutral:", minplus_convolve(delta, vee).eq_pointwise(vee, -30, 30))

# Tails stay exact: the result above again has affine tails of slope 1.
print("tails of the convolution:", conv.canonical().left, conv.canonical().right)
