"""O-submodules of the series fields given by coefficientwise ideals.

A submodule spec stores the exponent sequence ``(k_i)`` of ``sum p^(k_i)
t^i``; ``+inf`` forces the coefficient to vanish and ``-inf`` opens the
coordinate to all of the base field.  The module provides the decidable
classification predicates (open lattice, bounded, compactoid), membership
of explicit elements, fractional-ideal algebra, the min-plus product bound,
and the named modules used throughout with their literature-sourced flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import KindMismatch, PrecisionExhausted, UnknownName
from .padic import PAdic
from .seminorm import EQUAL, MIXED, SeminormSpec, is_admissible_seq
from .seqspec import (
    MINUS_INF,
    PLUS_INF,
    AffineTail,
    ConstTail,
    ExtInt,
    SeqSpec,
    forall_ge,
    minplus_convolve,
    pointwise_max,
    pointwise_min,
    shift_add,
    sup_diff,
)
from .series import EqualCharSeries, MixedSeries, Series

__all__ = [
    "SubmoduleSpec",
    "Classification",
    "Membership",
    "is_open_lattice",
    "is_bounded",
    "is_compactoid",
    "classify",
    "membership",
    "module_sum",
    "module_intersect",
    "scale",
    "product_bound",
    "named",
    "named_module_names",
    "literature_classification",
    "seminorm_bound_on",
    "unbounded_witness",
]


@dataclass(frozen=True)
class SubmoduleSpec:
    seq: SeqSpec
    field_kind: str

    def to_json(self) -> dict:
        out = self.seq.to_json()
        out["field"] = self.field_kind
        out["role"] = "submodule"
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "SubmoduleSpec":
        return SubmoduleSpec(SeqSpec.from_json(obj), obj["field"])

    def canonical(self) -> "SubmoduleSpec":
        return SubmoduleSpec(self.seq.canonical(), self.field_kind)


@dataclass(frozen=True)
class Classification:
    """Computed flags, plus literature-sourced ones on named modules only."""

    open_lattice: bool
    bounded: bool
    compactoid: bool
    complete: bool | None = None
    c_compact: bool | None = None
    closed: bool | None = None

    def to_json(self) -> dict:
        out = {
            "open_lattice": self.open_lattice,
            "bounded": self.bounded,
            "compactoid": self.compactoid,
        }
        for key in ("complete", "c_compact", "closed"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


class Membership:
    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# classification predicates


def _has_minus_inf(seq: SeqSpec) -> bool:
    if any(v == MINUS_INF for _, v in seq.window_items()):
        return True
    return any(
        isinstance(t, ConstTail) and t.value == MINUS_INF for t in (seq.left, seq.right)
    )


def _left_bounded_below(seq: SeqSpec) -> bool:
    t = seq.left
    if isinstance(t, AffineTail):
        return t.slope <= 0
    return t.value != MINUS_INF


def _right_bounded_below(seq: SeqSpec) -> bool:
    t = seq.right
    if isinstance(t, AffineTail):
        return t.slope >= 0
    return t.value != MINUS_INF


def _left_tends_to_plus_inf(seq: SeqSpec) -> bool:
    t = seq.left
    if isinstance(t, AffineTail):
        return t.slope <= -1
    return t.value == PLUS_INF


def is_open_lattice(m: SubmoduleSpec) -> bool:
    """Whether the module is an open lattice of its field.

    The condition coincides with admissibility of the defining sequence as
    a seminorm sequence: gauge seminorms of such lattices are exactly the
    admissible seminorms.
    """
    return is_admissible_seq(m.seq, m.field_kind)


def is_bounded(m: SubmoduleSpec) -> bool:
    seq = m.seq
    if _has_minus_inf(seq):
        return False
    if m.field_kind == EQUAL:
        left = seq.left
        return isinstance(left, ConstTail) and left.value == PLUS_INF
    return _left_bounded_below(seq) and _right_bounded_below(seq)


def is_compactoid(m: SubmoduleSpec) -> bool:
    if not is_bounded(m):
        return False
    if m.field_kind == EQUAL:
        # bounded and compactoid submodules coincide in a nuclear space
        return True
    return _left_tends_to_plus_inf(m.seq)


def classify(m: SubmoduleSpec) -> Classification:
    return Classification(is_open_lattice(m), is_bounded(m), is_compactoid(m))


# ---------------------------------------------------------------------------
# membership


def membership(m: SubmoduleSpec, x: Series) -> str:
    """Certified membership of an explicit element.

    ``IN`` needs every coefficient valuation bound to clear the exponent;
    ``OUT`` needs one exactly known coefficient in violation; anything
    resting on zero-within-precision data stays ``UNKNOWN``.
    """
    if (m.field_kind == EQUAL) != isinstance(x, EqualCharSeries):
        raise KindMismatch("module and element kinds differ")
    if forall_ge(x.bound_seq(), m.seq):
        return Membership.IN
    for i, c in x.coeffs:
        if c.valuation_exact and c.val < m.seq.value_at(i):
            return Membership.OUT
    return Membership.UNKNOWN


# ---------------------------------------------------------------------------
# fractional-ideal algebra


def _check_kinds(a: SubmoduleSpec, b: SubmoduleSpec) -> None:
    if a.field_kind != b.field_kind:
        raise KindMismatch(f"{a.field_kind} vs {b.field_kind}")


def module_sum(a: SubmoduleSpec, b: SubmoduleSpec) -> SubmoduleSpec:
    """Module sum; exponents combine as p^m + p^n = p^min(m,n)."""
    _check_kinds(a, b)
    return SubmoduleSpec(pointwise_min(a.seq, b.seq), a.field_kind)


def module_intersect(a: SubmoduleSpec, b: SubmoduleSpec) -> SubmoduleSpec:
    _check_kinds(a, b)
    return SubmoduleSpec(pointwise_max(a.seq, b.seq), a.field_kind)


def scale(m: SubmoduleSpec, a: PAdic) -> SubmoduleSpec:
    """The module ``a * m``; requires the exact valuation of ``a``."""
    if a.is_exact_zero:
        return SubmoduleSpec(SeqSpec.constant(PLUS_INF), m.field_kind)
    if not a.valuation_exact:
        raise PrecisionExhausted("scaling needs the exact valuation of the factor")
    return SubmoduleSpec(shift_add(m.seq, a.val.n), m.field_kind)


def product_bound(a: SubmoduleSpec, b: SubmoduleSpec) -> SubmoduleSpec:
    """Coefficientwise bound containing all products of the two modules."""
    _check_kinds(a, b)
    return SubmoduleSpec(minplus_convolve(a.seq, b.seq), a.field_kind)


def seminorm_bound_on(spec: SeminormSpec, m: SubmoduleSpec) -> ExtInt:
    """Symbolic ``sup over x in m`` of the seminorm exponent.

    Equals ``sup_i (n_i - k_i)``: on each coordinate the extreme element is
    the boundary monomial of exponent ``k_i``.
    """
    return sup_diff(spec.seq, m.seq)


# ---------------------------------------------------------------------------
# named modules and their literature-sourced classification


def _named_table() -> dict[str, tuple[SubmoduleSpec, Classification]]:
    inf, ninf = PLUS_INF, MINUS_INF

    def spec(kind, window, left, right):
        return SubmoduleSpec(
            SeqSpec.from_window(window, ConstTail(ExtInt.of(left)), ConstTail(ExtInt.of(right))),
            kind,
        )

    taylor = spec(EQUAL, {0: ninf}, inf, ninf)  # K[[t]]
    t_taylor = spec(EQUAL, {1: ninf}, inf, ninf)  # tK[[t]]
    rank2_equal_ring = spec(EQUAL, {0: 0}, inf, ninf)  # O + tK[[t]]
    int_mixed = spec(MIXED, {0: 0}, 0, 0)  # O{{t}}
    p_mixed = spec(MIXED, {0: 1}, 1, 1)  # p{{t}}
    rank2_mixed_ring = spec(MIXED, {0: 0}, 1, 0)  # p-below, O-above

    return {
        "K[[t]]": (
            taylor,
            Classification(
                open_lattice=False, bounded=False, compactoid=False,
                complete=True, c_compact=True, closed=True,
            ),
        ),
        "tK[[t]]": (
            t_taylor,
            Classification(
                open_lattice=False, bounded=False, compactoid=False,
                complete=True, c_compact=True, closed=True,
            ),
        ),
        "O+tK[[t]]": (
            rank2_equal_ring,
            Classification(
                open_lattice=False, bounded=False, compactoid=False,
                complete=True, c_compact=True, closed=True,
            ),
        ),
        "O{{t}}": (
            int_mixed,
            Classification(
                open_lattice=False, bounded=True, compactoid=False,
                complete=True, c_compact=False, closed=True,
            ),
        ),
        "p{{t}}": (
            p_mixed,
            Classification(
                open_lattice=False, bounded=True, compactoid=False,
                complete=True, c_compact=False, closed=True,
            ),
        ),
        "rank2_mixed": (
            rank2_mixed_ring,
            Classification(
                open_lattice=False, bounded=True, compactoid=False,
                complete=True, c_compact=False, closed=True,
            ),
        ),
    }


def named_module_names() -> list[str]:
    return sorted(_named_table())


def named(name: str) -> SubmoduleSpec:
    try:
        return _named_table()[name][0]
    except KeyError:
        raise UnknownName(f"no named module {name!r}") from None


def literature_classification(name: str) -> Classification:
    try:
        return _named_table()[name][1]
    except KeyError:
        raise UnknownName(f"no named module {name!r}") from None


# ---------------------------------------------------------------------------
# constructive unboundedness witnesses


def _minus_inf_index(seq: SeqSpec) -> int | None:
    for i, v in seq.window_items():
        if v == MINUS_INF:
            return i
    if isinstance(seq.left, ConstTail) and seq.left.value == MINUS_INF:
        return seq.window_lo - 1
    if isinstance(seq.right, ConstTail) and seq.right.value == MINUS_INF:
        return seq.window_hi + 1
    return None


def _monomial(m: SubmoduleSpec, index: int, val: int, prime: int) -> Series:
    c = PAdic.pi_power(prime, val)
    if m.field_kind == EQUAL:
        return EqualCharSeries.monomial(prime, index, c)
    return MixedSeries.monomial(prime, index, c)


def unbounded_witness(
    m: SubmoduleSpec, target: int, prime: int
) -> tuple[SeminormSpec, list[Series]]:
    """An admissible seminorm and elements of ``m`` whose exponents reach
    ``target``, certifying that the module is unbounded.

    The seminorm mirrors the constructive proofs: a single coordinate
    weight against a fully open coordinate, the weight sequence
    ``-i + k_i`` along a decreasing support in the Laurent case, the
    0/-inf step against coefficients blowing up on the left, and the
    halved-exponent staircase against coefficients blowing up on the
    right of the doubly infinite field.
    """
    if is_bounded(m):
        raise ValueError("module is bounded; no witness exists")
    seq = m.seq
    ninf = ConstTail(MINUS_INF)

    i0 = _minus_inf_index(seq)
    if i0 is not None:
        # a fully open coordinate: weight it once, scale the monomial up
        spec = SeminormSpec(SeqSpec.from_window({i0: 0}, ninf, ninf), m.field_kind)
        elems = [_monomial(m, i0, -j, prime) for j in range(1, target + 1)]
        return spec, elems

    if m.field_kind == EQUAL:
        # finite exponents at arbitrarily negative indices: weigh index i by
        # -i + k_i so the boundary monomial at i scores -i
        top = min(seq.window_lo - 1, -1)
        lo_i = min(-target, top)
        window = {i: -i + seq.value_at(i).n for i in range(lo_i, top + 1)}
        spec = SeminormSpec(SeqSpec.from_window(window, ninf, ninf), EQUAL)
        elems = [
            _monomial(m, i, seq.value_at(i).n, prime) for i in range(lo_i, top + 1)
        ]
        return spec, elems

    left = seq.left
    if isinstance(left, AffineTail) and left.slope >= 1:
        # exponents drop without bound towards -inf: the 0/-inf step weighs
        # all indices at or below zero, where the boundary monomials blow up
        spec = SeminormSpec(
            SeqSpec.from_window({0: 0}, ConstTail(ExtInt(0)), ninf), MIXED
        )
        elems = []
        i = min(seq.window_lo - 1, 0)
        while True:
            v = seq.value_at(i)
            if v.is_finite:
                elems.append(_monomial(m, i, v.n, prime))
                if -v.n >= target:
                    return spec, elems
            i -= 1

    # exponents drop without bound towards +inf: the halved-exponent
    # staircase n_i = floor(k_i / 2) is bounded above, still tends to -inf,
    # and scores -ceil(k_i / 2) on the boundary monomials
    right = seq.right
    assert isinstance(right, AffineTail) and right.slope <= -1
    start = max(seq.window_hi + 1, 0)
    window: dict[int, int] = {}
    elems = []
    i = start
    while True:
        k_i = seq.value_at(i).n
        n_i = k_i // 2
        window[i] = n_i
        elems.append(_monomial(m, i, k_i, prime))
        if n_i - k_i >= target:
            break
        i += 1
    for j in range(0, start):
        window[j] = window[start]
    spec_seq = SeqSpec.from_window(
        window, ninf, AffineTail(right.slope, window[i] - right.slope * i)
    )
    return SeminormSpec(spec_seq, MIXED), elems
