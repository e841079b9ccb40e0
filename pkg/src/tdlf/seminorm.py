"""Admissible seminorms and their exact evaluation in log-q scale.

A seminorm is attached to a sequence ``(n_i)`` of integers-or-``-inf``; its
value on ``sum x_i t^i`` is ``sup_i |x_i| q^(n_i)``, recorded here as the
exponent ``sup_i (n_i - v(x_i))``.  The admissibility conditions depend on
the field kind: over Laurent series the sequence must be ``-inf`` from some
index on; over the doubly infinite field it must be bounded above and tend
to ``-inf`` on the right.  Real numbers never appear; everything stays in
the exponent scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Union

from .errors import KindMismatch, NonAdmissibleSequence, PrecisionExhausted
from .padic import ExponentResult
from .seqspec import (
    MINUS_INF,
    PLUS_INF,
    AffineTail,
    ConstTail,
    ExtInt,
    SeqSpec,
)
from .series import EqualCharSeries, MixedSeries, ZeroTail

__all__ = [
    "FieldKind",
    "SeminormSpec",
    "ExponentResult",
    "validate",
    "is_admissible_seq",
    "eval_exponent",
    "closed_ball_test",
    "BallResult",
]

EQUAL = "equal"
MIXED = "mixed"


class BallResult(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SeminormSpec:
    seq: SeqSpec
    field_kind: str

    def to_json(self) -> dict:
        out = self.seq.to_json()
        out["field"] = self.field_kind
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "SeminormSpec":
        return SeminormSpec(SeqSpec.from_json(obj), obj["field"])


def _admissibility_failure(seq: SeqSpec, kind: str) -> str | None:
    """Reason the sequence is not admissible for the kind, or None."""
    for i, v in seq.window_items():
        if v == PLUS_INF:
            return f"value +inf at index {i}"
    for side, tail in (("left", seq.left), ("right", seq.right)):
        if isinstance(tail, ConstTail) and tail.value == PLUS_INF:
            return f"{side} tail is +inf"
    if kind == EQUAL:
        right = seq.right
        if not (isinstance(right, ConstTail) and right.value == MINUS_INF):
            return "no index k with n_i = -inf for all i > k"
        return None
    if kind == MIXED:
        left = seq.left
        if isinstance(left, AffineTail) and left.slope < 0:
            return "values unbounded above towards -inf"
        right = seq.right
        if isinstance(right, AffineTail):
            if right.slope >= 0:
                return "values do not tend to -inf towards +inf"
        elif right.value != MINUS_INF:
            return "values do not tend to -inf towards +inf"
        return None
    raise ValueError(f"unknown field kind {kind!r}")


def is_admissible_seq(seq: SeqSpec, kind: str) -> bool:
    return _admissibility_failure(seq, kind) is None


def validate(spec: SeminormSpec) -> None:
    """Raise :class:`NonAdmissibleSequence` naming the violated condition."""
    reason = _admissibility_failure(spec.seq, spec.field_kind)
    if reason is not None:
        raise NonAdmissibleSequence(f"{spec.field_kind}: {reason}")


# ---------------------------------------------------------------------------
# evaluation


def _diff(n: ExtInt, v: ExtInt) -> ExtInt:
    """Contribution n - v; -inf weights and exactly-zero coefficients drop."""
    if n == MINUS_INF or v == PLUS_INF:
        return MINUS_INF
    return ExtInt(n.n - v.n)


def _combine(best_exact: ExtInt, best_bound: ExtInt) -> ExponentResult:
    # an exact witness must strictly dominate every bound-only candidate;
    # ties stay upper bounds because the true value can only be smaller
    if best_bound == MINUS_INF:
        return ExponentResult(best_exact, True)
    if best_exact > best_bound:
        return ExponentResult(best_exact, True)
    return ExponentResult(best_bound, False)


def _eval_equal(spec: SeminormSpec, x: EqualCharSeries) -> ExponentResult:
    seq = spec.seq
    # the largest index carrying a finite weight
    last = None
    for i in range(seq.window_hi, seq.window_lo - 1, -1):
        if seq.value_at(i) != MINUS_INF:
            last = i
            break
    if last is None:
        left = seq.left
        if not (isinstance(left, ConstTail) and left.value == MINUS_INF):
            last = seq.window_lo - 1
    if last is not None and ExtInt(last) >= x.trunc:
        raise PrecisionExhausted(
            f"series truncated at t^{x.trunc} but weights reach index {last}"
        )
    best_exact = MINUS_INF
    best_bound = MINUS_INF
    for i, c in x.coeffs:
        cand = _diff(seq.value_at(i), c.val)
        if c.valuation_exact:
            best_exact = max(best_exact, cand)
        else:
            best_bound = max(best_bound, cand)
    return _combine(best_exact, best_bound)


def _eval_mixed(spec: SeminormSpec, x: MixedSeries) -> ExponentResult:
    seq = spec.seq
    best_exact = MINUS_INF
    best_bound = MINUS_INF
    for i, c in x.coeffs:
        cand = _diff(seq.value_at(i), c.val)
        if c.valuation_exact:
            best_exact = max(best_exact, cand)
        else:
            best_bound = max(best_bound, cand)
    bseq = x.bound_seq()
    if not isinstance(x.left, ZeroTail):
        # n(i) - bound(i) decays leftwards (slope of the bound is >= 1 while
        # the weights are bounded above), so the ray maximum sits at the
        # inner edge of the evaluation range
        start = min(seq.window_lo, x.lo) - 1
        for i in range(start, x.lo):
            best_bound = max(best_bound, _diff(seq.value_at(i), bseq.value_at(i)))
    if not isinstance(x.right, ZeroTail):
        stop = max(seq.window_hi, x.hi) + 1
        for i in range(x.hi + 1, stop + 1):
            best_bound = max(best_bound, _diff(seq.value_at(i), bseq.value_at(i)))
    return _combine(best_exact, best_bound)


def eval_exponent(
    spec: SeminormSpec, x: Union[EqualCharSeries, MixedSeries]
) -> ExponentResult:
    """Exponent e with ||x|| = q^e (``-inf`` meaning ||x|| = 0).

    The result is exact when the supremum is witnessed by an exactly known
    coefficient that strictly dominates every bound-only contribution.
    """
    validate(spec)
    if spec.field_kind == EQUAL:
        if not isinstance(x, EqualCharSeries):
            raise KindMismatch("equal-characteristic seminorm needs a Laurent series")
        return _eval_equal(spec, x)
    if not isinstance(x, MixedSeries):
        raise KindMismatch("mixed-characteristic seminorm needs a doubly infinite series")
    return _eval_mixed(spec, x)


def closed_ball_test(
    spec: SeminormSpec, x: Union[EqualCharSeries, MixedSeries], e: int
) -> BallResult:
    """Position of ``x`` relative to the closed ball of radius q^e."""
    try:
        res = eval_exponent(spec, x)
    except PrecisionExhausted:
        return BallResult.UNKNOWN
    if not res.exact:
        return BallResult.UNKNOWN
    return BallResult.INSIDE if res.exponent <= e else BallResult.OUTSIDE
