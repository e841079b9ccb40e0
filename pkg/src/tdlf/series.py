"""Elements of the two fields of series over Q_p.

``EqualCharSeries`` models Laurent series: exact coefficients from the
order up to a truncation exponent, nothing known beyond it.
``MixedSeries`` models doubly infinite series whose coefficients have
valuations bounded below and tend to zero towards ``-inf``: a finite window
of explicit coefficients plus per-side valuation guarantees.  Tail
positions are materialised on demand as zero-within-precision coefficients,
so precision bookkeeping rides on :class:`~tdlf.padic.PAdic` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Union

from .errors import (
    IncompatiblePrimes,
    KindMismatch,
    PrecisionExhausted,
    ZeroElement,
)
from .padic import PAdic
from .seqspec import (
    MINUS_INF,
    PLUS_INF,
    AffineTail,
    ConstTail,
    ExtInt,
    SeqSpec,
    ext_min,
    minplus_convolve,
)

__all__ = [
    "ZeroTail",
    "LeftValBound",
    "RightValBound",
    "EqualCharSeries",
    "MixedSeries",
    "ValuationResult",
    "add",
    "mul",
    "partial_sum",
    "vF_exponent",
    "rank2_mixed",
    "rank2_equal",
    "default_mul_target",
]


@dataclass(frozen=True)
class ZeroTail:
    """All coefficients on this side are exactly zero."""

    def to_json(self) -> dict:
        return {"kind": "zero"}


@dataclass(frozen=True)
class LeftValBound:
    """Guarantee ``v(x_i) >= base + slope*(lo - i)`` for ``i < lo``.

    The slope must be at least 1 so the bound certifies ``x_i -> 0``.
    """

    slope: int
    base: int

    def __post_init__(self):
        if self.slope < 1:
            raise ValueError("left tail bound needs slope >= 1")

    def bound_at(self, lo: int, i: int) -> int:
        return self.base + self.slope * (lo - i)

    def rebased(self, old_lo: int, new_lo: int) -> "LeftValBound":
        return LeftValBound(self.slope, self.base + self.slope * (old_lo - new_lo))

    def to_json(self) -> dict:
        return {"kind": "valbound", "slope": self.slope, "base": self.base}


@dataclass(frozen=True)
class RightValBound:
    """Guarantee ``v(x_i) >= floor`` for ``i > hi``."""

    floor: int

    def to_json(self) -> dict:
        return {"kind": "valbound", "floor": self.floor}


LeftTail = Union[ZeroTail, LeftValBound]
RightTail = Union[ZeroTail, RightValBound]


@dataclass(frozen=True)
class ValuationResult:
    """A valuation together with an exactness flag (lower bound if inexact)."""

    value: ExtInt
    exact: bool

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "exact": self.exact}


def _left_tail_from_json(obj: Mapping) -> LeftTail:
    if obj["kind"] == "zero":
        return ZeroTail()
    return LeftValBound(int(obj["slope"]), int(obj["base"]))


def _right_tail_from_json(obj: Mapping) -> RightTail:
    if obj["kind"] == "zero":
        return ZeroTail()
    return RightValBound(int(obj["floor"]))


def _normalize_coeffs(
    prime: int, coeffs: Mapping[int, PAdic]
) -> tuple[tuple[int, PAdic], ...]:
    out = []
    for i in sorted(coeffs):
        c = coeffs[i]
        if c.prime != prime:
            raise IncompatiblePrimes(f"coefficient prime {c.prime} != {prime}")
        if not c.is_exact_zero:
            out.append((i, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# equal characteristic: Laurent series


@dataclass(frozen=True)
class EqualCharSeries:
    """Laurent series known exactly below the truncation exponent.

    ``order`` is a lower bound for the support; stored coefficients live in
    ``[order, trunc)`` and indices absent from storage are exactly zero
    there.  Nothing is known at or above ``trunc``.
    """

    prime: int
    order: int
    coeffs: tuple[tuple[int, PAdic], ...]
    trunc: ExtInt

    kind = "equal"

    def __post_init__(self):
        for i, c in self.coeffs:
            if i < self.order or ExtInt(i) >= self.trunc:
                raise ValueError(f"coefficient index {i} outside [order, trunc)")

    @staticmethod
    def zero(prime: int) -> "EqualCharSeries":
        return EqualCharSeries(prime, 0, (), PLUS_INF)

    @staticmethod
    def from_coeffs(
        prime: int,
        coeffs: Mapping[int, PAdic],
        order: int | None = None,
        trunc: Union[ExtInt, int] = PLUS_INF,
    ) -> "EqualCharSeries":
        stored = _normalize_coeffs(prime, coeffs)
        if order is None:
            order = min((i for i, _ in stored), default=0)
        return EqualCharSeries(prime, order, stored, ExtInt.of(trunc))

    @staticmethod
    def monomial(prime: int, index: int, coeff: PAdic) -> "EqualCharSeries":
        return EqualCharSeries.from_coeffs(prime, {index: coeff}, order=index)

    @cached_property
    def _map(self) -> dict[int, PAdic]:
        return dict(self.coeffs)

    def coeff(self, i: int) -> PAdic:
        if ExtInt(i) >= self.trunc:
            raise PrecisionExhausted(f"coefficient {i} is beyond the truncation")
        return self._map.get(i, PAdic.zero(self.prime))

    def bound_seq(self) -> SeqSpec:
        """Valuation lower bounds; ``-inf`` marks the unknown region."""
        if self.trunc == PLUS_INF:
            hi = max((i for i, _ in self.coeffs), default=self.order)
            right: ConstTail | AffineTail = ConstTail(PLUS_INF)
        else:
            hi = max(self.order, self.trunc.n - 1)
            right = ConstTail(MINUS_INF)
        vals = []
        for i in range(self.order, hi + 1):
            if ExtInt(i) >= self.trunc:
                vals.append(MINUS_INF)
            else:
                c = self._map.get(i)
                vals.append(PLUS_INF if c is None else c.val)
        return SeqSpec(self.order, tuple(vals), ConstTail(PLUS_INF), right)

    def to_json(self) -> dict:
        return {
            "kind": "equal",
            "prime": self.prime,
            "order": self.order,
            "trunc": self.trunc.to_json(),
            "coeffs": {str(i): c.to_json() for i, c in self.coeffs},
        }

    def __add__(self, other: "EqualCharSeries") -> "EqualCharSeries":
        return add(self, other)

    def __sub__(self, other: "EqualCharSeries") -> "EqualCharSeries":
        return add(self, -other)

    def __neg__(self) -> "EqualCharSeries":
        return EqualCharSeries(
            self.prime, self.order, tuple((i, -c) for i, c in self.coeffs), self.trunc
        )

    def __mul__(self, other: "EqualCharSeries") -> "EqualCharSeries":
        return mul(self, other)


# ---------------------------------------------------------------------------
# mixed characteristic: doubly infinite series


@dataclass(frozen=True)
class MixedSeries:
    """Doubly infinite series with certified coefficient decay.

    The left guarantee forces ``v(x_i) -> +inf`` as ``i -> -inf`` and the
    global valuation floor is finite, which is exactly what membership in
    the field requires.
    """

    prime: int
    lo: int
    hi: int
    coeffs: tuple[tuple[int, PAdic], ...]
    left: LeftTail
    right: RightTail

    kind = "mixed"

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("window must satisfy lo <= hi")
        for i, _ in self.coeffs:
            if not self.lo <= i <= self.hi:
                raise ValueError(f"coefficient index {i} outside window")

    @staticmethod
    def zero(prime: int) -> "MixedSeries":
        return MixedSeries(prime, 0, 0, (), ZeroTail(), ZeroTail())

    @staticmethod
    def from_coeffs(
        prime: int,
        coeffs: Mapping[int, PAdic],
        left: LeftTail = ZeroTail(),
        right: RightTail = ZeroTail(),
        lo: int | None = None,
        hi: int | None = None,
    ) -> "MixedSeries":
        stored = _normalize_coeffs(prime, coeffs)
        if stored:
            ilo = min(i for i, _ in stored)
            ihi = max(i for i, _ in stored)
            lo = ilo if lo is None else min(lo, ilo)
            hi = ihi if hi is None else max(hi, ihi)
        else:
            lo = 0 if lo is None else lo
            hi = lo if hi is None else max(hi, lo)
        return MixedSeries(prime, lo, hi, stored, left, right)

    @staticmethod
    def monomial(prime: int, index: int, coeff: PAdic) -> "MixedSeries":
        return MixedSeries.from_coeffs(prime, {index: coeff})

    @cached_property
    def _map(self) -> dict[int, PAdic]:
        return dict(self.coeffs)

    def coeff(self, i: int) -> PAdic:
        """Coefficient at ``i``; tail positions materialise as
        zero-within-precision elements carrying the tail bound."""
        if self.lo <= i <= self.hi:
            return self._map.get(i, PAdic.zero(self.prime))
        if i < self.lo:
            if isinstance(self.left, ZeroTail):
                return PAdic.zero(self.prime)
            return PAdic.zero_mod(self.prime, self.left.bound_at(self.lo, i))
        if isinstance(self.right, ZeroTail):
            return PAdic.zero(self.prime)
        return PAdic.zero_mod(self.prime, self.right.floor)

    def bound_seq(self) -> SeqSpec:
        vals = []
        for i in range(self.lo, self.hi + 1):
            c = self._map.get(i)
            vals.append(PLUS_INF if c is None else c.val)
        if isinstance(self.left, ZeroTail):
            left: ConstTail | AffineTail = ConstTail(PLUS_INF)
        else:
            # base + slope*(lo - i) as a function of i
            left = AffineTail(-self.left.slope, self.left.base + self.left.slope * self.lo)
        if isinstance(self.right, ZeroTail):
            right: ConstTail | AffineTail = ConstTail(PLUS_INF)
        else:
            right = ConstTail(ExtInt(self.right.floor))
        return SeqSpec(self.lo, tuple(vals), left, right)

    def valuation_floor(self) -> ExtInt:
        """A certified lower bound for all coefficient valuations."""
        cands = [c.val for _, c in self.coeffs]
        if isinstance(self.left, LeftValBound):
            cands.append(ExtInt(self.left.base + self.left.slope))
        if isinstance(self.right, RightValBound):
            cands.append(ExtInt(self.right.floor))
        return ext_min(cands)

    def to_json(self) -> dict:
        return {
            "kind": "mixed",
            "prime": self.prime,
            "lo": self.lo,
            "hi": self.hi,
            "coeffs": {str(i): c.to_json() for i, c in self.coeffs},
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    def __add__(self, other: "MixedSeries") -> "MixedSeries":
        return add(self, other)

    def __sub__(self, other: "MixedSeries") -> "MixedSeries":
        return add(self, -other)

    def __neg__(self) -> "MixedSeries":
        return MixedSeries(
            self.prime,
            self.lo,
            self.hi,
            tuple((i, -c) for i, c in self.coeffs),
            self.left,
            self.right,
        )

    def __mul__(self, other: "MixedSeries") -> "MixedSeries":
        return mul(self, other)


Series = Union[EqualCharSeries, MixedSeries]


def series_from_json(obj: Mapping) -> Series:
    prime = int(obj["prime"])
    coeffs = {int(k): PAdic.from_json(v) for k, v in obj["coeffs"].items()}
    if obj["kind"] == "equal":
        return EqualCharSeries.from_coeffs(
            prime, coeffs, order=int(obj["order"]), trunc=ExtInt.from_json(obj["trunc"])
        )
    if obj["kind"] == "mixed":
        return MixedSeries.from_coeffs(
            prime,
            coeffs,
            left=_left_tail_from_json(obj["left"]),
            right=_right_tail_from_json(obj["right"]),
            lo=int(obj["lo"]),
            hi=int(obj["hi"]),
        )
    raise ValueError(f"unknown series kind {obj['kind']!r}")


def _check_pair(x: Series, y: Series) -> None:
    if x.kind != y.kind:
        raise KindMismatch(f"{x.kind} vs {y.kind}")
    if x.prime != y.prime:
        raise IncompatiblePrimes(f"{x.prime} vs {y.prime}")


# ---------------------------------------------------------------------------
# addition


def add(x: Series, y: Series) -> Series:
    _check_pair(x, y)
    if isinstance(x, EqualCharSeries):
        trunc = min(x.trunc, y.trunc)
        order = min(x.order, y.order)
        total: dict[int, PAdic] = {}
        for i, c in list(x.coeffs) + list(y.coeffs):
            if ExtInt(i) >= trunc:
                continue
            total[i] = total[i] + c if i in total else c
        return EqualCharSeries.from_coeffs(x.prime, total, order=order, trunc=trunc)

    lo = min(x.lo, y.lo)
    hi = max(x.hi, y.hi)
    total = {}
    for i in range(lo, hi + 1):
        c = x.coeff(i) + y.coeff(i)
        if not c.is_exact_zero:
            total[i] = c
    left = _combine_left(x.left, x.lo, y.left, y.lo, lo)
    right = _combine_right(x.right, y.right)
    return MixedSeries.from_coeffs(x.prime, total, left=left, right=right, lo=lo, hi=hi)


def _combine_left(a: LeftTail, a_lo: int, b: LeftTail, b_lo: int, lo: int) -> LeftTail:
    if isinstance(a, ZeroTail) and isinstance(b, ZeroTail):
        return ZeroTail()
    if isinstance(a, ZeroTail):
        return b.rebased(b_lo, lo)
    if isinstance(b, ZeroTail):
        return a.rebased(a_lo, lo)
    ra, rb = a.rebased(a_lo, lo), b.rebased(b_lo, lo)
    return LeftValBound(min(ra.slope, rb.slope), min(ra.base, rb.base))


def _combine_right(a: RightTail, b: RightTail) -> RightTail:
    if isinstance(a, ZeroTail) and isinstance(b, ZeroTail):
        return ZeroTail()
    floors = [t.floor for t in (a, b) if isinstance(t, RightValBound)]
    return RightValBound(min(floors))


# ---------------------------------------------------------------------------
# multiplication


def default_mul_target(x: MixedSeries, y: MixedSeries) -> ExtInt:
    """Default certification target: sum of the input floors plus 16."""
    return x.valuation_floor() + y.valuation_floor() + 16


def mul(x: Series, y: Series, target_precision: int | None = None) -> Series:
    """Product of two series of the same kind.

    For mixed series each output coefficient is the exact sum over
    window-by-window pairs plus a zero-within-precision remainder whose
    bound covers every pair touching a tail; the coefficient precision
    reports exactly what is certified.  When ``target_precision`` is given,
    any output coefficient certified below it raises
    :class:`PrecisionExhausted`.
    """
    _check_pair(x, y)
    if isinstance(x, EqualCharSeries):
        return _mul_equal(x, y, target_precision)
    return _mul_mixed(x, y, target_precision)


def _mul_equal(
    x: EqualCharSeries, y: EqualCharSeries, target: int | None
) -> EqualCharSeries:
    p = x.prime
    if (not x.coeffs and x.trunc == PLUS_INF) or (not y.coeffs and y.trunc == PLUS_INF):
        return EqualCharSeries.zero(p)
    trunc = min(x.order + y.trunc, y.order + x.trunc)
    total: dict[int, PAdic] = {}
    for i, ci in x.coeffs:
        for j, cj in y.coeffs:
            k = i + j
            if ExtInt(k) >= trunc:
                continue
            prod = ci * cj
            total[k] = total[k] + prod if k in total else prod
    if target is not None:
        for k, c in total.items():
            if c.precision < target:
                raise PrecisionExhausted(
                    f"coefficient {k} certified only modulo p^{c.precision}"
                )
    return EqualCharSeries.from_coeffs(p, total, order=x.order + y.order, trunc=trunc)


def _tail_pairs_bound(x: MixedSeries, y: MixedSeries, k: int) -> ExtInt:
    """Lower bound on the valuation of all products ``x_i * y_{k-i}`` in
    which at least one factor comes from a tail region."""
    bx, by = x.bound_seq(), y.bound_seq()
    fy, fx = y.valuation_floor(), x.valuation_floor()
    best = PLUS_INF

    def scan_left_of(series: MixedSeries, bs: SeqSpec, other: MixedSeries, other_bs: SeqSpec, floor: ExtInt):
        # i runs left through the decaying tail; the partner index moves right
        nonlocal best
        if isinstance(series.left, ZeroTail) or floor == PLUS_INF:
            return
        i = series.lo - 1
        while True:
            j = k - i
            if j > other.hi and isinstance(other.right, ZeroTail):
                break  # every further partner is exactly zero
            own = bs.value_at(i)
            if own + floor >= best:
                break
            term = own + other_bs.value_at(j)
            if term < best:
                best = term
            i -= 1

    def scan_right_of(series: MixedSeries, bs: SeqSpec, other: MixedSeries, other_bs: SeqSpec):
        # i runs right at a constant floor; the partner index moves left
        nonlocal best
        if isinstance(series.right, ZeroTail):
            return
        own = ExtInt(series.right.floor)
        i = series.hi + 1
        while True:
            j = k - i
            if j < other.lo:
                partner = other_bs.value_at(j)
                if isinstance(other.left, ZeroTail) or own + partner >= best:
                    break
            term = own + other_bs.value_at(j)
            if term < best:
                best = term
            i += 1

    scan_left_of(x, bx, y, by, fy)
    scan_left_of(y, by, x, bx, fx)
    scan_right_of(x, bx, y, by)
    scan_right_of(y, by, x, bx)
    # window positions of one factor against tail positions of the other
    for i in range(x.lo, x.hi + 1):
        j = k - i
        if y.lo <= j <= y.hi:
            continue
        term = bx.value_at(i) + by.value_at(j)
        if term < best:
            best = term
    for j in range(y.lo, y.hi + 1):
        i = k - j
        if x.lo <= i <= x.hi:
            continue
        term = bx.value_at(i) + by.value_at(j)
        if term < best:
            best = term
    return best


def _mul_mixed(x: MixedSeries, y: MixedSeries, target: int | None) -> MixedSeries:
    p = x.prime
    conv = minplus_convolve(x.bound_seq(), y.bound_seq())
    lo = min(x.lo + y.lo, conv.window_lo)
    hi = max(x.hi + y.hi, conv.window_hi)
    total: dict[int, PAdic] = {}
    for k in range(lo, hi + 1):
        acc = PAdic.zero(p)
        for i, ci in x.coeffs:
            j = k - i
            if y.lo <= j <= y.hi:
                cj = y._map.get(j)
                if cj is not None:
                    acc = acc + ci * cj
        rem = _tail_pairs_bound(x, y, k)
        if rem != PLUS_INF:
            acc = acc + PAdic.zero_mod(p, rem.n)
        if target is not None and acc.precision < target:
            raise PrecisionExhausted(
                f"coefficient {k} certified only modulo p^{acc.precision}"
            )
        if not acc.is_exact_zero:
            total[k] = acc
    left = _left_from_bound_tail(conv, lo)
    right = _right_from_bound_tail(conv)
    return MixedSeries.from_coeffs(p, total, left=left, right=right, lo=lo, hi=hi)


def _left_from_bound_tail(conv: SeqSpec, lo: int) -> LeftTail:
    t = conv.left
    if isinstance(t, ConstTail):
        if t.value == PLUS_INF:
            return ZeroTail()
        raise PrecisionExhausted("product coefficients do not decay leftwards")
    if t.slope >= 0:
        raise PrecisionExhausted("product coefficients do not decay leftwards")
    # value_at(i) = slope*i + offset for i < lo, rewritten relative to lo
    return LeftValBound(-t.slope, t.offset + t.slope * lo)


def _right_from_bound_tail(conv: SeqSpec) -> RightTail:
    t = conv.right
    if isinstance(t, ConstTail):
        if t.value == PLUS_INF:
            return ZeroTail()
        return RightValBound(t.value.n)
    # inputs carry constant floors on the right, so the convolved bound does too
    raise PrecisionExhausted("product bound has a non-constant right tail")


# ---------------------------------------------------------------------------
# partial sums and valuations


def partial_sum(x: Series, n: int) -> Series:
    """The truncated sum of all terms of degree at most ``n``."""
    if isinstance(x, EqualCharSeries):
        kept = {i: c for i, c in x.coeffs if i <= n}
        trunc = x.trunc if ExtInt(n) >= x.trunc else PLUS_INF
        return EqualCharSeries.from_coeffs(x.prime, kept, order=x.order, trunc=trunc)
    if n >= x.lo:
        # positions above the stored window but at most n come from the right
        # tail and materialise as zero-within-precision coefficients
        kept = {}
        for i in range(x.lo, n + 1):
            c = x.coeff(i)
            if not c.is_exact_zero:
                kept[i] = c
        return MixedSeries.from_coeffs(
            x.prime, kept, left=x.left, right=ZeroTail(), lo=x.lo, hi=max(n, x.lo)
        )
    # the cut lands inside the left tail; keep its guarantee, rebased
    if isinstance(x.left, ZeroTail):
        return MixedSeries.zero(x.prime)
    bound = x.left.bound_at(x.lo, n)
    return MixedSeries.from_coeffs(
        x.prime,
        {n: PAdic.zero_mod(x.prime, bound)},
        left=x.left.rebased(x.lo, n),
        right=ZeroTail(),
        lo=n,
        hi=n,
    )


def tail_remainder(x: Series, n: int) -> Series:
    """The difference ``x - partial_sum(x, n)`` in exact form.

    Generic subtraction cannot see that the materialised tail coefficients
    of the partial sum alias those of ``x``; this builds the complement
    directly, so positions at or below ``n`` are exactly zero.
    """
    if isinstance(x, EqualCharSeries):
        kept = {i: c for i, c in x.coeffs if i > n}
        return EqualCharSeries.from_coeffs(
            x.prime, kept, order=max(x.order, n + 1), trunc=x.trunc
        )
    kept = {i: c for i, c in x.coeffs if i > n}
    lo = n + 1
    for i in range(lo, x.lo):  # former left-tail positions above the cut
        c = x.coeff(i)
        if not c.is_exact_zero:
            kept[i] = c
    return MixedSeries.from_coeffs(
        x.prime, kept, left=ZeroTail(), right=x.right, lo=lo, hi=max(x.hi, lo)
    )


def vF_exponent(x: MixedSeries) -> ValuationResult:
    """The discrete valuation ``inf_i v(x_i)`` of the mixed field.

    Exact when witnessed by an exactly known coefficient strictly below
    every valuation bound; otherwise a flagged lower bound.
    """
    exact_min = PLUS_INF
    bound_min = PLUS_INF
    for _, c in x.coeffs:
        if c.valuation_exact:
            exact_min = min(exact_min, c.val)
        else:
            bound_min = min(bound_min, c.val)
    if isinstance(x.left, LeftValBound):
        bound_min = min(bound_min, ExtInt(x.left.base + x.left.slope))
    if isinstance(x.right, RightValBound):
        bound_min = min(bound_min, ExtInt(x.right.floor))
    if exact_min < bound_min:
        return ValuationResult(exact_min, True)
    if bound_min == PLUS_INF:
        return ValuationResult(exact_min, True)
    return ValuationResult(min(exact_min, bound_min), False)


def rank2_mixed(x: MixedSeries) -> tuple[ExtInt, ExtInt]:
    """The rank-two valuation of the mixed field for the uniformizer p.

    First component: ``inf v(x_i)``.  Second: the least index whose
    coefficient realises it, i.e. lies outside ``p^(v1+1)``.
    """
    v1res = vF_exponent(x)
    if v1res.value == PLUS_INF:
        raise ZeroElement("rank-two valuation of zero is undefined")
    if not v1res.exact:
        raise PrecisionExhausted("first component is only a lower bound")
    v1 = v1res.value
    if isinstance(x.left, LeftValBound):
        if ExtInt(x.left.base + x.left.slope) <= v1:
            raise PrecisionExhausted("left tail could hide the leading index")
    for i in range(x.lo, x.hi + 1):
        c = x._map.get(i)
        if c is None or c.is_exact_zero:
            continue
        if c.valuation_exact:
            if c.val == v1:
                return v1, ExtInt(i)
        elif c.val <= v1:
            raise PrecisionExhausted(
                f"coefficient {i} is only known modulo p^{c.val}"
            )
    raise PrecisionExhausted("no certified witness for the second component")


def rank2_equal(x: EqualCharSeries) -> tuple[ExtInt, ExtInt]:
    """The rank-two valuation of the Laurent field for the uniformizer t:
    order of the first nonzero coefficient, then its p-adic valuation."""
    for i, c in x.coeffs:
        if not c.valuation_exact:
            raise PrecisionExhausted(
                f"leading coefficient {i} is zero within precision"
            )
        return ExtInt(i), c.val
    if x.trunc == PLUS_INF:
        raise ZeroElement("rank-two valuation of zero is undefined")
    raise PrecisionExhausted("series vanishes up to its truncation")
