"""Truncated p-adic numbers over Q_p.

An element is stored as ``p^val * unit`` known modulo ``p^precision``; the
unit is kept reduced modulo ``p^(precision - val)`` with its lowest digit
nonzero.  Two degenerate states exist: the exact zero (``val = precision =
+inf``) and "zero within precision" (``val == precision`` finite, empty
unit), which records an element congruent to 0 modulo ``p^precision`` whose
lower digits are unknown.  In both normal and zero-within-precision states
the ``val`` field is a valid lower bound for the true valuation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompatiblePrimes
from .seqspec import MINUS_INF, PLUS_INF, ExtInt

__all__ = ["PAdic", "ExponentResult", "DEFAULT_RELATIVE_PRECISION"]

DEFAULT_RELATIVE_PRECISION = 32


@dataclass(frozen=True)
class ExponentResult:
    """A value in log-q scale together with an exactness flag.

    ``exact=False`` means the true value is at most ``exponent`` (the flag
    arises from zero-within-precision coefficients or tail bounds only).
    """

    exponent: ExtInt
    exact: bool

    def to_json(self) -> dict:
        return {"exponent": self.exponent.to_json(), "exact": self.exact}


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PAdic:
    prime: int
    val: ExtInt
    unit: int
    precision: ExtInt

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(prime: int) -> "PAdic":
        return PAdic(prime, PLUS_INF, 0, PLUS_INF)

    @staticmethod
    def zero_mod(prime: int, precision: int) -> "PAdic":
        """Zero within precision: congruent to 0 modulo p^precision."""
        return PAdic(prime, ExtInt(precision), 0, ExtInt(precision))

    @staticmethod
    def make(prime: int, val: int, unit: int, precision: int) -> "PAdic":
        """Normalised element ``p^val * unit`` known modulo ``p^precision``."""
        if prime < 2:
            raise ValueError("prime must be at least 2")
        rel = precision - val
        if rel <= 0:
            return PAdic.zero_mod(prime, precision)
        u = unit % prime**rel
        if u == 0:
            return PAdic.zero_mod(prime, precision)
        shift = _vp(u, prime)
        if shift:
            val += shift
            rel = precision - val
            if rel <= 0:
                return PAdic.zero_mod(prime, precision)
            u = (u // prime**shift) % prime**rel
            if u == 0:
                return PAdic.zero_mod(prime, precision)
        return PAdic(prime, ExtInt(val), u, ExtInt(precision))

    @staticmethod
    def from_int(
        n: int, prime: int, rel_precision: int = DEFAULT_RELATIVE_PRECISION
    ) -> "PAdic":
        if n == 0:
            return PAdic.zero(prime)
        v = _vp(n, prime)
        return PAdic.make(prime, 0, n, v + rel_precision)

    @staticmethod
    def from_fraction(
        q: Fraction, prime: int, rel_precision: int = DEFAULT_RELATIVE_PRECISION
    ) -> "PAdic":
        if q == 0:
            return PAdic.zero(prime)
        num, den = q.numerator, q.denominator
        vn = _vp(num, prime)
        vd = _vp(den, prime)
        v = vn - vd
        unum = num // prime**vn
        uden = den // prime**vd
        rel = rel_precision
        inv = pow(uden, -1, prime**rel)
        return PAdic.make(prime, v, (unum * inv) % prime**rel, v + rel)

    @staticmethod
    def pi_power(
        prime: int, k: int, rel_precision: int = DEFAULT_RELATIVE_PRECISION
    ) -> "PAdic":
        """The uniformizer power ``p^k``."""
        return PAdic.make(prime, k, 1, k + rel_precision)

    @staticmethod
    def one(prime: int) -> "PAdic":
        return PAdic.pi_power(prime, 0)

    # -- state predicates ------------------------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.val == PLUS_INF

    @property
    def is_zero_within_precision(self) -> bool:
        return self.unit == 0 and self.val.is_finite

    @property
    def valuation_exact(self) -> bool:
        """Whether ``val`` is the true valuation rather than a lower bound."""
        return not self.is_zero_within_precision

    @property
    def rel_precision(self) -> ExtInt:
        return self.precision - self.val if self.val.is_finite else PLUS_INF

    def digits(self) -> list[int]:
        """Base-p digits of the unit, lowest first, padded to full length."""
        if not self.val.is_finite or self.unit == 0:
            return []
        out = []
        u = self.unit
        for _ in range(int(self.precision - self.val)):
            u, d = divmod(u, self.prime)
            out.append(d)
        return out

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "PAdic") -> None:
        if self.prime != other.prime:
            raise IncompatiblePrimes(f"{self.prime} vs {other.prime}")

    def __add__(self, other: "PAdic") -> "PAdic":
        self._check(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        p = self.prime
        prec = min(self.precision, other.precision).n
        v = min(self.val, other.val).n
        total = 0
        for x in (self, other):
            if x.unit:
                total += x.unit * p ** (x.val.n - v)
        return PAdic.make(p, v, total, prec)

    def __neg__(self) -> "PAdic":
        if not self.val.is_finite or self.unit == 0:
            return self
        rel = int(self.precision - self.val)
        return PAdic(self.prime, self.val, self.prime**rel - self.unit, self.precision)

    def __sub__(self, other: "PAdic") -> "PAdic":
        return self + (-other)

    def __mul__(self, other: "PAdic") -> "PAdic":
        self._check(other)
        p = self.prime
        if self.is_exact_zero or other.is_exact_zero:
            return PAdic.zero(p)
        v = (self.val + other.val).n
        if self.unit == 0 or other.unit == 0:
            # only the valuation lower bounds multiply
            return PAdic.zero_mod(p, v)
        rel = min(int(self.rel_precision), int(other.rel_precision))
        return PAdic.make(p, v, (self.unit * other.unit) % p**rel, v + rel)

    def abs_exponent(self) -> ExponentResult:
        """Exponent e with |x| = q^e, so e = -val; an upper bound when the
        element is only known to vanish modulo ``p^precision``."""
        if self.is_exact_zero:
            return ExponentResult(MINUS_INF, True)
        return ExponentResult(-self.val, self.valuation_exact)

    # -- serialisation -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "valuation": self.val.to_json(),
            "digits": self.digits(),
            "precision": self.precision.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "PAdic":
        p = int(obj["prime"])
        val = ExtInt.from_json(obj["valuation"])
        prec = ExtInt.from_json(obj["precision"])
        if val == PLUS_INF:
            return PAdic.zero(p)
        unit = 0
        for d in reversed(obj["digits"]):
            unit = unit * p + int(d)
        if unit == 0:
            return PAdic.zero_mod(p, val.n)
        return PAdic.make(p, val.n, unit, prec.n)

    def __repr__(self) -> str:
        if self.is_exact_zero:
            return f"0 (p={self.prime})"
        if self.is_zero_within_precision:
            return f"O({self.prime}^{self.val})"
        return f"{self.unit}*{self.prime}^{self.val} + O({self.prime}^{self.precision})"
