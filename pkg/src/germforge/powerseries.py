"""Truncated formal power series with exact cyclotomic coefficients.

The truncation order is data: a series knows its coefficients for z^0..z^N
and nothing beyond.  Binary operations return the minimum of the two
truncation orders and never fabricate coefficients the inputs do not
justify.  Coefficients are stored sparsely (zero entries omitted), which is
what the germs handled here look like.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    InsufficientPrecision,
    NonUnitConstantTerm,
    NonUnitDivision,
    NonzeroConstantTerm,
    NotInvertible,
)
from .scalar import CycloScalar, lcm

_ZERO = CycloScalar.zero()


def _coerce_scalar(c) -> CycloScalar:
    if isinstance(c, CycloScalar):
        return c
    if isinstance(c, (int, Fraction)):
        return CycloScalar.from_rational(c)
    raise TypeError(f"cannot use {type(c).__name__} as a series coefficient")


class TruncatedSeries:
    """A power series known exactly through z^trunc."""

    __slots__ = ("_coeffs", "trunc")

    def __init__(self, coeffs: dict[int, CycloScalar], trunc: int):
        # internal: callers must pass a fresh dict with nonzero values only
        object.__setattr__(self, "_coeffs", coeffs)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *_):
        raise AttributeError("TruncatedSeries is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]], trunc: int) -> "TruncatedSeries":
        if trunc < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs: dict[int, CycloScalar] = {}
        for k, c in terms:
            if k < 0:
                raise ValueError("series exponents must be non-negative")
            if k > trunc:
                continue
            c = _coerce_scalar(c)
            prev = coeffs.get(k)
            c = c if prev is None else prev + c
            if c.is_zero:
                coeffs.pop(k, None)
            else:
                coeffs[k] = c
        return cls(coeffs, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls({}, trunc)

    @classmethod
    def constant(cls, c, trunc: int) -> "TruncatedSeries":
        return cls.from_terms([(0, c)], trunc)

    @classmethod
    def identity(cls, trunc: int) -> "TruncatedSeries":
        """The series z."""
        return cls.from_terms([(1, 1)], trunc)

    # -- inspection ----------------------------------------------------------

    def coefficient(self, k: int) -> CycloScalar:
        if k > self.trunc:
            raise InsufficientPrecision(
                f"coefficient of z^{k} requested beyond truncation {self.trunc}"
            )
        return self._coeffs.get(k, _ZERO)

    def items(self) -> Iterator[tuple[int, CycloScalar]]:
        return iter(sorted(self._coeffs.items()))

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def order(self) -> int | None:
        """Lowest exponent with a nonzero coefficient; None if zero to trunc."""
        return min(self._coeffs) if self._coeffs else None

    def truncated(self, k: int) -> "TruncatedSeries":
        if k >= self.trunc:
            return self
        return TruncatedSeries({e: c for e, c in self._coeffs.items() if e <= k}, k)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.trunc, other.trunc)
        out = {e: c for e, c in self._coeffs.items() if e <= t}
        for e, c in other._coeffs.items():
            if e <= t:
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return TruncatedSeries(out, t)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries({e: -c for e, c in self._coeffs.items()}, self.trunc)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = min(self.trunc, other.trunc)
        out = _mul_dicts(self._coeffs, other._coeffs, t)
        return TruncatedSeries(out, t)

    def scale(self, c) -> "TruncatedSeries":
        c = _coerce_scalar(c)
        if c.is_zero:
            return TruncatedSeries.zero(self.trunc)
        return TruncatedSeries({e: a * c for e, a in self._coeffs.items()}, self.trunc)

    def derivative(self) -> "TruncatedSeries":
        if self.trunc < 1:
            raise InsufficientPrecision("cannot differentiate a series known only at z^0")
        out = {e - 1: c * e for e, c in self._coeffs.items() if e >= 1}
        return TruncatedSeries(out, self.trunc - 1)

    def pow_int(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("pow_int takes non-negative exponents")
        result = TruncatedSeries.constant(1, self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- reciprocal / composition / inversion ---------------------------------

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse: self * result = 1 up to trunc."""
        c0 = self._coeffs.get(0)
        if c0 is None or c0.is_zero:
            raise NonUnitConstantTerm("reciprocal needs a nonzero constant term")
        t = self.trunc
        inv0 = c0.inverse()
        out: dict[int, CycloScalar] = {0: inv0}
        tail = [(e, c) for e, c in self._coeffs.items() if 1 <= e <= t]
        for k in range(1, t + 1):
            acc = _ZERO
            for e, c in tail:
                if e > k:
                    continue
                r = out.get(k - e)
                if r is not None:
                    acc = acc + c * r
            if not acc.is_zero:
                out[k] = -(acc * inv0)
        return TruncatedSeries({e: c for e, c in out.items() if not c.is_zero}, t)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner); the inner series must vanish at 0."""
        if inner._coeffs.get(0) is not None:
            raise NonzeroConstantTerm("inner series must have zero constant term")
        t = min(self.trunc, inner.trunc)
        out = _compose_dicts(self._coeffs, inner._coeffs, t)
        return TruncatedSeries(out, t)

    def comp_inverse(self) -> "TruncatedSeries":
        """Compositional inverse g with self(g) = g(self) = z up to trunc.

        Coefficients come from the Lagrange inversion formula
        g_n = [z^(n-1)] (z/f)^n / n, with the powers of z/f accumulated
        incrementally; everything stays exact.
        """
        if self._coeffs.get(0) is not None:
            raise NotInvertible("compositional inverse needs f(0) = 0")
        f1 = self._coeffs.get(1)
        if f1 is None or f1.is_zero:
            raise NotInvertible("compositional inverse needs f'(0) != 0")
        t = self.trunc
        shifted = TruncatedSeries({e - 1: c for e, c in self._coeffs.items()}, t - 1)
        u = shifted.reciprocal()._coeffs  # z/f, a unit, known to t-1
        g: dict[int, CycloScalar] = {}
        upow = dict(u)
        for n in range(1, t + 1):
            if n > 1:
                upow = _mul_dicts(upow, u, t - 1)
            c = upow.get(n - 1)
            if c is not None and not c.is_zero:
                g[n] = c * Fraction(1, n)
        return TruncatedSeries(g, t)

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.eq_up_to(other, min(self.trunc, other.trunc))

    def eq_up_to(self, other: "TruncatedSeries", k: int) -> bool:
        """Exact agreement of all coefficients of z^0..z^k."""
        if k > self.trunc or k > other.trunc:
            raise InsufficientPrecision(
                f"comparison to order {k} exceeds truncation"
            )
        mine = {e: c for e, c in self._coeffs.items() if e <= k}
        theirs = {e: c for e, c in other._coeffs.items() if e <= k}
        if set(mine) != set(theirs):
            return False
        return all(mine[e] == theirs[e] for e in mine)

    def __hash__(self):
        return hash((self.trunc, tuple(sorted(self._coeffs))))

    def __repr__(self):
        from .render import series_to_str

        return f"TruncatedSeries({series_to_str(self)})"

    # -- serialization hook -------------------------------------------------

    def common_conductor(self) -> int:
        n = 1
        for c in self._coeffs.values():
            n = lcm(n, c.conductor)
        return n


# ---------------------------------------------------------------------------
# dict-level kernels (target truncation passed explicitly)


def _mul_dicts(a: dict[int, CycloScalar], b: dict[int, CycloScalar], t: int) -> dict[int, CycloScalar]:
    out: dict[int, CycloScalar] = {}
    for i, x in a.items():
        if i > t:
            continue
        for j, y in b.items():
            k = i + j
            if k > t:
                continue
            cur = out.get(k)
            cur = x * y if cur is None else cur + x * y
            out[k] = cur
    return {k: c for k, c in out.items() if not c.is_zero}


def _compose_dicts(f: dict[int, CycloScalar], g: dict[int, CycloScalar], t: int) -> dict[int, CycloScalar]:
    # Horner evaluation; g has no constant term
    if not f:
        return {}
    res: dict[int, CycloScalar] = {}
    for k in range(max(f), -1, -1):
        if res:
            res = _mul_dicts(res, g, t)
        c = f.get(k)
        if c is not None and k <= t:
            cur = res.get(0)
            cur = c if cur is None else cur + c
            if cur.is_zero:
                res.pop(0, None)
            else:
                res[0] = cur
    return res


def exact_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """num / den, cancelling a shared power of z exactly when den(0) = 0.

    Legal when den is a unit, or when every term of num is divisible by the
    lowest term of den; the cancelled power reduces the result truncation.
    """
    if den.is_zero:
        raise NonUnitDivision("division by a series that is zero to truncation")
    s = den.order()
    if s == 0:
        return num * den.reciprocal()
    t = min(num.trunc, den.trunc)
    if not num.is_zero and num.order() < s:
        raise NonUnitDivision(
            f"cannot divide: numerator has a term below z^{s}"
        )
    shifted_num = TruncatedSeries(
        {e - s: c for e, c in num._coeffs.items() if e <= t}, t - s
    )
    shifted_den = TruncatedSeries(
        {e - s: c for e, c in den._coeffs.items() if e <= t}, t - s
    )
    return shifted_num * shifted_den.reciprocal()


def ring_arith(f: TruncatedSeries, g: TruncatedSeries | None, op: str) -> TruncatedSeries:
    """Dispatch on one of add|sub|mul|derivative (derivative ignores g)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "derivative":
        return f.derivative()
    raise ValueError(f"unknown ring operation {op!r}")
