"""Group operations on invertible germs at the origin.

A germ is a truncated series with f(0) = 0 and f'(0) != 0, under
composition.  Everything here is exact up to the stated truncation order:
claims like "has order n" always mean "up to truncation".
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InsufficientPrecision,
    NotAGerm,
    NotPeriodic,
    ScalarRootUnavailable,
)
from .powerseries import TruncatedSeries
from .scalar import CycloScalar, detect_root_of_unity, nth_root

_ZERO = CycloScalar.zero()
_ONE = CycloScalar.one()


class Germ:
    """An invertible series germ: zero constant term, nonzero multiplier."""

    __slots__ = ("series",)

    series: TruncatedSeries

    def __init__(self, series: TruncatedSeries):
        if series.trunc < 1:
            raise NotAGerm("a germ needs truncation order at least 1")
        if not series.coefficient(0).is_zero:
            raise NotAGerm("a germ must vanish at the origin")
        if series.coefficient(1).is_zero:
            raise NotAGerm("a germ needs a nonzero linear coefficient")
        object.__setattr__(self, "series", series)

    def __setattr__(self, *_):
        raise AttributeError("Germ is immutable")

    @classmethod
    def from_terms(cls, terms, trunc: int) -> "Germ":
        return cls(TruncatedSeries.from_terms(terms, trunc))

    @classmethod
    def identity(cls, trunc: int) -> "Germ":
        return cls(TruncatedSeries.identity(trunc))

    @classmethod
    def linear(cls, c, trunc: int) -> "Germ":
        """The map c*z."""
        return cls.from_terms([(1, c)], trunc)

    @property
    def trunc(self) -> int:
        return self.series.trunc

    def coefficient(self, k: int) -> CycloScalar:
        return self.series.coefficient(k)

    def compose(self, other: "Germ") -> "Germ":
        return Germ(self.series.compose(other.series))

    def inverse(self) -> "Germ":
        return Germ(self.series.comp_inverse())

    def truncated(self, k: int) -> "Germ":
        return Germ(self.series.truncated(k))

    def is_identity(self) -> bool:
        """True when equal to z up to truncation."""
        return self.series == TruncatedSeries.identity(self.trunc)

    def __eq__(self, other):
        if not isinstance(other, Germ):
            return NotImplemented
        return self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def __repr__(self):
        from .render import series_to_str

        return f"Germ({series_to_str(self.series)})"


def multiplier(f: Germ) -> CycloScalar:
    """The linear coefficient f'(0); multiplicative under composition."""
    return f.series.coefficient(1)


def conjugate(h: Germ, f: Germ) -> Germ:
    """h^(-1) o f o h at the common truncation."""
    return h.inverse().compose(f).compose(h)


def iterate(f: Germ, n: int) -> Germ:
    """n-fold composition power; n = 0 gives the identity, n < 0 inverts."""
    if n == 0:
        return Germ.identity(f.trunc)
    if n < 0:
        return iterate(f.inverse(), -n)
    result = None
    base = f
    while n:
        if n & 1:
            result = base if result is None else result.compose(base)
        n >>= 1
        if n:
            base = base.compose(base)
    return result


def order_of(f: Germ, bound: int) -> int | None:
    """Least n <= bound with f^n = z up to truncation, if any.

    The multiplier of a periodic germ is a root of unity whose order divides
    the period, so only those multiples are tested.
    """
    if bound < 1:
        raise ValueError("order bound must be positive")
    rou = detect_root_of_unity(multiplier(f))
    if rou is None:
        return None
    step = rou.order
    if step > bound:
        return None
    power = iterate(f, step)
    cur = power
    n = step
    while n <= bound:
        if cur.is_identity():
            return n
        n += step
        if n <= bound:
            cur = cur.compose(power)
    return None


def averaging_linearizer(g: Germ, delta: int) -> Germ:
    """A germ h with conjugate(h, g) = m(g) * z, for g of order delta.

    Built from the order-delta average sum(g^j / beta^j) / delta, whose
    functional equation A o g = beta * A turns g into the rotation beta*z in
    the coordinate w = A(z); the returned germ is the inverse of A so that
    the package's conjugation convention lands on the rotation.
    """
    if delta < 1:
        raise NotPeriodic("order must be positive")
    beta = multiplier(g)
    rou = detect_root_of_unity(beta)
    if rou is None or delta % rou.order:
        raise NotPeriodic(
            "multiplier is not a root of unity of order dividing the claimed period"
        )
    beta_inv = beta.inverse()
    acc = TruncatedSeries.identity(g.trunc)
    cur = Germ.identity(g.trunc)
    weight = _ONE
    for _ in range(delta - 1):
        cur = cur.compose(g)
        weight = weight * beta_inv
        acc = acc + cur.series.scale(weight)
    if not cur.compose(g).is_identity():
        raise NotPeriodic(f"germ is not of order {delta} up to truncation {g.trunc}")
    avg = acc.scale(Fraction(1, delta))
    return Germ(avg.comp_inverse())


@dataclass(frozen=True)
class ConjugacyWitness:
    """A conjugating germ h with conjugate(h, f) = g, plus its provenance."""

    conjugator: Germ
    verified_to: int
    resonant_choices: list[tuple[int, CycloScalar]] = field(default_factory=list)


def solve_conjugacy(f: Germ, g: Germ) -> ConjugacyWitness | None:
    """A witness h with conjugate(h, f) = g up to truncation, or None.

    None means the two germs are formally non-conjugate as far as the
    truncations can certify.  When the germs are conjugate but the exact
    scalar field lacks a root needed to write a witness down,
    ScalarRootUnavailable is raised instead (the yes/no question itself is
    answered by `classify.formally_conjugate`, which needs no witness).
    """
    t = min(f.trunc, g.trunc)
    mf, mg = multiplier(f), multiplier(g)
    if mf != mg:
        return None
    if f.truncated(t) == g.truncated(t):
        return ConjugacyWitness(Germ.identity(t), t)
    rou = detect_root_of_unity(mf)
    if rou is None:
        h = _linearizing_germ(f, t).compose(_linearizing_germ(g, t).inverse())
        return _verified(h, f, g, t, [])
    s = rou.order
    if s == 1:
        if f.is_identity() or g.is_identity():
            return None  # identity is conjugate only to itself
        return _solve_tangent(f, g, t)
    fs, gs = iterate(f, s), iterate(g, s)
    if fs.is_identity() != gs.is_identity():
        return None
    if fs.is_identity():
        hf = averaging_linearizer(f, s)
        hg = averaging_linearizer(g, s)
        return _verified(hf.compose(hg.inverse()), f, g, t, [])
    sub = solve_conjugacy(fs, gs)
    if sub is None:
        return None
    # a conjugation between the s-th powers already conjugates f to g; the
    # sub-witness carries an undetermined zero-filled tail above t - p, and
    # with a non-tangent multiplier that tail surfaces at its own degree,
    # so the transfer is certified to t - p only
    from .classify import p_invariant

    w = sub.conjugator
    verified = min(sub.verified_to, t - p_invariant(fs))
    if conjugate(w, f).truncated(verified) != g.truncated(verified):
        raise ArithmeticError(
            "internal consistency failure: power-conjugator did not transfer"
        )
    return ConjugacyWitness(w, verified, sub.resonant_choices)


def _verified(h: Germ, f: Germ, g: Germ, t: int, resonant) -> ConjugacyWitness:
    if conjugate(h, f).truncated(t) != g.truncated(t):
        raise ArithmeticError("internal consistency failure: witness does not verify")
    return ConjugacyWitness(h, t, resonant)


def _leading_data(f: Germ):
    # first exponent above 1 with nonzero coefficient, and that coefficient
    for e, c in f.series.items():
        if e >= 2:
            return e - 1, c
    return None, None


def _solve_tangent(f: Germ, g: Germ, t: int) -> ConjugacyWitness | None:
    """Term-by-term conjugator for multiplier-1 germs, resonant choice zeroed."""
    from .classify import a_invariant, p_invariant

    p = p_invariant(f)
    if p_invariant(g) != p:
        return None
    if t < 2 * p + 2:
        raise InsufficientPrecision(
            f"need truncation at least {2 * p + 2} to settle conjugacy (have {t})"
        )
    if a_invariant(f) != a_invariant(g):
        return None
    fp1 = f.coefficient(p + 1)
    gp1 = g.coefficient(p + 1)
    mu = nth_root(gp1 / fp1, p)
    if mu is None:
        raise ScalarRootUnavailable(
            "no cyclotomic p-th root of the leading-coefficient ratio; "
            "pre-conjugate one germ by a linear map"
        )
    h_terms: dict[int, CycloScalar] = {1: mu}
    resonant: list[tuple[int, CycloScalar]] = []
    fs, gs = f.series, g.series
    for k in range(2, t - p + 1):
        d = k + p
        h = Germ(TruncatedSeries(dict(h_terms), t))
        residual = fs.compose(h.series) - h.series.compose(gs)
        c = residual.coefficient(d)
        if k == p + 1:
            # the one resonant degree: coefficient is free, equation is the
            # invariant-matching constraint and must already hold
            if not c.is_zero:
                raise ArithmeticError(
                    "internal consistency failure: resonant constraint violated "
                    "with matching invariants"
                )
            resonant.append((k, _ZERO))
            continue
        slope = gp1 * (p + 1 - k)
        hk = -(c / slope)
        if not hk.is_zero:
            h_terms[k] = hk
    h = Germ(TruncatedSeries(h_terms, t))
    return _verified(h, f, g, t, resonant)


def _linearizing_germ(f: Germ, t: int) -> Germ:
    """h with conjugate(h, f) = m(f) * z, for a non-root-of-unity multiplier."""
    mu = multiplier(f)
    rot = TruncatedSeries.from_terms([(1, mu)], t)
    h_terms: dict[int, CycloScalar] = {1: _ONE}
    fs = f.series
    mu_pow = mu  # mu^d tracked incrementally
    for d in range(2, t + 1):
        mu_pow = mu_pow * mu
        h = TruncatedSeries(dict(h_terms), t)
        residual = fs.compose(h) - h.compose(rot)
        c = residual.coefficient(d)
        hd = c / (mu_pow - mu)
        if not hd.is_zero:
            h_terms[d] = hd
    return Germ(TruncatedSeries(h_terms, t))


def random_germ(
    rng: random.Random,
    trunc: int,
    multiplier_value=1,
    max_degree: int | None = None,
    density: float = 0.7,
) -> Germ:
    """A reproducible pseudo-random germ with small rational coefficients."""
    top = trunc if max_degree is None else min(max_degree, trunc)
    terms: list[tuple[int, object]] = [(1, multiplier_value)]
    for e in range(2, top + 1):
        if rng.random() < density:
            num = rng.randint(-3, 3)
            if num:
                terms.append((e, Fraction(num, rng.choice((1, 1, 2)))))
    return Germ.from_terms(terms, trunc)
