"""Formal reversibility: decision, reverser construction, order spectrum.

A germ f is reversible when some g conjugates it to its compositional
inverse.  For multiplier 1 the decision reduces to the residue invariant
hitting (p+1)/2; for multiplier -1 it reduces to the square; all other
multipliers are out immediately.  Every verdict here is formal, i.e. about
truncated series: a germ reported reversible is formally reversible, which
is weaker than holomorphic reversibility (the two notions genuinely differ,
and this engine decides only the formal one).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import a_invariant, model_flow, p_invariant
from .errors import (
    BadParameters,
    InsufficientPrecision,
    NotAReverser,
    NotReversible,
    ScalarRootUnavailable,
    UnrealizableOrder,
    WrongMultiplier,
)
from .germs import (
    Germ,
    conjugate,
    iterate,
    multiplier,
    order_of,
    random_germ,
    solve_conjugacy,
)
from .scalar import CycloScalar, divisors, nth_root, primitive_root

_ONE = CycloScalar.one()
_MINUS_ONE = CycloScalar.from_rational(-1)

MULTIPLIER_PLUS_ONE = "plus_one"
MULTIPLIER_MINUS_ONE_INVOLUTION = "minus_one_involution"
MULTIPLIER_MINUS_ONE_GENERAL = "minus_one_general"
MULTIPLIER_OTHER = "other"


@dataclass(frozen=True)
class ReversibilityReport:
    """Classification of a germ with respect to formal reversibility.

    For the minus-one multiplier classes, p and a are the invariants of the
    square (the germ itself is not tangent to the identity).  The order
    spectrum lists the realizable finite orders of reversers; it is left
    empty for involutions and the identity, whose reverser orders are
    unconstrained.
    """

    multiplier_class: str
    p: int | None
    a: CycloScalar | None
    formally_reversible: bool
    strongly_reversible: bool
    reverser: Germ | None
    order_spectrum: frozenset[int]


def reverser_orders(p: int) -> frozenset[int]:
    """All realizable reverser orders at contact order p.

    These are the numbers 2s with s | p and p/s odd; equivalently the
    divisors of 2p that carry the full 2-part of 2p.
    """
    if p < 1:
        raise BadParameters("contact order must be positive")
    return frozenset(2 * s for s in divisors(p) if (p // s) % 2 == 1)


def reverser_check(f: Germ, g: Germ) -> bool:
    """True when conjugate(g, f) equals f^(-1) up to the common truncation."""
    return conjugate(g, f) == f.inverse()


def is_reversible(f: Germ, find_witness: bool = False) -> ReversibilityReport:
    """Formal reversibility verdict with invariants and order spectrum.

    With find_witness=True a reverser germ is additionally constructed when
    the exact scalar field can express one (see find_reverser); the verdict
    itself never depends on witness construction.
    """
    m = multiplier(f)
    if m == _ONE:
        if f.is_identity():
            return ReversibilityReport(
                MULTIPLIER_PLUS_ONE, None, None, True, True,
                Germ.identity(f.trunc), frozenset(),
            )
        p = p_invariant(f)
        a = a_invariant(f)
        reversible = a == Fraction(p + 1, 2)
        strongly = reversible and p % 2 == 1
        witness = _try_witness(f, find_witness and reversible)
        spectrum = reverser_orders(p) if reversible else frozenset()
        return ReversibilityReport(
            MULTIPLIER_PLUS_ONE, p, a, reversible, strongly, witness, spectrum
        )
    if m == _MINUS_ONE:
        if iterate(f, 2).is_identity():
            return ReversibilityReport(
                MULTIPLIER_MINUS_ONE_INVOLUTION, None, None, True, True,
                Germ.identity(f.trunc), frozenset(),
            )
        # non-involution: everything is inherited from the square, whose
        # reversers are exactly the reversers of f itself
        square_report = is_reversible(iterate(f, 2), find_witness=find_witness)
        witness = square_report.reverser
        if witness is not None and not reverser_check(f, witness):
            raise ArithmeticError(
                "internal consistency failure: square reverser does not reverse"
            )
        return ReversibilityReport(
            MULTIPLIER_MINUS_ONE_GENERAL,
            square_report.p,
            square_report.a,
            square_report.formally_reversible,
            False,  # only involutions and odd contact orders are strong
            witness,
            square_report.order_spectrum,
        )
    return ReversibilityReport(
        MULTIPLIER_OTHER, None, None, False, False, None, frozenset()
    )


def _try_witness(f: Germ, wanted: bool) -> Germ | None:
    if not wanted:
        return None
    try:
        return find_reverser(f)
    except ScalarRootUnavailable:
        return None


def find_reverser(f: Germ, target_order: int | None = None) -> Germ:
    """Construct a reverser of f, by default of maximal order.

    Multiplier-1 construction: conjugate f linearly so its leading
    coefficient matches the model map's -1/p, transport f onto the model,
    and pull back the rotation by a primitive 2p-th root of unity (odd
    powers of it realize the smaller admissible orders).  Raises
    ScalarRootUnavailable when the linear normalization needs a p-th root
    the cyclotomic scalars cannot express.
    """
    m = multiplier(f)
    if m == _MINUS_ONE:
        if iterate(f, 2).is_identity():
            return Germ.identity(f.trunc)
        g = find_reverser(iterate(f, 2), target_order)
        if not reverser_check(f, g):
            raise ArithmeticError(
                "internal consistency failure: square reverser does not reverse"
            )
        return g
    if m != _ONE:
        raise NotReversible("germs with multiplier other than +-1 are not reversible")
    if f.is_identity():
        return Germ.identity(f.trunc)
    p = p_invariant(f)
    a = a_invariant(f)
    if a != Fraction(p + 1, 2):
        raise NotReversible(
            f"residue invariant {a} differs from {Fraction(p + 1, 2)}; not reversible"
        )
    orders = reverser_orders(p)
    if target_order is None:
        target_order = 2 * p
    if target_order not in orders:
        raise UnrealizableOrder(
            f"no reverser of order {target_order} exists at contact order {p}; "
            f"realizable orders: {sorted(orders)}"
        )
    mpow = p // (target_order // 2)  # odd by admissibility
    t = f.trunc
    lead = f.coefficient(p + 1)
    c = nth_root(-(Fraction(1, p) / lead), p)
    if c is None:
        raise ScalarRootUnavailable(
            "normalizing the leading coefficient onto the model needs a p-th "
            "root outside the cyclotomic scalars; pre-conjugate linearly"
        )
    scale = Germ.linear(c, t)
    normalized = conjugate(scale, f)
    witness = solve_conjugacy(normalized, model_flow(p, 1, t))
    if witness is None:
        raise ArithmeticError("internal consistency failure: model unreachable")
    u = scale.compose(witness.conjugator)
    rot = Germ.linear(primitive_root(2 * p, mpow), t)
    g = u.compose(rot).compose(u.inverse())
    if not reverser_check(f, g):
        raise ArithmeticError("internal consistency failure: constructed reverser fails")
    return g


def reversal_factorization(f: Germ, g: Germ) -> Germ:
    """The companion h = g o f with h^2 = g^2 and f = g^(-1) o h.

    Defined whenever g reverses f; both identities are verified before
    returning.
    """
    if not reverser_check(f, g):
        raise NotAReverser("factorization needs a verified reverser")
    h = g.compose(f)
    if h.compose(h) != g.compose(g) or g.inverse().compose(h) != f:
        raise ArithmeticError("internal consistency failure: factorization identities")
    return h


@dataclass(frozen=True)
class SymmetricFormReport:
    """Support analysis for the rotationally symmetric shape.

    A germ reversed by the rotation through pi/s supports only exponent 1
    and exponents s*k + p + 1; `inverse_signs_alternate` records that the
    inverse's coefficients at those exponents equal (-1)^(k+1) times the
    germ's own, which is the computed sign convention of this engine.
    """

    symmetric: bool
    support: tuple[int, ...]
    support_ok: bool
    coefficient_pairs: tuple[tuple[int, CycloScalar, CycloScalar], ...]
    inverse_signs_alternate: bool


def symmetric_form_check(f: Germ, s: int) -> SymmetricFormReport:
    """Check whether the rotation z -> zeta_(2s) z reverses f, with report."""
    if multiplier(f) != _ONE:
        raise WrongMultiplier("symmetric form applies to multiplier-1 germs")
    p = p_invariant(f)
    if s < 1 or p % s or (p // s) % 2 == 0:
        raise BadParameters(
            f"need s dividing p = {p} with odd quotient; got s = {s}"
        )
    rot = Germ.linear(primitive_root(2 * s, 1), f.trunc)
    symmetric = reverser_check(f, rot)
    support = tuple(f.series.support())
    allowed = {1} | {s * k + p + 1 for k in range(0, f.trunc)}
    support_ok = all(e in allowed for e in support)
    inv = f.inverse()
    pairs = []
    alternate = True
    k = 1
    while s * k + p + 1 <= f.trunc:
        e = s * k + p + 1
        ck = f.coefficient(e)
        dk = inv.coefficient(e)
        pairs.append((k, ck, dk))
        expected = ck if (k + 1) % 2 == 0 else -ck
        if dk != expected:
            alternate = False
        k += 1
    return SymmetricFormReport(
        symmetric, support, support_ok, tuple(pairs), symmetric and alternate
    )


# ---------------------------------------------------------------------------
# example families


def example_family(kind: str, **params) -> tuple[Germ, Germ]:
    """Built-in reversible pairs (f, g) with g a verified reverser of f.

    kinds:
      model               -- (standard contact-p model, rotation by zeta_2p);
                             params p, trunc (default 4p+3)
      twisted             -- commutator of a rotation of order 2s with
                             z + z^(s+1); params s (even), trunc
      conjugated_random   -- either family pushed through a random germ;
                             params seed plus the base family's
    """
    if kind == "model":
        return _model_pair(**params)
    if kind == "twisted":
        return _twisted_pair(**params)
    if kind == "conjugated_random":
        return _conjugated_pair(**params)
    raise BadParameters(f"unknown example family {kind!r}")


def _model_pair(p: int = 1, trunc: int | None = None) -> tuple[Germ, Germ]:
    if p < 1:
        raise BadParameters("contact order must be positive")
    t = trunc if trunc is not None else 4 * p + 3
    f = model_flow(p, 1, t)
    g = Germ.linear(primitive_root(2 * p, 1), t)
    return f, g


def _twisted_pair(s: int = 2, trunc: int | None = None) -> tuple[Germ, Germ]:
    if s < 2 or s % 2:
        raise BadParameters("the twisted family needs an even order parameter s")
    t = trunc if trunc is not None else 4 * s + 3
    mu = Germ.linear(primitive_root(2 * s, 1), t)
    phi = Germ.from_terms([(1, 1), (s + 1, 1)], t)
    h = phi.inverse().compose(mu).compose(phi)
    f = mu.inverse().compose(h)
    _validate_twisted(f, mu, h, s, t)
    return f, mu


def _validate_twisted(f: Germ, mu: Germ, h: Germ, s: int, t: int) -> None:
    if p_invariant(f) != s:
        raise ArithmeticError("internal consistency failure: twisted contact order")
    if order_of(mu, 2 * s) != 2 * s:
        raise ArithmeticError("internal consistency failure: twisted rotation order")
    gg = mu.compose(mu)
    if gg != h.compose(h) or order_of(gg, s) != s:
        raise ArithmeticError("internal consistency failure: twisted square")


def _conjugated_pair(
    base: str = "model", seed: int = 0, **params
) -> tuple[Germ, Germ]:
    f0, g0 = example_family(base, **params)
    rng = random.Random(seed)
    h = random_germ(rng, f0.trunc, multiplier_value=rng.choice((1, -1, 2, Fraction(1, 2))))
    return conjugate(h, f0), conjugate(h, g0)
