"""Executable acceptance checks for the whole engine.

Each criterion is a function that raises AssertionError with a readable
message on failure and returns a one-line detail string on success.  The
CLI `selftest` subcommand runs them all and prints one PASS/FAIL line per
criterion; the pytest suite wraps the same functions one test each.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import FormalFlow, a_invariant, model_flow, p_invariant
from .errors import UnrealizableOrder
from .germs import (
    Germ,
    averaging_linearizer,
    conjugate,
    iterate,
    multiplier,
    order_of,
    random_germ,
    solve_conjugacy,
)
from .powerseries import TruncatedSeries
from .reversal import (
    example_family,
    find_reverser,
    is_reversible,
    reversal_factorization,
    reverser_check,
    reverser_orders,
    symmetric_form_check,
)
from .scalar import CycloScalar, primitive_root

_MULTIPLIER_POOL = (1, -1, 2, Fraction(1, 2))


def _rotation(n: int, trunc: int, power: int = 1) -> Germ:
    return Germ.linear(primitive_root(n, power), trunc)


# --- independent residue oracle (dense rational arithmetic, no series code)


def _oracle_residue_invariant(coeffs: dict[int, Fraction], trunc: int) -> Fraction:
    """-(z^-1 coefficient of 1/(f - z)) for a rational germ, from scratch."""
    diff = {e: Fraction(c) for e, c in coeffs.items() if e >= 2}
    p = min(diff) - 1
    width = trunc - (p + 1)
    u = [diff.get(p + 1 + k, Fraction(0)) for k in range(width + 1)]
    r = [Fraction(0)] * (width + 1)
    r[0] = 1 / u[0]
    for k in range(1, width + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if u[j]:
                acc += u[j] * r[k - j]
        r[k] = -acc / u[0]
    return -r[p]


# --- criteria ---------------------------------------------------------------


def criterion_model_reversal() -> str:
    """Models at every contact order are reversed by the half-turn rotation."""
    for p in range(1, 7):
        t = 4 * p + 3
        f = model_flow(p, 1, t)
        rot = _rotation(2 * p, t)
        assert reverser_check(f, rot), f"rotation fails to reverse the model at p={p}"
        a = a_invariant(f)
        assert a == Fraction(p + 1, 2), f"model a-invariant {a} != {(p + 1) / 2} at p={p}"
    return "p=1..6 at truncation 4p+3: rotation reverses, a = (p+1)/2"


def criterion_reversibility_criterion() -> str:
    """Residue criterion: conjugated models pass; fixed counterexamples fail."""
    rng = random.Random(20260810)
    for i in range(20):
        p = (1, 2, 3)[i % 3]
        t = 4 * p + 3
        h = random_germ(rng, t, multiplier_value=rng.choice(_MULTIPLIER_POOL))
        f = conjugate(h, model_flow(p, 1, t))
        assert is_reversible(f).formally_reversible, f"conjugated model not reversible (i={i}, p={p})"
    fixed = [
        ("z+z^2", {2: Fraction(1)}, Fraction(0)),
        ("z+z^3", {3: Fraction(1)}, Fraction(0)),
        ("z+z^2+z^3", {2: Fraction(1), 3: Fraction(1)}, Fraction(1)),
    ]
    for label, tail, expected_a in fixed:
        t = 12
        coeffs = {1: Fraction(1), **tail}
        oracle_a = _oracle_residue_invariant(coeffs, t)
        assert oracle_a == expected_a, f"oracle a({label}) = {oracle_a} != {expected_a}"
        f = Germ.from_terms(list(coeffs.items()), t)
        assert a_invariant(f) == oracle_a, f"a_invariant({label}) disagrees with oracle"
        verdict = is_reversible(f).formally_reversible
        assert not verdict, (
            f"is_reversible({label}) = {verdict}, expected False "
            f"(oracle a = {oracle_a}, p = {p_invariant(f)})"
        )
    return "20 conjugated models reversible; z+z^2, z+z^3, z+z^2+z^3 all refused"


def criterion_order_spectrum() -> str:
    """Realizable reverser orders, and constructions hitting each of them."""
    expected = {
        1: {2},
        2: {4},
        3: {2, 6},
        4: {8},
        6: {4, 12},
        12: {8, 24},
    }
    for p, orders in expected.items():
        got = set(reverser_orders(p))
        assert got == orders, f"reverser_orders({p}) = {sorted(got)} != {sorted(orders)}"
    for p in (1, 2, 3, 6):
        f = model_flow(p, 1, 4 * p + 3)
        for target in sorted(reverser_orders(p)):
            g = find_reverser(f, target)
            got = order_of(g, 2 * p)
            assert got == target, f"reverser order {got} != target {target} at p={p}"
    return "spectra match for p in {1,2,3,4,6,12}; every target order realized"


def _sample_reversers() -> list[tuple[int, Germ]]:
    pairs = [(p, _rotation(2 * p, 4 * p + 3)) for p in range(1, 7)]
    for p in (1, 2, 3, 6):
        f = model_flow(p, 1, 4 * p + 3)
        for target in sorted(reverser_orders(p)):
            pairs.append((p, find_reverser(f, target)))
    return pairs


def criterion_multiplier_obstruction() -> str:
    """Reversers satisfy m(g)^p = -1; multiplier-1 germs never reverse."""
    for p, g in _sample_reversers():
        assert multiplier(g) ** p == -1, f"reverser multiplier^{p} != -1"
    rng = random.Random(4242)
    checked = 0
    while checked < 50:
        f = random_germ(rng, 8)
        if f.is_identity():
            continue
        g = random_germ(rng, 8)
        assert not reverser_check(f, g), "a multiplier-1 germ reversed a tangent germ"
        checked += 1
    return "m(g)^p = -1 on 16 constructed reversers; 50 random tangent pairs refused"


def criterion_basic_factorization() -> str:
    """h = g o f squares to g^2 and recovers f = g^(-1) o h."""
    for p in range(1, 7):
        t = 4 * p + 3
        f = model_flow(p, 1, t)
        g = _rotation(2 * p, t)
        h = reversal_factorization(f, g)  # verifies both identities internally
        assert h.compose(h) == g.compose(g)
    t = 12
    f = Germ(TruncatedSeries.from_terms([(k, (-1) ** (k + 1)) for k in range(1, t + 1)], t))
    g = Germ.linear(-1, t)
    h = reversal_factorization(f, g)
    expected = Germ.from_terms([(k, (-1) ** k) for k in range(1, t + 1)], t)
    assert h == expected, "companion of z/(1+z) under -z is not -z/(1+z)"
    assert iterate(h, 2).is_identity(), "companion is not an involution"
    return "identities hold on all model pairs; -z/(1+z) companion confirmed"


def criterion_flow_laws() -> str:
    """Group laws of the unique formal flow, exactly to truncation."""
    rng = random.Random(606)
    t = 20
    pairs = [  # components cover +-1/2, +-1/3 and 2
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(-1, 2), Fraction(1, 2)),
        (Fraction(1, 3), Fraction(-1, 3)),
        (Fraction(1, 3), Fraction(1, 3)),
        (Fraction(2), Fraction(-1, 2)),
    ]
    for i in range(25):
        f = random_germ(rng, t, max_degree=8)
        if f.is_identity():
            f = Germ.from_terms([(1, 1), (2, 1)], t)
        fl = FormalFlow(f)
        cache: dict[Fraction, Germ] = {}

        def ft(s, fl=fl, cache=cache):
            if s not in cache:
                cache[s] = fl.at(s)
            return cache[s]

        assert ft(Fraction(0)).is_identity(), "flow at time 0 is not the identity"
        assert ft(Fraction(1)) == f, "flow at time 1 does not reproduce the germ"
        half = ft(Fraction(1, 2))
        assert half.compose(half) == f, "half-time flow squared misses the germ"
        for s, u in pairs:
            assert ft(s).compose(ft(u)) == ft(s + u), f"flow law fails at ({s},{u})"
    return "25 random tangent germs at truncation 20: all flow laws exact"


def criterion_squares() -> str:
    """Reversibility of a germ and of its square agree."""
    rng = random.Random(20260810)
    samples: list[Germ] = []
    for i in range(20):
        p = (1, 2, 3)[i % 3]
        t = 4 * p + 3
        h = random_germ(rng, t, multiplier_value=rng.choice(_MULTIPLIER_POOL))
        samples.append(conjugate(h, model_flow(p, 1, t)))
    samples.append(Germ.from_terms([(1, 1), (2, 1)], 12))
    samples.append(Germ.from_terms([(1, 1), (3, 1)], 12))
    samples.append(Germ.from_terms([(1, 1), (2, 1), (3, 1)], 12))
    for f in samples:
        lhs = is_reversible(f).formally_reversible
        rhs = is_reversible(iterate(f, 2)).formally_reversible
        assert lhs == rhs, "verdicts differ between a germ and its square"
    g = Germ.from_terms([(1, -1), (2, 1)], 12)
    rep = is_reversible(g)
    rep_sq = is_reversible(iterate(g, 2))
    assert rep.multiplier_class == "minus_one_general"
    assert rep.formally_reversible == rep_sq.formally_reversible, (
        "multiplier -1 verdict does not match the square's"
    )
    if rep_sq.reverser is not None:
        assert reverser_check(g, rep_sq.reverser)
    return "verdict(f) = verdict(f^2) on 23 samples; -z+z^2 matches its square"


def criterion_twisted_family() -> str:
    """The rotation-commutator family has the advertised invariants."""
    f, mu = example_family("twisted", s=2)
    assert p_invariant(f) == 2, "twisted s=2 contact order is not 2"
    assert mu == Germ.linear(primitive_root(4, 1), mu.trunc), "reverser is not i*z"
    assert reverser_check(f, mu), "twisted reverser fails"
    assert order_of(mu, 8) == 4, "twisted reverser order is not 4"
    assert order_of(iterate(mu, 2), 4) == 2, "square of the reverser is not order 2"
    f4, mu4 = example_family("twisted", s=4)
    assert p_invariant(f4) == 4, "twisted s=4 contact order is not 4"
    assert reverser_orders(4) == frozenset({8}), "order spectrum at p=4 is not {8}"
    for bad in (2, 4, 6):
        try:
            find_reverser(f4, bad)
            raise AssertionError(f"order-{bad} reverser built at contact order 4")
        except UnrealizableOrder:
            pass
    assert order_of(mu4, 16) == 8
    return "s=2: p=2, reverser i*z of order 4, square order 2; s=4: only order 8"


def criterion_averaging() -> str:
    """The order-average turns conjugated rotations back into rotations."""
    rng = random.Random(99)
    t = 12
    ns = (2, 3, 4, 5, 6, 7, 8, 2, 3, 4)
    for n in ns:
        h = random_germ(rng, t, multiplier_value=rng.choice(_MULTIPLIER_POOL))
        g = conjugate(h, _rotation(n, t))
        lin = averaging_linearizer(g, n)
        target = Germ.linear(multiplier(g), t)
        assert conjugate(lin, g) == target, f"averaging failed to linearize at order {n}"
    return "10 conjugated rotations (orders up to 8) linearized exactly"


def criterion_power_reduction() -> str:
    """Conjugacy with a root-of-unity multiplier is settled on powers."""
    t = 15
    seed = Germ.from_terms([(1, primitive_root(3, 1)), (2, 1)], t)
    rng = random.Random(12)
    h1 = random_germ(rng, t, multiplier_value=rng.choice(_MULTIPLIER_POOL))
    h2 = random_germ(rng, t, multiplier_value=rng.choice(_MULTIPLIER_POOL))
    f, g = conjugate(h1, seed), conjugate(h2, seed)
    w = solve_conjugacy(f, g)
    assert w is not None, "conjugates of a common seed reported non-conjugate"
    k = w.verified_to
    assert conjugate(w.conjugator, f).truncated(k) == g.truncated(k), (
        "cube-level witness does not verify on the originals"
    )
    far = solve_conjugacy(Germ.linear(-1, 12), Germ.from_terms([(1, -1), (2, 1)], 12))
    assert far is None, "-z and -z+z^2 wrongly reported conjugate"
    return f"cube-route witness verified to order {k}; -z vs -z+z^2 absent"


def criterion_sign_convention() -> str:
    """The symmetric-shape inverse alternates as (-1)^(k+1) c_k."""
    f = Germ(TruncatedSeries.from_terms([(k, 1) for k in range(1, 13)], 12))
    report = symmetric_form_check(f, 1)
    assert report.symmetric, "z/(1-z) not reversed by -z"
    assert report.support_ok, "support pattern violated"
    for k, ck, dk in report.coefficient_pairs:
        expected = ck if (k + 1) % 2 == 0 else -ck
        assert dk == expected, f"inverse coefficient at k={k} breaks (-1)^(k+1) c_k"
    assert report.inverse_signs_alternate
    return "z/(1-z) with s=1: inverse coefficients equal (-1)^(k+1) c_k"


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


CRITERIA: list[tuple[int, str, object]] = [
    (1, "model reversal", criterion_model_reversal),
    (2, "reversibility criterion", criterion_reversibility_criterion),
    (3, "reverser order spectrum", criterion_order_spectrum),
    (4, "multiplier obstruction", criterion_multiplier_obstruction),
    (5, "reversal factorization", criterion_basic_factorization),
    (6, "flow laws", criterion_flow_laws),
    (7, "squares", criterion_squares),
    (8, "twisted family", criterion_twisted_family),
    (9, "averaging formula", criterion_averaging),
    (10, "power reduction", criterion_power_reduction),
    (11, "sign convention", criterion_sign_convention),
]


def run_selftest() -> list[CriterionResult]:
    results = []
    for number, name, func in CRITERIA:
        try:
            detail = func()
            results.append(CriterionResult(number, name, True, detail))
        except AssertionError as exc:
            results.append(CriterionResult(number, name, False, str(exc)))
    return results
