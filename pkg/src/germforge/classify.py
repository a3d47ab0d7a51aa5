"""Formal invariants, model maps, flows, and the formal conjugacy decision.

For a tangent-to-identity germ the two formal conjugacy invariants are the
contact order p (first nonlinear term at z^(p+1)) and the residue-type
invariant a, read off here as minus the z^(-1) coefficient of 1/(f(z)-z).
Together they decide formal conjugacy; flows and centralizers below are the
formal (truncated) versions, with every claim exact up to truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParameters,
    IdentityToTruncation,
    InsufficientPrecision,
    WrongMultiplier,
)
from .germs import Germ, conjugate, iterate, multiplier, solve_conjugacy
from .powerseries import TruncatedSeries
from .scalar import CycloScalar, detect_root_of_unity, nth_root, primitive_root

_ZERO = CycloScalar.zero()
_ONE = CycloScalar.one()


@dataclass(frozen=True)
class ParabolicInvariants:
    """Contact order p, leading coefficient, and the residue invariant a."""

    p: int
    lead: CycloScalar
    a: CycloScalar


def p_invariant(f: Germ) -> int:
    """The contact order: least p with the z^(p+1) coefficient nonzero."""
    if multiplier(f) != _ONE:
        raise WrongMultiplier("contact order is defined for multiplier-1 germs")
    for e, _ in f.series.items():
        if e >= 2:
            return e - 1
    raise IdentityToTruncation(
        f"germ equals z up to truncation {f.trunc}; no contact order"
    )


def a_invariant(f: Germ) -> CycloScalar:
    """The second formal conjugacy invariant, via the iterative residue.

    Computed as -(residue of 1/(f(z)-z)): with f - z = z^(p+1) u(z) for a
    unit u, the residue is the z^p coefficient of 1/u.  Agrees with the
    z^(2p+1) coefficient after normalizing f to z + z^(p+1) + a z^(2p+1).
    """
    p = p_invariant(f)
    if f.trunc < 2 * p + 2:
        raise InsufficientPrecision(
            f"a-invariant needs truncation at least {2 * p + 2} (have {f.trunc})"
        )
    diff = f.series - TruncatedSeries.identity(f.trunc)
    unit = TruncatedSeries(
        {e - (p + 1): c for e, c in diff._coeffs.items()}, f.trunc - (p + 1)
    )
    return -(unit.reciprocal().coefficient(p))


def invariants_of(f: Germ) -> ParabolicInvariants:
    p = p_invariant(f)
    return ParabolicInvariants(p, f.coefficient(p + 1), a_invariant(f))


def model_flow(p: int, t, trunc: int) -> Germ:
    """The time-t map z (1 + t z^p)^(-1/p) of the standard contact-p flow.

    Expanded by the binomial series, so every coefficient is an exact
    polynomial in t.  t = 1 gives the standard model map itself.
    """
    if p < 1:
        raise BadParameters("contact order must be positive")
    if trunc < p + 1:
        raise BadParameters(f"model flow needs truncation at least {p + 1}")
    if not isinstance(t, CycloScalar):
        t = CycloScalar.from_rational(t)
    terms: list[tuple[int, CycloScalar]] = [(1, _ONE)]
    binom = Fraction(1)
    tpow = _ONE
    alpha = Fraction(-1, p)
    k = 0
    while (k + 1) * p + 1 <= trunc:
        binom = binom * Fraction(alpha - k) / (k + 1)
        tpow = tpow * t
        k += 1
        terms.append((k * p + 1, tpow * binom))
    return Germ.from_terms(terms, trunc)


# ---------------------------------------------------------------------------
# iterative logarithm and flows


def _apply_derivation(v: dict, g: dict, t: int) -> dict:
    """v * dg/dz as raw dicts, exact to z^t when order(v) covers the loss."""
    out: dict[int, CycloScalar] = {}
    for i, a in v.items():
        for j, b in g.items():
            if j < 1:
                continue
            k = i + j - 1
            if k > t:
                continue
            term = a * b * j
            cur = out.get(k)
            cur = term if cur is None else cur + term
            out[k] = cur
    return {k: c for k, c in out.items() if not c.is_zero}


def _exp_derivation(v: dict, t: int) -> dict:
    """Image of z under exp of the derivation v d/dz, to order t.

    Terms are (v d/dz)^k (z) / k!; each application raises the valuation by
    at least order(v) - 1 >= 1, so the sum is finite in the truncated ring.
    """
    acc: dict[int, CycloScalar] = {1: _ONE}
    term: dict[int, CycloScalar] = {1: _ONE}
    k = 0
    while term:
        k += 1
        term = _apply_derivation(v, term, t)
        term = {e: c / k for e, c in term.items()}
        for e, c in term.items():
            cur = acc.get(e)
            cur = c if cur is None else cur + c
            if cur.is_zero:
                acc.pop(e, None)
            else:
                acc[e] = cur
    return acc


def iterative_log(f: Germ) -> TruncatedSeries:
    """The generator v of the unique formal flow through f.

    v has valuation p+1 and exp of the derivation v d/dz reproduces f up to
    truncation.  The bulk of v comes from the triangular linear system
    v(f(z)) = f'(z) v(z), which pins each coefficient from precomputed
    powers of f; the last p coefficients, invisible to that system at this
    truncation, are completed by residual correction against exp(v).
    """
    if multiplier(f) != _ONE:
        raise WrongMultiplier("iterative logarithm needs multiplier 1")
    t = f.trunc
    fd = dict(f.series._coeffs)
    diff_order = min((e for e in fd if e >= 2), default=None)
    if diff_order is None:
        return TruncatedSeries.zero(t)
    p = diff_order - 1
    lead = fd[p + 1]
    v: dict[int, CycloScalar] = {p + 1: lead}
    top = t - p
    if top >= p + 2:
        powers: dict[int, dict] = {}
        cur = fd
        for j in range(2, top + 1):
            cur = _mul_dicts_trunc(cur, fd, t)
            if j >= p + 1:
                powers[j] = cur
        fprime = {e - 1: c * e for e, c in fd.items() if e >= 1}
        for d in range(2 * p + 2, t + 1):
            k = d - p
            acc = _ZERO
            for j, vj in v.items():
                term = powers[j].get(d, _ZERO) - fprime.get(d - j, _ZERO)
                if not term.is_zero:
                    acc = acc + vj * term
            slope = lead * (k - p - 1)
            vk = -(acc / slope)
            if not vk.is_zero:
                v[k] = vk
    # complete the tail coefficients; each pass gains at least p orders
    for _ in range(p + 3):
        exp_v = _exp_derivation(v, t)
        settled = True
        for e, target in fd.items():
            got = exp_v.get(e, _ZERO)
            delta = target - got
            if not delta.is_zero:
                settled = False
                cur = v.get(e, _ZERO) + delta
                if cur.is_zero:
                    v.pop(e, None)
                else:
                    v[e] = cur
        for e, got in exp_v.items():
            if e not in fd and not got.is_zero:
                settled = False
                cur = v.get(e, _ZERO) - got
                if cur.is_zero:
                    v.pop(e, None)
                else:
                    v[e] = cur
        if settled:
            return TruncatedSeries(v, t)
    raise ArithmeticError("iterative logarithm failed to converge")


def _mul_dicts_trunc(a: dict, b: dict, t: int) -> dict:
    from .powerseries import _mul_dicts

    return _mul_dicts(a, b, t)


class FormalFlow:
    """The whole formal flow through a tangent germ, evaluable at any time.

    Precomputes the derivation powers of the iterative logarithm once, so
    evaluating many time values costs one polynomial combination each.
    """

    def __init__(self, f: Germ):
        self.trunc = f.trunc
        self.generator = iterative_log(f)
        v = dict(self.generator._coeffs)
        self._terms: list[dict] = [{1: _ONE}]
        term = {1: _ONE}
        k = 0
        while term:
            k += 1
            term = _apply_derivation(v, term, self.trunc)
            term = {e: c / k for e, c in term.items()}
            if term:
                self._terms.append(term)

    def at(self, t) -> Germ:
        if not isinstance(t, CycloScalar):
            t = CycloScalar.from_rational(t)
        acc: dict[int, CycloScalar] = {}
        tpow = _ONE
        for k, term in enumerate(self._terms):
            if k:
                tpow = tpow * t
                if tpow.is_zero:
                    break
            for e, c in term.items():
                add = c if k == 0 else c * tpow
                cur = acc.get(e)
                cur = add if cur is None else cur + add
                if cur.is_zero:
                    acc.pop(e, None)
                else:
                    acc[e] = cur
        return Germ(TruncatedSeries(acc, self.trunc))


def flow(f: Germ, t) -> Germ:
    """The time-t map of the unique formal flow through f (multiplier 1).

    flow(f, 0) = z, flow(f, 1) = f, and flow(f, s) o flow(f, t) agrees with
    flow(f, s+t) up to truncation.  Time values live in the scalar field.
    For many times of one germ, build a FormalFlow once instead.
    """
    return FormalFlow(f).at(t)


# ---------------------------------------------------------------------------
# formal centralizer and the conjugacy decision


@dataclass(frozen=True)
class FormalCentralizer:
    """Generators of the formal centralizer of a tangent germ.

    The full centralizer is generated by the flow of `flow_generator`
    together with a finite rotation-like part of order `torsion_order`.
    `torsion_generator` is None when writing the torsion germ down would
    need a scalar root the exact field cannot express (it becomes available
    after a linear change of variable chosen by the caller).
    """

    torsion_order: int
    torsion_generator: Germ | None
    flow_generator: TruncatedSeries


def formal_centralizer(f: Germ) -> FormalCentralizer:
    p = p_invariant(f)  # raises for identity / wrong multiplier
    v = iterative_log(f)
    if p == 1:
        return FormalCentralizer(1, Germ.identity(f.trunc), v)
    gen = _torsion_generator(f, p)
    return FormalCentralizer(p, gen, v)


def _torsion_generator(f: Germ, p: int) -> Germ | None:
    t = f.trunc
    if t < 2 * p + 2:
        raise InsufficientPrecision(
            f"torsion generator needs truncation at least {2 * p + 2} (have {t})"
        )
    lead = f.coefficient(p + 1)
    c = nth_root(lead.inverse(), p)
    if c is None:
        return None
    scale = Germ.linear(c, t)
    normalized = conjugate(scale, f)  # leading coefficient 1
    target = Germ.from_terms(
        [(1, 1), (p + 1, 1), (2 * p + 1, a_invariant(f))], t
    )
    witness = solve_conjugacy(normalized, target)
    if witness is None:  # cannot happen: same (p, a) by construction
        raise ArithmeticError("internal consistency failure: normal form unreachable")
    u = scale.compose(witness.conjugator)
    rot = Germ.linear(primitive_root(p, 1), t)
    return u.compose(rot).compose(u.inverse())


def formally_conjugate(f: Germ, g: Germ) -> bool:
    """Decide formal conjugacy from invariants alone (no witness needed)."""
    mf, mg = multiplier(f), multiplier(g)
    if mf != mg:
        return False
    rou = detect_root_of_unity(mf)
    if rou is None:
        return True  # linearizable; the multiplier is the whole story
    s = rou.order
    if s == 1:
        fid, gid = f.is_identity(), g.is_identity()
        if fid or gid:
            return fid and gid
        if p_invariant(f) != p_invariant(g):
            return False
        return a_invariant(f) == a_invariant(g)
    fs, gs = iterate(f, s), iterate(g, s)
    if fs.is_identity() != gs.is_identity():
        return False
    if fs.is_identity():
        return True  # both periodic with the same multiplier
    return formally_conjugate(fs, gs)
