"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A :class:`CycloScalar` stores a value of some Q(zeta_n) as a coefficient
vector over the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1), reduced
modulo the n-th cyclotomic polynomial.  Mixed-conductor arithmetic lifts
both operands to the least common multiple conductor; purely rational
results are pulled back down to conductor 1, so equality and hashing are
value-based and exact.

Conductors are capped (default 240) to keep phi(n) bounded; exceeding the
cap raises :class:`~germforge.errors.ConductorCapExceeded` rather than
degrading silently.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

import mpmath

from .errors import (
    ConductorCapExceeded,
    DivisionByZero,
    NotAMultiple,
)

DEFAULT_CONDUCTOR_CAP = 240

_conductor_cap = DEFAULT_CONDUCTOR_CAP


def conductor_cap() -> int:
    return _conductor_cap


def set_conductor_cap(cap: int) -> None:
    """Set the largest allowed conductor (process-wide)."""
    global _conductor_cap
    if cap < 1:
        raise ValueError("conductor cap must be positive")
    _conductor_cap = cap


def _check_cap(n: int) -> None:
    if n > _conductor_cap:
        raise ConductorCapExceeded(
            f"conductor {n} exceeds the configured cap {_conductor_cap}"
        )


# ---------------------------------------------------------------------------
# small number theory helpers (n stays below the conductor cap, so trial
# division is plenty)

def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    t = 1
    for p, e in factorize(n).items():
        t *= (p - 1) * p ** (e - 1)
    return t


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# cyclotomic polynomials and power-reduction tables, cached per conductor

_cache_lock = threading.Lock()
_cyclo_cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}
_power_cache: dict[int, list[tuple[int, ...]]] = {}


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Monic integer coefficients of Phi_n, ascending, length phi(n)+1."""
    with _cache_lock:
        return _cyclotomic_locked(n)


def _cyclotomic_locked(n: int) -> tuple[int, ...]:
    cached = _cyclo_cache.get(n)
    if cached is not None:
        return cached
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1  # x^n - 1
    rem = num
    for d in divisors(n):
        if d < n:
            rem = _poly_div_exact(rem, _cyclotomic_locked(d))
    poly = tuple(rem)
    _cyclo_cache[n] = poly
    return poly


def _power_table(n: int) -> list[tuple[int, ...]]:
    """x^e mod Phi_n for e = 0 .. max(n-1, 2*phi(n)-2), as phi(n)-vectors."""
    with _cache_lock:
        cached = _power_cache.get(n)
        if cached is not None:
            return cached
        phi = len(_cyclotomic_locked(n)) - 1
        top = _cyclotomic_locked(n)[:phi]  # x^phi = -(these) mod Phi_n
        rows: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        rows.append(tuple(cur))
        for _ in range(max(n - 1, 2 * phi - 2)):
            carry = cur[phi - 1]
            nxt = [0] + cur[: phi - 1]
            if carry:
                for k in range(phi):
                    nxt[k] -= carry * top[k]
            cur = nxt
            rows.append(tuple(cur))
        _power_cache[n] = rows
        return rows


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _reduce_mod_cyclotomic(n: int, conv: list[Fraction]) -> list[Fraction]:
    phi = totient(n)
    table = _power_table(n)
    out = list(conv[:phi]) + [_ZERO] * max(0, phi - len(conv))
    for e in range(phi, len(conv)):
        c = conv[e]
        if c:
            row = table[e]
            for k in range(phi):
                if row[k]:
                    out[k] += c * row[k]
    return out


class CycloScalar:
    """An exact element of a cyclotomic field Q(zeta_n).

    Values are immutable.  Arithmetic with ints and Fractions promotes them
    to conductor 1.  Rationally-valued results are normalized down to
    conductor 1; use :meth:`reduced` to minimize the conductor in general.
    """

    __slots__ = ("conductor", "coeffs", "_h")

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_h", None)

    def __setattr__(self, *_):
        raise AttributeError("CycloScalar is immutable")

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(n: int, vec: list[Fraction]) -> "CycloScalar":
        # pull rational values down to conductor 1
        if n > 1 and not any(vec[1:]):
            return CycloScalar(1, (vec[0],))
        return CycloScalar(n, tuple(vec))

    @staticmethod
    def _raw(n: int, vec: list[Fraction]) -> "CycloScalar":
        return CycloScalar(n, tuple(vec))

    @classmethod
    def from_rational(cls, q) -> "CycloScalar":
        return cls(1, (Fraction(q),))

    @classmethod
    def zero(cls) -> "CycloScalar":
        return _SCALAR_ZERO

    @classmethod
    def one(cls) -> "CycloScalar":
        return _SCALAR_ONE

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction if it is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def lift(self, m: int) -> "CycloScalar":
        """The same value represented in Q(zeta_m); m must be a multiple."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise NotAMultiple(f"conductor {n} does not divide {m}")
        _check_cap(m)
        phi_m = totient(m)
        table = _power_table(m)
        step = m // n
        out = [_ZERO] * phi_m
        for j, c in enumerate(self.coeffs):
            if c:
                row = table[j * step]
                for k in range(phi_m):
                    if row[k]:
                        out[k] += c * row[k]
        return CycloScalar._raw(m, out)

    def _common(self, other: "CycloScalar"):
        n = lcm(self.conductor, other.conductor)
        _check_cap(n)
        return n, self.lift(n).coeffs, other.lift(n).coeffs

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "CycloScalar":
        if isinstance(x, CycloScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycloScalar(1, (Fraction(x),))
        return NotImplemented

    def __add__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == other.conductor:
            return CycloScalar._make(
                self.conductor,
                [a + b for a, b in zip(self.coeffs, other.coeffs)],
            )
        n, va, vb = self._common(other)
        return CycloScalar._make(n, [a + b for a, b in zip(va, vb)])

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar._raw(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycloScalar(1, (self.coeffs[0] * other.coeffs[0],))
        if other.conductor == 1:
            q = other.coeffs[0]
            return CycloScalar._make(self.conductor, [a * q for a in self.coeffs])
        if self.conductor == 1:
            q = self.coeffs[0]
            return CycloScalar._make(other.conductor, [q * b for b in other.coeffs])
        n, va, vb = self._common(other)
        phi = len(va)
        conv = [_ZERO] * (2 * phi - 1)
        for i, a in enumerate(va):
            if a:
                for j, b in enumerate(vb):
                    if b:
                        conv[i + j] += a * b
        return CycloScalar._make(n, _reduce_mod_cyclotomic(n, conv))

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        if self.is_zero:
            raise DivisionByZero("cannot invert the zero scalar")
        if self.conductor == 1:
            return CycloScalar(1, (1 / self.coeffs[0],))
        # extended Euclid in Q[x] against the (irreducible) cyclotomic modulus
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = list(self.coeffs)
        s0, s1 = [_ONE], [_ZERO]
        r0, r1 = a, mod
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 = gcd = nonzero constant (modulus irreducible, a != 0)
        r0 = _poly_trim(r0)
        if len(r0) != 1:
            raise ArithmeticError("cyclotomic modulus not coprime to element")
        c = r0[0]
        inv = [x / c for x in s0]
        inv = _reduce_mod_cyclotomic(self.conductor, inv)
        return CycloScalar._make(self.conductor, inv)

    def __truediv__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            q = other.coeffs[0]
            if not q:
                raise DivisionByZero("cannot divide by zero")
            return CycloScalar._make(self.conductor, [a / q for a in self.coeffs])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> "CycloScalar":
        if not isinstance(e, int):
            raise TypeError("scalar powers take integer exponents")
        if e < 0:
            return self.inverse() ** (-e)
        result = _SCALAR_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- equality / canonical form -----------------------------------------

    def __eq__(self, other):
        other = CycloScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        if self.conductor % other.conductor == 0:
            return self.coeffs == other.lift(self.conductor).coeffs
        if other.conductor % self.conductor == 0:
            return other.coeffs == self.lift(other.conductor).coeffs
        n = lcm(self.conductor, other.conductor)
        if n <= _conductor_cap:
            return self.lift(n).coeffs == other.lift(n).coeffs
        return self.reduced()._key() == other.reduced()._key()

    def _key(self):
        return (self.conductor, self.coeffs)

    def __hash__(self):
        h = self._h
        if h is None:
            q = self.as_rational()
            h = hash(q) if q is not None else hash(self.reduced()._key())
            object.__setattr__(self, "_h", h)
        return h

    def reduced(self) -> "CycloScalar":
        """Equal value at the smallest conductor dividing the current one."""
        n = self.conductor
        if n == 1:
            return self
        if not any(self.coeffs[1:]):
            return CycloScalar(1, (self.coeffs[0],))
        for d in divisors(n)[1:-1]:
            sol = _solve_lift(d, n, self.coeffs)
            if sol is not None:
                return CycloScalar._raw(d, sol)
        return self

    # -- display -----------------------------------------------------------

    def complex_approx(self, digits: int) -> tuple[str, str]:
        """Fixed-point decimal strings (re, im) with `digits` decimals.

        Display only; never feeds back into exact decisions.
        """
        if digits < 1:
            raise ValueError("digits must be positive")
        with mpmath.workdps(digits + 15):
            n = self.conductor
            val = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    term = mpmath.expjpi(mpmath.mpf(2 * j) / n)
                    val += mpmath.mpf(c.numerator) / c.denominator * term
            return _fixed(val.real, digits), _fixed(val.imag, digits)

    def __str__(self) -> str:
        return scalar_to_str(self)

    def __repr__(self) -> str:
        return f"CycloScalar({scalar_to_str(self)})"


_SCALAR_ZERO = CycloScalar(1, (_ZERO,))
_SCALAR_ONE = CycloScalar(1, (_ONE,))


def _fixed(x, digits: int) -> str:
    scaled = mpmath.nint(x * mpmath.mpf(10) ** digits)
    m = int(scaled)
    sign = "-" if m < 0 else ""
    m = abs(m)
    return f"{sign}{m // 10**digits}.{m % 10**digits:0{digits}d}"


# -- rational polynomial helpers (dense, ascending) -------------------------

def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    i = len(p)
    while i > 0 and not p[i - 1]:
        i -= 1
    return p[:i]


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    b = _poly_trim(list(b))
    db = len(b) - 1
    lead = b[-1]
    if len(_poly_trim(a)) - 1 < db:
        return [], a
    q = [_ZERO] * (len(_poly_trim(a)) - db)
    a = _poly_trim(a)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return q, _poly_trim(a)


def _solve_lift(d: int, n: int, target: tuple[Fraction, ...]) -> list[Fraction] | None:
    """Preimage of `target` under the lift Q(zeta_d) -> Q(zeta_n), if any."""
    phi_n, phi_d = totient(n), totient(d)
    step = n // d
    table = _power_table(n)
    # columns: images of the basis powers zeta_d^j
    cols = [table[j * step] for j in range(phi_d)]
    # gaussian elimination on the phi_n x (phi_d + 1) augmented system
    rows = [[Fraction(cols[j][i]) for j in range(phi_d)] + [target[i]] for i in range(phi_n)]
    piv_cols: list[int] = []
    r = 0
    for c in range(phi_d):
        piv = next((i for i in range(r, phi_n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(phi_n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, phi_n):
        if rows[i][phi_d]:
            return None
    sol = [_ZERO] * phi_d
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][phi_d]
    return sol


# ---------------------------------------------------------------------------
# roots of unity


class RootOfUnity:
    """zeta_n^k in lowest terms: the conductor equals the multiplicative order."""

    __slots__ = ("conductor", "exponent")

    def __init__(self, conductor: int, exponent: int):
        k = exponent % conductor
        g = gcd(k, conductor) if k else conductor
        object.__setattr__(self, "conductor", conductor // g)
        object.__setattr__(self, "exponent", k // g)

    def __setattr__(self, *_):
        raise AttributeError("RootOfUnity is immutable")

    @property
    def order(self) -> int:
        return self.conductor

    def to_scalar(self) -> CycloScalar:
        return primitive_root(self.conductor, self.exponent)

    def __eq__(self, other):
        return (
            isinstance(other, RootOfUnity)
            and self.conductor == other.conductor
            and self.exponent == other.exponent
        )

    def __hash__(self):
        return hash((self.conductor, self.exponent))

    def __repr__(self):
        return f"RootOfUnity(order={self.conductor}, exponent={self.exponent})"


def primitive_root(n: int, k: int = 1) -> CycloScalar:
    """zeta_n^k as a CycloScalar with conductor n."""
    if n < 1:
        raise ValueError("root order must be positive")
    _check_cap(n)
    if n == 1:
        return _SCALAR_ONE
    row = _power_table(n)[k % n]
    return CycloScalar._raw(n, [Fraction(c) for c in row])


def field_arith(a: CycloScalar, b: CycloScalar, op: str) -> CycloScalar:
    """Dispatch on one of add|sub|mul|div.  Thin named front for scripting."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def lift_conductor(a: CycloScalar, m: int) -> CycloScalar:
    return a.lift(m)


def _unit_group_generator(n: int) -> tuple[CycloScalar, int]:
    """A generator w of the roots of unity inside Q(zeta_n), and its order N."""
    if n % 2 == 0:
        return primitive_root(n, 1), n
    if n == 1:
        return CycloScalar.from_rational(-1), 2
    # -zeta_n^((n+1)/2) squares to zeta_n, so it has order 2n
    return -primitive_root(n, (n + 1) // 2), 2 * n


def detect_root_of_unity(a: CycloScalar) -> RootOfUnity | None:
    """Exact order and exponent if `a` is a root of unity, else None."""
    if a.is_zero:
        return None
    q = a.as_rational()
    if q is not None:
        if q == 1:
            return RootOfUnity(1, 0)
        if q == -1:
            return RootOfUnity(2, 1)
        return None
    n = a.conductor
    w, big = _unit_group_generator(n)
    if (a**big).as_rational() != 1:
        return None
    cur = _SCALAR_ONE
    for j in range(big):
        if a == cur:
            d = big // gcd(big, j) if j else 1
            return RootOfUnity(d, j // (big // d) if j else 0)
        cur = cur * w
    return None


# ---------------------------------------------------------------------------
# exact n-th roots inside cyclotomic fields
#
# Square roots of rationals always exist cyclotomically (quadratic Gauss
# sums); odd-order roots exist only for rational p-th powers times roots of
# unity, and that is a genuine field limitation, not an implementation gap.


def _int_nth_root(m: int, p: int) -> int | None:
    if m < 0:
        return None
    if m in (0, 1):
        return m
    lo, hi = 1, 1
    while hi**p < m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**p < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**p == m else None


def rational_nth_root(q: Fraction, p: int) -> Fraction | None:
    """Exact rational p-th root of q, when one exists."""
    if q < 0:
        if p % 2 == 0:
            return None
        r = rational_nth_root(-q, p)
        return None if r is None else -r
    num = _int_nth_root(q.numerator, p)
    den = _int_nth_root(q.denominator, p)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _legendre(a: int, p: int) -> int:
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def _sqrt_prime(l: int) -> CycloScalar:
    # sqrt(2) lives in Q(zeta_8); odd primes go through the quadratic Gauss sum
    if l == 2:
        return primitive_root(8, 1) + primitive_root(8, 7)
    acc = CycloScalar.zero()
    for a in range(1, l):
        acc = acc + _legendre(a, l) * primitive_root(l, a)
    if l % 4 == 1:
        return acc  # acc^2 = l
    return acc / primitive_root(4, 1)  # acc^2 = -l


def _sqrt_rational(q: Fraction) -> CycloScalar:
    if q == 0:
        return CycloScalar.zero()
    neg = q < 0
    q = abs(q)
    m = q.numerator * q.denominator  # sqrt(q) = sqrt(m)/denominator
    inner = 1
    root = Fraction(1, q.denominator)
    for p, e in factorize(m).items():
        root *= Fraction(p ** (e // 2))
        if e % 2:
            inner *= p
    out: CycloScalar = CycloScalar.from_rational(root)
    for p in factorize(inner):
        out = out * _sqrt_prime(p)
    if neg:
        out = out * primitive_root(4, 1)
    return out


def _as_rational_times_root(a: CycloScalar):
    """Decompose a = q * zeta as (q, RootOfUnity), if possible."""
    q = a.as_rational()
    if q is not None:
        return q, RootOfUnity(1, 0)
    w, big = _unit_group_generator(a.conductor)
    winv = w.inverse()
    cur = a
    for j in range(big):
        q = cur.as_rational()
        if q is not None:
            return q, RootOfUnity(big, j)
        cur = cur * winv
    return None


def sqrt_scalar(a: CycloScalar) -> CycloScalar | None:
    """An exact square root of `a` in some cyclotomic field, or None."""
    if a.is_zero:
        return a
    dec = _as_rational_times_root(a)
    if dec is None:
        return None
    q, rou = dec
    r = _sqrt_rational(q)
    if rou.order == 1:
        return r
    return r * primitive_root(2 * rou.conductor, rou.exponent)


def nth_root(a: CycloScalar, p: int) -> CycloScalar | None:
    """An exact p-th root of `a` in some cyclotomic field, or None.

    Complete for values of the form (rational) * (root of unity), which by
    field theory is the only shape with odd-order roots; even orders are
    peeled off with cyclotomic square roots.
    """
    if p < 1:
        raise ValueError("root order must be positive")
    if p == 1 or a.is_zero:
        return a
    if p % 2 == 0:
        s = sqrt_scalar(a)
        return None if s is None else nth_root(s, p // 2)
    dec = _as_rational_times_root(a)
    if dec is None:
        return None
    q, rou = dec
    r = rational_nth_root(q, p)
    if r is None:
        return None
    out = CycloScalar.from_rational(r)
    if rou.order > 1:
        out = out * primitive_root(p * rou.conductor, rou.exponent)
    return out


# ---------------------------------------------------------------------------
# display


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_str(a: CycloScalar) -> str:
    """Render in the literal grammar: rationals, zeta(n)^k, + - * and /."""
    q = a.as_rational()
    if q is not None:
        return _frac_str(q)
    n = a.conductor
    parts: list[str] = []
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        if j == 0:
            parts.append(_frac_str(c))
            continue
        base = f"zeta({n})" if j == 1 else f"zeta({n})^{j}"
        if c == 1:
            term = base
        elif c == -1:
            term = f"-{base}"
        else:
            term = f"{_frac_str(c)}*{base}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
