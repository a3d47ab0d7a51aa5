"""Exact cyclotomic scalar arithmetic."""

import random
import threading
from fractions import Fraction

import pytest

from germforge.errors import ConductorCapExceeded, DivisionByZero, NotAMultiple
from germforge.scalar import (
    CycloScalar,
    RootOfUnity,
    cyclotomic_polynomial,
    detect_root_of_unity,
    divisors,
    field_arith,
    lift_conductor,
    nth_root,
    primitive_root,
    rational_nth_root,
    set_conductor_cap,
    sqrt_scalar,
    totient,
)


def rational(q) -> CycloScalar:
    return CycloScalar.from_rational(q)


def random_scalar(rng: random.Random, conductor: int) -> CycloScalar:
    acc = rational(Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3))))
    for k in range(1, 3):
        c = rng.randint(-2, 2)
        if c:
            acc = acc + c * primitive_root(conductor, rng.randrange(conductor))
    return acc


class TestNumberTheoryHelpers:
    def test_totient(self):
        assert [totient(n) for n in (1, 2, 3, 4, 8, 12, 240)] == [1, 1, 2, 2, 4, 4, 64]

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_cyclotomic_polynomials(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
        # the first index with a coefficient outside {-1, 0, 1} is 105
        assert -2 in cyclotomic_polynomial(105)

    def test_cyclotomic_cache_is_thread_safe(self):
        errors = []

        def worker(n):
            try:
                cyclotomic_polynomial(n)
            except Exception as exc:  # pragma: no cover
                errors.append(exc)

        threads = [
            threading.Thread(target=worker, args=(n,))
            for n in (96, 120, 144, 180) * 4
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors


class TestFieldArithmetic:
    def test_i_squared(self):
        i = primitive_root(4, 1)
        assert field_arith(i, i, "mul") == -1

    def test_zeta8_squared_is_i(self):
        z8 = primitive_root(8, 1)
        assert z8 * z8 == primitive_root(4, 1)

    def test_rationalized_quotient(self):
        i = primitive_root(4, 1)
        got = (1 + i) / (1 - i)
        assert got == i
        re, im = got.complex_approx(6)
        assert (re, im) == ("0.000000", "1.000000")

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            field_arith(rational(1), rational(0), "div")

    def test_field_axioms_on_random_samples(self):
        rng = random.Random(1)
        one = CycloScalar.one()
        for _ in range(60):
            n = rng.choice((1, 3, 4, 8, 12))
            a, b, c = (random_scalar(rng, n) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero:
                assert a * a.inverse() == one

    def test_pow(self):
        z = primitive_root(12, 1)
        assert z**12 == 1
        assert z**-1 == primitive_root(12, 11)
        assert rational(Fraction(2, 3)) ** 3 == Fraction(8, 27)


class TestConductorLifting:
    def test_lift_minus_one(self):
        lifted = lift_conductor(rational(-1), 8)
        assert lifted.conductor == 8
        assert lifted == -1

    def test_lift_zeta4_to_12(self):
        lifted = lift_conductor(primitive_root(4, 1), 12)
        assert lifted.conductor == 12
        assert lifted == primitive_root(12, 3)

    def test_rationals_embed_everywhere(self):
        q = rational(Fraction(2, 3))
        assert lift_conductor(q, 5) == q

    def test_lift_requires_multiple(self):
        with pytest.raises(NotAMultiple):
            lift_conductor(primitive_root(4, 1), 6)

    def test_lift_is_a_field_embedding(self):
        rng = random.Random(2)
        for _ in range(25):
            a = random_scalar(rng, 6)
            b = random_scalar(rng, 6)
            assert lift_conductor(a, 12) + lift_conductor(b, 12) == lift_conductor(a + b, 12)
            assert lift_conductor(a, 12) * lift_conductor(b, 12) == lift_conductor(a * b, 12)

    def test_round_trip_reduction(self):
        a = primitive_root(4, 1) + 2
        assert lift_conductor(a, 24).reduced() == a

    def test_conductor_cap(self):
        try:
            set_conductor_cap(20)
            with pytest.raises(ConductorCapExceeded):
                primitive_root(24, 1)
            with pytest.raises(ConductorCapExceeded):
                primitive_root(8, 1) * primitive_root(12, 1)  # lcm 24
        finally:
            set_conductor_cap(240)


class TestRootOfUnityDetection:
    def test_minus_one(self):
        assert detect_root_of_unity(rational(-1)) == RootOfUnity(2, 1)

    def test_zeta8_cubed(self):
        got = detect_root_of_unity(primitive_root(8, 3))
        assert (got.order, got.exponent) == (8, 3)

    def test_non_roots(self):
        assert detect_root_of_unity(rational(Fraction(1, 2))) is None
        assert detect_root_of_unity(rational(0)) is None
        assert detect_root_of_unity(1 + primitive_root(4, 1)) is None

    def test_normalization(self):
        r = RootOfUnity(8, 6)
        assert (r.conductor, r.exponent) == (4, 3)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_detect_all_orders(self, n):
        for k in range(n):
            got = detect_root_of_unity(primitive_root(n, k))
            d = n // __import__("math").gcd(n, k) if k else 1
            assert got is not None
            assert got.order == d

    def test_primitive_root_basics(self):
        assert primitive_root(2, 1) == -1
        assert primitive_root(4, 1) * primitive_root(4, 1) == -1
        x = primitive_root(6, 1)
        assert x**6 == 1 and x**3 == -1


class TestDisplay:
    def test_complex_approx_examples(self):
        assert primitive_root(4, 1).complex_approx(4) == ("0.0000", "1.0000")
        assert primitive_root(8, 1).complex_approx(4) == ("0.7071", "0.7071")
        assert rational(Fraction(3, 2)).complex_approx(4) == ("1.5000", "0.0000")

    def test_approx_consistent_with_product(self):
        rng = random.Random(3)
        for _ in range(20):
            a = random_scalar(rng, 8)
            b = random_scalar(rng, 8)
            re, im = (a * b).complex_approx(12)
            ra, ia = a.complex_approx(20)
            rb, ib = b.complex_approx(20)
            prod = complex(float(ra), float(ia)) * complex(float(rb), float(ib))
            assert abs(prod.real - float(re)) < 1e-10
            assert abs(prod.imag - float(im)) < 1e-10

    def test_str_round_trippable_tokens(self):
        s = str(primitive_root(8, 3) * 2 + Fraction(1, 2))
        assert "zeta(8)" in s


class TestExactRoots:
    def test_rational_nth_root(self):
        assert rational_nth_root(Fraction(8, 27), 3) == Fraction(2, 3)
        assert rational_nth_root(Fraction(-8), 3) == -2
        assert rational_nth_root(Fraction(2), 2) is None
        assert rational_nth_root(Fraction(-4), 2) is None

    def test_sqrt_of_rationals(self):
        for q in (2, 3, 5, 6, Fraction(1, 2), Fraction(-3, 2), 12, -1):
            s = sqrt_scalar(rational(q))
            assert s is not None and s * s == q

    def test_sqrt_of_rational_times_root_of_unity(self):
        a = rational(Fraction(1, 2)) * primitive_root(4, 3)
        s = sqrt_scalar(a)
        assert s is not None and s * s == a

    def test_nth_root_of_roots_of_unity(self):
        c = nth_root(primitive_root(4, 1), 3)
        assert c is not None and c**3 == primitive_root(4, 1)

    def test_nth_root_even_orders(self):
        a = rational(Fraction(9, 4))
        c = nth_root(a, 4)
        assert c is not None and c**4 == a

    def test_nth_root_unavailable(self):
        assert nth_root(rational(2), 3) is None
        assert nth_root(rational(Fraction(-1, 6)), 3) is None
