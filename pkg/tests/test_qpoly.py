import random
from fractions import Fraction

import pytest

from ramgenus.errors import ZeroValuationError
from ramgenus.qpoly import PolyQ, factor_q, is_irreducible_q, rational_roots


def random_polyq(rng, max_deg, nonzero=True):
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(deg + 1)
        ]
        f = PolyQ(tuple(coeffs))
        if not nonzero or not f.is_zero():
            return f


class TestArithmetic:
    def test_divmod_round_trip(self):
        rng = random.Random(29)
        for _ in range(200):
            f = random_polyq(rng, 6)
            g = random_polyq(rng, 4)
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.is_zero() or r.degree < g.degree

    def test_evaluate_and_reverse(self):
        f = PolyQ.of([1, 0, 1])  # x^2 + 1
        assert f.evaluate(2) == 5
        assert f.reverse() == f
        g = PolyQ.of([0, 0, 1])  # x^2
        assert g.reverse() == PolyQ.constant(1)

    def test_reduce_mod(self):
        f = PolyQ.of([Fraction(1, 2), 1])
        g = f.reduce_mod(3)
        assert g.coeffs == (2, 1)  # 1/2 = 2 mod 3
        with pytest.raises(ZeroDivisionError):
            f.reduce_mod(2)

    def test_integer_model(self):
        f = PolyQ.of([Fraction(1, 2), Fraction(3, 4)])
        content, ints = f.integer_model()
        assert ints == (2, 3)
        assert content == Fraction(1, 4)


class TestFactor:
    def test_difference_of_squares(self):
        f = PolyQ.of([-1, 0, 1])
        const, parts = factor_q(f)
        assert const == 1
        assert parts == [(PolyQ.of([-1, 1]), 1), (PolyQ.of([1, 1]), 1)]

    def test_x4_plus_1_irreducible(self):
        # reducible mod every prime, irreducible over Q: the exact route must get it
        f = PolyQ.of([1, 0, 0, 0, 1])
        assert is_irreducible_q(f)

    def test_reconstruction(self):
        rng = random.Random(31)
        for _ in range(80):
            f = random_polyq(rng, 5)
            if f.is_constant():
                continue
            const, parts = factor_q(f)
            prod = PolyQ.constant(const)
            for g, mult in parts:
                assert g.is_monic()
                for _ in range(mult):
                    prod = prod * g
            assert prod == f

    def test_rejects_zero(self):
        with pytest.raises(ZeroValuationError):
            factor_q(PolyQ(()))


class TestRationalRoots:
    def test_cubic_with_rational_roots(self):
        # (x - 1/2)(x + 2)(x - 3)
        f = PolyQ.of([Fraction(-1, 2), 1]) * PolyQ.of([2, 1]) * PolyQ.of([-3, 1])
        assert rational_roots(f) == [Fraction(-2), Fraction(1, 2), Fraction(3)]

    def test_zero_constant_term(self):
        f = PolyQ.of([0, -1, 0, 1])  # x^3 - x
        assert rational_roots(f) == [Fraction(-1), Fraction(0), Fraction(1)]

    def test_irrational(self):
        assert rational_roots(PolyQ.of([-2, 0, 1])) == []
