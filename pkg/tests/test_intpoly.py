"""Exact integer polynomial layer: arithmetic, resultants, real root counting,
and the certified factorization used by the elimination witnesses."""

import math
import random
from fractions import Fraction

import pytest

from weilsieve.intpoly import (
    IntPoly,
    NotDivisible,
    ZeroInput,
    count_real_roots,
    count_real_roots_in,
    factor_int_poly,
    is_squarefree_integer,
    isolate_real_roots,
    poly_divexact,
    poly_gcd,
    poly_mul,
    reduced_resultant,
    refine_isolating_interval,
    resultant,
    squarefree_part,
    sturm_chain,
    weil_all_roots_in,
    yun_decomposition,
)


def rand_poly(rng, max_deg=5, box=9, monic=False):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(-box, box) for _ in range(deg)]
    coeffs.append(1 if monic else rng.choice([c for c in range(-box, box + 1) if c]))
    return IntPoly(coeffs)


class TestBasics:
    def test_zero_and_degree(self):
        z = IntPoly([])
        assert z.is_zero and z.degree == -1
        p = IntPoly([0, 0, 3, 0])
        assert p.degree == 2 and p.leading == 3

    def test_arithmetic_matches_int_eval(self):
        rng = random.Random(1)
        for _ in range(200):
            a, b = rand_poly(rng), rand_poly(rng)
            for x in (-3, -1, 0, 1, 2, 7):
                assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
                assert (a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x)
                assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
            assert (a ** 3).evaluate(2) == a.evaluate(2) ** 3

    def test_eval_scaled_is_scaled_evaluation(self):
        rng = random.Random(11)
        for _ in range(50):
            p = rand_poly(rng, 4)
            u, w = rng.randint(-9, 9), rng.randint(1, 9)
            assert p.eval_scaled(u, w) == p.evaluate(Fraction(u, w)) * w ** max(
                p.degree, 0
            )

    def test_eq_hash_trailing_zeros(self):
        a = IntPoly([1, 2, 3])
        b = IntPoly((1, 2, 3, 0))
        assert a == b and hash(a) == hash(b)
        assert a != IntPoly([1, 2])

    def test_derivative(self):
        p = IntPoly([4, 3, 2, 1])
        assert p.derivative() == IntPoly([3, 4, 3])
        assert IntPoly([7]).derivative().is_zero

    def test_pretty_key_shapes(self):
        assert IntPoly([0, 1]).pretty() == "x"
        assert IntPoly([-2, 0, 1]).pretty() == "x^2 - 2"
        assert IntPoly([1, 2, 1]).pretty("t") == "t^2 + 2t + 1"

    def test_coeff_strings_round_trip(self):
        p = IntPoly([0, -768, 2176, 19, 1])
        assert IntPoly.from_coeff_strings(p.to_coeff_strings()) == p

    def test_divexact(self):
        a = IntPoly([1, 2, 1])
        assert poly_divexact(a, IntPoly([1, 1])) == IntPoly([1, 1])
        with pytest.raises(NotDivisible):
            poly_divexact(a, IntPoly([3, 1]))


class TestResultant:
    def test_known_values(self):
        # res(x^2 - 1, x - 2) = 2^2 - 1 = 3
        assert resultant(IntPoly([-1, 0, 1]), IntPoly([-2, 1])) == 3
        # linear pair: the first argument evaluated at the second's root
        assert resultant(IntPoly([-3, 1]), IntPoly([-5, 1])) == 2
        assert resultant(IntPoly([-5, 1]), IntPoly([-3, 1])) == -2

    def test_multiplicative_and_swap(self):
        rng = random.Random(2)
        checked = 0
        for _ in range(120):
            a, b, c = (rand_poly(rng, 5) for _ in range(3))
            if a.degree < 1 or b.degree < 1 or c.degree < 1:
                continue
            assert resultant(poly_mul(a, b), c) == resultant(a, c) * resultant(b, c)
            sign = (-1) ** (a.degree * b.degree)
            assert resultant(a, b) == sign * resultant(b, a)
            checked += 1
        assert checked >= 60

    def test_vanishes_iff_common_root(self):
        a = IntPoly([-1, 1]) * IntPoly([2, 1])
        assert resultant(a, IntPoly([-1, 1]) * IntPoly([5, 1])) == 0
        assert resultant(a, IntPoly([5, 1])) != 0

    def test_reduced_resultant_divides_resultant(self):
        rng = random.Random(3)
        seen_proper = 0
        for _ in range(200):
            a, b = rand_poly(rng, 4, monic=True), rand_poly(rng, 4, monic=True)
            if a.degree < 1 or b.degree < 1 or poly_gcd(a, b).degree != 0:
                continue
            r, rr = abs(resultant(a, b)), reduced_resultant(a, b)
            assert rr > 0 and r % rr == 0
            if rr < r:
                seen_proper += 1
        assert seen_proper > 0

    def test_reduced_resultant_known_cases(self):
        # ideal (x + 2, x + 4) in Z[x] contains their difference 2 but not 1
        assert reduced_resultant(IntPoly([2, 1]), IntPoly([4, 1])) == 2
        # resultant 9 but 3 already lies in the ideal sum
        a = IntPoly([1, 1, 1])
        b = IntPoly([1, 4, 1])
        assert abs(resultant(a, b)) == 9
        assert reduced_resultant(a, b) == 3


class TestRootCounting:
    def test_sturm_chain_counts(self):
        p = IntPoly([-2, 0, 1])  # roots +-sqrt(2)
        chain = sturm_chain(p)
        assert chain[0] == p
        assert count_real_roots(p) == 2
        assert count_real_roots_in(p, Fraction(0), Fraction(2)).count == 1
        assert count_real_roots_in(p, Fraction(-2), Fraction(0)).count == 1

    def test_multiple_roots_counted_once(self):
        p = IntPoly([1, 2, 1]) * IntPoly([-3, 1])  # (x + 1)^2 (x - 3)
        assert count_real_roots(p) == 2

    def test_all_in_flag(self):
        p = IntPoly([-2, 0, 1])
        assert count_real_roots_in(p, -2, 2).all_in
        assert not count_real_roots_in(p, 0, 2).all_in

    def test_against_integer_root_products(self):
        rng = random.Random(4)
        for _ in range(100):
            roots = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
            p = IntPoly.from_roots(roots)
            assert count_real_roots(p) == len(set(roots))
            lo, hi = Fraction(-3), Fraction(2)
            # the interval is closed on both ends
            want = len({r for r in set(roots) if lo <= r <= hi})
            assert count_real_roots_in(p, lo, hi).count == want

    def test_isolation_and_refinement(self):
        p = IntPoly([-2, 0, 1])
        ivs = isolate_real_roots(p, Fraction(-4), Fraction(4), Fraction(1, 4))
        assert len(ivs) == 2
        lo, hi = refine_isolating_interval(p, ivs[1], Fraction(1, 1024))
        assert hi - lo <= Fraction(1, 1024)
        assert lo * lo < 2 < hi * hi

    def test_weil_all_roots_in(self):
        # roots of x^2 - 4 are +-2, exactly the bound for q = 1
        assert weil_all_roots_in(IntPoly([-4, 0, 1]), 1)
        assert not weil_all_roots_in(IntPoly([-5, 0, 1]), 1)
        assert weil_all_roots_in(IntPoly([4, 4, 1]), 1)  # (x + 2)^2
        assert not weil_all_roots_in(IntPoly([5, 1]), 4)  # root -5 < -4


class TestSquarefree:
    def test_yun_reassembles(self):
        rng = random.Random(5)
        checked = 0
        for _ in range(80):
            parts = [rand_poly(rng, 2, 4, monic=True) for _ in range(3)]
            parts = [p for p in parts if p.degree >= 1]
            if len(parts) < 2:
                continue
            prod = IntPoly.one()
            for i, p in enumerate(parts, 1):
                prod = prod * p ** i
            rebuilt = IntPoly.one()
            for fac, mult in yun_decomposition(prod):
                rebuilt = rebuilt * fac ** mult
            assert rebuilt == prod
            checked += 1
        assert checked >= 40

    def test_squarefree_part(self):
        p = IntPoly([1, 1]) ** 3 * IntPoly([-2, 1])
        assert squarefree_part(p) == IntPoly([1, 1]) * IntPoly([-2, 1])

    def test_is_squarefree_integer(self):
        assert is_squarefree_integer(1) and is_squarefree_integer(-15)
        assert not is_squarefree_integer(12)
        with pytest.raises(ZeroInput):
            is_squarefree_integer(0)

    def test_zero_input_raises(self):
        with pytest.raises(ZeroInput):
            squarefree_part(IntPoly([]))


class TestFactorization:
    def brute_irreducible(self, p):
        """Irreducibility over Q for monic deg <= 4, by rational-root search
        plus a bounded scan over monic integer quadratic factors."""
        if p.degree <= 1:
            return True
        a0 = p[0]
        if a0 == 0:
            return False
        for r in range(1, abs(a0) + 1):
            if a0 % r == 0 and (p.evaluate(r) == 0 or p.evaluate(-r) == 0):
                return False
        if p.degree <= 3:
            return True
        bound = 2 * max(abs(c) for c in p.coeffs) + 2
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                try:
                    poly_divexact(p, IntPoly([c, b, 1]))
                    return False
                except NotDivisible:
                    pass
        return True

    def test_monic_required(self):
        with pytest.raises(ValueError):
            factor_int_poly(IntPoly([2, 4, 2]))

    def test_round_trip_deg4(self):
        rng = random.Random(6)
        for _ in range(80):
            p = rand_poly(rng, 4, 6, monic=True)
            if p.degree < 1:
                continue
            fm = factor_int_poly(p)
            assert fm.expand() == p
            for fac, _ in fm:
                assert fac.is_monic

    def test_factors_are_irreducible_deg4(self):
        rng = random.Random(7)
        checked = 0
        for _ in range(40):
            p = rand_poly(rng, 4, 5, monic=True)
            if p.degree < 2:
                continue
            for fac, _ in factor_int_poly(p):
                assert self.brute_irreducible(fac), fac
                checked += 1
        assert checked >= 30

    def test_known_factorizations(self):
        fm = factor_int_poly(IntPoly([-1, 0, 0, 0, 1]))  # x^4 - 1
        assert sorted(f.pretty() for f, _ in fm) == ["x + 1", "x - 1", "x^2 + 1"]
        fm2 = factor_int_poly(IntPoly([1, 2, 1]))
        assert fm2.factors == ((IntPoly([1, 1]), 2),)
        assert "(x + 1)^2" in fm2.pretty() or fm2.pretty() == "(x + 1)^2"
