"""Point/place bookkeeping for real Weil polynomials and the Honda-Tate
multiplicity obstruction."""

import random

import pytest

from weilsieve.intpoly import IntPoly
from weilsieve.weil import (
    ConstraintSet,
    NotWeilSymmetric,
    WeilProfile,
    minimal_factor_multiplicity,
    mobius,
    nonneg_horizon,
    real_to_weil,
    satisfies_constraints,
    weil_to_real,
)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class TestMobius:
    def test_small_values(self):
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    def test_sum_over_divisors(self):
        # sum_{d | n} mu(d) = [n == 1]
        for n in range(1, 200):
            assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


class TestRealWeilTransform:
    def test_known_pair(self):
        # h = x + a1 <-> f = x^2 + a1 x + q
        assert real_to_weil(IntPoly([3, 1]), 4) == IntPoly([4, 3, 1])
        assert weil_to_real(IntPoly([4, 3, 1]), 4) == IntPoly([3, 1])

    def test_round_trip_random(self):
        rng = random.Random(10)
        for _ in range(100):
            q = rng.choice([2, 3, 4, 5, 8, 9])
            g = rng.randint(1, 6)
            h = IntPoly([rng.randint(-9, 9) for _ in range(g)] + [1])
            f = real_to_weil(h, q)
            assert f.degree == 2 * g and f.is_monic
            # functional equation c_i = q^(g-i) c_(2g-i)
            for i in range(g):
                assert f[i] == q ** (g - i) * f[2 * g - i]
            assert weil_to_real(f, q) == h

    def test_weil_to_real_rejects_asymmetric(self):
        with pytest.raises(NotWeilSymmetric):
            weil_to_real(IntPoly([1, 0, 1]), 4)  # x^2 + 1 lacks c_0 = q


class TestWeilProfile:
    def rand_profile(self, rng):
        q = rng.choice([2, 3, 4, 5, 7, 8, 9])
        g = rng.randint(1, 7)
        # keep power sums well-defined: any integer h works for R/P identities
        h = IntPoly([rng.randint(-12, 12) for _ in range(g)] + [1])
        return WeilProfile(h, q), q, g

    def test_r1_matches_trace(self):
        rng = random.Random(11)
        for _ in range(100):
            prof, q, g = self.rand_profile(rng)
            a1 = prof.h[g - 1]
            assert prof.R(1) == q + 1 + a1

    def test_mobius_consistency_1000_profiles(self):
        # sum_{d | n} d P_d = R_n for every n up to 12
        rng = random.Random(12)
        for _ in range(1000):
            prof, q, g = self.rand_profile(rng)
            for n in range(1, 13):
                lhs = sum(d * prof.P(d) for d in divisors(n))
                assert lhs == prof.R(n)

    def test_known_genus2_curve_counts(self):
        # h = x^2 + 3x + 1 over F_4: the base curve used by the triple cover;
        # N_1 = 4 + 1 + 3 = 8 was cross-checked by rational point search
        prof = WeilProfile(IntPoly([1, 3, 1]), 4)
        assert prof.R(1) == 8
        assert prof.point_counts(3) == [prof.R(1), prof.R(2), prof.R(3)]
        assert prof.place_counts(3) == [prof.P(1), prof.P(2), prof.P(3)]

    def test_place_counts_always_integral(self):
        # power sums of algebraic integers obey the Gauss congruences, so
        # Moebius inversion can never leave a remainder on genuine input;
        # the typed error is a defensive check, not a reachable state here
        rng = random.Random(13)
        for _ in range(300):
            prof, q, g = self.rand_profile(rng)
            for n in range(1, 9):
                prof.P(n)  # must not raise NonIntegralPlaceCount

    def test_json_dict(self):
        prof = WeilProfile(IntPoly([1, 3, 1]), 4)
        d = prof.to_json_dict(3)
        assert d["q"] == 4 and d["R"] == [8, 26, 47] and d["P"] == [8, 9, 13]


class TestNonnegHorizon:
    def test_monotone_in_g(self):
        assert nonneg_horizon(4, 8) >= nonneg_horizon(4, 2) >= 1

    def test_covers_prescriptions_used(self):
        # horizons must reach past the largest prescribed degree in the runs
        assert nonneg_horizon(4, 8) >= 3


class TestConstraintSet:
    def test_make_normalizes(self):
        cs = ConstraintSet.make(4, 8, {1: 24})
        assert cs.q == 4 and cs.g == 8
        assert cs.prescribed_map == {1: 24}
        assert hash(cs) == hash(ConstraintSet.make(4, 8, {1: 24}))

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            ConstraintSet.make(6, 2, {})
        with pytest.raises(ValueError):
            ConstraintSet.make(4, 0, {})
        with pytest.raises(ValueError):
            ConstraintSet.make(4, 2, {1: -1})


class TestSatisfiesConstraints:
    def test_survivor_row_passes(self):
        h = IntPoly([0, 768, 2176, 2608, 1712, 664, 152, 19, 1])
        cs = ConstraintSet.make(4, 8, {1: 24})
        assert satisfies_constraints(h, cs).ok

    def test_rejects_wrong_point_count(self):
        h = IntPoly([0, 768, 2176, 2608, 1712, 664, 152, 19, 1])
        cs = ConstraintSet.make(4, 8, {1: 23})
        chk = satisfies_constraints(h, cs)
        assert not chk.ok and chk.witness

    def test_rejects_roots_outside_band(self):
        cs = ConstraintSet.make(4, 1, {})
        assert not satisfies_constraints(IntPoly([5, 1]), cs).ok
        assert satisfies_constraints(IntPoly([4, 1]), cs).ok

    def test_rejects_non_monic_and_wrong_degree(self):
        cs = ConstraintSet.make(4, 2, {})
        assert not satisfies_constraints(IntPoly([1, 1]), cs).ok
        assert not satisfies_constraints(IntPoly([0, 0, 2]), cs).ok

    def test_rejects_negative_place_count(self):
        # x^2 + 4x + 2 over F_4 (P_1 = 9) has P_2 = -1: Honda-Tate
        # multiplicity 2 forces the square, and the square's place count
        # goes negative; either way the candidate must fail
        h = IntPoly([2, 4, 1])
        cs = ConstraintSet.make(4, 2, {})
        assert not satisfies_constraints(h, cs).ok


class TestMinimalFactorMultiplicity:
    # (real factor h1 low->high, q, least multiplicity in a real Weil poly)
    CASES = [
        ((2, 4, 1), 4, 2),  # x^2 + 4x + 2: the one obstructed factor at q = 4
        ((0, 1), 4, 1),
        ((2, 1), 4, 1),
        ((-2, 1), 4, 1),
        ((4, 1), 4, 1),  # x + 2 sqrt(q): supersingular, rational case
        ((-4, 1), 4, 1),
        ((3, 1), 4, 1),
        ((-8, 0, 1), 4, 1),
        ((-12, 0, 1), 4, 1),
        ((-4, 2, 1), 4, 1),
        ((5, 5, 1), 4, 1),
        ((-2, 1), 8, 3),  # x - 2 over F_8 needs the full cube
        ((1, 1), 2, 1),  # prime field: always 1
        ((-1, -1, 1), 2, 1),
    ]

    def test_known_cases(self):
        for cs, q, want in self.CASES:
            assert minimal_factor_multiplicity(IntPoly(cs), q) == want, (cs, q)

    def test_sqrt_factor_non_square_q(self):
        # x^2 - 4q irreducible for non-square q: multiplicity 1
        for q in (2, 8, 32):
            assert minimal_factor_multiplicity(IntPoly([-4 * q, 0, 1]), q) == 1

    def test_ordinary_shortcut_agrees_with_local_analysis(self):
        # factors whose middle Weil coefficient is a unit at p take the
        # ordinary fast path; spot-check them against the full computation
        from weilsieve.weil import _local_invariant_denominators
        import math

        for coeffs, q in [((1, 3, 1), 4), ((5, 5, 1), 4), ((1, 6, 5, 1), 4)]:
            h1 = IntPoly(coeffs)
            f1 = real_to_weil(h1, 4)
            assert f1[h1.degree] % 2, "case is not ordinary"
            full = math.lcm(*_local_invariant_denominators(tuple(f1.coeffs), 2, 2))
            assert minimal_factor_multiplicity(h1, q) == 1 == full
