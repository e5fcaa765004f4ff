"""Splitting data of rational primes in number fields Q[x]/(f).

The expected values are classical (quadratic reciprocity for the quadratic
fields, cyclotomic splitting laws, Dedekind's non-monogenic cubic) so every
case doubles as an oracle for the round-2 maximal order computation."""

import pytest

from weilsieve.localfield import prime_splitting_data

# (f low->high, p, expected sorted tuple of (e, f, val_theta))
CASES = [
    # Q(i): 2 ramifies with theta = i a unit, 3 inert, 5 split
    ((1, 0, 1), 2, ((2, 1, 0),)),
    ((1, 0, 1), 3, ((1, 2, 0),)),
    ((1, 0, 1), 5, ((1, 1, 0), (1, 1, 0))),
    # Q(sqrt 2): 2 totally ramified and v(sqrt 2) = 1
    ((-2, 0, 1), 2, ((2, 1, 1),)),
    # Q(sqrt -3): -3 = 5 mod 8 so 2 is inert (maximal order is larger than
    # Z[theta]); 3 ramifies with v(theta) = 1
    ((3, 0, 1), 2, ((1, 2, 0),)),
    ((3, 0, 1), 3, ((2, 1, 1),)),
    # Q(sqrt -7): -7 = 1 mod 8 so 2 splits although Z[theta] is not maximal
    ((7, 0, 1), 2, ((1, 1, 0), (1, 1, 0))),
    # Q(sqrt 5): 5 = 5 mod 8 inert at 2, ramified at 5, split at 11
    ((-5, 0, 1), 2, ((1, 2, 0),)),
    ((-5, 0, 1), 5, ((2, 1, 1),)),
    ((-5, 0, 1), 11, ((1, 1, 0), (1, 1, 0))),
    # Q(zeta_8): totally ramified at 2 with zeta a unit; f = ord_p mod 8
    ((1, 0, 0, 0, 1), 2, ((4, 1, 0),)),
    ((1, 0, 0, 0, 1), 3, ((1, 2, 0), (1, 2, 0))),
    ((1, 0, 0, 0, 1), 17, ((1, 1, 0),) * 4),
    # Q(zeta_5)
    ((1, 1, 1, 1, 1), 2, ((1, 4, 0),)),
    ((1, 1, 1, 1, 1), 5, ((4, 1, 0),)),
    ((1, 1, 1, 1, 1), 11, ((1, 1, 0),) * 4),
    # x^3 - 2: Eisenstein at 2; at 5 one linear and one quadratic factor
    ((-2, 0, 0, 1), 2, ((3, 1, 1),)),
    ((-2, 0, 0, 1), 5, ((1, 1, 0), (1, 2, 0))),
    # x^3 - x - 1, discriminant -23: 23 is partially ramified
    ((-1, -1, 0, 1), 23, ((1, 1, 0), (2, 1, 0))),
    # Dedekind's x^3 + x^2 - 2x + 8: 2 splits completely even though no
    # single generator is 2-maximal; theta valuations from the Newton polygon
    ((8, -2, 1, 1), 2, ((1, 1, 0), (1, 1, 1), (1, 1, 2))),
    # Eisenstein quartic at 2
    ((2, 0, 2, 2, 1), 2, ((4, 1, 1),)),
]


@pytest.mark.parametrize("fc,p,want", CASES)
def test_splitting_oracle(fc, p, want):
    assert prime_splitting_data(fc, p) == want


def test_weil_quartic_invariant_sums():
    # the quartic coming from the real quadratic x^2 - x - 1 at q = 4:
    # whatever the splitting, e f sums to the degree and f * v(theta)
    # sums to v_2(constant term) = v_2(4)
    got = prime_splitting_data((4, -2, 3, -1, 1), 2)
    assert sum(e * f for e, f, _ in got) == 4
    assert sum(f * v for _, f, v in got) == 2


def test_degree_sum_random_products():
    import random

    rng = random.Random(20)
    for _ in range(25):
        deg = rng.randint(2, 4)
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [1]
        fc = tuple(coeffs)
        from weilsieve.intpoly import IntPoly, squarefree_part

        p_poly = IntPoly(fc)
        if squarefree_part(p_poly) != p_poly or p_poly[0] == 0:
            continue
        from weilsieve.intpoly import factor_int_poly

        if len(factor_int_poly(p_poly).factors) != 1:
            continue
        for p in (2, 3, 5):
            got = prime_splitting_data(fc, p)
            assert sum(e * f for e, f, _ in got) == deg
