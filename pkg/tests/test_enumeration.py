"""Search-tree enumeration of real Weil polynomials.

The load-bearing facts: every node's integer coefficient window matches a
per-child root-location check, and full runs agree with brute-force
coefficient-box enumeration on every small case."""

import math
import random
from itertools import product

import pytest

from weilsieve.intpoly import IntPoly, weil_all_roots_in
from weilsieve.weil import ConstraintSet, satisfies_constraints
from weilsieve.enumeration import (
    SearchNode,
    enumerate_real_weil,
    extension_range,
    level_poly,
    pinned_prefix,
)


def brute_force(cs):
    """All valid h by scanning the coefficient box |a_k| <= C(g,k) (2 sqrt q)^k."""
    g, q = cs.g, cs.q
    bounds = []
    for k in range(1, g + 1):
        c = math.comb(g, k) * 2 ** k
        bounds.append(math.isqrt(c * c * q ** k))
    out = []
    for avec in product(*[range(-b, b + 1) for b in bounds]):
        h = IntPoly(tuple(reversed((1,) + avec)))
        if satisfies_constraints(h, cs).ok:
            out.append(h)
    out.sort(key=lambda p: p.sort_key())
    return out


class TestLevelPoly:
    def test_derivative_tower(self):
        h = IntPoly([4, 3, 2, 1])  # x^3 + 2x^2 + 3x + 4
        assert level_poly(3, (2, 3, 4)) == h
        assert level_poly(3, (2, 3)) == h.derivative()
        assert level_poly(3, (2,)) == h.derivative().derivative()
        assert level_poly(3, ()) == IntPoly([6])


class TestPinnedPrefix:
    def test_production_prescriptions(self):
        # P_1 = 24 over F_4 forces a_1 = 24 - 5 = 19; the triple
        # (16, 8, 32) forces (a_1, a_2, a_3) = (11, 36, 12)
        assert pinned_prefix(ConstraintSet.make(4, 8, {1: 24})) == (19,)
        assert pinned_prefix(ConstraintSet.make(4, 8, {1: 16, 2: 8, 3: 32})) == (
            11,
            36,
            12,
        )

    def test_no_prescription_pins_nothing(self):
        assert pinned_prefix(ConstraintSet.make(4, 8, {})) == ()

    def test_infeasible_prescriptions_yield_empty(self):
        # non-integral pinned coefficients: prefix is None, output empty
        cs = ConstraintSet.make(2, 2, {1: 3, 2: 4})
        if pinned_prefix(cs) is None:
            assert enumerate_real_weil(cs) == []
        # integral pin far past the Weil bound: no candidate survives
        cs_big = ConstraintSet.make(2, 1, {1: 100})
        assert pinned_prefix(cs_big) == (97,)
        assert enumerate_real_weil(cs_big) == []


class TestExtensionRange:
    def test_root_window(self):
        # first coefficient of a degree-2 poly with roots in [-2r, 2r]:
        # the window is the full interval [-2 g r, 2 g r] scaled per level
        win = extension_range(SearchNode(2, 4, ()))
        assert (win.lo, win.hi, win.exact) == (-8, 8, True)

    def test_windows_match_child_validation(self):
        rng = random.Random(7)
        checked = 0
        for qq in (2, 3, 4, 5, 8, 9):
            for _ in range(60):
                gg = rng.randint(2, 5)
                mm = rng.randint(1, gg - 1)
                avec = ()
                dead = False
                for _ in range(mm):
                    nd = SearchNode(gg, qq, avec)
                    wlo, whi, _ = extension_range(nd)
                    if wlo > whi:
                        dead = True
                        break
                    cands = [
                        c
                        for c in range(wlo, whi + 1)
                        if weil_all_roots_in(nd.child_poly(c), qq)
                    ]
                    if not cands:
                        dead = True
                        break
                    avec = avec + (rng.choice(cands),)
                if dead:
                    continue
                nd = SearchNode(gg, qq, avec)
                win = extension_range(nd)
                truth = [
                    c
                    for c in range(win.lo - 3, win.hi + 4)
                    if weil_all_roots_in(nd.child_poly(c), qq)
                ]
                if win.exact:
                    assert truth == list(range(win.lo, win.hi + 1)), (qq, gg, avec)
                else:
                    assert set(truth) <= set(range(win.lo, win.hi + 1)), (qq, gg, avec)
                checked += 1
        assert checked >= 150


class TestSmallCaseEquivalence:
    @pytest.mark.parametrize("q,g", [(2, 1), (2, 2), (4, 1), (4, 2)])
    def test_every_feasible_p1(self, q, g):
        # every prescribed P_1 from 0 up past the Weil-Serre ceiling,
        # plus the unprescribed run: exact list equality with brute force
        ceiling = q + 1 + g * math.isqrt(4 * q) + 2
        cs0 = ConstraintSet.make(q, g, {})
        assert enumerate_real_weil(cs0) == brute_force(cs0)
        nonempty = 0
        for p1 in range(0, ceiling + 1):
            cs = ConstraintSet.make(q, g, {1: p1})
            got = enumerate_real_weil(cs)
            want = brute_force(cs)
            assert got == want, (q, g, p1)
            nonempty += bool(got)
        assert nonempty > 0

    def test_output_sorted_and_unique(self):
        cs = ConstraintSet.make(4, 2, {})
        out = enumerate_real_weil(cs)
        assert len(set(out)) == len(out)
        assert out == sorted(out, key=lambda p: p.sort_key())
        for h in out:
            assert h.is_monic and h.degree == 2


class TestThreadedDeterminism:
    def test_threads_do_not_change_output(self):
        cs = ConstraintSet.make(4, 2, {})
        assert enumerate_real_weil(cs, threads=1) == enumerate_real_weil(
            cs, threads=3
        )
