"""Complete enumeration of real Weil polynomial candidates.

The search walks a tree of derivative levels.  Writing the target as
h = x^g + a_1 x^(g-1) + ... + a_g, the k-th derivative h^(k) depends only on
a_1 .. a_(g-k), so fixing one more coefficient descends one level.  Rolle's
theorem makes "all roots real, inside the Weil interval" hereditary along
derivatives, which justifies pruning at every level with an exact Sturm test.

For the next coefficient c the admissible set is an integer window cut out
by sign conditions at the endpoints +-2 sqrt(q), decided exactly in
Z[sqrt(q)], and by the alternation conditions (-1)^T_j * child(rho_j) >= 0
at every critical point rho_j of the child (these are the roots of the node
polynomial), where T_j counts node roots >= rho_j.  Each alternation
condition is a threshold on c; its exact floor or ceiling is pinned by
refining the isolating interval of rho_j, with thresholds that land exactly
on an integer recognised through a polynomial gcd.  When the node polynomial
is squarefree these conditions characterise the admissible children, so no
per-child root test is needed; a node with a repeated root falls back to
enclosure bounds plus an exact Sturm test per candidate.  Prescribed place
counts P_1..P_3 pin the top coefficients outright before the search starts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .intpoly import (
    IntPoly,
    count_real_roots_in,
    isolate_real_roots,
    poly_gcd,
    refine_isolating_interval,
    weil_all_roots_in,
    yun_decomposition,
)
from .weil import ConstraintSet, mobius, pinned_point_counts, satisfies_constraints


def level_poly(g: int, avec: tuple[int, ...]) -> IntPoly:
    """The (g-m)-th derivative of h determined by the first m coefficients.

    avec = (a_1, .., a_m) are the coefficients below the leading term, from
    x^(g-1) downward.  For m = g this is h itself.
    """
    m = len(avec)
    if m > g:
        raise ValueError("prefix longer than degree")
    k = g - m
    coeffs = [0] * (m + 1)
    coeffs[m] = math.perm(g, k)
    for j, a in enumerate(avec, start=1):
        coeffs[m - j] = a * math.perm(g - j, k)
    return IntPoly(coeffs)


@dataclass(frozen=True)
class SearchNode:
    """A partially determined candidate: top coefficients a_1..a_m fixed."""

    g: int
    q: int
    avec: tuple[int, ...]

    @property
    def level(self) -> int:
        return self.g - len(self.avec)

    @property
    def poly(self) -> IntPoly:
        return level_poly(self.g, self.avec)

    def child_poly(self, c: int) -> IntPoly:
        return level_poly(self.g, self.avec + (c,))


def _interval_bound(q: int) -> Fraction:
    """Exact 2 sqrt(q) when 4q is a square, else a tight rational upper bound."""
    s = math.isqrt(4 * q)
    if s * s == 4 * q:
        return Fraction(s)
    den = 10 ** 6
    num = math.isqrt(4 * q * den * den) + 1
    return Fraction(num, den)


def _interval_horner(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval arithmetic in Horner form.

    The endpoints are put over a common denominator so every intermediate
    step runs on plain integers; only the returned pair is a Fraction.
    """
    den = lo.denominator * hi.denominator // math.gcd(lo.denominator, hi.denominator)
    a = lo.numerator * (den // lo.denominator)
    b = hi.numerator * (den // hi.denominator)
    alo = ahi = 0
    dpow = 1
    for c in reversed(p.coeffs):
        cands = (alo * a, alo * b, ahi * a, ahi * b)
        cd = c * dpow
        alo, ahi = min(cands) + cd, max(cands) + cd
        dpow *= den
    deg = max(p.degree, 0)
    scale = den ** deg
    return Fraction(alo, scale), Fraction(ahi, scale)


class _CriticalPoints:
    """Roots of the node polynomial with multiplicities, as refinable intervals."""

    def __init__(self, p: IntPoly, r: Fraction, width: Fraction):
        self.entries: list[tuple[IntPoly, int, tuple[Fraction, Fraction]]] = []
        for w, mult in yun_decomposition(p):
            for iv in isolate_real_roots(w, -r - 1, r, width):
                self.entries.append((w, mult, iv))
        self._sort()

    def _sort(self) -> None:
        self.entries.sort(key=lambda e: e[2][0] + e[2][1])

    def refine(self, width: Fraction) -> None:
        self.entries = [
            (w, m, refine_isolating_interval(w, iv, width))
            for w, m, iv in self.entries
        ]
        self._sort()

    def disjoint(self) -> bool:
        for (_, _, a), (_, _, b) in zip(self.entries, self.entries[1:]):
            if a[1] > b[0]:
                return False
        return True

    def descending_with_cumulative_mult(self):
        total = 0
        for w, m, iv in reversed(self.entries):
            total += m
            yield w, iv, total

    def squarefree(self) -> bool:
        return all(m == 1 for _, m, _ in self.entries)


class Window(NamedTuple):
    """Integer range for the next coefficient.

    With exact=True the range equals the set of c whose child has all roots
    real in the Weil interval; otherwise it is an over-approximation and each
    member still needs the root test.  Empty when lo > hi.
    """

    lo: int
    hi: int
    exact: bool


def _eval_at_weil_bound(p: IntPoly, q: int, sgn: int) -> tuple[int, int]:
    """p(2 * sgn * sqrt(q)) written as a + b*sqrt(q) over the integers."""
    a = b = 0
    for c in reversed(p.coeffs):
        a, b = 2 * sgn * b * q + c, 2 * sgn * a
    return a, b


def _cmp_int_quad(t: int, a: int, b: int, q: int) -> int:
    """Sign of t - (a + b*sqrt(q)), exact for any nonnegative q."""
    d = t - a
    if b == 0:
        return (d > 0) - (d < 0)
    if b > 0:
        if d <= 0:
            return -1
        v = d * d - b * b * q
    else:
        if d >= 0:
            return 1
        v = b * b * q - d * d
    return (v > 0) - (v < 0)


def _ceil_quad_div(a: int, b: int, q: int, k: int) -> int:
    """ceil((a + b*sqrt(q)) / k) for k > 0, exact."""
    v = b * b * q
    r = math.isqrt(v)
    fl = r if b >= 0 else (-r if r * r == v else -r - 1)
    n = -((-(a + fl)) // k)
    while _cmp_int_quad(n * k, a, b, q) < 0:
        n += 1
    while _cmp_int_quad((n - 1) * k, a, b, q) >= 0:
        n -= 1
    return n


def _floor_quad_div(a: int, b: int, q: int, k: int) -> int:
    return -_ceil_quad_div(-a, -b, q, k)


def _sign_at_root(p: IntPoly, w: IntPoly, iv) -> int:
    """Exact sign of p at the root rho of squarefree w inside (l, u].

    An interval enclosure of p over (l, u) settles most queries outright.
    Otherwise zero is recognised through gcd(p, w), and failing that the
    interval is refined until p has no root in it, making the sign constant
    and readable at the endpoint.
    """
    l, u = iv
    for _ in range(3):
        alo, ahi = _interval_horner(p, l, u)
        if alo > 0:
            return 1
        if ahi < 0:
            return -1
        l, u = refine_isolating_interval(w, (l, u), (u - l) / 16)
    common = poly_gcd(p, w)
    if common.degree >= 1:
        n = count_real_roots_in(common, l, u).count
        if common.eval_scaled(l.numerator, l.denominator) == 0:
            n -= 1
        if n:
            return 0
    while True:
        if count_real_roots_in(p, l, u).count == 0:
            v = p.eval_scaled(u.numerator, u.denominator)
            return (v > 0) - (v < 0)
        l, u = refine_isolating_interval(w, (l, u), (u - l) / 16)


def _threshold_at_root(
    a_open: IntPoly, kk: int, w: IntPoly, iv, want_ceil: bool
) -> int:
    """Exact ceil or floor of tau = -a_open(rho)/kk at the root rho of w in iv.

    The isolating interval is refined until at most two integers remain in
    the enclosure of tau; each is then compared against tau exactly through
    the sign of a_open(rho) + n*kk, which is >= 0 iff n >= tau.
    """
    l, u = iv
    while True:
        alo, ahi = _interval_horner(a_open, l, u)
        lo_b, hi_b = -ahi / kk, -alo / kk
        n1 = math.ceil(lo_b) if want_ceil else math.floor(lo_b)
        n2 = math.ceil(hi_b) if want_ceil else math.floor(hi_b)
        if n1 == n2:
            return n1
        c1, c2 = math.ceil(lo_b), math.floor(hi_b)
        if c2 - c1 <= 1:
            if want_ceil:
                for n in range(c1, c2 + 1):
                    if _sign_at_root(a_open + IntPoly((kk * n,)), w, (l, u)) >= 0:
                        return n
                return c2 + 1
            for n in range(c2, c1 - 1, -1):
                if _sign_at_root(a_open + IntPoly((kk * n,)), w, (l, u)) <= 0:
                    return n
            return c1 - 1
        l, u = refine_isolating_interval(w, (l, u), (u - l) / 16)


def extension_range(node: SearchNode) -> Window:
    """Window for the next coefficient; values outside cannot yield a child
    with all roots real in the Weil interval.  See Window for exactness."""
    g, q, avec = node.g, node.q, node.avec
    m = len(avec)
    if m >= g:
        raise ValueError("node is already a leaf")
    d = m + 1
    k = g - m
    kk = math.factorial(k - 1)
    # child with c = 0; the new coefficient enters as c * (k-1)!
    a_open = level_poly(g, avec + (0,))

    ap, bp = _eval_at_weil_bound(a_open, q, 1)
    lowers = [_ceil_quad_div(-ap, -bp, q, kk)]
    an, bn = _eval_at_weil_bound(a_open, q, -1)
    if d % 2 == 1:
        uppers = [_floor_quad_div(-an, -bn, q, kk)]
    else:
        lowers.append(_ceil_quad_div(-an, -bn, q, kk))
        uppers = []

    if m == 0:
        if not uppers:
            raise AssertionError("degree-1 child must have two endpoint bounds")
        return Window(max(lowers), min(uppers), True)

    r = _interval_bound(q)
    crit = _CriticalPoints(node.poly, r, Fraction(1, 8))
    width = Fraction(1, 8)
    while not crit.disjoint():
        width /= 64
        crit.refine(width)

    if crit.squarefree():
        for w, iv, t in crit.descending_with_cumulative_mult():
            if t % 2 == 1:
                uppers.append(_threshold_at_root(a_open, kk, w, iv, False))
            else:
                lowers.append(_threshold_at_root(a_open, kk, w, iv, True))
        return Window(max(lowers), min(uppers), True)

    # repeated critical point: enclosure bounds only, children must be tested
    prev: tuple[int, int] | None = None
    for _ in range(6):
        lo2, hi2 = list(lowers), list(uppers)
        for _, iv, t in crit.descending_with_cumulative_mult():
            alo, ahi = _interval_horner(a_open, iv[0], iv[1])
            if t % 2 == 1:
                hi2.append(math.floor(-alo / kk))
            else:
                lo2.append(math.ceil(-ahi / kk))
        window = (max(lo2), min(hi2))
        if window[0] > window[1] or window == prev or window[1] - window[0] <= 8:
            return Window(window[0], window[1], False)
        prev = window
        width /= 64
        crit.refine(width)
    assert prev is not None
    return Window(prev[0], prev[1], False)


def pinned_prefix(cs: ConstraintSet) -> tuple[int, ...] | None:
    """Coefficients a_1..a_t forced by the prescribed place counts.

    Returns None when the prescription is arithmetically infeasible (pinned
    coefficients would be non-integral), in which case the candidate set is
    empty.
    """
    g, q = cs.g, cs.q
    pinned_r = pinned_point_counts(cs.prescribed_map)
    t = 0
    while (t + 1) in pinned_r and t < g:
        t += 1
    if t == 0:
        return ()
    s = {0: 2 * g}
    cap_a = {0: 1}
    b = {g: 1}
    for n in range(1, t + 1):
        s[n] = q ** n + 1 - pinned_r[n]
        total = s[n] + sum(cap_a[i] * s[n - i] for i in range(1, n))
        if total % n != 0:
            return None
        cap_a[n] = -total // n
        acc = cap_a[n]
        u = 1
        while g - n + 2 * u <= g:
            idx = g - n + 2 * u
            if idx in b:
                acc -= b[idx] * math.comb(idx, u) * q ** u
            u += 1
        b[g - n] = acc
    return tuple(b[g - n] for n in range(1, t + 1))


def _cap_coeff(g: int, q: int, avec: tuple[int, ...], n: int) -> int:
    """Coefficient of x^(2g-n) in the full Weil polynomial, from a_0..a_n."""
    total = 0
    for u in range(n // 2 + 1):
        j = n - 2 * u
        a_j = 1 if j == 0 else avec[j - 1]
        total += a_j * math.comb(g - j, u) * q ** u
    return total


def _profile_state(g: int, q: int, avec: tuple[int, ...], check_to: int):
    """Top Weil coefficients, power sums and place counts pinned by a prefix.

    Returns (caps, ssums, pvals) with caps[i] and ssums[i] for i = 1..m and
    pvals[n] for n <= min(m, check_to).  Place counts beyond check_to are
    never needed, so they are not stored.
    """
    m = len(avec)
    caps = [1] + [_cap_coeff(g, q, avec, n) for n in range(1, m + 1)]
    ssums = [2 * g]
    for n in range(1, m + 1):
        ssums.append(
            -n * caps[n] - sum(caps[i] * ssums[n - i] for i in range(1, n))
        )
    pvals: dict[int, int] = {}
    for n in range(1, min(m, check_to) + 1):
        tot = q ** n + 1 - ssums[n]
        for d in range(1, n):
            if n % d == 0:
                tot += mobius(n // d) * d * pvals[d]
        pvals[n] = tot // n
    return caps, ssums, pvals


def _child_candidates(
    cs: ConstraintSet,
    check_to: int,
    avec: tuple[int, ...],
    caps: list[int],
    ssums: list[int],
    pvals: dict[int, int],
):
    """Admissible next coefficients with their profile increments.

    Yields (c, cap_c, s_c, p_c) for every c passing the window, the
    place-count constraints determined at this level, and, when the window is
    inexact, the all-roots test.  p_c is None when the child level is past
    check_to.
    """
    g, q = cs.g, cs.q
    prescribed = cs.prescribed_map
    node = SearchNode(g, q, avec)
    lo, hi, exact = extension_range(node)
    if lo > hi:
        return
    n = len(avec) + 1
    cap_const = _cap_coeff(g, q, avec + (0,), n)
    dot = sum(caps[i] * ssums[n - i] for i in range(1, n))
    p_ref = None
    if n <= check_to:
        # place count at this level is affine in c with slope one
        s_lo = -n * (cap_const + lo) - dot
        tot = q ** n + 1 - s_lo
        for d in range(1, n):
            if n % d == 0:
                tot += mobius(n // d) * d * pvals[d]
        if tot % n != 0:
            return
        p_ref = tot // n
        want = prescribed.get(n)
        if want is not None:
            c_star = lo + (want - p_ref)
            if c_star < lo or c_star > hi or want < 0:
                return
            lo, hi, p_ref = c_star, c_star, want
        else:
            lo2 = lo - p_ref
            if lo2 > lo:
                lo, p_ref = lo2, 0
    for c in range(lo, hi + 1):
        if exact or weil_all_roots_in(node.child_poly(c), q):
            cap_c = cap_const + c
            s_c = -n * cap_c - dot
            p_c = None if p_ref is None else p_ref + (c - lo)
            yield c, cap_c, s_c, p_c


def _check_limit(cs: ConstraintSet) -> int:
    """Largest n whose place count is worth testing before the leaf."""
    return max(cs.horizon, *cs.prescribed_map.keys()) if cs.prescribed_map else cs.horizon


def _collect(cs: ConstraintSet, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    """DFS from a fixed coefficient prefix; returns full coefficient tuples."""
    g = cs.g
    check_to = _check_limit(cs)
    out: list[tuple[int, ...]] = []
    caps, ssums, pvals = _profile_state(cs.g, cs.q, prefix, check_to)

    def dfs(avec: tuple[int, ...]) -> None:
        if len(avec) == g:
            h = IntPoly(tuple(reversed((1,) + avec)))
            if satisfies_constraints(h, cs).ok:
                out.append(avec)
            return
        n = len(avec) + 1
        for c, cap_c, s_c, p_c in _child_candidates(cs, check_to, avec, caps, ssums, pvals):
            caps.append(cap_c)
            ssums.append(s_c)
            if p_c is not None:
                pvals[n] = p_c
            dfs(avec + (c,))
            caps.pop()
            ssums.pop()
            pvals.pop(n, None)

    dfs(prefix)
    return out


def _branch_worker(args) -> list[tuple[int, ...]]:
    q, g, prescribed, prefix = args
    cs = ConstraintSet(q, g, prescribed)
    return _collect(cs, prefix)


def enumerate_real_weil(cs: ConstraintSet, threads: int = 1) -> list[IntPoly]:
    """All monic degree-g integer h with all roots real in the Weil interval
    and satisfying the prescribed place counts, sorted by coefficient
    sequence from the highest degree down.  Deterministic at any thread
    count."""
    g, q = cs.g, cs.q
    prefix = pinned_prefix(cs)
    if prefix is None:
        return []
    for i in range(1, len(prefix) + 1):
        if not weil_all_roots_in(level_poly(g, prefix[:i]), q):
            return []
    check_to = _check_limit(cs)
    caps, ssums, pvals = _profile_state(g, q, prefix, check_to)
    for n, p in pvals.items():
        if p < 0 or cs.prescribed_map.get(n, p) != p:
            return []

    if threads > 1 and len(prefix) < g:
        branches = [
            prefix + (c,)
            for c, _, _, _ in _child_candidates(cs, check_to, prefix, caps, ssums, pvals)
        ]
        tuples: list[tuple[int, ...]] = []
        if branches:
            with ProcessPoolExecutor(max_workers=threads) as ex:
                for part in ex.map(
                    _branch_worker,
                    [(q, g, cs.prescribed, b) for b in branches],
                ):
                    tuples.extend(part)
    else:
        tuples = _collect(cs, prefix)

    polys = [IntPoly(tuple(reversed((1,) + t))) for t in tuples]
    polys.sort(key=lambda p: tuple(p[g - j] for j in range(g + 1)))
    return polys
