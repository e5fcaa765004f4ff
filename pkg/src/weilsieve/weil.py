"""Real Weil polynomials and their point/place count profiles.

A monic degree-g integer polynomial h is the real Weil polynomial of the
corresponding Weil polynomial f(x) = x^g h(x + q/x), of degree 2g.  From f
the n-th power sum s_n of its roots follows by Newton's identities, the
count over the degree-n extension is R_n = q^n + 1 - s_n, and the number of
degree-n places is P_n = (1/n) sum_{d|n} mu(n/d) R_d.  All arithmetic is
integer-exact; non-integral place counts indicate an ill-formed input and
raise instead of rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .intpoly import IntPoly, ZeroInput, factor_int_poly, weil_all_roots_in
from .localfield import prime_splitting_data


class NotWeilSymmetric(Exception):
    """Raised when a polynomial is not of the form x^g h(x + q/x)."""


class NonIntegralPlaceCount(Exception):
    """Raised when n does not divide sum mu(n/d) R_d; the input is invalid."""


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius undefined for n < 1")
    r, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            r = -r
        p += 1
    if m > 1:
        r = -r
    return r


def _prime_power_base(q: int) -> int:
    """The prime p with q = p^k, or raises for non-prime-powers."""
    if q < 2:
        raise ValueError("q must be at least 2")
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            if m != 1:
                raise ValueError(f"q = {q} is not a prime power")
            return p
        p += 1
    return q  # q itself prime


def real_to_weil(h: IntPoly, q: int) -> IntPoly:
    """f(x) = x^g h(x + q/x) for monic h of degree g."""
    if not h.is_monic:
        raise ValueError("real Weil polynomial must be monic")
    g = h.degree
    kernel = IntPoly((q, 0, 1))
    f = IntPoly.zero()
    for i, b in enumerate(h.coeffs):
        if b:
            f = f + (kernel ** i).shift(g - i) * b
    return f


def weil_to_real(f: IntPoly, q: int) -> IntPoly:
    """Inverse of real_to_weil; raises NotWeilSymmetric if no h exists."""
    if not f.is_monic:
        raise NotWeilSymmetric("Weil polynomial must be monic")
    if f.degree % 2 != 0:
        raise NotWeilSymmetric("Weil polynomial must have even degree")
    g = f.degree // 2
    kernel = IntPoly((q, 0, 1))
    rem = f
    b = [0] * (g + 1)
    for i in range(g, -1, -1):
        b[i] = rem[g + i]
        if b[i]:
            rem = rem - (kernel ** i).shift(g - i) * b[i]
    if not rem.is_zero:
        raise NotWeilSymmetric("functional equation fails")
    return IntPoly(b)


class WeilProfile:
    """Point and place counts attached to a real Weil polynomial."""

    def __init__(self, h: IntPoly, q: int):
        if h.is_zero:
            raise ZeroInput("profile of zero polynomial")
        _prime_power_base(q)
        self.h = h
        self.q = q
        self.g = h.degree
        self.f = real_to_weil(h, q)
        self._A = [self.f[self.f.degree - i] for i in range(self.f.degree + 1)]
        self._s: list[int] = [2 * self.g]

    def _power_sum(self, n: int) -> int:
        d = 2 * self.g
        while len(self._s) <= n:
            k = len(self._s)
            if k <= d:
                v = -k * self._A[k] - sum(
                    self._A[i] * self._s[k - i] for i in range(1, k)
                )
            else:
                v = -sum(self._A[i] * self._s[k - i] for i in range(1, d + 1))
            self._s.append(v)
        return self._s[n]

    def R(self, n: int) -> int:
        """Points over the degree-n extension: q^n + 1 - s_n."""
        if n < 1:
            raise ValueError("n must be positive")
        return self.q ** n + 1 - self._power_sum(n)

    def P(self, n: int) -> int:
        """Places of degree n, by Moebius inversion of R."""
        if n < 1:
            raise ValueError("n must be positive")
        total = sum(mobius(n // d) * self.R(d) for d in range(1, n + 1) if n % d == 0)
        if total % n != 0:
            raise NonIntegralPlaceCount(f"n = {n}: sum {total} not divisible")
        return total // n

    def point_counts(self, n_max: int) -> list[int]:
        return [self.R(n) for n in range(1, n_max + 1)]

    def place_counts(self, n_max: int) -> list[int]:
        return [self.P(n) for n in range(1, n_max + 1)]

    def to_json_dict(self, n_max: int = 0) -> dict:
        n = n_max or max(self.g, 1)
        return {
            "q": self.q,
            "g": self.g,
            "h": self.h.to_coeff_strings(),
            "R": self.point_counts(n),
            "P": self.place_counts(n),
        }


def _sqrt_compare_gt(d: int, s: int, q: int) -> bool:
    """Exact test for d > s * sqrt(q) with s >= 0."""
    if d <= 0:
        return False
    return d * d > s * s * q


def nonneg_horizon(q: int, g: int, cap: int = 400) -> int:
    """Smallest N with P_n > 0 automatic for all n > N.

    Automatic means q^n + 1 - 2g q^(n/2) > sum_{d <= n/2} (q^d + 1 + 2g q^(d/2)),
    which forces n P_n >= R_n - sum over proper divisors > 0 for any h whose
    roots are real and within the Weil interval.  Quantities c + c' sqrt(q)
    are compared exactly via their squares.  The condition is eventually
    monotone; a wide tail window past the last failure is verified explicitly.
    """
    _prime_power_base(q)
    if g < 1:
        raise ValueError("g must be at least 1")

    def half_power(n: int) -> tuple[int, int]:
        # q^(n/2) as a + b sqrt(q)
        if n % 2 == 0:
            return (q ** (n // 2), 0)
        return (0, q ** ((n - 1) // 2))

    def holds(n: int) -> bool:
        ai, bi = half_power(n)
        lhs_i = q ** n + 1 - 2 * g * ai
        lhs_s = -2 * g * bi
        rhs_i = 0
        rhs_s = 0
        for d in range(1, n // 2 + 1):
            ci, di = half_power(d)
            rhs_i += q ** d + 1 + 2 * g * ci
            rhs_s += 2 * g * di
        diff = lhs_i - rhs_i
        s = rhs_s - lhs_s  # condition: diff > s sqrt(q), s >= 0 here
        return _sqrt_compare_gt(diff, s, q)

    last_fail = 0
    for n in range(1, cap + 1):
        if not holds(n):
            last_fail = n
    if last_fail >= cap:
        raise ValueError("horizon search cap exceeded")
    for n in range(last_fail + 1, min(10 * (last_fail + 1) + 50, cap) + 1):
        if not holds(n):
            raise AssertionError("horizon condition not monotone in window")
    return last_fail


def pinned_point_counts(prescribed: Mapping[int, int]) -> dict[int, int]:
    """R_n = sum_{d|n} d P_d for every n whose divisors are all prescribed."""
    out = {}
    for n in sorted(prescribed):
        divs = [d for d in range(1, n + 1) if n % d == 0]
        if all(d in prescribed for d in divs):
            out[n] = sum(d * prescribed[d] for d in divs)
    return out


@dataclass(frozen=True)
class ConstraintSet:
    """Target (q, g) with prescribed place counts for selected degrees."""

    q: int
    g: int
    prescribed: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _prime_power_base(self.q)
        if self.g < 1:
            raise ValueError("g must be at least 1")
        seen = set()
        for n, v in self.prescribed:
            if n < 1 or v < 0 or n in seen:
                raise ValueError("invalid prescription")
            seen.add(n)

    @classmethod
    def make(cls, q: int, g: int, prescribed: Mapping[int, int] | None = None):
        items = tuple(sorted((prescribed or {}).items()))
        return cls(q, g, items)

    @property
    def prescribed_map(self) -> dict[int, int]:
        return dict(self.prescribed)

    @property
    def horizon(self) -> int:
        return nonneg_horizon(self.q, self.g)


@dataclass(frozen=True)
class ConstraintCheck:
    ok: bool
    witness: str = ""


def _local_invariant_denominators(
    f_coeffs: tuple[int, ...], p: int, a: int
) -> tuple[int, ...]:
    """Denominators of the Brauer invariants val_w(pi) f_w / a at the places
    over p of the field generated by an irreducible Weil polynomial."""
    data = prime_splitting_data(f_coeffs, p)
    return tuple(a // math.gcd(a, val * f) for _, f, val in data)


@lru_cache(maxsize=None)
def minimal_factor_multiplicity(h1: IntPoly, q: int) -> int:
    """Least multiplicity with which an irreducible factor can occur in the
    real Weil polynomial of an isogeny class of abelian varieties.

    By the Honda-Tate classification, the simple isogeny class attached to a
    Weil number pi has Weil polynomial m_pi^e with e the least common
    denominator of the local invariants val_w(pi)/val_w(q) * [E_w : Q_p] of
    its endomorphism algebra, so the corresponding real factor only occurs in
    multiples of e.  The factors with pi real are exceptions: for
    x -+ 2 sqrt(q) the e = 2 doubling of m_pi = x -+ sqrt(q) rebuilds exactly
    one copy of the real factor, and for x^2 - 4q the supersingular surface
    with Weil polynomial (x^2 - q)^2 likewise yields multiplicity one.
    """
    if h1.degree == 1 and h1[0] ** 2 == 4 * q:
        return 1
    if h1.degree == 2 and h1[1] == 0 and h1[0] == -4 * q:
        return 1
    p = _prime_power_base(q)
    a = 0
    m = q
    while m > 1:
        m //= p
        a += 1
    if a == 1:
        # val_w(pi) f_w / 1 is always integral
        return 1
    f1 = real_to_weil(h1, q)
    if f1[h1.degree] % p:
        # ordinary case: with the middle coefficient a unit at p, the Weil
        # symmetry c_i = q^(m-i) c_(2m-i) forces the Newton polygon over p
        # onto the two segments of slopes 0 and val_p(q), so val_w(pi) f_w
        # is a multiple of a at every place and all invariants are integral
        return 1
    return math.lcm(*_local_invariant_denominators(tuple(f1.coeffs), p, a))


def satisfies_constraints(h: IntPoly, cs: ConstraintSet) -> ConstraintCheck:
    """Full membership test for the candidate set defined by cs."""
    if h.degree != cs.g:
        return ConstraintCheck(False, f"degree {h.degree}, required {cs.g}")
    if not h.is_monic:
        return ConstraintCheck(False, "not monic")
    if not weil_all_roots_in(h, cs.q):
        return ConstraintCheck(False, "roots not all real in the Weil interval")
    prof = WeilProfile(h, cs.q)
    prescribed = cs.prescribed_map
    try:
        for n in sorted(prescribed):
            got = prof.P(n)
            if got != prescribed[n]:
                return ConstraintCheck(False, f"P_{n} = {got}, required {prescribed[n]}")
        n_top = max([cs.horizon] + list(prescribed))
        for n in range(1, n_top + 1):
            if prof.P(n) < 0:
                return ConstraintCheck(False, f"P_{n} = {prof.P(n)} < 0")
    except NonIntegralPlaceCount as e:
        return ConstraintCheck(False, f"non-integral place count: {e}")
    for w, mult in factor_int_poly(h).factors:
        least = minimal_factor_multiplicity(w, cs.q)
        if mult % least:
            return ConstraintCheck(
                False,
                f"factor {w.pretty()} occurs {mult} times; "
                f"isogeny classes require a multiple of {least}",
            )
    return ConstraintCheck(True)
