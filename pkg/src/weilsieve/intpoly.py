"""Exact arithmetic for univariate integer polynomials.

Coefficients are Python ints stored lowest degree first, so ``IntPoly([3, 1])``
is x + 3.  Everything on a decision path is exact: divisions either succeed
over Z or raise, root counting uses Sturm sequences with integer
pseudo-remainders, and the only floating point lives inside the certified
factorisation routine (numeric root clustering followed by exact trial
division, so a wrong cluster can never produce a wrong factor).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

import mpmath

Rat = Union[int, Fraction]


class NotDivisible(Exception):
    """Raised when an exact polynomial division leaves a remainder."""


class FactorizationFailed(Exception):
    """Raised when numeric root clustering cannot be certified."""


class ZeroInput(Exception):
    """Raised when an operation receives a zero where it is meaningless."""


class IntPoly:
    """Immutable integer polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def x_plus(cls, c: int) -> "IntPoly":
        return cls((c, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = cls.one()
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def sort_key(self) -> tuple:
        """Canonical ordering key: degree, then coefficients high to low."""
        return (self.degree, tuple(reversed(self.coeffs)))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, v: Rat) -> Rat:
        acc: Rat = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_scaled(self, u: int, w: int) -> int:
        """w^deg * p(u/w), an integer; sign-faithful for w > 0."""
        if self.is_zero:
            return 0
        acc = 0
        wp = 1
        for c in reversed(self.coeffs):
            acc = acc * u + c * wp
            wp *= w
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divide out the content, preserving the sign of the leading term."""
        if self.is_zero:
            return self
        c = self.content()
        return IntPoly(tuple(x // c for x in self.coeffs))

    def primitive_pos(self) -> "IntPoly":
        p = self.primitive()
        if p.leading < 0:
            p = -p
        return p

    # -- serialization ---------------------------------------------------

    def to_coeff_strings(self) -> list[str]:
        """Decimal strings, lowest degree first, to survive JSON intact."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings: Sequence[str]) -> "IntPoly":
        return cls(int(s) for s in strings)

    def pretty(self, var: str = "x") -> str:
        """Human-readable form, highest degree first."""
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = f"{var}" if mag == 1 else f"{mag}{var}"
            else:
                term = f"{var}^{i}" if mag == 1 else f"{mag}{var}^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


# -- exact division ------------------------------------------------------


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a / b over Z; raises NotDivisible if inexact."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return IntPoly.zero()
    if a.degree < b.degree:
        raise NotDivisible(f"degree {a.degree} < {b.degree}")
    rem = list(a.coeffs)
    lead = b.leading
    q = [0] * (a.degree - b.degree + 1)
    for k in range(a.degree - b.degree, -1, -1):
        top = rem[k + b.degree]
        if top % lead != 0:
            raise NotDivisible("leading coefficient does not divide")
        q[k] = top // lead
        if q[k]:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= q[k] * c
    if any(rem):
        raise NotDivisible("nonzero remainder")
    return IntPoly(q)


def _prem_signed(a: IntPoly, b: IntPoly) -> IntPoly:
    """Integer polynomial proportional to rem(a, b) by a positive constant."""
    da, db = a.degree, b.degree
    d = da - db + 1
    lb = b.leading
    r = list(a.coeffs)
    steps = 0
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        top = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b.coeffs):
            r[shift + i] -= top * c
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    rem = IntPoly(r)
    # total multiplier applied is lb^steps; normalize parity to lb^d
    extra = d - steps
    if extra > 0:
        rem = rem * (lb ** extra)
    if lb < 0 and d % 2 == 1:
        rem = -rem
    return rem


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z with positive leading coefficient."""
    a = a.primitive_pos()
    b = b.primitive_pos()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _prem_signed(a, b).primitive_pos()
        a, b = b, r
    if a.is_zero:
        raise ZeroInput("gcd of zero polynomials")
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """p with all multiplicities reduced to one (primitive, positive lead)."""
    if p.is_zero:
        raise ZeroInput("squarefree part of zero")
    if p.degree == 0:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    return poly_divexact(p.primitive_pos(), g).primitive_pos()


def yun_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Squarefree decomposition p = prod w_i^i (w_i pairwise coprime).

    Returns (w_i, i) pairs with nonconstant w_i only; p must be primitive up
    to sign.  Factors are normalized to positive leading coefficient.
    """
    if p.is_zero:
        raise ZeroInput("decomposition of zero")
    p = p.primitive_pos()
    if p.degree == 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    w = poly_divexact(p, g)
    y = poly_divexact(p.derivative(), g)
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        gi = poly_gcd(w, z) if not z.is_zero else w
        if gi.degree > 0:
            out.append((gi.primitive_pos(), i))
        w = poly_divexact(w, gi)
        y = poly_divexact(z, gi) if not z.is_zero else IntPoly.zero()
        z = y - w.derivative()
        i += 1
    return out


# -- resultants ------------------------------------------------------------


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) = lead(b)^deg(a) * prod a(beta_i) over the roots beta_i of b.

    Satisfies Res(a, b) = (-1)^(deg a * deg b) Res(b, a) and multiplicativity
    in each argument.  Computed exactly via a fraction-valued Euclidean chain
    using Res(u, v) = lead(v)^(du - dr) * (-1)^(dr * dv) * Res(v, u mod v).
    """
    if a.is_zero or b.is_zero:
        raise ZeroInput("resultant with zero polynomial")

    def frem(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        u = list(u)
        while len(u) >= len(v) and any(u):
            while u and u[-1] == 0:
                u.pop()
            if len(u) < len(v):
                break
            coef = u[-1] / v[-1]
            shift = len(u) - len(v)
            for i, c in enumerate(v):
                u[shift + i] -= coef * c
            u.pop()
        while u and u[-1] == 0:
            u.pop()
        return u

    u = [Fraction(c) for c in a.coeffs]
    v = [Fraction(c) for c in b.coeffs]
    res = Fraction(1)
    while True:
        du, dv = len(u) - 1, len(v) - 1
        if dv == 0:
            res *= v[0] ** du
            break
        r = frem(u, v)
        if not r:
            return 0
        dr = len(r) - 1
        res *= v[-1] ** (du - dr) * (-1) ** (dr * dv)
        u, v = v, r
    if res.denominator != 1:
        raise AssertionError("resultant must be an integer")
    return int(res)


def reduced_resultant(a: IntPoly, b: IntPoly) -> int:
    """Smallest positive integer in the Z[x]-ideal generated by a and b.

    Divides Res(a, b) and has the same prime divisors, so it refines the
    resultant as a measure of how far a and b are from comaximal; this is
    the quantity bounding gluing exponents in Howe and Lauter's criteria.
    Requires a and b coprime over Q, else the intersection with Z is zero.
    """
    if a.degree < 1 or b.degree < 1:
        raise ValueError("reduced resultant needs two nonconstant polynomials")
    na, nb = a.degree, b.degree
    size = na + nb
    # Sylvester-style lattice of u*a + v*b with deg u < nb, deg v < na;
    # columns ordered highest degree first so the constants come last
    rows = []
    for poly, copies in ((a, nb), (b, na)):
        for i in range(copies):
            row = [0] * size
            for j, c in enumerate(poly.coeffs):
                row[size - 1 - (i + j)] = c
            rows.append(row)
    r = 0
    for col in range(size):
        for i in range(r + 1, len(rows)):
            while rows[i][col]:
                if rows[r][col]:
                    t = rows[i][col] // rows[r][col]
                    if t:
                        rows[i] = [x - t * y for x, y in zip(rows[i], rows[r])]
                if rows[i][col]:
                    rows[r], rows[i] = rows[i], rows[r]
        if rows[r][col] == 0:
            raise ZeroInput("polynomials share a factor")
        r += 1
    v = rows[size - 1][size - 1]
    return abs(v)


# -- Sturm sequences and root counting -------------------------------------


@dataclass(frozen=True)
class RootCount:
    """Distinct real roots found, plus whether they account for all roots."""

    count: int
    all_in: bool


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of p (expected squarefree) with primitive integer entries."""
    if p.is_zero:
        raise ZeroInput("Sturm chain of zero")
    chain = [p.primitive()]
    if p.degree == 0:
        return chain
    chain.append(p.derivative().primitive())
    while chain[-1].degree > 0:
        r = _prem_signed(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append((-r).primitive())
    return chain


def _variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain: Sequence[IntPoly], point: Rat) -> int:
    fr = Fraction(point)
    u, w = fr.numerator, fr.denominator
    return _variations(_sign(q.eval_scaled(u, w)) for q in chain)


def _variations_at_inf(chain: Sequence[IntPoly], positive: bool) -> int:
    if positive:
        return _variations(_sign(q.leading) for q in chain)
    return _variations(_sign(q.leading) * (-1) ** (q.degree % 2) for q in chain)


def count_real_roots(p: IntPoly) -> int:
    """Distinct real roots of p over the whole line."""
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    chain = sturm_chain(sf)
    return _variations_at_inf(chain, False) - _variations_at_inf(chain, True)


@lru_cache(maxsize=4096)
def _counting_chain(p: IntPoly) -> tuple[IntPoly, tuple[IntPoly, ...]]:
    """Squarefree part of nonzero p with its Sturm chain, cached.

    Root counting is often repeated on the same polynomial over a sequence
    of shrinking intervals, so the chain is worth keeping."""
    sf = squarefree_part(p)
    if sf.degree == 0:
        return sf, ()
    return sf, tuple(sturm_chain(sf))


def count_real_roots_in(p: IntPoly, lo: Rat, hi: Rat) -> RootCount:
    """Distinct real roots of p in the closed interval [lo, hi].

    The flag reports whether every complex root of the squarefree part is
    real and lies in the interval.
    """
    if p.is_zero:
        raise ZeroInput("root count of zero polynomial")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    sf, chain = _counting_chain(p)
    if sf.degree == 0:
        return RootCount(0, True)
    n = _variations_at(chain, lo) - _variations_at(chain, hi)
    if sf.eval_scaled(lo.numerator, lo.denominator) == 0:
        n += 1
    return RootCount(n, n == sf.degree)


def isolate_real_roots(
    p_sf: IntPoly, lo: Rat, hi: Rat, max_width: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals (l, u] for the roots of squarefree p_sf
    inside (lo, hi], sorted in increasing order, each of width <= max_width."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    chain = sturm_chain(p_sf)

    def count(l: Fraction, u: Fraction) -> int:
        return _variations_at(chain, l) - _variations_at(chain, u)

    out: list[tuple[Fraction, Fraction]] = []

    def rec(l: Fraction, u: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            out.append(refine_isolating_interval(p_sf, (l, u), max_width))
            return
        m = (l + u) / 2
        left = count(l, m)
        rec(l, m, left)
        rec(m, u, n - left)

    rec(lo, hi, count(lo, hi))
    return out


def refine_isolating_interval(
    p_sf: IntPoly, interval: tuple[Fraction, Fraction], max_width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (l, u] by bisection until narrow enough.

    Since the root is simple and unique in (l, u], plain sign evaluation
    decides each bisection step; no Sturm chain is needed.
    """
    l, u = interval
    if (u - l) <= max_width:
        return interval
    su = _sign(p_sf.eval_scaled(u.numerator, u.denominator))
    if su == 0:
        # the root is exactly u; clip the left end
        return (max(l, u - max_width), u)
    # sign on (root, u] is su throughout, sign on (l, root) is -su
    while (u - l) > max_width:
        m = (l + u) / 2
        sm = _sign(p_sf.eval_scaled(m.numerator, m.denominator))
        if sm == 0:
            return (max(l, m - max_width), m)
        if sm == su:
            u = m
        else:
            l = m
    return (l, u)


# -- Weil interval test -----------------------------------------------------


def weil_all_roots_in(p: IntPoly, q: int) -> bool:
    """True iff every complex root of p is real and lies in [-2 sqrt q, 2 sqrt q].

    When 4q is a perfect square this is a plain Sturm count.  Otherwise a
    rational sandwich bound r >= 2 sqrt q (denominator 10^6) is combined with
    an exact exclusion of the fringe (2 sqrt q, r] on both sides, performed on
    the even part of p(x) p(-x) so that only rational endpoints appear.
    """
    if p.is_zero:
        raise ZeroInput("Weil interval test of zero")
    s = math.isqrt(4 * q)
    if s * s == 4 * q:
        return count_real_roots_in(p, -s, s).all_in
    den = 10 ** 6
    num = math.isqrt(4 * q * den * den)
    if num * num < 4 * q * den * den:
        num += 1
    r = Fraction(num, den)
    base = count_real_roots_in(p, -r, r)
    if not base.all_in:
        return False
    # roots x of p with x^2 in (4q, r^2] are exactly the fringe escapees
    even = _even_part_of_p_px(p)
    fringe = count_real_roots_in(even, Fraction(4 * q), r * r)
    # count over (4q, r^2]; subtract a root exactly at 4q (not in the fringe)
    adj = fringe.count
    if squarefree_part(even).evaluate(Fraction(4 * q)) == 0:
        adj -= 1
    return adj == 0


def _even_part_of_p_px(p: IntPoly) -> IntPoly:
    """U with U(x^2) = p(x) * p(-x)."""
    pm = IntPoly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))
    prod = p * pm
    assert all(c == 0 for i, c in enumerate(prod.coeffs) if i % 2 == 1)
    return IntPoly(prod.coeffs[0::2])


# -- integer squarefreeness -------------------------------------------------


def is_squarefree_integer(n: int) -> bool:
    """True iff no prime square divides n; raises ZeroInput on 0."""
    if n == 0:
        raise ZeroInput("squarefree test of zero")
    n = abs(n)
    if n < 4:
        return True
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        else:
            d += 1
    return True


# -- factorization ----------------------------------------------------------


@dataclass(frozen=True)
class FactorMultiset:
    """Monic irreducible factors with multiplicities, canonically sorted."""

    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        p = IntPoly.one()
        for f, m in self.factors:
            p = p * f ** m
        return p

    def __iter__(self) -> Iterator[tuple[IntPoly, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def total_degree(self) -> int:
        return sum(f.degree * m for f, m in self.factors)

    def multiplicity_of(self, f: IntPoly) -> int:
        for g, m in self.factors:
            if g == f:
                return m
        return 0

    def pretty(self) -> str:
        parts = []
        for f, m in self.factors:
            s = f.pretty()
            if f.degree > 0 and (len(f.coeffs) - f.coeffs.count(0)) > 1:
                s = f"({s})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return " * ".join(parts) if parts else "1"


MAX_FACTOR_DEGREE = 16


def factor_int_poly(p: IntPoly, max_degree: int = MAX_FACTOR_DEGREE) -> FactorMultiset:
    """Factor a monic integer polynomial into monic irreducibles.

    Numeric roots are clustered into conjugation-closed subsets; a subset is
    accepted only if the rounded subset polynomial divides p exactly, so the
    output is certified.  Precision escalates before a declaration of
    irreducibility.
    """
    if p.is_zero:
        raise ZeroInput("factorization of zero")
    if not p.is_monic:
        raise ValueError("factor_int_poly expects a monic polynomial")
    if p.degree > max_degree:
        raise ValueError(f"degree {p.degree} exceeds limit {max_degree}")
    counts: dict[IntPoly, int] = {}
    # strip powers of x first
    k = 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        counts[IntPoly.x()] = k
    body = IntPoly(coeffs)
    for layer, mult in yun_decomposition(body) if body.degree > 0 else []:
        for irr in _factor_squarefree(layer):
            counts[irr] = counts.get(irr, 0) + mult
    factors = tuple(sorted(counts.items(), key=lambda t: t[0].sort_key()))
    fm = FactorMultiset(factors)
    if fm.expand() != p:
        raise FactorizationFailed("certification product mismatch")
    return fm


def _factor_squarefree(w: IntPoly) -> list[IntPoly]:
    if w.degree <= 1:
        return [w]
    base = 60 + 6 * w.degree + 3 * len(str(max(abs(c) for c in w.coeffs)))
    for attempt, dps in enumerate((base, 2 * base, 4 * base)):
        found = _find_factor_numeric(w, dps)
        if found is not None:
            f, g = found
            return sorted(
                _factor_squarefree(f) + _factor_squarefree(g),
                key=lambda t: t.sort_key(),
            )
    return [w]


def _find_factor_numeric(w: IntPoly, dps: int):
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(
                [mpmath.mpf(c) for c in reversed(w.coeffs)],
                maxsteps=200,
                extraprec=dps * 4,
            )
        except mpmath.libmp.NoConvergence:
            return None
        tol = mpmath.mpf(2) ** (-mpmath.mp.prec // 3)
        reals = [r for r in roots if abs(mpmath.im(r)) < tol]
        complexes = [r for r in roots if abs(mpmath.im(r)) >= tol and mpmath.im(r) > 0]
        if len(reals) + 2 * len(complexes) != w.degree:
            return None
        items: list[tuple[int, list]] = [(1, [mpmath.re(r)]) for r in reals]
        items += [(2, [r, mpmath.conj(r)]) for r in complexes]
        for size in range(1, w.degree // 2 + 1):
            for combo in _subsets_with_size(items, size):
                cand = _poly_from_roots_rounded(combo)
                if cand is None:
                    continue
                try:
                    quot = poly_divexact(w, cand)
                except NotDivisible:
                    continue
                return cand, quot
    return None


def _subsets_with_size(items, size):
    n = len(items)
    for mask in range(1, 1 << n):
        total = 0
        chosen = []
        for i in range(n):
            if mask >> i & 1:
                total += items[i][0]
                chosen.extend(items[i][1])
        if total == size:
            yield chosen


def _poly_from_roots_rounded(roots) -> IntPoly | None:
    coeffs = [mpmath.mpc(1)]
    for r in roots:
        nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * (-r)
            nxt[i + 1] += c
        coeffs = nxt
    out = []
    for c in coeffs:
        re = mpmath.re(c)
        n = int(mpmath.nint(re))
        if abs(re - n) > mpmath.mpf("0.25") or abs(mpmath.im(c)) > mpmath.mpf("0.25"):
            return None
        out.append(n)
    return IntPoly(out)
