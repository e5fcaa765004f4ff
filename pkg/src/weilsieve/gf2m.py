"""Arithmetic in the small binary fields GF(2^m), m <= 16.

Elements are nonnegative integers below 2^m whose bits are the
coefficients in the polynomial basis modulo a frozen defining polynomial:
the lexicographically least irreducible of each degree, so that serialized
elements mean the same thing across runs. Each context verifies its
defining polynomial by exhaustive trial division at construction and
builds discrete log/exp tables once, making products, powers, inverses,
and cube-residue tests constant-time lookups.

GF(4) is the m = 2 context with defining polynomial x^2 + x + 1; omega
denotes the fixed root given by the basis element x, and embeddings into
GF(4^d) locate the least root of x^2 + x + 1 there.
"""

from __future__ import annotations

from functools import cached_property

DEFINING_POLYS: dict[int, int] = {
    1: 2,       # x
    2: 7,       # x^2 + x + 1
    3: 11,      # x^3 + x + 1
    4: 19,      # x^4 + x + 1
    5: 37,      # x^5 + x^2 + 1
    6: 67,      # x^6 + x + 1
    7: 131,     # x^7 + x + 1
    8: 283,     # x^8 + x^4 + x^3 + x + 1
    9: 515,     # x^9 + x + 1
    10: 1033,   # x^10 + x^3 + 1
    11: 2053,   # x^11 + x^2 + 1
    12: 4105,   # x^12 + x^3 + 1
    13: 8219,   # x^13 + x^4 + x^3 + x + 1
    14: 16417,  # x^14 + x^5 + 1
    15: 32771,  # x^15 + x + 1
    16: 65579,  # x^16 + x^5 + x^3 + x + 1
}


class DivisionByZero(ZeroDivisionError):
    """Inverse or division of zero in a binary field."""


class NoSuchElement(Exception):
    """The context lacks a requested special element (e.g. a cube root of
    unity in a field of order not 1 mod 3)."""


def _poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, b: int) -> int:
    db = _poly_deg(b)
    while a and _poly_deg(a) >= db:
        a ^= b << (_poly_deg(a) - db)
    return a


def is_irreducible_gf2(f: int) -> bool:
    """Exhaustive trial division over GF(2); fine for degrees up to 16."""
    m = _poly_deg(f)
    if m <= 0:
        return False
    for d in range(1, m // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_mod(f, g) == 0:
                return False
    return True


class GFContext:
    """The field GF(2^m) over the frozen degree-m defining polynomial.

    Immutable after construction; all operations are pure functions of
    element integers, so a context can be shared freely.
    """

    def __init__(self, m: int):
        if m not in DEFINING_POLYS:
            raise ValueError(f"no frozen defining polynomial for m = {m}")
        self.m = m
        self.poly = DEFINING_POLYS[m]
        if not is_irreducible_gf2(self.poly):
            raise AssertionError(f"defining polynomial {self.poly} reducible")
        self.order = 1 << m
        self.group_order = self.order - 1
        self._build_tables()

    def _raw_mul(self, a: int, b: int) -> int:
        r = 0
        top = self.order
        poly = self.poly
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= poly
        return r

    def _build_tables(self) -> None:
        n = self.group_order
        if n == 1:
            self.generator = 1
            self._exp = [1]
            self._log = [0, 0]
            self._trace_mask = 1
            return
        for gen in range(2, self.order):
            exp = [1] * n
            cur = 1
            ok = True
            for i in range(1, n):
                cur = self._raw_mul(cur, gen)
                if cur == 1:
                    ok = False
                    break
                exp[i] = cur
            if ok and self._raw_mul(cur, gen) == 1:
                break
        else:
            raise AssertionError("no multiplicative generator found")
        log = [0] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        self.generator = gen
        self._exp = exp
        self._log = log
        # trace is GF(2)-linear: keep the mask of basis bits with trace 1
        mask = 0
        for i in range(self.m):
            e = 1 << i
            t, cur = 0, e
            for _ in range(self.m):
                t ^= cur
                cur = self._raw_mul(cur, cur)
            if t:
                mask |= e
        self._trace_mask = mask

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(2^{self.m})")
        return a

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.group_order]

    def sq(self, a: int) -> int:
        return self.mul(a, a)

    def frobenius(self, a: int) -> int:
        """The absolute Frobenius, squaring."""
        return self.sq(a)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % self.group_order]

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self.group_order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2), as 0 or 1."""
        return (self._check(a) & self._trace_mask).bit_count() & 1

    def is_cube(self, a: int) -> bool:
        """Cube-residue test in the multiplicative group; 0 counts as a
        cube. Every element is a cube unless the order is 1 mod 3."""
        self._check(a)
        if a == 0 or self.group_order % 3:
            return True
        return self.pow(a, self.group_order // 3) == 1

    @cached_property
    def omega(self) -> int:
        """The least root of x^2 + x + 1: a fixed primitive cube root of
        unity. Exists iff the group order is divisible by 3."""
        if self.group_order % 3:
            raise NoSuchElement(f"GF(2^{self.m}) has no cube root of unity")
        for e in range(2, self.order):
            if self.sq(e) ^ e ^ 1 == 0:
                return e
        raise AssertionError("unreachable: order forces a root")

    def embed_gf4(self, t: int) -> int:
        """Image of a GF(4) element (0, 1, omega = 2, omega^2 = 3)."""
        if not 0 <= t < 4:
            raise ValueError(f"{t} is not a GF(4) element")
        w = self.omega
        return (0, 1, w, w ^ 1)[t]

    @cached_property
    def _artin_schreier_rows(self) -> list[tuple[int, int, int]]:
        """Echelonized rows (pivot bit, value, preimage) of t -> t^2 + t."""
        rows = []
        for i in range(self.m):
            e = 1 << i
            rows.append((self.sq(e) ^ e, e))
        echelon: list[tuple[int, int, int]] = []
        for val, pre in rows:
            for piv, v2, p2 in echelon:
                if val & piv:
                    val ^= v2
                    pre ^= p2
            if val:
                echelon.append((1 << (val.bit_length() - 1), val, pre))
        echelon.sort(reverse=True)
        return echelon

    def artin_schreier_root(self, u: int) -> int | None:
        """A solution t of t^2 + t = u, or None when trace(u) = 1; the
        other solution is t + 1."""
        self._check(u)
        t = 0
        for piv, val, pre in self._artin_schreier_rows:
            if u & piv:
                u ^= val
                t ^= pre
        if u:
            return None
        return t


_CONTEXTS: dict[int, GFContext] = {}


def gf_context(m: int) -> GFContext:
    """Shared per-degree context cache."""
    if m not in _CONTEXTS:
        _CONTEXTS[m] = GFContext(m)
    return _CONTEXTS[m]
