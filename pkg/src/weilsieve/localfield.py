"""Exact splitting of a rational prime in the field defined by a polynomial.

Given a monic squarefree integer polynomial f and a prime p, this module
computes the primes w | p of the maximal order of Q[x]/(f) together with
their ramification indices e_w, residue degrees f_w, and the valuations
val_w(theta) of the generator theta = x.  Everything is exact: a p-maximal
order is found by the Pohst-Zassenhaus round-2 iteration (p-radical, then
idealizer, until stable), the primes come from splitting the semisimple
quotient of the order mod p into residue fields, and valuations use an
anti-uniformizer.  The only primitives are integer Hermite normal forms and
GF(p) linear algebra; no floating point, no external algebra system.

Strong self-checks run on every call: the e_w f_w sum to the degree, and the
valuations of theta weighted by residue degrees recover the p-part of its
norm.  A failure raises SplittingError instead of returning bad data.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class SplittingError(Exception):
    """An internal consistency check failed (input likely not squarefree)."""


# ---------------------------------------------------------------------------
# GF(p) linear algebra


def _mod_rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p); returns (nonzero rows, pivot cols)."""
    rows = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                m = rows[i][c]
                rows[i] = [(a - m * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _mod_kernel(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the left null space {v : v M = 0} over GF(p)."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    red, _ = _mod_rref(aug, p)
    return [row[n:] for row in red if not any(row[:n])]


# ---------------------------------------------------------------------------
# Integer Hermite normal form


def _hnf_ext(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF with transform: (H, U) with U unimodular and U mat = H."""
    m = len(mat)
    ncols = len(mat[0]) if m else 0
    h = [list(r) for r in mat]
    u = [[1 if j == i else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        while True:
            live = [i for i in range(r, m) if h[i][c]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(h[i][c]))
            h[r], h[i0] = h[i0], h[r]
            u[r], u[i0] = u[i0], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c]:
                    qt = h[i][c] // h[r][c]
                    h[i] = [a - qt * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - qt * b for a, b in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if r < m and h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                qt = h[i][c] // h[r][c]
                if qt:
                    h[i] = [a - qt * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - qt * b for a, b in zip(u[i], u[r])]
            r += 1
            if r == m:
                break
    return h, u


def _int_kernel(mat: list[list[int]]) -> list[list[int]]:
    """Basis of the saturated integer left null space {v : v M = 0}."""
    h, u = _hnf_ext(mat)
    return [u[i] for i in range(len(h)) if not any(h[i])]


# ---------------------------------------------------------------------------
# Lattices in Q[x]/(f), coordinates in the power basis 1, x, ..., x^(n-1)


class _Lattice:
    """Full-rank Z-lattice in Q^n: rowspan_Z(rows) / den, rows kept in HNF."""

    __slots__ = ("den", "rows", "n")

    def __init__(self, den: int, rows: list[list[int]]):
        h, _ = _hnf_ext(rows)
        h = [r for r in h if any(r)]
        n = len(rows[0])
        if len(h) != n:
            raise SplittingError("lattice not of full rank")
        g = den
        for row in h:
            for x in row:
                g = gcd(g, x)
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            den //= g
            h = [[x // g for x in row] for row in h]
        self.den = den
        self.rows = tuple(tuple(r) for r in h)
        self.n = n

    def __eq__(self, other) -> bool:
        return self.den == other.den and self.rows == other.rows

    def coords(self, vec) -> list[Fraction]:
        """Coordinates of vec (fractions, power basis) in this lattice basis."""
        target = [Fraction(v) * self.den for v in vec]
        out = [Fraction(0)] * self.n
        # rows form an upper triangular matrix with pivot i in column i,
        # so peel off coefficients left to right
        for i in range(self.n):
            coef = target[i] / self.rows[i][i]
            out[i] = coef
            if coef:
                target = [t - coef * b for t, b in zip(target, self.rows[i])]
        if any(target):
            raise SplittingError("vector escaped the ambient space")
        return out

    def contains(self, vec) -> bool:
        return all(c.denominator == 1 for c in self.coords(vec))

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return [tuple(Fraction(x, self.den) for x in row) for row in self.rows]


# ---------------------------------------------------------------------------
# Arithmetic in Q[x]/(f)


def _mulmod(u, v, fc: tuple[int, ...]):
    """Product of two coefficient vectors modulo the monic polynomial fc."""
    n = len(fc) - 1
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    prod[i + j] += a * b
    for d in range(2 * n - 2, n - 1, -1):
        lead = prod[d]
        if lead:
            prod[d] = 0
            for k in range(n):
                prod[d - n + k] -= lead * fc[k]
    return tuple(prod[:n])


def _mult_matrix(g_row, fc: tuple[int, ...]) -> list[list[int]]:
    """Matrix of multiplication by integer vector g in the power basis."""
    n = len(fc) - 1
    rows = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        rows.append(list(_mulmod(e, g_row, fc)))
    return rows


def _multiplier(lat_i: _Lattice, lat_j: _Lattice, fc: tuple[int, ...], p: int) -> _Lattice:
    """The lattice {x in Q[x]/(f) : x * I <= J}.  Requires p * 1 in I and
    I <= J, which bounds the result between 1 and (1/p) J."""
    n = lat_i.n
    bound = _Lattice(lat_j.den * p, [list(r) for r in lat_j.rows])
    gens = list(lat_i.rows)
    k = len(gens)
    width = k * n
    mult_mats = [_mult_matrix(g, fc) for g in gens]
    stacked = []
    for bi in range(n):
        brow = bound.rows[bi]
        full: list[int] = []
        for mg in mult_mats:
            full.extend(
                sum(brow[t] * mg[t][c] for t in range(n)) * lat_j.den
                for c in range(n)
            )
        stacked.append(full)
    beta_scale = bound.den * lat_i.den
    for j in range(k):
        for bi in range(n):
            row = [0] * width
            for c in range(n):
                row[j * n + c] = -beta_scale * lat_j.rows[bi][c]
            stacked.append(row)
    kern = _int_kernel(stacked)
    out_rows = []
    for v in kern:
        alpha = v[:n]
        if any(alpha):
            out_rows.append(
                [sum(alpha[i] * bound.rows[i][c] for i in range(n)) for c in range(n)]
            )
    if len(out_rows) < n:
        raise SplittingError("multiplier lattice degenerate")
    return _Lattice(bound.den, out_rows)


# ---------------------------------------------------------------------------
# Orders: structure constants, p-radical, p-maximalization


def _order_mult_table(order: _Lattice, fc: tuple[int, ...]) -> list[list[list[int]]]:
    """Integer structure constants of the order in its own basis."""
    n = order.n
    basis = order.basis_vectors()
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            cs = order.coords(_mulmod(basis[i], basis[j], fc))
            if any(c.denominator != 1 for c in cs):
                raise SplittingError("order basis is not multiplicatively closed")
            row.append([int(c) for c in cs])
        table.append(row)
    return table


def _table_mul(table, p: int):
    n = len(table)

    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        t = table[i][j]
                        for c in range(n):
                            out[c] = (out[c] + ai * bj * t[c]) % p
        return out

    return mul


def _pth_power_matrix(table, p: int) -> list[list[int]]:
    """Matrix of the GF(p)-linear map x -> x^p on O/pO (row convention)."""
    n = len(table)
    mul = _table_mul(table, p)
    rows = []
    bits = bin(p)[2:]
    for i in range(n):
        base = [1 if j == i else 0 for j in range(n)]
        acc = base
        for bit in bits[1:]:
            acc = mul(acc, acc)
            if bit == "1":
                acc = mul(acc, base)
        rows.append(acc)
    return rows


def _radical_lattice(order: _Lattice, table, p: int) -> _Lattice:
    """The p-radical of the order as a sublattice containing p * order."""
    n = order.n
    frob = _pth_power_matrix(table, p)
    reps = 1
    pk = p
    while pk < n:
        pk *= p
        reps += 1
    power = frob
    for _ in range(reps - 1):
        power = [
            [sum(power[i][t] * frob[t][c] for t in range(n)) % p for c in range(n)]
            for i in range(n)
        ]
    rows = [
        [sum(v[i] * order.rows[i][c] for i in range(n)) for c in range(n)]
        for v in _mod_kernel(power, p)
    ]
    rows.extend([p * x for x in row] for row in order.rows)
    return _Lattice(order.den, rows)


def _p_maximal_order(fc: tuple[int, ...], p: int) -> _Lattice:
    n = len(fc) - 1
    order = _Lattice(1, [[1 if j == i else 0 for j in range(n)] for i in range(n)])
    # each enlargement multiplies the order index by at least p, and the
    # p-part of disc(f) bounds how often that can happen; the cap is generous
    for _ in range(2048):
        table = _order_mult_table(order, fc)
        rad = _radical_lattice(order, table, p)
        bigger = _multiplier(rad, rad, fc, p)
        if bigger == order:
            return order
        order = bigger
    raise SplittingError("maximal order iteration did not stabilize")


# ---------------------------------------------------------------------------
# GF(p)[x] helpers for the splitting step


def _fp_poly_eval(coeffs: list[int], c: int, p: int) -> int:
    acc = 0
    for a in reversed(coeffs):
        acc = (acc * c + a) % p
    return acc


def _fp_poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    b = [x % p for x in b]
    while b and b[-1] == 0:
        b.pop()
    inv = pow(b[-1], -1, p)
    while True:
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            return a
        coef = (a[-1] * inv) % p
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] = (a[off + i] - coef * b[i]) % p


def _fp_poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    b = [x % p for x in b]
    while b and b[-1] == 0:
        b.pop()
    while any(b):
        a, b = b, _fp_poly_mod(a, b, p)
    while a and a[-1] == 0:
        a.pop()
    inv = pow(a[-1], -1, p)
    return [(x * inv) % p for x in a]


def _fp_poly_mulraw(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _fp_poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    b = _fp_poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _fp_poly_mod(_fp_poly_mulraw(result, b, p), mod, p)
        b = _fp_poly_mod(_fp_poly_mulraw(b, b, p), mod, p)
        e >>= 1
    return result


def _fp_poly_divexact(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) - len(b) + 1)
    rem = [x % p for x in a]
    inv = pow(b[-1], -1, p)
    for off in range(len(out) - 1, -1, -1):
        coef = (rem[off + len(b) - 1] * inv) % p
        out[off] = coef
        if coef:
            for i in range(len(b)):
                rem[off + i] = (rem[off + i] - coef * b[i]) % p
    if any(rem):
        raise SplittingError("inexact polynomial division")
    return out


def _fp_poly_roots(coeffs: list[int], p: int) -> list[int]:
    """Roots in GF(p) of a squarefree polynomial that splits over GF(p)."""
    deg = len(coeffs) - 1
    if p <= 4096 or deg >= p:
        return [c for c in range(p) if _fp_poly_eval(coeffs, c, p) == 0]
    # gcd splitting with deterministic seeding, for reproducibility
    roots: list[int] = []
    stack = [list(coeffs)]
    seed = sum(c * 1315423911 ** i for i, c in enumerate(coeffs)) % (2 ** 61 - 1)
    while stack:
        poly = stack.pop()
        while poly and poly[-1] == 0:
            poly.pop()
        d = len(poly) - 1
        if d <= 0:
            continue
        if d == 1:
            roots.append((-poly[0] * pow(poly[1], -1, p)) % p)
            continue
        while True:
            seed = (seed * 6364136223846793005 + 1442695040888963407) % (2 ** 63)
            shift = seed % p
            half = _fp_poly_powmod([shift, 1], (p - 1) // 2, poly, p)
            if not half:
                half = [0]
            half[0] = (half[0] - 1) % p
            if not any(half):
                continue
            g = _fp_poly_gcd(half, poly, p)
            if 0 < len(g) - 1 < d:
                stack.append(g)
                stack.append(_fp_poly_divexact(poly, g, p))
                break
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# Splitting the semisimple quotient into residue fields


def _split_semisimple(amul, identity: list[int], basis: list[list[int]], p: int):
    """Split a commutative semisimple GF(p)-algebra into field components.

    amul multiplies ambient coordinate vectors; basis spans the component
    inside the ambient algebra.  Returns a list of bases, one per field.
    The number of fields equals the dimension of the Frobenius fixed space,
    and any non-scalar fixed element has a squarefree minimal polynomial
    that splits into linear factors, so splitting on its eigenvalues makes
    progress until every component is a field.
    """
    n_amb = len(identity)
    dim = len(basis)
    aug = [list(b) + [1 if j == i else 0 for j in range(dim)] for i, b in enumerate(basis)]
    rr_aug, piv_aug = _mod_rref(aug, p)

    def represent(vec: list[int]) -> list[int]:
        v = [x % p for x in vec]
        coeff = [0] * dim
        for row, c in zip(rr_aug, piv_aug):
            if c < n_amb and v[c]:
                m = v[c]
                v = [(a - m * b) % p for a, b in zip(v, row[:n_amb])]
                coeff = [(a + m * b) % p for a, b in zip(coeff, row[n_amb:])]
        if any(v):
            raise SplittingError("element escaped its component")
        return coeff

    def power_p(vec: list[int]) -> list[int]:
        acc = vec
        for bit in bin(p)[3:]:
            acc = amul(acc, acc)
            if bit == "1":
                acc = amul(acc, vec)
        return acc

    frob_rows = [represent(power_p(b)) for b in basis]
    minus_id = [
        [(frob_rows[i][j] - (1 if i == j else 0)) % p for j in range(dim)]
        for i in range(dim)
    ]
    fixed = _mod_kernel(minus_id, p)
    if len(fixed) == 1:
        return [basis]

    id_coords = represent(identity)
    choice = None
    for v in fixed:
        piv = next(i for i in range(dim) if v[i])
        scale = (id_coords[piv] * pow(v[piv], -1, p)) % p
        if any((scale * v[i] - id_coords[i]) % p for i in range(dim)):
            choice = v
            break
    if choice is None:
        raise SplittingError("no splitting element in the Frobenius fixed space")
    elem = [0] * n_amb
    for c, b in zip(choice, basis):
        if c:
            elem = [(a + c * x) % p for a, x in zip(elem, b)]

    powers = [identity[:], elem[:]]
    mat = [represent(powers[0]), represent(powers[1])]
    while True:
        rr, _ = _mod_rref([r[:] for r in mat], p)
        if len(rr) < len(mat):
            break
        powers.append(amul(powers[-1], elem))
        mat.append(represent(powers[-1]))
    k = len(mat) - 1
    rel = _mod_kernel([list(r) for r in mat], p)[0]
    inv = pow(rel[k], -1, p)
    minpoly = [(x * inv) % p for x in rel]
    roots = _fp_poly_roots(minpoly, p)
    if len(roots) < 2:
        raise SplittingError("splitting element has too few eigenvalues")

    out = []
    for c in roots:
        # Lagrange projector onto the eigenvalue-c part
        proj = identity[:]
        lam = 1
        for c2 in roots:
            if c2 != c:
                shifted = [(x - c2 * y) % p for x, y in zip(elem, identity)]
                proj = amul(proj, shifted)
                lam = (lam * (c - c2)) % p
        img_rows, _ = _mod_rref([amul(proj, b) for b in basis], p)
        sub_basis = [r for r in img_rows if any(r)]
        e_vec = [(x * pow(lam, -1, p)) % p for x in proj]
        out.extend(_split_semisimple(amul, e_vec, sub_basis, p))
    return out


# ---------------------------------------------------------------------------
# Public entry point


@lru_cache(maxsize=None)
def prime_splitting_data(
    f_coeffs: tuple[int, ...], p: int
) -> tuple[tuple[int, int, int], ...]:
    """Splitting data of the prime p in the maximal order of Q[x]/(f).

    f_coeffs: coefficients of a monic squarefree integer polynomial with
    nonzero constant term, lowest degree first, leading 1 included.

    Returns a sorted tuple of (e, f, val(theta)) triples, one per prime
    above p, with val normalized so that val(p) = e.
    """
    if f_coeffs[-1] != 1:
        raise SplittingError("polynomial must be monic")
    if f_coeffs[0] == 0:
        raise SplittingError("constant term must be nonzero")
    n = len(f_coeffs) - 1
    if n < 1:
        raise SplittingError("polynomial must be nonconstant")
    fc = tuple(int(c) for c in f_coeffs)

    order = _p_maximal_order(fc, p)
    table = _order_mult_table(order, fc)
    nn = order.n
    amul = _table_mul(table, p)

    rad = _radical_lattice(order, table, p)
    rad_in_order = [
        [int(c) % p for c in order.coords(vec)] for vec in rad.basis_vectors()
    ]
    rad_rows, rad_piv = _mod_rref(rad_in_order, p)
    keep = [i for i, r in enumerate(rad_rows) if any(r)]
    rad_rows = [rad_rows[i] for i in keep]
    rad_piv = [rad_piv[i] for i in keep]

    def reduce_mod_radical(vec: list[int]) -> list[int]:
        v = [x % p for x in vec]
        for row, c in zip(rad_rows, rad_piv):
            if v[c]:
                m = v[c]
                v = [(a - m * b) % p for a, b in zip(v, row)]
        return v

    identity = [
        int(c) % p for c in order.coords([Fraction(1)] + [Fraction(0)] * (nn - 1))
    ]

    def qmul(a: list[int], b: list[int]) -> list[int]:
        return reduce_mod_radical(amul(a, b))

    comp_rows, _ = _mod_rref(
        [reduce_mod_radical([1 if j == i else 0 for j in range(nn)]) for i in range(nn)],
        p,
    )
    basis_q = [r for r in comp_rows if any(r)]
    id_q = reduce_mod_radical(identity)
    fields = _split_semisimple(qmul, id_q, basis_q, p)

    theta_vec = [Fraction(0), Fraction(1)] + [Fraction(0)] * (nn - 2)
    p_vec = [Fraction(p)] + [Fraction(0)] * (nn - 1)
    norm_val = 0
    c0 = abs(fc[0])
    while c0 % p == 0:
        c0 //= p
        norm_val += 1

    results = []
    for comp_basis in fields:
        f_w = len(comp_basis)
        others: list[list[int]] = []
        for cb in fields:
            if cb is not comp_basis:
                others.extend(cb)
        span_rows = [list(r) for r in rad_rows] + [list(r) for r in others]
        rows = [
            [sum(v[i] * order.rows[i][c] for i in range(nn)) for c in range(nn)]
            for v in span_rows
            if any(v)
        ]
        rows.extend([p * x for x in row] for row in order.rows)
        prime = _Lattice(order.den, rows)
        inv_lat = _multiplier(prime, order, fc, p)
        anti = next(
            (vec for vec in inv_lat.basis_vectors() if not order.contains(vec)), None
        )
        if anti is None:
            raise SplittingError("prime has no anti-uniformizer")

        def val_at(vec, cap: int, anti=anti) -> int:
            v = 0
            cur = tuple(vec)
            while v <= cap:
                cur = _mulmod(cur, anti, fc)
                if not order.contains(cur):
                    return v
                v += 1
            raise SplittingError("valuation exceeded its bound")

        e_w = val_at(p_vec, nn + 4)
        val_theta = val_at(theta_vec, nn * (norm_val + 1) + 4)
        results.append((e_w, f_w, val_theta))

    results.sort()
    if sum(e * f for e, f, _ in results) != n:
        raise SplittingError("ramification degrees do not add up")
    if sum(f * v for _, f, v in results) != norm_val:
        raise SplittingError("generator valuations do not match its norm")
    return tuple(results)
