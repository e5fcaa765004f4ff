"""Places of a genus-2 curve over GF(4) and a tame cubic Kummer cover.

The base curve D is the affine model y^2 + h(x) y = g(x) together with its
points over v = 0 in the chart u = y/x^3, v = 1/x, where the equation
becomes u^2 + H(v) u = G(v) with H, G the degree-reversed h and g.  A cover
function f = c(x) y + d(x) defines C as z^3 = f.

Everything reduces to place-level data of D: places are enumerated as
Frobenius orbits of points over GF(4^d), the divisor of f is read off from
local power-series expansions, and each place is classified as split, inert,
or ramified in C/D by the valuation of f mod 3 and the cube-residue test on
its unit part.  Point counts of C then follow by pure bookkeeping, the genus
from Riemann-Hurwitz (the cover degree 3 is prime to the characteristic, so
all ramification is tame), and the real Weil polynomial of C by inverting
Newton's identities on the counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .gf2m import GFContext, gf_context
from .intpoly import IntPoly, weil_all_roots_in
from .weil import ConstraintSet, WeilProfile, satisfies_constraints

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"

_MAX_DEGREE = 8
_SERIES_ORDER = 16


class LiftFailed(Exception):
    """A power-series branch could not be lifted; signals a singular point."""


class DegreeMismatch(Exception):
    """The computed divisor does not have degree zero."""


class InconsistentCounts(Exception):
    """Point counts incompatible with a curve of the expected genus."""


def _trim(cs: Iterable[int]) -> tuple[int, ...]:
    out = list(cs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _deriv4(cs: tuple[int, ...]) -> tuple[int, ...]:
    """Formal derivative of a GF(4)-coefficient polynomial (characteristic 2)."""
    return _trim(cs[i] if i % 2 else 0 for i in range(1, len(cs)))


def _embed(cs: tuple[int, ...], F: GFContext) -> tuple[int, ...]:
    return tuple(F.embed_gf4(t) for t in cs)


def _eval(embedded: Sequence[int], x: int, F: GFContext) -> int:
    acc = 0
    for cf in reversed(embedded):
        acc = F.add(F.mul(acc, x), cf)
    return acc


@dataclass(frozen=True)
class KummerCoverSpec:
    """Base curve y^2 + h(x) y = g(x) with cover z^3 = c(x) y + d(x).

    Coefficient tuples hold GF(4) elements encoded 0..3 (0, 1, omega,
    omega^2), lowest degree first.  Construction enforces the supported
    shape: deg h <= 3 and deg g <= 6 with the top x^3 coefficient of h
    nonzero (so the fiber over v = 0 is separable), deg c <= 3 and
    deg d <= 6 (so f stays polynomial in the chart scaled by v^6), and a
    nonsingular affine model, checked exhaustively over GF(4^k) for
    k <= 3, which covers every root of h.
    """

    h: tuple[int, ...] = (1, 1, 0, 1)
    g: tuple[int, ...] = (0, 0, 1, 0, 1, 1, 1)
    c: tuple[int, ...] = (1, 1)
    d: tuple[int, ...] = (0, 0, 1)

    def __post_init__(self):
        for name, cap in (("h", 3), ("g", 6), ("c", 3), ("d", 6)):
            cs = _trim(getattr(self, name))
            if any(not 0 <= t <= 3 for t in cs):
                raise ValueError(f"{name}: coefficients must encode GF(4) elements")
            if len(cs) > cap + 1:
                raise ValueError(f"{name}: degree above {cap} not supported")
            object.__setattr__(self, name, cs)
        if len(self.h) != 4:
            raise ValueError("h must have degree exactly 3")
        if not any(self.c) and not any(self.d):
            raise ValueError("cover function is zero")
        hd, gd = _deriv4(self.h), _deriv4(self.g)
        for k in (1, 2, 3):
            F = gf_context(2 * k)
            h_e, g_e = _embed(self.h, F), _embed(self.g, F)
            hd_e, gd_e = _embed(hd, F), _embed(gd, F)
            for x0 in range(F.order):
                if _eval(h_e, x0, F):
                    continue
                # with h(x0) = 0 the fiber holds the single point
                # y0 = sqrt(g(x0)); singular iff the x-partial vanishes too
                y0 = F.pow(_eval(g_e, x0, F), F.order // 2)
                if F.add(F.mul(_eval(hd_e, x0, F), y0), _eval(gd_e, x0, F)) == 0:
                    raise ValueError("affine model is singular")

    @classmethod
    def from_config(cls, text: str) -> "KummerCoverSpec":
        """Parse 'name = c0,c1,...' lines for h, g, c, d (GF(4) codes)."""
        found: dict[str, tuple[int, ...]] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw!r}")
            key, _, rhs = line.partition("=")
            key = key.strip()
            if key not in ("h", "g", "c", "d") or key in found:
                raise ValueError(f"bad config key: {key!r}")
            found[key] = tuple(int(t.strip()) for t in rhs.split(","))
        missing = {"h", "g", "c", "d"} - set(found)
        if missing:
            raise ValueError(f"config is missing {sorted(missing)}")
        return cls(**found)


@dataclass(frozen=True)
class PlaceRecord:
    """One place of the base curve with its behavior in the cover.

    Affine places carry the canonical representative (x, y), the smallest
    point of the Frobenius orbit, with coordinates in GF(4^degree); the
    places over v = 0 instead carry a label and the chart coordinate u.
    """

    degree: int
    x: int | None
    y: int | None
    infinity: str | None
    u: int | None
    f_valuation: int
    kummer_behavior: str

    @property
    def is_infinite(self) -> bool:
        return self.infinity is not None

    def key(self) -> tuple:
        return (self.degree, self.infinity, self.x, self.y)

    def sort_key(self) -> tuple:
        return (
            self.degree,
            self.is_infinite,
            self.x if self.x is not None else self.u,
            self.y if self.y is not None else -1,
        )


# -- local power series ------------------------------------------------------


def _branch_series(
    A: Sequence[int], B: Sequence[int], y0: int, order: int, F: GFContext
) -> list[int]:
    """Coefficients of the unique series Y with Y(0) = y0 solving
    Y^2 + A(t) Y = B(t), where A(0) is a unit.

    In characteristic 2 the t^n coefficient of Y^2 is Y_{n/2}^2 for even n
    and zero otherwise, so the coefficients follow by direct recurrence.
    """
    if not A or A[0] == 0:
        raise LiftFailed("branch is not separable here")
    if F.add(F.mul(y0, y0), F.add(F.mul(A[0], y0), B[0] if B else 0)):
        raise LiftFailed("starting value does not satisfy the equation")
    a0inv = F.inv(A[0])
    ys = [y0] + [0] * (order - 1)
    for n in range(1, order):
        s = B[n] if n < len(B) else 0
        if n % 2 == 0:
            half = ys[n // 2]
            s = F.add(s, F.mul(half, half))
        for i in range(1, min(n, len(A) - 1) + 1):
            if A[i]:
                s = F.add(s, F.mul(A[i], ys[n - i]))
        ys[n] = F.mul(a0inv, s)
    return ys


def _taylor_shift(cs: tuple[int, ...], x0: int, F: GFContext) -> list[int]:
    """Coefficients of p(x0 + t) for a GF(4)-coefficient p, over F."""
    out = [0]
    for code in reversed(cs):
        nxt = [0] * (len(out) + 1)
        for i, a in enumerate(out):
            if a:
                nxt[i] = F.add(nxt[i], F.mul(a, x0))
                nxt[i + 1] = F.add(nxt[i + 1], a)
        nxt[0] = F.add(nxt[0], F.embed_gf4(code))
        out = nxt
    return out


def _ser_mul(a: Sequence[int], b: Sequence[int], order: int, F: GFContext) -> list[int]:
    out = [0] * order
    for i, ai in enumerate(a):
        if ai and i < order:
            for j, bj in enumerate(b):
                if bj and i + j < order:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return out


def _x_branch_series(
    cover: KummerCoverSpec, F: GFContext, x0: int, y0: int, order: int
) -> list[int]:
    """Series X(t) for the branch through (x0, y0) when h(x0) = 0, with
    uniformizer t = y - y0; solved coefficient by coefficient against
    P(x; t) = g(x) + (y0 + t) h(x) + y0^2 + t^2."""
    h_e, g_e = _embed(cover.h, F), _embed(cover.g, F)
    hd_e, gd_e = _embed(_deriv4(cover.h), F), _embed(_deriv4(cover.g), F)
    unit = F.add(F.mul(_eval(hd_e, x0, F), y0), _eval(gd_e, x0, F))
    if unit == 0:
        raise LiftFailed("both partial derivatives vanish")
    inv_u = F.inv(unit)
    # coefficients of P in x, each a series in t
    pcs: list[list[int]] = []
    for i in range(max(len(h_e), len(g_e))):
        gi = g_e[i] if i < len(g_e) else 0
        hi = h_e[i] if i < len(h_e) else 0
        row = [F.add(gi, F.mul(y0, hi)), hi]
        if i == 0:
            row[0] = F.add(row[0], F.mul(y0, y0))
            row += [1]
        pcs.append(row)
    X = [x0] + [0] * (order - 1)
    for n in range(1, order):
        acc = [0] * order
        for row in reversed(pcs):
            acc = _ser_mul(acc, X, order, F)
            for j, v in enumerate(row):
                acc[j] = F.add(acc[j], v)
        if any(acc[:n]):
            raise LiftFailed("residual failed to cancel")
        X[n] = F.mul(acc[n], inv_u)
    return X


def local_series_y(
    place: "PlaceRecord | tuple[int, int]" = (0, 0),
    order: int = 7,
    cover: KummerCoverSpec | None = None,
) -> list[int]:
    """Power-series coefficients of the branch y(t), t = x - x0, at a
    degree-1 affine place where x is a uniformizer (h(x0) != 0).

    For the place (0, 0) of the default curve this is the series beginning
    x^2 + x^3 + x^4 + x^5.  Coefficients are GF(4) codes.
    """
    cover = DEFAULT_COVER if cover is None else cover
    if not 1 <= order <= 32:
        raise ValueError("order must be between 1 and 32")
    if isinstance(place, PlaceRecord):
        if place.is_infinite or place.degree != 1:
            raise ValueError("series expansion expects a degree-1 affine place")
        x0, y0 = place.x, place.y
    else:
        x0, y0 = place
    F = gf_context(2)
    A = _taylor_shift(cover.h, x0, F)
    B = _taylor_shift(cover.g, x0, F)
    return _branch_series(A, B, y0, order, F)


# -- place enumeration -------------------------------------------------------


def _fiber_points(h_x: int, g_x: int, F: GFContext) -> tuple[int, ...]:
    """Solutions y of y^2 + h_x y = g_x over F."""
    if h_x == 0:
        return (F.pow(g_x, F.order // 2),)
    w = F.mul(g_x, F.inv(F.mul(h_x, h_x)))
    t = F.artin_schreier_root(w)
    if t is None:
        return ()
    return (F.mul(h_x, t), F.mul(h_x, t ^ 1))


@lru_cache(maxsize=None)
def _affine_orbit_reps(cover: KummerCoverSpec, d: int) -> tuple[tuple[int, int], ...]:
    """Canonical (x, y) representatives of the degree-d affine places."""
    F = gf_context(2 * d)
    h_e, g_e = _embed(cover.h, F), _embed(cover.g, F)
    reps = set()
    for x0 in range(F.order):
        for y0 in _fiber_points(_eval(h_e, x0, F), _eval(g_e, x0, F), F):
            orbit = [(x0, y0)]
            cx, cy = F.pow(x0, 4), F.pow(y0, 4)
            while (cx, cy) != (x0, y0):
                orbit.append((cx, cy))
                cx, cy = F.pow(cx, 4), F.pow(cy, 4)
            if len(orbit) == d:
                reps.add(min(orbit))
    return tuple(sorted(reps))


@lru_cache(maxsize=None)
def _infinite_places_raw(cover: KummerCoverSpec) -> tuple[tuple[str, int, int], ...]:
    """(label, degree, u root) for the places over v = 0.

    The fiber there is u^2 + h_3 u = g_6 with h_3 != 0, hence separable:
    either two roots in GF(4) or a conjugate pair in GF(16)."""
    F4 = gf_context(2)
    h3 = F4.embed_gf4(cover.h[3])
    g6 = F4.embed_gf4(cover.g[6] if len(cover.g) > 6 else 0)
    roots = sorted(u for u in range(4) if F4.add(F4.mul(u, u), F4.mul(h3, u)) == g6)
    if roots:
        return (("Q1", 1, roots[0]), ("Q2", 1, roots[1]))
    F16 = gf_context(4)
    h3e, g6e = F16.embed_gf4(cover.h[3]), F16.embed_gf4(cover.g[6] if len(cover.g) > 6 else 0)
    roots16 = sorted(
        u for u in range(16) if F16.add(F16.mul(u, u), F16.mul(h3e, u)) == g6e
    )
    return (("Q1", 2, roots16[0]),)


# -- the divisor of f --------------------------------------------------------


def _f_valuation_affine(
    cover: KummerCoverSpec, F: GFContext, x0: int, y0: int
) -> tuple[int, int]:
    """(valuation, unit leading coefficient) of f at an affine place."""
    order = _SERIES_ORDER
    h_x = _eval(_embed(cover.h, F), x0, F)
    if h_x:
        Y = _branch_series(
            _taylor_shift(cover.h, x0, F), _taylor_shift(cover.g, x0, F), y0, order, F
        )
        f_ser = _ser_mul(_taylor_shift(cover.c, x0, F), Y, order, F)
        for j, v in enumerate(_taylor_shift(cover.d, x0, F)):
            if j < order:
                f_ser[j] = F.add(f_ser[j], v)
    else:
        X = _x_branch_series(cover, F, x0, y0, order)
        cX = [0] * order
        dX = [0] * order
        for row, cs in ((cX, cover.c), (dX, cover.d)):
            for code in reversed(_embed(cs, F)):
                nxt = _ser_mul(row, X, order, F)
                nxt[0] = F.add(nxt[0], code)
                row[:] = nxt
        f_ser = _ser_mul(cX, [y0, 1], order, F)
        for j in range(order):
            f_ser[j] = F.add(f_ser[j], dX[j])
    for v, cf in enumerate(f_ser):
        if cf:
            return v, cf
    raise LiftFailed("f vanishes to unexpectedly high order")


@lru_cache(maxsize=None)
def _infinite_val_units(cover: KummerCoverSpec) -> dict[str, tuple[int, int]]:
    """label -> (valuation, unit leading coefficient) of f over v = 0.

    With u = y/x^3 and v = 1/x, v^6 f = (v^3 c(1/v)) u + v^6 d(1/v) is a
    power series in v whose coefficient polynomials are the degree-reversed
    c and d; the valuation of f is its v-order minus 6.
    """
    out = {}
    rev = lambda cs, top: tuple(cs[top - i] if top - i < len(cs) else 0 for i in range(top + 1))
    H, G = rev(cover.h, 3), rev(cover.g, 6)
    C, D = rev(cover.c, 3), rev(cover.d, 6)
    order = _SERIES_ORDER
    for label, deg, u0 in _infinite_places_raw(cover):
        F = gf_context(2 * deg)
        U = _branch_series(_embed(H, F), _embed(G, F), u0, order, F)
        n_ser = _ser_mul(_embed(C, F), U, order, F)
        for j, v in enumerate(_embed(D, F)):
            n_ser[j] = F.add(n_ser[j], v)
        for v, cf in enumerate(n_ser):
            if cf:
                out[label] = (v - 6, cf)
                break
        else:
            raise LiftFailed("f vanishes to unexpectedly high order at infinity")
    return out


@lru_cache(maxsize=None)
def _divisor_table(cover: KummerCoverSpec) -> dict[tuple, tuple[int, int]]:
    """Support of div f: place key -> (valuation, unit coefficient).

    Affine zeros are searched through degree 6; the degree-sum check below
    guarantees nothing was missed, since the poles all lie over v = 0.
    """
    table: dict[tuple, tuple[int, int]] = {}
    total = 0
    for d in range(1, 7):
        F = gf_context(2 * d)
        c_e, d_e = _embed(cover.c, F), _embed(cover.d, F)
        for x0, y0 in _affine_orbit_reps(cover, d):
            if F.add(F.mul(_eval(c_e, x0, F), y0), _eval(d_e, x0, F)):
                continue
            val, unit = _f_valuation_affine(cover, F, x0, y0)
            table[(d, None, x0, y0)] = (val, unit)
            total += val * d
    for label, deg, _u0 in _infinite_places_raw(cover):
        val, unit = _infinite_val_units(cover)[label]
        if val:
            table[(deg, label, None, None)] = (val, unit)
            total += val * deg
    if total != 0:
        raise DegreeMismatch(f"divisor of f has degree {total}, expected 0")
    return table


# -- splitting classification ------------------------------------------------


def _classify(val: int, unit: int, F: GFContext) -> str:
    if val % 3:
        return RAMIFIED
    return SPLIT if F.pow(unit, (F.order - 1) // 3) == 1 else INERT


def kummer_place_behavior(
    place: PlaceRecord, cover: KummerCoverSpec | None = None
) -> str:
    """split / inert / ramified for one place, recomputed from scratch:
    ramified iff val(f) is not a multiple of 3, and otherwise by the
    cube-residue test on the unit part of f, which for valuation 0 is just
    the value of f at the place."""
    cover = DEFAULT_COVER if cover is None else cover
    F = gf_context(2 * place.degree)
    if place.is_infinite:
        val, unit = _infinite_val_units(cover)[place.infinity]
    else:
        h_e, g_e = _embed(cover.h, F), _embed(cover.g, F)
        if place.y not in _fiber_points(
            _eval(h_e, place.x, F), _eval(g_e, place.x, F), F
        ):
            raise ValueError("place is not on the curve")
        hit = _divisor_table(cover).get(place.key())
        if hit is not None:
            val, unit = hit
        else:
            val = 0
            unit = F.add(
                F.mul(_eval(_embed(cover.c, F), place.x, F), place.y),
                _eval(_embed(cover.d, F), place.x, F),
            )
    return _classify(val, unit, F)


# -- the public place table ----------------------------------------------------


def _zeta_check(cover: KummerCoverSpec, by_degree: dict[int, int], max_degree: int) -> None:
    """Fit a genus-2 real Weil polynomial to the brute-force N_1, N_2 of D
    and compare its predicted place counts with the enumerated ones."""
    n1, n2 = (brute_force_count_D(n, cover) for n in (1, 2))
    a1 = n1 - 5
    a0, rem = divmod(n2 - 33 + a1 * a1, 2)
    h_d = IntPoly((a0, a1, 1))
    if rem or not weil_all_roots_in(h_d, 4):
        raise InconsistentCounts(
            f"N_1 = {n1}, N_2 = {n2} do not fit a genus-2 curve over GF(4)"
        )
    prof = WeilProfile(h_d, 4)
    for d in range(1, max_degree + 1):
        if prof.P(d) != by_degree.get(d, 0):
            raise InconsistentCounts(
                f"{by_degree.get(d, 0)} places of degree {d}, zeta predicts {prof.P(d)}"
            )


def places_D(max_degree: int, cover: KummerCoverSpec | None = None) -> list[PlaceRecord]:
    """All places of D of degree <= max_degree, annotated with the valuation
    of f and the splitting behavior in the cover, sorted by degree with the
    places over v = 0 after the affine ones.  The counts per degree are
    cross-checked against the zeta function fitted to brute-force N_1, N_2."""
    if not 1 <= max_degree <= _MAX_DEGREE:
        raise ValueError(f"max_degree must be between 1 and {_MAX_DEGREE}")
    cover = DEFAULT_COVER if cover is None else cover
    div = _divisor_table(cover)
    out: list[PlaceRecord] = []
    for d in range(1, max_degree + 1):
        F = gf_context(2 * d)
        c_e, d_e = _embed(cover.c, F), _embed(cover.d, F)
        for x0, y0 in _affine_orbit_reps(cover, d):
            hit = div.get((d, None, x0, y0))
            if hit is not None:
                val, unit = hit
            else:
                val = 0
                unit = F.add(F.mul(_eval(c_e, x0, F), y0), _eval(d_e, x0, F))
            out.append(
                PlaceRecord(d, x0, y0, None, None, val, _classify(val, unit, F))
            )
        for label, deg, u0 in _infinite_places_raw(cover):
            if deg == d:
                val, unit = _infinite_val_units(cover)[label]
                out.append(
                    PlaceRecord(deg, None, None, label, u0, val, _classify(val, unit, F))
                )
    by_degree: dict[int, int] = {}
    for rec in out:
        by_degree[rec.degree] = by_degree.get(rec.degree, 0) + 1
    _zeta_check(cover, by_degree, max_degree)
    return sorted(out, key=PlaceRecord.sort_key)


def divisor_of_f(
    cover: KummerCoverSpec | None = None,
) -> list[tuple[PlaceRecord, int]]:
    """Zeros and poles of f with exact valuations, as (place, valuation).

    Zeros come from the degree <= 6 place search with multiplicities from
    local series; pole orders fall out of the v-chart expansion.  Raises
    DegreeMismatch if the valuations do not sum to zero against degrees.
    """
    cover = DEFAULT_COVER if cover is None else cover
    support = []
    for rec in places_D(6, cover):
        if rec.f_valuation:
            support.append((rec, rec.f_valuation))
    return support


def brute_force_count_D(n: int, cover: KummerCoverSpec | None = None) -> int:
    """#D(GF(4^n)) counted directly: solve the fiber quadratic at every x
    by the trace criterion, then add the points over v = 0."""
    if not 1 <= n <= _MAX_DEGREE:
        raise ValueError(f"n must be between 1 and {_MAX_DEGREE}")
    cover = DEFAULT_COVER if cover is None else cover
    F = gf_context(2 * n)
    h_e, g_e = _embed(cover.h, F), _embed(cover.g, F)
    total = 0
    for x0 in range(F.order):
        h_x = _eval(h_e, x0, F)
        if h_x == 0:
            total += 1
        else:
            w = F.mul(_eval(g_e, x0, F), F.inv(F.mul(h_x, h_x)))
            total += 2 if F.trace(w) == 0 else 0
    for _label, deg, _u0 in _infinite_places_raw(cover):
        if n % deg == 0:
            total += deg
    return total


def count_points_C(n: int, cover: KummerCoverSpec | None = None) -> int:
    """#C(GF(4^n)) from the place decomposition of D: a degree-d place with
    d | n contributes 3d when split, 3d when inert and 3d | n, and d when
    ramified."""
    if not 1 <= n <= _MAX_DEGREE:
        raise ValueError(f"n must be between 1 and {_MAX_DEGREE}")
    total = 0
    for rec in places_D(n, cover):
        if n % rec.degree:
            continue
        if rec.kummer_behavior == SPLIT:
            total += 3 * rec.degree
        elif rec.kummer_behavior == INERT:
            if n % (3 * rec.degree) == 0:
                total += 3 * rec.degree
        else:
            total += rec.degree
    return total


def genus_C_rh(cover: KummerCoverSpec | None = None) -> int:
    """Genus of C by Riemann-Hurwitz over the genus-2 base: the ramified
    places are exactly those where val(f) is prime to 3, each totally and
    tamely ramified (3 is odd), contributing (3 - 1) deg to the different."""
    cover = DEFAULT_COVER if cover is None else cover
    ram = [
        (rec, val) for rec, val in divisor_of_f(cover) if val % 3
    ]
    if not ram:
        raise ValueError(
            "no place has valuation prime to 3; the cover may be disconnected"
        )
    rhs = 3 * (2 * 2 - 2) + sum(2 * rec.degree for rec, _ in ram)
    return (rhs + 2) // 2


def real_weil_of_C(cover: KummerCoverSpec | None = None) -> IntPoly:
    """Real Weil polynomial of C, reconstructed from N_1..N_g.

    The power sums of the real roots x_i = alpha_i + q/alpha_i follow from
    the eigenvalue power sums p_m = q^m + 1 - N_m via the binomial identity
    x^n = sum_k C(n,k) q^k (alpha^(n-2k) + (q/alpha)^(n-2k)) over half the
    range, and Newton's identities then yield the coefficients.  Raises
    InconsistentCounts unless the result is integral, passes the root-location
    test, and reproduces every count.
    """
    cover = DEFAULT_COVER if cover is None else cover
    q = 4
    gg = genus_C_rh(cover)
    if gg > _MAX_DEGREE:
        raise ValueError(f"genus {gg} needs counts past degree {_MAX_DEGREE}")
    counts = [count_points_C(n, cover) for n in range(1, gg + 1)]
    p = {m: q**m + 1 - counts[m - 1] for m in range(1, gg + 1)}
    t = {}
    for n in range(1, gg + 1):
        s = sum(
            math.comb(n, k) * q**k * p[n - 2 * k] for k in range((n - 1) // 2 + 1)
        )
        if n % 2 == 0:
            s += math.comb(n, n // 2) * q ** (n // 2) * gg
        t[n] = s
    e = [1]
    for k in range(1, gg + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * t[i] for i in range(1, k + 1))
        if acc % k:
            raise InconsistentCounts(f"Newton inversion non-integral at step {k}")
        e.append(acc // k)
    h_c = IntPoly(tuple((-1) ** (gg - j) * e[gg - j] for j in range(gg + 1)))
    prof = WeilProfile(h_c, q)
    for n in range(1, gg + 1):
        if prof.R(n) != counts[n - 1]:
            raise InconsistentCounts(
                f"reconstruction gives N_{n} = {prof.R(n)}, counted {counts[n - 1]}"
            )
    if not weil_all_roots_in(h_c, q):
        raise InconsistentCounts("reconstructed polynomial fails the root test")
    chk = satisfies_constraints(h_c, ConstraintSet.make(q, gg, {1: counts[0]}))
    if not chk.ok:
        raise InconsistentCounts(chk.witness)
    return h_c


def places_to_csv(places: Sequence[PlaceRecord]) -> str:
    """CSV table of places: degree, type, coordinates (field element codes
    under the frozen defining polynomials), valuation, behavior."""
    lines = ["degree,type,x,y,u,f_valuation,kummer_behavior"]
    for rec in sorted(places, key=PlaceRecord.sort_key):
        lines.append(
            ",".join(
                (
                    str(rec.degree),
                    rec.infinity or "affine",
                    "" if rec.x is None else str(rec.x),
                    "" if rec.y is None else str(rec.y),
                    "" if rec.u is None else str(rec.u),
                    str(rec.f_valuation),
                    rec.kummer_behavior,
                )
            )
        )
    return "\n".join(lines) + "\n"


DEFAULT_COVER = KummerCoverSpec()
