"""Elimination arguments for real Weil polynomial candidates.

Whether an isogeny class can contain a Jacobian is tested through its
factor splittings h = h1 * h2 into nontrivial monic coprime-or-not parts.
Three obstructions are implemented, following Serre's resultant argument
and its refinements by Howe and Lauter:

* resultant-1: |Res(h1, h2)| = 1 splits every principally polarized
  variety in the class into a polarized product, which the irreducibility
  of a Jacobian's theta divisor forbids.
* resultant-2: when the reduced resultant of the radicals of h1 and h2 is
  2 (the smallest positive integer in the ideal they generate, which caps
  the gluing exponent of the two isogeny classes), a curve with real Weil
  polynomial h must be a degree-2 cover of a curve whose real Weil
  polynomial is h1 or h2; the candidate dies when both cover bases are
  infeasible.  |Res(h1, h2)| = 2 is the special case where the full
  resultant already equals the cap.
* supersingular-factor: over q = s^2, a maximal factor (x + 2s)^e whose
  cofactor takes a squarefree value at -2s, not divisible by the
  characteristic, is incompatible with a Jacobian.

Cover feasibility is decided by Riemann-Hurwitz bookkeeping over the
rational points of the base curve.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .intpoly import (
    IntPoly,
    factor_int_poly,
    is_squarefree_integer,
    poly_divexact,
    reduced_resultant,
    resultant,
    squarefree_part,
)
from .weil import WeilProfile

RESULTANT_1 = "resultant-1"
RESULTANT_2 = "resultant-2"
SS_FACTOR = "supersingular-factor"
NO_ARGUMENT = "none"


class NotASquare(Exception):
    """Raised when the supersingular-factor test is given a non-square q."""


@dataclass(frozen=True)
class Splitting:
    """A factorization h = h1 * h2 into nontrivial monic factors.

    The pair is stored in canonical order (smaller factor first by the
    degree-then-coefficients key), and the resultant is taken in that
    order.
    """

    h1: IntPoly
    h2: IntPoly
    resultant: int

    @classmethod
    def of(cls, h1: IntPoly, h2: IntPoly) -> "Splitting":
        if h1.degree < 1 or h2.degree < 1:
            raise ValueError("both factors must be nontrivial")
        if not (h1.is_monic and h2.is_monic):
            raise ValueError("both factors must be monic")
        if h1.sort_key() > h2.sort_key():
            h1, h2 = h2, h1
        return cls(h1, h2, resultant(h1, h2))

    def product(self) -> IntPoly:
        return self.h1 * self.h2


@dataclass(frozen=True)
class CoverAccounting:
    """Point bookkeeping for a hypothetical degree-2 cover C -> D.

    Every rational point of D is split (two rational points above), inert
    (one degree-2 place) or ramified (one rational point), so

        s + i + r = N1(D),   2s + r = N1(C),   i <= P2(C),

    and the different degree 2 g_C - 2 - 2 (2 g_D - 2) caps the ramified
    contribution: at least 2 per point when the cover is wildly ramified
    (always, in characteristic 2), at least 1 per point otherwise.
    A solution records a witness (s, i, r); refuted_by names the failed
    check when there is none.
    """

    g_C: int
    g_D: int
    N1_C: int
    N1_D: int
    P2_C: int
    different_budget: int
    solution: tuple[int, int, int] | None
    refuted_by: str | None

    @property
    def feasible(self) -> bool:
        return self.refuted_by is None

    def to_json_dict(self) -> dict:
        out = {
            "g_C": self.g_C,
            "g_D": self.g_D,
            "N1_C": self.N1_C,
            "N1_D": self.N1_D,
            "P2_C": self.P2_C,
            "different_budget": self.different_budget,
        }
        if self.solution is not None:
            s, i, r = self.solution
            out["solution"] = {"split": s, "inert": i, "ramified": r}
        if self.refuted_by is not None:
            out["refuted_by"] = self.refuted_by
        return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of the elimination arguments for one candidate."""

    candidate: IntPoly
    status: str  # "survives" | "eliminated"
    argument: str  # RESULTANT_1 | RESULTANT_2 | SS_FACTOR | NO_ARGUMENT
    splitting: Splitting | None
    witness: dict | None

    def __post_init__(self):
        if self.status not in ("survives", "eliminated"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "eliminated" and (
            self.argument == NO_ARGUMENT or self.witness is None
        ):
            raise ValueError("eliminated verdicts need an argument and a witness")


def splittings(h: IntPoly) -> list[Splitting]:
    """All unordered factorizations of h into two nontrivial monic factors,
    in canonical order."""
    if h.degree < 2:
        raise ValueError("splittings need degree at least 2")
    items = list(factor_int_poly(h))
    seen: set[tuple] = set()
    out: list[Splitting] = []
    for exps in product(*[range(m + 1) for _, m in items]):
        h1 = IntPoly.one()
        for (f, _), e in zip(items, exps):
            if e:
                h1 = h1 * f ** e
        if h1.degree < 1 or h1.degree == h.degree:
            continue
        sp = Splitting.of(h1, poly_divexact(h, h1))
        key = (sp.h1.coeffs, sp.h2.coeffs)
        if key not in seen:
            seen.add(key)
            out.append(sp)
    out.sort(key=lambda s: (s.h1.sort_key(), s.h2.sort_key()))
    return out


def resultant_one_test(h: IntPoly) -> Splitting | None:
    """First splitting with resultant +-1 in canonical order, if any."""
    for sp in splittings(h):
        if abs(sp.resultant) == 1:
            return sp
    return None


def characteristic(q: int) -> int:
    """Smallest prime factor of q, the field characteristic for prime powers."""
    if q < 2:
        raise ValueError("prime power required")
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def supersingular_factor_test(h: IntPoly, q: int) -> Splitting | None:
    """Splitting h = (x + 2s)^e * h2 with h2(-2s) squarefree and prime to
    the characteristic.

    The exponent e is taken maximal, so h2(-2s) is never zero; the test is
    absent when the factor is missing, fills all of h, or the cofactor
    value has a square divisor or shares a factor with q.
    """
    s = math.isqrt(q)
    if s * s != q:
        raise NotASquare(f"q = {q} is not a perfect square")
    root = IntPoly((2 * s, 1))
    e = factor_int_poly(h).multiplicity_of(root)
    if e == 0 or e == h.degree:
        return None
    h2 = poly_divexact(h, root ** e)
    value = h2.eval_scaled(-2 * s, 1)
    assert value != 0, "maximal multiplicity leaves a nonzero cofactor value"
    if value % characteristic(q) == 0:
        return None
    if not is_squarefree_integer(value):
        return None
    return Splitting.of(root ** e, h2)


def double_cover_feasible(hC: IntPoly, hD: IntPoly, q: int) -> CoverAccounting:
    """Decide whether a curve with real Weil polynomial hC over F_q can be a
    degree-2 cover of one with real Weil polynomial hD.

    Refutations, in order: the Riemann-Hurwitz genus bound (nonnegative
    different); the projection bound N1(D) >= ceil(N1(C) / 2); hD itself
    failing the resultant-1 test; and the rational-point accounting of
    CoverAccounting having no nonnegative integer solution.
    """
    pc = WeilProfile(hC, q)
    pd = WeilProfile(hD, q)
    n1_c, n1_d = pc.R(1), pd.R(1)
    p2_c = pc.P(2)
    budget = 2 * pc.g - 2 - 2 * (2 * pd.g - 2)

    def acc(refuted_by: str | None, solution=None) -> CoverAccounting:
        return CoverAccounting(
            pc.g, pd.g, n1_c, n1_d, p2_c, budget, solution, refuted_by
        )

    if budget < 0:
        return acc("genus")
    if n1_d < -(-n1_c // 2):
        return acc("points")
    if hD.degree >= 2 and resultant_one_test(hD) is not None:
        return acc("base-eliminated")
    # the system is affine in the number of split points s
    lo = max(0, n1_c - n1_d)
    if q % 2 == 0:
        lo = max(lo, -(-(2 * n1_c - budget) // 4))
    else:
        lo = max(lo, -(-(n1_c - budget) // 2))
    hi = min(n1_c // 2, p2_c + n1_c - n1_d)
    if lo > hi:
        return acc("accounting")
    return acc(None, (lo, n1_d - n1_c + lo, n1_c - 2 * lo))


def eliminate_all(candidates: Sequence[IntPoly], q: int) -> list[Verdict]:
    """Verdicts in input order.

    Each candidate is attacked with resultant-1, then supersingular-factor
    (when q is a square), then resultant-2 over coprime splittings whose
    radicals have reduced resultant 2, requiring both cover bases refuted;
    otherwise it survives.
    """
    s = math.isqrt(q)
    q_square = s * s == q
    return [_verdict_for(h, q, q_square) for h in candidates]


def _verdict_for(h: IntPoly, q: int, q_square: bool) -> Verdict:
    if h.degree < 2:
        return Verdict(h, "survives", NO_ARGUMENT, None, None)
    sp = resultant_one_test(h)
    if sp is not None:
        return Verdict(
            h, "eliminated", RESULTANT_1, sp, {"resultant": sp.resultant}
        )
    if q_square:
        sp = supersingular_factor_test(h, q)
        if sp is not None:
            value = sp.h2.eval_scaled(-2 * math.isqrt(q), 1)
            return Verdict(
                h, "eliminated", SS_FACTOR, sp, {"cofactor_value": value}
            )
    for sp in splittings(h):
        if sp.resultant == 0:
            continue
        rr = reduced_resultant(squarefree_part(sp.h1), squarefree_part(sp.h2))
        if rr != 2:
            continue
        a1 = double_cover_feasible(h, sp.h1, q)
        a2 = double_cover_feasible(h, sp.h2, q)
        if not a1.feasible and not a2.feasible:
            return Verdict(
                h,
                "eliminated",
                RESULTANT_2,
                sp,
                {
                    "resultant": sp.resultant,
                    "reduced_resultant": rr,
                    "base_h1": a1.to_json_dict(),
                    "base_h2": a2.to_json_dict(),
                },
            )
    return Verdict(h, "survives", NO_ARGUMENT, None, None)


def verdicts_to_csv(verdicts: Sequence[Verdict]) -> str:
    """CSV with one row per candidate: index, h, argument, h1, h2."""
    buf = io.StringIO()
    wtr = csv.writer(buf, lineterminator="\n")
    wtr.writerow(["index", "h", "argument", "h1", "h2"])
    for i, v in enumerate(verdicts, start=1):
        sp = v.splitting
        wtr.writerow(
            [
                i,
                " ".join(v.candidate.to_coeff_strings()),
                v.argument if v.status == "eliminated" else "",
                factor_int_poly(sp.h1).pretty() if sp else "",
                factor_int_poly(sp.h2).pretty() if sp else "",
            ]
        )
    return buf.getvalue()


def verdicts_to_json(verdicts: Sequence[Verdict]) -> str:
    """JSON array with coefficient-exact candidates and full witnesses."""
    rows = []
    for i, v in enumerate(verdicts, start=1):
        row: dict = {
            "index": i,
            "h": v.candidate.to_coeff_strings(),
            "h_factored": factor_int_poly(v.candidate).pretty(),
            "status": v.status,
            "argument": v.argument,
        }
        if v.splitting is not None:
            row["h1"] = v.splitting.h1.to_coeff_strings()
            row["h2"] = v.splitting.h2.to_coeff_strings()
            row["h1_factored"] = factor_int_poly(v.splitting.h1).pretty()
            row["h2_factored"] = factor_int_poly(v.splitting.h2).pretty()
            row["resultant"] = str(v.splitting.resultant)
        if v.witness is not None:
            row["witness"] = v.witness
        rows.append(row)
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
