"""Elimination arguments against the frozen verdict table.

TABLE_24 transcribes the published classification of the 26 candidates with
24 rational points; each row's splitting witness is expanded and re-verified
before being used as an expectation."""

import json

import pytest

from golden_tables import RESULTANT_2, SS_FACTOR, TABLE_24
from weilsieve.intpoly import IntPoly
from weilsieve.eliminate import (
    NotASquare,
    double_cover_feasible,
    eliminate_all,
    resultant_one_test,
    splittings,
    supersingular_factor_test,
    verdicts_to_csv,
    verdicts_to_json,
)


def expand(factor_list):
    p = IntPoly([1])
    for coeffs, mult in factor_list:
        p = p * IntPoly(coeffs) ** mult
    return p


class TestVerdictTable:
    def test_partition_and_labels(self, verdicts24):
        assert len(verdicts24) == 26
        for i, (row, v) in enumerate(zip(TABLE_24, verdicts24), start=1):
            if row["argument"] is None:
                assert v.status == "survives", i
                assert v.argument == "none"
            else:
                assert v.status == "eliminated", i
                assert v.argument == row["argument"], i

    def test_resultant1_witnesses_match_published(self, verdicts24):
        # for resultant-1 rows the witness splitting is canonical:
        # same unordered factor pair as the published table
        for i, (row, v) in enumerate(zip(TABLE_24, verdicts24), start=1):
            if row["argument"] != "resultant-1":
                continue
            h1, h2 = expand(row["h1"]), expand(row["h2"])
            assert {v.splitting.h1, v.splitting.h2} == {h1, h2}, i
            assert abs(v.splitting.resultant) == 1, i

    def test_ss_factor_witnesses(self, verdicts24):
        # supersingular rows: factor (x + 2s)^k split off, cofactor value
        # at -2s squarefree and odd
        for i, (row, v) in enumerate(zip(TABLE_24, verdicts24), start=1):
            if row["argument"] != SS_FACTOR:
                continue
            assert v.witness["cofactor_value"] % 2, i
            h1, h2 = expand(row["h1"]), expand(row["h2"])
            assert {v.splitting.h1, v.splitting.h2} == {h1, h2}, i

    def test_entry10_cofactor_value(self, verdicts24):
        assert verdicts24[9].argument == SS_FACTOR
        assert verdicts24[9].witness["cofactor_value"] == -15

    def test_resultant2_rows_have_cover_witnesses(self, verdicts24):
        # witness splitting may differ from the published one, but both
        # cover bases must be refuted and the reduced resultant must be 2
        for i, v in enumerate(verdicts24, start=1):
            if v.argument != RESULTANT_2:
                continue
            w = v.witness
            assert not w["base_h1"]["feasible"], i
            assert not w["base_h2"]["feasible"], i
            assert w["base_h1"]["refuted_by"], i


class TestDoubleCoverAccounting:
    def test_published_row6_accounting(self, run24):
        # base with N_1 = 13 rational points, different budget 2, and no
        # degree-2 places to ramify at: refuted by accounting
        h6 = run24[5]
        hD = expand(TABLE_24[5]["h1"])
        acc = double_cover_feasible(h6, hD, 4)
        assert not acc.feasible and acc.refuted_by == "accounting"
        assert (acc.N1_D, acc.different_budget, acc.P2_C) == (13, 2, 0)

    def test_genus_refutation(self, run24):
        # a genus-5 base admits no genus-8 double cover
        h13 = run24[12]
        hD5 = expand([((1, 6, 5, 1), 1), ((4, 1), 2)])
        assert double_cover_feasible(h13, hD5, 4).refuted_by == "genus"

    def test_point_count_refutation(self, run24):
        # base with fewer rational points than the cover: impossible
        h13 = run24[12]
        acc = double_cover_feasible(h13, IntPoly((2, 1)) ** 3, 4)
        assert acc.refuted_by == "points"
        assert acc.N1_D == 11 and acc.N1_C == 24


class TestPrimitives:
    def test_splittings_factor_pairs(self):
        two_factors = splittings(IntPoly((2, 1)) * IntPoly((4, 1)))
        assert len(two_factors) == 1
        assert abs(two_factors[0].resultant) == 2
        square = splittings(IntPoly((2, 1)) ** 2)
        assert len(square) == 1
        assert square[0].h1 == square[0].h2 == IntPoly((2, 1))

    def test_resultant_one(self):
        found = resultant_one_test(IntPoly((2, 1)) * IntPoly((3, 1)))
        assert found is not None and abs(found.resultant) == 1
        assert resultant_one_test(IntPoly((2, 1)) * IntPoly((4, 1))) is None

    def test_ss_requires_square_q(self):
        with pytest.raises(NotASquare):
            supersingular_factor_test(IntPoly((4, 4, 1)), 2)

    def test_degree_one_survives(self):
        vs = eliminate_all([IntPoly((3, 1))], 4)
        assert vs[0].status == "survives" and vs[0].argument == "none"


class TestSerialization:
    def test_csv_shape(self, verdicts24):
        text = verdicts_to_csv(verdicts24)
        lines = text.strip().split("\n")
        assert lines[0] == "index,h,argument,h1,h2"
        assert len(lines) == 27
        assert lines[1].split(",")[2] == ""  # survivor row has no argument

    def test_json_round_trip(self, verdicts24):
        rows = json.loads(verdicts_to_json(verdicts24))
        assert len(rows) == 26
        assert rows[0]["status"] == "survives"
        assert rows[5]["witness"]["base_h1"]["refuted_by"]
        # coefficient strings reconstruct the candidates exactly
        for row, v in zip(rows, verdicts24):
            assert IntPoly.from_coeff_strings(row["h"]) == v.candidate
