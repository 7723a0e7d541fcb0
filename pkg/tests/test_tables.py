"""Table generation and structural verification."""

import pytest

from sexagesimal import translit
from sexagesimal.core import FloatingSex, SexNumber, to_floating
from sexagesimal.regular import IrregularError, ReciprocalPair, reciprocal
from sexagesimal.tables import (
    DOUBLING_BAD,
    DOUBLING_OK,
    HALVING_BAD,
    HALVING_OK,
    PAIR_BAD,
    PAIR_OK,
    PARSE_ERROR,
    DoublingTable,
    TableRow,
    doubling_table_tsv,
    generate_doubling,
    generate_standard,
    parse_tsv,
    standard_table_tsv,
    verify_table,
)


def smooth_235(limit: int) -> list[int]:
    # enumerate-and-filter oracle by trial division
    out = []
    for n in range(2, limit + 1):
        m = n
        for p in (2, 3, 5):
            while m % p == 0:
                m //= p
        if m == 1:
            out.append(n)
    return out


class TestGenerateDoubling:
    def test_single_row(self):
        table = generate_doubling(10, 1)
        assert table.rows == (TableRow(1, FloatingSex(10), SexNumber(6, -1)),)

    def test_unit_seed(self):
        table = generate_doubling(1, 2)
        assert [translit.format(r.value) for r in table.rows] == ["1", "2"]
        assert [translit.format(r.reciprocal) for r in table.rows] == ["1", "0;30"]

    def test_full_table_matches_transcription(self, golden_text):
        assert doubling_table_tsv(generate_doubling(10, 30)) == golden_text

    def test_row_relations_hold_by_construction(self):
        table = generate_doubling(9, 12)
        for prev, row in zip(table.rows, table.rows[1:]):
            assert row.value == prev.value.double()
            assert row.reciprocal == prev.reciprocal.halve()
            assert row.index == prev.index + 1

    def test_halving_chain_agrees_with_direct_reciprocals(self):
        for row in generate_doubling(10, 30).rows:
            assert to_floating(row.reciprocal) == reciprocal(row.value)

    def test_anchor_exponent_moves_row_one(self):
        # seed 10 read as 10*60: its reciprocal is 0;0,6
        table = generate_doubling(10, 1, anchor_exponent=1)
        assert translit.format(table.rows[0].reciprocal) == "0;0,6"

    def test_irregular_seed_rejected(self):
        with pytest.raises(IrregularError):
            generate_doubling(7, 5)

    def test_bad_count_rejected(self):
        with pytest.raises(ValueError):
            generate_doubling(10, 0)

    def test_generated_table_verifies_clean(self):
        table = generate_doubling(25, 40, anchor_exponent=-2)
        rows = parse_tsv(doubling_table_tsv(table))
        report = verify_table(rows, mode="doubling")
        assert report.ok
        assert not report.bad()


class TestGenerateStandard:
    def test_limit_8(self):
        pairs = generate_standard(8)
        assert [p.value.mantissa for p in pairs] == [2, 3, 4, 5, 6, 8]
        assert pairs[0] == ReciprocalPair(FloatingSex(2), FloatingSex(30))

    def test_limit_2(self):
        assert generate_standard(2) == (ReciprocalPair(FloatingSex(2), FloatingSex(30)),)

    def test_limit_81_has_the_four_place_entry(self):
        pairs = dict(
            (p.value.mantissa, p.reciprocal) for p in generate_standard(81)
        )
        # 60**4 // 81 = 160000, digits 44,26,40
        assert pairs[81] == FloatingSex(160000)
        assert translit.format(pairs[81]) == "44,26,40"

    def test_bad_limit(self):
        with pytest.raises(ValueError):
            generate_standard(1)

    def test_completeness_against_filter_oracle(self):
        pairs = generate_standard(500)
        values = [p.value for p in pairs]
        # every 60-smooth integer appears once, reduced to its class
        assert values == [FloatingSex(n) for n in smooth_235(500)]
        assert len(pairs) == len(smooth_235(500))


class TestVerifyTable:
    def test_clean_table(self, golden_rows):
        report = verify_table(golden_rows, mode="doubling")
        assert report.ok
        assert report.count(PAIR_OK) == 30
        assert report.count(DOUBLING_OK) == 29
        assert report.count(HALVING_OK) == 29

    def test_single_row_has_no_adjacency_findings(self):
        report = verify_table([(1, "10", "0;6")], mode="doubling")
        assert [f.kind for f in report.findings] == [PAIR_OK]

    def test_bad_pair(self):
        # 10 * 7 = 70, not a power of 60
        report = verify_table([(1, "10", "0;7")])
        assert [f.kind for f in report.findings] == [PAIR_BAD]
        assert report.findings[0].row_index == 1
        assert not report.ok

    def test_pairs_mode_skips_chain_checks(self):
        # a standard table is no doubling chain; pairs mode stays clean
        rows = parse_tsv(standard_table_tsv(generate_standard(8)))
        assert verify_table(rows, mode="pairs").ok
        doubling = verify_table(rows, mode="doubling")
        assert not doubling.ok
        assert doubling.count(DOUBLING_BAD) > 0

    def test_value_corruption_in_doubling_mode(self, golden_rows):
        rows = list(golden_rows)
        index, _, rec = rows[4]
        rows[4] = (index, "2,41", rec)
        report = verify_table(rows, mode="doubling")
        kinds = {(f.kind, f.row_index) for f in report.findings}
        assert (PAIR_BAD, 5) in kinds
        assert (DOUBLING_BAD, 5) in kinds
        assert (DOUBLING_BAD, 6) in kinds
        assert (HALVING_OK, 5) in kinds

    def test_unparseable_cell_reports_and_continues(self, golden_rows):
        rows = list(golden_rows)
        index, _, rec = rows[1]
        rows[1] = (index, "2x", rec)
        report = verify_table(rows, mode="doubling")
        parse_findings = [f for f in report.findings if f.kind == PARSE_ERROR]
        assert len(parse_findings) == 1
        assert parse_findings[0].row_index == 2
        # the other 29 rows still get their pair checks
        assert report.count(PAIR_OK) == 29
        # halving checks around row 2 are unaffected by its value column
        assert report.count(HALVING_OK) == 29
        # doubling checks 1->2 and 2->3 are skipped, the rest remain
        assert report.count(DOUBLING_OK) == 27
        assert not report.ok

    def test_zero_reciprocal_is_a_bad_pair(self):
        report = verify_table([(1, "10", "0")])
        assert [f.kind for f in report.findings] == [PAIR_BAD]

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            verify_table([], mode="strict")


class TestTsv:
    def test_file_shape(self):
        text = doubling_table_tsv(generate_doubling(10, 2))
        assert text == "1\t10\t0;6\n2\t20\t0;3\n"

    def test_standard_shape(self):
        text = standard_table_tsv(generate_standard(3))
        assert text == "1\t2\t30\n2\t3\t20\n"

    def test_round_trip(self, golden_text, golden_rows):
        rows = parse_tsv(golden_text)
        assert rows == golden_rows
        assert rows[0] == (1, "10", "0;6")
        assert rows[29][0] == 30

    @pytest.mark.parametrize(
        "text",
        ["1\t10\n", "1\t10\t0;6\textra\n", "x\t10\t0;6\n", "\n1\t10\t0;6\n"],
    )
    def test_structural_faults_raise(self, text):
        with pytest.raises(ValueError):
            parse_tsv(text)
