import pytest

from plrslab import (
    ConjectureViolation,
    add_front_ones_scan,
    check_fail_at_2l_minus_1,
    enumerate_vectors,
    first_failure_census,
)
from plrslab.hunt import (
    CensusRow,
    _aggregate,
    census_rows_to_csv,
    enumeration_size,
    index_of,
    parse_census_csv,
    vector_at,
)


class TestEnumeration:
    def test_length_one(self):
        assert [list(v) for v in enumerate_vectors(1)] == [[1], [2]]

    def test_counts(self):
        assert enumeration_size(2) == 8
        assert enumeration_size(3) == 80
        assert enumeration_size(4) == 1440

    def test_lexicographic_and_capped(self):
        vectors = [tuple(v) for v in enumerate_vectors(3)]
        assert vectors == sorted(vectors)
        for vec in vectors:
            assert 1 <= vec[0] <= 2
            assert 0 <= vec[1] <= 4
            assert 1 <= vec[2] <= 8

    def test_rank_unrank_roundtrip(self):
        for L in (1, 2, 3, 4):
            for idx in range(0, enumeration_size(L), 7):
                assert index_of(vector_at(L, idx)) == idx

    def test_unrank_bounds(self):
        with pytest.raises(IndexError):
            vector_at(2, 8)


class TestCensus:
    def test_length_one(self, census_reports):
        report = census_reports[1]
        assert report.max_first_failure == 2
        assert [list(v) for v in report.extremal_vectors] == [[3]]
        assert report.vectors_scanned == 3  # [1], [2], plus the witness [3]
        assert report.notes  # the vacuous-window caveat is surfaced

    def test_length_two(self, census_reports):
        report = census_reports[2]
        assert report.max_first_failure == 3
        assert [list(v) for v in report.extremal_vectors] == [[1, 3], [1, 4]]
        assert report.vectors_scanned == 8

    def test_length_three(self, census_reports):
        report = census_reports[3]
        assert report.max_first_failure == 5
        assert [list(v) for v in report.extremal_vectors] == [[1, 0, 4]]
        assert report.vectors_scanned == 80

    def test_length_four(self, census_reports):
        report = census_reports[4]
        assert report.max_first_failure == 7
        assert (1, 1, 0, 4) in report.extremal_vectors

    def test_window_respected(self, census_reports):
        for L, report in census_reports.items():
            assert report.max_first_failure <= max(2 * L - 1, 2)

    def test_deterministic_across_workers(self, census_reports):
        parallel = first_failure_census(3, jobs=2, shard_size=16)
        assert parallel == census_reports[3]

    def test_deep_horizon_validation(self):
        with pytest.raises(ValueError):
            first_failure_census(3, 11)

    def test_rows_csv_roundtrip(self, census_reports):
        rows = list(census_reports[3].rows)
        assert parse_census_csv(census_rows_to_csv(rows)) == rows

    def test_json_shape(self, census_reports):
        payload = census_reports[3].to_json()
        assert payload["L"] == 3
        assert payload["max_first_failure"] == 5
        assert payload["rows"][0].keys() == {"vector", "first_failure", "verdict", "proof_tag"}

    def test_violation_raised_on_late_failure(self):
        rows = [CensusRow((1, 3), 3, "incomplete", ""), CensusRow((1, 4), 9, "incomplete", "")]
        with pytest.raises(ConjectureViolation) as exc:
            _aggregate(2, rows, 8)
        assert exc.value.vector == (1, 4)
        assert exc.value.first_failure == 9


class TestCensusCheckpoint:
    def test_resume_matches_fresh_run(self, tmp_path, census_reports):
        fresh = census_reports[3]
        ckpt = tmp_path / "census.ckpt"
        rows = tmp_path / "census.rows.csv"

        # simulate an interrupted run: persist only the first two shards
        partial = first_failure_census(3, shard_size=16)
        shard_rows = [partial.rows[0:16], partial.rows[16:32]]
        rows.write_text(census_rows_to_csv([r for block in shard_rows for r in block]))
        ckpt.write_text("0\n1\n")

        resumed = first_failure_census(
            3, shard_size=16, checkpoint_path=ckpt, rows_path=rows
        )
        assert resumed == fresh
        # every shard is now checkpointed and the rows file holds all rows
        assert {int(x) for x in ckpt.read_text().split()} == set(range(5))
        assert len(parse_census_csv(rows.read_text())) == 80

    def test_resume_discards_uncheckpointed_rows(self, tmp_path, census_reports):
        # rows persisted for a shard whose checkpoint line never landed are
        # recomputed, not double-counted
        fresh = census_reports[3]
        ckpt = tmp_path / "census.ckpt"
        rows = tmp_path / "census.rows.csv"
        partial = first_failure_census(3, shard_size=16)
        rows.write_text(census_rows_to_csv(list(partial.rows[0:48])))  # shards 0-2
        ckpt.write_text("0\n1\n")  # shard 2 finished writing rows but not the id

        resumed = first_failure_census(
            3, shard_size=16, checkpoint_path=ckpt, rows_path=rows
        )
        assert resumed == fresh
        assert len(parse_census_csv(rows.read_text())) == 80

    def test_checkpoint_requires_rows_file(self, tmp_path):
        with pytest.raises(ValueError):
            first_failure_census(2, checkpoint_path=tmp_path / "x.ckpt")

    def test_inconsistent_checkpoint_rejected(self, tmp_path):
        ckpt = tmp_path / "census.ckpt"
        rows = tmp_path / "rows.csv"
        ckpt.write_text("0\n")
        rows.write_text("vector,first_failure,verdict,proof_tag\n")
        with pytest.raises(ValueError):
            first_failure_census(3, checkpoint_path=ckpt, rows_path=rows)


class TestTwoLMinusOneFamily:
    @pytest.mark.parametrize("k,expected", [(1, 5), (2, 7), (6, 15)])
    def test_examples(self, k, expected):
        assert check_fail_at_2l_minus_1(k) == expected

    def test_k_validation(self):
        with pytest.raises(ValueError):
            check_fail_at_2l_minus_1(0)


class TestAddFrontOnes:
    def test_k1_no_violations(self):
        report = add_front_ones_scan(1, 5)
        assert report.holds
        assert [r.max_n for r in report.rows] == [3, 3, 3, 3, 3]

    def test_k2_plateau(self):
        report = add_front_ones_scan(2, 5)
        assert report.holds
        # single-one bound at g = 1, double-one at g = 2, plateau from g = 3
        assert [r.max_n for r in report.rows] == [5, 6, 7, 7, 7]

    def test_k4_bound_rises(self):
        report = add_front_ones_scan(4, 3)
        assert report.holds
        assert report.rows[1].max_n == 20  # g = 2 hits the double-one bound

    def test_validation(self):
        with pytest.raises(ValueError):
            add_front_ones_scan(0, 3)
        with pytest.raises(ValueError):
            add_front_ones_scan(1, 1)
