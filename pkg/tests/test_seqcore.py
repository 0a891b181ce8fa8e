import pytest

from plrslab import (
    CoefficientVector,
    EmptyVectorError,
    LeadingZeroError,
    NegativeCoefficientError,
    Sequence,
    TrailingZeroError,
    VectorValidationError,
    brown_gap,
    brown_gap_series,
    term,
    terms_prefix,
    validate_coefficients,
)


def naive_terms(coeffs, n):
    """Independent recomputation of the recurrence, used as the oracle."""
    L = len(coeffs)
    H = [1]
    while len(H) < n:
        m = len(H)
        if m < L:
            H.append(sum(coeffs[i] * H[m - 1 - i] for i in range(m)) + 1)
        else:
            H.append(sum(coeffs[i] * H[m - 1 - i] for i in range(L)))
    return H


class TestValidation:
    def test_accepts_paper_style_vectors(self):
        cv = validate_coefficients([1, 3])
        assert cv.length == 2
        assert cv.coefficients == (1, 3)

    def test_accepts_degenerate_one(self):
        assert validate_coefficients([1]).coefficients == (1,)

    def test_interior_zeros_fine(self):
        assert validate_coefficients([1, 0, 0, 7]).length == 4

    def test_empty_rejected(self):
        with pytest.raises(EmptyVectorError):
            validate_coefficients([])

    def test_leading_zero_rejected(self):
        with pytest.raises(LeadingZeroError):
            validate_coefficients([0, 1])

    def test_trailing_zero_rejected(self):
        with pytest.raises(TrailingZeroError):
            validate_coefficients([1, 0])

    def test_negative_rejected_with_index(self):
        with pytest.raises(NegativeCoefficientError) as exc:
            validate_coefficients([1, -2, 1])
        assert exc.value.index == 2

    def test_parse(self):
        assert CoefficientVector.parse("1, 0, 4").coefficients == (1, 0, 4)
        with pytest.raises(VectorValidationError):
            CoefficientVector.parse("1,x")

    def test_immutable_and_hashable(self):
        cv = validate_coefficients([1, 3])
        assert hash(cv) == hash(validate_coefficients((1, 3)))
        with pytest.raises(Exception):
            cv.coefficients = (2,)


class TestTerms:
    @pytest.mark.parametrize(
        "coeffs,n,expected",
        [
            ((1, 1), 4, 5),
            ((1, 3), 4, 11),
            ((1,), 7, 1),
            ((1, 0, 4), 5, 15),
        ],
    )
    def test_single_terms(self, coeffs, n, expected):
        assert term(CoefficientVector(coeffs), n) == expected

    def test_prefixes(self):
        assert terms_prefix(CoefficientVector((1, 1)), 5) == [1, 2, 3, 5, 8]
        assert terms_prefix(CoefficientVector((2,)), 5) == [1, 2, 4, 8, 16]
        assert terms_prefix(CoefficientVector((1, 1, 2)), 6) == [1, 2, 4, 8, 16, 32]

    @pytest.mark.parametrize(
        "coeffs", [(1, 3), (1, 0, 4), (2, 1), (1, 1, 1), (3,), (1, 0, 0, 0, 0, 0, 15)]
    )
    def test_against_naive_recomputation(self, coeffs):
        cv = CoefficientVector(coeffs)
        assert terms_prefix(cv, 12) == naive_terms(coeffs, 12)

    def test_prefix_consistent_with_term(self):
        cv = CoefficientVector((1, 2, 3))
        prefix = terms_prefix(cv, 10)
        assert prefix == [term(cv, i) for i in range(1, 11)]

    def test_memo_extends_lazily(self):
        seq = Sequence(CoefficientVector((1, 1)))
        assert seq.term(3) == 3
        assert seq.term(8) == 34
        assert seq.prefix(4) == [1, 2, 3, 5]

    def test_index_validation(self):
        with pytest.raises(ValueError):
            term(CoefficientVector((1, 1)), 0)


class TestBrownGaps:
    @pytest.mark.parametrize("coeffs", [(1,), (2,), (1, 3), (1, 0, 4), (4, 4)])
    def test_first_gap_always_zero(self, coeffs):
        assert brown_gap(CoefficientVector(coeffs), 1) == 0

    def test_doubling_sequence_gap_zero(self):
        # direct summation oracle: 1 + (2^5 - 1) - 2^5
        cv = CoefficientVector((2,))
        assert brown_gap(cv, 6) == 1 + sum(terms_prefix(cv, 5)) - term(cv, 6) == 0

    def test_one_zero_four_gap(self):
        cv = CoefficientVector((1, 0, 4))
        assert brown_gap(cv, 5) == 1 + sum(terms_prefix(cv, 4)) - term(cv, 5) == -1

    @pytest.mark.parametrize("coeffs", [(1, 3), (1, 0, 4), (2,), (1, 1, 1, 1)])
    def test_series_matches_direct_sums(self, coeffs):
        cv = CoefficientVector(coeffs)
        series = brown_gap_series(cv, 10)
        prefix = terms_prefix(cv, 10)
        for n in range(1, 11):
            assert series[n - 1] == 1 + sum(prefix[: n - 1]) - prefix[n - 1]

    def test_gap_recurrence(self):
        # B_{n+1} - B_n = 2 H_n - H_{n+1}
        cv = CoefficientVector((1, 0, 2, 5))
        series = brown_gap_series(cv, 15)
        prefix = terms_prefix(cv, 15)
        for n in range(1, 15):
            assert series[n] - series[n - 1] == 2 * prefix[n - 1] - prefix[n]

    def test_monotone_unless_degenerate(self):
        for coeffs in [(2,), (1, 1), (1, 0, 4), (3, 2)]:
            prefix = terms_prefix(CoefficientVector(coeffs), 12)
            assert all(b > a for a, b in zip(prefix, prefix[1:]))
        ones = terms_prefix(CoefficientVector((1,)), 12)
        assert ones == [1] * 12
