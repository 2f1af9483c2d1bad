import json
import warnings
from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from hilbertforge.bigraded import (
    BigradedAlgebra,
    BigradedShift,
    ShiftMultiset,
    rees_algebra,
    rees_strand,
    strand_closed_form,
    strand_coefficient,
    strand_coefficient_bounds,
    strand_decomposition,
    strand_hilbert_series,
    weak_compositions,
)
from hilbertforge.hilbert import (
    HilbertSeries,
    extract_coefficients,
    hilbert_polynomial,
    hilbert_series_ideal,
)
from hilbertforge.monomial import MonomialIdeal, ideal_power

from conftest import ideal

WEIGHTS = [(1, 1), (1, 2), (2, 2), (1, 2, 3), (0, 1), (3,)]


def brute_compositions(total, parts):
    return [v for v in product(range(max(total, 0) + 1), repeat=parts) if sum(v) == total]


class TestCompositions:
    def test_examples(self):
        assert list(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(weak_compositions(0, 4)) == [(0, 0, 0, 0)]
        assert len(list(weak_compositions(3, 3))) == 10 == comb(5, 2)
        assert list(weak_compositions(-1, 2)) == []

    @pytest.mark.parametrize("parts", [1, 2, 3, 4])
    def test_against_product_filter(self, parts):
        for total in range(7):
            got = list(weak_compositions(total, parts))
            assert got == sorted(brute_compositions(total, parts))
            assert len(got) == comb(total + parts - 1, parts - 1)

    def test_is_a_stream(self):
        gen = weak_compositions(10**6, 3)
        assert next(gen) == (0, 0, 10**6)


class TestDecomposition:
    def test_examples(self):
        A = BigradedAlgebra(2, (1, 1))
        assert strand_decomposition(A, BigradedShift(0, 0), 3).as_dict() == {3: 4}
        assert strand_decomposition(A, BigradedShift(2, 1), 3).as_dict() == {4: 3}
        B = BigradedAlgebra(2, (1, 2))
        assert strand_decomposition(B, BigradedShift(0, 0), 2).as_dict() == {2: 1, 3: 1, 4: 1}

    def test_below_b_is_empty(self):
        A = BigradedAlgebra(2, (1, 2))
        assert len(strand_decomposition(A, BigradedShift(0, 3), 2)) == 0
        assert strand_hilbert_series(A, BigradedShift(0, 3), 2).is_zero()
        assert strand_coefficient(A, BigradedShift(0, 3), 2, 0, 0) == 0

    @pytest.mark.parametrize("m", range(1, 6))
    def test_rank(self, m):
        A = BigradedAlgebra(1, tuple(range(m)))
        for b in (0, 2):
            for kb in range(11):
                assert len(strand_decomposition(A, BigradedShift(1, b), kb + b)) == comb(kb + m - 1, m - 1)

    def test_json(self):
        D = strand_decomposition(BigradedAlgebra(2, (1, 2)), BigradedShift(), 2)
        assert D.to_json() == {"shifts": {"2": 1, "3": 1, "4": 1}}
        assert ShiftMultiset.from_json(json.loads(json.dumps(D.to_json()))) == D

    def test_series_examples(self):
        A = BigradedAlgebra(2, (1, 1))
        assert strand_hilbert_series(A, BigradedShift(), 2) == HilbertSeries.make(2, 2, [3])
        B = BigradedAlgebra(2, (1, 2))
        assert strand_hilbert_series(B, BigradedShift(), 2) == HilbertSeries.make(2, 2, [1, 1, 1])

    def test_rejects_bad_algebra(self):
        with pytest.raises(ValueError):
            BigradedAlgebra(0, (1,))
        with pytest.raises(ValueError):
            BigradedAlgebra(2, ())
        with pytest.raises(ValueError):
            BigradedAlgebra(2, (1, -1))


class TestCoefficients:
    def test_examples(self):
        A = BigradedAlgebra(2, (1, 1))
        # (k+1) C(k, j) and k C(k+1, j)
        assert strand_coefficient(A, BigradedShift(0, 0), 3, 1, 2) == 12
        assert strand_coefficient(A, BigradedShift(2, 1), 3, 1, 2) == 18
        B = BigradedAlgebra(2, (1, 2))
        assert strand_coefficient(B, BigradedShift(), 2, 0, 1) == 9

    def test_out_of_range_warns_zero(self):
        A = BigradedAlgebra(2, (1, 1))
        with pytest.warns(UserWarning):
            assert strand_coefficient(A, BigradedShift(), 3, 0, 2) == 0

    def test_bounds_examples(self):
        B = BigradedAlgebra(2, (1, 2))
        lo, hi = strand_coefficient_bounds(B, BigradedShift(), 2, 1)
        assert (lo, hi) == (6, 12)
        assert lo < strand_coefficient(B, BigradedShift(), 2, 0, 1) < hi
        A = BigradedAlgebra(2, (1, 1))
        lo, hi = strand_coefficient_bounds(A, BigradedShift(1, 1), 5, 2)
        assert lo == hi == strand_coefficient(A, BigradedShift(1, 1), 5, 1, 2)
        lo, hi = strand_coefficient_bounds(B, BigradedShift(2, 1), 5, 0)
        assert lo == hi == comb(5 - 1 + 1, 1)

    def test_bounds_ignore_weight_order(self):
        one = strand_coefficient_bounds(BigradedAlgebra(3, (3, 1, 2)), BigradedShift(1, 0), 4, 2)
        two = strand_coefficient_bounds(BigradedAlgebra(3, (1, 2, 3)), BigradedShift(1, 0), 4, 2)
        assert one == two

    @pytest.mark.parametrize("p", WEIGHTS)
    def test_two_routes_and_sandwich(self, p):
        n = 3
        A = BigradedAlgebra(n, p)
        for a, b in product(range(3), range(3)):
            shift = BigradedShift(a, b)
            for kb in range(7):
                k = kb + b
                hs = strand_hilbert_series(A, shift, k)
                for i in range(3):
                    row = extract_coefficients(hilbert_polynomial(hs, i))
                    for j in range(n + i):
                        e = strand_coefficient(A, shift, k, i, j)
                        assert e == row[(i, j)]
                        lo, hi = strand_coefficient_bounds(A, shift, k, j)
                        assert lo <= e <= hi

    @pytest.mark.parametrize("p", WEIGHTS)
    def test_equality_iff_equal_weights(self, p):
        A = BigradedAlgebra(3, p)
        strict = False
        for a, b in product(range(3), range(3)):
            for k in range(b + 1, b + 7):
                for j in range(1, 4):
                    e = strand_coefficient(A, BigradedShift(a, b), k, 2, j)
                    strict |= e != strand_coefficient_bounds(A, BigradedShift(a, b), k, j)[1]
        assert strict == (len(set(p)) > 1)

    @given(
        st.integers(1, 3),
        st.integers(0, 3),
        st.integers(0, 3),
        st.integers(0, 2),
        st.integers(0, 3),
    )
    def test_equal_weights_closed_form(self, m, p, a, b, j):
        A = BigradedAlgebra(2, (p,) * m)
        shift = BigradedShift(a, b)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for k in range(b, b + 8):
                assert strand_coefficient(A, shift, k, 3, j) == strand_closed_form(A, shift, k, j)


class TestRees:
    def test_examples(self):
        m = MonomialIdeal.maximal(2)
        assert set(rees_strand(m, 2).generators) == {(2, 0), (1, 1), (0, 2)}
        assert rees_strand(m, 0) == MonomialIdeal.unit(2)
        I = ideal((2, 0), (1, 1), (0, 3))
        assert rees_strand(I, 2) == ideal_power(I, 2)

    def test_presenting_algebra(self):
        I = ideal((3, 0), (1, 1), (0, 4))
        A = rees_algebra(I)
        assert A.n == 2 and sorted(A.weights) == [2, 3, 4]

    def test_rees_of_maximal_ideal_is_free_minus_relation(self):
        # R(m) = A / (x1 y2 - x2 y1): its strands have series HS(A_k) - HS(A(-2,-1)_k)
        A = BigradedAlgebra(2, (1, 1))
        for k in range(1, 8):
            expected = strand_hilbert_series(A, BigradedShift(), k) - strand_hilbert_series(A, BigradedShift(2, 1), k)
            assert hilbert_series_ideal(rees_strand(MonomialIdeal.maximal(2), k)) == expected
