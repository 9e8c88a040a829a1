import pytest
from hypothesis import given, settings, strategies as st

from tableaux import (
    EMPTY,
    NotHomogeneousError,
    NotSymmetricError,
    Partition,
    Polynomial,
    enumerate_ssyt,
    partitions_of,
    schur_expand,
    schur_polynomial,
)

EIGHT_TABLEAU_EXPANSION = Polynomial(
    3,
    {
        (2, 1, 0): 1,
        (1, 2, 0): 1,
        (1, 1, 1): 2,
        (2, 0, 1): 1,
        (1, 0, 2): 1,
        (0, 2, 1): 1,
        (0, 1, 2): 1,
    },
)


class TestSchurPolynomial:
    def test_two_one_in_three_variables(self):
        assert schur_polynomial(Partition((2, 1)), 3) == EIGHT_TABLEAU_EXPANSION

    def test_empty_shape_is_one(self):
        for width in (1, 2, 5):
            assert schur_polynomial(EMPTY, width) == Polynomial.constant(width, 1)

    def test_too_many_rows_gives_zero(self):
        assert schur_polynomial(Partition((1, 1, 1)), 2).is_zero

    def test_width_zero(self):
        assert schur_polynomial(EMPTY, 0) == Polynomial(0, {(): 1})
        assert schur_polynomial(Partition((1,)), 0).is_zero

    def test_single_column_is_elementary(self):
        poly = schur_polynomial(Partition((1, 1)), 3)
        assert poly == Polynomial(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})

    def test_symmetric_for_small_shapes(self):
        for n in range(7):
            for shape in partitions_of(n):
                for width in range(1, 5):
                    assert schur_polynomial(shape, width).is_symmetric(), (shape, width)

    def test_coefficient_sum_counts_tableaux(self):
        for n in range(7):
            for shape in partitions_of(n):
                for width in range(1, 5):
                    poly = schur_polynomial(shape, width)
                    count = sum(1 for _ in enumerate_ssyt(shape, width))
                    assert sum(poly.terms.values()) == count


class TestSchurExpand:
    def test_basis_element(self):
        poly = schur_polynomial(Partition((2, 1)), 3)
        assert schur_expand(poly) == {Partition((2, 1)): 1}

    def test_zero_polynomial(self):
        assert schur_expand(Polynomial.zero(4)) == {}

    def test_square_of_first_schur(self):
        s1 = schur_polynomial(Partition((1,)), 2)
        assert schur_expand(s1 * s1) == {Partition((2,)): 1, Partition((1, 1)): 1}

    def test_coefficient_two_in_square(self):
        s21 = schur_polynomial(Partition((2, 1)), 6)
        expansion = schur_expand(s21 * s21)
        assert expansion[Partition((3, 2, 1))] == 2

    def test_hand_worked_binomial_square(self):
        # (x1 + x2)^2 minus s_(2) leaves x1 x2 = s_(1,1)
        s1 = Polynomial(2, {(1, 0): 1, (0, 1): 1})
        assert schur_expand(s1 * s1) == {Partition((2,)): 1, Partition((1, 1)): 1}

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetricError):
            schur_expand(Polynomial.monomial(2, (1, 2)))
        # symmetric-looking leading term, broken tail
        with pytest.raises(NotSymmetricError):
            schur_expand(Polynomial(2, {(2, 0): 1, (1, 1): 1}))

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneousError):
            schur_expand(Polynomial(2, {(1, 0): 1, (0, 0): 1}))

    def test_negative_coefficients_survive_as_data(self):
        poly = schur_polynomial(Partition((2,)), 3) * (-2)
        assert schur_expand(poly) == {Partition((2,)): -2}

    @settings(max_examples=30)
    @given(st.data())
    def test_round_trip_of_built_combinations(self, data):
        degree = data.draw(st.integers(1, 6))
        shapes = list(partitions_of(degree))
        coeffs = data.draw(
            st.lists(st.integers(0, 3), min_size=len(shapes), max_size=len(shapes))
        )
        width = degree
        poly = Polynomial.zero(width)
        for shape, c in zip(shapes, coeffs):
            if c:
                poly = poly + schur_polynomial(shape, width) * c
        expected = {shape: c for shape, c in zip(shapes, coeffs) if c}
        assert schur_expand(poly) == expected

    def test_coefficients_stable_in_width(self):
        for total in range(1, 6):
            for a in range(total + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(total - a):
                        at_n = schur_expand(
                            schur_polynomial(lam, total) * schur_polynomial(mu, total)
                        )
                        at_n1 = schur_expand(
                            schur_polynomial(lam, total + 1) * schur_polynomial(mu, total + 1)
                        )
                        assert at_n == at_n1, (lam, mu)
