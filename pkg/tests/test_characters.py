from fractions import Fraction
from math import comb, factorial

import pytest

from cherednik import characters as C
from cherednik import partitions as P

# frozen character table of S_3, columns indexed by cycle type
S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}


def hook_length_dimension(lam):
    """Independent dimension oracle via the hook length formula."""
    if not lam:
        return 1
    conj = P.conjugate(lam)
    dim = factorial(P.size(lam))
    for i, p in enumerate(lam):
        for j in range(p):
            dim //= p - j + conj[j] - i - 1
    return dim


def is_horizontal_strip(nu, lam):
    """nu/lam is a horizontal strip: at most one box per column."""
    if len(lam) > len(nu):
        return False
    padded = tuple(lam) + (0,) * (len(nu) - len(lam))
    if any(n < l for n, l in zip(nu, padded)):
        return False
    return all(nu[i + 1] <= padded[i] for i in range(len(nu) - 1))


class TestLowestWeight:
    def test_examples(self):
        for c in (Fraction(1, 2), Fraction(5, 7), Fraction(-2, 3)):
            assert C.lowest_weight((1,), c) == 0
            assert C.lowest_weight((2,), c) == -c
            assert C.lowest_weight((1, 1), c) == c

    def test_row_formula_agrees_with_contents_everywhere(self):
        # the function computes both and raises on mismatch; sweep n <= 20
        for n in range(21):
            for lam in P.enumerate_partitions(n):
                C.lowest_weight(lam, Fraction(5, 7))

    def test_conjugation_negates_contents(self):
        for lam in P.enumerate_partitions(9):
            assert C.content_sum(lam) == -C.content_sum(P.conjugate(lam))


class TestCharacterValues:
    def test_examples(self):
        for n in range(1, 7):
            for mu in P.enumerate_partitions(n):
                assert C.character_value((n,), mu) == 1
        assert C.character_value((1, 1), (2,)) == -1
        assert C.character_value((2, 1), (1, 1, 1)) == 2

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            C.character_value((2, 1), (2, 2))

    def test_s3_table(self):
        for lam, row in S3_TABLE.items():
            for mu, value in row.items():
                assert C.character_value(lam, mu) == value

    def test_dimension_against_hook_lengths(self):
        for n in range(1, 9):
            for lam in P.enumerate_partitions(n):
                assert C.dimension(lam) == hook_length_dimension(lam)

    def test_column_orthogonality_at_identity(self):
        for n in range(1, 9):
            total = sum(
                C.character_value(lam, (1,) * n) ** 2
                for lam in P.enumerate_partitions(n)
            )
            assert total == factorial(n)

    def test_row_orthogonality(self):
        for n in range(1, 7):
            parts = P.enumerate_partitions(n)
            for lam in parts:
                for nu in parts:
                    inner = sum(
                        C.class_size(mu)
                        * C.character_value(lam, mu)
                        * C.character_value(nu, mu)
                        for mu in parts
                    )
                    assert inner == (factorial(n) if lam == nu else 0)

    def test_sign_twist_of_characters(self):
        # conjugating the label multiplies by the sign of the class
        for n in range(1, 7):
            for lam in P.enumerate_partitions(n):
                for mu in P.enumerate_partitions(n):
                    sign = (-1) ** (n - len(mu))
                    assert C.character_value(P.conjugate(lam), mu) == sign * C.character_value(lam, mu)


class TestLittlewoodRichardson:
    def test_examples(self):
        assert C.lr_induce((1,), (1,)) == {(2,): 1, (1, 1): 1}
        assert C.lr_induce((2, 1), (1,)) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}

    def test_pieri_single_row(self):
        # inducing with a single row hits exactly the horizontal strips
        for a in range(1, 6):
            for b in range(1, 5):
                if a + b > 8:
                    continue
                for lam in P.enumerate_partitions(a):
                    product = C.lr_induce(lam, (b,))
                    for nu in P.enumerate_partitions(a + b):
                        expected = 1 if is_horizontal_strip(nu, lam) else 0
                        assert product.get(nu, 0) == expected

    def test_pieri_single_column(self):
        for a in range(1, 6):
            for b in range(1, 4):
                if a + b > 8:
                    continue
                for lam in P.enumerate_partitions(a):
                    product = C.lr_induce(lam, (1,) * b)
                    for nu in P.enumerate_partitions(a + b):
                        expected = (
                            1
                            if is_horizontal_strip(P.conjugate(nu), P.conjugate(lam))
                            else 0
                        )
                        assert product.get(nu, 0) == expected

    def test_induced_dimension(self):
        # sum of multiplicities times dimensions matches the induced module
        for a in range(1, 5):
            for b in range(1, 5):
                for lam in P.enumerate_partitions(a):
                    for mu in P.enumerate_partitions(b):
                        product = C.lr_induce(lam, mu)
                        total = sum(
                            coeff * C.dimension(nu) for nu, coeff in product.items()
                        )
                        expected = (
                            comb(a + b, a) * C.dimension(lam) * C.dimension(mu)
                        )
                        assert total == expected

    def test_leading_coefficient_and_dominance(self):
        for total in range(0, 9):
            for a in range(total + 1):
                for lam in P.enumerate_partitions(a):
                    for mu in P.enumerate_partitions(total - a):
                        product = C.lr_induce(lam, mu)
                        target = P.add(lam, mu)
                        assert product.get(target) == 1
                        for nu in product:
                            assert P.dominates(target, nu)

    def test_symmetry(self):
        for a in range(1, 5):
            for b in range(1, 5):
                for lam in P.enumerate_partitions(a):
                    for mu in P.enumerate_partitions(b):
                        assert C.lr_induce(lam, mu) == C.lr_induce(mu, lam)


class TestRestrict:
    def test_examples(self):
        assert C.restrict((2, 1)) == {(2,): 1, (1, 1): 1}
        assert C.restrict((5,)) == {(4,): 1}
        assert C.restrict((2, 2)) == {(2, 1): 1}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            C.restrict(())

    def test_corner_count(self):
        for n in range(1, 10):
            for lam in P.enumerate_partitions(n):
                corners = len(set(lam))
                assert len(C.restrict(lam)) == corners

    def test_branching_dimension(self):
        for n in range(2, 9):
            for lam in P.enumerate_partitions(n):
                total = sum(C.dimension(nu) for nu in C.restrict(lam))
                assert total == C.dimension(lam)


class TestGradedMultiplicities:
    def test_examples(self):
        for n in range(1, 6):
            assert C.graded_poly_multiplicity((n,), n, 0) == 1
        assert C.graded_poly_multiplicity((2, 1), 3, 1) == 1
        assert C.graded_poly_multiplicity((1, 1, 1), 3, 1) == 0

    def test_degree_one_against_frozen_s3_table(self):
        # trace of a permutation on linear monomials is its fixed point count
        n = 3
        for lam, row in S3_TABLE.items():
            inner = Fraction(0)
            for mu, chi in row.items():
                fixed = sum(1 for p in mu if p == 1)
                inner += C.class_size(mu) * fixed * chi
            assert C.graded_poly_multiplicity(lam, n, 1) == inner / factorial(n)

    def test_total_dimension(self):
        for n in range(1, 6):
            for d in range(7):
                total = sum(
                    C.graded_poly_multiplicity(lam, n, d) * C.dimension(lam)
                    for lam in P.enumerate_partitions(n)
                )
                assert total == comb(n + d - 1, d)


class TestGradedCharacters:
    def test_examples_n2(self):
        c = Fraction(1, 3)
        gc = C.ch_verma((2,), c, 1)
        assert gc.base_weight == -c
        assert gc.layers[0] == {(2,): 1}
        assert gc.layers[1] == {(2,): 1, (1, 1): 1}
        gc = C.ch_verma((1, 1), c, 1)
        assert gc.base_weight == c
        assert gc.layers[1] == {(2,): 1, (1, 1): 1}

    def test_layer_zero_is_the_label(self):
        for lam in P.enumerate_partitions(4):
            gc = C.ch_verma(lam, Fraction(1, 2), 0)
            assert gc.layers[0] == {lam: 1}

    def test_layer_dimensions(self):
        for lam in P.enumerate_partitions(3):
            gc = C.ch_verma(lam, Fraction(1, 2), 4)
            for d in range(5):
                total = sum(
                    coeff * C.dimension(nu) for nu, coeff in gc.layers[d].items()
                )
                assert total == comb(3 + d - 1, d) * C.dimension(lam)


class TestLeadingTerm:
    def test_examples(self):
        assert C.leading_term_of_induction((1,), (1,), Fraction(1, 2)) == (
            (2,),
            Fraction(-1, 2),
        )
        assert C.leading_term_of_induction((2,), (2,), Fraction(1, 3)) == (
            (4,),
            Fraction(-2),
        )
        assert C.leading_term_of_induction((1,), (), Fraction(1, 2)) == ((1,), 0)

    def test_requires_positive_parameter(self):
        with pytest.raises(ValueError):
            C.leading_term_of_induction((1,), (1,), Fraction(-1, 2))

    def test_strict_minimality_small(self):
        c = Fraction(5, 7)
        for a in range(1, 5):
            for b in range(1, 5):
                for lam in P.enumerate_partitions(a):
                    for mu in P.enumerate_partitions(b):
                        target, weight = C.leading_term_of_induction(lam, mu, c)
                        assert target == P.add(lam, mu)
                        assert weight == C.lowest_weight(target, c)


class TestDominanceMonotonicity:
    def test_small_exhaustive(self):
        for n in range(2, 9):
            assert C.dominance_weight_consistent(n, Fraction(1, 2))
            assert C.dominance_weight_consistent(n, Fraction(5, 7))
