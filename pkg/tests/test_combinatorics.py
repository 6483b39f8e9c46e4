from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given

from capelli.combinatorics import (
    Partition,
    StandardTableau,
    cells_with_contents,
    content_power,
    dim_gl,
    dim_sym,
    hook_product,
    is_reverse_tableau,
    partitions,
    partitions_up_to,
    reverse_tableaux,
    semistandard_tableaux,
    skew_dim,
    standard_tableaux,
)

from conftest import partition_strategy


def brute_force_standard_count(mu: Partition) -> int:
    """Count fillings of the cells by 1..k increasing along rows and columns."""
    cells = mu.cells()
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        fill = dict(zip(cells, perm))
        if all(
            (j == 1 or fill[(i, j - 1)] < fill[(i, j)]) and (i == 1 or fill[(i - 1, j)] < fill[(i, j)])
            for i, j in cells
        ):
            count += 1
    return count


def weyl_dimension(n: int, mu: Partition) -> Fraction:
    lam = mu.padded(n)
    return prod(
        (Fraction(lam[i] - lam[j] + j - i, j - i) for i in range(n) for j in range(i + 1, n)),
        start=Fraction(1),
    )


class TestPartition:
    def test_normalizes_trailing_zeros(self):
        assert Partition((2, 1, 0, 0)) == Partition((2, 1))

    @pytest.mark.parametrize("bad", [(1, 2), (2, -1), (0, 1)])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            Partition(bad)

    @pytest.mark.parametrize("text,parts", [("2,1", (2, 1)), ("-", ()), ("", ()), ("3", (3,))])
    def test_parse_roundtrip(self, text, parts):
        mu = Partition.parse(text)
        assert mu.parts == parts
        assert Partition.parse(str(mu)) == mu

    def test_empty_prints_as_dash(self):
        assert str(Partition(())) == "-"

    @given(partition_strategy(8))
    def test_conjugate_is_involution(self, mu):
        assert mu.conjugate().conjugate() == mu
        assert mu.conjugate().weight == mu.weight

    def test_partition_counts(self):
        assert [len(partitions(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
        assert len(partitions_up_to(4)) == 1 + 1 + 2 + 3 + 5

    def test_max_length(self):
        assert all(len(p) <= 2 for p in partitions(6, max_length=2))
        assert len(partitions(6, max_length=2)) == 4


class TestContentsAndHooks:
    def test_cells_with_contents(self):
        assert cells_with_contents((2, 1)) == [((1, 1), 0), ((1, 2), 1), ((2, 1), -1)]
        assert cells_with_contents(()) == []
        assert [c for _, c in cells_with_contents((3,))] == [0, 1, 2]

    @pytest.mark.parametrize("mu,h", [((2, 1), 3), ((), 1), ((2,), 2), ((3, 2), 24), ((2, 2), 12)])
    def test_hook_product(self, mu, h):
        assert hook_product(mu) == h

    @pytest.mark.parametrize("mu,d", [((2, 1), 2), ((4,), 1), ((1, 1), 1), ((3, 2), 5), ((2, 2, 1), 5)])
    def test_dim_sym(self, mu, d):
        assert dim_sym(mu) == d

    @pytest.mark.parametrize("n,mu,d", [(2, (1, 1), 1), (2, (1,), 2), (3, (2, 1), 8), (3, (2,), 6), (4, (1, 1), 6)])
    def test_dim_gl(self, n, mu, d):
        assert dim_gl(n, mu) == d

    def test_dim_gl_rejects_long_shapes(self):
        with pytest.raises(ValueError):
            dim_gl(1, (1, 1))

    @pytest.mark.parametrize("k", range(7))
    def test_two_dimension_formulas_agree(self, k):
        for mu in partitions(k):
            h = hook_product(mu)
            assert dim_sym(mu) * h == factorial(k)
            for n in range(max(len(mu), 1), k + 1):
                assert dim_gl(n, mu) * h == content_power(n, mu)
                assert dim_gl(n, mu) == weyl_dimension(n, mu)


class TestSkewDim:
    def test_examples(self):
        assert skew_dim((2, 1), (1,)) == 2
        assert skew_dim((3, 1), (3, 1)) == 1
        assert skew_dim((1,), (2,)) == 0

    def test_from_empty_is_dim_sym(self):
        for mu in partitions_up_to(6):
            assert skew_dim(mu, ()) == dim_sym(mu)

    def test_recursion(self):
        for lam in partitions_up_to(6):
            for mu in partitions_up_to(lam.weight - 1):
                expected = sum(skew_dim(lam, nu) for nu in mu.addable() if lam.contains(nu))
                assert skew_dim(lam, mu) == (expected if lam.contains(mu) else 0)


class TestStandardTableaux:
    def test_content_vectors_of_21(self):
        assert sorted(t.content_vector for t in standard_tableaux((2, 1))) == [(0, -1, 1), (0, 1, -1)]

    def test_small_cases(self):
        assert [t.content_vector for t in standard_tableaux((1,))] == [(0,)]
        assert len(standard_tableaux((2, 2))) == 2

    @pytest.mark.parametrize("k", range(1, 7))
    def test_count_matches_dimension(self, k):
        for mu in partitions(k):
            tabs = standard_tableaux(mu)
            assert len(tabs) == dim_sym(mu) == brute_force_standard_count(mu)
            assert len(set(tabs)) == len(tabs)

    @given(partition_strategy(6, min_weight=1))
    def test_content_multiset(self, mu):
        contents = sorted(c for _, c in cells_with_contents(mu))
        for t in standard_tableaux(mu):
            assert t.content_vector[0] == 0
            assert sorted(t.content_vector) == contents

    def test_rejects_nonstandard(self):
        with pytest.raises(ValueError):
            StandardTableau(((2, 1),))
        with pytest.raises(ValueError):
            StandardTableau(((1, 3), (2, 2)))

    def test_swap(self):
        t = StandardTableau(((1, 2), (3,)))
        assert t.swap(2) == StandardTableau(((1, 3), (2,)))
        assert t.swap(1) is None

    def test_row_tableau(self):
        assert StandardTableau.row_tableau((2, 1)).rows == ((1, 2), (3,))


class TestReverseTableaux:
    def test_examples(self):
        assert len(reverse_tableaux((1,), 2)) == 2
        assert reverse_tableaux((1, 1), 1) == []
        assert [t.rows for t in reverse_tableaux((2,), 1)] == [((1, 1),)]

    def test_membership(self):
        assert is_reverse_tableau(((2, 2), (1,)), 2)
        assert not is_reverse_tableau(((1, 2),), 2)
        assert not is_reverse_tableau(((2,), (2,)), 2)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bijection_with_semistandard(self, n):
        for mu in partitions_up_to(4, max_length=n):
            assert len(reverse_tableaux(mu, n)) == len(semistandard_tableaux(mu, n)) == dim_gl(n, mu)
