from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from capelli.combinatorics import hook_product, partitions, partitions_up_to, skew_dim, standard_tableaux
from capelli.symgroup import (
    GroupAlgebraElement,
    J_generator,
    Permutation,
    R_tableau,
    algebra_multiply,
    all_permutations,
    antisymmetrizer,
    character_element,
    character_value,
    coset_representatives,
    diag_coeff,
    induced_character_element,
    projection,
    projection_from_matrix_units,
    represent,
    seminormal_matrix,
    skew_character_value,
    young_symmetrizer,
)

from conftest import permutation_strategy


def matmul(a, b):
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))) for i in range(len(a)))


def trace(m):
    return sum(m[i][i] for i in range(len(m)))


def perm(text, k):
    return Permutation.parse(text, k)


def ga(k, pairs):
    return GroupAlgebraElement(k, {perm(t, k): c for t, c in pairs})


class TestPermutation:
    def test_composition_convention(self):
        # (st)(x) = s(t(x))
        s, t = perm("(1 2)", 3), perm("(2 3)", 3)
        st_ = s * t
        assert all(st_(x) == s(t(x)) for x in (1, 2, 3))
        assert str(st_) == "(1 2 3)"

    def test_parse_and_print(self):
        assert str(perm("(1 2)(3 4)", 4)) == "(1 2)(3 4)"
        assert str(Permutation.identity(3)) == "()"
        assert Permutation.from_oneline([2, 3, 1]) == perm("(1 2 3)", 3)

    @given(st.integers(1, 6).flatmap(lambda k: st.tuples(permutation_strategy(k), permutation_strategy(k))))
    def test_sign_is_multiplicative(self, pair):
        s, t = pair
        assert (s * t).sign() == s.sign() * t.sign()
        assert (s * s.inverse()) == Permutation.identity(len(s))
        assert s.cycle_type().weight == len(s)


class TestGroupAlgebra:
    def test_identity_is_neutral(self):
        a = ga(3, [("(1 2)", 2), ("(1 2 3)", Fraction(-1, 3))])
        assert algebra_multiply(GroupAlgebraElement.identity(3), a) == a
        assert a * GroupAlgebraElement.identity(3) == a

    def test_alt_squared(self):
        alt = antisymmetrizer(2)
        assert alt == ga(2, [("()", 1), ("(1 2)", -1)])
        assert alt * alt == alt * 2

    def test_string_form(self):
        assert str(ga(2, [("()", 1), ("(1 2)", Fraction(-1, 2))])) == "1*() + -1/2*(1 2)"

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            GroupAlgebraElement.identity(2) * GroupAlgebraElement.identity(3)


class TestSeminormal:
    def test_example_s23_on_21(self):
        s23 = Permutation.adjacent(3, 2)
        by_contents = {t.content_vector: diag_coeff(t, s23) for t in standard_tableaux((2, 1))}
        assert by_contents == {(0, 1, -1): Fraction(-1, 2), (0, -1, 1): Fraction(1, 2)}

    def test_one_dimensional_cases(self):
        for s in all_permutations(3):
            assert seminormal_matrix((3,), s) == ((1,),)
        assert seminormal_matrix((1, 1), perm("(1 2)", 2)) == ((-1,),)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_multiplicative(self, k):
        for mu in partitions(k):
            for s, t in product(all_permutations(k), repeat=2):
                assert seminormal_matrix(mu, s * t) == matmul(seminormal_matrix(mu, s), seminormal_matrix(mu, t))

    @pytest.mark.parametrize("k", range(1, 5))
    def test_trace_is_character(self, k):
        for mu in partitions(k):
            for s in all_permutations(k):
                assert trace(seminormal_matrix(mu, s)) == character_value(mu, s)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_orthogonal_form_entries(self, k):
        # diagonal 1/r; off-diagonal product 1 - 1/r^2
        for mu in partitions(k):
            tabs = standard_tableaux(mu)
            for i in range(1, k):
                m = seminormal_matrix(mu, Permutation.adjacent(k, i))
                for a, t in enumerate(tabs):
                    r = t.content_vector[i] - t.content_vector[i - 1]
                    assert m[a][a] == Fraction(1, r)
                    t2 = t.swap(i)
                    if t2 is not None:
                        b = tabs.index(t2)
                        assert m[a][b] * m[b][a] == 1 - Fraction(1, r * r)

    def test_braid_relations(self):
        mu = (3, 2)
        s = [seminormal_matrix(mu, Permutation.adjacent(5, i)) for i in range(1, 5)]
        for i in range(3):
            assert matmul(matmul(s[i], s[i + 1]), s[i]) == matmul(matmul(s[i + 1], s[i]), s[i + 1])


class TestCharacters:
    def test_examples(self):
        assert character_value((1, 1), perm("(1 2)", 2)) == -1
        assert character_value((2, 1), Permutation.identity(3)) == 2
        assert character_value((2,), perm("(1 2)", 2)) == 1
        assert character_element((1, 1)) == ga(2, [("()", 1), ("(1 2)", -1)])
        assert character_element((1, 1, 1)) == antisymmetrizer(3)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_orthogonality(self, k):
        for mu in partitions(k):
            for nu in partitions(k):
                inner = sum(character_value(mu, s) * character_value(nu, s) for s in all_permutations(k))
                assert inner == (factorial(k) if mu == nu else 0)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_central(self, k):
        for mu in partitions(k):
            assert character_element(mu).is_central()


class TestProjections:
    def test_examples(self):
        (t11,) = standard_tableaux((1, 1))
        (t2,) = standard_tableaux((2,))
        (t1,) = standard_tableaux((1,))
        assert projection(t11) == ga(2, [("()", Fraction(1, 2)), ("(1 2)", Fraction(-1, 2))])
        assert projection(t2) == ga(2, [("()", Fraction(1, 2)), ("(1 2)", Fraction(1, 2))])
        assert projection(t1) == GroupAlgebraElement.identity(1)

    @pytest.mark.parametrize("k", range(1, 5))
    def test_idempotent_and_orthogonal(self, k):
        for mu in partitions(k):
            tabs = standard_tableaux(mu)
            for t in tabs:
                p = projection(t)
                assert p * p == p
                assert p == projection_from_matrix_units(t)
                for t2 in tabs:
                    if t2 != t:
                        assert (p * projection(t2)).is_zero()

    @pytest.mark.parametrize("k", range(2, 5))
    def test_rank_one_in_own_shape(self, k):
        for mu in partitions(k):
            for t in standard_tableaux(mu):
                p = projection(t)
                for nu in partitions(k):
                    assert trace(represent(nu, p)) == (1 if nu == mu else 0)

    @pytest.mark.parametrize("k", range(2, 5))
    def test_recursion_step(self, k):
        for mu in partitions(k):
            for t in standard_tableaux(mu):
                for i in range(1, k):
                    t2 = t.swap(i)
                    if t2 is None:
                        continue
                    r = t.content_vector[i] - t.content_vector[i - 1]
                    rt = R_tableau(t, i)
                    assert rt * projection(t) * rt / (r * r - 1) == projection(t2)
                    # (T,T) entry of R_i(T) P_T vanishes
                    tabs = standard_tableaux(mu)
                    a = tabs.index(t)
                    assert represent(mu, rt * projection(t))[a][a] == 0

    @pytest.mark.parametrize("k", range(1, 5))
    def test_conjugation_average_is_character(self, k):
        for mu in partitions(k):
            t = standard_tableaux(mu)[0]
            p = projection(t)
            total = GroupAlgebraElement(k)
            for s in all_permutations(k):
                total = total + p.conjugate(s)
            assert total == character_element(mu)


class TestYoungSymmetrizer:
    def test_examples(self):
        p, q, pq = young_symmetrizer((2,))
        assert p == ga(2, [("()", 1), ("(1 2)", 1)]) and q == GroupAlgebraElement.identity(2)
        assert pq * pq == pq * 2
        p, q, _ = young_symmetrizer((1, 1))
        assert p == GroupAlgebraElement.identity(2) and q == antisymmetrizer(2)
        p, q, pq = young_symmetrizer((2, 1))
        assert p == ga(3, [("()", 1), ("(1 2)", 1)])
        assert q == ga(3, [("()", 1), ("(1 3)", -1)])
        assert pq * pq == pq * 3

    @pytest.mark.parametrize("k", range(1, 6))
    def test_quasi_idempotent(self, k):
        for mu in partitions(k):
            p, q, pq = young_symmetrizer(mu)
            assert pq == p * q
            assert pq * pq == pq * hook_product(mu)
            row_factorial = 1
            for part in mu:
                row_factorial *= factorial(part)
            assert p * p == p * row_factorial

    @pytest.mark.parametrize("k", range(2, 5))
    def test_annihilators(self, k):
        for mu in partitions(k):
            _, _, pq = young_symmetrizer(mu)
            for i in range(1, k):
                assert (J_generator(mu, i) * pq).is_zero()


class TestInducedCharacters:
    def test_examples(self):
        assert induced_character_element((1,), 2) == GroupAlgebraElement.identity(2) * 2
        assert induced_character_element((1,), 1) == GroupAlgebraElement.identity(1)
        assert induced_character_element((2,), 2) == ga(2, [("()", 1), ("(1 2)", 1)])

    def test_coset_count(self):
        assert len(coset_representatives(2, 4)) == 12

    @pytest.mark.parametrize("K", range(1, 5))
    def test_frobenius(self, K):
        # inducing from S(k): Ind chi^mu = sum over lam of dim(lam/mu) chi^lam
        for mu in partitions_up_to(K):
            if mu.weight == 0:
                continue
            ind = induced_character_element(mu, K)
            assert ind.is_central()
            for s in all_permutations(K):
                assert ind[s] == sum(skew_dim(lam, mu) * character_value(lam, s) for lam in partitions(K))


class TestSkewCharacters:
    @pytest.mark.parametrize("d", range(1, 5))
    def test_horizontal_strip_sum(self, d):
        for lam in partitions_up_to(6):
            for mu in partitions_up_to(lam.weight):
                if not lam.contains(mu) or lam.weight - mu.weight != d:
                    continue
                total = sum(skew_character_value(lam, mu, s) for s in all_permutations(d))
                horizontal = all(lam.part(i + 1) <= mu.part(i) for i in range(1, len(lam) + 1))
                assert total == (factorial(d) if horizontal else 0)
