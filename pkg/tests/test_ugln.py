import random
from fractions import Fraction
from math import factorial

import pytest

from capelli.combinatorics import dim_gl, partitions, partitions_up_to, standard_tableaux
from capelli.shifted_schur import sstar_eval
from capelli.symgroup import GroupAlgebraElement, Permutation, antisymmetrizer, projection
from capelli.ugln import (
    NotCentralError,
    UglnElement,
    capelli_element,
    capelli_element_column,
    cartan_sum,
    commutative_image,
    e_matrix,
    e_shape,
    e_tableau,
    hc_eigenvalue,
    hc_polynomial,
    immanant_via_symmetrizer,
    is_central,
    pbw_normalize,
    quantum_immanant,
    quantum_immanant_via_shape,
    quantum_immanant_via_trace,
    random_element,
    rtt_sides,
    tensor_trace,
)
from capelli.weyl import immanant_poly


def E(n, i, j):
    return UglnElement.generator(n, i, j)


def one(n):
    return UglnElement.scalar(n, 1)


class TestNormalForm:
    def test_single_commutator(self):
        assert E(2, 1, 2) * E(2, 2, 1) == E(2, 2, 1) * E(2, 1, 2) + E(2, 1, 1) - E(2, 2, 2)
        assert pbw_normalize(2, [([(1, 2), (2, 1)], 1)]) == E(2, 1, 2) * E(2, 2, 1)

    def test_already_canonical(self):
        p = E(2, 1, 1) * E(2, 2, 2)
        assert list(p.terms) == [((1, 1, 1), (1, 2, 2))]
        assert (E(2, 1, 2) * E(2, 1, 2)).to_text() == "1 * E[1,2]^2"

    def test_monomial_order(self):
        # lower generators, then diagonal, then upper
        text = (E(2, 2, 1) * E(2, 1, 1) * E(2, 1, 2)).to_text()
        assert text.startswith("1 * E[2,1]*E[1,1]*E[1,2]")

    @pytest.mark.parametrize("n", [2, 3])
    def test_associative(self, n):
        rng = random.Random(n)
        for _ in range(10):
            a, b, c = (random_element(n, 2, 3, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    @pytest.mark.parametrize("n", [2, 3])
    def test_jacobi(self, n):
        rng = random.Random(10 + n)
        for _ in range(10):
            a, b, c = (random_element(n, 2, 2, rng) for _ in range(3))
            total = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) + c.commutator(a.commutator(b))
            assert total.is_zero()

    def test_json(self):
        j = (E(2, 1, 2) * Fraction(1, 2)).to_json()
        assert j == {"n": 2, "terms": [{"monomial": "E[1,2]", "coeff": "1/2"}]}


class TestMatrices:
    def test_e_matrix(self):
        m = e_matrix(2, 0)
        assert m[((1,), (2,))] == E(2, 1, 2)
        assert e_matrix(1, -1)[((1,), (1,))] == E(1, 1, 1) + 1

    def test_tensor_trace_examples(self):
        ident = GroupAlgebraElement.identity(1)
        assert tensor_trace([e_matrix(3, 0)], ident) == cartan_sum(3)
        swap = GroupAlgebraElement.of(Permutation.adjacent(2, 1))
        assert tensor_trace([e_matrix(1, 0), e_matrix(1, 1)], swap) == E(1, 1, 1) * (E(1, 1, 1) - 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_rtt(self, n):
        for u, v in [(0, -1), (1, 2), (Fraction(1, 2), 3), (-2, Fraction(5, 3)), (4, 4)]:
            lhs, rhs = rtt_sides(n, u, v)
            assert lhs == rhs

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cherednik(self, k, n):
        for mu in partitions(k):
            for t in standard_tableaux(mu):
                e, p = e_tableau(t, n), projection(t)
                assert e.right_act(p) == e.left_act(p).right_act(p)

    @pytest.mark.parametrize("k", [2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_e_shape_commutes_with_permutations(self, k, n):
        for mu in partitions(k):
            em = e_shape(mu, n)
            for i in range(1, k):
                s = GroupAlgebraElement.of(Permutation.adjacent(k, i))
                assert em.left_act(s) == em.right_act(s)


class TestCapelli:
    def test_small(self):
        assert capelli_element(1) == E(1, 1, 1)
        n = 2
        by_hand = E(n, 1, 1) * E(n, 2, 2) + E(n, 1, 1) - E(n, 1, 2) * E(n, 2, 1)
        assert capelli_element(2) == by_hand

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_forms_agree(self, n):
        c = capelli_element(n)
        assert capelli_element_column(n) == c
        assert tensor_trace([e_matrix(n, -p) for p in range(n)], antisymmetrizer(n)) / factorial(n) == c
        assert quantum_immanant([1] * n, n) == c
        assert is_central(c)


class TestQuantumImmanants:
    def test_examples(self):
        for n in (1, 2, 3):
            assert quantum_immanant((1,), n) == cartan_sum(n)
        assert quantum_immanant((2,), 1) == E(1, 1, 1) * E(1, 1, 1) - E(1, 1, 1)
        assert immanant_via_symmetrizer((2,), 1) == E(1, 1, 1) * E(1, 1, 1) - E(1, 1, 1)
        assert immanant_via_symmetrizer((1, 1), 2) == capelli_element(2)

    def test_rejects_long_shapes(self):
        with pytest.raises(ValueError):
            quantum_immanant((1, 1), 1)
        with pytest.raises(ValueError):
            immanant_via_symmetrizer((1, 1, 1), 2)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_routes_and_centrality(self, n):
        for mu in partitions_up_to(4, max_length=n):
            if not mu.weight:
                continue
            s = quantum_immanant(mu, n)
            assert is_central(s)
            for t in standard_tableaux(mu):
                assert quantum_immanant_via_trace(mu, n, t) == s
            if mu.weight <= 3:
                assert immanant_via_symmetrizer(mu, n) == s
                assert quantum_immanant_via_shape(mu, n) == s

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_highest_term_is_immanant_polynomial(self, n):
        for mu in partitions_up_to(3, max_length=n):
            if not mu.weight:
                continue
            top = quantum_immanant(mu, n).top_degree_part()
            assert commutative_image(top).terms == immanant_poly(mu, n, n).terms

    def test_normalized(self):
        # divided by (3 up (2,1)) = 3 * 4 * 2
        assert quantum_immanant((2, 1), 3, normalized=True) * 24 == quantum_immanant((2, 1), 3)


class TestEigenvalues:
    def test_examples(self):
        assert hc_eigenvalue(cartan_sum(2), (2, 1)) == 3
        assert hc_eigenvalue(capelli_element(2), (2, 1)) == 3
        lam1, lam2 = Fraction(7, 3), Fraction(-1, 2)
        assert hc_eigenvalue(capelli_element(2), (lam1, lam2)) == (lam1 + 1) * lam2

    def test_polynomial(self):
        p = hc_polynomial(capelli_element(2))
        assert p.evaluate([5, 2]) == 12

    def test_rejects_non_central(self):
        with pytest.raises(NotCentralError):
            hc_eigenvalue(E(2, 1, 2), (1,))
        assert not is_central(E(2, 1, 2))
        assert is_central(cartan_sum(3))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_eigenvalue_formula(self, n):
        for mu in partitions_up_to(4, max_length=n):
            s = quantum_immanant(mu, n)
            for lam in partitions_up_to(5, max_length=n):
                v = hc_eigenvalue(s, lam)
                assert v == sstar_eval(mu, lam)
                if lam.weight < mu.weight:
                    assert v == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_normalized_trace_condition(self, n):
        for mu in partitions_up_to(3, max_length=n):
            s = quantum_immanant(mu, n, normalized=True)
            for lam in partitions_up_to(mu.weight, max_length=n):
                assert dim_gl(n, lam) * hc_eigenvalue(s, lam) == (1 if lam == mu else 0)

    def test_eigenvalue_of_product_is_product(self):
        a, b = quantum_immanant((1,), 2), quantum_immanant((1, 1), 2)
        for lam in partitions_up_to(4, max_length=2):
            assert hc_eigenvalue(a * b, lam) == hc_eigenvalue(a, lam) * hc_eigenvalue(b, lam)
