import random

import pytest

from capelli.combinatorics import partitions, partitions_up_to
from capelli.shifted_schur import sstar_eval
from capelli.symgroup import GroupAlgebraElement, Permutation, all_permutations, antisymmetrizer
from capelli.ugln import UglnElement, cartan_sum, quantum_immanant, random_element
from capelli.schurweyl import (
    DimensionTooLargeError,
    TensorOperator,
    basis,
    eigenvalue_on_highest_weight,
    embedding_monomial,
    sigma,
    tau,
    verify_schur_weyl,
)
from capelli.weyl import L_map, MatrixPolynomial, apply


class TestTau:
    def test_examples(self):
        assert tau(cartan_sum(2), 3) == TensorOperator.identity(2, 3) * 3
        assert tau(UglnElement.generator(2, 1, 2), 1) == TensorOperator(2, 1, {((1,), (2,)): 1})
        assert tau(quantum_immanant((1,), 2), 2) == TensorOperator.identity(2, 2) * 2

    @pytest.mark.parametrize("n,K", [(2, 2), (2, 3), (3, 2)])
    def test_homomorphism(self, n, K):
        rng = random.Random(n + K)
        for _ in range(6):
            a, b = random_element(n, 2, 3, rng), random_element(n, 2, 3, rng)
            assert tau(a * b, K) == tau(a, K) * tau(b, K)

    def test_cap(self):
        with pytest.raises(DimensionTooLargeError):
            tau(cartan_sum(3), 5)
        assert tau(cartan_sum(3), 5, allow_large=True) == TensorOperator.identity(3, 5) * 5


class TestSigma:
    def test_examples(self):
        assert sigma(GroupAlgebraElement.identity(3), 2) == TensorOperator.identity(2, 3)
        swap = sigma(Permutation.adjacent(2, 1), 2)
        assert swap.dense() == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        assert sigma(antisymmetrizer(2), 1) == TensorOperator.zero(1, 2)

    @pytest.mark.parametrize("K", [2, 3])
    def test_homomorphism(self, K):
        for s in all_permutations(K):
            for t in all_permutations(K):
                assert sigma(s * t, 2) == sigma(s, 2) * sigma(t, 2)

    def test_json_is_dense(self):
        j = (sigma(Permutation.adjacent(2, 1), 2) / 2).to_json()
        assert j["matrix"][1] == ["0", "0", "1/2", "0"]


class TestDuality:
    @pytest.mark.parametrize("n,K", [(1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
    def test_actions_commute(self, n, K):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                t = tau(UglnElement.generator(n, i, j), K)
                for q in range(1, K):
                    s = sigma(Permutation.adjacent(K, q), n)
                    assert t * s == s * t

    def test_examples(self):
        assert verify_schur_weyl((1,), 2, 2).equal
        assert verify_schur_weyl((1,), 1, 1).equal
        report = verify_schur_weyl((2, 1), 2, 3)
        assert report.equal and report.dimension == 8

    @pytest.mark.parametrize("K", [1, 2, 3, 4])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity(self, n, K):
        for mu in partitions_up_to(K, max_length=n):
            if mu.weight:
                assert verify_schur_weyl(mu, n, K).equal

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_schur_weyl((2,), 2, 1)
        with pytest.raises(ValueError):
            verify_schur_weyl((1, 1, 1), 2, 3)

    @pytest.mark.parametrize("n", [1, 2])
    def test_highest_weight_eigenvalue(self, n):
        for K in range(1, 5):
            for lam in partitions(K, max_length=n):
                for mu in partitions_up_to(K, max_length=n):
                    assert eigenvalue_on_highest_weight(mu, lam, n) == sstar_eval(mu, lam)


class TestPolynomialEmbedding:
    @pytest.mark.parametrize("n,K", [(1, 3), (2, 2), (2, 3), (3, 2)])
    def test_tau_matches_differential_operators(self, n, K):
        elements = [quantum_immanant((1,), n), UglnElement.generator(n, 1, n) * UglnElement.generator(n, n, 1)]
        if n >= 2:
            elements.append(quantum_immanant((1, 1), n))
        for xi in elements:
            t, op = tau(xi, K), L_map(xi, K)
            for J in basis(n, K):
                image = MatrixPolynomial(n, K)
                for (I, J2), v in t.entries.items():
                    if J2 == J:
                        image = image + embedding_monomial(I, n) * v
                assert apply(op, embedding_monomial(J, n)) == image

    def test_right_action_convention(self):
        # s . x_{i_1 1} ... x_{i_K K} = x_{i_1 s^-1(1)} ... moves row i_p to column s^-1(p),
        # which is sigma(s^-1) in the place-permutation convention used here
        n, K = 2, 3
        s = Permutation.parse("(1 2 3)", K)
        si = s.inverse()
        op = sigma(si, n)
        for J in basis(n, K):
            cols = [0] * (n * K)
            for p, i in enumerate(J):
                cols[(i - 1) * K + si[p]] += 1
            moved = MatrixPolynomial(n, K, {tuple(cols): 1})
            (image,) = [I for (I, J2) in op.entries if J2 == J]
            assert embedding_monomial(image, n) == moved
