"""Commuting actions of U(gl(n)) and S(K) on the tensor space (k^n)^{(x)K}.

``tau`` lets ``E_ij`` act by ``e_ij`` summed over tensor positions; ``sigma`` permutes
positions, ``sigma(s) e_J = e_{s.J}`` with ``(s.J)_q = J_{s^{-1}(q)}``. The identity checked
here is ``tau(S_mu) = sigma(Ind chi^mu) / (K-k)!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Mapping, Sequence

from .combinatorics import Partition, as_partition, dim_sym
from .shifted_schur import sstar_eval
from .symgroup import (
    GroupAlgebraElement,
    Permutation,
    character_element,
    format_rational,
    induced_character_element,
)
from .ugln import Generator, UglnElement, act_on_index, quantum_immanant
from .weyl import MatrixPolynomial

Rational = Fraction | int
Index = tuple[int, ...]

MAX_DIMENSION = 81


class DimensionTooLargeError(ValueError):
    """``n^K`` exceeds the dense-matrix cap."""


def _check_dimension(n: int, K: int, allow_large: bool) -> None:
    if not allow_large and n**K > MAX_DIMENSION:
        raise DimensionTooLargeError(f"n^K = {n**K} exceeds {MAX_DIMENSION}; pass allow_large=True (--allow-large) to override")


def basis(n: int, K: int) -> list[Index]:
    """Multi-indices over ``1..n`` in row-major order."""
    return list(product(range(1, n + 1), repeat=K))


class TensorOperator:
    """Linear operator on ``(k^n)^{(x)K}`` with entries ``{(row index, column index): value}``."""

    __slots__ = ("n", "K", "entries")

    def __init__(self, n: int, K: int, entries: Mapping[tuple[Index, Index], Rational] | None = None):
        self.n, self.K = n, K
        self.entries: dict[tuple[Index, Index], Rational] = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def identity(cls, n: int, K: int) -> "TensorOperator":
        return cls(n, K, {(J, J): 1 for J in basis(n, K)})

    @classmethod
    def zero(cls, n: int, K: int) -> "TensorOperator":
        return cls(n, K)

    @property
    def dimension(self) -> int:
        return self.n**self.K

    def _same(self, other: "TensorOperator") -> None:
        if (self.n, self.K) != (other.n, other.K):
            raise ValueError("operators on different tensor spaces")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._same(other)
        d = dict(self.entries)
        for k, v in other.entries.items():
            d[k] = d.get(k, 0) + v
        return TensorOperator(self.n, self.K, d)

    def __neg__(self) -> "TensorOperator":
        return TensorOperator(self.n, self.K, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def __mul__(self, other) -> "TensorOperator":
        if not isinstance(other, TensorOperator):
            return TensorOperator(self.n, self.K, {k: v * other for k, v in self.entries.items()})
        self._same(other)
        by_row: dict[Index, list[tuple[Index, Rational]]] = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        d: dict[tuple[Index, Index], Rational] = {}
        for (i, mid), v in self.entries.items():
            for j, w in by_row.get(mid, ()):
                d[(i, j)] = d.get((i, j), 0) + v * w
        return TensorOperator(self.n, self.K, d)

    def __rmul__(self, scalar) -> "TensorOperator":
        return self * scalar

    def __truediv__(self, scalar) -> "TensorOperator":
        return TensorOperator(self.n, self.K, {k: Fraction(v) / scalar for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.n, self.K) == (other.n, other.K) and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def apply(self, vec: Mapping[Index, Rational]) -> dict[Index, Rational]:
        """Act on a vector ``{basis index: coefficient}``."""
        out: dict[Index, Rational] = {}
        for (i, j), v in self.entries.items():
            c = vec.get(j)
            if c:
                out[i] = out.get(i, 0) + v * c
        return {k: v for k, v in out.items() if v}

    def dense(self) -> list[list[Rational]]:
        b = basis(self.n, self.K)
        return [[self.entries.get((i, j), 0) for j in b] for i in b]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "matrix": [[format_rational(v) for v in row] for row in self.dense()],
        }

    def __repr__(self) -> str:
        return f"TensorOperator(n={self.n}, K={self.K}, nonzero={len(self.entries)})"


def _apply_generator(g: Generator, J: Index) -> list[Index]:
    """``E_ij e_J``: replace one letter ``j`` by ``i``, summed over positions."""
    _, i, j = g
    return [J[:p] + (i,) + J[p + 1 :] for p, x in enumerate(J) if x == j]


def tau(xi: UglnElement, K: int, allow_large: bool = False) -> TensorOperator:
    """Action of ``xi`` on ``(k^n)^{(x)K}``."""
    n = xi.n
    _check_dimension(n, K, allow_large)
    entries: dict[tuple[Index, Index], Rational] = {}
    for J in basis(n, K):
        for mono, c in xi.terms.items():
            vec: dict[Index, int] = {J: 1}
            for g in reversed(mono):
                nxt: dict[Index, int] = {}
                for I, a in vec.items():
                    for I2 in _apply_generator(g, I):
                        nxt[I2] = nxt.get(I2, 0) + a
                vec = nxt
            for I, a in vec.items():
                entries[(I, J)] = entries.get((I, J), 0) + c * a
    return TensorOperator(n, K, entries)


def sigma(a: GroupAlgebraElement | Permutation, n: int, allow_large: bool = False) -> TensorOperator:
    """Place-permutation action of a group algebra element."""
    if isinstance(a, Permutation):
        a = GroupAlgebraElement.of(a)
    K = a.k
    _check_dimension(n, K, allow_large)
    entries: dict[tuple[Index, Index], Rational] = {}
    for J in basis(n, K):
        for s, c in a:
            key = (act_on_index(s, J), J)
            entries[key] = entries.get(key, 0) + c
    return TensorOperator(n, K, entries)


@dataclass
class SchurWeylReport:
    shape: Partition
    n: int
    K: int
    equal: bool
    dimension: int
    first_discrepancy: dict | None = None

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "n": self.n,
            "K": self.K,
            "equal": self.equal,
            "dimension": self.dimension,
            "first_discrepancy": self.first_discrepancy,
        }


def verify_schur_weyl(
    mu: Partition | Sequence[int], n: int, K: int, allow_large: bool = False
) -> SchurWeylReport:
    """Compare ``tau(S_mu)`` with ``sigma(Ind chi^mu) / (K-k)!`` entry by entry."""
    mu = as_partition(mu)
    k = mu.weight
    if k > K:
        raise ValueError(f"|mu|={k} exceeds K={K}")
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than {n} parts")
    lhs = tau(quantum_immanant(mu, n), K, allow_large)
    rhs = sigma(induced_character_element(mu, K), n, allow_large) / factorial(K - k)
    diff = None
    residual = lhs - rhs
    if residual.entries:
        key = min(residual.entries)
        diff = {
            "row": list(key[0]),
            "col": list(key[1]),
            "lhs": format_rational(lhs.entries.get(key, 0)),
            "rhs": format_rational(rhs.entries.get(key, 0)),
        }
    return SchurWeylReport(mu, n, K, diff is None, n**K, diff)


def highest_weight_vector(lam: Partition | Sequence[int], n: int) -> dict[Index, Rational]:
    """Project ``e_{1..1 2..2 ...}`` onto the lam-isotypic component.

    The result is a nonzero highest-weight vector of weight ``lam`` in ``(k^n)^{(x)|lam|}``.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    K = lam.weight
    J = tuple(i + 1 for i, p in enumerate(lam) for _ in range(p))
    proj = sigma(character_element(lam) * Fraction(dim_sym(lam), factorial(K)), n, allow_large=True)
    return proj.apply({J: 1})


def eigenvalue_on_highest_weight(mu: Partition | Sequence[int], lam: Partition | Sequence[int], n: int) -> Rational:
    """Scalar by which ``tau(S_mu)`` acts on a highest-weight vector of weight ``lam``."""
    lam = as_partition(lam)
    v = highest_weight_vector(lam, n)
    w = tau(quantum_immanant(mu, n), lam.weight, allow_large=True).apply(v)
    J = min(v)
    c = Fraction(w.get(J, 0)) / v[J]
    if {I: c * a for I, a in v.items() if c * a} != w:
        raise ArithmeticError("vector is not an eigenvector")
    return c


def check_highest_weight_eigenvalue(mu: Partition | Sequence[int], lam: Partition | Sequence[int], n: int) -> bool:
    return eigenvalue_on_highest_weight(mu, lam, n) == sstar_eval(mu, lam)


def embedding_monomial(J: Index, n: int) -> MatrixPolynomial:
    """``x_{J_1 1} x_{J_2 2} ... x_{J_K K}`` on n x K matrices."""
    K = len(J)
    e = [0] * (n * K)
    for a, i in enumerate(J):
        e[(i - 1) * K + a] += 1
    return MatrixPolynomial(n, K, {tuple(e): 1})
