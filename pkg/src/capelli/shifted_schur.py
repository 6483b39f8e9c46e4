"""Shifted Schur polynomials s*_mu.

Two independent constructions are provided: the ratio of factorial-power determinants
(``sstar_det_eval``) and the sum over reverse column-strict tableaux
(``sigma_polynomial``). The shift sequence is ``delta = (n-1, ..., 1, 0)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import prod
from typing import Sequence

from .combinatorics import (
    Partition,
    as_partition,
    cells_with_contents,
    content_power,
    dim_sym,
    hook_product,
    partitions_up_to,
    reverse_tableaux,
    semistandard_tableaux,
)
from .polynomial import RationalPolynomial, polynomial_sum, product_of_linear

Rational = Fraction | int


class SingularEvaluationError(ArithmeticError):
    """The shifted points ``x_i + delta_i`` are not pairwise distinct."""


class NotInSpanError(ValueError):
    """Polynomial is not a combination of the requested shifted Schur polynomials."""


def falling(a, b: int):
    """``a (a-1) ... (a-b+1)``."""
    if b < 0:
        raise ValueError("negative exponent")
    return prod((a - i for i in range(b)), start=1)


def raising(a, b: int):
    """``a (a+1) ... (a+b-1)``."""
    if b < 0:
        raise ValueError("negative exponent")
    return prod((a + i for i in range(b)), start=1)


def factorial_power(a, kind: str, exponent: int | Partition | Sequence[int]):
    """Factorial powers: ``kind`` is ``"falling"``, ``"raising"`` or ``"content"``.

    ``content`` takes a partition and returns ``prod over cells (a + c(cell))``.
    """
    if kind == "falling":
        return falling(a, exponent)  # type: ignore[arg-type]
    if kind == "raising":
        return raising(a, exponent)  # type: ignore[arg-type]
    if kind == "content":
        return content_power(a, as_partition(exponent))  # type: ignore[arg-type]
    raise ValueError(f"unknown factorial power kind {kind!r}")


def determinant(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def sstar_det_eval(mu: Partition | Sequence[int], x: Sequence[Rational]) -> Fraction:
    """Evaluate ``s*_mu(x_1..x_n)`` as a ratio of two determinants."""
    mu = as_partition(mu)
    n = len(x)
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than {n} parts")
    lam = mu.padded(n)
    shifted = [Fraction(x[i]) + (n - 1 - i) for i in range(n)]
    if len(set(shifted)) != n:
        raise SingularEvaluationError(f"shifted points {', '.join(map(str, shifted))} are not distinct")
    num = determinant([[falling(shifted[i], lam[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    den = determinant([[falling(shifted[i], n - 1 - j) for j in range(n)] for i in range(n)])
    return num / den


@lru_cache(maxsize=None)
def _sigma(mu: Partition, n: int) -> RationalPolynomial:
    cells = cells_with_contents(mu)
    return polynomial_sum(
        n,
        (product_of_linear(n, ((t.entry(cell), -c) for cell, c in cells)) for t in reverse_tableaux(mu, n)),
    )


def sigma_polynomial(mu: Partition | Sequence[int], n: int) -> RationalPolynomial:
    """``sum over T in RTab(mu, n) of prod over cells (x_{T(cell)} - c(cell))``."""
    return _sigma(as_partition(mu), n)


def tableau_products(mu: Partition | Sequence[int], lam: Sequence[Rational]) -> list[Rational]:
    """Individual summands of ``sigma_polynomial(mu, len(lam))`` evaluated at ``lam``."""
    mu = as_partition(mu)
    cells = cells_with_contents(mu)
    return [prod((lam[t.entry(cell) - 1] - c for cell, c in cells), start=1) for t in reverse_tableaux(mu, len(lam))]


def sstar_eval(mu: Partition | Sequence[int], lam: Partition | Sequence[Rational]) -> Rational:
    """``s*_mu`` at a partition (or any point), using the tableau sum.

    Points are padded with zeros to at least ``len(mu)`` coordinates, which does not
    change the value.
    """
    mu = as_partition(mu)
    pt = list(lam.parts) if isinstance(lam, Partition) else list(lam)
    n = max(len(mu), len(pt))
    pt += [0] * (n - len(pt))
    if n == 0:
        return 1
    return sigma_polynomial(mu, n).evaluate(pt)


def sstar_det_at(mu: Partition | Sequence[int], lam: Partition | Sequence[Rational]) -> Fraction:
    """Determinant route with the same zero-padding convention as ``sstar_eval``."""
    mu = as_partition(mu)
    pt = list(lam.parts) if isinstance(lam, Partition) else list(lam)
    n = max(len(mu), len(pt))
    pt += [0] * (n - len(pt))
    if n == 0:
        return Fraction(1)
    return sstar_det_eval(mu, pt)


def is_shifted_symmetric(f: RationalPolynomial) -> bool:
    """Invariance under each exchange ``x_i + delta_i <-> x_{i+1} + delta_{i+1}``."""
    n = f.nvars
    for i in range(1, n):
        images = [RationalPolynomial.variable(n, j) for j in range(1, n + 1)]
        # delta_i - delta_{i+1} = 1
        images[i - 1] = RationalPolynomial.variable(n, i + 1) - 1
        images[i] = RationalPolynomial.variable(n, i) + 1
        if f.substitute(images) != f:
            return False
    return True


def expand_in_sstar_basis(f: RationalPolynomial, k: int | None = None) -> dict[Partition, Rational]:
    """Coefficients ``c`` with ``f = sum c_lam s*_lam`` over ``|lam| <= k``, ``len(lam) <= n``.

    Coefficients are extracted by evaluating at partitions of increasing weight; the
    vanishing property makes this triangular with diagonal ``H(lam)``.
    """
    n = f.nvars
    if k is None:
        k = max(f.degree, 0)
    if f.degree > k:
        raise NotInSpanError(f"degree {f.degree} exceeds bound {k}")
    if not is_shifted_symmetric(f):
        raise NotInSpanError("polynomial is not shifted symmetric")
    coeffs: dict[Partition, Rational] = {}
    for lam in partitions_up_to(k, max_length=n):
        pt = lam.padded(n)
        known = sum((c * sstar_eval(nu, pt) for nu, c in coeffs.items()), Fraction(0))
        c = (f.evaluate(pt) - known) / hook_product(lam)
        if c:
            coeffs[lam] = c
    residual = f - polynomial_sum(n, (sigma_polynomial(lam, n) * c for lam, c in coeffs.items()))
    if not residual.is_zero():
        raise NotInSpanError(f"nonzero residual {residual}")
    return coeffs


def char_ratio(lam: Partition | Sequence[int], mu: Partition | Sequence[int]) -> Fraction:
    """``s*_mu(lam) / (|lam| falling |mu|)``, equal to ``dim(lam/mu) / dim(lam)``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if mu.weight > lam.weight:
        raise ValueError(f"|mu|={mu.weight} exceeds |lam|={lam.weight}")
    return Fraction(sstar_eval(mu, lam)) / falling(lam.weight, mu.weight)


def sstar_at_self_product_formula(mu: Partition | Sequence[int], n: int | None = None) -> Fraction:
    """``prod (mu_i + n - i)! / prod_{i<j} (mu_i - mu_j - i + j)``, which equals ``H(mu)``."""
    from math import factorial

    mu = as_partition(mu)
    n = max(len(mu), 1) if n is None else n
    lam = mu.padded(n)
    num = prod(factorial(lam[i] + n - 1 - i) for i in range(n))
    den = prod(lam[i] - lam[j] - i + j for i in range(n) for j in range(i + 1, n))
    return Fraction(num, den)


def schur_polynomial(mu: Partition | Sequence[int], n: int) -> RationalPolynomial:
    """Ordinary Schur polynomial as a sum over semistandard tableaux."""
    mu = as_partition(mu)
    terms: dict[tuple[int, ...], int] = {}
    for t in semistandard_tableaux(mu, n):
        e = [0] * n
        for r in t:
            for x in r:
                e[x - 1] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return RationalPolynomial(n, terms)


def shifted_elementary(k: int, n: int) -> RationalPolynomial:
    """``sum_{i_1<...<i_k} (x_{i_1}+k-1) ... (x_{i_{k-1}}+1) x_{i_k}``."""
    return polynomial_sum(
        n, (product_of_linear(n, ((i, k - 1 - p) for p, i in enumerate(idx))) for idx in combinations(range(1, n + 1), k))
    )


def shifted_complete(k: int, n: int) -> RationalPolynomial:
    """``sum_{i_1<=...<=i_k} (x_{i_1}-k+1) ... (x_{i_{k-1}}-1) x_{i_k}``."""
    return polynomial_sum(
        n,
        (
            product_of_linear(n, ((i, -(k - 1 - p)) for p, i in enumerate(idx)))
            for idx in combinations_with_replacement(range(1, n + 1), k)
        ),
    )


def dimension_ratio_check(lam: Partition, mu: Partition) -> tuple[Fraction, Fraction]:
    """Both sides of ``dim(lam/mu)/dim(lam) = s*_mu(lam)/(|lam| falling |mu|)``."""
    from .combinatorics import skew_dim

    return Fraction(skew_dim(lam, mu), dim_sym(lam)), char_ratio(lam, mu)

