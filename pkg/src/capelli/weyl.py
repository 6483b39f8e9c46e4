"""Polynomial differential operators on n x m matrices, and the higher Capelli identities.

A normal-ordered monomial ``x^alpha d^beta`` is a pair of dense exponent tuples over the
``n*m`` matrix positions, row-major: position ``(i, a)`` has index ``(i-1)*m + (a-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, as_partition
from .polynomial import RationalPolynomial
from .symgroup import all_permutations, character_value, format_rational
from .ugln import Monomial, UglnElement, quantum_immanant

Rational = Fraction | int
Exp = tuple[int, ...]
WeylMonomial = tuple[Exp, Exp]


def _add_into(d: dict, key, c) -> None:
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


@lru_cache(maxsize=200_000)
def _reorder(beta: Exp, gamma: Exp) -> tuple[tuple[Exp, Exp, int], ...]:
    """``d^beta x^gamma = sum c x^(gamma-kappa) d^(beta-kappa)``."""
    choices = [range(min(b, g) + 1) for b, g in zip(beta, gamma)]
    out = []
    for kappa in product(*choices):
        c = prod(comb(b, q) * comb(g, q) * factorial(q) for b, g, q in zip(beta, gamma, kappa))
        out.append(
            (
                tuple(g - q for g, q in zip(gamma, kappa)),
                tuple(b - q for b, q in zip(beta, kappa)),
                c,
            )
        )
    return tuple(out)


def _mono_mul(a: WeylMonomial, b: WeylMonomial) -> list[tuple[WeylMonomial, int]]:
    (alpha, beta), (gamma, delta) = a, b
    if not any(beta) or not any(gamma):
        return [((tuple(p + q for p, q in zip(alpha, gamma)), tuple(p + q for p, q in zip(beta, delta))), 1)]
    return [
        ((tuple(p + q for p, q in zip(alpha, g2)), tuple(p + q for p, q in zip(b2, delta))), c)
        for g2, b2, c in _reorder(beta, gamma)
    ]


def _var_str(letter: str, idx: int, p: int, m: int) -> str:
    i, a = divmod(idx, m)
    return f"{letter}[{i + 1},{a + 1}]" + (f"^{p}" if p > 1 else "")


class WeylElement:
    """Normal-ordered differential operator ``sum c x^alpha d^beta`` on n x m matrices."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[WeylMonomial, Rational] | None = None):
        self.n, self.m = n, m
        self.terms: dict[WeylMonomial, Rational] = {k: c for k, c in (terms or {}).items() if c}

    @property
    def nvars(self) -> int:
        return self.n * self.m

    def index(self, i: int, a: int) -> int:
        if not (1 <= i <= self.n and 1 <= a <= self.m):
            raise ValueError(f"position ({i},{a}) outside {self.n}x{self.m}")
        return (i - 1) * self.m + (a - 1)

    @classmethod
    def scalar(cls, n: int, m: int, c: Rational) -> "WeylElement":
        z = (0,) * (n * m)
        return cls(n, m, {(z, z): c})

    @classmethod
    def x(cls, n: int, m: int, i: int, a: int) -> "WeylElement":
        e = [0] * (n * m)
        e[(i - 1) * m + a - 1] = 1
        return cls(n, m, {(tuple(e), (0,) * (n * m)): 1})

    @classmethod
    def d(cls, n: int, m: int, i: int, a: int) -> "WeylElement":
        e = [0] * (n * m)
        e[(i - 1) * m + a - 1] = 1
        return cls(n, m, {((0,) * (n * m), tuple(e)): 1})

    def _coerce(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            if (other.n, other.m) != (self.n, self.m):
                raise ValueError("operators on different matrix spaces")
            return other
        return WeylElement.scalar(self.n, self.m, other)

    def __add__(self, other) -> "WeylElement":
        other = self._coerce(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(d, k, c)
        return WeylElement(self.n, self.m, d)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "WeylElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "WeylElement":
        if not isinstance(other, WeylElement):
            return WeylElement(self.n, self.m, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        d: dict[WeylMonomial, Rational] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for k, c in _mono_mul(k1, k2):
                    _add_into(d, k, c1 * c2 * c)
        return WeylElement(self.n, self.m, d)

    def __rmul__(self, scalar) -> "WeylElement":
        return WeylElement(self.n, self.m, {k: scalar * c for k, c in self.terms.items()})

    def __truediv__(self, scalar) -> "WeylElement":
        return WeylElement(self.n, self.m, {k: Fraction(c) / scalar for k, c in self.terms.items()})

    def __pow__(self, p: int) -> "WeylElement":
        out = WeylElement.scalar(self.n, self.m, 1)
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, WeylElement):
            return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_str(self, key: WeylMonomial) -> str:
        alpha, beta = key
        parts = [_var_str("x", v, p, self.m) for v, p in enumerate(alpha) if p]
        parts += [_var_str("d", v, p, self.m) for v, p in enumerate(beta) if p]
        return "*".join(parts) or "1"

    def sorted_terms(self) -> list[tuple[WeylMonomial, Rational]]:
        return sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0][0]) - sum(kv[0][1]), tuple(-p for p in kv[0][0] + kv[0][1])),
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {self.monomial_str(k)}" for k, c in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"WeylElement({self.n}x{self.m}, {self.to_text()!r})"


def weyl_normalize(n: int, m: int, word: Iterable[tuple[str, int, int]], coeff: Rational = 1) -> WeylElement:
    """Normal order a word of letters ``("x", i, a)`` or ``("d", i, a)``."""
    out = WeylElement.scalar(n, m, coeff)
    for letter, i, a in word:
        if letter == "x":
            out = out * WeylElement.x(n, m, i, a)
        elif letter in ("d", "∂"):
            out = out * WeylElement.d(n, m, i, a)
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return out


class MatrixPolynomial(RationalPolynomial):
    """Commutative polynomial in the entries of an n x m matrix (row-major variables)."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows: int, cols: int, terms: Mapping[Exp, Rational] | None = None):
        super().__init__(rows * cols, terms)
        self.rows, self.cols = rows, cols

    def _like(self, terms: Mapping[Exp, Rational]) -> "MatrixPolynomial":
        return MatrixPolynomial(self.rows, self.cols, terms)

    @classmethod
    def entry(cls, rows: int, cols: int, i: int, a: int) -> "MatrixPolynomial":
        e = [0] * (rows * cols)
        e[(i - 1) * cols + a - 1] = 1
        return cls(rows, cols, {tuple(e): 1})

    @classmethod
    def from_polynomial(cls, rows: int, cols: int, p: RationalPolynomial) -> "MatrixPolynomial":
        if p.nvars != rows * cols:
            raise ValueError("variable count does not match the matrix shape")
        return cls(rows, cols, p.terms)

    def monomial_str(self, e: Exp) -> str:
        return "*".join(_var_str("x", v, p, self.cols) for v, p in enumerate(e) if p) or "1"

    def at_identity(self) -> Rational:
        """Value at ``x_ij = delta_ij``."""
        diag = {(i - 1) * self.cols + i - 1 for i in range(1, min(self.rows, self.cols) + 1)}
        return sum((c for e, c in self.terms.items() if all(v in diag for v, p in enumerate(e) if p)), 0)


def _l_generator(n: int, m: int, i: int, j: int) -> WeylElement:
    """``L(E_ij) = sum_a x_ia d_ja``."""
    out: dict[WeylMonomial, Rational] = {}
    for a in range(1, m + 1):
        xe = [0] * (n * m)
        de = [0] * (n * m)
        xe[(i - 1) * m + a - 1] = 1
        de[(j - 1) * m + a - 1] = 1
        out[(tuple(xe), tuple(de))] = 1
    return WeylElement(n, m, out)


_L_CACHE: dict[tuple[int, int, Monomial], WeylElement] = {}


def _l_monomial(n: int, m: int, mono: Monomial) -> WeylElement:
    key = (n, m, mono)
    hit = _L_CACHE.get(key)
    if hit is not None:
        return hit
    if not mono:
        res = WeylElement.scalar(n, m, 1)
    else:
        g = mono[-1]
        res = _l_monomial(n, m, mono[:-1]) * _l_generator(n, m, g[1], g[2])
    _L_CACHE[key] = res
    return res


def L_map(xi: UglnElement, m: int) -> WeylElement:
    """Image of ``xi`` under ``E_ij -> sum_a x_ia d_ja`` on n x m matrices."""
    n = xi.n
    d: dict[WeylMonomial, Rational] = {}
    for mono, c in xi.terms.items():
        for k, c2 in _l_monomial(n, m, mono).terms.items():
            _add_into(d, k, c * c2)
    return WeylElement(n, m, d)


def _pair_sum(n: int, m: int, pairs: tuple[tuple[int, int], ...]) -> dict[WeylMonomial, int]:
    """Commutative expansion of ``prod_p sum_a x_{i_p a} d_{j_p a}``."""
    cur: dict[WeylMonomial, int] = {((0,) * (n * m), (0,) * (n * m)): 1}
    for i, j in pairs:
        nxt: dict[WeylMonomial, int] = {}
        for (xe, de), c in cur.items():
            for a in range(m):
                xv, dv = (i - 1) * m + a, (j - 1) * m + a
                key = (
                    xe[:xv] + (xe[xv] + 1,) + xe[xv + 1 :],
                    de[:dv] + (de[dv] + 1,) + de[dv + 1 :],
                )
                _add_into(nxt, key, c)
        cur = nxt
    return cur


def delta_mu(mu: Partition | Sequence[int], n: int, m: int) -> WeylElement:
    """``tr(X^{(x)k} (D')^{(x)k} chi^mu / k!)`` with every x to the left of every d."""
    mu = as_partition(mu)
    k = mu.weight
    grouped: dict[tuple[tuple[int, int], ...], Fraction] = {}
    for s in all_permutations(k):
        chi = character_value(mu, s)
        if not chi:
            continue
        si = s.inverse()
        for idx in product(range(1, n + 1), repeat=k):
            pairs = tuple(sorted((idx[p], idx[si[p]]) for p in range(k)))
            grouped[pairs] = grouped.get(pairs, 0) + chi
    d: dict[WeylMonomial, Rational] = {}
    for pairs, c in grouped.items():
        if c:
            for key, c2 in _pair_sum(n, m, pairs).items():
                _add_into(d, key, Fraction(c * c2, factorial(k)))
    return WeylElement(n, m, d)


def immanant_poly(mu: Partition | Sequence[int], n: int, m: int, on: str = "X") -> MatrixPolynomial:
    """``tr(X^{(x)k} chi^mu / k!)`` with commuting entries.

    Indices run over ``1..min(n, m)``: the sum of mu-immanants of principal k x k
    submatrices with repetitions. ``on="D"`` gives the same polynomial read in the
    derivative symbols (convert with ``as_d_operator``).
    """
    if on not in ("X", "D"):
        raise ValueError("on must be 'X' or 'D'")
    mu = as_partition(mu)
    k = mu.weight
    r = min(n, m)
    terms: dict[Exp, Rational] = {}
    for s in all_permutations(k):
        chi = character_value(mu, s)
        if not chi:
            continue
        si = s.inverse()
        for idx in product(range(1, r + 1), repeat=k):
            e = [0] * (n * m)
            for p in range(k):
                e[(idx[p] - 1) * m + idx[si[p]] - 1] += 1
            _add_into(terms, tuple(e), Fraction(chi, factorial(k)))
    return MatrixPolynomial(n, m, terms)


def as_d_operator(p: RationalPolynomial, n: int, m: int) -> WeylElement:
    """Read a polynomial in ``n*m`` symbols as a constant-coefficient operator ``p(D)``."""
    z = (0,) * (n * m)
    return WeylElement(n, m, {(z, e): c for e, c in p.terms.items()})


def as_x_operator(p: RationalPolynomial, n: int, m: int) -> WeylElement:
    """Multiplication by a polynomial in the ``x`` variables."""
    z = (0,) * (n * m)
    return WeylElement(n, m, {(e, z): c for e, c in p.terms.items()})


def det_poly(n: int) -> MatrixPolynomial:
    """Determinant of the generic n x n matrix."""
    terms: dict[Exp, Rational] = {}
    for s in all_permutations(n):
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + s[i]] += 1
        terms[tuple(e)] = s.sign()
    return MatrixPolynomial(n, n, terms)


def det_x_det_d(n: int) -> WeylElement:
    return as_x_operator(det_poly(n), n, n) * as_d_operator(det_poly(n), n, n)


def apply(op: WeylElement, p: RationalPolynomial) -> MatrixPolynomial:
    """Act by a differential operator on a polynomial in the same matrix variables."""
    if p.nvars != op.nvars:
        raise ValueError("operator and polynomial live on different matrix spaces")
    terms: dict[Exp, Rational] = {}
    for (alpha, beta), c in op.terms.items():
        for e, cp in p.terms.items():
            if any(q < b for q, b in zip(e, beta)):
                continue
            f = prod((prod(range(q - b + 1, q + 1)) for q, b in zip(e, beta) if b), start=1)
            _add_into(terms, tuple(q - b + a for q, b, a in zip(e, beta, alpha)), c * cp * f)
    return MatrixPolynomial(op.n, op.m, terms)


def restrict(op: WeylElement, n: int) -> WeylElement:
    """Restrict to polynomials in the first ``n`` rows: drop terms touching later rows."""
    if n > op.n:
        raise ValueError(f"cannot restrict {op.n} rows to {n}")
    cut = n * op.m
    out = {}
    for (alpha, beta), c in op.terms.items():
        if any(alpha[cut:]) or any(beta[cut:]):
            continue
        out[(alpha[:cut], beta[:cut])] = c
    return WeylElement(n, op.m, out)


def pair_at_identity(op: WeylElement, p: RationalPolynomial) -> Rational:
    """``[op . p](1)`` at the identity matrix."""
    if op.n != op.m:
        raise ValueError("pairing at the identity needs square matrices")
    return apply(op, p).at_identity()


@dataclass
class CapelliReport:
    shape: Partition
    n: int
    m: int
    equal: bool
    lhs_terms: int
    rhs_terms: int
    first_discrepancy: dict | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "n": self.n,
            "m": self.m,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "first_discrepancy": self.first_discrepancy,
        }


def compare(lhs: WeylElement, rhs: WeylElement) -> dict | None:
    """First differing monomial in sorted order, or ``None`` if equal."""
    diff = lhs - rhs
    if diff.is_zero():
        return None
    key, _ = diff.sorted_terms()[0]
    return {
        "monomial": lhs.monomial_str(key),
        "lhs": format_rational(lhs.terms.get(key, 0)),
        "rhs": format_rational(rhs.terms.get(key, 0)),
    }


def verify_higher_capelli(mu: Partition | Sequence[int], n: int, m: int) -> CapelliReport:
    """Compare ``L(S_mu)`` with ``Delta_mu`` on n x m matrices, term by term."""
    mu = as_partition(mu)
    lhs = L_map(quantum_immanant(mu, n), m)
    rhs = delta_mu(mu, n, m)
    diff = compare(lhs, rhs)
    return CapelliReport(mu, n, m, diff is None, len(lhs.terms), len(rhs.terms), diff)


def euler_falling(k: int) -> WeylElement:
    """``x d (x d - 1) ... (x d - k + 1)`` on 1 x 1 matrices."""
    xd = WeylElement.x(1, 1, 1, 1) * WeylElement.d(1, 1, 1, 1)
    out = WeylElement.scalar(1, 1, 1)
    for j in range(k):
        out = out * (xd - j)
    return out


def monomials_up_to(nvars: int, degree: int) -> list[Exp]:
    """All exponent tuples of total degree ``<= degree``."""
    out: list[Exp] = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        for p in range(left + 1):
            prefix.append(p)
            rec(prefix, left - p)
            prefix.pop()

    rec([], degree)
    return out
