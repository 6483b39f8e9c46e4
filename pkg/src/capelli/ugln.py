"""The universal enveloping algebra U(gl(n)) in PBW normal form, and quantum immanants.

A generator ``E_ij`` is stored as ``(cls, i, j)`` where ``cls`` is 0 for strictly lower
(``i > j``), 1 for diagonal and 2 for strictly upper generators; a PBW monomial is a
non-decreasing tuple of generators. With this order a central element acts on a highest
weight vector through its diagonal-only monomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import prod
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    Partition,
    StandardTableau,
    as_partition,
    content_power,
    dim_sym,
    hook_product,
    standard_tableaux,
)
from .polynomial import RationalPolynomial
from .symgroup import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    diag_coeff,
    format_rational,
    projection,
    young_symmetrizer,
)

Rational = Fraction | int
Generator = tuple[int, int, int]
Monomial = tuple[Generator, ...]


def gen(i: int, j: int) -> Generator:
    return (0 if i > j else 1 if i == j else 2, i, j)


def _add_into(d: dict, key, c) -> None:
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def _commutator(a: Generator, b: Generator) -> dict[Generator, int]:
    """``[E_ij, E_kl] = delta_jk E_il - delta_li E_kj``."""
    _, i, j = a
    _, k, l = b
    out: dict[Generator, int] = {}
    if j == k:
        _add_into(out, gen(i, l), 1)
    if l == i:
        _add_into(out, gen(k, j), -1)
    return out


_MONO_GEN: dict[tuple[Monomial, Generator], dict[Monomial, Rational]] = {}


def _mono_times_gen(m: Monomial, g: Generator) -> dict[Monomial, Rational]:
    key = (m, g)
    hit = _MONO_GEN.get(key)
    if hit is not None:
        return hit
    if not m or m[-1] <= g:
        res: dict[Monomial, Rational] = {m + (g,): 1}
    else:
        # m g = prefix (g last + [last, g])
        last, prefix = m[-1], m[:-1]
        res = {}
        for mono, c in _mono_times_gen(prefix, g).items():
            for mono2, c2 in _mono_times_gen(mono, last).items():
                _add_into(res, mono2, c * c2)
        for h, c in _commutator(last, g).items():
            for mono2, c2 in _mono_times_gen(prefix, h).items():
                _add_into(res, mono2, c * c2)
    _MONO_GEN[key] = res
    return res


def _mono_times_mono(a: Monomial, b: Monomial) -> dict[Monomial, Rational]:
    cur: dict[Monomial, Rational] = {a: 1}
    for g in b:
        nxt: dict[Monomial, Rational] = {}
        for m, c in cur.items():
            for m2, c2 in _mono_times_gen(m, g).items():
                _add_into(nxt, m2, c * c2)
        cur = nxt
    return cur


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts, idx = [], 0
    while idx < len(m):
        g = m[idx]
        p = 1
        while idx + p < len(m) and m[idx + p] == g:
            p += 1
        parts.append(f"E[{g[1]},{g[2]}]" + (f"^{p}" if p > 1 else ""))
        idx += p
    return "*".join(parts)


def _mono_sort_key(m: Monomial):
    return (-len(m), m)


class UglnElement:
    """Element of U(gl(n)) as ``{PBW monomial: coefficient}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Rational] | None = None):
        self.n = n
        self.terms: dict[Monomial, Rational] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "UglnElement":
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"E[{i},{j}] is not a generator of gl({n})")
        return cls(n, {(gen(i, j),): 1})

    @classmethod
    def scalar(cls, n: int, c: Rational) -> "UglnElement":
        return cls(n, {(): c})

    def _coerce(self, other) -> "UglnElement":
        if isinstance(other, UglnElement):
            if other.n != self.n:
                raise ValueError(f"gl({self.n}) vs gl({other.n})")
            return other
        return UglnElement.scalar(self.n, other)

    def __add__(self, other) -> "UglnElement":
        other = self._coerce(other)
        d = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(d, m, c)
        return UglnElement(self.n, d)

    __radd__ = __add__

    def __neg__(self) -> "UglnElement":
        return UglnElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "UglnElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UglnElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UglnElement":
        if not isinstance(other, UglnElement):
            return UglnElement(self.n, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        d: dict[Monomial, Rational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for m, c in _mono_times_mono(m1, m2).items():
                    _add_into(d, m, c1 * c2 * c)
        return UglnElement(self.n, d)

    def __rmul__(self, scalar) -> "UglnElement":
        return UglnElement(self.n, {m: scalar * c for m, c in self.terms.items()})

    def __truediv__(self, scalar) -> "UglnElement":
        return UglnElement(self.n, {m: Fraction(c) / scalar for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, UglnElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == UglnElement.scalar(self.n, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def top_degree_part(self) -> "UglnElement":
        d = self.degree
        return UglnElement(self.n, {m: c for m, c in self.terms.items() if len(m) == d})

    def commutator(self, other: "UglnElement") -> "UglnElement":
        return self * other - other * self

    def sorted_terms(self) -> list[tuple[Monomial, Rational]]:
        return sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {monomial_str(m)}" for m, c in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UglnElement(n={self.n}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"monomial": monomial_str(m), "coeff": format_rational(c)} for m, c in self.sorted_terms()],
        }


def pbw_normalize(n: int, raw: Iterable[tuple[Sequence[tuple[int, int]], Rational]]) -> UglnElement:
    """Normal form of ``sum coeff * E_{w1} E_{w2} ...`` given as ``(word, coeff)`` pairs."""
    d: dict[Monomial, Rational] = {}
    for word, coeff in raw:
        cur: dict[Monomial, Rational] = {(): coeff}
        for i, j in word:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"E[{i},{j}] is not a generator of gl({n})")
            g = gen(i, j)
            nxt: dict[Monomial, Rational] = {}
            for m, c in cur.items():
                for m2, c2 in _mono_times_gen(m, g).items():
                    _add_into(nxt, m2, c * c2)
            cur = nxt
        for m, c in cur.items():
            _add_into(d, m, c)
    return UglnElement(n, d)


def cartan_sum(n: int) -> UglnElement:
    """``sum_i E_ii``."""
    return UglnElement(n, {(gen(i, i),): 1 for i in range(1, n + 1)})


# --- matrices with entries in U(gl(n)) --------------------------------------

Index = tuple[int, ...]


def act_on_index(s: Permutation, idx: Index) -> Index:
    """Place permutation: the letter in position ``p`` moves to position ``s(p)``."""
    out = [0] * len(idx)
    for p, x in enumerate(idx):
        out[s[p]] = x
    return tuple(out)


class AlgebraTensorMatrix:
    """Element of ``U(gl(n)) (x) M(n)^{(x)k}`` as ``{(row multi-index, column multi-index): entry}``."""

    __slots__ = ("n", "k", "entries")

    def __init__(self, n: int, k: int, entries: Mapping[tuple[Index, Index], UglnElement] | None = None):
        self.n, self.k = n, k
        self.entries = {key: v for key, v in (entries or {}).items() if not v.is_zero()}

    def __getitem__(self, key: tuple[Index, Index]) -> UglnElement:
        return self.entries.get(key) or UglnElement(self.n)

    def indices(self) -> list[Index]:
        return list(product(range(1, self.n + 1), repeat=self.k))

    def tensor(self, other: "AlgebraTensorMatrix") -> "AlgebraTensorMatrix":
        out = {}
        for (i1, j1), a in self.entries.items():
            for (i2, j2), b in other.entries.items():
                out[(i1 + i2, j1 + j2)] = a * b
        return AlgebraTensorMatrix(self.n, self.k + other.k, out)

    def __add__(self, other: "AlgebraTensorMatrix") -> "AlgebraTensorMatrix":
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out[key] + v if key in out else v
        return AlgebraTensorMatrix(self.n, self.k, out)

    def __sub__(self, other: "AlgebraTensorMatrix") -> "AlgebraTensorMatrix":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "AlgebraTensorMatrix":
        return AlgebraTensorMatrix(self.n, self.k, {key: v * c for key, v in self.entries.items()})

    def right_act(self, a: GroupAlgebraElement) -> "AlgebraTensorMatrix":
        """``A * a`` with ``a`` acting on the tensor factor by place permutations."""
        self._check(a)
        out: dict[tuple[Index, Index], UglnElement] = {}
        for s, c in a:
            si = s.inverse()
            for (i, j), v in self.entries.items():
                # (A s)_{I,J} = A_{I, s.J}
                key = (i, act_on_index(si, j))
                out[key] = out[key] + v * c if key in out else v * c
        return AlgebraTensorMatrix(self.n, self.k, out)

    def left_act(self, a: GroupAlgebraElement) -> "AlgebraTensorMatrix":
        """``a * A``."""
        self._check(a)
        out: dict[tuple[Index, Index], UglnElement] = {}
        for s, c in a:
            for (i, j), v in self.entries.items():
                # (s A)_{I,J} = A_{s^{-1}.I, J}
                key = (act_on_index(s, i), j)
                out[key] = out[key] + v * c if key in out else v * c
        return AlgebraTensorMatrix(self.n, self.k, out)

    def _check(self, a: GroupAlgebraElement) -> None:
        if a.k != self.k:
            raise ValueError(f"group algebra degree {a.k} does not match k={self.k}")

    def trace(self) -> UglnElement:
        total = UglnElement(self.n)
        for (i, j), v in self.entries.items():
            if i == j:
                total = total + v
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraTensorMatrix):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]


def e_matrix(n: int, u: Rational = 0) -> AlgebraTensorMatrix:
    """``E(u) = [E_ij - u delta_ij]``."""
    entries = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entries[((i,), (j,))] = UglnElement(n, {(gen(i, j),): 1, (): -u if i == j else 0})
    return AlgebraTensorMatrix(n, 1, entries)


def tensor_power(factors: Sequence[AlgebraTensorMatrix]) -> AlgebraTensorMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = out.tensor(f)
    return out


def r_matrix(u: Rational) -> GroupAlgebraElement:
    """``R(u) = 1 + u (12)`` in the group algebra of S(2)."""
    return GroupAlgebraElement(2, {Permutation.identity(2): 1, Permutation((1, 0)): u})


def rtt_sides(n: int, u: Rational, v: Rational) -> tuple[AlgebraTensorMatrix, AlgebraTensorMatrix]:
    """``R(u-v) * E(u) (x) E(v)`` and ``E(v) (x) E(u) * R(u-v)``, with ``R`` the swap form."""
    eu, ev = e_matrix(n, u), e_matrix(n, v)
    r = r_matrix(u - v)
    return eu.tensor(ev).left_act(r), ev.tensor(eu).right_act(r)


def e_tableau(t: StandardTableau, n: int) -> AlgebraTensorMatrix:
    """``E(T) = E (x) E(c_T(2)) (x) ... (x) E(c_T(k))``."""
    return tensor_power([e_matrix(n, c) for c in t.content_vector])


def e_shape(mu: Partition | Sequence[int], n: int) -> AlgebraTensorMatrix:
    """``E(mu) = sum_T E(T) P_T``."""
    mu = as_partition(mu)
    tabs = standard_tableaux(mu)
    out = e_tableau(tabs[0], n).right_act(projection(tabs[0]))
    for t in tabs[1:]:
        out = out + e_tableau(t, n).right_act(projection(t))
    return out


def _word_product(n: int, word: tuple[tuple[Generator, Rational], ...]) -> dict[Monomial, Rational]:
    """Expand ``prod (E_g - shift)`` in PBW form."""
    cur: dict[Monomial, Rational] = {(): 1}
    for g, shift in word:
        nxt: dict[Monomial, Rational] = {}
        for m, c in cur.items():
            for m2, c2 in _mono_times_gen(m, g).items():
                _add_into(nxt, m2, c * c2)
            if shift:
                _add_into(nxt, m, -shift * c)
        cur = nxt
    return cur


def _collect_words(n: int, words: Mapping[tuple, Rational]) -> UglnElement:
    d: dict[Monomial, Rational] = {}
    for word, coeff in words.items():
        if coeff:
            for m, c in _word_product(n, word).items():
                _add_into(d, m, coeff * c)
    return UglnElement(n, d)


def tensor_trace(factors: Sequence[AlgebraTensorMatrix], a: GroupAlgebraElement) -> UglnElement:
    """``tr(F_1 (x) ... (x) F_k * a)``, summing ``prod_p F_p[i_p, i_{s^{-1}(p)}]`` over indices."""
    k = len(factors)
    if a.k != k:
        raise ValueError(f"group algebra degree {a.k} does not match {k} factors")
    if any(f.k != 1 for f in factors):
        raise ValueError("factors must be single matrices")
    n = factors[0].n
    if any(f.n != n for f in factors):
        raise ValueError("factors over different gl(n)")
    total = UglnElement(n)
    for s, c in a:
        si = s.inverse()
        for idx in product(range(1, n + 1), repeat=k):
            term = UglnElement.scalar(n, c)
            for p in range(k):
                term = term * factors[p][((idx[p],), (idx[si[p]],))]
                if term.is_zero():
                    break
            total = total + term
    return total


def capelli_element(n: int) -> UglnElement:
    """Row-determinant ``sum_s sgn(s) E_{1,s(1)} (E_{2,s(2)} + delta) ... (E_{n,s(n)} + (n-1) delta)``."""
    words: dict[tuple, Rational] = {}
    for s in all_permutations(n):
        word = tuple((gen(p + 1, s[p] + 1), -p if s[p] == p else 0) for p in range(n))
        words[word] = words.get(word, 0) + s.sign()
    return _collect_words(n, words)


def capelli_element_column(n: int) -> UglnElement:
    """Column form ``sum_s sgn(s) (E_{s(1),1} + (n-1) delta) ... E_{s(n),n}``."""
    words: dict[tuple, Rational] = {}
    for s in all_permutations(n):
        word = tuple((gen(s[p] + 1, p + 1), -(n - 1 - p) if s[p] == p else 0) for p in range(n))
        words[word] = words.get(word, 0) + s.sign()
    return _collect_words(n, words)


def _stabilizer_order(idx: Sequence[int]) -> int:
    out, run = 1, 1
    for a, b in zip(idx, idx[1:]):
        run = run + 1 if a == b else 1
        out *= run
    return out


@lru_cache(maxsize=None)
def _quantum_immanant(mu: Partition, n: int) -> UglnElement:
    k = mu.weight
    tabs = standard_tableaux(mu)
    perms = all_permutations(k)
    psi = {t: {s: diag_coeff(t, s) for s in perms} for t in tabs}
    words: dict[tuple, Rational] = {}
    for idx in combinations_with_replacement(range(1, n + 1), k):
        weight = Fraction(1, _stabilizer_order(idx))
        for t in tabs:
            cv = t.content_vector
            for s in perms:
                c = psi[t][s]
                if not c:
                    continue
                word = tuple(
                    (gen(idx[p], idx[s[p]]), cv[p] if idx[p] == idx[s[p]] else 0) for p in range(k)
                )
                words[word] = words.get(word, 0) + weight * c
    return _collect_words(n, words)


def quantum_immanant(mu: Partition | Sequence[int], n: int, normalized: bool = False) -> UglnElement:
    """The quantum immanant ``S_mu`` in U(gl(n)).

    Summed over weakly increasing index sequences with stabilizer weights ``1/iota!``
    and the diagonal matrix coefficients of every standard tableau. With ``normalized``
    the result is divided by ``prod over cells (n + content)``.
    """
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than n={n} parts")
    out = _quantum_immanant(mu, n)
    if normalized:
        out = out / content_power(n, mu)
    return out


def quantum_immanant_via_trace(mu: Partition | Sequence[int], n: int, t: StandardTableau | None = None) -> UglnElement:
    """``tr(E(T) P_T)`` for a chosen standard tableau (default: the row tableau)."""
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than n={n} parts")
    t = t or StandardTableau.row_tableau(mu)
    return tensor_trace([e_matrix(n, c) for c in t.content_vector], projection(t))


def quantum_immanant_via_shape(mu: Partition | Sequence[int], n: int) -> UglnElement:
    """``tr E(mu) / dim(mu)``."""
    mu = as_partition(mu)
    return e_shape(mu, n).trace() / dim_sym(mu)


def immanant_via_symmetrizer(mu: Partition | Sequence[int], n: int) -> UglnElement:
    """``H(mu)^{-1} tr(E(T^r) P Q)`` with the Young symmetrizer of the row tableau."""
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than n={n} parts")
    t = StandardTableau.row_tableau(mu)
    _, _, pq = young_symmetrizer(mu)
    return tensor_trace([e_matrix(n, c) for c in t.content_vector], pq) / hook_product(mu)


def is_central(xi: UglnElement) -> bool:
    n = xi.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = UglnElement.generator(n, i, j)
            if not (xi * e - e * xi).is_zero():
                return False
    return True


class NotCentralError(ValueError):
    pass


def hc_eigenvalue(xi: UglnElement, lam: Partition | Sequence[Rational], check: bool = True) -> Rational:
    """Eigenvalue of a central element on the irreducible module of highest weight ``lam``.

    Only monomials made of diagonal generators survive on the highest vector; ``lam`` is
    padded with zeros to length ``n``. Any rational weight is accepted.
    """
    n = xi.n
    pt = list(lam.parts) if isinstance(lam, Partition) else list(lam)
    if len(pt) > n:
        raise ValueError(f"weight {pt} longer than n={n}")
    pt += [0] * (n - len(pt))
    if check and not is_central(xi):
        raise NotCentralError("element is not central")
    total: Rational = 0
    for m, c in xi.terms.items():
        if all(g[0] == 1 for g in m):
            total += c * prod((pt[g[1] - 1] for g in m), start=1)
    return total


def hc_polynomial(xi: UglnElement) -> RationalPolynomial:
    """The eigenvalue as a polynomial in the highest weight coordinates."""
    n = xi.n
    terms: dict[tuple[int, ...], Rational] = {}
    for m, c in xi.terms.items():
        if all(g[0] == 1 for g in m):
            e = [0] * n
            for g in m:
                e[g[1] - 1] += 1
            _add_into(terms, tuple(e), c)
    return RationalPolynomial(n, terms)


def commutative_image(xi: UglnElement) -> RationalPolynomial:
    """Read PBW monomials as commutative monomials in ``x_ij`` (variable ``(i-1) n + j``)."""
    n = xi.n
    terms: dict[tuple[int, ...], Rational] = {}
    for m, c in xi.terms.items():
        e = [0] * (n * n)
        for g in m:
            e[(g[1] - 1) * n + g[2] - 1] += 1
        _add_into(terms, tuple(e), c)
    return RationalPolynomial(n * n, terms)


def random_element(n: int, degree: int, nterms: int, rng) -> UglnElement:
    """Random combination of words, for homomorphism tests."""
    raw = []
    for _ in range(nterms):
        d = rng.randint(0, degree)
        word = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(d)]
        raw.append((word, Fraction(rng.randint(-3, 3), rng.randint(1, 2))))
    return pbw_normalize(n, raw)
