"""Group algebra of S(k) over the rationals.

Permutations compose as ``(s*t)(x) = s(t(x))``. Representation matrices use Young's
seminormal basis, which is rational and shares its diagonal with the orthogonal form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    Partition,
    StandardTableau,
    as_partition,
    dim_sym,
    hook_product,
    standard_tableaux,
)

Rational = Fraction | int


class Permutation(tuple):
    """Tuple of 0-based images. ``Permutation((1, 0, 2))`` is the transposition (1 2)."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(k))

    @classmethod
    def from_oneline(cls, images: Sequence[int]) -> "Permutation":
        """From 1-based one-line notation."""
        return cls(x - 1 for x in images)

    @classmethod
    def from_cycles(cls, k: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """From 1-based cycles, e.g. ``from_cycles(3, [(1, 2)])``."""
        img = list(range(k))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, text: str, k: int) -> "Permutation":
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        cycles = []
        for chunk in text.replace(")", "(").split("("):
            chunk = chunk.replace(",", " ").strip()
            if chunk:
                cycles.append(tuple(int(t) for t in chunk.split()))
        return cls.from_cycles(k, cycles)

    @classmethod
    def adjacent(cls, k: int, i: int) -> "Permutation":
        """The transposition ``s_i = (i, i+1)``, 1-based."""
        return cls.from_cycles(k, [(i, i + 1)])

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        """1-based image."""
        return self[x - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError("degree mismatch")
        return tuple.__new__(Permutation, (self[x] for x in other))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return tuple.__new__(Permutation, inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest element."""
        seen, out = set(), []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x + 1)
                x = self[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self) - sum(lengths))
        return Partition(tuple(sorted(lengths, reverse=True)))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def embed(self, K: int) -> "Permutation":
        """Extend to S(K) fixing the letters above ``k``."""
        return tuple.__new__(Permutation, tuple(self) + tuple(range(len(self), K)))

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, k={len(self)})"


@lru_cache(maxsize=None)
def all_permutations(k: int) -> tuple[Permutation, ...]:
    return tuple(tuple.__new__(Permutation, p) for p in permutations(range(k)))


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


def format_rational(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GroupAlgebraElement:
    """Finitely supported rational combination of permutations of a fixed degree."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Mapping[Permutation, Rational] | None = None):
        self.k = k
        self.coeffs: dict[Permutation, Rational] = _clean(dict(coeffs or {}))
        for s in self.coeffs:
            if len(s) != k:
                raise ValueError(f"permutation {s!r} not of degree {k}")

    @classmethod
    def identity(cls, k: int) -> "GroupAlgebraElement":
        return cls(k, {Permutation.identity(k): 1})

    @classmethod
    def of(cls, s: Permutation, c: Rational = 1) -> "GroupAlgebraElement":
        return cls(len(s), {s: c})

    def __getitem__(self, s: Permutation) -> Rational:
        return self.coeffs.get(s, 0)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.k != other.k:
            raise ValueError(f"degree mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        d = dict(self.coeffs)
        for s, c in other.coeffs.items():
            d[s] = d.get(s, 0) + c
        return GroupAlgebraElement(self.k, d)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.k, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            self._check(other)
            d: dict[Permutation, Rational] = {}
            for s, a in self.coeffs.items():
                for t, b in other.coeffs.items():
                    st = s * t
                    d[st] = d.get(st, 0) + a * b
            return GroupAlgebraElement(self.k, d)
        return GroupAlgebraElement(self.k, {s: c * other for s, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        return GroupAlgebraElement(self.k, {s: scalar * c for s, c in self.coeffs.items()})

    def __truediv__(self, scalar):
        return GroupAlgebraElement(self.k, {s: Fraction(c) / scalar for s, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupAlgebraElement):
            return self.k == other.k and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.coeffs

    def embed(self, K: int) -> "GroupAlgebraElement":
        if K < self.k:
            raise ValueError(f"cannot embed S({self.k}) into S({K})")
        return GroupAlgebraElement(K, {s.embed(K): c for s, c in self.coeffs.items()})

    def conjugate(self, t: Permutation) -> "GroupAlgebraElement":
        """``t * self * t^{-1}``."""
        ti = t.inverse()
        return GroupAlgebraElement(self.k, {t * s * ti: c for s, c in self.coeffs.items()})

    def is_central(self) -> bool:
        return all(self.conjugate(Permutation.adjacent(self.k, i)) == self for i in range(1, self.k))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: tuple(kv[0]))
        return " + ".join(f"{format_rational(c)}*{s}" for s, c in items)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(k={self.k}, {self})"


def algebra_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


# --- representations -------------------------------------------------------

Matrix = tuple[tuple[Fraction, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][l] * b[l][j] for l in range(n)), Fraction(0)) for j in range(n)) for i in range(n)
    )


def _axial(t: StandardTableau, i: int) -> int:
    cv = t.content_vector
    return cv[i] - cv[i - 1]


@lru_cache(maxsize=None)
def _generator_matrices(mu: Partition) -> tuple[Matrix, ...]:
    """Seminormal matrices of ``s_1, ..., s_{k-1}`` in the basis ``standard_tableaux(mu)``."""
    tabs = standard_tableaux(mu)
    index = {t: a for a, t in enumerate(tabs)}
    d, k = len(tabs), mu.weight
    gens = []
    for i in range(1, k):
        m = [[Fraction(0)] * d for _ in range(d)]
        for t in tabs:
            a = index[t]
            r = _axial(t, i)
            m[a][a] = Fraction(1, r)
            swapped = t.swap(i)
            if swapped is not None:
                b = index[swapped]
                # the tableau with i+1 north-east of i (r > 0) comes first
                m[b][a] = Fraction(r * r - 1, r * r) if r > 0 else Fraction(1)
        gens.append(tuple(tuple(row) for row in m))
    return tuple(gens)


@lru_cache(maxsize=None)
def _representation(mu: Partition) -> dict[Permutation, Matrix]:
    d = dim_sym(mu)
    k = mu.weight
    ident = tuple(tuple(Fraction(int(a == b)) for b in range(d)) for a in range(d))
    gens = _generator_matrices(mu)
    rep = {Permutation.identity(k): ident}
    frontier = [Permutation.identity(k)]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, k):
                s = Permutation.adjacent(k, i) * t
                if s not in rep:
                    rep[s] = _matmul(gens[i - 1], rep[t])
                    nxt.append(s)
        frontier = nxt
    return rep


def seminormal_matrix(mu: Partition | Sequence[int], s: Permutation) -> Matrix:
    """Matrix of ``s`` in the seminormal basis indexed by ``standard_tableaux(mu)``."""
    mu = as_partition(mu)
    if len(s) != mu.weight:
        raise ValueError(f"degree of {s!r} does not match |{mu}|")
    return _representation(mu)[s]


def represent(mu: Partition | Sequence[int], a: GroupAlgebraElement) -> Matrix:
    """Linear extension of ``seminormal_matrix`` to the group algebra."""
    mu = as_partition(mu)
    d = dim_sym(mu)
    out = [[Fraction(0)] * d for _ in range(d)]
    for s, c in a:
        m = seminormal_matrix(mu, s)
        for i in range(d):
            for j in range(d):
                if m[i][j]:
                    out[i][j] += c * m[i][j]
    return tuple(tuple(r) for r in out)


def diag_coeff(t: StandardTableau, s: Permutation) -> Fraction:
    """``(s xi_T, xi_T)``: the (T, T) entry of the representation matrix."""
    tabs = standard_tableaux(t.shape)
    a = tabs.index(t)
    return seminormal_matrix(t.shape, s)[a][a]


@lru_cache(maxsize=None)
def _character(mu: Partition, rho: Partition) -> int:
    """Murnaghan-Nakayama on beta-sets."""
    if rho.weight == 0:
        return 1
    r = rho[0]
    rest = Partition(rho.parts[1:])
    ell = len(mu)
    beta = [mu[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beads:
            sign = (-1) ** sum(1 for c in beads if b - r < c < b)
            new = sorted((beads - {b}) | {b - r}, reverse=True)
            lam = Partition(tuple(x - (ell - 1 - i) for i, x in enumerate(new)))
            total += sign * _character(lam, rest)
    return total


def character_value(mu: Partition | Sequence[int], s: Permutation) -> int:
    mu = as_partition(mu)
    if len(s) != mu.weight:
        raise ValueError(f"degree of {s!r} does not match |{mu}|")
    return _character(mu, s.cycle_type())


def character_element(mu: Partition | Sequence[int]) -> GroupAlgebraElement:
    """``sum_s chi^mu(s) s``."""
    mu = as_partition(mu)
    k = mu.weight
    return GroupAlgebraElement(k, {s: character_value(mu, s) for s in all_permutations(k)})


def antisymmetrizer(k: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(k, {s: s.sign() for s in all_permutations(k)})


def _subgroup_sum(k: int, blocks: Iterable[Sequence[int]], signed: bool) -> GroupAlgebraElement:
    blocks = [tuple(b) for b in blocks]
    coeffs: dict[Permutation, Rational] = {}
    for s in all_permutations(k):
        if all({s(x) for x in b} == set(b) for b in blocks):
            coeffs[s] = s.sign() if signed else 1
    return GroupAlgebraElement(k, coeffs)


@lru_cache(maxsize=None)
def _young_symmetrizer(mu: Partition):
    k = mu.weight
    rows = StandardTableau.row_tableau(mu).rows
    cols = [tuple(r[j] for r in rows if len(r) > j) for j in range(mu[0])] if k else []
    p = _subgroup_sum(k, rows, signed=False)
    q = _subgroup_sum(k, cols, signed=True)
    return p, q, p * q


def young_symmetrizer(mu: Partition | Sequence[int]):
    """Row symmetrizer P, column antisymmetrizer Q and P*Q of the row tableau."""
    return _young_symmetrizer(as_partition(mu))


def R_element(k: int, i: int, u: Rational) -> GroupAlgebraElement:
    """``R_i(u) = 1 + u s_i``."""
    return GroupAlgebraElement(k, {Permutation.identity(k): 1, Permutation.adjacent(k, i): u})


def R_tableau(t: StandardTableau, i: int) -> GroupAlgebraElement:
    """``R_i(T) = 1 - r s_i`` with ``r = c_T(i+1) - c_T(i)``."""
    return R_element(t.size, i, -_axial(t, i))


@lru_cache(maxsize=None)
def _projection(t: StandardTableau) -> GroupAlgebraElement:
    mu = t.shape
    k = mu.weight
    if k == 0:
        return GroupAlgebraElement.identity(0)
    root = StandardTableau.row_tableau(mu)
    if t == root:
        p, _, pq = young_symmetrizer(mu)
        mu_fact = prod(factorial(x) for x in mu)
        return (pq * p) / (mu_fact * hook_product(mu))
    parent, step = _walk_from_row_tableau(mu)[t]
    r = _axial(parent, step)
    R = R_tableau(parent, step)
    return (R * _projection(parent) * R) / (r * r - 1)


@lru_cache(maxsize=None)
def _walk_from_row_tableau(mu: Partition) -> dict[StandardTableau, tuple[StandardTableau, int]]:
    """Breadth-first tree over standard tableaux linked by ``s_i``; maps child to (parent, i)."""
    root = StandardTableau.row_tableau(mu)
    tree: dict[StandardTableau, tuple[StandardTableau, int]] = {}
    seen, frontier = {root}, [root]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, mu.weight):
                u = t.swap(i)
                if u is not None and u not in seen:
                    seen.add(u)
                    tree[u] = (t, i)
                    nxt.append(u)
        frontier = nxt
    return tree


def projection(t: StandardTableau) -> GroupAlgebraElement:
    """The primitive idempotent ``P_T``, built from the row tableau by conjugation steps."""
    return _projection(t)


def projection_from_matrix_units(t: StandardTableau) -> GroupAlgebraElement:
    """``P_T = dim/k! * sum_s (s xi_T, xi_T) s``; an independent route to ``projection``."""
    k = t.size
    d = dim_sym(t.shape)
    return GroupAlgebraElement(k, {s: Fraction(d, factorial(k)) * diag_coeff(t, s) for s in all_permutations(k)})


def coset_representatives(k: int, K: int) -> list[Permutation]:
    """Representatives of the left cosets ``t S(k)`` in ``S(K)``, increasing on ``1..k``."""
    return [t for t in all_permutations(K) if all(t[a] < t[a + 1] for a in range(k - 1))]


def induced_character_element(mu: Partition | Sequence[int], K: int) -> GroupAlgebraElement:
    """``sum over t in S(K)/S(k) of t chi^mu t^{-1}``."""
    mu = as_partition(mu)
    k = mu.weight
    if k > K:
        raise ValueError(f"|mu|={k} exceeds K={K}")
    chi = character_element(mu).embed(K)
    total = GroupAlgebraElement(K)
    for t in coset_representatives(k, K):
        total = total + chi.conjugate(t)
    return total


def skew_character_value(lam: Partition, mu: Partition, s: Permutation) -> Fraction:
    """Character of the skew module ``lam/mu`` at ``s`` in ``S(|lam|-|mu|)``.

    Read off the restriction of ``chi^lam`` to ``S(k) x S(K-k)`` by branching.
    """
    k, K = mu.weight, lam.weight
    if len(s) != K - k:
        raise ValueError("degree mismatch")
    total = 0
    for h in all_permutations(k):
        hs = Permutation(tuple(h) + tuple(x + k for x in s))
        total += character_value(lam, hs) * character_value(mu, h)
    return Fraction(total, factorial(k))


def J_generator(mu: Partition | Sequence[int], i: int) -> GroupAlgebraElement:
    """Generators of the left annihilator of the Young symmetrizer's right ideal."""
    mu = as_partition(mu)
    k = mu.weight
    marks = [sum(mu.parts[: j + 1]) for j in range(len(mu))]
    if i not in marks:
        return R_element(k, i, -1)
    j = marks.index(i)
    start = marks[j - 1] if j else 0
    out = GroupAlgebraElement.identity(k)
    for a in range(1, mu[j] + 1):
        if start + a < k:
            out = out * R_element(k, start + a, a)
    return out
