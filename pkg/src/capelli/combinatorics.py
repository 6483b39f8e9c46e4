"""Partitions, Young tableaux, hooks, contents and dimension counts.

Cells are 1-based ``(row, column)`` pairs; the content of cell ``(i, j)`` is ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts. Trailing zeros are stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must weakly decrease: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the canonical text form, e.g. ``"2,1"``; ``"-"`` or ``""`` is the empty partition."""
        text = text.strip()
        if text in ("", "-", "()"):
            return cls(())
        try:
            parts = tuple(int(t) for t in text.strip("()").split(","))
        except ValueError as exc:
            raise ValueError(f"invalid partition string: {text!r}") from exc
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"partition {self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def contains(self, other: "Partition") -> bool:
        """``other ⊂ self`` in the diagram sense."""
        return len(other) <= len(self) and all(a <= b for a, b in zip(other.parts, self.parts))

    def hook(self, cell: tuple[int, int]) -> int:
        i, j = cell
        arm = self.parts[i - 1] - j
        leg = self.conjugate().parts[j - 1] - i
        return arm + leg + 1

    def addable(self) -> list["Partition"]:
        """Partitions obtained by adding one cell."""
        out = []
        for i in range(len(self.parts) + 1):
            if i == 0 or self.parts[i - 1] > self.part(i + 1):
                parts = list(self.parts) + [0]
                parts[i] += 1
                out.append(Partition(tuple(parts)))
        return out

    def removable(self) -> list["Partition"]:
        out = []
        for i in range(len(self.parts)):
            if self.parts[i] > self.part(i + 2):
                parts = list(self.parts)
                parts[i] -= 1
                out.append(Partition(tuple(parts)))
        return out


def as_partition(mu: Partition | Sequence[int] | str) -> Partition:
    if isinstance(mu, Partition):
        return mu
    if isinstance(mu, str):
        return Partition.parse(mu)
    return Partition(tuple(mu))


def partitions(k: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order."""
    out: list[Partition] = []

    def rec(remaining: int, largest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(k, k, [])
    return out


def partitions_up_to(k: int, max_length: int | None = None) -> list[Partition]:
    """Partitions of weight ``0..k``, by increasing weight."""
    return [mu for w in range(k + 1) for mu in partitions(w, max_length)]


def cells_with_contents(mu: Partition | Sequence[int]) -> list[tuple[tuple[int, int], int]]:
    mu = as_partition(mu)
    return [((i, j), j - i) for i, j in mu.cells()]


def hook_product(mu: Partition | Sequence[int]) -> int:
    mu = as_partition(mu)
    return prod(mu.hook(c) for c in mu.cells())


def _dim_sym_vandermonde(mu: Partition, n: int) -> Fraction:
    # |mu|! prod_{i<j}(mu_i - mu_j - i + j) / prod_i (mu_i + n - i)!
    lam = mu.padded(n)
    num = prod(lam[i] - lam[j] - i + j for i in range(n) for j in range(i + 1, n))
    den = prod(factorial(lam[i] + n - 1 - i) for i in range(n))
    return Fraction(factorial(mu.weight) * num, den)


def dim_sym(mu: Partition | Sequence[int]) -> int:
    """Dimension of the irreducible S(|mu|)-module, cross-checked by the Vandermonde form."""
    mu = as_partition(mu)
    d, r = divmod(factorial(mu.weight), hook_product(mu))
    assert r == 0
    check = _dim_sym_vandermonde(mu, max(len(mu), 1))
    if check != d:
        raise ArithmeticError(f"dimension formulas disagree for {mu}: {d} != {check}")
    return d


def content_power(a: Fraction | int, mu: Partition | Sequence[int]) -> Fraction | int:
    """``prod over cells of (a + content)``."""
    return prod((a + c for _, c in cells_with_contents(mu)), start=1)


def dim_gl(n: int, mu: Partition | Sequence[int]) -> int:
    """Dimension of the irreducible GL(n)-module with highest weight ``mu``.

    Computed by the hook-content ratio and checked against the Weyl product formula.
    """
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"partition {mu} has more than n={n} parts")
    d, r = divmod(content_power(n, mu), hook_product(mu))
    assert r == 0
    lam = mu.padded(n)
    weyl = Fraction(
        prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n)),
        prod(j - i for i in range(n) for j in range(i + 1, n)),
    )
    if weyl != d:
        raise ArithmeticError(f"GL({n}) dimension formulas disagree for {mu}: {d} != {weyl}")
    return d


@lru_cache(maxsize=None)
def _skew_dim(lam: Partition, mu: Partition) -> int:
    if lam == mu:
        return 1
    if not lam.contains(mu) or lam.weight <= mu.weight:
        return 0
    return sum(_skew_dim(lam, nu) for nu in mu.addable() if lam.contains(nu))


def skew_dim(lam: Partition | Sequence[int], mu: Partition | Sequence[int]) -> int:
    """Number of paths from ``mu`` up to ``lam`` in the Young graph."""
    return _skew_dim(as_partition(lam), as_partition(mu))


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard filling by ``1..k``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        k = shape.weight
        if sorted(x for r in rows for x in r) != list(range(1, k + 1)):
            raise ValueError(f"entries are not a bijection onto 1..{k}: {rows}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row not increasing: {rows}")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError(f"column not increasing: {rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cell_of(self, letter: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                if x == letter:
                    return (i, j)
        raise KeyError(letter)

    @property
    def content_vector(self) -> tuple[int, ...]:
        cv = [0] * self.size
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                cv[x - 1] = j - i
        return tuple(cv)

    def swap(self, i: int) -> "StandardTableau | None":
        """Exchange letters ``i`` and ``i+1``; ``None`` if the result is not standard."""
        rows = tuple(tuple(i + 1 if x == i else i if x == i + 1 else x for x in r) for r in self.rows)
        try:
            return StandardTableau(rows)
        except ValueError:
            return None

    @classmethod
    def row_tableau(cls, mu: Partition | Sequence[int]) -> "StandardTableau":
        mu = as_partition(mu)
        rows, start = [], 1
        for p in mu:
            rows.append(tuple(range(start, start + p)))
            start += p
        return cls(tuple(rows))

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


@lru_cache(maxsize=None)
def _standard_tableaux(mu: Partition) -> tuple[StandardTableau, ...]:
    k = mu.weight
    if k == 0:
        return (StandardTableau(()),)
    out = []
    # the largest letter sits in a removable corner
    for nu in mu.removable():
        row = next(i for i in range(len(mu)) if mu.part(i + 1) != nu.part(i + 1))
        for t in _standard_tableaux(nu):
            rows = [list(r) for r in t.rows] + [[]] * (len(mu) - len(t.rows))
            rows = [list(r) for r in rows]
            rows[row].append(k)
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
    out.sort(key=lambda t: t.rows)
    return tuple(out)


def standard_tableaux(mu: Partition | Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of shape ``mu``, sorted lexicographically by rows."""
    return list(_standard_tableaux(as_partition(mu)))


@dataclass(frozen=True)
class ReverseTableau:
    """Filling by ``1..n``, weakly decreasing along rows, strictly decreasing down columns."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def entry(self, cell: tuple[int, int]) -> int:
        return self.rows[cell[0] - 1][cell[1] - 1]

    def is_valid(self, n: int) -> bool:
        return is_reverse_tableau(self.rows, n)


def is_reverse_tableau(rows: Sequence[Sequence[int]], n: int) -> bool:
    if any(not 1 <= x <= n for r in rows for x in r):
        return False
    if any(a < b for r in rows for a, b in zip(r, r[1:])):
        return False
    return all(a > b for upper, lower in zip(rows, rows[1:]) for a, b in zip(upper, lower))


def reverse_tableaux(mu: Partition | Sequence[int], n: int) -> list[ReverseTableau]:
    """Enumerate RTab(mu, n) row by row."""
    mu = as_partition(mu)
    if len(mu) > n:
        return []
    out: list[ReverseTableau] = []

    def rec(i: int, acc: list[tuple[int, ...]]) -> None:
        if i == len(mu):
            out.append(ReverseTableau(tuple(acc)))
            return
        # weakly decreasing row = multiset, listed in decreasing order
        for combo in combinations_with_replacement(range(n, 0, -1), mu[i]):
            if acc and any(a <= b for a, b in zip(acc[-1], combo)):
                continue
            acc.append(combo)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return out


def semistandard_tableaux(mu: Partition | Sequence[int], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Ordinary column-strict tableaux (weakly increasing rows, strictly increasing columns)."""
    return [tuple(tuple(n + 1 - x for x in r) for r in t.rows) for t in reverse_tableaux(mu, n)]
