"""Commutative multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .symgroup import format_rational

Rational = Fraction | int
Exponent = tuple[int, ...]


def _add_into(d: dict, key, c) -> None:
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class RationalPolynomial:
    """Polynomial in ``nvars`` variables ``x1..xn`` stored as ``{exponent tuple: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, Rational] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                self.terms[tuple(e)] = c

    def _like(self, terms: Mapping[Exponent, Rational]) -> "RationalPolynomial":
        return RationalPolynomial(self.nvars, terms)

    @classmethod
    def constant(cls, nvars: int, c: Rational) -> "RationalPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "RationalPolynomial":
        """The variable ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return self._like({(0,) * self.nvars: other})

    def __add__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(d, e, c)
        return self._like(d)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return self._like({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        d: dict[Exponent, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add_into(d, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return self._like(d)

    __rmul__ = __mul__

    def __pow__(self, p: int) -> "RationalPolynomial":
        out = self._like({(0,) * self.nvars: 1})
        for _ in range(p):
            out = out * self
        return out

    def __truediv__(self, c) -> "RationalPolynomial":
        return self._like({e: Fraction(v) / c for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "RationalPolynomial":
        return self._like({e: c for e, c in self.terms.items() if sum(e) == d})

    def highest_term(self) -> "RationalPolynomial":
        return self.homogeneous_part(self.degree)

    def __call__(self, point: Sequence[Rational]) -> Rational:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Rational]) -> Rational:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        total: Rational = 0
        for e, c in self.terms.items():
            v = c
            for x, p in zip(point, e):
                if p:
                    v *= x**p
            total += v
        return total

    def substitute(self, images: Sequence["RationalPolynomial"]) -> "RationalPolynomial":
        """Replace ``x_i`` by ``images[i-1]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("wrong number of substitutions")
        target = images[0].nvars if images else 0
        out = RationalPolynomial(target)
        for e, c in self.terms.items():
            term = RationalPolynomial.constant(target, c)
            for img, p in zip(images, e):
                if p:
                    term = term * img**p
            out = out + term
        return out

    def with_variables(self, nvars: int) -> "RationalPolynomial":
        """Embed into more variables, or drop trailing variables that do not occur."""
        if nvars >= self.nvars:
            pad = (0,) * (nvars - self.nvars)
            return RationalPolynomial(nvars, {e + pad: c for e, c in self.terms.items()})
        if any(any(e[nvars:]) for e in self.terms):
            raise ValueError("polynomial involves dropped variables")
        return RationalPolynomial(nvars, {e[:nvars]: c for e, c in self.terms.items()})

    def set_variable(self, i: int, value: Rational) -> "RationalPolynomial":
        """Specialize ``x_i`` (1-based) and drop it."""
        d: dict[Exponent, Rational] = {}
        for e, c in self.terms.items():
            p = e[i - 1]
            if p and value == 0:
                continue
            _add_into(d, e[: i - 1] + e[i:], c * value**p if p else c)
        return RationalPolynomial(self.nvars - 1, d)

    def sorted_terms(self) -> list[tuple[Exponent, Rational]]:
        """Terms by decreasing total degree, then decreasing exponent tuple."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0])))

    def monomial_str(self, e: Exponent) -> str:
        parts = [f"x{i}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e, 1) if p]
        return "*".join(parts) or "1"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {self.monomial_str(e)}" for e, c in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exponent": list(e), "coeff": format_rational(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def parse(cls, text: str, nvars: int) -> "RationalPolynomial":
        """Parse an expression in ``x1..xn`` such as ``"(x1+x2)^2 - 3/2*x1"``."""
        import sympy

        symbols = sympy.symbols(f"x1:{nvars + 1}") if nvars else ()
        local = {str(s): s for s in symbols}
        expr = sympy.parse_expr(text.replace("^", "**"), local_dict=local, evaluate=True)
        extra = expr.free_symbols - set(symbols)
        if extra:
            raise ValueError(f"unknown symbols {sorted(map(str, extra))} for {nvars} variables")
        if not symbols:
            return cls.constant(0, Fraction(str(sympy.Rational(expr))))
        poly = sympy.Poly(expr, *symbols, domain="QQ")
        terms = {}
        for e, c in poly.terms():
            c = sympy.Rational(c)
            terms[tuple(e)] = Fraction(int(c.p), int(c.q))
        return cls(nvars, terms)


def polynomial_sum(nvars: int, items: Iterable[RationalPolynomial]) -> RationalPolynomial:
    d: dict[Exponent, Rational] = {}
    for p in items:
        for e, c in p.terms.items():
            _add_into(d, e, c)
    return RationalPolynomial(nvars, d)


def product_of_linear(nvars: int, factors: Iterable[tuple[int, Rational]]) -> RationalPolynomial:
    """Expand ``prod (x_i + a)`` for ``(i, a)`` pairs (1-based ``i``)."""
    d: dict[Exponent, Rational] = {(0,) * nvars: 1}
    for i, a in factors:
        nd: dict[Exponent, Rational] = {}
        for e, c in d.items():
            up = e[: i - 1] + (e[i - 1] + 1,) + e[i:]
            _add_into(nd, up, c)
            if a:
                _add_into(nd, e, c * a)
        d = nd
    return RationalPolynomial(nvars, d)

