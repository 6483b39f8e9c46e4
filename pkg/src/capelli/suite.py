"""The acceptance battery: ten exact identity checks at desk scale.

Each criterion returns a ``CriterionResult``; ``run_suite`` runs them in order. Bounds live
in ``SuiteConfig`` and default to the full battery.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field, fields, replace
from fractions import Fraction
from math import factorial
from typing import Callable

from .combinatorics import (
    Partition,
    content_power,
    dim_gl,
    dim_sym,
    hook_product,
    partitions,
    partitions_up_to,
    skew_dim,
    standard_tableaux,
)
from .schurweyl import verify_schur_weyl
from .shifted_schur import (
    SingularEvaluationError,
    char_ratio,
    falling,
    sigma_polynomial,
    sstar_at_self_product_formula,
    sstar_det_at,
    sstar_det_eval,
    sstar_eval,
)
from .symgroup import GroupAlgebraElement, Permutation, antisymmetrizer, projection, young_symmetrizer
from .ugln import (
    capelli_element,
    capelli_element_column,
    e_matrix,
    e_shape,
    e_tableau,
    hc_eigenvalue,
    immanant_via_symmetrizer,
    is_central,
    quantum_immanant,
    quantum_immanant_via_trace,
    rtt_sides,
    tensor_trace,
)
from .weyl import (
    L_map,
    MatrixPolynomial,
    WeylElement,
    as_d_operator,
    det_x_det_d,
    delta_mu,
    euler_falling,
    immanant_poly,
    monomials_up_to,
    pair_at_identity,
    restrict,
    verify_higher_capelli,
)


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds for every criterion. Fields ending in ``weight`` or ``_n`` are capped by ``capped``."""

    capelli_weight: int = 4
    capelli_max_n: int = 3
    capelli_budget_seconds: float = 300.0
    classical_max_n: int = 3
    euler_max_k: int = 5
    eigen_mu_weight: int = 4
    eigen_lambda_weight: int = 5
    eigen_n: int = 3
    random_points: int = 12
    vanishing_weight: int = 5
    normalized_weight: int = 3
    normalized_n: int = 3
    symmetrizer_weight: int = 5
    symmetrizer_route_weight: int = 3
    cherednik_weight: int = 3
    centrality_weight: int = 4
    structural_max_n: int = 3
    schur_weyl_weight: int = 4
    schur_weyl_max_n: int = 3
    schur_weyl_budget_seconds: float = 60.0
    ratio_weight: int = 6
    restriction_weight: int = 3
    restriction_max_n: int = 3
    lemma_weight: int = 3
    lemma_max_n: int = 3
    seed: int = 0

    def capped(self, max_weight: int | None = None, max_n: int | None = None) -> "SuiteConfig":
        changes = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if max_weight is not None and f.name.endswith("weight"):
                changes[f.name] = min(v, max_weight)
            if max_n is not None and (f.name.endswith("_n") or f.name == "eigen_n"):
                changes[f.name] = min(v, max_n)
        return replace(self, **changes)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checks: int
    seconds: float
    failures: list[str] = field(default_factory=list)

    def line(self, timings: bool = True) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = f", {self.seconds:.2f}s" if timings else ""
        return f"criterion {self.number:2d} {verdict}  {self.title}  ({self.checks} checks{extra})"

    def to_json(self, timings: bool = True) -> dict:
        out = asdict(self)
        if timings:
            out["seconds"] = round(self.seconds, 3)
        else:
            del out["seconds"]
        return out


class _Tally:
    def __init__(self) -> None:
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)


def _shapes(max_weight: int, max_length: int, nonempty: bool = True) -> list[Partition]:
    return [mu for mu in partitions_up_to(max_weight, max_length=max_length) if mu.weight or not nonempty]


def higher_capelli(cfg: SuiteConfig, t: _Tally) -> None:
    start = time.perf_counter()
    for n in range(1, cfg.capelli_max_n + 1):
        for m in range(1, cfg.capelli_max_n + 1):
            for mu in _shapes(cfg.capelli_weight, n):
                r = verify_higher_capelli(mu, n, m)
                t.check(r.equal, f"mu={mu} n={n} m={m}: {r.first_discrepancy}")
    t.check(time.perf_counter() - start < cfg.capelli_budget_seconds, "runtime budget exceeded")


def classical_capelli(cfg: SuiteConfig, t: _Tally) -> None:
    for n in range(1, cfg.classical_max_n + 1):
        c = capelli_element(n)
        t.check(L_map(c, n) == det_x_det_d(n), f"L(C) != det X det D for n={n}")
        shifted = [e_matrix(n, -p) for p in range(n)]
        via_trace = tensor_trace(shifted, antisymmetrizer(n)) / factorial(n)
        t.check(via_trace == c, f"trace route differs from row determinant for n={n}")
        t.check(capelli_element_column(n) == c, f"column determinant differs for n={n}")
        t.check(quantum_immanant([1] * n, n) == c, f"S_(1^n) differs for n={n}")


def euler_operator(cfg: SuiteConfig, t: _Tally) -> None:
    x, d = WeylElement.x(1, 1, 1, 1), WeylElement.d(1, 1, 1, 1)
    for k in range(cfg.euler_max_k + 1):
        t.check(euler_falling(k) == x**k * d**k, f"k={k}")
        t.check(L_map(quantum_immanant([k] if k else [], 1), 1) == x**k * d**k, f"L(S_({k})) for k={k}")


def eigenvalues(cfg: SuiteConfig, t: _Tally) -> None:
    n = cfg.eigen_n
    for mu in _shapes(cfg.eigen_mu_weight, n, nonempty=False):
        s = quantum_immanant(mu, n)
        for lam in partitions_up_to(cfg.eigen_lambda_weight, max_length=n):
            pt = lam.padded(n)
            hc = hc_eigenvalue(s, pt)
            sig = sstar_eval(mu, pt)
            det = sstar_det_eval(mu, pt)
            t.check(hc == sig == det, f"mu={mu} lam={lam}: hc={hc} sigma={sig} det={det}")
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random_points):
        pt = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(n)]
        for mu in _shapes(cfg.eigen_mu_weight, n, nonempty=False):
            try:
                det = sstar_det_eval(mu, pt)
            except SingularEvaluationError:
                continue
            hc = hc_eigenvalue(quantum_immanant(mu, n), pt)
            t.check(hc == det == sigma_polynomial(mu, n).evaluate(pt), f"mu={mu} at {pt}")


def vanishing(cfg: SuiteConfig, t: _Tally) -> None:
    w = cfg.vanishing_weight
    for k in range(w + 1):
        for mu in partitions(k):
            for lam in partitions_up_to(k):
                if not lam.contains(mu):
                    t.check(sstar_eval(mu, lam) == 0, f"s*_{mu}({lam}) != 0")
                    t.check(sstar_det_at(mu, lam) == 0, f"determinant route s*_{mu}({lam}) != 0")
            h = hook_product(mu)
            t.check(sstar_eval(mu, mu) == h, f"s*_{mu}({mu}) != H")
            t.check(sstar_det_at(mu, mu) == h, f"determinant route s*_{mu}({mu}) != H")
            t.check(sstar_at_self_product_formula(mu) == h, f"product formula for {mu}")
            t.check(dim_sym(mu) * h == factorial(k), f"dim_sym({mu}) != k!/H")
            for n in range(max(len(mu), 1), w + 1):
                t.check(dim_gl(n, mu) * h == content_power(n, mu), f"dim_gl({n},{mu}) != (n|mu)/H")


def normalized_trace(cfg: SuiteConfig, t: _Tally) -> None:
    n = cfg.normalized_n
    for mu in _shapes(cfg.normalized_weight, n, nonempty=False):
        s = quantum_immanant(mu, n, normalized=True)
        for lam in partitions_up_to(mu.weight, max_length=n):
            v = dim_gl(n, lam) * hc_eigenvalue(s, lam)
            t.check(v == (1 if lam == mu else 0), f"mu={mu} lam={lam}: {v}")


def structural(cfg: SuiteConfig, t: _Tally) -> None:
    pairs = [(0, -1), (1, 2), (Fraction(1, 2), 3), (-2, Fraction(5, 3)), (4, 4)]
    for n in range(1, cfg.structural_max_n + 1):
        for u, v in pairs:
            a, b = rtt_sides(n, u, v)
            t.check(a == b, f"RTT n={n} u={u} v={v}")
    for mu in _shapes(cfg.symmetrizer_weight, cfg.symmetrizer_weight):
        _, _, pq = young_symmetrizer(mu)
        t.check(pq * pq == pq * hook_product(mu), f"(PQ)^2 != H PQ for {mu}")
    for mu in _shapes(cfg.centrality_weight, cfg.structural_max_n):
        for n in range(len(mu), cfg.structural_max_n + 1):
            s = quantum_immanant(mu, n)
            t.check(is_central(s), f"S_{mu} not central for n={n}")
            for tab in standard_tableaux(mu):
                t.check(quantum_immanant_via_trace(mu, n, tab) == s, f"tr E(T)P_T depends on T={tab}, n={n}")
            if mu.weight <= cfg.symmetrizer_route_weight:
                t.check(immanant_via_symmetrizer(mu, n) == s, f"symmetrizer route for {mu}, n={n}")
    for mu in _shapes(cfg.cherednik_weight, cfg.cherednik_weight):
        k = mu.weight
        for n in range(1, cfg.structural_max_n + 1):
            for tab in standard_tableaux(mu):
                e, p = e_tableau(tab, n), projection(tab)
                t.check(e.right_act(p) == e.left_act(p).right_act(p), f"Cherednik T={tab}, n={n}")
            em = e_shape(mu, n)
            for i in range(1, k):
                s = GroupAlgebraElement.of(Permutation.adjacent(k, i))
                t.check(em.left_act(s) == em.right_act(s), f"s_{i} E({mu}) != E({mu}) s_{i}, n={n}")


def schur_weyl(cfg: SuiteConfig, t: _Tally) -> None:
    start = time.perf_counter()
    for K in range(1, cfg.schur_weyl_weight + 1):
        for n in range(1, cfg.schur_weyl_max_n + 1):
            for mu in _shapes(K, n):
                r = verify_schur_weyl(mu, n, K)
                t.check(r.equal, f"mu={mu} n={n} K={K}: {r.first_discrepancy}")
    t.check(time.perf_counter() - start < cfg.schur_weyl_budget_seconds, "runtime budget exceeded")


def dimension_ratio(cfg: SuiteConfig, t: _Tally) -> None:
    for lam in partitions_up_to(cfg.ratio_weight):
        for mu in partitions_up_to(lam.weight):
            lhs = Fraction(skew_dim(lam, mu), dim_sym(lam))
            rhs = Fraction(sstar_eval(mu, lam)) / falling(lam.weight, mu.weight)
            t.check(lhs == rhs == char_ratio(lam, mu), f"lam={lam} mu={mu}: {lhs} vs {rhs}")


def restriction_and_pairing(cfg: SuiteConfig, t: _Tally) -> None:
    top = cfg.restriction_max_n
    for N in range(2, top + 1):
        for n in range(1, N):
            for m in range(1, top + 1):
                for mu in _shapes(cfg.restriction_weight, n):
                    t.check(restrict(delta_mu(mu, N, m), n) == delta_mu(mu, n, m), f"mu={mu} N={N} n={n} m={m}")
    for n in range(1, cfg.lemma_max_n + 1):
        for mu in _shapes(cfg.lemma_weight, n):
            lhs = L_map(quantum_immanant(mu, n), n)
            rhs = as_d_operator(immanant_poly(mu, n, n, on="D"), n, n)
            for e in monomials_up_to(n * n, mu.weight + 1):
                p = MatrixPolynomial(n, n, {e: 1})
                t.check(pair_at_identity(lhs, p) == pair_at_identity(rhs, p), f"mu={mu} n={n} monomial={e}")


CRITERIA: list[tuple[int, str, Callable[[SuiteConfig, _Tally], None]]] = [
    (1, "higher Capelli identities", higher_capelli),
    (2, "classical Capelli identity", classical_capelli),
    (3, "one-variable Euler operator", euler_operator),
    (4, "eigenvalues and three s* routes", eigenvalues),
    (5, "vanishing and s*_mu(mu) = H(mu)", vanishing),
    (6, "normalized trace condition", normalized_trace),
    (7, "structural battery", structural),
    (8, "Schur-Weyl identity", schur_weyl),
    (9, "dimension ratio", dimension_ratio),
    (10, "restriction and identity pairing", restriction_and_pairing),
]


def run_criterion(number: int, cfg: SuiteConfig | None = None) -> CriterionResult:
    cfg = cfg or SuiteConfig()
    num, title, fn = CRITERIA[number - 1]
    tally = _Tally()
    start = time.perf_counter()
    try:
        fn(cfg, tally)
    except Exception as exc:  # a crash is a failed criterion, not a crashed suite
        tally.check(False, f"{type(exc).__name__}: {exc}")
    return CriterionResult(num, title, not tally.failures, tally.checks, time.perf_counter() - start, tally.failures)


def run_suite(cfg: SuiteConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or SuiteConfig()
    return [run_criterion(num, cfg) for num, _, _ in CRITERIA]
