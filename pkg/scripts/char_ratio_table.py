"""Tabulate s*_mu(lam) against the normalized character dim(lam/mu)/dim(lam).

For each pair mu, lam with |mu| <= |lam| the script prints s*_mu(lam) and the normalized
character dim(lam/mu)/dim(lam), and checks s*_mu(lam) = |lam|(|lam|-1)...(|lam|-|mu|+1) * ratio.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from capelli.combinatorics import partitions, partitions_up_to
from capelli.shifted_schur import char_ratio, sstar_eval
from capelli.symgroup import format_rational


@dataclass(frozen=True)
class TableConfig:
    mu_weight: int = 2
    lambda_weight: int = 5


def falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def table(cfg: TableConfig) -> bool:
    ok = True
    print(f"{'mu':>8} {'lambda':>10}  {'s*':>6}  {'ratio':>8}  check")
    for mu in partitions_up_to(cfg.mu_weight):
        if mu.weight == 0:
            continue
        for size in range(mu.weight, cfg.lambda_weight + 1):
            for lam in partitions(size):
                s = sstar_eval(mu, lam)
                ratio = char_ratio(lam, mu)
                good = s == falling(size, mu.weight) * ratio
                ok &= good
                print(f"{str(mu):>8} {str(lam):>10}  {format_rational(s):>6}  {format_rational(ratio):>8}  {'ok' if good else 'FAIL'}")
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mu-weight", type=int, default=TableConfig.mu_weight)
    ap.add_argument("--lambda-weight", type=int, default=TableConfig.lambda_weight)
    a = ap.parse_args()
    raise SystemExit(0 if table(TableConfig(a.mu_weight, a.lambda_weight)) else 1)


if __name__ == "__main__":
    main()
