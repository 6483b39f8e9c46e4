"""Time the higher Capelli check L(S_mu) = Delta_mu over a sweep of shapes and sizes."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from capelli.combinatorics import partitions_up_to
from capelli.weyl import verify_higher_capelli


@dataclass(frozen=True)
class SweepConfig:
    max_weight: int = 4
    max_n: int = 3
    max_m: int = 3


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'shape':>10} {'n':>2} {'m':>2}  {'terms':>6}  {'seconds':>8}  result")
    for n in range(1, cfg.max_n + 1):
        for m in range(1, cfg.max_m + 1):
            for mu in partitions_up_to(cfg.max_weight, max_length=n):
                if mu.weight == 0:
                    continue
                t0 = time.perf_counter()
                r = verify_higher_capelli(mu, n, m)
                dt = time.perf_counter() - t0
                ok &= r.equal
                print(f"{str(mu):>10} {n:>2} {m:>2}  {r.lhs_terms:>6}  {dt:8.3f}  {'pass' if r.equal else 'FAIL'}")
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=SweepConfig.max_weight)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-m", type=int, default=SweepConfig.max_m)
    a = ap.parse_args()
    ok = sweep(SweepConfig(a.max_weight, a.max_n, a.max_m))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
