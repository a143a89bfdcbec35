"""Sweep K_n: check the three Alexander routes and print -3*int(Upsilon) per n."""

import argparse
import time
from dataclasses import dataclass

from upsilon_lab.braid import alexander_of_closure, kn_braid
from upsilon_lab.family import kn_alexander_closed, kn_alexander_torres, kn_minus_three_integral
from upsilon_lab.upsilon import report


@dataclass
class SweepConfig:
    n_max: int = 50
    braid_max: int = 20


def sweep(cfg: SweepConfig):
    for n in range(1, cfg.n_max + 1):
        delta = kn_alexander_closed(n)
        routes = ["closed"]
        if kn_alexander_torres(n) == delta:
            routes.append("torres")
        if n <= cfg.braid_max and alexander_of_closure(kn_braid(n)) == delta:
            routes.append("braid")
        r = report(delta, f"K_{n}")
        ok = r.minus_three_integral == kn_minus_three_integral(n)
        yield n, r, routes, ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    ap.add_argument("--braid-max", type=int, default=SweepConfig.braid_max)
    args = ap.parse_args()
    cfg = SweepConfig(args.n_max, args.braid_max)
    start = time.perf_counter()
    bad = 0
    print(f"{'n':>4} {'genus':>5} {'-3*int':>8} {'omega':>8}  routes")
    for n, r, routes, ok in sweep(cfg):
        bad += not ok
        print(f"{n:>4} {r.genus:>5} {str(r.minus_three_integral):>8} {str(r.omega):>8}  {'+'.join(routes)}"
              + ("" if ok else "  MISMATCH"))
    print(f"{cfg.n_max} knots in {time.perf_counter() - start:.2f} s, {bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
