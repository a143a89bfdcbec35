"""First sign changes of gamma_n and the greedy sequence a_m."""

import argparse
import math
from dataclasses import dataclass, field

from upsilon_lab.signature import greedy_sequence, locate_first_root, psi_at_zeta6


@dataclass
class RootsConfig:
    ns: list = field(default_factory=lambda: [11, 20, 50, 100])
    greedy: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="*", default=RootsConfig().ns)
    ap.add_argument("--greedy", type=int, default=RootsConfig.greedy)
    args = ap.parse_args()
    cfg = RootsConfig(args.n, args.greedy)

    for n in cfg.ns:
        loc = locate_first_root(n)
        lo, hi = loc.bracket
        print(f"n={n:<4} u_n={loc.root:.13f}  width={hi - lo:.1e}  pi/(2n-5)={math.pi / (2 * n - 5):.13f}")

    g = greedy_sequence(cfg.greedy)
    print("\ngreedy sequence")
    for i, (a, lam) in enumerate(zip(g.terms, g.radii), start=1):
        print(f"a_{i} = {a:<5} lambda_{i} = {lam:.10f}")

    print("\npsi_n(zeta_6), n = 1..12")
    print("  ".join(f"{n}:{complex(psi_at_zeta6(n)).real:+.0f}" for n in range(1, 13)))


if __name__ == "__main__":
    main()
