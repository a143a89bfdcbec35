"""Write the synthetic census (K_1..K_N and torus knots T(p,q), q <= Q) and run it."""

import argparse
from dataclasses import dataclass

from upsilon_lab.census import emit_table, run_census, synthetic_records, write_census_csv


@dataclass
class CensusConfig:
    out: str = "synthetic_census.csv"
    n_max: int = 50
    pq_limit: int = 12


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=CensusConfig.out)
    ap.add_argument("--n-max", type=int, default=CensusConfig.n_max)
    ap.add_argument("--pq-limit", type=int, default=CensusConfig.pq_limit)
    args = ap.parse_args()
    cfg = CensusConfig(args.out, args.n_max, args.pq_limit)
    write_census_csv(synthetic_records(cfg.n_max, cfg.pq_limit), cfg.out)
    print(emit_table(run_census(cfg.out)), end="")


if __name__ == "__main__":
    main()
