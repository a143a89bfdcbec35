"""Compare the multiplicity-sequence Upsilon with the staircase Upsilon for torus knots."""

import argparse
from dataclasses import dataclass

from upsilon_lab.algebraic import check_inequalities, coprime_pairs, multiplicity_sequence, singularity_report, torus_alexander
from upsilon_lab.upsilon import report


@dataclass
class CrosscheckConfig:
    limit: int = 12


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=CrosscheckConfig.limit, help="largest q")
    cfg = CrosscheckConfig(ap.parse_args().limit)
    failures = 0
    print(f"{'(p,q)':>8} {'mults':<22} {'mu':>4} {'omega':>5} {'-3*int':>6}  agree  ineq")
    for p, q in coprime_pairs(cfg.limit):
        ms = multiplicity_sequence(p, q)
        sr = singularity_report(ms)
        tr = report(torus_alexander(p, q))
        agree = sr.upsilon == tr.upsilon and sr.minus_three_integral == tr.minus_three_integral
        v = check_inequalities(p, q)
        ineq = v.omega_below_p_plus_q and v.milnor_at_most_m_omega
        failures += not (agree and ineq)
        print(f"{f'({p},{q})':>8} {str(list(ms.mults)):<22} {sr.milnor:>4} {sr.omega:>5} "
              f"{sr.minus_three_integral:>6}  {'yes' if agree else 'NO':>5}  {'ok' if ineq else 'FAIL'}")
    print(f"{len(coprime_pairs(cfg.limit))} pairs, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
