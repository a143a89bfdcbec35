"""Command-line interface.

Exit status: 0 on success, 1 on bad input (including usage errors),
2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebraic, braid, census, family, signature, upsilon
from .errors import ContractViolation, InputError, InvalidParameter
from .exactmath import parse_laurent


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_pair(text: str):
    try:
        p, q = (int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p,q got {text!r}") from None
    return p, q


def _int_list(text: str):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _report_text(r: upsilon.InvariantReport) -> str:
    lines = []
    if r.name:
        lines.append(f"knot:      {r.name}")
    if r.delta is not None:
        lines.append(f"Delta:     {r.delta}")
    lines += [
        f"genus:     {r.genus}",
        f"tau:       {r.tau}",
        "Upsilon:   " + "  ".join(f"({x}, {y})" for x, y in zip(r.upsilon.breakpoints, r.upsilon.values)),
        f"integral:  {r.integral}",
        f"-3*int:    {r.minus_three_integral}  ({'integer' if r.is_integral else 'NOT an integer'})",
        f"omega:     {r.omega}",
    ]
    if r.semigroup_closed:
        lines.append("semigroup: closed under addition")
    else:
        a, b = r.closure_witness
        lines.append(f"semigroup: not closed ({a} + {b} = {a + b} is a gap)")
    return "\n".join(lines)


def _report_json(r: upsilon.InvariantReport, **extra) -> dict:
    out = r.to_json()
    if r.delta is not None:
        out["polynomial"] = str(r.delta)
    out.update(extra)
    return out


def cmd_upsilon(args):
    if args.poly is not None:
        text = args.poly
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    r = upsilon.report(parse_laurent(text), args.name)
    _emit(_report_json(r), args.json, _report_text(r))


def cmd_semigroup(args):
    sg = upsilon.formal_semigroup(parse_laurent(args.poly))
    closed, witness = upsilon.is_closed_under_addition(sg)
    upto = 2 * sg.genus + 1
    obj = {
        "genus": sg.genus,
        "gaps": list(sg.gaps),
        "elements_below_2g_plus_1": sg.elements(upto),
        "closed": closed,
        "witness": list(witness) if witness else None,
    }
    text = (
        f"genus {sg.genus}\ngaps {list(sg.gaps)}\n"
        f"S: {', '.join(map(str, sg.elements(upto)))}, ...\n"
        + ("closed under addition" if closed else f"not closed: {witness[0]} + {witness[1]} not in S")
    )
    _emit(obj, args.json, text)


ROUTES = {
    "closed": family.kn_alexander_closed,
    "torres": family.kn_alexander_torres,
    "braid": lambda n: braid.alexander_of_closure(braid.kn_braid(n)),
}


def cmd_family(args):
    delta = ROUTES[args.route](args.n)
    r = upsilon.report(delta, f"K_{args.n}")
    _emit(_report_json(r, n=args.n, route=args.route), args.json, f"route: {args.route}\n" + _report_text(r))


def cmd_torus(args):
    p, q = args.pq
    r = upsilon.report(algebraic.torus_alexander(p, q), f"T({p},{q})")
    ms = algebraic.multiplicity_sequence(p, q)
    _emit(
        _report_json(r, mults=list(ms.mults)),
        args.json,
        _report_text(r) + f"\nmults:     {list(ms.mults)}",
    )


def cmd_algebraic(args):
    extra = {}
    if args.pq is not None:
        ms = algebraic.multiplicity_sequence(*args.pq)
        verdict = algebraic.check_inequalities(*args.pq)
        extra["inequalities"] = verdict.to_json()
    else:
        ms = algebraic.MultiplicitySequence(tuple(args.mults))
    rep = algebraic.singularity_report(ms)
    obj = rep.to_json()
    obj.update(extra)
    text = "\n".join([
        f"mults:     {list(ms.mults)}",
        f"milnor:    {rep.milnor}",
        f"genus:     {rep.genus}",
        f"omega:     {rep.omega}",
        f"-3*int:    {rep.minus_three_integral}",
    ])
    if extra:
        v = extra["inequalities"]
        text += (
            f"\nomega < p+q:     {v['omega_below_p_plus_q']} ({v['omega']} < {args.pq[0] + args.pq[1]})"
            f"\nmu <= m*omega:   {v['milnor_at_most_m_omega']} ({v['milnor']} <= {v['multiplicity'] * v['omega']})"
        )
    _emit(obj, args.json, text)


def cmd_braid(args):
    w = braid.parse_braid(args.word)
    delta = braid.alexander_of_closure(w)
    obj = {"braid": str(w), "alexander": delta.to_json(), "polynomial": str(delta)}
    lines = [f"braid:  {w}", f"Delta:  {delta}"]
    if w.is_positive():
        g = braid.positive_braid_genus(w)
        obj["genus"] = g
        lines.append(f"genus:  {g}")
    try:
        r = upsilon.report(delta, args.name or str(w))
    except InputError as exc:
        obj["report"] = None
        lines.append(f"not of L-space form: {exc}")
    else:
        obj["report"] = r.to_json()
        lines.append(_report_text(r))
    _emit(obj, args.json, "\n".join(lines))


def cmd_signature(args):
    if args.greedy is not None:
        g = signature.greedy_sequence(args.greedy)
        text = "\n".join(
            f"a_{i + 1} = {a:6d}  u = {loc.root:.15f}  lambda = {lam:.15f}"
            for i, (a, lam, loc) in enumerate(zip(g.terms, g.radii, g.roots))
        )
        _emit(g.to_json(), args.json, text)
    else:
        loc = signature.locate_first_root(args.n)
        text = (
            f"n = {loc.n}: first sign change of gamma_n in "
            f"({loc.bracket[0]:.15f}, {loc.bracket[1]:.15f}); "
            f"u_n = {loc.root:.15f} < pi/{2 * loc.n - 5} = {loc.upper_limit:.15f}"
        )
        _emit(loc.to_json(), args.json, text)


def cmd_census(args):
    rep = census.run_census(args.input, args.format, args.threads)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
        return
    print(census.emit_table(rep, args.table), end="")
    for name, why in rep.rejects:
        print(f"rejected {name}: {why}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="upsilon-lab", description="Upsilon, -3*int(Upsilon) and omega for L-space knots.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("upsilon", cmd_upsilon, "full report for an Alexander polynomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='e.g. "t^2 - t + 1"')
    src.add_argument("--file", help="file containing one polynomial")
    p.add_argument("--name", default="")

    p = add("semigroup", cmd_semigroup, "formal semigroup and closure check")
    p.add_argument("--poly", required=True)

    p = add("family", cmd_family, "the knot K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=sorted(ROUTES), default="closed")

    p = add("torus", cmd_torus, "torus knot T(p,q)")
    p.add_argument("--pq", type=_int_pair, required=True, metavar="P,Q")

    p = add("algebraic", cmd_algebraic, "singularity invariants from a multiplicity sequence")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--mults", type=_int_list, metavar="M1,M2,...")
    src.add_argument("--pq", type=_int_pair, metavar="P,Q")

    p = add("braid", cmd_braid, "Alexander polynomial of a braid closure")
    p.add_argument("--word", required=True, help='e.g. "strands:2 1 1 1"')
    p.add_argument("--name", default="")

    p = add("signature", cmd_signature, "roots of Delta_{K_n} near 1 on the unit circle")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--greedy", type=int, metavar="K")

    p = add("census", cmd_census, "batch reports and the non-integrality table")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default=None)
    p.add_argument("--table", choices=["markdown", "csv"], default="markdown")
    p.add_argument("--threads", type=int, default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ContractViolation as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, InvalidParameter, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
