"""Command-line front end: slack | certify | rank | roundtrip | round | export."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .core import exact_guarantees, proportional_guarantees
from .errors import ExtFormError
from .factor import (
    LPFactorization,
    factorization_from_formulation,
    formulation_from_factorization,
    maxcut_formulation,
    verify_formulation,
    verify_lp_factorization,
)
from .gadgets import GADGETS
from .io import graph_from_json, label, load_matrix
from .rank import Budget, rank_sandwich
from .rational import fmt_rational, parse_rational
from .reduce import Reduction, matrix_reduction, verify_reduction
from .rounding import round_to_problem
from .slack import build_slack, count_disjoint_ones, junta_slack

PROBLEMS = ("maxcut", "multicut", "junta", "matching", "indep-uniform", "vertexcover",
            "maxindep", "csp", "min-csp", "hamiltonian")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return label(x)


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(_jsonable(report), indent=1, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def build_problem(args):
    name = args.problem
    if name == "maxcut":
        return catalog.build_maxcut(args.n, args.degree_bound)
    if name == "multicut":
        return catalog.build_multicut(args.n, args.k)
    if name == "junta":
        return catalog.build_junta_family(args.n, args.k)
    if name == "matching":
        return catalog.build_matching(args.n2 or args.n)
    if name == "indep-uniform":
        return catalog.build_indep_uniform(args.n)
    if name in ("vertexcover", "maxindep"):
        G = graph_from_json(json.loads(Path(args.graph).read_text())) if args.graph \
            else catalog.complete_graph(range(1, args.n + 1))
        fn = catalog.build_vertex_cover if name == "vertexcover" else catalog.build_max_indep
        return fn(G, args.degree_bound)
    if name == "csp":
        return catalog.build_csp(args.kind, args.n, args.k or 2, args.degree_bound, args.max_clauses)
    if name == "min-csp":
        return catalog.build_min_csp(args.kind, args.n, args.max_clauses)
    if name == "hamiltonian":
        return catalog.build_hamiltonian(args.n)
    raise ExtFormError(f"unknown problem {name!r}")


def _guarantees(p, args):
    if args.tau is None and args.sigma is None:
        return exact_guarantees(p)
    tau = args.tau if args.tau is not None else args.sigma
    sigma = args.sigma if args.sigma is not None else args.tau
    return proportional_guarantees(p, tau, sigma)


# ---------------------------------------------------------------- commands


def cmd_slack(args) -> int:
    if args.problem == "junta":
        S = junta_slack(args.n, args.k)
        extra = {"disjoint_ones": count_disjoint_ones(args.n, args.k)}
    else:
        p = build_problem(args)
        S = build_slack(p, _guarantees(p, args))
        extra = {}
    if args.matrix_out:
        text = S.to_csv() if args.matrix_out.endswith(".csv") else S.to_json()
        Path(args.matrix_out).write_text(text)
    report = {"command": "slack", "problem": S.problem.name, "rows": S.shape[0], "cols": S.shape[1],
              "zero_in_every_row": S.zero_per_row(), **extra}
    _emit(report, args.out)
    return 0


def _gadget_kwargs(args, name):
    kw = {}
    if name == "matching-to-hamiltonian":
        kw["n2"] = args.n2 or 4
    else:
        kw["n"] = args.n
        if name == "maxcut-to-multicut":
            kw["k"] = args.k or 3
        if name in ("maxcut-to-vertexcover", "maxcut-to-maxindep") and args.delta is not None:
            kw["Delta"] = args.delta
        if name not in ("matching-to-hamiltonian",) and args.eps is not None:
            kw["eps"] = args.eps
        if args.max_clauses is not None and name not in (
                "maxcut-to-vertexcover", "maxcut-to-maxindep", "maxcut-to-multicut"):
            kw["max_clauses"] = args.max_clauses
    return kw


def cmd_certify(args) -> int:
    if args.reduction:
        doc = json.loads(Path(args.reduction).read_text())
        name, kw = doc["gadget"], doc.get("params", {})
        kw = {k: (parse_rational(v) if k == "eps" else v) for k, v in kw.items()}
        g = GADGETS[name](**kw)
        red = Reduction.from_json(json.dumps(doc["reduction"]), g.source, g.target)
    else:
        if not args.gadget:
            raise ExtFormError("certify needs --gadget or --reduction")
        name = args.gadget
        kw = _gadget_kwargs(args, name)
        g = GADGETS[name](**kw)
        red = g.reduction
    rep = verify_reduction(g.source, g.source_guarantees, g.target, g.target_guarantees, red)
    report = {"command": "certify", "gadget": name, "params": kw, **rep.to_dict(),
              "source": g.source.name, "target": g.target.name,
              "target_solutions": len(g.target.solutions),
              "notes": {k: v for k, v in g.notes.items() if k != "layout"}}
    if rep.ok:
        matrix_reduction(red, g.source, g.source_guarantees, g.target, g.target_guarantees)
        report["matrix_identity"] = True
    _emit(report, args.out)
    if not rep.ok:
        print(f"first violation: {rep.first()}", file=sys.stderr)
        return 1
    return 0


def cmd_rank(args) -> int:
    M = load_matrix(args.matrix)
    budget = Budget.from_env()
    if args.max_entries:
        budget.max_entries = args.max_entries
    if args.max_rank:
        budget.max_rank = args.max_rank
    lp, nn = rank_sandwich(M, budget)
    report = {
        "command": "rank",
        "shape": [len(M), len(M[0]) if M else 0],
        "lp_rank": [lp.lower, lp.upper],
        "nonneg_rank": [nn.lower, nn.upper],
        "lp_certificate": json.loads(lp.certificate_upper.to_json()),
        "nonneg_certificate": json.loads(nn.certificate_upper.to_json()),
        "lp_lower_evidence": lp.certificate_lower,
        "nonneg_lower_evidence": nn.certificate_lower,
        "sandwich_ok": lp.lower <= nn.upper and nn.lower <= lp.upper + 1,
    }
    _emit(report, args.out)
    return 0


def _factorization_for(p, g, S):
    if p.meta.get("problem") == "maxcut" and p.meta.get("n") in (2, 3):
        L = maxcut_formulation(p)
        return L, factorization_from_formulation(p, g, L)
    lp, _ = rank_sandwich(S.entries)
    F = lp.certificate_upper
    return formulation_from_factorization(p, g, F), F


def cmd_roundtrip(args) -> int:
    p = build_problem(args)
    g = _guarantees(p, args)
    S = build_slack(p, g)
    L, F = _factorization_for(p, g, S)
    L2 = formulation_from_factorization(p, g, F)
    verify_formulation(p, g, L2)
    F2 = factorization_from_formulation(p, g, L2)
    ok = verify_lp_factorization(S, F) and verify_lp_factorization(S, F2) and F2.size <= F.size
    report = {"command": "roundtrip", "problem": p.name, "inequalities": L.size,
              "extracted_size": F.size, "second_extracted_size": F2.size, "ok": ok}
    _emit(report, args.out)
    return 0 if ok else 1


def cmd_round(args) -> int:
    p = build_problem(args)
    g = _guarantees(p, args)
    Mt = load_matrix(args.mtilde)
    Ft = rank_sandwich(Mt)[0].certificate_upper if args.search else _trivial_factorization(Mt)
    res = round_to_problem(p, g, Mt, Ft)
    report = {
        "command": "round", "problem": p.name, "k": res.k, "delta": res.delta,
        "rank_M": res.rank_M, "rank_Mtilde": res.rank_Mtilde,
        "size_Ftilde": Ft.size, "size_N": res.certificate.size, "size_bound": res.size_bound,
        "Cprime": [res.Cprime[f] for f in res.Cprime], "checks": res.checks,
    }
    _emit(report, args.out)
    return 0


def _trivial_factorization(M):
    from .rank import _trivial

    return _trivial(M)


def cmd_export(args) -> int:
    if args.gadget:
        kw = _gadget_kwargs(args, args.gadget)
        g = GADGETS[args.gadget](**kw)
        doc = {"gadget": args.gadget, "params": _jsonable(kw),
               "reduction": json.loads(g.reduction.to_json(g.source, g.target))}
        text = json.dumps(doc, indent=1, sort_keys=True)
    else:
        p = build_problem(args)
        S = build_slack(p, _guarantees(p, args))
        text = S.to_csv() if args.format == "csv" else S.to_json()
    if args.out:
        Path(args.out).write_text(text + ("" if text.endswith("\n") else "\n"))
    else:
        print(text)
    return 0


# ---------------------------------------------------------------- parser


def _problem_args(sp, required=True):
    sp.add_argument("--problem", choices=PROBLEMS, required=required)
    sp.add_argument("--n", type=_positive, default=3)
    sp.add_argument("--n2", type=_positive)
    sp.add_argument("--k", type=_positive)
    sp.add_argument("--kind")
    sp.add_argument("--degree-bound", type=_positive)
    sp.add_argument("--max-clauses", type=_positive)
    sp.add_argument("--graph", help="JSON graph file {n, edges}")
    sp.add_argument("--tau", type=_rational)
    sp.add_argument("--sigma", type=_rational)
    sp.add_argument("--out", help="also write the report here")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="extform", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("slack", help="build a slack matrix")
    _problem_args(sp)
    sp.add_argument("--matrix-out", help="write the matrix (.csv or .json)")
    sp.set_defaults(fn=cmd_slack)

    sp = sub.add_parser("certify", help="verify a gadget or a serialized reduction")
    sp.add_argument("--gadget", choices=sorted(GADGETS))
    sp.add_argument("--reduction", help="JSON file written by 'export --gadget'")
    sp.add_argument("--n", type=_positive, default=3)
    sp.add_argument("--n2", type=_positive)
    sp.add_argument("--k", type=_positive)
    sp.add_argument("--delta", type=_positive)
    sp.add_argument("--eps", type=_rational)
    sp.add_argument("--max-clauses", type=_positive)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_certify)

    sp = sub.add_parser("rank", help="certified LP and nonnegative rank intervals")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--max-entries", type=_positive)
    sp.add_argument("--max-rank", type=_positive)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_rank)

    sp = sub.add_parser("roundtrip", help="formulation -> factorization -> formulation")
    _problem_args(sp)
    sp.set_defaults(fn=cmd_roundtrip)

    sp = sub.add_parser("round", help="round a perturbed slack matrix")
    _problem_args(sp)
    sp.add_argument("--mtilde", required=True)
    sp.add_argument("--search", action="store_true", help="factor Mtilde with the rank engine")
    sp.set_defaults(fn=cmd_round)

    sp = sub.add_parser("export", help="write a slack matrix or a gadget reduction")
    _problem_args(sp, required=False)
    sp.add_argument("--gadget", choices=sorted(GADGETS))
    sp.add_argument("--delta", type=_positive)
    sp.add_argument("--eps", type=_rational)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(fn=cmd_export)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "export" and not args.gadget and not args.problem:
        print("export needs --problem or --gadget", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (ExtFormError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
