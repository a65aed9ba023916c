"""Command-line front end: ``construct``, ``analyze`` and ``verify``.

Reports are JSON on standard output (``--pretty`` prints a table instead).
Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

import argparse
import json
import random
import sys

from . import coadjoint as co
from . import families as F
from .lie import JacobiError, from_json, to_json, vector_string
from .semidirect import analyze_semidirect, from_splitting, rais_check
from .semiinv import (
    IrrationalWeightError,
    canonical_truncation,
    semi_invariants_up_to_degree,
    weight_relation_and_generator,
)
from .verify import SUITES, run_suite


class InputError(Exception):
    pass


def _rat_list(v):
    return [str(x) for x in v] if v is not None else None


def _poly(p, labels):
    return p.to_string(labels) if p is not None else None


def report_dict(q, rep):
    labels = q.basis
    return {
        "name": q.name,
        "dim": rep.dim,
        "index": rep.index,
        "method": rep.method,
        "witness_alpha": _rat_list(rep.witness_alpha),
        "index_failure_bound": rep.index_failure_bound,
        "contact": rep.contact,
        "contact_certified": rep.contact_certified,
        "contact_method": rep.contact_method,
        "contact_witness": _rat_list(rep.contact_witness),
        "contact_failure_bound": rep.contact_failure_bound,
        "stable": rep.stable,
        "generic_conical": rep.generic_conical,
        "stabiliser_class": rep.stabiliser_class,
        "stabiliser_central": rep.stabiliser_central,
        "p": _poly(rep.p, labels),
        "f": _poly(rep.f, labels),
        "codim2": rep.codim2,
    }


def semidirect_dict(q, d, index, rng, sampling):
    rc = rais_check(d, rng=rng, sampling=sampling)
    out = {
        "levi": list(d.levi.labels()),
        "ideal": list(d.ideal.labels()),
        "rais": {"index": rc.lhs, "formula": rc.rhs, "ok": rc.ok, "failure_bound": rc.failure_bound},
    }
    if index == 1:
        try:
            an = analyze_semidirect(d, rng=rng, sampling=sampling)
        except ValueError as exc:
            out["case"] = "neither"
            out["verdict"] = "undecided"
            out["chain"] = [str(exc)]
            return out
        out.update(
            {
                "case": an.case,
                "verdict": an.verdict,
                "chain": an.chain,
                "gamma": _rat_list(an.gamma),
                "l_gamma": [vector_string(q, v) for v in an.l_gamma.basis],
                "l_line": [vector_string(q, v) for v in an.l_line.basis] if an.l_line is not None else None,
                "index_l_gamma": an.index_l_gamma,
                "index_l_line": an.index_l_line,
                "principal": vector_string(q, an.principal) if an.principal is not None else None,
                "agrees_with_direct": an.agrees_with_direct,
            }
        )
    return out


def semiinv_dict(q, D, index):
    sis = semi_invariants_up_to_degree(q, D)
    out = {
        "degree_bound": D,
        "generators": [
            {"poly": s.to_string(q.basis), "degree": s.degree, "weight": _rat_list(s.weight)} for s in sis
        ],
    }
    if sis and index == 1:
        try:
            rel = weight_relation_and_generator(sis)
            out["relation"] = {
                "coefficients": rel.coefficients,
                "invariant": _poly(rel.invariant, q.basis),
                "numerator": _poly(rel.numerator, q.basis),
                "denominator": _poly(rel.denominator, q.basis),
            }
        except ValueError as exc:
            out["relation"] = {"error": str(exc)}
    tr = canonical_truncation(q, D, sis)
    out["truncation"] = {
        "basis": [vector_string(q, v) for v in tr.subalgebra.basis],
        "dim": tr.subalgebra.dim,
        "m": tr.m,
        "ideal": tr.is_ideal,
        "abelian_quotient": tr.abelian_quotient,
        "note": tr.note,
    }
    return out


def cmd_construct(args):
    try:
        q, decs = F.construct(F.FamilySpec(args.family, args.params))
    except (F.FamilyError, ValueError) as exc:
        raise InputError(str(exc))
    splitting = None
    if decs:
        d = decs[sorted(decs)[0]]
        try:
            splitting = d.to_splitting()
        except ValueError:
            splitting = None
    text = to_json(q, splitting)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(str(exc))
    else:
        sys.stdout.write(text)
    return 0


def _load(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc))
    try:
        return from_json(text)
    except JacobiError as exc:
        raise InputError(str(exc))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse {path}: {exc}")


def _sampling(args):
    try:
        return co.Sampling(args.trials, args.bound)
    except ValueError as exc:
        raise InputError(str(exc))


def cmd_analyze(args):
    q, splitting = _load(args.path)
    sampling = _sampling(args)
    if args.degree < 1:
        raise InputError("degree must be >= 1")
    rng = random.Random(args.seed)
    try:
        rep = co.analyze(q, rng=rng, sampling=sampling, mode=args.mode, symbolic=not args.no_symbolic)
    except ValueError as exc:
        raise InputError(str(exc))
    out = report_dict(q, rep)
    if splitting is not None:
        try:
            d = from_splitting(q, splitting)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"bad splitting: {exc}")
        out["semidirect"] = semidirect_dict(q, d, rep.index, rng, sampling)
    if args.semiinv:
        try:
            out["semiinv"] = semiinv_dict(q, args.degree, rep.index)
        except (IrrationalWeightError, ValueError) as exc:
            out["semiinv"] = {"error": str(exc)}
    out["config"] = {"seed": args.seed, "trials": args.trials, "bound": args.bound, "mode": args.mode}
    if args.pretty:
        for k, v in out.items():
            if isinstance(v, dict):
                print(f"{k}:")
                for k2, v2 in v.items():
                    print(f"  {k2:<18} {v2}")
            else:
                print(f"{k:<22} {v}")
    else:
        print(json.dumps(out, indent=1))
    return 0


def cmd_verify(args):
    if args.suite not in SUITES and args.suite != "all":
        raise InputError(f"unknown suite {args.suite!r}; known: all, {', '.join(sorted(SUITES))}")
    sampling = _sampling(args)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        results.append(
            run_suite(
                name,
                seed=args.seed,
                trials=sampling.trials,
                bound=sampling.bound,
                jobs=args.jobs,
                max=args.max,
                families=args.families,
            )
        )
    if args.pretty:
        for res in results:
            print(f"== {res.suite}: {'pass' if res.passed else 'FAIL'} (max failure bound {res.max_failure_bound:.3g})")
            for c in res.cases:
                print(f"  {c['status']:<4}  {c['instance']:<32} expected={c['expected']} computed={c['computed']}")
    else:
        payload = [r.to_dict() for r in results]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=1, default=str))
    return 0 if all(r.passed for r in results) else 1


def build_parser():
    p = argparse.ArgumentParser(prog="contactlie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=co.DEFAULT_TRIALS)
        sp.add_argument("--bound", type=int, default=co.DEFAULT_BOUND)
        sp.add_argument("--pretty", action="store_true")

    c = sub.add_parser("construct", help="write an algebra file for a named family")
    c.add_argument("family", help=f"one of {', '.join(F.FAMILY_NAMES)} (aliases: {', '.join(sorted(F.ALIASES))})")
    c.add_argument("params", nargs="*")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="report the coadjoint properties of an algebra file")
    a.add_argument("path")
    common(a)
    a.add_argument("--mode", choices=["probabilistic", "symbolic", "auto"], default="probabilistic")
    a.add_argument("--degree", type=int, default=4)
    a.add_argument("--semiinv", action="store_true", help="add the bounded-degree semi-invariant section")
    a.add_argument("--no-symbolic", action="store_true", help="skip the symbolic p and f")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a regression suite")
    v.add_argument("suite")
    common(v)
    v.add_argument("--max", type=int, default=5)
    v.add_argument("--families", default="all")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
