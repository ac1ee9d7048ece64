"""Command-line front end.

Exit status: 0 on success, 1 when the library rejects the input on domain
grounds (infeasible vector, refuted extremeness, bound exceeded), 2 for
usage errors and malformed files.
"""
import argparse
import sys

from . import io
from .cutlp import BOUNDED, UNBOUNDED, CutLP, separate, solve
from .decompose import split_search, splitting_gap_bound, verify_split
from .exactmath import fraction_str
from .extremepoints import (construct_fibonacci, directed_face_extreme, enumerate_extreme_points, lift_to_directed,
                            stats, verify_extreme)
from .gap import domination_gap
from .metric import ecsm_to_ecss, multiset_cost
from .reductions import kecss_from_pcot, setcover_to_pcot
from .report import build_report


class DomainFailure(Exception):
    """A well-formed request whose answer is a failure (exit status 1)."""


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args):
    g = io.load_graph(args.graph)
    res = solve(CutLP(g, args.k, args.lp))
    if not res.optimal:
        raise DomainFailure(f"LP {res.status}: {res.reason}")
    if args.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(io.dumps({"lp": args.lp, "k": args.k, "value": res.value, "cuts": res.cuts,
                               "solution": res.x}))
    print(io.dumps({"status": res.status, "value": res.value, "rounds": res.rounds,
                    "values": io.solution_to_json(res.x)["values"]}), end="")


def cmd_separate(args):
    x = io.solution_from_json(io.load_json(args.solution))
    cut = separate(CutLP(x.graph, args.k, args.lp), x)
    if cut is None:
        print("none")
    else:
        print(io.dumps({"cut": cut, "value": x.cut_value(cut.mask)}), end="")


def cmd_construct(args):
    _emit(args, io.dumps(construct_fibonacci(args.t)))


def cmd_verify(args):
    x = io.solution_from_json(io.load_json(args.solution))
    result = verify_extreme(x, args.k)
    print(io.dumps(result.summary()), end="")
    if not result.ok:
        raise DomainFailure(result.message)


def cmd_enumerate(args):
    kwargs = {}
    if args.audit:
        kwargs = {"min_support_degree": 2, "vertex_connectivity": 0}
    points = enumerate_extreme_points(args.n, args.min_denominator, args.min_degree, workers=args.workers, **kwargs)
    _emit(args, io.dumps([{"stats": _stats_dict(p.stats), "solution": p.solution} for p in points]))


def _stats_dict(s):
    return {"fractionality": s.fractionality, "denominator": s.denominator,
            "max_support_degree": s.max_support_degree, "n": s.n, "support_edges": s.support_edges}


def cmd_stats(args):
    x = io.solution_from_json(io.load_json(args.solution))
    print(io.dumps(_stats_dict(stats(x))), end="")


def cmd_gap(args):
    x = io.solution_from_json(io.load_json(args.solution))
    res = domination_gap(x)
    if args.combination:
        print(io.dumps({"t": res.t, "combination": [{"cycle": list(c.cycle), "weight": mu}
                                                     for c, mu in res.combination]}), end="")
    else:
        print(fraction_str(res.t))


def cmd_lift(args):
    x = io.solution_from_json(io.load_json(args.solution))
    y = directed_face_extreme(x, seed=args.seed) if args.face else lift_to_directed(x)
    _emit(args, io.dumps(y))


def cmd_reduce(args):
    data = io.load_json(args.instance)
    if args.which == "pcot-to-kecss":
        g = kecss_from_pcot(io.pcot_from_json(data), args.k, args.simple)
        _emit(args, io.dumps(g))
    else:
        inst = setcover_to_pcot(io.setcover_from_json(data))
        _emit(args, io.dumps(io.pcot_to_json(inst)))


def cmd_convert(args):
    g = io.load_graph(args.graph)
    ms = io.multiset_from_json(io.load_json(args.multiset))
    for i in ms:
        if not 0 <= i < g.m:
            raise io.FormatError(f"{args.multiset}: multiset edge id {i} is not an edge of the graph")
    out = ecsm_to_ecss(g, ms)
    body = io.multiset_to_json(out)
    body["cost"] = multiset_cost(g, out)
    body["input_cost"] = multiset_cost(g, ms)
    _emit(args, io.dumps(body))


def cmd_split(args):
    g = io.load_graph(args.graph)
    res = split_search(g, args.a, args.b)
    body = res.summary()
    if res.feasible:
        body["verified"] = verify_split(g, res, args.a, args.b)
    print(io.dumps(body), end="")


def cmd_split_bound(args):
    print(fraction_str(splitting_gap_bound(args.c, args.k, args.t, args.n)))


def cmd_report(args):
    _emit(args, io.dumps(build_report(max_t=args.max_t, enum_n=args.enum_n)))


def build_parser():
    p = argparse.ArgumentParser(prog="cutgap", description="Exact cut LPs, subtour extreme points and reductions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a cut LP by cutting planes")
    s.add_argument("--lp", choices=[UNBOUNDED, BOUNDED], default=UNBOUNDED,
                   help="nk: cut constraints only; nkb: plus degree equalities")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--graph", required=True)
    s.add_argument("--certificate", help="write the final cuts and basic solution here")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("separate", help="find a violated cut")
    s.add_argument("--solution", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--lp", choices=[UNBOUNDED, BOUNDED], default=UNBOUNDED)
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("construct", help="Fibonacci extreme point")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="certify or refute extremeness")
    s.add_argument("--solution", required=True)
    s.add_argument("--k", type=int, default=2)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="small extreme points up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--min-denominator", type=int)
    s.add_argument("--min-degree", type=int)
    s.add_argument("--audit", action="store_true", help="drop the degree-3 and 3-connectivity filters")
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("stats", help="fractionality, denominator and degree")
    s.add_argument("--solution", required=True)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("gap", help="domination gap against Hamiltonian cycles")
    s.add_argument("--solution", required=True)
    s.add_argument("--combination", action="store_true")
    s.set_defaults(func=cmd_gap)

    s = sub.add_parser("lift", help="symmetric directed lift, or an extreme point of the lifted face")
    s.add_argument("--solution", required=True)
    s.add_argument("--face", action="store_true")
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("reduce", help="reduction builders")
    s.add_argument("which", choices=["pcot-to-kecss", "setcover-to-pcot"])
    s.add_argument("--instance", required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--simple", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("convert", help="2-ECSM to 2-ECSS")
    s.add_argument("which", choices=["ecsm-to-ecss"])
    s.add_argument("--graph", required=True)
    s.add_argument("--multiset", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("split", help="partition into a- and b-edge-connected parts")
    s.add_argument("--graph", required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("split-bound", help="cost ratio from the splitting hypothesis")
    for name in ("c", "k", "t", "n"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.set_defaults(func=cmd_split_bound)

    s = sub.add_parser("report", help="regenerate the regression table")
    s.add_argument("--max-t", type=int, default=6)
    s.add_argument("--enum-n", type=int, default=7)
    s.add_argument("--out")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors this way
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except io.FormatError as exc:
        print(f"cutgap: error: {exc}", file=sys.stderr)
        return 2
    except DomainFailure as exc:
        print(f"cutgap: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"cutgap: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
