"""
qgrass: command line front end for quiver-grass.

Every subcommand prints its result on stdout in the format chosen with --format; logs and
error messages go to stderr. Exit codes: 0 success, 1 identity violation or mismatch,
2 usage error, 3 resource bound.
"""

import argparse
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from src.config.config import AppConfig, get_config
from src.core.cluster import (
    cc_k_map, cc_of, cluster_var_a11, cluster_var_a21, s_n, u_n_geometric, u_n_recurrence,
    z_n_geometric, z_n_recurrence,
)
from src.core.coefficient_quiver import enumerate_fixed_points
from src.core.errors import IdentityViolation, PreconditionError, ResourceBoundError
from src.core.fq_oracle import count_points, matrix_rep
from src.core.hom_basis import cell_dimension, cell_dimension_recursive, fixed_point_k
from src.core.invariants import (
    dimension, euler_char, euler_char_sum, is_smooth, poincare,
    smooth_part_euler, strata, stratum_euler_exact,
)
from src.core.laurent import LaurentPoly
from src.core.selftest import run_selftest
from src.models.models import DimVector, GradedPoly, GrassID, Indecomposable, Kind, OutputEnvelope, RepDescriptor
from src.observability.logging_setup import setup_logging
from src.observability.observability import initialize_tracing, timed
from src.tools.render import envelope, render

logger = logging.getLogger('quiver_grass.cli')

Outcome = Tuple[OutputEnvelope, List[str], Optional[List[list]], int]

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


def dim_vector(text: str) -> DimVector:
    """Strict ``e1,e2`` parsing for argparse."""
    if not re.fullmatch(r"\d+,\d+", text):
        raise argparse.ArgumentTypeError(f"expected E1,E2 with nonnegative integers, got {text!r}")
    e1, e2 = (int(x) for x in text.split(","))
    return DimVector(d1=e1, d2=e2)


def positive_int(text: str) -> int:
    if not re.fullmatch(r"\d+", text) or int(text) < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(text)


def nonnegative_int(text: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return int(text)


def _indecomposable(kind: str, n: int, config: AppConfig) -> Indecomposable:
    if n > config.max_rank:
        raise PreconditionError(f"rank {n} exceeds --max-rank {config.max_rank}")
    return Indecomposable(kind=Kind(kind), rank=n)


def _e_list(e: DimVector) -> List[int]:
    return list(e.as_tuple())


# subcommands

def cmd_poincare(args, config: AppConfig) -> Outcome:
    m = _indecomposable(args.type, args.n, config)
    gid = GrassID(ambient=m, e=args.e)
    poly = poincare(gid)
    chi = euler_char(gid)
    dim = None
    if not poly.is_zero:
        dim = dimension(gid) if m.kind is Kind.REGULAR else poly.degree
    result = {"coefficients": poly.to_list(), "euler_characteristic": chi, "dimension": dim}
    plain = [str(gid), f"coefficients: {poly.to_list()}", f"euler_characteristic: {chi}", f"dimension: {dim}"]
    params = {"type": args.type, "n": args.n, "e": _e_list(args.e)}
    return envelope("poincare", params, result), plain, None, EXIT_OK


def cmd_euler(args, config: AppConfig) -> Outcome:
    if args.module is not None:
        rep = RepDescriptor.parse(args.module)
        params = {"module": rep.label, "e": _e_list(args.e)}
    else:
        if args.type is None or args.n is None:
            raise PreconditionError("euler needs either -m DESCRIPTOR or both -t and -n")
        rep = RepDescriptor.of(_indecomposable(args.type, args.n, config))
        params = {"type": args.type, "n": args.n, "e": _e_list(args.e)}
    chi = euler_char_sum(rep, args.e)
    plain = [f"Gr_{args.e}({rep.label})", f"euler_characteristic: {chi}"]
    return envelope("euler", params, {"euler_characteristic": chi}), plain, None, EXIT_OK


def cmd_cells(args, config: AppConfig) -> Outcome:
    m = _indecomposable("R", args.n, config)
    rows, plain = [], [f"cells of {GrassID(ambient=m, e=args.e)}"]
    disagreements = []
    for point in enumerate_fixed_points(m, args.e):
        direct = cell_dimension(m, point)
        recursive = cell_dimension_recursive(args.n, point.summands)
        if direct != recursive:
            disagreements.append(point.label)
        rows.append({"s1": list(point.s1), "s2": list(point.s2), "summands": point.label,
                     "dim_hom": direct, "dim_recursive": recursive})
        plain.append(f"S1={list(point.s1)} S2={list(point.s2)}  {point.label}  dim={direct} (recursive {recursive})")
    assembled = sum((GradedPoly.monomial(r["dim_hom"]) for r in rows), GradedPoly.zero())
    closed = poincare(GrassID(ambient=m, e=args.e))
    plain.append(f"poincare: {assembled.to_list()}")
    result = {"rows": rows, "poincare": assembled.to_list(), "closed_form": closed.to_list()}
    table = [["s1", "s2", "summands", "dim_hom", "dim_recursive"]] + [
        [" ".join(map(str, r["s1"])), " ".join(map(str, r["s2"])), r["summands"], r["dim_hom"], r["dim_recursive"]]
        for r in rows
    ]
    env = envelope("cells", {"n": args.n, "e": _e_list(args.e)}, result)
    if disagreements or assembled != closed:
        plain.append("MISMATCH")
        logger.error(f"cell dimensions disagree at {disagreements or 'the assembled polynomial'}")
        return env, plain, table, EXIT_VIOLATION
    return env, plain, table, EXIT_OK


def cmd_fixed_points(args, config: AppConfig) -> Outcome:
    m = _indecomposable(args.type, args.n, config)
    rows, plain = [], [f"fixed points of {GrassID(ambient=m, e=args.e)}"]
    for point in enumerate_fixed_points(m, args.e):
        row: Dict[str, Any] = {"s1": list(point.s1), "s2": list(point.s2), "summands": point.label}
        if m.kind is Kind.REGULAR:
            row["k"] = fixed_point_k(args.n, point)
        rows.append(row)
        plain.append(f"S1={row['s1']} S2={row['s2']}  {point.label}" + (f"  K={row['k']}" if "k" in row else ""))
    plain.append(f"count: {len(rows)}")
    header = ["s1", "s2", "summands"] + (["k"] if m.kind is Kind.REGULAR else [])
    table = [header] + [
        [" ".join(map(str, r["s1"])), " ".join(map(str, r["s2"])), r["summands"]] + ([r["k"]] if "k" in r else [])
        for r in rows
    ]
    params = {"type": args.type, "n": args.n, "e": _e_list(args.e)}
    return envelope("fixed-points", params, {"points": rows, "count": len(rows)}), plain, table, EXIT_OK


def cmd_strata(args, config: AppConfig) -> Outcome:
    m = _indecomposable("R", args.n, config)
    gid = GrassID(ambient=m, e=args.e)
    layers = []
    plain = [f"strata of {gid}"]
    for k, stratum in strata(gid):
        entry = {"k": k, "ambient": stratum.ambient.label, "e": _e_list(stratum.e),
                 "euler_characteristic": euler_char(stratum), "exact_euler_characteristic": stratum_euler_exact(gid, k)}
        layers.append(entry)
        plain.append(f"X_{k} = {stratum}  chi={entry['euler_characteristic']}  chi(K={k})={entry['exact_euler_characteristic']}")
    smooth = smooth_part_euler(gid)
    nonempty = not poincare(gid).is_zero
    result = {"strata": layers, "smooth_part_euler": smooth, "smooth": is_smooth(gid) if nonempty else None}
    plain += [f"smooth_part_euler: {smooth}", f"smooth: {result['smooth']}"]
    table = [["k", "ambient", "e", "euler_characteristic", "exact_euler_characteristic"]] + [
        [x["k"], x["ambient"], ",".join(map(str, x["e"])), x["euler_characteristic"], x["exact_euler_characteristic"]]
        for x in layers
    ]
    return envelope("strata", {"n": args.n, "e": _e_list(args.e)}, result), plain, table, EXIT_OK


def cmd_count_fq(args, config: AppConfig) -> Outcome:
    m = _indecomposable(args.type, args.n, config)
    with timed(f"count-fq {m} e={args.e} q={args.q}"):
        count = count_points(matrix_rep(m, args.q), args.e, exhaustive=args.exhaustive,
                             jobs=config.jobs, bounds=config.oracle)
    expected = poincare(GrassID(ambient=m, e=args.e)).evaluate(args.q)
    verdict = "MATCH" if count == expected else "MISMATCH"
    params = {"type": args.type, "n": args.n, "e": _e_list(args.e), "q": args.q, "exhaustive": args.exhaustive}
    result = {"count": count, "poincare_at_q": expected, "verdict": verdict}
    plain = [f"count: {count}", f"poincare_at_q: {expected}", verdict]
    return envelope("count-fq", params, result), plain, None, EXIT_OK if count == expected else EXIT_VIOLATION


def _laurent_result(p: LaurentPoly) -> Dict[str, Any]:
    return {"text": p.to_text(), "terms": p.to_terms()}


def _compare(name: str, params: Dict[str, Any], recurrence: LaurentPoly, geometric: LaurentPoly) -> Outcome:
    equal = recurrence == geometric
    verdict = "EQUAL" if equal else "NOT EQUAL"
    result = {"recurrence": _laurent_result(recurrence), "geometric": _laurent_result(geometric), "verdict": verdict}
    plain = [recurrence.to_text()] + ([] if equal else [geometric.to_text()]) + [verdict]
    return envelope(name, params, result), plain, None, EXIT_OK if equal else EXIT_VIOLATION


def cmd_cluster(args, config: AppConfig) -> Outcome:
    bound = config.cluster_bound
    which = args.cluster_command
    if which == "var":
        p = cluster_var_a21(args.k, bound) if args.a21 else cluster_var_a11(args.k, bound)
        params = {"k": args.k, "type": "A21" if args.a21 else "A11"}
        return envelope("cluster var", params, _laurent_result(p)), [p.to_text()], None, EXIT_OK
    if which == "z":
        return _compare("cluster z", {"n": args.n}, z_n_recurrence(args.n, bound), z_n_geometric(args.n, bound))
    if which == "u":
        return _compare("cluster u", {"n": args.n}, u_n_recurrence(args.n, bound), u_n_geometric(args.n, bound))
    if which == "s":
        p = s_n(args.n, bound)
        return envelope("cluster s", {"n": args.n}, _laurent_result(p)), [p.to_text()], None, EXIT_OK
    # cc
    if args.module is not None:
        rep = RepDescriptor.parse(args.module)
        params: Dict[str, Any] = {"module": rep.label}
    else:
        if args.type is None or args.n is None:
            raise PreconditionError("cluster cc needs either -m DESCRIPTOR or both -t and -n")
        rep = RepDescriptor.of(_indecomposable(args.type, args.n, config))
        params = {"type": args.type, "n": args.n}
    if args.level is None:
        p = cc_of(rep)
    else:
        regulars = rep.of_kind(Kind.REGULAR)
        if len(rep.summands) != 1 or not regulars:
            raise PreconditionError("--level needs a single regular indecomposable R_n")
        p = cc_k_map(regulars[0].rank, args.level, bound)
        params["level"] = args.level
    return envelope("cluster cc", params, _laurent_result(p)), [p.to_text()], None, EXIT_OK


def cmd_selftest(args, config: AppConfig) -> Outcome:
    records = run_selftest(config, quick=args.quick)
    failed = [r for r in records if not r.passed]
    plain = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.criterion:>2} {r.name} ({r.elapsed:.2f}s)  {r.detail}"
        for r in records
    ]
    plain.append(f"{len(records) - len(failed)}/{len(records)} criteria passed")
    result = {"records": [r.model_dump(exclude={"elapsed"}) for r in records], "passed": not failed}
    table = [["criterion", "name", "passed", "elapsed", "detail"]] + [
        [r.criterion, r.name, r.passed, f"{r.elapsed:.3f}", r.detail] for r in records
    ]
    env = envelope("selftest", {"quick": args.quick}, result)
    return env, plain, table, EXIT_VIOLATION if failed else EXIT_OK


# parser

def _add_rep_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("-t", "--type", choices=["P", "R", "I"], required=required)
    parser.add_argument("-n", type=nonnegative_int, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgrass", description="Kronecker quiver Grassmannians")
    parser.add_argument("--format", choices=["json", "plain", "csv"], default=None)
    parser.add_argument("--max-rank", type=nonnegative_int, default=None)
    parser.add_argument("--jobs", type=positive_int, default=None)
    parser.add_argument("--debug", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", help="Poincare polynomial, Euler characteristic and dimension")
    _add_rep_flags(p)
    p.add_argument("-e", type=dim_vector, required=True)
    p.set_defaults(handler=cmd_poincare)

    p = sub.add_parser("euler", help="Euler characteristic, also of direct sums")
    _add_rep_flags(p, required=False)
    p.add_argument("-m", "--module", default=None, help="direct sum such as P2+R1+I0 or 2*P1")
    p.add_argument("-e", type=dim_vector, required=True)
    p.set_defaults(handler=cmd_euler)

    p = sub.add_parser("cells", help="fixed points of Gr_e(R_n) with their cell dimensions")
    p.add_argument("-n", type=nonnegative_int, required=True)
    p.add_argument("-e", type=dim_vector, required=True)
    p.set_defaults(handler=cmd_cells)

    p = sub.add_parser("fixed-points", help="torus fixed points and their summands")
    _add_rep_flags(p)
    p.add_argument("-e", type=dim_vector, required=True)
    p.set_defaults(handler=cmd_fixed_points)

    p = sub.add_parser("strata", help="stratification of Gr_e(R_n) by the K-invariant")
    p.add_argument("-n", type=nonnegative_int, required=True)
    p.add_argument("-e", type=dim_vector, required=True)
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser("count-fq", help="count points over F_q and compare with P(q)")
    _add_rep_flags(p)
    p.add_argument("-e", type=dim_vector, required=True)
    p.add_argument("-q", type=positive_int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="test every (N1, N2) pair")
    p.set_defaults(handler=cmd_count_fq)

    cluster = sub.add_parser("cluster", help="cluster variables and canonical basis elements")
    cluster.set_defaults(handler=cmd_cluster)
    csub = cluster.add_subparsers(dest="cluster_command", required=True)
    c = csub.add_parser("var", help="cluster variable x_k")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--a21", action="store_true", help="type A_2^(1) instead of A_1^(1)")
    for name, text in (("z", "z_n, recurrence and geometric"), ("u", "u_n, recurrence and geometric"), ("s", "s_n = CC(R_n)")):
        c = csub.add_parser(name, help=text)
        c.add_argument("-n", type=nonnegative_int, required=True)
    c = csub.add_parser("cc", help="Caldero-Chapoton map of a Kronecker representation")
    _add_rep_flags(c, required=False)
    c.add_argument("-m", "--module", default=None)
    c.add_argument("--level", type=nonnegative_int, default=None, help="CC^(k): only points with K = k")

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _effective_config(args) -> AppConfig:
    base = get_config()
    update: Dict[str, Any] = {}
    if args.format is not None:
        update["output_format"] = args.format
    if args.max_rank is not None:
        update["max_rank"] = args.max_rank
    if args.jobs is not None:
        update["jobs"] = args.jobs
    if args.debug:
        update["debug"] = True
    return base.model_copy(update=update)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = _effective_config(args)
    except ValidationError as e:
        print(f"error: invalid configuration: {e.errors()[0]['loc']} {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(debug_mode=config.debug, log_file=config.log_file)
    initialize_tracing()

    handler: Callable[..., Outcome] = args.handler
    try:
        env, plain, rows, code = handler(args, config)
    except IdentityViolation as e:
        logger.info(f"{args.command}: identity violation", exc_info=config.debug)
        print(f"error: identity violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except ResourceBoundError as e:
        logger.info(f"{args.command}: resource bound", exc_info=config.debug)
        print(f"error: resource bound exceeded: {e}", file=sys.stderr)
        return EXIT_BOUND
    except (PreconditionError, ValidationError) as e:
        logger.info(f"{args.command}: bad input", exc_info=config.debug)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(config.output_format, env, plain, rows))
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
