"""Command-line entry points.

``chartable``     dump a symmetric-group or wreath-product character table
``loopschur``     evaluate a loop Schur series by a chosen route
``dt-vertex``     evaluate the framed lattice vertex
``gw-vertex-ws``  evaluate the curve-count vertex at the symmetric framing
``verify``        run identity sweeps; exit 0 on pass, 1 on fail, 2 on bad config
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .characters import CharTable
from .exactalg import cyc_field
from .loopschur import (
    hat_monomial_exps,
    hook_content_loop_schur,
    loop_jacobi_trudi,
    q_monomial,
    ssyt_loop_schur,
)
from .partitions import length, n_quotient_inverse
from .vertex import FramingWeights, dt_vertex_framed, gw_sym_vertex_ws, xu_field
from .verifier import (
    check_combident_forms,
    check_gw_symmetry,
    check_reduction,
    check_sym_correspondence,
    check_thm_comb,
    characters_cases,
    default_config,
    det_forms_cases,
    loopschur_cases,
    hurwitz_cases,
    framing_cases,
    report_to_json,
    run_suite,
)


def _partition(text):
    parts = json.loads(text)
    return tuple(int(x) for x in parts)


def _npartition(text):
    comps = json.loads(text)
    return tuple(tuple(int(x) for x in comp) for comp in comps)


def chartable_main(argv=None):
    ap = argparse.ArgumentParser(
        prog="chartable",
        description="Character table of S_d (n=1) or of the wreath product "
                    "of the cyclic group of order n with S_d.",
    )
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--d", type=int, required=True)
    ap.add_argument("--format", choices=["json"], default="json")
    args = ap.parse_args(argv)
    table = CharTable(args.n, args.d)
    json.dump(table.to_json_dict(), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def loopschur_main(argv=None):
    ap = argparse.ArgumentParser(
        prog="loopschur",
        description="Loop Schur series of the diagram attached to an "
                    "n-tuple of partitions (JSON array of arrays).",
    )
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--lambda", dest="lam", type=_npartition, required=True)
    ap.add_argument("--method", choices=["ssyt", "hook", "jt"], default="hook")
    ap.add_argument("--degree", type=int, required=True)
    args = ap.parse_args(argv)
    n, lam, bound = args.n, args.lam, args.degree
    if len(lam) != n:
        ap.error(f"--lambda must have exactly {n} components")
    field = cyc_field(2 * n)
    if args.method == "ssyt":
        series = ssyt_loop_schur(lam, n, bound, field)
    elif args.method == "hook":
        series = hook_content_loop_schur(lam, n, bound, field)
    else:
        lam_bar = n_quotient_inverse(lam, n)
        jt = loop_jacobi_trudi(lam, n, max(1, length(lam_bar)), bound, field)
        series = jt * q_monomial(field, n, hat_monomial_exps(lam_bar, n, sign=-1))
        series = series.truncated(min(Fraction(bound), series.bound))
    json.dump(series.to_json_dict(), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def dt_vertex_main(argv=None):
    ap = argparse.ArgumentParser(
        prog="dt-vertex",
        description="Framed lattice vertex as a truncated q-series.",
    )
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--rho-plus", type=_partition, default=())
    ap.add_argument("--rho-minus", type=_partition, default=())
    ap.add_argument("--lambda", dest="lam", type=_npartition, default=None)
    ap.add_argument("--alpha", default="1,1",
                    help="comma-separated pair of signs, e.g. 1,-1")
    ap.add_argument("--w", required=True,
                    help="comma-separated weights w1,w2,w3 (rationals)")
    ap.add_argument("--degree", type=int, required=True)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    n = args.n
    lam = args.lam if args.lam is not None else ((),) * n
    alpha = tuple(int(a) for a in args.alpha.split(","))
    w1, w2, w3 = (Fraction(x) for x in args.w.split(","))
    weights = FramingWeights(w1, w2, w3, n)
    vs = dt_vertex_framed(args.rho_plus, args.rho_minus, lam, alpha, weights,
                          n, args.degree)
    if args.json:
        json.dump(vs.value.to_json_dict(), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(repr(vs.value) + "\n")
    return 0


def gw_vertex_ws_main(argv=None):
    ap = argparse.ArgumentParser(
        prog="gw-vertex-ws",
        description="Disconnected framed curve-count vertex at the symmetric "
                    "initial framing, as a series in u and x_1..x_(n-1).",
    )
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--tau-plus", type=_partition, default=())
    ap.add_argument("--tau-minus", type=_partition, default=())
    ap.add_argument("--alpha", default="1,1")
    ap.add_argument("--degree", type=int, required=True)
    ap.add_argument("--json", action="store_true", default=True)
    args = ap.parse_args(argv)
    alpha = tuple(int(a) for a in args.alpha.split(","))
    vs = gw_sym_vertex_ws(args.tau_plus, args.tau_minus, alpha, args.n,
                          args.degree, xu_field(args.n))
    json.dump(vs.value.to_json_dict(), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


_VERIFY_TARGETS = ("thm-comb", "sym-corr", "reduction", "loopschur",
                   "characters", "all")


def verify_main(argv=None):
    ap = argparse.ArgumentParser(
        prog="verify",
        description="Run exact identity sweeps and report pass/fail.",
    )
    ap.add_argument("target", choices=_VERIFY_TARGETS)
    ap.add_argument("--json", dest="json_out", metavar="OUT.JSON", default=None)
    ap.add_argument("--config", metavar="CONFIG.JSON", default=None,
                    help="sweep configuration; overrides the default")
    args = ap.parse_args(argv)

    try:
        if args.config is not None:
            with open(args.config) as fh:
                config = json.load(fh)
            if not isinstance(config, dict) or "checks" not in config:
                raise ValueError("config must be an object with a 'checks' list")
        else:
            config = default_config()
        if args.target != "all":
            config = {
                "checks": [c for c in config["checks"]
                           if c["identity"] == args.target]
            }
            if not config["checks"]:
                raise ValueError(f"no checks configured for {args.target!r}")
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return 2

    report = run_suite(config)
    text = report_to_json(report)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text)
    summary = report["summary"]
    for case in report["cases"]:
        if case["status"] != "pass":
            sys.stdout.write(
                f"FAIL {case['identity']} {json.dumps(case['params'], sort_keys=True)}"
                f" witness={json.dumps(case.get('witness'))}\n"
            )
    sys.stdout.write(
        f"{summary['passed']}/{summary['total']} checks passed"
        f" ({summary['failed']} failed, {summary['errors']} errors)\n"
    )
    return 0 if summary["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(verify_main())
