"""Command-line surface.

Subcommands: certify, eta, gamma-hat, brute-force, gen, mis. Every
command prints a human-readable summary and, with --json, a machine-
readable report document. Exit codes: 0 success (certify: certified and
verified), 1 not certified, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .certify import (
    CertifyConfig,
    brute_force_ip,
    certify,
)
from .goodness import (
    beta_bar,
    eta_j,
    gamma_hat_closed_form,
    gamma_hat_exact,
    s_star as compute_s_star,
)
from .instance import (
    InstanceError,
    ParseError,
    Weights,
    ZeroOneInstance,
    format_instance,
    from_independent_set,
    mis_recover,
    parse_graph,
    parse_instance,
    random_instance,
    to_standard_form,
)

SCHEMA_VERSION = "1"


def _sig(x):
    """Round floats to 12 significant digits for JSON output."""
    if x is None:
        return None
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        return float(f"{x:.12g}")
    return x


def _emit(doc: dict, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_instance(args):
    try:
        with open(args.input, encoding="utf-8") as fh:
            inst, file_weights = parse_instance(fh.read())
    except OSError as exc:
        raise SystemExit2(f"cannot read {args.input}: {exc.strerror}")
    weights = file_weights
    if getattr(args, "weights", None):
        try:
            vals = [float(t) for t in args.weights.split(",")]
        except ValueError:
            raise SystemExit2(f"bad --weights list {args.weights!r}")
        if len(vals) != inst.n:
            raise SystemExit2(f"--weights needs {inst.n} entries")
        weights = Weights(c=np.array(vals))
    return inst, weights


class SystemExit2(Exception):
    """Input error; mapped to exit code 2."""


def _instance_doc(inst: ZeroOneInstance) -> dict:
    return {"m": inst.m, "n": inst.n, "digest": inst.digest()}


def _report_doc(inst, cert, timings) -> dict:
    report = cert.final_report
    sol = cert.lp_solution
    n = inst.n
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": _instance_doc(inst),
        "beta_bar": _sig(report.beta_bar) if report else None,
        "beta_used": _sig(report.beta_used) if report else None,
        "eta_per_column": [_sig(v) for v in report.eta_per_column]
        if report
        else [],
        "eta1": _sig(report.eta1) if report else None,
        "s_star": report.s_star if report else None,
        "eta_s_bound": _sig(report.eta_s_bound) if report else None,
        "gamma_hat": _sig(report.gamma_hat) if report else None,
        "threshold": _sig(report.threshold) if report else None,
        "certified": cert.certified,
        "case": cert.final_case.value if cert.final_case else None,
        "weights": [_sig(float(v)) for v in cert.final_weights.c],
        "lp": {
            "x": [_sig(float(v)) for v in sol.x[:n]],
            "y": [_sig(float(v)) for v in sol.x[n:]],
            "value": _sig(sol.value),
        }
        if sol is not None and sol.x is not None
        else None,
        "recovered": [int(v) for v in cert.recovered]
        if cert.recovered is not None
        else None,
        "brute_force": {
            "value": _sig(
                float(cert.brute_force_value)
                if cert.brute_force_value is not None
                else None
            ),
            "optima_count": cert.brute_force_optima_count,
            "verified": cert.brute_force_verified,
        },
        "iterations": [
            {
                "weights": [_sig(float(v)) for v in w.c],
                "eta1": _sig(rep.eta1),
                "s_star": rep.s_star,
                "eta_s_bound": _sig(rep.eta_s_bound),
                "threshold": _sig(rep.threshold),
                "certified": rep.certified,
                "case": case.value if case else None,
            }
            for (w, rep, case) in cert.iterations
        ],
        "discrepancies": list(cert.discrepancies),
        "timings_ms": {k: _sig(v) for k, v in timings.items()},
    }
    return doc


def _config_from(args) -> CertifyConfig:
    strategy = (
        "seeded-random" if getattr(args, "strategy", "even") == "random"
        else "deterministic"
    )
    return CertifyConfig(
        beta_override=getattr(args, "beta", None),
        max_weight_iterations=getattr(args, "max_iters", 10),
        seed=getattr(args, "seed", 0),
        unique_tol=getattr(args, "tol", None) or 1e-7,
        weight_strategy=strategy,
        brute_force_verify=False if getattr(args, "no_verify", False) else None,
    )


def cmd_certify(args) -> int:
    inst, weights = _load_instance(args)
    t0 = time.perf_counter()
    cert = certify(inst, _config_from(args), weights=weights)
    timings = {"certify": (time.perf_counter() - t0) * 1000.0}
    doc = _report_doc(inst, cert, timings)
    lines = [
        f"instance: m={inst.m} n={inst.n}",
        f"certified: {cert.certified}",
        f"case: {doc['case']}",
        f"eta1: {doc['eta1']}  s_star: {doc['s_star']}  "
        f"bound: {doc['eta_s_bound']}  threshold: {doc['threshold']}",
        f"weights: {doc['weights']}",
        f"lp x: {doc['lp']['x'] if doc['lp'] else None}",
        f"recovered: {doc['recovered']}",
        f"brute_force: {doc['brute_force']}",
    ]
    for note in cert.discrepancies:
        lines.append(f"note: {note}")
    _emit(doc, args.json, lines)
    if cert.certified and cert.brute_force_verified is not False:
        return 0
    return 1


def cmd_eta(args) -> int:
    inst, weights = _load_instance(args)
    sf = to_standard_form(inst)
    c = weights if weights is not None else Weights(c=np.ones(inst.n))
    bb = beta_bar(sf, c)
    beta = args.beta if args.beta is not None else bb
    t0 = time.perf_counter()
    etas = [eta_j(sf, c, beta, j)[0] for j in range(inst.n)]
    eta1 = max(etas)
    star = compute_s_star(sf, c, beta)
    timings = {"eta": (time.perf_counter() - t0) * 1000.0}
    threshold = 0.5 * float(np.min(c.c))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": _instance_doc(inst),
        "beta_bar": _sig(bb),
        "beta_used": _sig(beta),
        "eta_per_column": [_sig(v) for v in etas],
        "eta1": _sig(eta1),
        "s_star": star,
        "threshold": _sig(threshold),
        "timings_ms": {k: _sig(v) for k, v in timings.items()},
    }
    lines = [
        f"beta_bar: {_sig(bb)}  beta_used: {_sig(beta)}",
        f"eta_per_column: {[_sig(v) for v in etas]}",
        f"eta1: {_sig(eta1)}  s_star: {star}  threshold: {_sig(threshold)}",
    ]
    _emit(doc, args.json, lines)
    return 0


def cmd_gamma_hat(args) -> int:
    inst, weights = _load_instance(args)
    sf = to_standard_form(inst)
    c = weights if weights is not None else Weights(c=np.ones(inst.n))
    beta = args.beta if args.beta is not None else beta_bar(sf, c)
    s = args.s if args.s is not None else 1
    t0 = time.perf_counter()
    exact = gamma_hat_exact(sf, c, beta, s)
    closed = gamma_hat_closed_form(sf, c, beta)
    timings = {"gamma_hat": (time.perf_counter() - t0) * 1000.0}
    if s >= 1 and abs(exact - closed) > 1e-8:
        raise SystemExit2(
            f"gamma-hat disagreement: exact {exact!r} vs closed form {closed!r}"
        )
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": _instance_doc(inst),
        "beta_used": _sig(beta),
        "s": s,
        "gamma_hat_exact": _sig(exact),
        "gamma_hat_closed_form": _sig(closed),
        "timings_ms": {k: _sig(v) for k, v in timings.items()},
    }
    _emit(
        doc,
        args.json,
        [f"gamma_hat: exact={_sig(exact)} closed_form={_sig(closed)}"],
    )
    return 0


def cmd_brute_force(args) -> int:
    inst, _ = _load_instance(args)
    t0 = time.perf_counter()
    value, optima = brute_force_ip(inst)
    timings = {"brute_force": (time.perf_counter() - t0) * 1000.0}
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": _instance_doc(inst),
        "brute_force": {
            "value": _sig(float(value)),
            "optima_count": len(optima),
        },
        "timings_ms": {k: _sig(v) for k, v in timings.items()},
    }
    _emit(doc, args.json, [f"value: {value}  optima: {len(optima)}"])
    return 0


def cmd_gen(args) -> int:
    inst = random_instance(args.m, args.n, args.seed, args.max_entry)
    text = format_instance(inst)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_mis(args) -> int:
    try:
        with open(args.graph, encoding="utf-8") as fh:
            vertex_count, edges = parse_graph(fh.read())
    except OSError as exc:
        raise SystemExit2(f"cannot read {args.graph}: {exc.strerror}")
    inst, ctx = from_independent_set(vertex_count, edges)
    t0 = time.perf_counter()
    cert = certify(inst, _config_from(args))
    source = "certificate"
    if cert.certified and cert.brute_force_verified is not False:
        x_tilde = cert.recovered
    else:
        # Certification is sufficient-only; fall back to enumeration.
        value, optima = brute_force_ip(inst)
        if math.isinf(value):
            raise SystemExit2("complemented covering instance is infeasible")
        x_tilde = np.array(sorted(optima)[0])
        source = "brute_force"
    timings = {"mis": (time.perf_counter() - t0) * 1000.0}
    indicator = mis_recover(x_tilde, ctx)
    members = [i + 1 for i, v in enumerate(indicator) if v]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": _instance_doc(inst),
        "certified": cert.certified,
        "source": source,
        "independent_set": members,
        "size": len(members),
        "timings_ms": {k: _sig(v) for k, v in timings.items()},
    }
    _emit(
        doc,
        args.json,
        [
            f"independent set (size {len(members)}): {members}",
            f"source: {source} (certified={cert.certified})",
        ],
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlpcert",
        description=(
            "Certify exact solvability of a nonnegative 0-1 covering "
            "program by a weighted LP relaxation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="instance file")
        p.add_argument("--beta", type=float, default=None,
                       help="override the dual-radius beta_bar")
        p.add_argument("--weights", default=None,
                       help="comma-separated weights, overrides the file's c line")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("certify", help="run the full adjust-and-certify loop")
    common(p)
    p.add_argument("--max-iters", type=int, default=10)
    p.add_argument("--tol", type=float, default=None, help="uniqueness tolerance")
    p.add_argument("--strategy", choices=("even", "random"), default="even")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("eta", help="per-column residual bounds and s_star")
    common(p)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("gamma-hat", help="exact and closed-form gamma-hat")
    common(p)
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_gamma_hat)

    p = sub.add_parser("brute-force", help="exhaustive 0-1 optimum")
    common(p)
    p.set_defaults(func=cmd_brute_force)

    p = sub.add_parser("gen", help="write a seeded random instance file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-entry", type=int, default=2)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mis", help="maximum independent set via the certifier")
    p.add_argument("--graph", required=True, help="graph file (p/e lines)")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=10)
    p.add_argument("--strategy", choices=("even", "random"), default="even")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mis)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SystemExit2, ParseError, InstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
