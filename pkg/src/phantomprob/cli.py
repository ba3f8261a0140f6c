"""Command-line front end.

Subcommands:

    eval EXPR                     evaluate a phantom expression
    measure validate FILE         check a measure document against the axioms
    dist --kind ... --stat ...    statistics of a named distribution
    simulate --law ...            WLLN / CLT / SLLN Monte-Carlo runs
    inequality --which ...        Markov / Chebyshev bound checks

The PHANTOM_SEED environment variable, when set, overrides --seed.
Machine-readable output is available with --json; CSV output is UTF-8
with a header row and LF line endings.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import distributions as dist_mod
from .expr import ExprSyntaxError, eval_text, render
from .limits import (
    Selection,
    SimConfig,
    chebyshev_bound,
    clt_experiment,
    markov_bound,
    normal_cdf,
    slln_experiment,
    wlln_experiment,
)
from .measure import Mode, PhantomMeasure, validate
from .randvar import cdf_continuous, cdf_discrete, mean, mgf, moment, std_dev, variance
from .randvar import ContinuousPRV, DiscretePRV
from .ring import LEX, Phantom, PhantomError

_EXIT_OK = 0
_EXIT_FINDING = 1
_EXIT_SCHEMA = 2


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


# -- eval -----------------------------------------------------------------------


def _cmd_eval(args) -> int:
    try:
        _emit(eval_text(args.expression))
        return _EXIT_OK
    except ExprSyntaxError as e:
        _emit(f"syntax error: {e}")
        return _EXIT_FINDING
    except (PhantomError, ValueError) as e:
        _emit(f"error: {type(e).__name__}: {e}")
        return _EXIT_FINDING


# -- measure validate -------------------------------------------------------------


def _load_measure_doc(path: str) -> PhantomMeasure:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    mode_text = doc.get("mode", "strict")
    if mode_text not in ("strict", "lenient"):
        raise ValueError(f"mode must be 'strict' or 'lenient', got {mode_text!r}")
    outcomes = doc.get("outcomes")
    if not isinstance(outcomes, list) or not outcomes:
        raise ValueError("'outcomes' must be a nonempty list")
    weights = {}
    for item in outcomes:
        if not isinstance(item, dict) or not {"label", "re", "ph"} <= set(item):
            raise ValueError("each outcome needs 'label', 're', and 'ph'")
        label = str(item["label"])
        if label in weights:
            raise ValueError(f"duplicate label {label!r}")
        re_v, ph_v = float(item["re"]), float(item["ph"])
        if not (math.isfinite(re_v) and math.isfinite(ph_v)):
            raise ValueError(f"non-finite weight for {label!r}")
        weights[label] = Phantom(re_v, ph_v)
    mode = Mode.STRICT if mode_text == "strict" else Mode.LENIENT
    return PhantomMeasure.from_dict(weights, mode)


def _cmd_measure(args) -> int:
    if args.action != "validate":
        _emit(f"unknown measure action {args.action!r}")
        return _EXIT_FINDING
    try:
        m = _load_measure_doc(args.file)
    except (OSError, ValueError, json.JSONDecodeError) as e:
        _emit(f"schema error: {e}")
        return _EXIT_SCHEMA
    report = validate(m)
    if args.json:
        _emit(json.dumps({"valid": report.valid, "violations": list(report.violations)}))
    else:
        _emit("valid" if report.valid else "invalid")
        for v in report.violations:
            _emit(f"  {v}")
    return _EXIT_OK if report.valid else _EXIT_FINDING


# -- dist --------------------------------------------------------------------------


def _spec_from_args(args) -> dist_mod.DistSpec:
    kind = args.kind
    if kind == "bernoulli":
        return dist_mod.Bernoulli(Phantom(args.p_re, args.p_ph))
    if kind == "binomial":
        return dist_mod.Binomial(args.trials, Phantom(args.p_re, args.p_ph))
    if kind == "geometric":
        return dist_mod.Geometric(Phantom(args.p_re, args.p_ph), args.cutoff)
    if kind == "poisson":
        return dist_mod.Poisson(Phantom(args.lambda_re, args.lambda_ph), args.cutoff)
    if kind == "exponential":
        return dist_mod.Exponential(Phantom(args.lambda_re, args.lambda_ph))
    if kind == "normal":
        return dist_mod.Normal(
            Phantom(args.mu_re, args.mu_ph), Phantom(args.sigma_re, args.sigma_ph)
        )
    if kind == "stdnormal":
        return dist_mod.StdNormal()
    raise dist_mod.BadParameter(f"unknown kind {kind!r}")


def _parse_point(text: str) -> Phantom:
    parts = text.split(",")
    if len(parts) == 1:
        return Phantom(float(parts[0]), 0.0)
    if len(parts) == 2:
        return Phantom(float(parts[0]), float(parts[1]))
    raise ValueError(f"expected 'a' or 'a,b', got {text!r}")


def _cmd_dist(args) -> int:
    try:
        spec = _spec_from_args(args)
        x = dist_mod.build(spec)
        stat = args.stat
        if stat == "mean":
            value = mean(x)
        elif stat == "var":
            value = variance(x)
        elif stat == "std":
            value = std_dev(x)
        elif stat.startswith("mgf:"):
            value = mgf(x, _parse_point(stat[4:]))
        elif stat.startswith("cdf:"):
            z = _parse_point(stat[4:])
            if isinstance(x, DiscretePRV):
                value = cdf_discrete(x, z, LEX)
            else:
                value = cdf_continuous(x, z, LEX)
        else:
            _emit(f"unknown stat {stat!r}")
            return _EXIT_FINDING
        if args.check and args.stat in ("mean", "var"):
            cf_mean, cf_var = dist_mod.closed_form_stats(spec)
            want = cf_mean if args.stat == "mean" else cf_var
            tol = 1e-6 if isinstance(x, ContinuousPRV) else 1e-9
            if abs(value.re - want.re) > tol or abs(value.ph - want.ph) > tol:
                _emit(f"mismatch: computed {render(value)}, closed form {render(want)}")
                return _EXIT_FINDING
        if args.json:
            _emit(json.dumps({"re": value.re, "ph": value.ph}))
        else:
            _emit(render(value))
        return _EXIT_OK
    except (PhantomError, ValueError) as e:
        _emit(f"error: {type(e).__name__}: {e}")
        return _EXIT_FINDING


# -- simulate -----------------------------------------------------------------------


_SELECTIONS = {"re": Selection.REAL, "red": Selection.REDUCED, "mid": Selection.MIDPOINT}


def _cmd_simulate(args) -> int:
    seed = args.seed
    env_seed = os.environ.get("PHANTOM_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    try:
        spec = _spec_from_args(args)
        x = dist_mod.build(spec)
        if not isinstance(x, DiscretePRV):
            _emit("error: simulate needs a discrete distribution")
            return _EXIT_FINDING
        cfg = SimConfig(
            seed=seed, reps=args.reps, n=args.n, selection=_SELECTIONS[args.component]
        )
        if args.law == "wlln":
            report = wlln_experiment(x, cfg)
        elif args.law == "clt":
            report = clt_experiment(x, cfg)
        elif args.law == "slln":
            report = slln_experiment(x, cfg, eps=args.eps)
        else:
            _emit(f"unknown law {args.law!r}")
            return _EXIT_FINDING
    except (PhantomError, ValueError) as e:
        _emit(f"error: {type(e).__name__}: {e}")
        return _EXIT_FINDING

    if args.out == "json":
        payload = {
            "law": args.law,
            "seed": seed,
            "n": args.n,
            "reps": args.reps,
            "component": args.component,
            "empirical_mean": report.empirical_mean,
            "target_mean": report.target_mean,
            "deviation": report.deviation,
        }
        if report.ks_statistic is not None:
            payload["ks_statistic"] = report.ks_statistic
        if report.fraction_within is not None:
            payload["fraction_within"] = report.fraction_within
        _emit(json.dumps(payload))
    else:
        lines = []
        if args.law == "clt":
            lines.append("bin,empirical,target")
            for b, emp, target in report.histogram:
                lines.append(f"{b:.12g},{emp:.12g},{target:.12g}")
        else:
            lines.append("n,deviation")
            for n_val, dev in report.per_n_curve:
                lines.append(f"{n_val},{dev:.12g}")
            if not report.per_n_curve:
                lines.append(f"{args.n},{report.deviation:.12g}")
        _emit("\n".join(lines))
    return _EXIT_OK


# -- inequality -----------------------------------------------------------------------


def _cmd_inequality(args) -> int:
    try:
        spec = _spec_from_args(args)
        x = dist_mod.build(spec)
        if not isinstance(x, DiscretePRV):
            _emit("error: inequality checks need a discrete distribution")
            return _EXIT_FINDING
        z = Phantom(args.z_re, args.z_ph)
        if args.which == "markov":
            report = markov_bound(x, z, variant=args.variant)
        elif args.which == "chebyshev":
            report = chebyshev_bound(x, z)
        else:
            _emit(f"unknown inequality {args.which!r}")
            return _EXIT_FINDING
    except (PhantomError, ValueError) as e:
        _emit(f"error: {type(e).__name__}: {e}")
        return _EXIT_FINDING

    def show(v):
        return render(v) if isinstance(v, Phantom) else f"{v:.12g}"

    if args.json:
        def raw(v):
            return {"re": v.re, "ph": v.ph} if isinstance(v, Phantom) else v

        _emit(json.dumps({"lhs": raw(report.lhs), "rhs": raw(report.rhs),
                          "holds": report.holds}))
    else:
        _emit(f"lhs = {show(report.lhs)}")
        _emit(f"rhs = {show(report.rhs)}")
        _emit("holds" if report.holds else "violated")
    return _EXIT_OK if report.holds else _EXIT_FINDING


# -- argument plumbing ------------------------------------------------------------------


def _add_dist_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True,
                   choices=["bernoulli", "binomial", "geometric", "poisson",
                            "exponential", "normal", "stdnormal"])
    p.add_argument("--p-re", type=float, default=0.5)
    p.add_argument("--p-ph", type=float, default=0.0)
    p.add_argument("--n-trials", dest="trials", type=int, default=1)
    p.add_argument("--lambda-re", type=float, default=1.0)
    p.add_argument("--lambda-ph", type=float, default=0.0)
    p.add_argument("--mu-re", type=float, default=0.0)
    p.add_argument("--mu-ph", type=float, default=0.0)
    p.add_argument("--sigma-re", type=float, default=1.0)
    p.add_argument("--sigma-ph", type=float, default=0.0)
    p.add_argument("--cutoff", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phantomprob",
        description="Phantom-number arithmetic and probability calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a phantom expression")
    p_eval.add_argument("expression")
    p_eval.set_defaults(func=_cmd_eval)

    p_measure = sub.add_parser("measure", help="measure document tools")
    p_measure.add_argument("action", choices=["validate"])
    p_measure.add_argument("file")
    p_measure.add_argument("--json", action="store_true")
    p_measure.set_defaults(func=_cmd_measure)

    p_dist = sub.add_parser("dist", help="distribution statistics")
    _add_dist_flags(p_dist)
    p_dist.add_argument("--stat", required=True,
                        help="mean | var | std | mgf:a[,b] | cdf:a[,b]")
    p_dist.add_argument("--check", action="store_true",
                        help="cross-verify against the closed form")
    p_dist.add_argument("--json", action="store_true")
    p_dist.set_defaults(func=_cmd_dist)

    p_sim = sub.add_parser("simulate", help="limit-theorem experiments")
    _add_dist_flags(p_sim)
    p_sim.add_argument("--law", required=True, choices=["wlln", "clt", "slln"])
    p_sim.add_argument("--n", type=int, default=1000)
    p_sim.add_argument("--reps", type=int, default=1)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--component", choices=["re", "red", "mid"], default="re")
    p_sim.add_argument("--eps", type=float, default=0.01)
    p_sim.add_argument("--out", choices=["csv", "json"], default="csv")
    p_sim.set_defaults(func=_cmd_simulate)

    p_ineq = sub.add_parser("inequality", help="tail-bound checks")
    _add_dist_flags(p_ineq)
    p_ineq.add_argument("--which", required=True, choices=["markov", "chebyshev"])
    p_ineq.add_argument("--variant", default="abs_abs",
                        choices=["order", "abs_order", "abs_abs"])
    p_ineq.add_argument("--z-re", type=float, required=True)
    p_ineq.add_argument("--z-ph", type=float, default=0.0)
    p_ineq.add_argument("--json", action="store_true")
    p_ineq.set_defaults(func=_cmd_inequality)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
