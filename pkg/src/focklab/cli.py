"""Command-line driver with reproducible seeds and machine-readable reports.

Subcommands::

    focklab norm --f "poly: 1" --p 2 --alpha 1 --n 1
    focklab supnorm --f "kernel: alpha=1; w=(1)" --alpha 1
    focklab distance --z "(2)" --w "(0)" --alpha 1
    focklab energy --z "(2)" --alpha 1
    focklab project --f "poly: z1^2" --z "(1+0.5i)" --alpha 1
    focklab gamma --n 3 --x 50
    focklab verify lemma4 --alpha 2 --n 1
    focklab explore conj13 --alpha 1
    focklab family --alpha 1 --n 1

Every run embeds its full configuration in the report; identical argv and
seed produce byte-identical reports up to the ``timestamp`` field.  The
environment variable ``FOCKLAB_SEED`` overrides ``--seed``; ``--config``
loads ``key=value`` defaults (explicit flags win).  Exit codes: 0 success or
suite pass, 1 suite failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .analysis import (
    DistanceParams,
    FockParams,
    coord_energy,
    distance,
    energy,
    incomplete_gamma,
    norm_inf,
    norm_p,
    project,
)
from .dsl import DSLError, format_dsl, parse_complex, parse_dsl
from .integrate import DEFAULT_SAMPLES, DEFAULT_SEED, MCIntegrator, QuadIntegrator
from .verify import SUITES, build_family

__all__ = ["main", "run"]

_EXPLORER_ALIASES = {"13": "conj13", "14": "conj14", "conj13": "conj13", "conj14": "conj14"}

# flags each suite accepts (mapped onto the suite function's keywords)
_SUITE_FLAGS = {
    "lemma1": ["alpha", "n", "p_exponent", "alpha_meas", "beta", "triples", "samples", "seed"],
    "prop2": ["alpha_meas", "beta", "n", "samples", "seed"],
    "lemma3": ["alpha", "n", "pairs", "family_size", "samples", "seed"],
    "lemma4": ["alpha", "n", "points", "seed"],
    "lemma5": ["alpha", "n", "samples", "seed"],
    "thm6": ["alpha", "n", "pairs", "samples", "seed"],
    "thm7": ["alpha", "n", "seed"],
    "thm9": ["p", "alpha", "seed"],
    "thm11": ["p", "alpha", "nderiv", "n", "seed"],
    "cor10": ["p", "alpha", "taylor_degree", "seed"],
    "cor12": ["alpha", "n", "seed"],
    "conj13": ["alpha", "n", "seed"],
    "conj14": ["alpha", "p", "pairs", "n", "samples", "seed"],
}


def _parse_point(text: str) -> np.ndarray:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return np.array([parse_complex(part) for part in text.split(",")])


def _parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return math.inf
    return float(text)


def _integrators(args):
    quad = QuadIntegrator(args.order)
    mc = MCIntegrator(args.samples, args.seed)
    if args.integrator == "quad":
        return [("quad", quad)]
    if args.integrator == "mc":
        return [("mc", mc)]
    return [("quad", quad), ("mc", mc)]


def _value_entry(name, est):
    entry = {
        "name": name,
        "method": est.method,
        "stderr": est.stderr,
        "samples_or_order": est.samples_or_order,
    }
    if isinstance(est.value, complex):
        entry["value"] = {"re": est.value.real, "im": est.value.imag}
    else:
        entry["value"] = est.value if math.isfinite(est.value) else "inf"
    if "error_proxy" in est.extra:
        entry["error_proxy"] = est.extra["error_proxy"]
    return entry


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".focklab-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        lines = ["# " + json.dumps(report.get("config", {}), sort_keys=True)]
        rows = report.get("csv_rows")
        if rows is None:
            rows = [["name", "value", "stderr", "method"]]
            for v in report.get("values", []):
                value = v["value"]
                if isinstance(value, dict):
                    value = complex(value["re"], value["im"])
                rows.append([v["name"], str(value), repr(v["stderr"]), v["method"]])
        lines += [",".join(str(c) for c in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if args.out:
        _atomic_write(args.out, text)
        print(f"report written to {args.out}")
    else:
        sys.stdout.write(text)


def _base_report(args, command: str) -> dict:
    config = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "config") and v is not None}
    for key, value in list(config.items()):
        if isinstance(value, float) and math.isinf(value):
            config[key] = "inf"
    return {
        "command": command,
        "config": config,
        "version": __version__,
        "seed": args.seed,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_norm(args) -> int:
    f = parse_dsl(args.f, args.n)
    report = _base_report(args, "norm")
    values = []
    if math.isinf(args.p):
        res = norm_inf(f, args.alpha)
        values.append({"name": "sup-norm", "value": res.value if math.isfinite(res.value) else "inf",
                       "stderr": 0.0, "method": "grid+golden", "resolution": res.resolution,
                       "samples_or_order": res.resolution.get("radial", 0)})
    else:
        params = FockParams(args.alpha, args.p, args.n)
        for name, integ in _integrators(args):
            values.append(_value_entry(f"norm[{name}]", norm_p(f, params, integ)))
    report["values"] = values
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_supnorm(args) -> int:
    f = parse_dsl(args.f, args.n)
    res = norm_inf(f, args.alpha)
    report = _base_report(args, "supnorm")
    report["values"] = [{
        "name": "sup-norm",
        "value": res.value if math.isfinite(res.value) else "inf",
        "stderr": 0.0,
        "method": "grid+golden",
        "divergent": res.divergent,
        "resolution": res.resolution,
        "argmax": None if res.argmax is None else [str(c) for c in res.argmax],
    }]
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_distance(args) -> int:
    z = _parse_point(args.z)
    w = _parse_point(args.w)
    if args.alpha_meas is not None and args.beta is not None:
        dp = DistanceParams(args.alpha_meas, args.beta, args.p_exponent)
    else:
        base = DistanceParams.canonical(args.alpha)
        dp = DistanceParams(base.alpha_meas, base.beta, args.p_exponent)
    report = _base_report(args, "distance")
    report["values"] = [
        _value_entry(f"distance[{name}]", distance(dp, z, w, integ))
        for name, integ in _integrators(args)
    ]
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_energy(args) -> int:
    z = _parse_point(args.z)
    report = _base_report(args, "energy")
    values = []
    for name, integ in _integrators(args):
        if args.k:
            values.append(_value_entry(f"coord-energy[{name}]",
                                       coord_energy(args.alpha, z, args.k, integ)))
        else:
            values.append(_value_entry(f"energy[{name}]", energy(args.alpha, z, integ)))
    report["values"] = values
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_project(args) -> int:
    f = parse_dsl(args.f, args.n)
    z = _parse_point(args.z)
    report = _base_report(args, "project")
    values = []
    for name, integ in _integrators(args):
        est = project(f, args.alpha, z, integ)
        values.append(_value_entry(f"projection[{name}]", est))
        resid = abs(est.value - f.evaluate(z))
        values.append({"name": f"reproduction-residual[{name}]", "value": resid,
                       "stderr": est.stderr, "method": name,
                       "samples_or_order": est.samples_or_order})
    report["values"] = values
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_gamma(args) -> int:
    value = incomplete_gamma(args.n, args.x)
    report = _base_report(args, "gamma")
    report["values"] = [{"name": f"incomplete-gamma({args.n}, {args.x})", "value": value,
                         "stderr": 0.0, "method": "recurrence", "samples_or_order": args.n}]
    report["verdict"] = "success"
    _emit(report, args)
    return 0


def _cmd_verify(args) -> int:
    suite_id = args.suite
    if suite_id not in SUITES:
        print(f"error: unknown suite {suite_id!r}; known: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return 2
    kwargs = {}
    for flag in _SUITE_FLAGS[suite_id]:
        value = getattr(args, flag, None)
        if value is not None:
            kwargs[flag] = value
    suite_report = SUITES[suite_id](**kwargs)
    report = _base_report(args, f"verify {suite_id}")
    report.update(suite_report.to_dict())
    report["csv_rows"] = None
    if args.format == "csv":
        report["csv_rows"] = suite_report.csv_rows()
    else:
        del report["csv_rows"]
    _emit(report, args)
    if suite_report.verdict == "fail":
        return 1
    return 0


def _cmd_explore(args) -> int:
    cid = _EXPLORER_ALIASES.get(args.conjecture)
    if cid is None:
        print(f"error: unknown conjecture {args.conjecture!r}; use conj13 or conj14",
              file=sys.stderr)
        return 2
    args.suite = cid
    return _cmd_verify(args)


def _cmd_family(args) -> int:
    members = build_family(args.alpha, args.n, args.seed)
    report = _base_report(args, "family")
    report["values"] = [
        {
            "name": m.name,
            "membership": m.membership,
            "sup_norm": m.sup_norm,
            "dsl": format_dsl(m.fn),
            "value": m.sup_norm if m.sup_norm is not None else "",
            "stderr": 0.0,
            "method": "family",
        }
        for m in members
    ]
    report["verdict"] = "success"
    _emit(report, args)
    return 0


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def _add_common(sp, *, alpha=True, n=True):
    if alpha:
        sp.add_argument("--alpha", type=float, default=1.0, help="Gaussian weight parameter")
    if n:
        sp.add_argument("--n", type=int, default=1, help="complex dimension")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    sp.add_argument("--order", type=int, default=None, help="quadrature order per axis")
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Monte Carlo samples")
    sp.add_argument("--integrator", choices=("quad", "mc", "both"), default="quad")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", default=None, help="report file (written atomically)")
    sp.add_argument("--config", default=None, help="key=value defaults file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="focklab",
        description="Weighted entire-function norms, Gaussian-kernel distances, "
                    "and verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"focklab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("norm", help="weighted p-norm of a function")
    sp.add_argument("--f", required=True, help="function text (see the DSL)")
    sp.add_argument("--p", type=_parse_p, default=2.0, help="exponent; 'inf' allowed")
    _add_common(sp)
    sp.set_defaults(func=_cmd_norm)

    sp = sub.add_parser("supnorm", help="weighted sup norm (certified lower bound)")
    sp.add_argument("--f", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_supnorm)

    sp = sub.add_parser("distance", help="kernel-induced distance between two points")
    sp.add_argument("--z", required=True, help="point, e.g. '(1+0.5i, 2)'")
    sp.add_argument("--w", required=True)
    sp.add_argument("--alpha-meas", dest="alpha_meas", type=float, default=None)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--p-exponent", dest="p_exponent", type=float, default=1.0)
    _add_common(sp)
    sp.set_defaults(func=_cmd_distance)

    sp = sub.add_parser("energy", help="growth integral E(z) or a coordinate variant")
    sp.add_argument("--z", required=True)
    sp.add_argument("--k", type=int, default=0, help="coordinate index for the variant (1-based)")
    _add_common(sp)
    sp.set_defaults(func=_cmd_energy)

    sp = sub.add_parser("project", help="kernel projection of a function at a point")
    sp.add_argument("--f", required=True)
    sp.add_argument("--z", required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_project)

    sp = sub.add_parser("gamma", help="upper incomplete gamma (integer order)")
    sp.add_argument("--n", type=int, required=True, help="integer order")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", default=None)
    sp.add_argument("--config", default=None)
    sp.set_defaults(func=_cmd_gamma)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    sp.add_argument("--p", type=_parse_p, default=None)
    sp.add_argument("--alpha-meas", dest="alpha_meas", type=float, default=None)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--p-exponent", dest="p_exponent", type=float, default=None)
    sp.add_argument("--triples", type=int, default=None)
    sp.add_argument("--pairs", type=int, default=None)
    sp.add_argument("--points", type=int, default=None)
    sp.add_argument("--nderiv", type=int, default=None, help="derivative order")
    sp.add_argument("--family-size", dest="family_size", type=int, default=None)
    sp.add_argument("--taylor-degree", dest="taylor_degree", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("explore", help="run a conjecture evidence explorer")
    sp.add_argument("conjecture", help="conj13 / conj14 (or 13 / 14)")
    sp.add_argument("--p", type=_parse_p, default=None)
    sp.add_argument("--pairs", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_explore)

    sp = sub.add_parser("family", help="list the verification function family")
    _add_common(sp)
    sp.set_defaults(func=_cmd_family)
    return parser


def _apply_config_file(argv, parser):
    """Config-file values become defaults; explicit flags still win."""
    if "--config" not in argv:
        return
    path = argv[argv.index("--config") + 1]
    overrides = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            overrides[key.strip().replace("-", "_")] = value.strip()
    for action in parser._subparsers._group_actions[0].choices.values():  # noqa: SLF001
        defaults = {}
        for act in action._actions:  # noqa: SLF001
            if act.dest in overrides:
                raw = overrides[act.dest]
                defaults[act.dest] = act.type(raw) if act.type else raw
        if defaults:
            action.set_defaults(**defaults)


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        _apply_config_file(argv, parser)
    except (OSError, ValueError) as err:
        print(f"error: bad config file: {err}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    if "FOCKLAB_SEED" in os.environ and hasattr(args, "seed"):
        args.seed = int(os.environ["FOCKLAB_SEED"])
    try:
        return args.func(args)
    except DSLError as err:
        print(f"error: malformed function text at {err}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
