"""Command line front end.

    jackpieri compute jack --r 2 --d 2 --partition 2,0
    jackpieri verify all --r 2 --max-weight 3 --d 1 --d 2 --format json
    jackpieri list-suites
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .combinatorics import format_partition, parse_partition
from .field import Field
from .identities import SUITE_ANCHORS, SUITES, SuiteConfig, run_suite

COMPUTE_TARGETS = ("jack", "interp", "phi", "psi", "kernel")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _d_value(text: str):
    text = text.strip()
    if text == "symbolic":
        return None
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad d value {text!r}") from None
    if v == 0:
        raise argparse.ArgumentTypeError("d must be nonzero")
    return v


def _u_value(text: str):
    if text == "formal":
        return None
    if text.startswith("value:"):
        try:
            return Fraction(text[len("value:") :])
        except (ValueError, ZeroDivisionError):
            pass
    raise argparse.ArgumentTypeError(f"--u takes 'formal' or 'value:p/q', not {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jackpieri", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--r", type=int, default=None)
        sp.add_argument("--d", type=_d_value, action="append", default=None, help="rational p/q or 'symbolic' (repeatable)")
        sp.add_argument("--max-weight", type=int, default=None)
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        sp.add_argument("--out", default=None)

    c = sub.add_parser("compute")
    c.add_argument("target", choices=COMPUTE_TARGETS)
    c.add_argument("--partition", default=None)
    common(c)

    v = sub.add_parser("verify")
    v.add_argument("suite")
    common(v)
    v.add_argument("--u", type=_u_value, default=None, help="'formal' or 'value:p/q'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--random-points", type=int, default=20)
    v.add_argument("--partition", default=None, help=argparse.SUPPRESS)
    v.add_argument("--timing", action="store_true", help="include wall-clock millis (breaks byte-determinism)")

    sub.add_parser("list-suites")
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _compute(args) -> int:
    from .interpjack import interp_jack
    from .jack import jack, phi, psi
    from .kernel import build_kernel, kernel_text

    ds = args.d or [None]
    if len(ds) != 1:
        raise UsageError("compute takes a single --d")
    field = Field(ds[0])
    config = {"d": str(field)}
    if args.target == "kernel":
        if args.r is None or args.max_weight is None:
            raise UsageError("compute kernel needs --r and --max-weight")
        kern = build_kernel(args.max_weight, args.r, field)
        config.update(r=args.r, max_weight=args.max_weight)
        if args.format == "json":
            body = {
                "terms": [
                    {"partition": list(m), "psi_z": ps.to_json(), "phi_w": ph.to_json()}
                    for m, (ps, ph) in kern.terms.items()
                ]
            }
            return _json_out(args, config, body)
        if args.format == "latex":
            lines = [
                rf"\Psi_{{({format_partition(m)})}}(z)\Phi_{{({format_partition(m)})}}(w) = ({ps.to_latex('z')})({ph.to_latex('w')})"
                for m, (ps, ph) in kern.terms.items()
            ]
            _emit("\n".join(lines) + "\n", args.out)
            return 0
        _emit(kernel_text(kern) + "\n", args.out)
        return 0

    if args.partition is None:
        raise UsageError(f"compute {args.target} needs --partition")
    try:
        m = parse_partition(args.partition)
    except ValueError:
        raise UsageError(f"bad partition {args.partition!r}") from None
    r = args.r if args.r is not None else len(m)
    if len(m) > r or any(m[i] < m[i + 1] for i in range(len(m) - 1)) or (m and m[-1] < 0):
        raise UsageError(f"{args.partition!r} is not a partition of length <= {r}")
    m = m + (0,) * (r - len(m))
    config.update(r=r, partition=format_partition(m))
    label = format_partition(m)

    if args.target == "jack":
        P = jack(m, field)
        if args.format == "json":
            return _json_out(args, config, {"expansion": P.expansion.to_json(), "polynomial": P.poly.to_json()})
        if args.format == "latex":
            _emit(rf"P_{{({label})}} = {P.expansion.to_latex()}" + "\n", args.out)
            return 0
        _emit(P.expansion.to_text() + "\n", args.out)
        return 0

    if args.target == "interp":
        poly, name = interp_jack(m, field).poly, rf"P^{{\mathrm{{ip}}}}_{{({label})}}"
    elif args.target == "phi":
        poly, name = phi(m, field).poly, rf"\Phi_{{({label})}}"
    else:
        poly, name = psi(m, field).poly, rf"\Psi_{{({label})}}"
    if args.format == "json":
        return _json_out(args, config, {"polynomial": poly.to_json()})
    if args.format == "latex":
        _emit(f"{name} = {poly.to_latex()}\n", args.out)
        return 0
    _emit(poly.to_pretty() + "\n", args.out)
    return 0


def _json_out(args, config, body) -> int:
    doc = {"tool_version": __version__, "config": config}
    doc.update(body)
    _emit(json.dumps(doc, indent=2, sort_keys=False) + "\n", args.out)
    return 0


def _run_one(payload):
    name, cfg = payload
    return run_suite(name, cfg)


def _verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        sys.stderr.write(f"unknown suite {args.suite!r}; valid suites: all, {', '.join(SUITES)}\n")
        return 2
    try:
        cfg = SuiteConfig(
            r=args.r if args.r is not None else 2,
            max_weight=args.max_weight if args.max_weight is not None else 3,
            d_values=tuple(args.d) if args.d else SuiteConfig.d_values,
            u_value=args.u,
            seed=args.seed,
            random_points=args.random_points,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    threads = int(os.environ.get("JACKPIERI_THREADS", "0") or 0)
    if threads > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_run_one, [(n, cfg) for n in names]))
    else:
        reports = [run_suite(n, cfg) for n in names]

    ok = all(rep.ok for rep in reports)
    if args.format == "json":
        doc = {
            "tool_version": __version__,
            "config": cfg.to_json(),
            "results": [rep.to_json(timing=args.timing) for rep in reports],
            "coverage": [a for rep in reports for a in rep.anchors],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    elif args.format == "latex":
        rows = [rf"\texttt{{{rep.suite}}} & {rep.passed}/{rep.cases} & {'pass' if rep.ok else 'FAIL'} \\" for rep in reports]
        _emit("\\begin{tabular}{lrl}\n" + "\n".join(rows) + "\n\\end{tabular}\n", args.out)
    else:
        lines = []
        for rep in reports:
            line = rep.summary()
            if args.timing and rep.millis is not None:
                line += f"  ({rep.millis:.0f} ms)"
            lines.append(line)
            if rep.first_failure:
                lines.append(f"    residual: {rep.first_failure['residual']}")
        lines.append("all passed" if ok else "FAILURES")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "list-suites":
            for name in SUITES:
                sys.stdout.write(f"{name}: {', '.join(SUITE_ANCHORS[name])}\n")
            return 0
        if args.verb == "compute":
            return _compute(args)
        return _verify(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"jackpieri: error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
