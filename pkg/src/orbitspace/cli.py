"""Command line interface.

Exit codes: 0 success, 2 validation failure, 3 unsupported input,
4 internal invariant violation.
"""

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .problem import ProblemError, build, build_fan, derive_strata, parse_problem
from .report import dumps, enumerate_report, render_text, strata_report
from .toric import UnsupportedInput, occurring_strata

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


def _resolve(path):
    """Open a problem file; bare names of bundled examples also resolve."""
    p = Path(path)
    if p.exists():
        return p.read_text()
    bundled = resources.files("orbitspace") / "data" / p.name
    if bundled.is_file():
        return bundled.read_text()
    raise FileNotFoundError(path)


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args):
    desc = parse_problem(_resolve(args.file))
    divisor, strat = build(desc)
    report = enumerate_report(desc, divisor, strat, classify_flags=args.classify)
    _check_report(report)
    _emit(dumps(report) if args.json else render_text(report), args.out)


def cmd_strata(args):
    desc = parse_problem(_resolve(args.file))
    before = None
    if desc.fan is not None and desc.fan.splitting:
        fan, marking, _ = build_fan(desc)
        before = occurring_strata(fan, marking)
    after = derive_strata(desc)
    report = strata_report(desc, before, after)
    _emit(dumps(report) if args.json else render_text(report), None)


def cmd_validate(args):
    desc = parse_problem(_resolve(args.file))
    divisor, strat = build(desc)
    print(f"ok: {len(divisor)} coefficients, rank {divisor.rank}, {len(strat.strata)} strata")


def _check_report(report):
    for entry in report["collections"]:
        if "projective" in entry and entry["projective"] and not entry["toric_embeddable"]:
            raise AssertionError("projective collection flagged as not toric-embeddable")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="orbitspace",
        description="Enumerate complete orbit spaces of affine torus actions from a pp-divisor.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all coherent vertex collections")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true", help="add projectivity and toric-embeddability flags")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write the report to this path")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("strata", help="show the stratum family of a fan-based problem")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("validate", help="check a problem file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        args.func(args)
    except ProblemError as exc:
        for issue in exc.issues:
            print(f"error: {issue}", file=sys.stderr)
        return EXIT_INVALID
    except (FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: cannot read {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedInput as exc:
        print(f"error: unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
