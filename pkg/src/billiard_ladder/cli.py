"""Command line front end.

Exit status: 0 success, 1 bad input or I/O failure, 2 a verification
check failed.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import classes, core, formats, ladder, nodal, verify
from .errors import BilliardError

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

LADDER_LIMIT = verify.Tolerances().ladder_abs


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _state_flags(p, with_m=True):
    p.add_argument("--billiard", choices=["iso", "equi"], default="iso")
    p.add_argument("--family", choices=["default", "cos", "sin"], default=None,
                   help="default: 'default' for iso, 'cos' for equi")
    if with_m:
        p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="billiard-ladder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("eval", help="closed-form value at one point")
    _state_flags(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)

    p = sub.add_parser("classify", help="equivalence class and its lowest state")
    _state_flags(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--billiard", choices=["iso", "equi"], default="iso")
    p.add_argument("--family", choices=["default", "cos", "sin"], default=None)
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="default")

    p = sub.add_parser("grid", help="write sampled values as CSV")
    _state_flags(p)
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--out", default="-")

    p = sub.add_parser("ladder", help="apply the ladder operator and check the identity")
    _state_flags(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--res", type=int, default=201)

    p = sub.add_parser("nodal", help="render the nodal pattern and count domains")
    _state_flags(p)
    p.add_argument("--res", type=int, default=512)
    p.add_argument("--out", default=None)
    p.add_argument("--mode", choices=["sign", "amplitude"], default="sign")

    p = sub.add_parser("tower", help="add a tower of states to a JSON catalog")
    _state_flags(p, with_m=False)
    p.add_argument("--class", dest="c", type=int, required=True)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--catalog", required=True)
    p.add_argument("--res", type=int, default=None,
                   help="also count nodal domains at this resolution")
    return parser


def _family(args):
    if args.family is not None:
        return args.family
    return "default" if args.billiard == "iso" else "cos"


def _state(args):
    return core.make_state(args.billiard, _family(args), args.m, args.n)


def _label(spec):
    return f"({spec.m},{spec.n})"


def cmd_eval(args, out):
    spec = _state(args)
    print(f"{core.eval_point(spec, (args.x, args.y)):.7f}", file=out)
    return EXIT_OK


def cmd_classify(args, out):
    spec = _state(args)
    cls = classes.class_index(spec)
    low = classes.lowest_in_class(spec.kind, spec.family, spec.n, cls.index)
    print(f"{cls}; lowest {_label(low)}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    report = verify.run_suite(args.billiard, _family(args), **verify.SUITES[args.suite])
    print(report.summary(), file=out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_grid(args, out):
    field = core.eval_grid(_state(args), core.GridSpec(args.res))
    if args.out == "-":
        out.write(formats.grid_csv(field))
    else:
        formats.write_grid_csv(field, args.out)
    return EXIT_OK


def cmd_ladder(args, out):
    spec = _state(args)
    target = classes.step(spec, args.p)
    dev = verify.ladder_identity_check(spec, args.p, args.res)
    print(f"source {_label(spec)} {classes.class_index(spec)} energy {spec.energy:.9g}", file=out)
    print(f"target {_label(target)} {classes.class_index(target)} energy {target.energy:.9g}",
          file=out)
    print(f"deviation {dev:.3e} (limit {LADDER_LIMIT:.0e})", file=out)
    return EXIT_OK if dev <= LADDER_LIMIT else EXIT_VERIFY


def cmd_nodal(args, out):
    field = core.eval_grid(_state(args), core.GridSpec(args.res))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = nodal.count_domains(nodal.sign_grid(field))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.out:
        formats.write_pgm(nodal.nodal_render(field, args.mode), args.out)
    print(f"nu={report.domain_count}", file=out)
    return EXIT_OK


def cmd_tower(args, out):
    states = classes.tower(args.billiard, _family(args), args.n, args.c, args.count)
    # validate the existing catalog before spending time on nodal counts
    formats.read_catalog(args.catalog)
    entries = []
    for s in states:
        nu = None
        if args.res is not None:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                nu = nodal.nodal_count(s, args.res).domain_count
        entries.append(formats.CatalogEntry.from_state(s, nu, args.res))
    formats.merge_catalog(args.catalog, entries)
    for e in entries:
        print(f"({e.m},{e.n}) class {e.class_index} mod {e.modulus} energy {e.energy:.9g}",
              file=out)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "grid": cmd_grid,
    "ladder": cmd_ladder,
    "nodal": cmd_nodal,
    "tower": cmd_tower,
}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
    except (BilliardError, formats.CatalogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


def main():
    sys.exit(run())
