"""Command-line front end.

Exit statuses: 0 success, 1 bad scenario, 2 I/O failure (argparse usage
errors also exit 2), 3 quantum/classical mismatch in ``compare``.
"""
import argparse
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import quantum
from .scenario import ParseError, apply_overrides, parse_scenario, run_sweep, write_csv

PANELS = (
    "fig2_absorb_L_37",
    "fig2_absorb_L_100",
    "fig2_absorb_R_37",
    "fig2_absorb_R_100",
    "fig3_rotate_L",
    "fig3_rotate_R",
    "fig4_rotL_absR",
    "fig4_rotR_absL",
)
COMPARE_TOL = 1e-9


class _Exit(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


def bundled_scenario(name):
    """Text of a bundled scenario such as ``fig2_absorb_L_37``."""
    name = name[:-4] if name.endswith(".txt") else name
    return resources.files("cheshire.scenarios").joinpath(f"{name}.txt").read_text()


def _load(path, overrides=()):
    p = Path(path)
    try:
        if p.is_file():
            text = p.read_text(encoding="utf-8")
        else:
            text = bundled_scenario(path)
    except (OSError, UnicodeDecodeError) as exc:
        raise _Exit(2, f"cannot read scenario {path!r}: {exc}") from None
    try:
        s = parse_scenario(text)
    except ParseError as exc:
        raise _Exit(1, f"{path}: {exc}") from None
    try:
        return apply_overrides(s, overrides)
    except ParseError as exc:
        raise _Exit(1, f"--override {exc.line}: {exc.message}") from None


def cmd_simulate(args):
    result = run_sweep(_load(args.scenario, args.override))
    try:
        if args.output:
            with open(args.output, "wb") as fh:
                write_csv(result, fh)
        else:
            write_csv(result, sys.stdout.buffer)
            sys.stdout.buffer.flush()
    except OSError as exc:
        raise _Exit(2, f"cannot write output: {exc}") from None
    return 0


def _fmt_complex(z):
    return f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}i"


def cmd_weak_values(args):
    for label, value in quantum.cheshire_weak_values().items():
        print(f"{label}: {_fmt_complex(value)}")
    return 0


def cmd_compare(args):
    s = _load(args.scenario, args.override)
    s = type(s)(s.left, s.right, s.imperfections, s.sweep, s.postselect,
                frozenset({"classical", "quantum"}))
    result = run_sweep(s)
    diff = np.abs(result.quantum_d1 - result.d1_postselected)
    worst = int(np.argmax(diff))
    print(f"max |quantum - classical| = {diff[worst]:.3e} over {len(result)} phases")
    if diff[worst] > COMPARE_TOL:
        print(
            f"models disagree beyond {COMPARE_TOL:g} at phi = {result.phi[worst]!r} "
            f"(classical {result.d1_postselected[worst]!r}, quantum {result.quantum_d1[worst]!r})"
        )
        return 3
    return 0


def cmd_figures(args):
    out = Path(args.output)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for name in PANELS:
            result = run_sweep(parse_scenario(bundled_scenario(name)))
            with open(out / f"{name}.csv", "wb") as fh:
                write_csv(result, fh)
    except OSError as exc:
        raise _Exit(2, f"cannot write figure data: {exc}") from None
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cheshire-sim",
        description="Two-arm polarization interferometer: classical and post-selected quantum models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="phase sweep of one scenario, as CSV")
    p.add_argument("-s", "--scenario", required=True,
                   help="scenario file or bundled scenario name")
    p.add_argument("-o", "--output", help="CSV path (default: standard output)")
    p.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("weak-values", help="print the four Cheshire-cat weak values")
    p.set_defaults(func=cmd_weak_values)

    p = sub.add_parser("compare", help="check the quantum model against the classical one")
    p.add_argument("-s", "--scenario", required=True)
    p.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("figures", help="write CSVs for every bundled panel scenario")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"cheshire-sim: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
