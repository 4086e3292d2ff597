"""Command-line interface.

Exit codes: 0 sat or success, 1 unsat, 2 usage or input error,
3 admissibility violation.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import difftest
from .agap import (
    AlternatingGraph, GraphFormatError, agap_to_asagap, apath, dump_graph, parse_graph,
)
from .fastcheck import check_fpl0, check_prl0, formula_index, lp
from .formula import ParseError, parse_int, render, variables
from .kripke import LogicClass, ModelFormatError, parse_model, validate
from .reductions import (
    InstanceFormatError, chain_to_modal, dump_instance, ipc_to_kc2, parse_instance, read_instance,
    to_bpl0, to_fpl1_impl, to_k0, to_kc_impl, to_s42_one_var,
)
from .semantics import AdmissibilityError, check
from .translate import gt, gt_prime

EXIT_SAT, EXIT_UNSAT, EXIT_INPUT, EXIT_ADMISSIBILITY = 0, 1, 2, 3

_TARGETS = {
    "k0": to_k0,
    "kc-impl": to_kc_impl,
    "fpl1": to_fpl1_impl,
    "bpl0": to_bpl0,
    "s42-1": to_s42_one_var,
}


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _verdict(value: bool) -> int:
    print("sat" if value else "unsat")
    return EXIT_SAT if value else EXIT_UNSAT


# ---------------------------------------------------------------- subcommands

def cmd_check(args) -> int:
    inst, expected = _load_bundle(args.instance)
    fast = (args.fast and not variables(inst.formula)
            and inst.logic in (LogicClass.FPL, LogicClass.PrL))
    if args.fast and not fast:
        print("note: --fast applies to variable-free FPL/PrL instances; using the labelling checker",
              file=sys.stderr)
    if fast:
        fn = check_fpl0 if inst.logic is LogicClass.FPL else check_prl0
        value = fn(inst.formula, inst.model, inst.state)
    else:
        value = check(inst)
    if expected is not None and expected != value:
        print(f"note: bundle expects {'sat' if expected else 'unsat'}", file=sys.stderr)
    return _verdict(value)


def _load_bundle(path: str):
    if path != "-" and Path(path).is_dir():
        try:
            return read_instance(path)
        except OSError as exc:
            raise _InputError(f"cannot read bundle directory {path}: {exc.strerror}") from None
    return parse_instance(_read(path))


def cmd_validate(args) -> int:
    model = parse_model(_read(args.model))
    logic = LogicClass.parse(args.logic) if args.logic else None
    report = validate(model, logic)
    print(report.describe())
    return EXIT_ADMISSIBILITY if logic is not None and not report.admissible else EXIT_SAT


def cmd_translate(args) -> int:
    phi = parse_int(args.formula)
    print(render(gt(phi) if args.mode == "gt" else gt_prime(phi)))
    return EXIT_SAT


def cmd_agap(args) -> int:
    inst = parse_graph(_read(args.graph))
    if args.to_sliced:
        if not isinstance(inst.graph, AlternatingGraph):
            raise _InputError("graph is already sliced")
        sys.stdout.write(dump_graph(agap_to_asagap(inst)))
        return EXIT_SAT
    value = apath(inst.graph, inst.source, inst.target)
    other = apath(inst.graph, inst.source, inst.target, literal_sinks=True)
    if other != value:
        print("note: the answer depends on the sink convention; a universal sink would "
              f"reach the target vacuously and give {'reachable' if other else 'unreachable'}",
              file=sys.stderr)
    print("reachable" if value else "unreachable")
    return EXIT_SAT if value else EXIT_UNSAT


def cmd_reduce(args) -> int:
    if args.target == "kc2":
        src, _ = _load_bundle(args.input)
        if src.logic is not LogicClass.IPC:
            raise _InputError("kc2 takes an IPC instance bundle")
        truth = check(src)
        out = ipc_to_kc2(src, args.repaired)
        expected = out.expected(truth)
    else:
        inst = parse_graph(_read(args.input))
        if isinstance(inst.graph, AlternatingGraph):
            inst = agap_to_asagap(inst)
        f = _TARGETS[args.target]
        out = f(inst, args.repaired) if args.target == "s42-1" else f(inst)
        expected = out.expected(inst.answer())
    if args.chain_modal:
        out = chain_to_modal(out)
    text = dump_instance(out, expected)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_SAT


def cmd_index(args) -> int:
    print(formula_index(parse_int(args.formula)))
    return EXIT_SAT


def cmd_lp(args) -> int:
    model = parse_model(_read(args.model))
    try:
        print(lp(model, args.state))
    except KeyError as exc:
        raise _InputError(exc.args[0]) from None
    return EXIT_SAT


def cmd_difftest(args) -> int:
    cfg = difftest.DiffTestConfig(
        seed=args.seed, cases=args.cases, max_nodes=args.max_nodes,
        max_slices=args.max_slices, max_formula_size=args.max_formula_size,
        generators=tuple(args.generators.split(",")) if args.generators else difftest.SUITES,
        repaired=args.repaired,
    )
    results = difftest.run(cfg)
    sys.stdout.write(difftest.format_report(cfg, results, args.format))
    return EXIT_UNSAT if any(r.failed for r in results) else EXIT_SAT


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ilmc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide an instance bundle")
    p.add_argument("instance", help="bundle file, bundle directory, or - for stdin")
    p.add_argument("--fast", action="store_true",
                   help="use the longest-path checkers for variable-free FPL/PrL")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("validate", help="report frame properties of a model")
    p.add_argument("model")
    p.add_argument("--logic", help="exit 3 unless the model is admissible for this class")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("translate", help="translate an intuitionistic formula")
    p.add_argument("formula")
    p.add_argument("--mode", choices=("gt", "gtp"), default="gtp")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("agap", help="alternating reachability")
    p.add_argument("graph")
    p.add_argument("--to-sliced", action="store_true",
                   help="print the equivalent slice graph instead of the answer")
    p.set_defaults(func=cmd_agap)

    p = sub.add_parser("reduce", help="emit the reduced instance as a bundle")
    p.add_argument("input", help="graph file, or an IPC bundle for --target kc2")
    p.add_argument("--target", required=True, choices=tuple(_TARGETS) + ("kc2",))
    p.add_argument("--chain-modal", action="store_true",
                   help="translate the result to the modal companion")
    p.add_argument("--repaired", action="store_true",
                   help="use the corrected s42-1 / kc2 constructions")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("index", help="formula index of a variable-free formula")
    p.add_argument("formula")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("lp", help="longest path from a state")
    p.add_argument("model")
    p.add_argument("state")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("difftest", help="seeded differential tests")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--max-nodes", type=int, default=5)
    p.add_argument("--max-slices", type=int, default=6)
    p.add_argument("--max-formula-size", type=int, default=30)
    p.add_argument("--generators", help=f"comma-separated subset of {','.join(difftest.SUITES)}")
    p.add_argument("--repaired", action="store_true")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_difftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_SAT
    try:
        return args.func(args)
    except AdmissibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.describe(), file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except (_InputError, ParseError, ModelFormatError, GraphFormatError,
            InstanceFormatError, ValueError, TypeError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
