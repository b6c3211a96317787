#!/usr/bin/env python3
"""
FusedHecke Command Line
Batch queries on fused Hecke algebras with deterministic JSON, DOT or table output
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import bratteli
import conjectures
import fused
import golden
import sworacle
from config import get_config, get_config_manager, reload_config
from error_handling import (
    ExitCode,
    FusedHeckeError,
    InvariantError,
    ValidationError,
    create_error_response,
    get_error_handler,
    handle_exceptions,
)
from logging_config import get_logger, log_exceptions, log_with_context, setup_logging
from permcomb import Blocks, FusedPerm, enumerate_fused
from qcoeff import to_string
from seminormal import fused_irrep
from shapes import Partition, kostka, s_set
from validation import (
    QPointValidator,
    ValidationSeverity,
    parse_composition,
    parse_partition,
    parse_q_points,
    validate_or_raise,
)

FORMATS = ("json", "dot", "table")
DIAGRAM_COMMANDS = ("bratteli", "centralizer-diagram")


@dataclass
class CommandResult:
    """What a subcommand produced; rendering happens once, in `main`."""

    data: Dict[str, Any]
    table: List[List[str]] = field(default_factory=list)
    dot: Optional[str] = None
    exit_code: ExitCode = ExitCode.SUCCESS


def _composition(text: str, length: Optional[int]) -> Tuple[int, ...]:
    k, result = parse_composition(text, length)
    if result.severity is ValidationSeverity.WARNING:
        get_logger().warning(result.message, **result.details)
    return k


def _level_and_k(args) -> Tuple[Tuple[int, ...], int]:
    """Resolve --k/--n; without --n the level is the length of the listed composition."""
    k = _composition(args.k, args.n)
    return k, len(k)


def _matrix(text: str, blocks: Blocks, name: str) -> FusedPerm:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Malformed matrix: {text}", field=name, value=text) from e
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError(f"Matrix must be a list of rows: {text}", field=name, value=text)
    try:
        return FusedPerm.of(rows).check(blocks)
    except InvariantError as e:
        raise ValidationError(e.message, field=name, value=text) from e


def _cmd_dim(args) -> CommandResult:
    k, n = _level_and_k(args)
    dim = fused.dimension(Blocks(k))
    return CommandResult({"k": list(k), "n": n, "dim": dim}, [["dim", str(dim)]])


def _cmd_basis(args) -> CommandResult:
    k, n = _level_and_k(args)
    labels = enumerate_fused(Blocks(k))
    return CommandResult(
        {"k": list(k), "n": n, "basis": [w.to_json() for w in labels]},
        [[str(j), json.dumps(w.to_json())] for j, w in enumerate(labels)],
    )


def _cmd_mul(args) -> CommandResult:
    k, n = _level_and_k(args)
    blocks = Blocks(k)
    a = fused.basis_element(blocks, _matrix(args.a, blocks, "a"))
    b = fused.basis_element(blocks, _matrix(args.b, blocks, "b"))

    if args.classical:
        product = fused.multiply_classical(a, b)
        terms = [[w.to_json(), to_string(c)] for w, c in product.items()]
        mode = "classical"
    elif args.at is not None:
        q0 = Fraction(validate_or_raise(QPointValidator(), args.at, "at"))
        values = fused.multiply_at(blocks, a.specialize(q0), b.specialize(q0), q0)
        terms = [[w.to_json(), str(values[w])] for w in sorted(values)]
        mode = f"q={q0}"
    else:
        terms = fused.multiply_q(a, b).to_json()
        mode = "symbolic"
    return CommandResult(
        {"k": list(k), "n": n, "mode": mode, "product": terms},
        [[json.dumps(w), c] for w, c in terms],
    )


def _cmd_kostka(args) -> CommandResult:
    shape = Partition.of(parse_partition(args.shape))
    weight = _composition(args.weight, None)
    value = kostka(shape, weight)
    return CommandResult(
        {"shape": shape.to_json(), "weight": list(weight), "kostka": value},
        [["kostka", str(value)]],
    )


def _cmd_sset(args) -> CommandResult:
    k, n = _level_and_k(args)
    rows = [(lam, kostka(lam, k)) for lam in s_set(k, n)]
    return CommandResult(
        {
            "k": list(k),
            "n": n,
            "shapes": [{"partition": lam.to_json(), "dim": d} for lam, d in rows],
            "dim": sum(d * d for _, d in rows),
        },
        [[str(lam), str(d)] for lam, d in rows],
    )


def _diagram_table(d: bratteli.BratteliDiagram) -> List[List[str]]:
    return [
        [
            str(n),
            " ".join(f"{v.partition}:{v.dim}" for v in level),
            str(bratteli.level_dimension(d, n)),
        ]
        for n, level in enumerate(d.levels)
    ]


def _cmd_bratteli(args) -> CommandResult:
    k = _composition(args.k, args.n_max)
    d = bratteli.build_chain(k, args.n_max)
    data = bratteli.to_json(d)
    data["level_dimensions"] = [bratteli.level_dimension(d, n) for n in range(d.depth + 1)]
    if args.quotient_short:
        removed = bratteli.short_partitions(d)
        data["minimal_generators"] = [
            [n, p.to_json()] for n, p in bratteli.minimal_generators(d, removed)
        ]
        data["predicted_generators"] = [
            [n, p.to_json()] for n, p in bratteli.predicted_minimal_generators(k, args.n_max)
        ]
        d = bratteli.quotient(d, removed)
        data["quotient"] = bratteli.to_json(d)
    return CommandResult(data, _diagram_table(d), bratteli.to_dot(d))


def _cmd_centralizer_diagram(args) -> CommandResult:
    k = _composition(args.k, args.n_max)
    d = bratteli.centralizer_diagram(k, args.N, args.n_max)
    data = bratteli.to_json(d)
    data["N"] = args.N
    data["level_dimensions"] = [bratteli.level_dimension(d, n) for n in range(d.depth + 1)]
    return CommandResult(data, _diagram_table(d), bratteli.to_dot(d, "centralizer"))


def _cmd_irrep(args) -> CommandResult:
    k, n = _level_and_k(args)
    lam = Partition.of(parse_partition(args.shape))
    matrices = fused_irrep(lam, k, n)
    labels = sorted(matrices)
    dim = matrices[labels[0]].dim
    data = {
        "k": list(k),
        "n": n,
        "shape": lam.to_json(),
        "dim": dim,
        "basis": [t.to_json() for t in matrices[labels[0]].basis_labels],
    }
    if args.matrices:
        data["matrices"] = [
            {"label": w.to_json(), "matrix": matrices[w].to_json()["matrix"]} for w in labels
        ]
    return CommandResult(data, [["shape", str(lam)], ["dim", str(dim)]])


def _cmd_sw_rank(args) -> CommandResult:
    k, n = _level_and_k(args)
    config = get_config()
    q0 = config.arithmetic.fractions()[0]
    computed = sworacle.centralizer_dim(k, n, args.N, q0, config.execution.threads)
    expected = sworacle.expected_centralizer_dim(k, n, args.N)
    decomposition = sworacle.tensor_decomposition(k, n, args.N)
    data = {
        "k": list(k),
        "n": n,
        "N": args.N,
        "q0": str(q0),
        "rank": computed,
        "expected": expected,
        "decomposition": [
            {"partition": lam.to_json(), "multiplicity": mult, "gl_dim": gl}
            for lam, (mult, gl) in decomposition.items()
        ],
        "tensor_dim": sworacle.symmetric_power_dimension(k, args.N),
    }
    if args.dump_matrices:
        data["dump"] = sworacle.dump_matrices(k, n, args.N, q0)
    code = ExitCode.SUCCESS if computed == expected else ExitCode.VERIFICATION_FAILED
    return CommandResult(
        data, [["rank", str(computed)], ["expected", str(expected)]], exit_code=code
    )


def _report_row(report: conjectures.ConjReport) -> List[str]:
    return [
        ",".join(map(str, report.k)),
        str(report.N),
        report.centrality.value,
        f"{report.ideal_dim_computed}/{report.ideal_dim_expected}",
        report.ideal_generation.value,
        report.q_mode,
    ]


def _cmd_check_conjectures(args) -> CommandResult:
    threads = get_config().execution.threads
    if args.sweep is not None:
        reports = conjectures.sweep(args.sweep, threads)
    else:
        if args.k is None or args.N is None:
            raise ValidationError("--k and --N are required without --sweep", field="k")
        k = _composition(args.k, args.N + 1)
        reports = [conjectures.run_checks(k, args.N, threads)]
    passed = all(r.passed for r in reports)
    data: Dict[str, Any] = {"passed": passed, "reports": [r.to_dict() for r in reports]}
    return CommandResult(
        data,
        [_report_row(r) for r in reports],
        exit_code=ExitCode.SUCCESS if passed else ExitCode.VERIFICATION_FAILED,
    )


def _cmd_golden(args) -> CommandResult:
    report = golden.run_golden(include_slow=not args.skip_slow, names=args.only)
    return CommandResult(
        report.to_dict(),
        [[r.name, r.status.value] for r in report.results],
        exit_code=ExitCode.SUCCESS if report.passed else ExitCode.VERIFICATION_FAILED,
    )


def _add_k(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--k", required=required, help="composition: 2,2,2 or const:2")
    parser.add_argument("--n", type=int, help="level; extends or truncates --k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusedhecke", description="Exact computations in fused Hecke algebras"
    )
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--save-config", metavar="PATH", help="write the effective configuration")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--threads", type=int, help="worker threads")
    parser.add_argument("--q-points", help="comma separated rational sample points")
    parser.add_argument("--output", help="write output to FILE instead of stdout")
    parser.add_argument("--format", choices=FORMATS, help="output format")
    parser.add_argument(
        "--dump-matrices", action="store_true", help="include tensor action matrices (sw-rank)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension of H_{k,n}")
    _add_k(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("basis", help="fused permutations of H_{k,n}")
    _add_k(p)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("mul", help="product of two basis elements")
    _add_k(p)
    p.add_argument("--a", required=True, help="left matrix as JSON, e.g. [[2,0],[0,2]]")
    p.add_argument("--b", required=True, help="right matrix as JSON")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--classical", action="store_true", help="diagram product at q=1")
    mode.add_argument("--at", help="rational point at which to multiply")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("kostka", help="Kostka number K_{shape,weight}")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("sset", help="labels of irreducible representations")
    _add_k(p)
    p.set_defaults(func=_cmd_sset)

    p = sub.add_parser("bratteli", help="Bratteli diagram of the chain")
    p.add_argument("--k", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--quotient-short",
        action="store_true",
        help="quotient by partitions with fewer than n rows",
    )
    p.set_defaults(func=_cmd_bratteli)

    p = sub.add_parser("centralizer-diagram", help="diagram of the centraliser chain")
    p.add_argument("--k", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_centralizer_diagram)

    p = sub.add_parser("irrep", help="seminormal irreducible representation")
    _add_k(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--matrices", action="store_true", help="include every basis matrix")
    p.set_defaults(func=_cmd_irrep)

    p = sub.add_parser("sw-rank", help="rank of the image in End((Q^N)^m)")
    _add_k(p)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=_cmd_sw_rank)

    p = sub.add_parser("check-conjectures", help="centrality and ideal generation checks")
    p.add_argument("--k")
    p.add_argument("--N", type=int)
    p.add_argument("--sweep", type=int, metavar="MAX_WEIGHT", help="run every case up to a weight")
    p.set_defaults(func=_cmd_check_conjectures)

    p = sub.add_parser("golden", help="run the reference fixture suite")
    p.add_argument("--skip-slow", action="store_true")
    p.add_argument("--only", nargs="+", metavar="NAME")
    p.set_defaults(func=_cmd_golden)
    return parser


def _configure(args) -> str:
    """Apply global flags to the configuration; returns the output format."""
    if args.config:
        reload_config(args.config)
    manager = get_config_manager()
    if args.threads is not None:
        if args.threads < 1:
            raise ValidationError("--threads must be positive", field="threads", value=args.threads)
        manager.update_config(execution={"threads": args.threads})
    if args.q_points:
        points = [str(p) for p in parse_q_points(args.q_points)]
        manager.update_config(arithmetic={"q_points": points})
    if args.log_level or args.config:
        setup_logging(args.log_level)
    if args.save_config:
        manager.save_config(args.save_config)
    config = manager.get_config()
    output_format = args.format or config.output.format
    if output_format not in FORMATS:
        raise ValidationError(
            f"Unknown format {output_format}", field="format", value=output_format
        )
    if output_format == "dot" and args.command not in DIAGRAM_COMMANDS:
        raise ValidationError(
            f"DOT output is only available for {', '.join(DIAGRAM_COMMANDS)}",
            field="format",
            value=args.command,
        )
    return output_format


def render_table(rows: Sequence[Sequence[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(row[j]) for row in rows if j < len(row)) for j in range(max(map(len, rows)))]
    lines = [
        "  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip() for row in rows
    ]
    return "\n".join(lines) + "\n"


def render(result: CommandResult, output_format: str) -> str:
    if output_format == "dot":
        return result.dot or ""
    if output_format == "table":
        return render_table(result.table)
    indent = get_config().output.indent
    return json.dumps(result.data, indent=indent, ensure_ascii=False) + "\n"


@log_exceptions()
def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


@handle_exceptions()
def _run(args) -> CommandResult:
    """Configure, dispatch and write one command; errors leave as FusedHeckeError."""
    with log_with_context(get_logger(), command=args.command):
        output_format = _configure(args)
        command: Callable[[Any], CommandResult] = args.func
        result = command(args)
        _emit(render(result, output_format), args.output)
    return result


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.USAGE_ERROR.value

    try:
        return _run(args).exit_code.value
    except FusedHeckeError as error:
        print(json.dumps(create_error_response(error), default=str), file=sys.stderr)
        return get_error_handler().exit_code(error).value


if __name__ == "__main__":
    sys.exit(main())
