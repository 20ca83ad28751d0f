"""Command-line entry point.

    PYTHONPATH=. python3 fracmatch.py analyze graph.txt
    PYTHONPATH=. python3 fracmatch.py gen ring -d 2 -m 1 -c 3 -o g3.txt
    PYTHONPATH=. python3 fracmatch.py verify g3.txt
    PYTHONPATH=. python3 fracmatch.py fuzz --n-max 40 --trials 1000 --seed 42
    PYTHONPATH=. python3 fracmatch.py oracle graph.txt

Exit codes: 0 success, 1 verification violation, 2 usage / parse error,
3 precondition violation (for example a disconnected graph).
"""
from typing import Callable, Dict, List, Optional
import argparse
import logging
import sys

from pydantic import BaseModel, ValidationError

from config import (
    BRUTE_FORCE_CAP,
    DEFAULT_TOL,
    EQUALITY_TOL,
    FUZZ_D_MAX,
    FUZZ_D_MIN,
    FUZZ_N_MAX,
    FUZZ_SEED,
    FUZZ_TRIALS,
    CliConfig,
    Subcommand,
)
from families.construction import (
    FamilyParams,
    expected_fractional_matching,
    expected_lambda1,
    gen_complete_bipartite,
    gen_ring_blocks,
)
from graph_core.edge_list import read_edge_list, serialize_edge_list
from graph_core.graph_interface import PreconditionError
from matching.deficiency import max_deficiency_bruteforce
from matching.fractional import fractional_matching_number
from spectral.power_iteration import ConvergenceError
from verification.campaign import fuzz_campaign
from verification.reports import OracleReport
from verification.theorem_checks import ReportHook, check_theorem_bound, verify_graph

logger = logging.getLogger("fracmatch")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracmatch",
        description="Spectral radius and fractional matching number: analysis, generators and verifiers.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", default=None, help="write to this path instead of standard output")

    def with_tol(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="spectral tolerance")
        p.add_argument("--equality-tol", type=float, default=EQUALITY_TOL, help="equality detection tolerance")

    analyze = sub.add_parser("analyze", help="report the bound quantities for one graph")
    analyze.add_argument("input")
    with_tol(analyze)
    with_output(analyze)

    gen = sub.add_parser("gen", help="write a member of the extremal family")
    families = gen.add_subparsers(dest="family", required=True)
    kab = families.add_parser("kab", help="complete bipartite graph K_{a,b}")
    kab.add_argument("-a", type=int, required=True)
    kab.add_argument("-b", type=int, required=True)
    with_output(kab)
    ring = families.add_parser("ring", help="ring of c blocks K_{d,d+m}")
    ring.add_argument("-d", type=int, required=True)
    ring.add_argument("-m", type=int, required=True)
    ring.add_argument("-c", type=int, required=True)
    with_output(ring)

    verify = sub.add_parser("verify", help="run every checker on one graph")
    verify.add_argument("input")
    with_tol(verify)
    verify.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP, help="vertex cap for the brute-force oracle")
    with_output(verify)

    fuzz = sub.add_parser("fuzz", help="seeded campaign over random connected graphs")
    fuzz.add_argument("--n-max", type=int, default=FUZZ_N_MAX)
    fuzz.add_argument("--d-min", type=int, default=FUZZ_D_MIN)
    fuzz.add_argument("--d-max", type=int, default=FUZZ_D_MAX)
    fuzz.add_argument("--trials", type=int, default=FUZZ_TRIALS)
    fuzz.add_argument("--seed", type=int, default=FUZZ_SEED)
    fuzz.add_argument("--tol", type=float, default=DEFAULT_TOL)
    fuzz.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    with_output(fuzz)

    oracle = sub.add_parser("oracle", help="both sides of the fractional Berge-Tutte formula")
    oracle.add_argument("input")
    oracle.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    with_output(oracle)
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    values = {"subcommand": Subcommand(args.command), "verbosity": args.verbose}
    for name in ("input", "output", "tol", "equality_tol", "seed", "cap"):
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    return CliConfig(**values)


def _emit(config: CliConfig, text: str) -> None:
    if config.output is not None:
        config.output.write_text(text + "\n", encoding="ascii")
    else:
        sys.stdout.write(text + "\n")


def _format_json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


def cmd_analyze(args: argparse.Namespace, config: CliConfig, report_hook: Optional[ReportHook]) -> int:
    g = read_edge_list(config.input)
    _emit(config, _format_json(check_theorem_bound(g, config.tol, config.equality_tol)))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: CliConfig, report_hook: Optional[ReportHook]) -> int:
    if args.family == "kab":
        g = gen_complete_bipartite(args.a, args.b)
        params = FamilyParams(d=min(args.a, args.b), k=abs(args.a - args.b))
    else:
        g = gen_ring_blocks(args.d, args.m, args.c)
        params = FamilyParams.ring(args.d, args.m, args.c)

    text = serialize_edge_list(g).decode("ascii")
    if config.output is not None:
        config.output.write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text + "\n")
    alpha = expected_fractional_matching(params, g.n)
    print(
        f"expected: n={g.n} d={params.d} k={params.k} "
        f"alpha_f={int(alpha * 2)}/2 lambda1={expected_lambda1(params, g.n):.12f}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: CliConfig, report_hook: Optional[ReportHook]) -> int:
    g = read_edge_list(config.input)
    result = verify_graph(g, config.tol, config.cap, config.equality_tol, report_hook=report_hook)
    for note in result.anomalies:
        logger.warning("anomaly: %s", note)
    _emit(config, _format_json(result))
    return EXIT_OK if result.passed else EXIT_VIOLATION


def cmd_fuzz(args: argparse.Namespace, config: CliConfig, report_hook: Optional[ReportHook]) -> int:
    summary = fuzz_campaign(args.n_max, (args.d_min, args.d_max), args.trials, config.seed,
                            tol=config.tol, size_cap=config.cap)
    _emit(config, _format_json(summary))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_oracle(args: argparse.Namespace, config: CliConfig, report_hook: Optional[ReportHook]) -> int:
    g = read_edge_list(config.input)
    witness = max_deficiency_bruteforce(g, config.cap)
    _, cert = fractional_matching_number(g)
    report = OracleReport(
        n=g.n,
        alpha_f_half_units=cert.total,
        witness=witness,
        isolated=witness.isolated,
        deficiency=witness.deficiency,
        half_n_minus_def=g.n - witness.deficiency,
        agree=cert.total == g.n - witness.deficiency,
        certificate=cert.rows(),
    )
    _emit(config, _format_json(report))
    return EXIT_OK


COMMANDS: Dict[Subcommand, Callable[[argparse.Namespace, CliConfig, Optional[ReportHook]], int]] = {
    Subcommand.ANALYZE: cmd_analyze,
    Subcommand.GEN: cmd_gen,
    Subcommand.VERIFY: cmd_verify,
    Subcommand.FUZZ: cmd_fuzz,
    Subcommand.ORACLE: cmd_oracle,
}


def main(argv: Optional[List[str]] = None, report_hook: Optional[ReportHook] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = _config_from_args(args)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[config.subcommand](args, config, report_hook)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError:
        print("error: input too large to hold in memory", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
