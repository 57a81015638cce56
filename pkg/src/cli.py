"""Command line entry point: ``python -m src.cli <command> ...``.

Exit codes: 0 success, 1 infeasible or verification failed, 2 usage error,
3 input error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

import orjson
from pydantic import ValidationError
from tqdm import tqdm

from .config import Settings
from .core.blocking import blocking_report
from .core.problem import DeviatorProblem, Objective, Regime
from .core.verify import check_solution
from .dispatch import Engine, SolveDispatcher
from .errors import DsmError, VerificationError
from .generators import GenSpec, Model, generate
from .instance_file import (read_instance, read_matching, serialize_instance, serialize_matching,
                            serialize_problem, write_text)
from .oracle import OracleReport, oracle_solve
from .reductions.cnf import find_satisfying_assignment, parse_cnf_22e3
from .reductions.companions import smi_to_sri
from .reductions.completion import complete_lists, minba_complete
from .reductions.gadgets import sat_to_biro_smi, sat_to_perfect_smi, witness_matching

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

logger = logging.getLogger(__name__)


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        write_text(out, text)


def _problem(args: argparse.Namespace) -> DeviatorProblem:
    budget = None if args.optimize or args.k is None else args.k
    return read_instance(args.instance).problem(Objective(args.objective), Regime(args.regime), budget)


def cmd_validate(args: argparse.Namespace, settings: Settings) -> int:
    parsed = read_instance(args.instance)
    inst = parsed.instance
    bipartite = "tagged" if inst.sides is not None else "untagged"
    sys.stdout.write(f"ok: {inst.num_agents} agents, {inst.num_edges} edges, d_max {inst.d_max}, "
                     f"{len(parsed.deviators)} deviators, sides {bipartite}, fingerprint {inst.fingerprint}\n")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, settings: Settings) -> int:
    p = _problem(args)
    engine, outcome = SolveDispatcher(settings).solve(p, Engine(args.engine))
    lines = [f"# engine: {engine}", f"# {outcome.certificate_note}"]
    if not outcome.is_solution:
        lines.append("# infeasible")
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_INFEASIBLE
    lines.append(f"# value: {outcome.value}")
    _emit("\n".join(lines) + "\n" + serialize_matching(outcome.matching), args.out)
    return EXIT_OK


def _report_dict(report: OracleReport) -> dict:
    data = report.model_dump(exclude={"witness_bp", "witness_ba"})
    for objective in Objective:
        witness = report.witness(objective)
        data[f"witness_{objective}"] = None if witness is None else [list(pair) for pair in witness.pairs]
    data["stable_matched_sets"] = [list(s) for s in report.stable_matched_sets]
    return data


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    p = _problem(args)
    cap = None if args.no_cap else (args.cap if args.cap is not None else settings.oracle_cap or None)
    report = oracle_solve(p, cap, settings.show_progress)
    data = _report_dict(report)
    if args.json:
        sys.stdout.write(orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode() + "\n")
    else:
        for key, value in data.items():
            sys.stdout.write(f"{key}: {value}\n")
    optimum = report.optimum(p.objective)
    if optimum is None or (p.budget is not None and optimum > p.budget):
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    p = _problem(args)
    matching = read_matching(args.matching, p.instance.num_agents)
    try:
        value = check_solution(p, matching, args.claimed)
    except VerificationError as e:
        sys.stdout.write(f"verification failed: {e}\n")
        return EXIT_INFEASIBLE
    report = blocking_report(p.instance, matching, p.deviators)
    sys.stdout.write(f"verified: value {value}, {len(report.deviator_pairs)} deviator blocking pairs, "
                     f"{len(report.blocking_pairs)} blocking pairs in total\n")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, settings: Settings) -> int:
    count = args.count
    for i in tqdm(range(count), desc="Generating instances", unit="instance", disable=not settings.show_progress):
        spec = GenSpec(n=args.n, model=Model(args.model), list_cap=args.cap,
                       deviator_fraction=args.deviator_fraction, num_deviators=args.num_deviators,
                       density=args.density, balanced_sides=args.balanced_sides, seed=args.seed + i)
        text = serialize_problem(generate(spec))
        if args.out is None:
            sys.stdout.write(text)
        elif count == 1 and Path(args.out).suffix:
            write_text(args.out, text)
        else:
            write_text(Path(args.out) / f"instance_{i:04d}_seed{spec.seed}.dsm", text)
    return EXIT_OK


def cmd_reduce_sat2smi(args: argparse.Namespace, settings: Settings) -> int:
    formula = parse_cnf_22e3(Path(args.cnf).read_text(encoding="utf-8"))
    if args.biro:
        inst, index = sat_to_biro_smi(formula)
        _emit(serialize_instance(inst), args.out)
    else:
        problem, index = sat_to_perfect_smi(formula)
        _emit(serialize_problem(problem), args.out)
    if args.witness is None:
        return EXIT_OK
    assignment = find_satisfying_assignment(formula)
    if assignment is None:
        logger.error("The formula is unsatisfiable, no witness matching written")
        return EXIT_INFEASIBLE
    write_text(args.witness, serialize_matching(witness_matching(formula, assignment, index)))
    return EXIT_OK


def cmd_reduce_smi2sri(args: argparse.Namespace, settings: Settings) -> int:
    problem = read_instance(args.instance).problem(regime=Regime.PERFECT, budget=0)
    _emit(serialize_problem(smi_to_sri(problem)), args.out)
    return EXIT_OK


def cmd_reduce_complete(args: argparse.Namespace, settings: Settings) -> int:
    problem = read_instance(args.instance).problem()
    _emit(serialize_problem(complete_lists(problem)), args.out)
    return EXIT_OK


def cmd_reduce_minba(args: argparse.Namespace, settings: Settings) -> int:
    inst = minba_complete(read_instance(args.instance).instance, args.k)
    _emit(serialize_instance(inst, frozenset(inst.agents)), args.out)
    return EXIT_OK


def _add_problem_flags(parser: argparse.ArgumentParser):
    parser.add_argument("instance", help="instance file")
    parser.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.BLOCKING_PAIRS.value)
    parser.add_argument("--regime", choices=[r.value for r in Regime], default=Regime.ANY.value)
    budget = parser.add_mutually_exclusive_group()
    budget.add_argument("--k", type=int, help="decide whether the value can be at most k")
    budget.add_argument("--optimize", action="store_true", help="compute the optimum (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsm", description="Matchings with few deviator blocking pairs")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--threads", type=int, help="worker threads for configuration evaluation")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="check an instance file")
    validate.add_argument("instance")
    validate.set_defaults(handler=cmd_validate)

    solve = sub.add_parser("solve", help="solve a problem")
    _add_problem_flags(solve)
    solve.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.AUTO.value)
    solve.add_argument("--out", help="write the result here instead of stdout")
    solve.set_defaults(handler=cmd_solve)

    oracle = sub.add_parser("oracle", help="exhaustive ground truth on small instances")
    _add_problem_flags(oracle)
    oracle.add_argument("--json", action="store_true", help="print the report as JSON")
    oracle.add_argument("--cap", type=int, help="largest instance to enumerate")
    oracle.add_argument("--no-cap", action="store_true", help="enumerate regardless of size")
    oracle.set_defaults(handler=cmd_oracle)

    verify = sub.add_parser("verify", help="check a matching against a problem")
    _add_problem_flags(verify)
    verify.add_argument("matching", help="matching file")
    verify.add_argument("--claimed", type=int, help="value the matching is claimed to have")
    verify.set_defaults(handler=cmd_verify)

    gen = sub.add_parser("gen", help="generate random instances")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--model", choices=[m.value for m in Model], default=Model.SRI_UNIFORM.value)
    gen.add_argument("--cap", type=int, default=4, help="longest preference list")
    gen.add_argument("--deviator-fraction", type=float, default=0.3)
    gen.add_argument("--num-deviators", type=int)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--balanced-sides", action="store_true")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--out", help="output file, or directory when --count > 1")
    gen.set_defaults(handler=cmd_gen)

    reduce = sub.add_parser("reduce", help="hardness constructions")
    reductions = reduce.add_subparsers(dest="reduction", required=True)

    sat2smi = reductions.add_parser("sat2smi", help="(2,2)-E3-SAT formula to perfect SMI instance")
    sat2smi.add_argument("cnf", help="DIMACS file")
    sat2smi.add_argument("--witness", help="write a witness matching here if the formula is satisfiable")
    sat2smi.add_argument("--biro", action="store_true", help="emit the instance without connector gadgets")
    sat2smi.add_argument("--out")
    sat2smi.set_defaults(handler=cmd_reduce_sat2smi)

    smi2sri = reductions.add_parser("smi2sri", help="add deviating companions to every agent")
    smi2sri.add_argument("instance")
    smi2sri.add_argument("--out")
    smi2sri.set_defaults(handler=cmd_reduce_smi2sri)

    complete = reductions.add_parser("complete", help="complete every preference list")
    complete.add_argument("instance")
    complete.add_argument("--out")
    complete.set_defaults(handler=cmd_reduce_complete)

    minba = reductions.add_parser("minba-complete", help="complete lists with k dummies per agent")
    minba.add_argument("instance")
    minba.add_argument("--k", type=int, required=True)
    minba.add_argument("--out")
    minba.set_defaults(handler=cmd_reduce_minba)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    overrides = {}
    if args.threads is not None:
        overrides["threads"] = args.threads
    if args.progress:
        overrides["show_progress"] = True
    if args.verbose:
        overrides["log_level"] = "DEBUG"
    try:
        settings = Settings.from_env()
        settings = Settings(**{**settings.model_dump(), **overrides})
    except ValueError as e:
        logger.error(f"Invalid settings: {e}")
        return EXIT_USAGE
    logging.basicConfig(level=settings.log_level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args, settings)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE
    except (DsmError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
