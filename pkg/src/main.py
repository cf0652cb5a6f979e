# src/main.py

import argparse
import json
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from src.critical.algorithms import algorithm_I, algorithm_II
from src.embedding.faces import face_trace_genus
from src.embedding.joint_tree import EXPONENT_RULES, associated_surface
from src.embedding.rotation import RotationPlan, format_rotation
from src.engine.search import max_genus_exhaustive
from src.errors import (
    BudgetExceededError,
    FamilySpecError,
    GenusParityError,
    GraphError,
    LabelError,
    OracleMismatchError,
    ReductionError,
    TransformError,
    WordError,
)
from src.families.base import validate_family
from src.families.grammar import format_labels, generate
from src.graph.edgelist import format_edge_list, read_edge_list
from src.graph.spanning import spanning_tree
from src.storage.database import ReportDatabase
from src.surface.oracle import genus_by_corner_orbits
from src.surface.reduction import format_trace, reduce_to_standard
from src.surface.word import parse_word
from src.tracking.budget import EnumerationBudget
from src.tracking.progress import ProgressTracker
from src.verify.suites import SUITES, run_suite

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


class CheckFailed(Exception):
    """A method disagreed with the exhaustive engine or a suite found counterexamples."""


def _emit(lines: List[str]):
    for line in lines:
        print(line)


def _load_graph(args):
    """Graph plus its label object (None for edge-list input)."""
    if args.family:
        lg = generate(args.family)
        return lg.graph, lg
    return read_edge_list(args.input), None


def _save(args, tracker: ProgressTracker, kind: str, subject: str, report: dict):
    if args.save and tracker.db is not None:
        tracker.db.save_report(tracker.get_run_id(), kind, subject, report)


# -- subcommands --------------------------------------------------------------

def cmd_reduce(args, tracker: ProgressTracker) -> int:
    word = parse_word(args.word)
    result = reduce_to_standard(word)
    corners = genus_by_corner_orbits(word)
    if corners != result.genus:
        raise OracleMismatchError(f"transforms give genus {result.genus}, corner classes give {corners}")

    if args.json:
        data = {"word": str(word), "genus": result.genus, "standard_form": str(result.word)}
        if args.trace:
            data["trace"] = format_trace(result.trace)
        print(json.dumps(data, sort_keys=True))
    else:
        _emit([f"genus={result.genus}", f"standard_form={result.word}"])
        if args.trace:
            _emit(format_trace(result.trace))
    _save(args, tracker, "reduce", str(word), {"genus": result.genus, "standard_form": str(result.word)})
    return EXIT_OK


def cmd_max_genus(args, tracker: ProgressTracker) -> int:
    g, lg = _load_graph(args)
    subject = args.family or args.input
    options = dict(jobs=args.jobs, force=args.force)
    usage = EnumerationBudget()
    usage.set_run_id(tracker.get_run_id())

    if args.method == "brute":
        report = max_genus_exhaustive(
            g, early_exit=not args.no_early_exit, progress=tracker, **options
        )
        usage.track(subject, g, report)
        logger.info("enumerated %d of %d rotation systems", usage.total_systems, usage.calculate_cost(g))
        if report.max_genus > report.euler_bound:
            raise CheckFailed(f"genus {report.max_genus} exceeds the Euler bound {report.euler_bound}")
        data = report.to_dict(timing=not args.no_timing)
        if args.json:
            print(json.dumps(data, sort_keys=True))
        else:
            lines = report.summary_lines()
            _emit([line for line in lines if not (args.no_timing and line.startswith("elapsed_ms"))])
        _save(args, tracker, "max-genus", subject, data)
        return EXIT_OK

    if args.method == "alg1":
        trace = algorithm_I(g, **options)
    else:
        if lg is None:
            raise LabelError("--method alg2 needs a labeled --family spiral, not an edge list")
        trace = algorithm_II(lg)

    data = trace.to_dict()
    bound = g.betti() // 2
    if trace.total > bound:
        raise CheckFailed(f"total {trace.total} exceeds the Euler bound {bound}")
    failure = None
    if args.check:
        check_report = max_genus_exhaustive(g, **options)
        usage.track(subject, g, check_report)
        oracle = check_report.max_genus
        data["check"] = {"exhaustive": oracle, "agree": oracle == trace.total}
        if oracle != trace.total:
            failure = f"{args.method} total {trace.total} != exhaustive {oracle}"

    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        _emit(trace.summary_lines())
        if args.check:
            _emit([f"check={'pass' if failure is None else 'fail'}"])
    _save(args, tracker, args.method, subject, data)
    if failure:
        raise CheckFailed(failure)
    return EXIT_OK


def cmd_joint_tree(args, tracker: ProgressTracker) -> int:
    g, _ = _load_graph(args)
    if args.tree:
        try:
            tree = spanning_tree(g, [int(e) for e in args.tree.split(",")])
        except ValueError:
            raise GraphError(f"--tree expects comma-separated edge ids, got {args.tree!r}") from None
    else:
        tree = spanning_tree(g)
    plan = RotationPlan(g)
    try:
        system = plan.system_at(args.rotation_index)
    except IndexError as e:
        raise GraphError(str(e)) from None

    word = associated_surface(g, tree, system, exponent_rule=args.exponent_rule)
    by_word = reduce_to_standard(word).genus
    by_faces = face_trace_genus(g, system)
    if by_word != by_faces:
        raise OracleMismatchError(f"associated surface genus {by_word} != face tracing genus {by_faces}")

    data = {
        "tree": sorted(tree.tree_edges),
        "cotree": list(tree.cotree),
        "rotation_index": args.rotation_index,
        "rotation": format_rotation(system),
        "word": str(word),
        "genus": by_word,
    }
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        _emit([f"word={word}", f"genus_word={by_word}", f"genus_faces={by_faces}"])
        _emit(format_rotation(system))
    _save(args, tracker, "joint-tree", args.family or args.input, data)
    return EXIT_OK


def cmd_family(args, tracker: ProgressTracker) -> int:
    lg = generate(args.spec)
    if args.report:
        _emit(validate_family(lg).summary_lines())
    else:
        sys.stdout.write(format_edge_list(lg.graph))
    if args.labels:
        with open(args.labels, "w", encoding="utf-8") as f:
            f.write(format_labels(lg) + "\n")
    return EXIT_OK


def cmd_verify(args, tracker: ProgressTracker) -> int:
    result = run_suite(args.suite, args.range, args.seed, tracker=tracker)
    _emit(result.summary_lines())
    _save(args, tracker, "verify", args.suite, {
        "suite": result.name,
        "checked": result.checked,
        "counterexamples": result.counterexamples,
    })
    if not result.passed:
        raise CheckFailed(f"{len(result.counterexamples)} counterexample(s) in suite {args.suite}")
    return EXIT_OK


def cmd_history(args, tracker: ProgressTracker) -> int:
    db = tracker.db or ReportDatabase()
    runs = db.get_run_records(limit=args.limit)
    if args.json:
        print(json.dumps([
            {
                "id": run.id,
                "command": run.command,
                "status": run.status,
                "reports": [
                    {"kind": r.kind, "subject": r.subject, "max_genus": r.max_genus}
                    for r in db.get_report_records(run.id)
                ],
            }
            for run in runs
        ], sort_keys=True))
        return EXIT_OK

    for run in runs:
        _emit([f"run {run.id} {run.command} {run.status} reports={run.report_count}"])
        for report in db.get_report_records(run.id):
            genus = "-" if report.max_genus is None else report.max_genus
            _emit([f"  {report.kind} {report.subject} max_genus={genus}"])
    return EXIT_OK


COMMANDS = {
    "reduce": cmd_reduce,
    "max-genus": cmd_max_genus,
    "joint-tree": cmd_joint_tree,
    "family": cmd_family,
    "verify": cmd_verify,
    "history": cmd_history,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="Log engine and reduction details")
    common.add_argument("--save", action="store_true", help="Archive the run in the SQLite report database")
    common.add_argument("--json", action="store_true", help="Print a JSON report")

    parser = argparse.ArgumentParser(description="Maximum genus of graphs via joint-trees")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="Reduce a surface word to standard form")
    p.add_argument("word", help='Word such as "a b a^-1 b^-1"')
    p.add_argument("--trace", action="store_true", help="Print every transform step")

    def graph_source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", help="Edge-list file")
        group.add_argument("--family", help="Family spec, e.g. spiral:5,6 or extspiral:5,6:13-14")

    p = sub.add_parser("max-genus", parents=[common], help="Compute the maximum genus of a graph")
    graph_source(p)
    p.add_argument("--method", choices=["brute", "alg1", "alg2"], default="brute")
    p.add_argument("--no-early-exit", action="store_true", help="Enumerate every rotation system")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes for enumeration")
    p.add_argument("--check", action="store_true", help="Also run the exhaustive engine and compare")
    p.add_argument("--force", action="store_true", help="Ignore the enumeration budget")
    p.add_argument("--no-timing", action="store_true", help="Omit elapsed_ms for byte-stable output")

    p = sub.add_parser("joint-tree", parents=[common], help="Read the associated surface of a joint-tree")
    graph_source(p)
    p.add_argument("--tree", help="Comma-separated spanning tree edge ids")
    p.add_argument("--rotation-index", type=int, default=0)
    p.add_argument("--exponent-rule", choices=list(EXPONENT_RULES), default="lower-end")

    p = sub.add_parser("family", parents=[common], help="Print a family member as an edge list")
    p.add_argument("spec", help="cycle:m | mobius:n | neckband:n | spiral:m,n | extspiral:m,n:x-y,... | k4 | wheel")
    p.add_argument("--labels", help="Write the JSON label sidecar to this path")
    p.add_argument("--report", action="store_true", help="Print degree and cycle-rank facts instead")

    p = sub.add_parser("verify", parents=[common], help="Run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--range", help="Suite parameters, e.g. 3..4 or neckband:2..4")
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("history", parents=[common], help="List archived runs and their reports")
    p.add_argument("--limit", type=int, default=10)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    tracker = ProgressTracker()
    tracker.set_show_progress(args.verbose or args.command == "verify")
    if args.save:
        tracker.set_db(ReportDatabase())
    tracker.start_run(args.command)

    try:
        code = COMMANDS[args.command](args, tracker)
        tracker.finish_run("completed")
        return code
    except (WordError, GraphError, FamilySpecError, LabelError, OSError) as e:
        code, message = EXIT_INPUT, str(e)
    except BudgetExceededError as e:
        code, message = EXIT_BUDGET, str(e)
    except (CheckFailed, GenusParityError, OracleMismatchError, ReductionError, TransformError) as e:
        code, message = EXIT_VIOLATION, str(e)

    tracker.add_error(message)
    tracker.finish_run("failed")
    print(f"Error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
