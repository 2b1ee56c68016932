import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from report.analyze import Analysis, run_analyze
from report.loader import InputLoader, build_request
from report.models import ALL_TASKS, Report
from report.render import render_fan, render_text
from utils.config import Config
from utils.exceptions import EXIT_INTERNAL, CustomException, MalformedInput
from utils.logger import logger


def _task_list(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


class VgitParser(argparse.ArgumentParser):
    """Argument errors are validation failures, not usage exits."""

    def error(self, message: str):
        raise MalformedInput(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--input", help="JSON or TOML file with the weight matrix and labels")
    io.add_argument("--output", help="write the result here instead of stdout")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", dest="output_format", choices=["json", "text", "svg"], default="json")

    parser = VgitParser(prog="vgit", description="Wall crossings for rank-2 torus quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[io, fmt], help="run several tasks at once")
    analyze.add_argument("--tasks", type=_task_list, help=f"comma separated subset of {','.join(ALL_TASKS)}")

    sub.add_parser("fan", parents=[io, fmt], help="rays, walls and chambers")

    strata = sub.add_parser("strata", parents=[io, fmt], help="Kirwan-Ness stratification")
    where = strata.add_mutually_exclusive_group()
    where.add_argument("--chamber", type=int)
    where.add_argument("--near-wall", dest="near_wall", type=int)

    wall = sub.add_parser("wall", parents=[io, fmt], help="balanced wall crossing report")
    wall.add_argument("--index", type=int, required=True)
    wall.add_argument("--window", dest="window_weight", type=int, default=0)

    horn = sub.add_parser("horn", parents=[io, fmt], help="Horn pullback of a monomial")
    horn.add_argument("--lambda", dest="lam", nargs=2, type=int, metavar=("A", "B"), required=True, help="cocharacter (a, b)")

    expected = sub.add_parser("expected", parents=[io, fmt], help="discriminant length versus collection length")
    expected.add_argument("--wall", type=int, required=True)

    kmut = sub.add_parser("kmut", parents=[io, fmt], help="seeded K-theory checks")
    kmut.add_argument("--verify", choices=["311", "412", "braid", "shift"], required=True)
    kmut.add_argument("--corpus", type=int, help="number of random instances")
    kmut.add_argument("--seed", type=int, help=f"corpus seed (default {Config.CORPUS_SEED})")

    render = sub.add_parser("render", parents=[io], help="static picture of the fan")
    render.add_argument("--format", dest="figure", choices=["ascii", "svg"], default="ascii")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    command = args.command
    if command == "analyze":
        return {"tasks": args.tasks}
    if command == "fan":
        return {"tasks": ["fan"]}
    if command == "strata":
        return {"tasks": ["strata"], "chamber": args.chamber, "near_wall": args.near_wall}
    if command == "wall":
        return {"tasks": ["walls"], "wall": args.index, "window_weight": args.window_weight}
    if command == "horn":
        return {"tasks": ["horn"], "lambdas": [list(args.lam)]}
    if command == "expected":
        return {"tasks": ["expected"], "wall": args.wall}
    if command == "kmut":
        return {"tasks": ["kmut"], "kmut_checks": [args.verify], "corpus_size": args.corpus, "seed": args.seed}
    return {}


def report_json(report: Report) -> str:
    data = report.model_dump(mode="json", exclude_none=True, by_alias=True)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def execute(args: argparse.Namespace) -> str:
    """Build the complete output text for one invocation."""
    data: Dict[str, Any] = InputLoader().load_raw(args.input) if args.input else {}
    if args.command == "analyze" and "tasks" not in data and args.tasks is None:
        data["tasks"] = list(ALL_TASKS)
    data.update({key: value for key, value in _overrides(args).items() if value is not None})
    if getattr(args, "output_format", None):
        data["output_format"] = args.output_format
    request = build_request(data)

    if args.command == "render" or request.output_format == "svg":
        if request.weights is None:
            raise MalformedInput("Rendering needs a weight matrix")
        analysis = Analysis(request)
        figure = getattr(args, "figure", "svg")
        return render_fan(analysis.fan, analysis.chamber_labels, analysis.wall_labels, figure)

    report = run_analyze(request)
    if request.output_format == "text":
        return render_text(report)
    return report_json(report)


def main(argv: Optional[List[str]] = None) -> int:
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        text = execute(args)
    except CustomException as e:
        print(f"vgit: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure in {command}: {e}")
        print(f"vgit: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    # the output is complete before anything is written
    if args.output:
        with open(args.output, "w", encoding="utf-8") as file:
            file.write(text)
        logger.info(f"Wrote {args.command} output to {args.output}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
