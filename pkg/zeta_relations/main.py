import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from .commands import COMMANDS, EXIT_USAGE
from .models import CheckName, CoeffFamily, OutputFormat, RelationStyle, RunConfig, SequenceSpec
from .tools import ReportGenerator
from .utils import Config, setup_logger


class ZetaRelations:
    def __init__(self, config_path: Optional[str] = None):
        self.config = Config(config_path)
        self.logger = setup_logger(self.config.log_level, self.config.log_file)
        self.report_generator = ReportGenerator()

    def run(self, run_config: RunConfig) -> int:
        command_cls = COMMANDS[run_config.command]
        command = command_cls(run_config)
        self.logger.debug(f"Running {run_config.command} with {command.get_status()['config']}")

        result = command.run()
        if not result["success"]:
            sys.stderr.write(f"error: {result['error']}\n")
            return result["exit_code"]

        try:
            content = self.report_generator.render(
                run_config.command, result["document"], run_config.format, result["context"]
            )
        except ValueError as e:
            sys.stderr.write(f"error: {e}\n")
            return EXIT_USAGE

        if run_config.out:
            self.report_generator.write(content, run_config.out)
        else:
            sys.stdout.write(content)
        return result["exit_code"]


def build_parser(config: Config) -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("-m", type=int, default=1, help="number of s values")
    shared.add_argument("--precision", type=int, default=config.default_precision, help="decimal digits")
    shared.add_argument("--sequence", default="fibonacci", help="fibonacci | <name> | trace=<int> | beta=<decimal>")
    shared.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    shared.add_argument("--style", choices=[s.value for s in RelationStyle], default=RelationStyle.PHI_PSI.value)
    shared.add_argument("--out", default=None, help="write the document to this path")

    parser = argparse.ArgumentParser(
        prog="zeta-relations",
        description="Linear relations among reciprocal sums of second-order recurrences",
    )
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("basis", parents=[shared], help="canonical basis of V_m")

    matrix = sub.add_parser("matrix", parents=[shared], help="relation matrix dumps")
    matrix.add_argument("action", choices=["dump"])
    matrix.add_argument("--scalar", action="store_true", help="include the scalar expansion")

    series = sub.add_parser("series", parents=[shared], help="Laurent/trigonometric coefficient tables")
    series.add_argument("--family", choices=[f.value for f in CoeffFamily], default=CoeffFamily.C.value)
    series.add_argument("--max-j", type=int, default=4)

    aux = sub.add_parser("aux", parents=[shared], help="auxiliary polynomials and xi kernels")
    aux.add_argument("--max-j", type=int, default=4)

    sub.add_parser("verify", parents=[shared], help="numeric residuals of the basis relations")

    check = sub.add_parser("check", parents=[shared], help="numeric certifications")
    check.add_argument("check", choices=[c.value for c in CheckName])
    check.add_argument("--max-s", type=int, default=6)
    check.add_argument("--points", type=int, default=20)
    check.add_argument("--seed", type=int, default=0)

    return parser


def to_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    fields = {
        "command": args.command,
        "m": args.m,
        "precision": args.precision,
        "sequence": SequenceSpec(selector=args.sequence),
        "format": args.format,
        "style": args.style,
        "out": args.out,
        "guard_digits": config.guard_digits,
        "cross_check_max_m": config.cross_check_max_m,
        "pole_threshold": config.pole_threshold,
        "progress": config.progress,
    }
    for name in ("scalar", "family", "max_j", "check", "max_s", "points", "seed"):
        if hasattr(args, name):
            fields[name] = getattr(args, name)
    return RunConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    app = ZetaRelations()
    parser = build_parser(app.config)
    args = parser.parse_args(argv)

    if args.log_level:
        app.logger = setup_logger(args.log_level, app.config.log_file)

    if not app.config.validate():
        return EXIT_USAGE

    try:
        run_config = to_run_config(args, app.config)
    except ValidationError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    return app.run(run_config)


if __name__ == "__main__":
    sys.exit(main())
