from pathlib import Path

from active_testing.runs.management.base import NOT_FOUND
from active_testing.runs.management.base import RunCommand
from active_testing.runs.models import FalsificationRun
from active_testing.runs.services import default_report_path
from active_testing.runs.services import execute
from active_testing.runs.services import record
from active_testing.runs.services import summary_line


class Command(RunCommand):
    help = "Search for a counterexample. Exit 0 if one was found, 1 if none, 2 on error."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--budget", type=int, help="number of search iterations")
        parser.add_argument("--seed", type=int, help="64-bit seed of every random stream")
        parser.add_argument("--method", help="multi-gp, single-gp, random, or an -embedded variant")
        parser.add_argument("--out", type=Path, help="report path")
        self.add_print_tree(parser)

    def handle(self, *args, **options):
        loaded = self.load(options["config"])
        if options["print_tree"]:
            self.print_tree(loaded)
            return
        with self.failures():
            config = loaded.run_config(
                budget=options["budget"],
                seed=options["seed"],
                method=options["method"],
            ).with_overrides(verify=False)
            outcome = execute(loaded, config)
            path = options["out"] or loaded.report or default_report_path(loaded, config)
            record(outcome, path, mode=FalsificationRun.Mode.FALSIFY).save()
        self.stdout.write(summary_line(outcome, path))
        if not outcome.report["falsified"]:
            raise SystemExit(NOT_FOUND)
