from pathlib import Path

from active_testing.runs.management.base import NOT_FOUND
from active_testing.runs.management.base import RunCommand
from active_testing.runs.models import FalsificationRun
from active_testing.runs.services import default_report_path
from active_testing.runs.services import execute
from active_testing.runs.services import record
from active_testing.runs.services import summary_line


class Command(RunCommand):
    help = (
        "Run active testing until the specification is certified or falsified. "
        "Exit 0 when verified or falsified, 1 when the budget runs out, 2 on error."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--delta", type=float, help="failure probability of the certificate, in (0, 1)")
        parser.add_argument("--budget", type=int, help="number of search iterations")
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
                delta=options["delta"],
                method="multi-gp-embedded" if loaded.run.embedded else "multi-gp",
            ).with_overrides(verify=True)
            outcome = execute(loaded, config)
            path = options["out"] or loaded.report or default_report_path(loaded, config)
            record(outcome, path, mode=FalsificationRun.Mode.VERIFY).save()
        report = outcome.report
        self.stdout.write(summary_line(outcome, path))
        certificate = report["certificate"]
        if report["verified"]:
            self.stdout.write(
                self.style.SUCCESS(
                    f"verified with probability >= {1 - config.delta:g}: acquisition minimum "
                    f"{certificate['acquisition_min']:.6g} > 0 ({'; '.join(certificate['caveats'])})",
                ),
            )
        elif report["falsified"]:
            self.stdout.write(self.style.WARNING(f"falsified: counterexample with phi {report['worst']['phi']:.6g}"))
        else:
            self.stdout.write(f"not verified within the budget; worst phi so far {report['worst']['phi']:.6g}")
            raise SystemExit(NOT_FOUND)
