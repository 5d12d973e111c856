import json
import logging
from pathlib import Path

from django.core.management.base import CommandError

from active_testing.runs.management.base import ERROR
from active_testing.runs.management.base import RunCommand
from active_testing.runs.models import BenchSession
from active_testing.runs.models import FalsificationRun
from active_testing.runs.resources import FalsificationRunResource
from active_testing.runs.services import Outcome
from active_testing.runs.services import record
from active_testing.runs.services import run_rows
from active_testing.runs.services import summarize
from active_testing.runs.services import summary_dataset
from active_testing.runs.tasks import run_bench_repeat

logger = logging.getLogger(__name__)


class Command(RunCommand):
    help = "Repeat every method with seeds seed, seed + 1, ... and tabulate the outcomes."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--repeats", type=int, help="repeats per method")
        parser.add_argument("--methods", help="comma-separated method labels")
        parser.add_argument("--budget", type=int, help="number of search iterations")
        parser.add_argument("--out", type=Path, help="output directory")

    def handle(self, *args, **options):
        loaded = self.load(options["config"])
        repeats = options["repeats"] if options["repeats"] is not None else loaded.bench.repeats
        if repeats < 1:
            msg = "--repeats must be at least 1"
            raise CommandError(msg, returncode=ERROR)
        methods = options["methods"].split(",") if options["methods"] else list(loaded.bench.methods)
        with self.failures():
            # reject bad labels before anything runs
            for method in methods:
                loaded.run_config(method=method)
        out = options["out"] or loaded.output_dir or Path("bench") / loaded.name
        session = BenchSession.objects.create(
            config_path=str(options["config"]),
            methods=",".join(methods),
            repeats=repeats,
            output_dir=str(out),
        )

        jobs = [(method, loaded.run.seed + repeat) for method in methods for repeat in range(repeats)]
        pending = []
        runs: list[FalsificationRun] = []
        try:
            # workers run repeats in parallel; reports are written here, one at a time
            for method, seed in jobs:
                result = run_bench_repeat.delay(str(options["config"]), method, seed, options["budget"])
                pending.append((method, seed, result))
            for method, seed, result in pending:
                runs.append(self._store(session, out, method, seed, result.get()))
        except Exception as exc:
            for method, seed, result in pending[len(runs) :]:
                if result.successful():
                    runs.append(self._store(session, out, method, seed, result.result))
            logger.exception("Bench aborted after %d of %d runs", len(runs), len(jobs))
            self._flush(session, out, runs)
            msg = f"bench aborted after {len(runs)} of {len(jobs)} runs: {exc}"
            raise CommandError(msg, returncode=ERROR) from exc

        summary = self._flush(session, out, runs)
        session.completed = True
        session.save(update_fields=["completed", "modified"])
        for row in summary:
            converged = "-" if row["convergence_median"] is None else f"{row['convergence_median']:g}"
            self.stdout.write(
                f"{row['method']:<20} counterexamples {row['counterexamples_mean']:.2f} +- "
                f"{row['counterexamples_std']:.2f}  worst phi {row['worst_phi_mean']:.5g} +- "
                f"{row['worst_phi_std']:.3g}  converged at {converged} ({row['not_converged']} not converged)",
            )
        self.stdout.write(f"{len(runs)} runs written to {out}")

    def _store(self, session, out: Path, method: str, seed: int, payload: dict) -> FalsificationRun:
        path = out / "reports" / f"{method}-seed{seed}.json"
        run = record(
            Outcome(report=payload["report"], wall_time=payload["wall_time"]),
            path,
            mode=FalsificationRun.Mode.BENCH,
            session=session,
        )
        run.save()
        return run

    def _flush(self, session, out: Path, runs: list[FalsificationRun]) -> list[dict]:
        """Write the raw rows, the aggregate table and bench.json for the runs so far."""
        out.mkdir(parents=True, exist_ok=True)
        queryset = FalsificationRun.objects.filter(pk__in=[run.pk for run in runs]).order_by("pk")
        (out / "bench_runs.csv").write_text(FalsificationRunResource().export(queryset).csv, encoding="utf-8")
        rows = run_rows(queryset)
        summary = summarize(rows)
        (out / "bench_summary.csv").write_text(summary_dataset(summary).csv, encoding="utf-8")
        document = {
            "config": session.config_path,
            "methods": session.method_list,
            "repeats": session.repeats,
            "complete": len(runs) == len(session.method_list) * session.repeats,
            "summary": summary,
            "runs": rows,
        }
        (out / "bench.json").write_text(json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        return summary
