from django.db import models
from model_utils.models import TimeStampedModel


class BenchSession(TimeStampedModel):
    """One invocation of the bench command; its repeats are FalsificationRuns."""

    config_path = models.CharField(max_length=500)
    methods = models.CharField(max_length=255)
    repeats = models.PositiveIntegerField()
    output_dir = models.CharField(max_length=500, blank=True)
    completed = models.BooleanField(default=False)

    class Meta:
        ordering = ["-created"]

    def __str__(self):
        return f"bench {self.config_path} ({self.methods} x {self.repeats})"

    @property
    def method_list(self) -> list[str]:
        return [method for method in self.methods.split(",") if method]


class FalsificationRun(TimeStampedModel):
    class Mode(models.TextChoices):
        FALSIFY = "falsify", "Falsify"
        VERIFY = "verify", "Verify"
        BENCH = "bench", "Bench"

    session = models.ForeignKey(
        BenchSession,
        null=True,
        blank=True,
        on_delete=models.CASCADE,
        related_name="runs",
    )
    mode = models.CharField(max_length=16, choices=Mode.choices, default=Mode.FALSIFY)
    method = models.CharField(max_length=64)
    environment = models.CharField(max_length=64)
    specification = models.TextField()
    seed = models.DecimalField(max_digits=20, decimal_places=0)
    budget = models.PositiveIntegerField()
    evaluations = models.PositiveIntegerField()
    worst_phi = models.FloatField()
    counterexample_count = models.PositiveIntegerField()
    falsified = models.BooleanField(default=False)
    verified = models.BooleanField(default=False)
    stopped_early = models.BooleanField(default=False)
    convergence_iteration = models.PositiveIntegerField(null=True, blank=True)
    wall_time = models.FloatField(help_text="seconds")
    report_path = models.CharField(max_length=500, blank=True)

    class Meta:
        ordering = ["-created"]

    def __str__(self):
        return f"{self.method} seed {self.seed} on {self.environment}: worst phi {self.worst_phi:.4g}"

    @classmethod
    def from_report(cls, report: dict, *, mode: str, wall_time: float, report_path: str = "", session=None):
        return cls(
            session=session,
            mode=mode,
            method=report["method"],
            environment=report["environment"]["kind"],
            specification=report["specification"],
            seed=report["seed"],
            budget=report["config"]["budget"],
            evaluations=len(report["history"]),
            worst_phi=report["worst"]["phi"],
            counterexample_count=report["counterexample_count"],
            falsified=report["falsified"],
            verified=report["verified"],
            stopped_early=report["stopped_early"],
            convergence_iteration=report["convergence_iteration"],
            wall_time=wall_time,
            report_path=report_path,
        )
