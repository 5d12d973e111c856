from factory import Faker
from factory import LazyAttribute
from factory import SubFactory
from factory.django import DjangoModelFactory

from active_testing.runs.models import BenchSession
from active_testing.runs.models import FalsificationRun


class BenchSessionFactory(DjangoModelFactory[BenchSession]):
    config_path = "configs/sincos.toml"
    methods = "multi-gp,single-gp"
    repeats = 3
    output_dir = "reports/bench"

    class Meta:
        model = BenchSession


class FalsificationRunFactory(DjangoModelFactory[FalsificationRun]):
    session = SubFactory(BenchSessionFactory)
    mode = FalsificationRun.Mode.BENCH
    method = "multi-gp"
    environment = "synthetic-sincos"
    specification = "mu1 or mu2"
    seed = Faker("random_int", min=0, max=1000)
    budget = 15
    evaluations = 20
    worst_phi = Faker("pyfloat", min_value=-0.06, max_value=1.0)
    counterexample_count = LazyAttribute(lambda run: 3 if run.worst_phi <= 0 else 0)
    falsified = LazyAttribute(lambda run: run.counterexample_count > 0)
    verified = False
    stopped_early = False
    convergence_iteration = Faker("random_int", min=1, max=15)
    wall_time = Faker("pyfloat", min_value=0.1, max_value=5.0)
    report_path = LazyAttribute(lambda run: f"reports/{run.method}-seed{run.seed}.json")

    class Meta:
        model = FalsificationRun
