import pytest

from active_testing.engine import active_test
from active_testing.engine import build_report
from active_testing.runs.configfile import load_config
from active_testing.runs.models import FalsificationRun
from active_testing.runs.tests.factories import BenchSessionFactory
from active_testing.runs.tests.factories import FalsificationRunFactory

pytestmark = pytest.mark.django_db


def test_run_str():
    run = FalsificationRunFactory(method="random", seed=4, worst_phi=-0.05)
    assert str(run) == "random seed 4 on synthetic-sincos: worst phi -0.05"


def test_session_methods():
    session = BenchSessionFactory(methods="multi-gp,multi-gp-embedded,random")
    assert session.method_list == ["multi-gp", "multi-gp-embedded", "random"]
    FalsificationRunFactory.create_batch(2, session=session)
    assert session.runs.count() == 2  # noqa: PLR2004


def test_from_report(sincos_config):
    loaded = load_config(sincos_config)
    environment = loaded.environment()
    result = active_test(loaded.specification, environment, loaded.run)
    report = build_report(result, loaded.run, environment, loaded.specification)
    run = FalsificationRun.from_report(report, mode=FalsificationRun.Mode.VERIFY, wall_time=1.5)
    run.save()
    run.refresh_from_db()
    assert run.method == "multi-gp"
    assert run.environment == "synthetic-sincos"
    assert run.evaluations == 7  # noqa: PLR2004
    assert run.worst_phi == result.worst_phi
    assert run.counterexample_count == result.counterexample_count
    assert run.session is None
