from celery import shared_task

from .configfile import load_config
from .services import execute


@shared_task()
def run_bench_repeat(config_path: str, method: str, seed: int, budget: int | None = None) -> dict:
    """One bench repeat; returns the validated-schema report and its wall time."""
    loaded = load_config(config_path)
    config = loaded.run_config(method=method, seed=seed, budget=budget)
    outcome = execute(loaded, config)
    return {"report": outcome.report, "wall_time": outcome.wall_time}
