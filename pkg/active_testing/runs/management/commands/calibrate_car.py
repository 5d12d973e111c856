import numpy as np
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from active_testing.envs import CAR_GAINS
from active_testing.envs import calibrate_car_gains
from active_testing.envs.car import nominal_clearance
from active_testing.exceptions import SimulationError


class Command(BaseCommand):
    help = "Pick car controller gains whose nominal run (every reading at the obstacle) is near-critical."

    def add_arguments(self, parser):
        parser.add_argument("--k1", type=float, default=CAR_GAINS[0], help="position gain")
        parser.add_argument("--target", type=float, default=0.025, help="desired nominal clearance")
        parser.add_argument("--upper", type=float, default=0.1, help="largest acceptable clearance")

    def handle(self, *args, **options):
        candidates = np.round(np.arange(-1.0, -5.001, -0.25), 2)
        for k2 in candidates:
            clearance = nominal_clearance(options["k1"], float(k2))
            self.stdout.write(f"k2={k2:6.2f}  clearance={clearance:.5f}")
        try:
            k1, k2, clearance = calibrate_car_gains(
                options["k1"],
                candidates,
                target=options["target"],
                upper=options["upper"],
            )
        except SimulationError as exc:
            raise CommandError(str(exc), returncode=2) from exc
        self.stdout.write(self.style.SUCCESS(f"k1 = {k1:g}, k2 = {k2:g} (nominal clearance {clearance:.5f})"))
