from __future__ import annotations

import contextlib
from pathlib import Path

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from active_testing.exceptions import ActiveTestingError
from active_testing.runs.configfile import LoadedConfig
from active_testing.runs.configfile import load_config
from active_testing.speclang import render_tree

# Exit statuses of the run commands; errors leave through CommandError.
FOUND = 0
NOT_FOUND = 1
ERROR = 2


class RunCommand(BaseCommand):
    """Shared plumbing of the commands that execute run configurations."""

    def add_arguments(self, parser):
        parser.add_argument("config", type=Path, help="TOML run configuration")

    def add_print_tree(self, parser):
        parser.add_argument(
            "--print-tree",
            action="store_true",
            help="print the parse tree of the specification and exit",
        )

    @contextlib.contextmanager
    def failures(self):
        """Turn library and I/O failures into exit status 2."""
        try:
            yield
        except ActiveTestingError as exc:
            raise CommandError(str(exc), returncode=ERROR) from exc
        except OSError as exc:
            raise CommandError(f"{exc}", returncode=ERROR) from exc

    def load(self, path: Path) -> LoadedConfig:
        with self.failures():
            return load_config(path)

    def print_tree(self, loaded: LoadedConfig) -> None:
        self.stdout.write(render_tree(loaded.tree))
