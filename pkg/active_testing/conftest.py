import pytest


@pytest.fixture(autouse=True)
def _report_dir(settings, tmp_path) -> None:
    settings.ACTIVE_TESTING_REPORT_DIR = str(tmp_path / "reports")
