import os
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quasitruth import kernel, load_kb  # noqa: E402

SCENARIOS = Path(__file__).resolve().parents[1] / "src" / "quasitruth" / "scenarios"


@pytest.fixture(scope="session")
def scenario():
    def path(name):
        return SCENARIOS / f"{name}.kb.json"
    return path


@pytest.fixture(scope="session")
def kb_of(scenario):
    cache = {}

    def load(name):
        if name not in cache:
            cache[name] = load_kb(scenario(name))
        return cache[name]
    return load


@pytest.fixture(params=sorted(kernel.BACKENDS))
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def run_cli():
    def run(*args, env=None):
        full_env = dict(os.environ)
        full_env.update(env or {})
        return subprocess.run(
            [sys.executable, "-m", "quasitruth", *map(str, args)],
            capture_output=True, text=True, check=False, timeout=60, env=full_env,
        )
    return run


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
