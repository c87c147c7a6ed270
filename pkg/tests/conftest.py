import pytest
from hypothesis import settings

from hypercut import _backend

settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

ACCEPTANCE: dict[int, str] = {}

BACKENDS = ["python"] + (["cython"] if _backend._sweep_c is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
