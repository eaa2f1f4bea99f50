import pytest

from nonelem import _backend, _pykernels

try:
    from nonelem import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

BACKENDS = {"python": _pykernels, "cython": _compiled}

# lines recorded by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per kernel implementation."""
    mod = BACKENDS[request.param]
    if mod is None:
        pytest.skip("compiled kernels not built")
    monkeypatch.setattr(_backend, "kernels", mod)
    return request.param


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""

    def _record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] AC{number:<2} {title}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
