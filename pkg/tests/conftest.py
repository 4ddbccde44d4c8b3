import pytest

from grasscert.spaces import CP, S2xS2, GrassEven, GrassOdd, Sphere, StiefelEven, StiefelOdd

CATALOG = ([CP(n) for n in range(1, 7)] + [GrassOdd(k) for k in range(2, 9)]
           + [GrassEven(k) for k in range(2, 7)] + [StiefelOdd(k) for k in range(2, 6)]
           + [StiefelEven(k) for k in range(2, 6)] + [Sphere(n) for n in (1, 2, 3, 7)] + [S2xS2])


@pytest.fixture(params=CATALOG, ids=lambda s: s.label)
def space(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
