import pytest

from selfdual_bch.codes import LinearCode
from selfdual_bch.gf import field_of_order


@pytest.fixture
def gf2():
    return field_of_order(2)


@pytest.fixture
def gf3():
    return field_of_order(3)


@pytest.fixture
def gf5():
    return field_of_order(5)


@pytest.fixture
def hamming(gf2):
    return LinearCode.from_generator(
        gf2,
        [
            [1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ],
    )


@pytest.fixture
def tetracode(gf3):
    return LinearCode.from_generator(gf3, [[1, 0, 1, 1], [0, 1, 1, 2]])


_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def record():
    """Record the outcome line of an acceptance criterion."""

    def _record(number: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[k])
