import pytest

from kmroots.catalog import load_bundled_catalog
from kmroots.classify import UNDECOMPOSED_SUFFIX

# criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def catalog():
    return load_bundled_catalog()


@pytest.fixture(scope="session")
def undecomposed(catalog):
    """The minimal pairs without decomposed dihedral angles, by dimension then group index."""
    rows = [r for r in catalog if r.provenance.endswith(UNDECOMPOSED_SUFFIX)]
    return sorted(rows, key=lambda r: (r.ambient.n_plus_1, r.expected_group_index))


@pytest.fixture
def criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE[number] = (passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
        assert passed, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
