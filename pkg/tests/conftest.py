from functools import lru_cache

import pytest

from wordlab.catalog import STANDARD_CATALOG, catalog_group


@lru_cache(maxsize=None)
def grp(name):
    return catalog_group(name)


def catalog_upto(n):
    return [name for name in STANDARD_CATALOG if grp(name).order <= n]


def elem(G, cycles):
    """Element index from cycle notation."""
    return G.parse_element(cycles)


@pytest.fixture
def S3():
    return grp("S3")


@pytest.fixture
def Q8():
    return grp("Q8")


@pytest.fixture
def A5():
    return grp("A5")


# acceptance criteria report: number -> (passed, description, detail)
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}  {detail}".rstrip())
