import pytest

from torsplit.rootdata import build_root_datum

# (series, rank, isogeny) for the small built-ins exercised throughout
SMALL_TYPES = [
    ("A", 1, "sc"),
    ("A", 1, "adjoint"),
    ("A", 2, "sc"),
    ("A", 2, "adjoint"),
    ("A", 2, "gl"),
    ("B", 2, "sc"),
    ("B", 2, "adjoint"),
    ("C", 2, "sc"),
    ("C", 2, "adjoint"),
    ("G", 2, "sc"),
]

RANK3_TYPES = [
    ("A", 3, "sc"),
    ("A", 3, "adjoint"),
    ("B", 3, "sc"),
    ("B", 3, "adjoint"),
    ("C", 3, "sc"),
    ("C", 3, "adjoint"),
]


def type_id(t):
    return f"{t[0]}{t[1]}-{t[2]}"


@pytest.fixture
def sl2():
    return build_root_datum("A", 1, "sc")


@pytest.fixture
def pgl2():
    return build_root_datum("A", 1, "adjoint")


@pytest.fixture
def gl3():
    return build_root_datum("A", 2, "gl")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running cross-checks (deselect with -m 'not slow')")
