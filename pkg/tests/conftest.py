import pytest

from colorlie.algebra import from_matrices
from colorlie.families import (
    SoParams,
    fixture_so4211,
    fixture_so4222,
    so_cartan_hint,
    so_pqrs,
)
from colorlie.linalg import unit_vec
from colorlie.roots import positive_and_simple, root_decomposition, validate_cartan

# ---------------------------------------------------------------------------
# acceptance-criterion reporting: one line per criterion in the terminal
# summary (pytest captures stdout, so plain prints would be swallowed)
# ---------------------------------------------------------------------------

_criterion_lines = {}


def record_criterion(num: int, desc: str, ok: bool) -> None:
    verdict = "PASS" if ok else "FAIL"
    _criterion_lines[num] = f"criterion {num:2d} [{verdict}] {desc}"


def run_criterion(num: int, desc: str, body) -> None:
    """Run one acceptance check, recording PASS/FAIL before re-raising."""
    try:
        body()
    except BaseException:
        record_criterion(num, desc, False)
        raise
    record_criterion(num, desc, True)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(_criterion_lines):
            terminalreporter.write_line(_criterion_lines[num])


# ---------------------------------------------------------------------------
# shared expensive objects
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def fx4222():
    return fixture_so4222()


@pytest.fixture(scope="session")
def g4222(fx4222):
    return from_matrices(fx4222.realization)


@pytest.fixture(scope="session")
def rs4222(fx4222, g4222):
    hint = [unit_vec(i) for i in fx4222.cartan_indices]
    t = validate_cartan(g4222, hint)
    return positive_and_simple(root_decomposition(g4222, t))


@pytest.fixture(scope="session")
def fx4211():
    return fixture_so4211()


@pytest.fixture(scope="session")
def g4211(fx4211):
    return from_matrices(fx4211.realization)


@pytest.fixture(scope="session")
def rs4211(fx4211, g4211):
    hint = [unit_vec(i) for i in fx4211.cartan_indices]
    t = validate_cartan(g4211, hint)
    return positive_and_simple(root_decomposition(g4211, t))


@pytest.fixture(scope="session")
def real4420():
    return so_pqrs(SoParams(4, 4, 2, 0))


@pytest.fixture(scope="session")
def g4420(real4420):
    return from_matrices(real4420)


@pytest.fixture(scope="session")
def defn4222(g4222, fx4222):
    from colorlie.reps import defining_representation

    return defining_representation(g4222, fx4222.realization)


@pytest.fixture(scope="session")
def adj4222(g4222):
    from colorlie.reps import adjoint_representation

    return adjoint_representation(g4222)


@pytest.fixture(scope="session")
def tensor4222(defn4222):
    from colorlie.reps import tensor_product

    return tensor_product(defn4222, defn4222)


@pytest.fixture(scope="session")
def rs4420(g4420):
    t = validate_cartan(g4420, so_cartan_hint(SoParams(4, 4, 2, 0)))
    return positive_and_simple(root_decomposition(g4420, t))
