import pytest

from cycleset import CycleSet, enumerate_cycle_sets
from cycleset.perms import from_cycles


def cs_from_cycles(n, specs):
    """Build a cycle set from cycle-notation rows, e.g. [[(1,2,3,4)], []]."""
    return CycleSet(n, tuple(from_cycles(n, cycs) for cycs in specs))


@pytest.fixture
def ex1():
    """psi = (1234), (1432), (24), (13): class 2, group order 8."""
    return cs_from_cycles(4, [[(1, 2, 3, 4)], [(1, 4, 3, 2)], [(2, 4)], [(1, 3)]])


@pytest.fixture
def decomposable4():
    """One-line rows 2143, 2143, 2134, 2134: orbits {1,2} and {3,4}."""
    return CycleSet.from_rows([(2, 1, 4, 3), (2, 1, 4, 3), (2, 1, 3, 4), (2, 1, 3, 4)])


@pytest.fixture
def zappa_s1():
    """Class-2 structure on five points."""
    return cs_from_cycles(
        5, [[(1, 2, 3, 4)], [(1, 4, 3, 2)], [(1, 2, 3, 4)], [(1, 4, 3, 2)], []]
    )


@pytest.fixture
def zappa_s2():
    """Class-3 structure on five points."""
    return cs_from_cycles(
        5, [[(3, 5, 4)], [(3, 5, 4)], [(3, 4, 5)], [(3, 4, 5)], [(3, 4, 5)]]
    )


@pytest.fixture
def zappa_candidate():
    """The (invalid) composition of zappa_s1 and zappa_s2."""
    return cs_from_cycles(
        5,
        [
            [(1, 2, 4), (3, 5)],
            [(1, 5, 3, 2)],
            [(1, 2, 5, 4)],
            [(1, 3, 2), (4, 5)],
            [(3, 5, 4)],
        ],
    )


@pytest.fixture
def exdec():
    """Size 8, class 6: the indecomposable set with two Sylow factors."""
    return cs_from_cycles(
        8,
        [
            [(1, 2), (3, 6), (4, 7), (5, 8)],
            [(1, 6, 5, 8), (2, 3, 4, 7)],
            [(1, 8, 3, 4), (2, 7, 6, 5)],
            [(1, 2), (3, 8), (4, 5), (6, 7)],
            [(1, 4, 3, 8), (2, 5, 6, 7)],
            [(1, 8, 5, 6), (2, 7, 4, 3)],
            [(1, 6), (2, 3), (4, 5), (7, 8)],
            [(1, 4), (2, 5), (3, 6), (7, 8)],
        ],
    )


@pytest.fixture
def exdec_factor2():
    """Printed class-2 factor of exdec (the bracket-3 retraction)."""
    return cs_from_cycles(
        8,
        [
            [(1, 4, 7, 6), (2, 5, 8, 3)],
            [(1, 4, 7, 6), (2, 5, 8, 3)],
            [(1, 8), (2, 7), (3, 6), (4, 5)],
            [(1, 6, 7, 4), (2, 3, 8, 5)],
            [(1, 6, 7, 4), (2, 3, 8, 5)],
            [(1, 8), (2, 7), (3, 6), (4, 5)],
            [(1, 2), (3, 4), (5, 6), (7, 8)],
            [(1, 2), (3, 4), (5, 6), (7, 8)],
        ],
    )


@pytest.fixture
def exdec_factor3():
    """Printed class-3 factor of exdec (the bracket-2 retraction)."""
    rows = []
    for i in range(1, 9):
        if i % 2 == 1:
            rows.append([(1, 3, 5), (2, 6, 4)])
        else:
            rows.append([(1, 5, 3), (2, 4, 6)])
    return cs_from_cycles(8, rows)


@pytest.fixture(scope="session")
def small_sets():
    """All labeled cycle sets of sizes 1..4, via the reference backend."""
    return {
        n: list(enumerate_cycle_sets(n, backend="python")) for n in range(1, 5)
    }
