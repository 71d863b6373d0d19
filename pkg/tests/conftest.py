import pytest

from quiverhom import BoundAlgebra, MonomialIdeal, Quiver


def linear_relation_algebra(n: int, field: int = 101) -> BoundAlgebra:
    """Linear chain n -> ... -> 1 with the full path killed (needs n >= 2)."""
    quiver = Quiver(list(range(1, n + 1)), [(f"a{i}", i + 1, i) for i in range(1, n)])
    relation = quiver.path([f"a{i}" for i in range(1, n)])
    return BoundAlgebra(quiver, MonomialIdeal([relation]), field)


def a2_algebra(field: int = 101) -> BoundAlgebra:
    return BoundAlgebra(Quiver([1, 2], [("a1", 2, 1)]), MonomialIdeal([]), field)


def cyclic2_algebra(field: int = 101) -> BoundAlgebra:
    quiver = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    ideal = MonomialIdeal([quiver.path(["a", "b"]), quiver.path(["b", "a"])])
    return BoundAlgebra(quiver, ideal, field)


@pytest.fixture(scope="session")
def a2():
    return a2_algebra()


@pytest.fixture(scope="session")
def lin4():
    return linear_relation_algebra(4)


@pytest.fixture(scope="session")
def cyc2():
    return cyclic2_algebra()
