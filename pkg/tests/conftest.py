import pytest

from dcposets import Poset, analyze, builtin_poset, d_k_one, shifted_young, tree, young


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset(n, [])


FAMILY = {
    "singleton": chain(1),
    "chain5": chain(5),
    "antichain2": antichain(2),
    "d3": d_k_one(3),
    "d4": d_k_one(4),
    "d5": d_k_one(5),
    "d4-named": builtin_poset("d4-named"),
    "sample10": builtin_poset("sample10"),
    "young-3.2": young((3, 2)),
    "young-2.2.1": young((2, 2, 1)),
    "young-3.3": young((3, 3)),
    "shifted-3.1": shifted_young((3, 1)),
    "shifted-4.3.1": shifted_young((4, 3, 1)),
    "tree-star": tree([None, 0, 0, 0]),
    "tree-mixed": tree([None, 0, 0, 1, 1, 2]),
}


@pytest.fixture(scope="session")
def family():
    return dict(FAMILY)


@pytest.fixture(scope="session")
def analyses():
    return {name: analyze(P) for name, P in FAMILY.items()}
