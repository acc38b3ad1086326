"""Small hand-made instances shared by the tests."""

from alldiff import AllDifferent, Domain, DomainStore, Problem


def store(*domains) -> DomainStore:
    return DomainStore([Domain(d) for d in domains])


def single(*domains) -> Problem:
    s = store(*domains)
    return Problem(s, (AllDifferent(tuple(range(len(s)))),))


def hole_example() -> Problem:
    """x1 in {1,3}, x2 in {2}, x3 in {1,2,3}."""
    return single({1, 3}, {2}, {1, 2, 3})


def two_values_three_vars() -> Problem:
    return single({1, 3}, {1, 3}, {1, 3})


def hall_interval_example() -> Problem:
    return single({1, 2}, {1, 2}, {2, 3})


def staircase(n: int) -> Problem:
    """x1..x_{n-1} over {1..n-1}, x_n over {1..n}."""
    return single(*([range(1, n)] * (n - 1)), range(1, n + 1))
