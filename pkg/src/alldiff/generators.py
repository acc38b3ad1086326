"""Benchmark and test instance generators.

Every generator is deterministic: the same parameters give the same
:class:`~alldiff.model.Problem`.
"""

from __future__ import annotations

import random

from .model import AllDifferent, Domain, DomainStore, Problem

SPEAKERS = (
    ("Sebastian", 3, 6),
    ("Frederic", 3, 4),
    ("JanGeorg", 2, 5),
    ("Krzysztof", 2, 4),
    ("Maarten", 3, 4),
    ("Luca", 1, 6),
)


def _single(domains, names=None) -> Problem:
    domains = DomainStore(domains)
    return Problem(domains, (AllDifferent(tuple(range(len(domains)))),), names)


def speeches() -> Problem:
    """Six one-hour talks, each with a window of admissible hourly slots."""
    return _single([Domain.interval(lo, hi) for _, lo, hi in SPEAKERS],
                   tuple(name for name, _, _ in SPEAKERS))


def revised_speeches() -> Problem:
    """The talk schedule after two speakers withdraw."""
    keep = [s for s in SPEAKERS if s[0] not in ("Krzysztof", "Luca")]
    return _single([Domain.interval(lo, hi) for _, lo, hi in keep],
                   tuple(name for name, _, _ in keep))


def nqueens(n: int) -> Problem:
    """``q_i`` is the row of the queen in column ``i``, values 1..n.

    Rows, rising diagonals (``q_i + i``) and falling diagonals
    (``q_i - i``) are each an alldifferent over the same variables.
    """
    if n < 1:
        raise ValueError("nqueens needs n >= 1")
    cols = tuple(range(n))
    return Problem(
        DomainStore([Domain.interval(1, n)] * n),
        (AllDifferent(cols),
         AllDifferent(cols, tuple(range(n))),
         AllDifferent(cols, tuple(-i for i in range(n)))),
        tuple(f"q{i + 1}" for i in range(n)),
    )


def random_problem(n: int, lo: int, hi: int, density: float, seed: int) -> Problem:
    """One alldifferent over ``n`` variables with random subsets of ``[lo, hi]``.

    Each value enters a domain with probability ``density``; a domain that
    comes out empty receives one uniformly chosen value instead.
    """
    if n < 1:
        raise ValueError("random needs n >= 1")
    if lo > hi:
        raise ValueError(f"empty value range [{lo},{hi}]")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    domains = []
    for _ in range(n):
        vals = [v for v in range(lo, hi + 1) if rng.random() < density]
        domains.append(Domain(vals or [rng.randint(lo, hi)]))
    return _single(domains)


def planted_permutation(n: int, max_size: int, seed: int) -> Problem:
    """Feasible instance: variable ``i`` gets value ``perm[i]`` plus random others.

    Domain sizes are uniform in ``[1, max_size]``, values in ``[1, n]``.
    """
    rng = random.Random(seed)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    domains = []
    for i in range(n):
        k = rng.randint(1, min(max_size, n))
        vals = set(rng.sample(range(1, n + 1), k - 1)) if k > 1 else set()
        vals.add(perm[i])
        domains.append(Domain(vals))
    return _single(domains)


def nested_intervals(n: int, max_size: int, seed: int) -> Problem:
    """Feasible instance with a chain of Hall sets and heavy pruning.

    Before relabelling, the ``i``-th domain is a random subset of
    ``[1, i]`` that contains ``i`` and has at most ``max_size`` values.
    Every prefix is then a Hall set, so hyper-arc consistency fixes each
    variable. Values are relabelled by a random permutation and the
    domains shuffled, which hides the structure from interval reasoning.
    """
    rng = random.Random(seed)
    relabel = list(range(1, n + 1))
    rng.shuffle(relabel)
    domains = []
    for i in range(1, n + 1):
        k = min(i, max_size)
        vals = set(rng.sample(range(1, i), k - 1))
        vals.add(i)
        domains.append(Domain(relabel[v - 1] for v in vals))
    rng.shuffle(domains)
    return _single(domains)


GENERATORS = {
    "speeches": speeches,
    "revised-speeches": revised_speeches,
    "nqueens": nqueens,
    "random": random_problem,
    "planted": planted_permutation,
    "nested": nested_intervals,
}


def gen_benchmark(name: str, **params) -> Problem:
    """Build the named instance; unknown names or parameters raise ``ValueError``."""
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of "
                         f"{', '.join(GENERATORS)}") from None
    try:
        return gen(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None
