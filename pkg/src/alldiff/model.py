"""Core data model: domains, stores, alldifferent constraints and problems."""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class Domain:
    """Finite set of integers kept as an ascending, duplicate-free tuple.

    Domains are immutable; every pruning operation returns a new domain
    (or ``self`` when nothing was removed, so identity checks are a cheap
    "unchanged" test).
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(sorted({int(v) for v in values}))
        if vals and (vals[0] < INT64_MIN or vals[-1] > INT64_MAX):
            raise ValueError("domain values must fit in a signed 64-bit integer")
        self._values = vals

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> Domain:
        # caller guarantees ascending, duplicate-free, in-range
        d = cls.__new__(cls)
        d._values = values
        return d

    @classmethod
    def interval(cls, lo: int, hi: int) -> Domain:
        """All integers in the inclusive range ``[lo, hi]`` (empty if lo > hi)."""
        if lo > hi:
            return cls()
        if lo < INT64_MIN or hi > INT64_MAX:
            raise ValueError("domain values must fit in a signed 64-bit integer")
        return cls._trusted(tuple(range(lo, hi + 1)))

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    @property
    def min(self) -> int:
        if not self._values:
            raise ValueError("empty domain has no minimum")
        return self._values[0]

    @property
    def max(self) -> int:
        if not self._values:
            raise ValueError("empty domain has no maximum")
        return self._values[-1]

    def is_empty(self) -> bool:
        return not self._values

    def is_singleton(self) -> bool:
        return len(self._values) == 1

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __contains__(self, v: object) -> bool:
        vals = self._values
        i = bisect_left(vals, v)  # type: ignore[arg-type]
        return i < len(vals) and vals[i] == v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Domain):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __le__(self, other: Domain) -> bool:
        return self.issubset(other)

    def issubset(self, other: Domain) -> bool:
        if len(self._values) > len(other._values):
            return False
        return all(v in other for v in self._values)

    def __repr__(self) -> str:
        return "Domain({%s})" % ", ".join(map(str, self._values))

    def __str__(self) -> str:
        return "{%s}" % ",".join(map(str, self._values))

    def remove(self, v: int) -> Domain:
        vals = self._values
        i = bisect_left(vals, v)
        if i < len(vals) and vals[i] == v:
            return Domain._trusted(vals[:i] + vals[i + 1:])
        return self

    def remove_interval(self, lo: int, hi: int) -> Domain:
        """Drop every value inside ``[lo, hi]``."""
        vals = self._values
        i = bisect_left(vals, lo)
        j = bisect_right(vals, hi)
        if i == j:
            return self
        return Domain._trusted(vals[:i] + vals[j:])

    def keep_above(self, v: int) -> Domain:
        """Values strictly greater than ``v``."""
        i = bisect_right(self._values, v)
        return self if i == 0 else Domain._trusted(self._values[i:])

    def keep_below(self, v: int) -> Domain:
        """Values strictly smaller than ``v``."""
        j = bisect_left(self._values, v)
        return self if j == len(self._values) else Domain._trusted(self._values[:j])

    def intersect(self, other: Domain) -> Domain:
        keep = tuple(v for v in self._values if v in other)
        return self if len(keep) == len(self._values) else Domain._trusted(keep)

    def shift(self, offset: int) -> Domain:
        if offset == 0 or not self._values:
            return self
        vals = self._values
        if vals[0] + offset < INT64_MIN or vals[-1] + offset > INT64_MAX:
            raise ValueError("shifted domain leaves the signed 64-bit range")
        return Domain._trusted(tuple(v + offset for v in vals))


def as_domain(d: Domain | Iterable[int]) -> Domain:
    return d if isinstance(d, Domain) else Domain(d)


class Ordering(enum.Enum):
    SMALLER = "smaller"
    EQUAL = "equal"
    LARGER = "larger"
    INCOMPARABLE = "incomparable"


class DomainStore(Sequence):
    """Immutable map from variable index to its :class:`Domain`."""

    __slots__ = ("_domains",)

    def __init__(self, domains: Iterable[Domain | Iterable[int]]):
        self._domains = tuple(as_domain(d) for d in domains)

    def __getitem__(self, i):
        return self._domains[i]

    def __len__(self) -> int:
        return len(self._domains)

    def __iter__(self) -> Iterator[Domain]:
        return iter(self._domains)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DomainStore):
            return NotImplemented
        return self._domains == other._domains

    def __hash__(self) -> int:
        return hash(self._domains)

    def __repr__(self) -> str:
        return "DomainStore([%s])" % ", ".join(str(d) for d in self._domains)

    def replace(self, updates: Mapping[int, Domain]) -> DomainStore:
        if not updates:
            return self
        doms = list(self._domains)
        for i, d in updates.items():
            doms[i] = d
        new = DomainStore.__new__(DomainStore)
        new._domains = tuple(doms)
        return new

    def is_failed(self) -> bool:
        """True for the failed store: some domain is empty."""
        return any(not d for d in self._domains)

    def is_fixed(self) -> bool:
        return all(len(d) == 1 for d in self._domains)

    def size(self) -> int:
        return sum(len(d) for d in self._domains)

    def __le__(self, other: DomainStore) -> bool:
        return compare_stores(self, other) in (Ordering.SMALLER, Ordering.EQUAL)


def compare_stores(a: DomainStore, b: DomainStore) -> Ordering:
    """Compare two stores under the componentwise-subset order.

    Any store with an empty domain stands for the failed problem, which is
    smaller than every other store; two failed stores compare equal.
    """
    if len(a) != len(b):
        raise ValueError(f"stores have different variable counts ({len(a)} != {len(b)})")
    fa, fb = a.is_failed(), b.is_failed()
    if fa or fb:
        if fa and fb:
            return Ordering.EQUAL
        return Ordering.SMALLER if fa else Ordering.LARGER
    a_sub = b_sub = True
    for da, db in zip(a, b):
        if da == db:
            continue
        if a_sub and not da.issubset(db):
            a_sub = False
        if b_sub and not db.issubset(da):
            b_sub = False
        if not (a_sub or b_sub):
            return Ordering.INCOMPARABLE
    if a_sub and b_sub:
        return Ordering.EQUAL
    return Ordering.SMALLER if a_sub else Ordering.LARGER


class Level(enum.Enum):
    """Consistency level enforced on each alldifferent constraint."""

    DECOMP = "decomp"
    BOUND = "bound"
    RANGE = "range"
    HYPER_ARC = "gac"

    def implies(self, other: Level) -> bool:
        """Whether a store consistent at this level is always consistent at ``other``.

        Hyper-arc implies every level; range implies bound. The
        decomposition is incomparable with bound and range.
        """
        if self is other or self is Level.HYPER_ARC:
            return True
        return self is Level.RANGE and other is Level.BOUND


class Infeasible(Exception):
    """Raised by a filter when the store has no solution (the failed problem).

    ``variable`` names a domain that emptied, ``witness`` carries a
    structural certificate (an overfull interval or a Hall-violating
    variable set) when the filter found one. The engine fills in
    ``constraint`` with the index of the failing constraint.
    """

    def __init__(self, reason: str, *, variable: int | None = None,
                 witness: object = None, constraint: int | None = None):
        super().__init__(reason)
        self.reason = reason
        self.variable = variable
        self.witness = witness
        self.constraint = constraint

    def __str__(self) -> str:
        where = "" if self.constraint is None else f"constraint {self.constraint}: "
        return where + self.reason


@dataclass(frozen=True)
class AllDifferent:
    """``alldifferent(x[v0] + o0, x[v1] + o1, ...)``.

    ``offsets`` default to zero; a non-zero offset turns the position into
    a shifted view of its variable (used by the n-queens diagonals).
    """

    vars: tuple[int, ...]
    offsets: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(int(v) for v in self.vars))
        offs = tuple(int(o) for o in self.offsets) or (0,) * len(self.vars)
        object.__setattr__(self, "offsets", offs)

    def __len__(self) -> int:
        return len(self.vars)

    @property
    def shifted(self) -> bool:
        return any(self.offsets)

    def view(self, store: DomainStore) -> list[Domain]:
        """Domains of the constraint's positions, offsets applied."""
        return [store[v].shift(o) for v, o in zip(self.vars, self.offsets)]

    def commit(self, store: DomainStore, doms: Sequence[Domain]) -> DomainStore:
        """Write filtered view domains back into ``store``."""
        updates = {}
        for v, o, d in zip(self.vars, self.offsets, doms):
            d = d.shift(-o)
            old = store[v]
            if d is not old and d != old:
                updates[v] = d
        return store.replace(updates)


def is_solution(c: AllDifferent, values: Sequence[int]) -> bool:
    """True iff the (offset) values are pairwise distinct."""
    if len(values) != len(c.vars):
        raise ValueError(f"expected {len(c.vars)} values, got {len(values)}")
    shifted = [v + o for v, o in zip(values, c.offsets)]
    return len(set(shifted)) == len(shifted)


@dataclass(frozen=True)
class ModelError:
    message: str
    constraint: int | None = None
    variable: int | None = None

    def __str__(self) -> str:
        parts = []
        if self.constraint is not None:
            parts.append(f"constraint {self.constraint}")
        if self.variable is not None:
            parts.append(f"variable {self.variable}")
        return (": ".join([", ".join(parts), self.message]) if parts else self.message)


class ValidationError(ValueError):
    def __init__(self, errors: Sequence[ModelError]):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


@dataclass(frozen=True)
class Problem:
    domains: DomainStore
    constraints: tuple[AllDifferent, ...] = ()
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.domains, DomainStore):
            object.__setattr__(self, "domains", DomainStore(self.domains))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))

    @property
    def n(self) -> int:
        return len(self.domains)

    def check(self) -> Problem:
        errors = validate(self)
        if errors:
            raise ValidationError(errors)
        return self


def validate(p: Problem) -> list[ModelError]:
    """Return every structural error in ``p`` (empty list means valid).

    Empty domains are not errors here; they surface as infeasibility when
    the problem is filtered.
    """
    errors = []
    if not p.constraints:
        errors.append(ModelError("problem has no constraints"))
    if len(p.names) != p.n:
        errors.append(ModelError(f"{len(p.names)} names for {p.n} variables"))
    elif len(set(p.names)) != p.n:
        errors.append(ModelError("variable names are not unique"))
    for ci, c in enumerate(p.constraints):
        if not c.vars:
            errors.append(ModelError("empty constraint", constraint=ci))
        if len(c.offsets) != len(c.vars):
            errors.append(ModelError("offsets do not match variables", constraint=ci))
        seen = set()
        for v in c.vars:
            if not 0 <= v < p.n:
                errors.append(ModelError(f"unknown variable (problem has {p.n})",
                                         constraint=ci, variable=v))
            elif v in seen:
                errors.append(ModelError("duplicate variable", constraint=ci, variable=v))
            seen.add(v)
    return errors
