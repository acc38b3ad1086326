"""Hyper-arc consistency for alldifferent through bipartite matching.

The value graph joins each variable to the values of its domain. The
constraint is satisfiable iff a matching covers every variable, and a
value survives iff its edge lies in *some* covering matching. Given one
maximum matching ``M`` those edges are (Berge): edges of ``M``, edges on
an even alternating path starting at a free value, and edges on an even
alternating cycle.

Orient unmatched edges variable -> value and matched edges value ->
variable. Every variable has exactly one matched value, so the graph
contracts onto the variables: ``x -> y`` whenever ``x`` can take the value
``y`` is matched to. Cycles become strongly connected components; paths
from free values become reachability of a sink node fed by every
variable that sees a free value. Adding ``sink -> every variable`` folds
that reachability into the same SCC computation.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import chain
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .model import AllDifferent, Domain, DomainStore, Infeasible

METHODS = ("hopcroft-karp", "augmenting")


@dataclass(frozen=True)
class ValueGraph:
    """Bipartite variable/value graph.

    ``adj[k]`` lists the values adjacent to ``var_nodes[k]``, ascending and
    duplicate-free. Values live in the constraint's offset space.
    """

    var_nodes: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.var_nodes) != len(self.adj):
            raise ValueError("one adjacency list per variable node required")
        object.__setattr__(self, "var_nodes", tuple(self.var_nodes))
        object.__setattr__(self, "adj", tuple(tuple(sorted(set(a))) for a in self.adj))

    @property
    def val_nodes(self) -> tuple[int, ...]:
        return tuple(sorted({d for vals in self.adj for d in vals}))

    @property
    def num_edges(self) -> int:
        return sum(len(vals) for vals in self.adj)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, d) for x, vals in zip(self.var_nodes, self.adj) for d in vals)


@dataclass(frozen=True)
class Matching:
    """A matching on a :class:`ValueGraph`.

    ``mate[k]`` is the value matched to ``graph.var_nodes[k]`` or ``None``.
    """

    graph: ValueGraph = field(repr=False)
    mate: tuple[int | None, ...]

    def __len__(self) -> int:
        return sum(m is not None for m in self.mate)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, d) for x, d in zip(self.graph.var_nodes, self.mate)
                         if d is not None)

    @property
    def covered_vars(self) -> frozenset[int]:
        return frozenset(x for x, d in zip(self.graph.var_nodes, self.mate) if d is not None)

    @property
    def covered_vals(self) -> frozenset[int]:
        return frozenset(d for d in self.mate if d is not None)

    def covers_all_variables(self) -> bool:
        return all(d is not None for d in self.mate)


def build_value_graph(c: AllDifferent, store: DomainStore) -> ValueGraph:
    return ValueGraph(c.vars, tuple(d.values for d in c.view(store)))


class _CSR(NamedTuple):
    indptr: np.ndarray   # int64[n + 1]
    indices: np.ndarray  # value index of each edge
    flat: np.ndarray     # value of each edge
    values: np.ndarray   # value of each value index
    deg: np.ndarray


def _csr(adj: Sequence[Sequence[int]]) -> _CSR:
    n = len(adj)
    deg = np.fromiter(map(len, adj), np.int64, count=n)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(deg, out=indptr[1:])
    m = int(indptr[-1])
    flat = np.fromiter(chain.from_iterable(adj), np.int64, count=m)
    if m == 0:
        empty = np.zeros(0, np.int64)
        return _CSR(indptr, empty, flat, empty, deg)
    lo, hi = int(flat.min()), int(flat.max())
    if hi - lo + 1 <= 2 * m + 64:
        # compact value range: index by offset, no sort needed
        return _CSR(indptr, flat - lo, flat, np.arange(lo, hi + 1, dtype=np.int64), deg)
    values, indices = np.unique(flat, return_inverse=True)
    return _CSR(indptr, indices.astype(np.int64), flat, values, deg)


def _augmenting(adj: Sequence[Sequence[int]]) -> list[int | None]:
    """One augmenting-path search per variable (Kuhn), pure Python."""
    n = len(adj)
    mate_var: list[int | None] = [None] * n
    mate_val: dict[int, int] = {}
    for root in range(n):
        seen: set[int] = set()
        stack = [(root, iter(adj[root]))]
        via: list[int] = []
        while stack:
            x, it = stack[-1]
            for d in it:
                if d in seen:
                    continue
                seen.add(d)
                y = mate_val.get(d)
                via.append(d)
                if y is None:
                    for (xv, _), dv in zip(stack, via):
                        mate_var[xv] = dv
                        mate_val[dv] = xv
                    stack.clear()
                else:
                    stack.append((y, iter(adj[y])))
                break
            else:
                stack.pop()
                if via:
                    via.pop()
    return mate_var


def _mates_from_values(adj, g: _CSR, mate: Sequence[int | None]):
    mate_var = np.full(len(adj), -1, np.int64)
    mate_val = np.full(len(g.values), -1, np.int64)
    for x, d in enumerate(mate):
        if d is None:
            continue
        i = int(g.indices[g.indptr[x] + bisect_left(adj[x], d)])
        mate_var[x] = i
        mate_val[i] = x
    return mate_var, mate_val


def _match(adj, g: _CSR, method: str):
    if method == "hopcroft-karp":
        order = np.argsort(g.deg, kind="stable")  # smallest domains first
        return _kernels.hopcroft_karp(g.indptr, g.indices, len(g.values), order)
    if method == "augmenting":
        return _mates_from_values(adj, g, _augmenting(adj))
    raise ValueError(f"unknown matching method {method!r}; expected one of {METHODS}")


def maximum_matching(g: ValueGraph, method: str = "hopcroft-karp") -> Matching:
    """Maximum-cardinality matching of ``g``.

    ``method`` is ``"hopcroft-karp"`` (phase-based, the default) or
    ``"augmenting"`` (plain augmenting paths). Both are deterministic;
    they may return different matchings of the same size.
    """
    csr = _csr(g.adj)
    mate_var, _ = _match(g.adj, csr, method)
    return Matching(g, tuple(None if i < 0 else int(csr.values[i]) for i in mate_var))


def _keep_mask(g: _CSR, mate_var, mate_val) -> np.ndarray:
    comp = _kernels.alternating_components(g.indptr, g.indices, mate_var, mate_val)
    owner = mate_val[g.indices]
    edge_var = np.repeat(np.arange(len(g.deg)), g.deg)
    # matched edges have owner == edge_var and pass the second test
    return (owner < 0) | (comp[owner] == comp[edge_var])


def mark_removable_edges(g: ValueGraph, m: Matching) -> frozenset[tuple[int, int]]:
    """Edges of ``g`` that belong to no maximum matching.

    ``m`` must be a matching of ``g`` covering every variable node (and is
    therefore maximum).
    """
    if m.graph != g:
        raise ValueError("matching belongs to a different graph")
    if not m.covers_all_variables():
        raise ValueError("matching does not cover every variable")
    if len(set(m.mate)) != len(m.mate) or any(d not in vals for d, vals in zip(m.mate, g.adj)):
        raise ValueError("not a matching of this graph")
    csr = _csr(g.adj)
    mate_var, mate_val = _mates_from_values(g.adj, csr, m.mate)
    keep = _keep_mask(csr, mate_var, mate_val)
    edge_var = np.repeat(np.arange(len(csr.deg)), csr.deg)
    return frozenset((g.var_nodes[int(edge_var[e])], int(csr.flat[e]))
                     for e in np.flatnonzero(~keep))


def _hall_witness(g: _CSR, mate_var, mate_val) -> list[int]:
    # once the matching is maximum, the variables reachable from a free
    # variable by alternating paths outnumber the values they can take
    indptr, indices = g.indptr.tolist(), g.indices.tolist()
    owner = mate_val.tolist()
    reach = [x for x, d in enumerate(mate_var.tolist()) if d < 0]
    seen = set(reach)
    qi = 0
    while qi < len(reach):
        x = reach[qi]
        qi += 1
        for e in range(indptr[x], indptr[x + 1]):
            y = owner[indices[e]]
            if y >= 0 and y not in seen:
                seen.add(y)
                reach.append(y)
    return sorted(seen)


def gac_domains(doms: Sequence[Domain], method: str = "hopcroft-karp") -> list[Domain]:
    """Hyper-arc consistent domains for alldifferent over ``doms`` (positional).

    Raises :class:`Infeasible` when no matching covers every position; the
    witness lists positions whose domains hold fewer values than positions.
    """
    adj = [d.values for d in doms]
    csr = _csr(adj)
    mate_var, mate_val = _match(adj, csr, method)
    matched = int((mate_var >= 0).sum())
    if matched < len(adj):
        raise Infeasible(f"maximum matching covers {matched} of {len(adj)} variables",
                         witness=_hall_witness(csr, mate_var, mate_val))
    keep = _keep_mask(csr, mate_var, mate_val)
    out = list(doms)
    if keep.all():
        return out
    edge_var = np.repeat(np.arange(len(adj)), csr.deg)
    indptr = csr.indptr
    for x in np.unique(edge_var[~keep]).tolist():
        s, e = indptr[x], indptr[x + 1]
        out[x] = Domain._trusted(tuple(csr.flat[s:e][keep[s:e]].tolist()))
    return out


def gac_filter(c: AllDifferent, store: DomainStore, method: str = "hopcroft-karp") -> DomainStore:
    """Hyper-arc consistency on one alldifferent constraint.

    On failure the :class:`Infeasible` witness is a list of variables whose
    domains jointly hold fewer values than there are variables in it.
    """
    try:
        doms = gac_domains(c.view(store), method)
    except Infeasible as exc:
        if exc.witness is not None:
            exc.witness = [c.vars[i] for i in exc.witness]
        raise
    return c.commit(store, doms)


def dump_value_graph(g: ValueGraph, m: Matching | None = None,
                     names: Sequence[str] | None = None) -> str:
    """Plain-text adjacency: ``name: matched | other values`` per variable."""
    lines = []
    for k, (x, vals) in enumerate(zip(g.var_nodes, g.adj)):
        name = names[x] if names is not None else f"x{x}"
        own = m.mate[k] if m is not None else None
        rest = " ".join(str(d) for d in vals if d != own)
        lines.append(f"{name}: {'-' if own is None else own} | {rest}".rstrip())
    return "\n".join(lines) + "\n"


def warm_up() -> None:
    """Load (or compile) the matching kernels so later calls are not charged for it."""
    gac_domains([Domain((1, 2)), Domain((1, 2)), Domain((2, 3))])
