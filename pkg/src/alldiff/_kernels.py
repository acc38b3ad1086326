"""Compiled inner loops for the matching-based filter.

The value graph is passed in CSR form: variable ``x`` is adjacent to value
indices ``indices[indptr[x]:indptr[x + 1]]``. Every function here is plain
array code; without numba it still runs (slowly) as ordinary Python.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def hopcroft_karp(indptr, indices, n_vals, order):
    """Maximum matching; returns ``(mate_var, mate_val)`` with -1 for free nodes.

    ``order`` is the variable order for the greedy start.
    """
    n = indptr.shape[0] - 1
    mate_var = np.full(n, -1, np.int64)
    mate_val = np.full(n_vals, -1, np.int64)

    # greedy start (Karp-Sipser style): a free value wanted by a single
    # waiting variable is matched to it first; otherwise the next variable
    # in ``order`` takes its free value wanted by the fewest waiting
    # variables (first such value on ties)
    n_edges = indices.shape[0]
    val_ptr = np.zeros(n_vals + 1, np.int64)
    for e in range(n_edges):
        val_ptr[indices[e] + 1] += 1
    for d in range(n_vals):
        val_ptr[d + 1] += val_ptr[d]
    val_vars = np.empty(n_edges, np.int64)
    fill = val_ptr[:-1].copy()
    for x in range(n):
        for e in range(indptr[x], indptr[x + 1]):
            d = indices[e]
            val_vars[fill[d]] = x
            fill[d] += 1
    val_deg = np.empty(n_vals, np.int64)
    pending = np.empty(n_vals, np.int64)
    top = 0
    for d in range(n_vals):
        val_deg[d] = val_ptr[d + 1] - val_ptr[d]
        if val_deg[d] == 1:
            pending[top] = d
            top += 1
    done = np.zeros(n, np.bool_)
    k = 0
    while True:
        x = -1
        best = -1
        while top > 0 and x < 0:
            top -= 1
            d = pending[top]
            if mate_val[d] < 0 and val_deg[d] == 1:
                for j in range(val_ptr[d], val_ptr[d + 1]):
                    if not done[val_vars[j]]:
                        x = val_vars[j]
                        best = d
                        break
        if x < 0:
            while k < n and done[order[k]]:
                k += 1
            if k == n:
                break
            x = order[k]
            for e in range(indptr[x], indptr[x + 1]):
                d = indices[e]
                if mate_val[d] < 0 and (best < 0 or val_deg[d] < val_deg[best]):
                    best = d
        done[x] = True
        if best >= 0:
            mate_var[x] = best
            mate_val[best] = x
        for e in range(indptr[x], indptr[x + 1]):
            d = indices[e]
            val_deg[d] -= 1
            if val_deg[d] == 1 and mate_val[d] < 0:
                pending[top] = d
                top += 1

    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    ptr = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    via = np.empty(n, np.int64)
    while True:
        # layered BFS from the free variables
        head = 0
        tail = 0
        for x in range(n):
            if mate_var[x] < 0:
                dist[x] = 0
                queue[tail] = x
                tail += 1
            else:
                dist[x] = -1
        if tail == 0:
            break
        n_free = tail
        limit = -1
        while head < tail:
            x = queue[head]
            head += 1
            if limit >= 0 and dist[x] >= limit:
                continue
            for e in range(indptr[x], indptr[x + 1]):
                y = mate_val[indices[e]]
                if y < 0:
                    if limit < 0:
                        limit = dist[x] + 1
                elif dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue[tail] = y
                    tail += 1
        if limit < 0:
            break

        # vertex-disjoint augmenting paths along the layers
        for x in range(n):
            ptr[x] = indptr[x]
        augmented = False
        for r in range(n_free):
            top = 0
            stack[0] = queue[r]
            while top >= 0:
                x = stack[top]
                pushed = False
                while ptr[x] < indptr[x + 1]:
                    d = indices[ptr[x]]
                    ptr[x] += 1
                    y = mate_val[d]
                    if y < 0:
                        if dist[x] + 1 == limit:
                            via[top] = d
                            for j in range(top + 1):
                                mate_var[stack[j]] = via[j]
                                mate_val[via[j]] = stack[j]
                            augmented = True
                            top = -1
                            pushed = True
                            break
                    elif dist[y] == dist[x] + 1:
                        via[top] = d
                        top += 1
                        stack[top] = y
                        pushed = True
                        break
                if not pushed:
                    dist[x] = -1
                    top -= 1
        if not augmented:
            break
    return mate_var, mate_val


@njit(cache=True)
def alternating_components(indptr, indices, mate_var, mate_val):
    """Strongly connected components of the contracted alternating graph.

    Node ``x < n`` has an arc to ``mate_val[d]`` for every unmatched value
    ``d`` it can take, or to the sink ``n`` when ``d`` is free. The sink
    has an arc to every variable. Iterative Tarjan; returns labels for
    ``n + 1`` nodes.
    """
    n = indptr.shape[0] - 1
    size = n + 1
    index = np.full(size, -1, np.int64)
    low = np.zeros(size, np.int64)
    on_stack = np.zeros(size, np.bool_)
    comp = np.full(size, -1, np.int64)
    it = np.zeros(size, np.int64)
    scc_stack = np.empty(size, np.int64)
    call = np.empty(size, np.int64)
    sp = 0
    counter = 0
    ncomp = 0
    w = -1
    for root in range(size):
        if index[root] >= 0:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        scc_stack[sp] = root
        sp += 1
        on_stack[root] = True
        it[root] = 0 if root == n else indptr[root]
        top = 0
        call[0] = root
        while top >= 0:
            v = call[top]
            descended = False
            if v == n:
                while it[v] < n:
                    w = it[v]
                    it[v] += 1
                    if index[w] < 0:
                        descended = True
                        break
                    if on_stack[w] and index[w] < low[v]:
                        low[v] = index[w]
            else:
                end = indptr[v + 1]
                own = mate_var[v]
                while it[v] < end:
                    d = indices[it[v]]
                    it[v] += 1
                    if d == own:
                        continue
                    w = mate_val[d]
                    if w < 0:
                        w = n
                    if index[w] < 0:
                        descended = True
                        break
                    if on_stack[w] and index[w] < low[v]:
                        low[v] = index[w]
            if descended:
                index[w] = counter
                low[w] = counter
                counter += 1
                scc_stack[sp] = w
                sp += 1
                on_stack[w] = True
                it[w] = 0 if w == n else indptr[w]
                top += 1
                call[top] = w
                continue
            top -= 1
            if top >= 0:
                u = call[top]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    sp -= 1
                    w = scc_stack[sp]
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp
