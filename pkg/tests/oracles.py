"""Independent oracles the tests check the package against.

Everything here deliberately avoids the package's own code paths: mutation
is re-implemented arrow by arrow, isomorphism goes through networkx, Dynkin
recognition is a table of reference graphs, and quotient dimensions come
from dense rational linear algebra.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import networkx as nx

from cqt import Quiver


def four_step_mutate(q: Quiver, k: str) -> Quiver:
    """Arrow-level mutation procedure for multiplicity-free quivers:
    (1) work next to k, (2) for every path i -> k -> j remove an arrow
    j -> i if present else add i -> j, (3) reverse all arrows at k."""
    assert q.is_multiplicity_free()
    arr = Counter({(a.source, a.target): a.multiplicity for a in q.arrows()})
    ins = [u for (u, v) in arr if v == k]
    outs = [v for (u, v) in arr if u == k]
    for i in ins:
        for j in outs:
            if arr[(j, i)] > 0:
                arr[(j, i)] -= 1
            else:
                arr[(i, j)] += 1
    reversed_arr: Counter = Counter()
    for (u, v), mult in arr.items():
        if mult <= 0:
            continue
        if k in (u, v):
            reversed_arr[(v, u)] += mult
        else:
            reversed_arr[(u, v)] += mult
    return Quiver.from_arrows(
        q.vertices, [(u, v, m) for (u, v), m in reversed_arr.items()]
    )


def nx_graph(q: Quiver) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    g.add_nodes_from(q.vertices)
    for a in q.arrows():
        for _ in range(a.multiplicity):
            g.add_edge(a.source, a.target)
    return g


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    return nx.is_isomorphic(nx_graph(q1), nx_graph(q2))


def brute_force_class(seed: Quiver, limit: int = 2000) -> list[Quiver]:
    """BFS closure under mutation, deduplicated by exhaustive isomorphism
    testing instead of canonical forms.  Mutation uses the independent
    arrow-level procedure whenever the quiver is multiplicity-free."""
    from cqt import mutate

    reps = [seed]
    frontier = [seed]
    while frontier:
        fresh = []
        for q in frontier:
            for k in q.vertices:
                m = four_step_mutate(q, k) if q.is_multiplicity_free() else mutate(q, k)
                if not any(quivers_isomorphic(m, r) for r in reps):
                    reps.append(m)
                    fresh.append(m)
                    if len(reps) > limit:
                        raise RuntimeError("oracle class search exceeded its limit")
        frontier = fresh
    return reps


def _dynkin_reference_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((rank - 2, rank))
        return edges
    edges = [(i, i + 1) for i in range(1, rank - 1)]
    edges.append((3, rank))
    return edges


def dynkin_table_lookup(q: Quiver) -> tuple[str, int] | None:
    """Classify the underlying graph against reference A/D/E trees."""
    if q.rank == 0 or not q.is_multiplicity_free():
        return None
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((a.source, a.target) for a in q.arrows())
    candidates: list[tuple[str, int]] = [("A", q.rank)]
    if q.rank >= 4:
        candidates.append(("D", q.rank))
    if q.rank in (6, 7, 8):
        candidates.append(("E", q.rank))
    for family, rank in candidates:
        ref = nx.Graph()
        ref.add_nodes_from(range(1, rank + 1))
        ref.add_edges_from(_dynkin_reference_edges(family, rank))
        if nx.is_isomorphic(g, ref):
            return (family, rank)
    return None


def all_bounded_paths(q: Quiver, max_arrows: int) -> list[tuple[str, ...]]:
    """Every path of at most ``max_arrows`` arrows, vertex revisits allowed."""
    paths: list[tuple[str, ...]] = []

    def extend(p: tuple[str, ...]) -> None:
        paths.append(p)
        if len(p) - 1 < max_arrows:
            for w in q.out_neighbors(p[-1]):
                extend(p + (w,))

    for v in q.vertices:
        extend((v,))
    return paths


def quotient_dimensions(
    q: Quiver, generators: list[list[tuple[Fraction, tuple[str, ...]]]]
) -> tuple[int, dict[tuple[str, str], int]]:
    """Dimension of span(paths of length < rank) modulo the ideal spanned by
    path * generator * path products, over exact rationals.

    Valid as a ground truth whenever every path of length >= rank lies in
    the ideal (finite-type presentations and acyclic quivers); products with
    terms that long are projected onto the bounded span.
    """
    bound = q.rank - 1
    paths = all_bounded_paths(q, bound)
    by_pair: dict[tuple[str, str], list[tuple[str, ...]]] = {}
    for p in paths:
        by_pair.setdefault((p[0], p[-1]), []).append(p)

    rows_by_pair: dict[tuple[str, str], list[dict[tuple[str, ...], Fraction]]] = {}
    for gen in generators:
        src = gen[0][1][0]
        dst = gen[0][1][-1]
        min_len = min(len(p) - 1 for _, p in gen)
        for a in paths:
            if a[-1] != src:
                continue
            for b in paths:
                if b[0] != dst:
                    continue
                if (len(a) - 1) + min_len + (len(b) - 1) > bound:
                    continue
                vec: dict[tuple[str, ...], Fraction] = {}
                for coeff, p in gen:
                    full = a[:-1] + p + b[1:]
                    if len(full) - 1 <= bound:
                        vec[full] = vec.get(full, Fraction(0)) + coeff
                vec = {p: c for p, c in vec.items() if c != 0}
                if vec:
                    pair = (a[0], b[-1])
                    rows_by_pair.setdefault(pair, []).append(vec)

    def block_rank(pair: tuple[str, str]) -> int:
        cols = {p: i for i, p in enumerate(by_pair.get(pair, []))}
        dense = [
            [row.get(p, Fraction(0)) for p in by_pair[pair]]
            for row in rows_by_pair.get(pair, [])
        ]
        rank = 0
        for col in range(len(cols)):
            pivot = next(
                (r for r in range(rank, len(dense)) if dense[r][col] != 0), None
            )
            if pivot is None:
                continue
            dense[rank], dense[pivot] = dense[pivot], dense[rank]
            head = dense[rank][col]
            for r in range(rank + 1, len(dense)):
                f = dense[r][col] / head
                if f:
                    for c in range(col, len(cols)):
                        dense[r][c] -= f * dense[rank][c]
            rank += 1
        return rank

    dims: dict[tuple[str, str], int] = {}
    total = 0
    for u in q.vertices:
        for v in q.vertices:
            pair = (u, v)
            d = len(by_pair.get(pair, [])) - block_rank(pair)
            dims[pair] = d
            total += d
    return total, dims


def relation_vectors(rels) -> list[list[tuple[Fraction, tuple[str, ...]]]]:
    """Relation set as coefficient vectors for :func:`quotient_dimensions`."""
    out = []
    for r in rels.relations:
        if r.second is None:
            out.append([(Fraction(1), r.first.vertices)])
        else:
            out.append(
                [(Fraction(1), r.first.vertices), (Fraction(-1), r.second.vertices)]
            )
    return out


def random_quiver(rng: random.Random, max_rank: int = 8, max_mult: int = 3) -> Quiver:
    n = rng.randint(2, max_rank)
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                m = rng.randint(1, max_mult) * rng.choice([-1, 1])
                matrix[i][j] = m
                matrix[j][i] = -m
    return Quiver(
        tuple(str(i + 1) for i in range(n)), tuple(tuple(r) for r in matrix)
    )


def simple_cycles(q: Quiver) -> list[tuple[str, ...]]:
    """All vertex-simple directed cycles, each as a closed path starting at
    its smallest vertex index."""
    n = q.rank
    B = q.matrix
    out: list[tuple[str, ...]] = []

    def dfs(start: int, stack: list[int], on: list[bool]) -> None:
        head = stack[-1]
        for j in range(n):
            if B[head][j] > 0:
                if j == start and len(stack) >= 2:
                    out.append(
                        tuple(q.vertices[i] for i in stack) + (q.vertices[start],)
                    )
                elif j > start and not on[j]:
                    on[j] = True
                    stack.append(j)
                    dfs(start, stack, on)
                    stack.pop()
                    on[j] = False

    for s in range(n):
        on = [False] * n
        on[s] = True
        dfs(s, [s], on)
    return out
