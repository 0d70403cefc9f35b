"""Mutation-class enumeration, finite-cluster-type detection and the
double-path-avoidance check, all with explicit replayable witnesses."""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .config import DEFAULT_BUDGET
from .quiver import (
    DynkinLabel,
    Quiver,
    canonical_form,
    canonical_labeling,
    factor,
    is_acyclic,
    mutate,
    underlying_graph_is_dynkin,
)

MUTATE = "mutate"
DROP = "drop"


@dataclass(frozen=True)
class Witness:
    """A quiver reached from a seed by a replayable sequence of steps.

    Each step is ("mutate", label) or ("drop", label).
    """

    quiver: Quiver
    trace: tuple[tuple[str, str], ...]

    def trace_strings(self) -> list[str]:
        return [f"{op} {label}" for op, label in self.trace]

    def replay(self, seed: Quiver) -> Quiver:
        q = seed
        for op, label in self.trace:
            if op == MUTATE:
                q = mutate(q, label)
            elif op == DROP:
                q = factor(q, {label})
            else:
                raise ValueError(f"unknown step {op!r}")
        return q

    def to_json_dict(self) -> dict:
        return {"quiver": self.quiver.to_json_dict(), "trace": self.trace_strings()}


@dataclass
class MutationClass:
    """Closure of a seed under mutation, deduplicated by canonical form.

    ``traces`` maps each canonical member to a shortest mutation sequence
    (seed vertex labels) reaching it from the seed; iteration order is BFS
    discovery order.  ``complete`` is False when the budget cut the search.
    """

    seed: Quiver
    traces: dict[Quiver, tuple[str, ...]] = field(default_factory=dict)
    complete: bool = True

    @property
    def members(self) -> tuple[Quiver, ...]:
        return tuple(self.traces)

    def __len__(self) -> int:
        return len(self.traces)

    def __contains__(self, q: Quiver) -> bool:
        return canonical_form(q) in self.traces

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed.to_json_dict(),
            "complete": self.complete,
            "members": [
                {
                    "quiver": member.to_json_dict(),
                    "trace": [f"{MUTATE} {k}" for k in trace],
                }
                for member, trace in self.traces.items()
            ],
        }


@dataclass(frozen=True)
class TypeVerdict:
    """Outcome of finite-cluster-type detection.

    kind is "finite" (dynkin set), "infinite" (witness set except in the
    completed-class-without-acyclic-member case, which reason records) or
    "budget-exceeded".
    """

    kind: str
    dynkin: DynkinLabel | None = None
    witness: Witness | None = None
    reason: str = ""

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.dynkin is not None:
            out["dynkin"] = self.dynkin.to_json_dict()
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class DpaVerdict:
    """Outcome of the double-path-avoidance check: kind is "true", "false"
    (witness set) or "budget-exceeded"."""

    kind: str
    witness: Witness | None = None

    @property
    def is_avoiding(self) -> bool:
        return self.kind == "true"

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


def _validate_budget(budget: int) -> None:
    if budget < 1:
        raise ValueError("budget must be >= 1")


def enumerate_class(
    seed: Quiver, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> MutationClass:
    """Breadth-first closure of the seed under mutation at every vertex.

    Members are canonical forms; each gets a shortest trace.  Stops with
    ``complete=False`` once a new member would exceed ``budget``.
    """
    _validate_budget(budget)
    cache: dict[Quiver, Quiver] = {}

    def canon(q: Quiver) -> Quiver:
        c = cache.get(q)
        if c is None:
            c = canonical_form(q)
            cache[q] = c
        return c

    traces: dict[Quiver, tuple[str, ...]] = {canon(seed): ()}
    frontier: list[tuple[Quiver, tuple[str, ...]]] = [(seed, ())]
    complete = True
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while frontier and complete:
            tasks = [
                (q, trace, k) for q, trace in frontier for k in q.vertices
            ]
            if pool is not None:
                mutated = list(pool.map(lambda t: mutate(t[0], t[2]), tasks))
            else:
                mutated = [mutate(q, k) for q, _, k in tasks]
            nxt: list[tuple[Quiver, tuple[str, ...]]] = []
            for (q, trace, k), m in zip(tasks, mutated):
                mc = canon(m)
                if mc in traces:
                    continue
                if len(traces) >= budget:
                    complete = False
                    break
                traces[mc] = trace + (k,)
                nxt.append((m, trace + (k,)))
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return MutationClass(seed=seed, traces=traces, complete=complete)


def _classify_member(q: Quiver, trace: tuple[tuple[str, str], ...]) -> TypeVerdict | None:
    if q.max_multiplicity() >= 2:
        return TypeVerdict(
            kind="infinite", witness=Witness(q, trace), reason="multiple-arrow"
        )
    if is_acyclic(q):
        label = underlying_graph_is_dynkin(q)
        if label is not None:
            return TypeVerdict(kind="finite", dynkin=label)
        return TypeVerdict(
            kind="infinite", witness=Witness(q, trace), reason="acyclic-non-dynkin"
        )
    return None


def is_finite_cluster_type(q: Quiver, budget: int = DEFAULT_BUDGET) -> TypeVerdict:
    """Decide finite cluster type by searching the mutation class.

    Early exits: a multiple arrow or an acyclic non-Dynkin member certifies
    infinite type (with witness); an acyclic Dynkin member certifies finite
    type.  A class completed without any acyclic member is infinite; budget
    exhaustion is reported as such.
    """
    _validate_budget(budget)
    seed_verdict = _classify_member(q, ())
    if seed_verdict is not None:
        return seed_verdict
    seen = {canonical_form(q)}
    frontier: deque[tuple[Quiver, tuple[tuple[str, str], ...]]] = deque([(q, ())])
    while frontier:
        cur, trace = frontier.popleft()
        for k in cur.vertices:
            m = mutate(cur, k)
            mc = canonical_form(m)
            if mc in seen:
                continue
            if len(seen) >= budget:
                return TypeVerdict(kind="budget-exceeded")
            seen.add(mc)
            step = trace + ((MUTATE, k),)
            verdict = _classify_member(m, step)
            if verdict is not None:
                return verdict
            frontier.append((m, step))
    return TypeVerdict(kind="infinite", reason="no-acyclic-member")


def is_double_path_avoiding(q: Quiver, budget: int = DEFAULT_BUDGET) -> DpaVerdict:
    """Search the closure of ``q`` under mutation and single-vertex deletion
    for a multiple arrow (2-cycles are unrepresentable by construction)."""
    _validate_budget(budget)
    if q.max_multiplicity() >= 2:
        return DpaVerdict(kind="false", witness=Witness(q, ()))
    seen = {canonical_form(q)}
    frontier: deque[tuple[Quiver, tuple[tuple[str, str], ...]]] = deque([(q, ())])
    while frontier:
        cur, trace = frontier.popleft()
        moves = [(MUTATE, k, mutate(cur, k)) for k in cur.vertices]
        moves += [(DROP, v, factor(cur, {v})) for v in cur.vertices]
        for op, label, m in moves:
            mc = canonical_form(m)
            if mc in seen:
                continue
            if len(seen) >= budget:
                return DpaVerdict(kind="budget-exceeded")
            seen.add(mc)
            step = trace + ((op, label),)
            if m.max_multiplicity() >= 2:
                return DpaVerdict(kind="false", witness=Witness(m, step))
            frontier.append((m, step))
    return DpaVerdict(kind="true")


def find_mutation_sequence(
    src: Quiver, dst: Quiver, budget: int = DEFAULT_BUDGET
) -> tuple[str, ...] | None:
    """A mutation sequence from ``src`` to a quiver isomorphic to ``dst``.

    Bidirectional search (mutation is an involution, so the mutation graph is
    undirected); the dst-side half of the trace is translated back through
    the isomorphism at the meeting point.  Returns None when the budgeted
    search exhausts without a meeting.
    """
    _validate_budget(budget)
    if src.rank != dst.rank:
        return None
    src_c, dst_c = canonical_form(src), canonical_form(dst)
    if src_c == dst_c:
        return ()

    sides: list[dict[Quiver, tuple[Quiver, tuple[str, ...]]]] = [
        {src_c: (src, ())},
        {dst_c: (dst, ())},
    ]
    frontiers: list[list[tuple[Quiver, tuple[str, ...]]]] = [
        [(src, ())],
        [(dst, ())],
    ]

    def join(
        a: tuple[Quiver, tuple[str, ...]], b: tuple[Quiver, tuple[str, ...]]
    ) -> tuple[str, ...]:
        qa, trace_a = a
        qb, trace_b = b
        to_canon_a = canonical_labeling(qa)
        to_canon_b = canonical_labeling(qb)
        from_canon_a = {c: v for v, c in to_canon_a.items()}
        translate = {v: from_canon_a[c] for v, c in to_canon_b.items()}
        return trace_a + tuple(translate[k] for k in reversed(trace_b))

    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        here, there = sides[side], sides[1 - side]
        nxt: list[tuple[Quiver, tuple[str, ...]]] = []
        for q, trace in frontiers[side]:
            for k in q.vertices:
                m = mutate(q, k)
                mc = canonical_form(m)
                if mc in here:
                    continue
                entry = (m, trace + (k,))
                if mc in there:
                    pair = (entry, there[mc]) if side == 0 else (there[mc], entry)
                    return join(*pair)
                if len(sides[0]) + len(sides[1]) >= budget:
                    return None
                here[mc] = entry
                nxt.append(entry)
        frontiers[side] = nxt
    return None
