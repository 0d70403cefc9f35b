"""Path-algebra quotients presented by confluent path rewriting.

The quotient of a path algebra by the synthesized relation set is presented
by rewrite rules ``leading path -> 0`` or ``leading path -> scalar * smaller
path`` under a degree-lexicographic order, completed on overlaps until
locally confluent.  Since zero- and two-term relations only ever produce
single-term reductions, every normal form is zero or one scalar multiple of
one irreducible path, computed in exact rational arithmetic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .quiver import Quiver
from .relations import Path, RelationSet

_MISSING = object()


class CompletionBudgetExceeded(RuntimeError):
    """Completion exceeded its rule-length or rule-count ceiling, which on
    well-formed finite-type input does not happen."""


class NotFiniteDimensional(RuntimeError):
    """Normal-path enumeration found arbitrarily long irreducible paths."""


class NotNakayama(ValueError):
    """The quiver is not an oriented cycle."""


@dataclass
class RewriteSystem:
    """A completed, locally confluent path-rewriting system.

    ``rules`` maps a leading path (vertex tuple) to ``None`` (zero) or to a
    ``(coefficient, path)`` replacement strictly smaller under the
    degree-lexicographic order induced by ``vertex_order``.  Instances are
    immutable by convention once built; concurrent queries are safe.
    """

    quiver: Quiver
    rules: dict
    vertex_order: tuple[str, ...]

    def __post_init__(self) -> None:
        self._position = {v: i for i, v in enumerate(self.vertex_order)}
        self._max_lhs = max((len(l) for l in self.rules), default=0)
        self._basis = None

    def order_key(self, path: tuple[str, ...]) -> tuple:
        return (len(path), tuple(self._position[v] for v in path))

    def reduce_term(self, coeff: Fraction, path: tuple[str, ...]):
        """Fully reduce ``coeff * path``; returns None or (coeff, path)."""
        return _reduce(self.rules, self._max_lhs, coeff, path)


@dataclass(frozen=True)
class NormalForm:
    """Zero, or a nonzero rational coefficient times one irreducible path."""

    coefficient: Fraction | None
    path: Path | None

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls(None, None)

    @classmethod
    def of(cls, coefficient: Fraction, path: Path) -> "NormalForm":
        if coefficient == 0:
            return cls.zero()
        return cls(coefficient, path)

    @property
    def is_zero(self) -> bool:
        return self.path is None


@dataclass(frozen=True)
class AlgebraBasis:
    """Irreducible paths grouped by endpoint pair, including the length-0
    path at each vertex.  Closed under taking subpaths."""

    by_pair: dict

    def paths(self) -> list[tuple[str, ...]]:
        return [p for group in self.by_pair.values() for p in group]

    def dimension(self) -> int:
        return sum(len(group) for group in self.by_pair.values())


def _contains(hay: tuple, needle: tuple) -> bool:
    ln = len(needle)
    return any(hay[i : i + ln] == needle for i in range(len(hay) - ln + 1))


def _reduce(rules: dict, max_lhs: int, coeff: Fraction, path: tuple[str, ...]):
    """Leftmost, shortest-rule-first reduction to normal form."""
    while True:
        n = len(path)
        hit = None
        for idx in range(n - 1):
            top = min(max_lhs, n - idx)
            for length in range(2, top + 1):
                rhs = rules.get(path[idx : idx + length], _MISSING)
                if rhs is not _MISSING:
                    hit = (idx, length, rhs)
                    break
            if hit:
                break
        if hit is None:
            return (coeff, path)
        idx, length, rhs = hit
        if rhs is None:
            return None
        coeff = coeff * rhs[0]
        path = path[:idx] + rhs[1] + path[idx + length :]


def _overlap_equations(l1: tuple, r1, l2: tuple, r2):
    """Critical pairs from proper overlaps: a suffix of l1 (>= 1 arrow) that
    is a prefix of l2 without either containing the other."""
    a1, a2 = len(l1) - 1, len(l2) - 1
    for o in range(1, min(a1, a2)):
        if l1[a1 - o :] == l2[: o + 1]:
            tail = l2[o + 1 :]
            head = l1[: a1 - o]
            via1 = None if r1 is None else (r1[0], r1[1] + tail)
            via2 = None if r2 is None else (r2[0], head + r2[1])
            yield via1, via2


def build_rewrite_system(
    q: Quiver,
    rels: RelationSet,
    vertex_order: tuple[str, ...] | None = None,
    max_rule_length: int | None = None,
    max_rules: int = 10_000,
) -> RewriteSystem:
    """Orient the relation set into rules and complete on overlaps.

    Zero-relations become ``path -> 0``; two-path relations orient the
    degree-lexicographically larger path onto the smaller.  The rule-length
    ceiling (default: the vertex count, in arrows) aborts runaway completion
    on input that is not finite type.
    """
    if not q.is_multiplicity_free():
        raise ValueError("rewrite systems require a multiplicity-free quiver")
    if rels.quiver != q:
        raise ValueError("relation set is hosted on a different quiver")
    order = tuple(vertex_order) if vertex_order is not None else q.vertices
    if sorted(order) != sorted(q.vertices):
        raise ValueError("vertex_order must be a permutation of the vertices")
    position = {v: i for i, v in enumerate(order)}
    cap = max_rule_length if max_rule_length is not None else q.rank

    def key(path: tuple) -> tuple:
        return (len(path), tuple(position[v] for v in path))

    rules: dict = {}
    max_lhs = 0
    version = 0
    equations: deque = deque()
    for rel in rels.relations:
        first = (Fraction(1), rel.first.vertices)
        second = None if rel.second is None else (Fraction(1), rel.second.vertices)
        equations.append((first, second))

    def install(lhs: tuple, rhs) -> None:
        nonlocal max_lhs, version
        version += 1
        if len(lhs) - 1 > cap:
            raise CompletionBudgetExceeded(
                f"derived rule of length {len(lhs) - 1} exceeds the ceiling {cap}"
            )
        if len(rules) >= max_rules:
            raise CompletionBudgetExceeded(f"more than {max_rules} rules")
        rules[lhs] = rhs
        max_lhs = max(max_lhs, len(lhs))
        stale = [
            other
            for other, orhs in rules.items()
            if other != lhs
            and (
                _contains(other, lhs)
                or (orhs is not None and _contains(orhs[1], lhs))
            )
        ]
        for other in stale:
            orhs = rules.pop(other)
            equations.append(((Fraction(1), other), orhs))

    def process(t1, t2) -> None:
        n1 = t1 if t1 is None else _reduce(rules, max_lhs, *t1)
        n2 = t2 if t2 is None else _reduce(rules, max_lhs, *t2)
        if n1 == n2:
            return
        if n1 is None:
            n1, n2 = n2, n1
        if n2 is None:
            install(n1[1], None)
            return
        (c1, p1), (c2, p2) = n1, n2
        if p1 == p2:
            install(p1, None)
        elif key(p1) > key(p2):
            install(p1, (c2 / c1, p2))
        else:
            install(p2, (c1 / c2, p1))

    for _ in range(1000):
        while equations:
            process(*equations.popleft())
        before = version
        pairs = list(rules.items())
        for l1, r1 in pairs:
            if l1 not in rules:
                continue
            for l2, r2 in pairs:
                if l2 not in rules:
                    continue
                for via1, via2 in _overlap_equations(l1, r1, l2, r2):
                    process(via1, via2)
        if version == before and not equations:
            break
    else:
        raise CompletionBudgetExceeded("completion did not stabilize")

    return RewriteSystem(quiver=q, rules=rules, vertex_order=order)


def local_confluence_failures(rs: RewriteSystem) -> list:
    """All critical pairs whose two reductions disagree (empty iff locally
    confluent).  This is a test surface; completed systems must return []."""
    failures = []
    items = list(rs.rules.items())
    for l1, r1 in items:
        for l2, r2 in items:
            for via1, via2 in _overlap_equations(l1, r1, l2, r2):
                n1 = via1 if via1 is None else rs.reduce_term(*via1)
                n2 = via2 if via2 is None else rs.reduce_term(*via2)
                if n1 != n2:
                    failures.append((l1, l2, n1, n2))
    return failures


def normal_form(rs: RewriteSystem, path: Path) -> NormalForm:
    """Unique normal form of a path of the host quiver."""
    if not path.is_path_of(rs.quiver):
        raise ValueError(f"{path} is not a path of the host quiver")
    reduced = rs.reduce_term(Fraction(1), path.vertices)
    if reduced is None:
        return NormalForm.zero()
    coeff, verts = reduced
    return NormalForm.of(coeff, Path(verts))


def algebra_basis(rs: RewriteSystem) -> AlgebraBasis:
    """Enumerate all irreducible paths, extending arrows from the trivial
    path at each vertex and pruning as soon as a rule's leading path occurs."""
    if rs._basis is not None:
        return rs._basis
    q = rs.quiver
    limit = q.rank + 1  # any longer path revisits a vertex
    by_pair: dict = {}
    frontier = [(v,) for v in q.vertices]
    for p in frontier:
        by_pair.setdefault((p[0], p[-1]), []).append(p)
    while frontier:
        nxt = []
        for p in frontier:
            for w in q.out_neighbors(p[-1]):
                ext = p + (w,)
                # p is already irreducible, so only suffixes ending at the
                # new arrow can match a rule
                if any(
                    ext[len(ext) - l :] in rs.rules
                    for l in range(2, min(rs._max_lhs, len(ext)) + 1)
                ):
                    continue
                if len(ext) > limit:
                    raise NotFiniteDimensional(
                        "irreducible paths exceed the vertex count; the quotient "
                        "is not finite-dimensional"
                    )
                by_pair.setdefault((ext[0], ext[-1]), []).append(ext)
                nxt.append(ext)
        frontier = nxt
    basis = AlgebraBasis(
        by_pair={pair: tuple(group) for pair, group in by_pair.items()}
    )
    rs._basis = basis
    return basis


def hom_dimension(rs: RewriteSystem, source: str, target: str) -> int:
    """Number of irreducible paths from ``source`` to ``target`` (including
    the trivial path when they coincide): the dimension of the span of paths
    source ~> target in the quotient.

    Under the usual dictionary this is the dimension of the homomorphism
    space between the indecomposable projectives attached to the two
    vertices.
    """
    rs.quiver.index(source)
    rs.quiver.index(target)
    return len(algebra_basis(rs).by_pair.get((source, target), ()))


def algebra_dimension(rs: RewriteSystem) -> int:
    """Total number of irreducible paths, trivial paths included."""
    return algebra_basis(rs).dimension()


def projective_lengths(rs: RewriteSystem) -> dict:
    """Per-vertex count of irreducible paths starting there."""
    counts = {v: 0 for v in rs.quiver.vertices}
    for (src, _), group in algebra_basis(rs).by_pair.items():
        counts[src] += len(group)
    return counts


def _is_oriented_cycle(q: Quiver) -> bool:
    if q.rank < 3 or not q.is_multiplicity_free():
        return False
    outs = [sum(1 for x in row if x > 0) for row in q.matrix]
    ins = [sum(1 for x in row if x < 0) for row in q.matrix]
    if any(o != 1 for o in outs) or any(i != 1 for i in ins):
        return False
    # single cycle iff walking from vertex 0 visits everything
    seen = set()
    i = 0
    while i not in seen:
        seen.add(i)
        i = next(j for j in range(q.rank) if q.matrix[i][j] > 0)
    return len(seen) == q.rank


def nakayama_indecomposable_count(rs: RewriteSystem) -> int:
    """Number of indecomposable modules for an oriented-cycle quiver: the sum
    of the projective lengths."""
    if not _is_oriented_cycle(rs.quiver):
        raise NotNakayama("quiver is not an oriented cycle")
    return sum(projective_lengths(rs).values())


def expected_indecomposable_count(label) -> int:
    """Indecomposable count of the hereditary algebra of the given type:
    A_n -> n(n+1)/2, D_n -> n(n-1), E_6/E_7/E_8 -> 36/63/120."""
    if label.family == "A":
        return label.rank * (label.rank + 1) // 2
    if label.family == "D":
        return label.rank * (label.rank - 1)
    return {6: 36, 7: 63, 8: 120}[label.rank]


def algebra_report(rs: RewriteSystem) -> dict:
    """JSON-ready summary: dimension, the full hom matrix, projective
    lengths and the completed rule set."""
    basis = algebra_basis(rs)
    verts = rs.quiver.vertices
    hom = [
        {"from": u, "to": v, "dim": len(basis.by_pair.get((u, v), ()))}
        for u in verts
        for v in verts
    ]
    rules = []
    for lhs in sorted(rs.rules, key=rs.order_key):
        rhs = rs.rules[lhs]
        entry: dict = {"lhs": list(lhs)}
        if rhs is None:
            entry["rhs"] = "0"
        else:
            entry["rhs"] = list(rhs[1])
            if rhs[0] != 1:
                entry["coeff"] = str(rhs[0])
        rules.append(entry)
    return {
        "dimension": basis.dimension(),
        "hom": hom,
        "projective_lengths": projective_lengths(rs),
        "rules": rules,
    }
