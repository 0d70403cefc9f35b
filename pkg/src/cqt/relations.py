"""Shortest return paths and synthesis of the defining relation set.

For an arrow ``i -> j`` a return path ``j ~> i`` is *shortest* when the
oriented cycle it closes is pure (visits no vertex twice) and full (the full
subquiver on the cycle's vertices carries no arrows beyond the cycle's own).
A quiver presents a finite-type cluster-tilted algebra only if every arrow
admits at most two shortest return paths; one path contributes a
zero-relation, two contribute a commutativity relation with the second path
carrying coefficient -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .quiver import Quiver, UnknownVertexError

ZERO = "zero"
COMMUTATIVITY = "commutativity"


@dataclass(frozen=True)
class Path:
    """A path recorded by its vertex sequence; arrows are implied between
    consecutive vertices.  Length is counted in arrows."""

    vertices: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path visits at least one vertex")

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def arrow_pairs(self) -> Iterator[tuple[str, str]]:
        return zip(self.vertices, self.vertices[1:])

    def is_path_of(self, q: Quiver) -> bool:
        try:
            q.index(self.source)
            return all(q.entry(u, v) >= 1 for u, v in self.arrow_pairs())
        except UnknownVertexError:
            return False

    def __str__(self) -> str:
        return "->".join(self.vertices)


@dataclass(frozen=True)
class Relation:
    """Ideal generator attached to an arrow: a zero-relation ``first = 0`` or
    a commutativity relation ``first - second = 0``."""

    kind: str
    arrow: tuple[str, str]
    first: Path
    second: Path | None = None

    def __post_init__(self) -> None:
        if self.kind == ZERO:
            if self.second is not None:
                raise ValueError("zero-relations carry a single path")
        elif self.kind == COMMUTATIVITY:
            if self.second is None or self.second == self.first:
                raise ValueError("commutativity relations need two distinct paths")
            if (self.first.source, self.first.target) != (
                self.second.source,
                self.second.target,
            ):
                raise ValueError("commuting paths must share endpoints")
        else:
            raise ValueError(f"unknown relation kind {self.kind!r}")

    def paths(self) -> tuple[Path, ...]:
        return (self.first,) if self.second is None else (self.first, self.second)

    def render(self) -> str:
        if self.kind == ZERO:
            return f"{self.first} = 0"
        return f"{self.first} - {self.second} = 0"

    def to_json_dict(self) -> dict:
        return {
            "arrow": {"from": self.arrow[0], "to": self.arrow[1]},
            "kind": self.kind,
            "paths": [list(p.vertices) for p in self.paths()],
        }


@dataclass(frozen=True)
class RelationSet:
    quiver: Quiver
    relations: tuple[Relation, ...]

    def __len__(self) -> int:
        return len(self.relations)

    def render(self) -> str:
        if not self.relations:
            return "(no relations)\n"
        return "\n".join(r.render() for r in self.relations) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "quiver": self.quiver.to_json_dict(),
            "relations": [r.to_json_dict() for r in self.relations],
        }


class ThreeOrMoreShortestPaths(Exception):
    """An arrow admits three or more shortest return paths, which certifies
    that the quiver is not that of a finite-type cluster-tilted algebra."""

    def __init__(self, arrow: tuple[str, str], paths: tuple[Path, ...]):
        self.arrow = arrow
        self.paths = paths
        rendered = ", ".join(str(p) for p in paths)
        super().__init__(
            f"arrow {arrow[0]} -> {arrow[1]} has {len(paths)} shortest return paths: {rendered}"
        )


def _require_multiplicity_free(q: Quiver) -> None:
    if not q.is_multiplicity_free():
        raise ValueError("quiver has multiple arrows; relations are undefined here")


def enumerate_shortest_paths(q: Quiver, source: str, target: str) -> list[Path]:
    """All shortest return paths ``target ~> source`` for the arrow
    ``source -> target``, in lexicographic vertex-sequence order."""
    _require_multiplicity_free(q)
    si, ti = q.index(source), q.index(target)
    if q.matrix[si][ti] < 1:
        raise ValueError(f"no arrow {source!r} -> {target!r}")

    B = q.matrix
    n = q.rank
    found: list[Path] = []
    stack = [ti]
    on_stack = [False] * n
    on_stack[ti] = True

    def full_cycle(cycle_vertices: list[int]) -> bool:
        inside = set(cycle_vertices)
        arrows = sum(
            1 for u in inside for v in inside if B[u][v] > 0
        )
        return arrows == len(cycle_vertices)

    def dfs() -> None:
        head = stack[-1]
        if head == si:
            if full_cycle(stack):
                found.append(Path(tuple(q.vertices[i] for i in stack)))
            return
        for j in range(n):
            if B[head][j] > 0 and not on_stack[j]:
                stack.append(j)
                on_stack[j] = True
                dfs()
                stack.pop()
                on_stack[j] = False

    dfs()
    found.sort(key=lambda p: p.vertices)
    return found


def synthesize_relations(q: Quiver) -> RelationSet:
    """Defining relations read off the quiver, one generator per arrow that
    admits shortest return paths.

    One path gives a zero-relation; two give a commutativity relation (the
    lexicographically smaller path first).  Three or more raise
    :class:`ThreeOrMoreShortestPaths`.  The synthesis itself is syntactic;
    only on finite-type input does it present the cluster-tilted algebra.
    """
    _require_multiplicity_free(q)
    relations = []
    for arrow in q.arrows():
        paths = enumerate_shortest_paths(q, arrow.source, arrow.target)
        key = (arrow.source, arrow.target)
        if not paths:
            continue
        if len(paths) == 1:
            relations.append(Relation(ZERO, key, paths[0]))
        elif len(paths) == 2:
            relations.append(Relation(COMMUTATIVITY, key, paths[0], paths[1]))
        else:
            raise ThreeOrMoreShortestPaths(key, tuple(paths))
    return RelationSet(q, tuple(relations))
