"""Immutable quivers encoded as skew-symmetric integer exchange matrices.

A quiver is stored as an ordered tuple of vertex labels together with the
matrix ``B`` whose entry ``B[u][v]`` is the number of arrows ``u -> v`` minus
the number of arrows ``v -> u``.  Skew-symmetry makes loops and oriented
2-cycles unrepresentable, which is exactly the class of quivers the rest of
the toolkit works with.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class QuiverFormatError(ValueError):
    """A quiver payload or construction violates the format invariants."""


class UnknownVertexError(ValueError):
    """An operation referenced a vertex label the quiver does not have."""


@dataclass(frozen=True)
class DynkinLabel:
    """Simply-laced type label: A_n (n >= 1), D_n (n >= 4), E_6/E_7/E_8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise ValueError("A requires rank >= 1")
        if self.family == "D" and self.rank < 4:
            raise ValueError("D requires rank >= 4 (rank 3 is reported as A_3)")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E requires rank in {6, 7, 8}")

    def __str__(self) -> str:
        return f"{self.family}_{self.rank}"

    def to_json_dict(self) -> dict:
        return {"family": self.family, "rank": self.rank}


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    multiplicity: int


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without loops or oriented 2-cycles.

    Values are immutable and hashable; every operation below returns a new
    quiver, so instances are safe to share between threads.
    """

    vertices: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        matrix = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "matrix", matrix)
        n = len(vertices)
        if len(set(vertices)) != n:
            raise QuiverFormatError("vertex labels must be pairwise distinct")
        if any(not isinstance(v, str) or not v for v in vertices):
            raise QuiverFormatError("vertex labels must be non-empty strings")
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise QuiverFormatError("matrix must be square and match the vertex count")
        for i in range(n):
            for j in range(n):
                if matrix[i][j] != -matrix[j][i]:
                    raise QuiverFormatError("matrix must be skew-symmetric")

    # -- basics --------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise UnknownVertexError(f"unknown vertex {label!r}") from None

    def entry(self, source: str, target: str) -> int:
        return self.matrix[self.index(source)][self.index(target)]

    def arrows(self) -> tuple[Arrow, ...]:
        """All arrows, as positive matrix entries, in row-major order."""
        out = []
        for i, u in enumerate(self.vertices):
            row = self.matrix[i]
            for j, v in enumerate(self.vertices):
                if row[j] > 0:
                    out.append(Arrow(u, v, row[j]))
        return tuple(out)

    def arrow_count(self) -> int:
        """Number of arrows counted with multiplicity."""
        return sum(x for row in self.matrix for x in row if x > 0)

    def max_multiplicity(self) -> int:
        return max((x for row in self.matrix for x in row), default=0)

    def is_multiplicity_free(self) -> bool:
        return self.max_multiplicity() <= 1

    def out_neighbors(self, label: str) -> tuple[str, ...]:
        i = self.index(label)
        return tuple(v for j, v in enumerate(self.vertices) if self.matrix[i][j] > 0)

    def relabel(self, mapping: Mapping[str, str]) -> "Quiver":
        """Rename vertices through a bijective mapping, keeping their order."""
        missing = [v for v in self.vertices if v not in mapping]
        if missing:
            raise UnknownVertexError(f"mapping misses vertices {missing}")
        return Quiver(tuple(mapping[v] for v in self.vertices), self.matrix)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_arrows(
        cls,
        vertices: Sequence[str],
        arrows: Iterable[tuple[str, str, int]] = (),
    ) -> "Quiver":
        """Build a quiver from (source, target, multiplicity) triples.

        Rejects loops, antiparallel arrow pairs and duplicate arrow entries.
        """
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise QuiverFormatError("vertex labels must be pairwise distinct")
        n = len(vertices)
        matrix = [[0] * n for _ in range(n)]
        for src, dst, mult in arrows:
            if src not in pos or dst not in pos:
                raise QuiverFormatError(f"arrow {src!r} -> {dst!r} uses an unknown vertex")
            if src == dst:
                raise QuiverFormatError(f"loop at {src!r} is not representable")
            if mult < 1:
                raise QuiverFormatError("arrow multiplicity must be >= 1")
            i, j = pos[src], pos[dst]
            if matrix[i][j] > 0:
                raise QuiverFormatError(f"duplicate arrow entry {src!r} -> {dst!r}")
            if matrix[j][i] > 0:
                raise QuiverFormatError(
                    f"antiparallel arrows between {src!r} and {dst!r} are not representable"
                )
            matrix[i][j] = mult
            matrix[j][i] = -mult
        return cls(vertices, tuple(tuple(row) for row in matrix))

    # -- JSON / DOT ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"from": a.source, "to": a.target, "mult": a.multiplicity}
                for a in self.arrows()
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, data: object) -> "Quiver":
        if not isinstance(data, dict):
            raise QuiverFormatError("quiver payload must be a JSON object")
        vertices = data.get("vertices")
        arrows = data.get("arrows", [])
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise QuiverFormatError('"vertices" must be a list of strings')
        if not isinstance(arrows, list):
            raise QuiverFormatError('"arrows" must be a list')
        triples = []
        for entry in arrows:
            if not isinstance(entry, dict):
                raise QuiverFormatError("each arrow must be an object")
            src, dst = entry.get("from"), entry.get("to")
            mult = entry.get("mult", 1)
            if not isinstance(src, str) or not isinstance(dst, str):
                raise QuiverFormatError('arrows need string "from" and "to"')
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise QuiverFormatError('"mult" must be an integer')
            triples.append((src, dst, mult))
        return cls.from_arrows(vertices, triples)

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)

    def to_dot(self) -> str:
        lines = ["digraph {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows():
            for _ in range(a.multiplicity):
                lines.append(f'  "{a.source}" -> "{a.target}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices) if self.vertices else "vertices: (none)"]
        for a in self.arrows():
            suffix = f" (x{a.multiplicity})" if a.multiplicity > 1 else ""
            lines.append(f"{a.source} -> {a.target}{suffix}")
        return "\n".join(lines) + "\n"


# -- mutation, factoring, shortening -------------------------------------


def mutate(q: Quiver, k: str) -> Quiver:
    """Exchange-matrix mutation at vertex ``k``.

    ``B'[i][j] = -B[i][j]`` if ``i = k`` or ``j = k``, otherwise
    ``B[i][j] + (|B[i][k]| B[k][j] + B[i][k] |B[k][j]|) / 2``.  The mutated
    vertex keeps its label, which makes the operation an involution.
    """
    ki = q.index(k)
    B = q.matrix
    n = q.rank
    rows = []
    for i in range(n):
        bik = B[i][ki]
        old = B[i]
        row = []
        for j in range(n):
            if i == ki or j == ki:
                row.append(-old[j])
            else:
                bkj = B[ki][j]
                row.append(old[j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        rows.append(tuple(row))
    return Quiver(q.vertices, tuple(rows))


def factor(q: Quiver, drop: Iterable[str]) -> Quiver:
    """Full subquiver on the complement of ``drop`` (delete rows/columns)."""
    dropped = set(drop)
    for label in dropped:
        q.index(label)
    keep = [i for i, v in enumerate(q.vertices) if v not in dropped]
    vertices = tuple(q.vertices[i] for i in keep)
    matrix = tuple(tuple(q.matrix[i][j] for j in keep) for i in keep)
    return Quiver(vertices, matrix)


def shorten_path(q: Quiver, v: str) -> Quiver:
    """Mutate at ``v`` and then delete ``v``.

    Replaces each length-2 path through ``v`` by a direct arrow, which is the
    standard reduction step for collapsing long paths.
    """
    return factor(mutate(q, v), {v})


# -- structural predicates -------------------------------------------------


def is_acyclic(q: Quiver) -> bool:
    """True iff the quiver has no directed cycle (Kahn peeling)."""
    n = q.rank
    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if q.matrix[i][j] > 0:
                indeg[j] += 1
    stack = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while stack:
        i = stack.pop()
        seen += 1
        for j in range(n):
            if q.matrix[i][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
    return seen == n


def underlying_graph_is_dynkin(q: Quiver) -> DynkinLabel | None:
    """Label of the underlying graph when it is a simply-laced Dynkin tree.

    Requires the quiver to be multiplicity-free.  A path reports A_n (the
    rank-3 star degenerates to a path, so D_3 is reported as A_3); a tree
    with one degree-3 branch point reports D or E by branch lengths.
    """
    n = q.rank
    if n == 0 or not q.is_multiplicity_free():
        return None
    adj: list[list[int]] = [[] for _ in range(n)]
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if q.matrix[i][j] != 0:
                adj[i].append(j)
                adj[j].append(i)
                edges += 1
    if edges != n - 1:
        return None
    # connectivity (a connected graph with n-1 edges is a tree)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        return None
    degrees = [len(a) for a in adj]
    if max(degrees, default=0) <= 2:
        return DynkinLabel("A", n)
    if max(degrees) > 3 or sum(1 for d in degrees if d == 3) != 1:
        return None
    center = degrees.index(3)
    branches = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while degrees[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        branches.append(length)
    a, b, c = sorted(branches)
    if a == 1 and b == 1:
        return DynkinLabel("D", n)
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return DynkinLabel("E", n)
    return None


# -- canonical form ---------------------------------------------------------


def _refined_colors(matrix: tuple[tuple[int, ...], ...]) -> list[int]:
    """Stable vertex coloring refined by signed-multiplicity neighborhoods."""
    n = len(matrix)
    colors = [0] * n
    for _ in range(n):
        keys = []
        for i in range(n):
            row = matrix[i]
            neigh = sorted((colors[j], row[j]) for j in range(n) if row[j])
            keys.append((colors[i], tuple(neigh)))
        ranking = {key: r for r, key in enumerate(sorted(set(keys)))}
        fresh = [ranking[key] for key in keys]
        if fresh == colors:
            break
        colors = fresh
    return colors


_SENTINEL: tuple = (1 << 62,)


def _canonical_perm(q: Quiver) -> list[int]:
    """Permutation (position -> original index) minimizing the matrix encoding.

    Backtracking over orderings compatible with the refined coloring; prunes
    against the best known per-position signature, so the search stays cheap
    at the ranks (<= 9) this toolkit targets.
    """
    n = q.rank
    if n == 0:
        return []
    B = q.matrix
    colors = _refined_colors(B)
    target = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)

    best: list[tuple] = [_SENTINEL] * n
    best_perm: list[int] | None = None
    perm: list[int] = []
    used = [False] * n

    def signature(v: int) -> tuple:
        sig = [B[a][v] for a in perm]
        sig.extend(B[v][a] for a in perm)
        return tuple(sig)

    def place(v: int, sig: tuple) -> bool:
        """Compare sig against best at the current depth; True if viable."""
        nonlocal best_perm
        t = len(perm)
        if sig > best[t]:
            return False
        if sig < best[t]:
            best[t] = sig
            for u in range(t + 1, n):
                best[u] = _SENTINEL
            best_perm = None
        return True

    def dfs() -> None:
        nonlocal best_perm
        t = len(perm)
        if t == n:
            if best_perm is None:
                best_perm = perm.copy()
            return
        remaining = [v for v in range(n) if not used[v]]
        # Fast path: mutually disconnected, indistinguishable leftovers (for
        # example isolated vertices) admit any order; this avoids a factorial
        # blowup on large automorphism groups.
        if len(remaining) > 1:
            same_color = all(colors[v] == colors[remaining[0]] for v in remaining)
            if same_color and all(
                B[u][w] == 0 for u in remaining for w in remaining if u != w
            ):
                sigs = {signature(v) for v in remaining}
                if len(sigs) == 1:
                    placed = 0
                    ok = True
                    for v in remaining:
                        if not place(v, signature(v)):
                            ok = False
                            break
                        perm.append(v)
                        used[v] = True
                        placed += 1
                    if ok and best_perm is None:
                        best_perm = perm.copy()
                    for _ in range(placed):
                        used[perm.pop()] = False
                    return
        for v in by_color[target[t]]:
            if used[v]:
                continue
            if not place(v, signature(v)):
                continue
            perm.append(v)
            used[v] = True
            dfs()
            perm.pop()
            used[v] = False

    dfs()
    assert best_perm is not None
    return best_perm


def canonical_form(q: Quiver) -> Quiver:
    """Canonical representative of the isomorphism class of ``q``.

    Two quivers have equal canonical forms iff they are isomorphic as
    directed multigraphs.  Output labels are "1".."n"; the result is
    deterministic across runs and idempotent.
    """
    perm = _canonical_perm(q)
    n = q.rank
    labels = tuple(str(i + 1) for i in range(n))
    matrix = tuple(
        tuple(q.matrix[perm[a]][perm[b]] for b in range(n)) for a in range(n)
    )
    return Quiver(labels, matrix)


def canonical_labeling(q: Quiver) -> dict[str, str]:
    """Map from original labels to the labels ``canonical_form`` assigns."""
    perm = _canonical_perm(q)
    return {q.vertices[perm[t]]: str(t + 1) for t in range(len(perm))}
