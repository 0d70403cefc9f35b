"""Constructors for the named quiver families used across the toolkit.

The two-path families come with labels "1", "2".."a" on the upper path,
"2'".."b'" on the lower path and "s" for the joint sink; the cyclic family
uses "1".."n".
"""

from __future__ import annotations

from .quiver import DynkinLabel, Quiver


def cycle_quiver(n: int) -> Quiver:
    """Oriented cycle on n >= 3 vertices: 1 -> 2 -> ... -> n -> 1."""
    if n < 3:
        raise ValueError("cycle quiver needs n >= 3")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(str(i), str(i + 1), 1) for i in range(1, n)]
    arrows.append((str(n), "1", 1))
    return Quiver.from_arrows(vertices, arrows)


def _two_path_vertices(a: int, b: int) -> list[str]:
    return ["1"] + [str(i) for i in range(2, a + 1)] + [f"{i}'" for i in range(2, b + 1)] + ["s"]


def g_quiver(a: int, b: int) -> Quiver:
    """Two directed paths of lengths a and b from vertex 1 to the sink "s",
    plus the back arrow s -> 1 (a, b >= 2)."""
    if a < 2 or b < 2:
        raise ValueError("two-path quivers need a, b >= 2")
    upper = ["1"] + [str(i) for i in range(2, a + 1)] + ["s"]
    lower = ["1"] + [f"{i}'" for i in range(2, b + 1)] + ["s"]
    arrows = [(upper[i], upper[i + 1], 1) for i in range(len(upper) - 1)]
    arrows += [(lower[i], lower[i + 1], 1) for i in range(len(lower) - 1)]
    arrows.append(("s", "1", 1))
    return Quiver.from_arrows(_two_path_vertices(a, b), arrows)


def t_quiver(a: int, b: int) -> Quiver:
    """The tree companion of :func:`g_quiver`: the two paths stop short of
    "s" and only the arrow s -> 1 touches the sink vertex, so the underlying
    graph is a star at vertex 1 with branches of lengths 1, a-1 and b-1."""
    if a < 2 or b < 2:
        raise ValueError("two-path quivers need a, b >= 2")
    upper = ["1"] + [str(i) for i in range(2, a + 1)]
    lower = ["1"] + [f"{i}'" for i in range(2, b + 1)]
    arrows = [(upper[i], upper[i + 1], 1) for i in range(len(upper) - 1)]
    arrows += [(lower[i], lower[i + 1], 1) for i in range(len(lower) - 1)]
    arrows.append(("s", "1", 1))
    return Quiver.from_arrows(_two_path_vertices(a, b), arrows)


def g_to_t_mutation_sequence(a: int, b: int) -> tuple[str, ...]:
    """Mutation sequence carrying g_quiver(a, b) onto a quiver isomorphic to
    t_quiver(a, b): down the upper path, down the lower path, then vertex 1."""
    seq = [str(i) for i in range(a, 1, -1)]
    seq += [f"{i}'" for i in range(b, 1, -1)]
    seq.append("1")
    return tuple(seq)


def dynkin_quiver(family: str, rank: int) -> Quiver:
    """A natural orientation of the simply-laced Dynkin diagram."""
    label = DynkinLabel(family, rank)
    vertices = [str(i) for i in range(1, rank + 1)]
    if label.family == "A":
        arrows = [(str(i), str(i + 1), 1) for i in range(1, rank)]
    elif label.family == "D":
        arrows = [(str(i), str(i + 1), 1) for i in range(1, rank - 1)]
        arrows.append((str(rank - 2), str(rank), 1))
    else:
        arrows = [(str(i), str(i + 1), 1) for i in range(1, rank - 1)]
        arrows.append(("3", str(rank), 1))
    return Quiver.from_arrows(vertices, arrows)


def kronecker_quiver() -> Quiver:
    """Two vertices joined by a double arrow."""
    return Quiver.from_arrows(["1", "2"], [("1", "2", 2)])


def alternating_cycle_quiver(n: int) -> Quiver:
    """Non-oriented cycle on even n >= 4 vertices where every vertex is a
    source or a sink (odd labels are sources)."""
    if n < 4 or n % 2:
        raise ValueError("alternating cycle needs even n >= 4")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(1, n + 1):
        j = i % n + 1
        src, dst = (i, j) if i % 2 else (j, i)
        arrows.append((str(src), str(dst), 1))
    return Quiver.from_arrows(vertices, arrows)


_FAMILIES = ("Cn", "Gab", "Tab", "dynkin", "kronecker", "alternating-cycle")


def make_named_quiver(name: str, **params) -> Quiver:
    """Dispatch by family name; see the individual constructors."""
    if name == "Cn":
        return cycle_quiver(int(params["n"]))
    if name == "Gab":
        return g_quiver(int(params["a"]), int(params["b"]))
    if name == "Tab":
        return t_quiver(int(params["a"]), int(params["b"]))
    if name == "dynkin":
        return dynkin_quiver(str(params["family"]), int(params["rank"]))
    if name == "kronecker":
        return kronecker_quiver()
    if name == "alternating-cycle":
        return alternating_cycle_quiver(int(params["n"]))
    raise ValueError(f"unknown family {name!r}; expected one of {_FAMILIES}")
