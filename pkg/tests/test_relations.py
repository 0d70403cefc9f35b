from __future__ import annotations

import random

import pytest

from cqt import (
    Path,
    Quiver,
    ThreeOrMoreShortestPaths,
    cycle_quiver,
    dynkin_quiver,
    enumerate_class,
    enumerate_shortest_paths,
    g_quiver,
    kronecker_quiver,
    synthesize_relations,
)


def three_path_quiver() -> Quiver:
    return Quiver.from_arrows(
        ["1", "2", "3", "4", "5"],
        [
            ("1", "2", 1),
            ("1", "3", 1),
            ("1", "4", 1),
            ("2", "5", 1),
            ("3", "5", 1),
            ("4", "5", 1),
            ("5", "1", 1),
        ],
    )


def independent_cycle_check(q: Quiver, path: Path, arrow: tuple[str, str]) -> None:
    """Re-verify purity and fullness without the library's filter."""
    cycle = path.vertices  # j ... i, then the arrow i -> j closes it
    assert len(set(cycle)) == len(cycle), "cycle must be vertex-simple"
    assert (path.source, path.target) == (arrow[1], arrow[0])
    inside = set(cycle)
    count = 0
    for u in inside:
        for v in inside:
            if q.entry(u, v) > 0:
                count += q.entry(u, v)
    assert count == path.length + 1


# -- enumerate_shortest_paths -------------------------------------------------


def test_c4_has_one_return_path_of_length_three():
    paths = enumerate_shortest_paths(cycle_quiver(4), "4", "1")
    assert [p.vertices for p in paths] == [("1", "2", "3", "4")]
    independent_cycle_check(cycle_quiver(4), paths[0], ("4", "1"))


def test_g22_back_arrow_has_two_paths():
    paths = enumerate_shortest_paths(g_quiver(2, 2), "s", "1")
    assert [p.vertices for p in paths] == [("1", "2", "s"), ("1", "2'", "s")]


def test_acyclic_quiver_has_no_return_paths():
    q = dynkin_quiver("A", 4)
    for a in q.arrows():
        assert enumerate_shortest_paths(q, a.source, a.target) == []


def test_shortest_path_requires_arrow_and_simple_quiver():
    with pytest.raises(ValueError):
        enumerate_shortest_paths(cycle_quiver(3), "1", "3")
    with pytest.raises(ValueError):
        enumerate_shortest_paths(kronecker_quiver(), "1", "2")


def test_fullness_filter_excludes_chorded_cycles():
    # 4-cycle with the chord 2 -> 4: the long way around 1 ~> 4 induces a
    # cycle whose full subquiver picks up the chord, so only the short way
    # counts as a shortest return path for the arrow 4 -> 1
    q = Quiver.from_arrows(
        ["1", "2", "3", "4"],
        [("1", "2", 1), ("2", "3", 1), ("3", "4", 1), ("4", "1", 1), ("2", "4", 1)],
    )
    paths = enumerate_shortest_paths(q, "4", "1")
    assert [p.vertices for p in paths] == [("1", "2", "4")]
    independent_cycle_check(q, paths[0], ("4", "1"))


# -- synthesize_relations -------------------------------------------------------


def test_c3_relations_are_three_zero_relations():
    rels = synthesize_relations(cycle_quiver(3))
    assert len(rels) == 3
    assert all(r.kind == "zero" and r.first.length == 2 for r in rels.relations)


def test_g22_relations():
    rels = synthesize_relations(g_quiver(2, 2))
    kinds = [r.kind for r in rels.relations]
    assert kinds.count("zero") == 4 and kinds.count("commutativity") == 1
    comm = next(r for r in rels.relations if r.kind == "commutativity")
    assert comm.arrow == ("s", "1")
    assert comm.first.vertices == ("1", "2", "s")
    assert comm.second.vertices == ("1", "2'", "s")
    zero_lengths = {r.first.length for r in rels.relations if r.kind == "zero"}
    assert zero_lengths == {2}


def test_linear_a_orientations_have_no_relations():
    for n in (2, 3, 4, 5):
        assert len(synthesize_relations(dynkin_quiver("A", n))) == 0
    # every orientation of A_4
    base = dynkin_quiver("A", 4)
    arrows = [(a.source, a.target) for a in base.arrows()]
    for flips in range(2 ** len(arrows)):
        oriented = [
            (dst, src, 1) if flips >> i & 1 else (src, dst, 1)
            for i, (src, dst) in enumerate(arrows)
        ]
        q = Quiver.from_arrows(base.vertices, oriented)
        assert len(synthesize_relations(q)) == 0


def test_three_or_more_shortest_paths_raises():
    with pytest.raises(ThreeOrMoreShortestPaths) as exc:
        synthesize_relations(three_path_quiver())
    assert exc.value.arrow == ("5", "1")
    assert len(exc.value.paths) == 3


def test_relations_reject_multiplicities():
    with pytest.raises(ValueError):
        synthesize_relations(kronecker_quiver())


def test_relation_set_json_schema():
    out = synthesize_relations(g_quiver(2, 2)).to_json_dict()
    assert set(out) == {"quiver", "relations"}
    comm = [r for r in out["relations"] if r["kind"] == "commutativity"]
    assert comm == [
        {
            "arrow": {"from": "s", "to": "1"},
            "kind": "commutativity",
            "paths": [["1", "2", "s"], ["1", "2'", "s"]],
        }
    ]


def test_synthesis_is_label_equivariant_up_to_path_order():
    rng = random.Random(31)

    def shape(rels):
        return {
            (r.arrow, r.kind, frozenset(p.vertices for p in r.paths()))
            for r in rels.relations
        }

    for seed in (cycle_quiver(4), g_quiver(2, 2), g_quiver(2, 3)):
        base = synthesize_relations(seed)
        for _ in range(5):
            labels = list(seed.vertices)
            rng.shuffle(labels)
            mapping = dict(zip(seed.vertices, labels))
            relabeled = seed.relabel(mapping)
            got = shape(synthesize_relations(relabeled))
            want = {
                (
                    (mapping[a], mapping[b]),
                    kind,
                    frozenset(tuple(mapping[v] for v in p) for p in paths),
                )
                for (a, b), kind, paths in shape(base)
            }
            assert got == want


def test_sweep_shortest_path_structure_over_small_classes():
    # every member of the A_n (n <= 5) and D_4/D_5 classes obeys: at most two
    # shortest paths per arrow, two-path cases disjoint except endpoints
    seeds = [dynkin_quiver("A", n) for n in (3, 4, 5)]
    seeds += [dynkin_quiver("D", 4), dynkin_quiver("D", 5)]
    for seed in seeds:
        for m in enumerate_class(seed).members:
            rels = synthesize_relations(m)  # raises on three or more
            for r in rels.relations:
                for p in r.paths():
                    independent_cycle_check(m, p, r.arrow)
                if r.kind == "commutativity":
                    shared = set(r.first.vertices) & set(r.second.vertices)
                    assert shared == {r.first.source, r.first.target}
