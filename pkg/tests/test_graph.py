import pytest

from cosetlab import (
    Permutation,
    build_graph,
    chessboard_tiles,
    components,
    core,
    double_cosets,
    edge_intersection,
    image_in_quotient,
    intersect,
    quotient,
    trivial_group,
    verify_complete_bipartite,
    verify_double_coset_correspondence,
    verify_ratio,
    verify_tile_uniformity,
)
from cosetlab.catalog import catalog_group, cyclic_subgroups, dihedral, iter_catalog, symmetric
from cosetlab.errors import InvariantViolation, NotASubgroupError
from cosetlab.graph import CosetGraph
from cosetlab.group import subgroup
from cosetlab.perm import parse_cycles

import oracles as O
from conftest import P


def st_pairs(graph):
    return sorted((b.s, b.t) for b in components(graph))


def as_tuples(G):
    return frozenset(p.images for p in G)


def test_build_graph_whole_group(S3):
    g = build_graph(S3, S3, S3)
    assert len(g.left_vertices) == len(g.right_vertices) == 1
    assert g.adjacency == ((0,),)


def test_build_graph_H_with_itself(S3, H12):
    g = build_graph(S3, H12, H12)
    assert len(g.left_vertices) == len(g.right_vertices) == 3
    assert st_pairs(g) == [(1, 1), (2, 2)]
    # H appears once as a left vertex and once as a right vertex
    assert g.left_vertices[0].members == g.right_vertices[0].members
    assert g.left_vertices[0].side != g.right_vertices[0].side


def test_build_graph_single_board(S3, A3, H12):
    g = build_graph(S3, A3, H12)
    assert (len(g.left_vertices), len(g.right_vertices), g.edge_count) == (2, 3, 6)
    assert st_pairs(g) == [(2, 3)]


def test_build_graph_rejects_non_subgroup(A3, H12):
    with pytest.raises(NotASubgroupError):
        build_graph(A3, H12, A3)


def test_components_examples(S3, H12, K13):
    boards = components(build_graph(S3, H12, K13))
    assert [(b.s, b.t, b.double_coset_size, b.tile_size) for b in boards] == [(2, 2, 4, 1), (1, 1, 2, 2)]
    assert [b.double_coset_rep for b in boards] == [P("()"), P("(2 3)")]
    assert O.coset_graph_components(as_tuples(S3), as_tuples(H12), as_tuples(K13)) == [(1, 1, (2,)), (2, 2, (1,))]


def test_components_isolated_vertex_is_internal_error(S3):
    g = build_graph(S3, S3, S3).without_edge(0, 0)
    with pytest.raises(InvariantViolation):
        components(g)


def test_negative_control_missing_edge(S3, H12):
    g = build_graph(S3, H12, H12)
    assert verify_complete_bipartite(g)
    i = next(i for i, a in enumerate(g.adjacency) if len(a) == 2)
    j = g.adjacency[i][0]
    bad = g.without_edge(i, j)
    rep = verify_complete_bipartite(bad)
    assert not rep.passed
    name = f"L_{g.left_vertices[i].representative} - R_{g.right_vertices[j].representative}"
    assert rep.violations == [f"missing edge {name}"]


def test_ratio_examples(S3, A3, H12, S4):
    assert verify_ratio(build_graph(S3, A3, H12))
    for H in cyclic_subgroups(S4):
        assert all(b.s == b.t for b in components(build_graph(S4, H, H)))
    K = subgroup(S4, [parse_cycles("(1 2 3 4)", 4)])
    boards = components(build_graph(S4, trivial_group(4), K))
    assert {(b.s, b.t) for b in boards} == {(4, 1)}


def test_ratio_detects_bad_counts(S3, H12):
    g = build_graph(S3, H12, H12)
    forged = CosetGraph(g.left_vertices, g.right_vertices, g.adjacency, 3, 2, 6)
    assert not verify_ratio(forged)


def test_edge_intersection_examples(S3, H12, K13):
    whole = build_graph(S3, S3, S3)
    assert edge_intersection(S3, whole.left_vertices[0], whole.right_vertices[0]) == frozenset(S3.elements)
    g = build_graph(S3, H12, K13)
    b0, b1 = components(g)
    a, k = g.left_vertices[b0.left_indices[0]], g.right_vertices[b0.right_indices[0]]
    assert len(edge_intersection(S3, a, k)) == 1
    assert edge_intersection(S3, a, g.right_vertices[b1.right_indices[0]]) == frozenset()
    with pytest.raises(ValueError):
        edge_intersection(S3, k, a)


def test_double_coset_examples(S3, H12, K13):
    assert [len(d) for d in double_cosets(S3, S3, S3)] == [6]
    dcs = double_cosets(S3, H12, K13)
    assert sorted(len(d) for d in dcs) == [2, 4]
    expect = O.double_cosets(as_tuples(S3), as_tuples(H12), as_tuples(K13))
    assert {d.members for d in dcs} == {frozenset(Permutation(t) for t in m) for m in expect}
    T = trivial_group(3)
    assert [len(d) for d in double_cosets(S3, T, T)] == [1] * 6
    for d in dcs:
        assert d.representative == min(d.members)
        assert d.members == {k * d.representative * h for k in K13 for h in H12}


def test_correspondence_examples(S3, H12, K13):
    assert verify_double_coset_correspondence(build_graph(S3, S3, S3), double_cosets(S3, S3, S3))
    T = trivial_group(3)
    g = build_graph(S3, T, K13)
    dcs = double_cosets(S3, T, K13)
    assert verify_double_coset_correspondence(g, dcs)
    assert {d.members for d in dcs} == {c.members for c in g.right_vertices}
    # wrong partition is caught
    assert not verify_double_coset_correspondence(build_graph(S3, H12, K13), dcs)


def test_chessboard_tiles_examples(S3, A3, H12):
    g = build_graph(S3, S3, S3)
    assert chessboard_tiles(components(g)[0], g) == [[frozenset(S3.elements)]]
    g = build_graph(S3, H12, H12)
    big = next(b for b in components(g) if b.s == 2)
    tiles = chessboard_tiles(big, g)
    assert [[len(t) for t in r] for r in tiles] == [[1, 1], [1, 1]]
    g = build_graph(S3, A3, H12)
    tiles = chessboard_tiles(components(g)[0], g)
    assert [[len(t) for t in r] for r in tiles] == [[1, 1]] * 3


def test_tile_uniformity_detects_forgery(S3, H12):
    g = build_graph(S3, H12, H12)
    assert verify_tile_uniformity(g)
    forged = CosetGraph(g.left_vertices, g.right_vertices, g.adjacency, 2, 1, 6)
    assert not verify_tile_uniformity(forged)


TRIPLES = []
for spec in iter_catalog(max_order=24):
    G = catalog_group(spec)
    subs = cyclic_subgroups(G)[:7] + [G]
    TRIPLES += [(str(spec), G, H, K) for H in subs for K in subs]


@pytest.mark.parametrize("name,G,H,K", TRIPLES[::3], ids=lambda x: x if isinstance(x, str) else "")
def test_structure_matches_oracle(name, G, H, K):
    g = build_graph(G, H, K)
    boards = components(g)
    got = sorted((b.s, b.t, (b.tile_size,)) for b in boards)
    assert got == O.coset_graph_components(as_tuples(G), as_tuples(H), as_tuples(K))
    for b in boards:
        assert b.s * H.order == b.t * K.order == b.double_coset_size
        assert b.tile_size * b.t == H.order and b.tile_size * b.s == K.order
    dcs = double_cosets(G, H, K)
    assert sorted(b.double_coset_size for b in boards) == sorted(len(d) for d in dcs)
    assert verify_complete_bipartite(g) and verify_ratio(g) and verify_tile_uniformity(g)
    assert verify_double_coset_correspondence(g, dcs)


def test_determinism(S4):
    H = subgroup(S4, [parse_cycles("(1 2)", 4)])
    K = subgroup(S4, [parse_cycles("(1 2 3)", 4)])
    assert build_graph(S4, H, K) == build_graph(S4, H, K)
    assert components(build_graph(S4, H, K)) == components(build_graph(S4, H, K))


def _quotient_pairs(G, H, K, N):
    Q = quotient(G, N)
    Hq, Kq = image_in_quotient(G, N, H), image_in_quotient(G, N, K)
    return st_pairs(build_graph(Q, Hq, Kq))


@pytest.mark.parametrize("G", [symmetric(4), dihedral(6), dihedral(8)], ids=["S4", "D6", "D8"])
def test_quotient_invariance(G):
    subs = cyclic_subgroups(G) + [G]
    checked = 0
    for H in subs:
        for K in subs:
            N = core(G, intersect(H, K))
            if N.order == 1:
                continue
            assert st_pairs(build_graph(G, H, K)) == _quotient_pairs(G, H, K, N)
            checked += 1
    assert checked > 0
