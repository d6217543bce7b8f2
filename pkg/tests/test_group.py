import itertools

import pytest

from cosetlab import (
    conjugate_subgroup,
    core,
    format_cycles,
    generate,
    identity,
    image_in_quotient,
    index,
    intersect,
    is_normal,
    is_subgroup,
    left_cosets,
    parse_cycles,
    quotient,
    right_cosets,
    trivial_group,
)
from cosetlab.catalog import catalog_group, cyclic, cyclic_subgroups, iter_catalog, symmetric
from cosetlab.errors import ClosureCapExceeded, DegreeMismatchError, NotASubgroupError, NotNormalError
from cosetlab.group import CosetSide, from_elements, quotient_map, subgroup

import oracles as O
from conftest import P

SMALL = [catalog_group(s) for s in iter_catalog(max_order=200)]


def test_generate_examples():
    assert generate([], 3).order == 1
    S3 = generate([P("(1 2)"), P("(1 2 3)")], 3)
    assert S3.order == 6
    assert set(p.images for p in S3) == O.closure([(2, 1, 3), (2, 3, 1)], 3)
    C5 = generate([parse_cycles("(1 2 3 4 5)", 5)], 5)
    assert C5.order == 5
    assert set(p.images for p in C5) == O.closure([O.cycle([1, 2, 3, 4, 5], 5)], 5)


def test_generate_errors():
    with pytest.raises(ClosureCapExceeded):
        generate([parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)], 5, cap=100)
    with pytest.raises(DegreeMismatchError):
        generate([parse_cycles("(1 2)", 3)], 4)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("COSETLAB_CAP", "10")
    with pytest.raises(ClosureCapExceeded):
        symmetric(4)


def test_elements_sorted_identity_first(S4):
    els = S4.elements
    assert els[0] == identity(4)
    assert list(els) == sorted(set(els))


def test_degree_zero_group():
    G = generate([], 0)
    assert G.order == 1 and G.degree == 0
    assert [c.representative for c in left_cosets(G, G)] == [identity(0)]
    assert quotient(G, G).order == 1


@pytest.mark.parametrize("G", SMALL, ids=str)
def test_closure_exhaustive(G):
    els = set(G.elements)
    assert identity(G.degree) in els
    for a, b in itertools.product(G.elements, repeat=2):
        assert a * b in els
    assert all(~a in els for a in els)


def test_is_subgroup_examples(S3, H12):
    assert is_subgroup(S3, trivial_group(3))
    assert is_subgroup(S3, H12)
    assert not is_subgroup(H12, S3)


def test_subgroup_rejects_outsider(S3, A3):
    with pytest.raises(NotASubgroupError):
        subgroup(A3, [P("(1 2)")])
    with pytest.raises(NotASubgroupError):
        left_cosets(A3, S3)


def test_left_coset_examples(S3, H12):
    assert [len(c) for c in left_cosets(S3, S3)] == [6]
    assert [len(c) for c in left_cosets(S3, trivial_group(3))] == [1] * 6
    L, R = left_cosets(S3, H12), right_cosets(S3, H12)
    assert [len(c) for c in L] == [2, 2, 2]
    G, H = O.closure([(2, 1, 3), (2, 3, 1)], 3), O.closure([(2, 1, 3)], 3)
    assert {frozenset(p.images for p in c.members) for c in L} == O.left_cosets(G, H)
    assert {frozenset(p.images for p in c.members) for c in R} == O.right_cosets(G, H)
    # the coset H itself agrees; the other two differ between sides
    assert L[0].members == R[0].members
    assert {c.members for c in L[1:]}.isdisjoint({c.members for c in R[1:]})


@pytest.mark.parametrize("G", SMALL[:40], ids=str)
def test_coset_partition_and_lagrange(G):
    for H in cyclic_subgroups(G)[:6] + [G]:
        assert G.order % H.order == 0
        assert index(G, H) * H.order == G.order
        for cosets, side in ((left_cosets(G, H), CosetSide.LEFT_OF_H), (right_cosets(G, H), CosetSide.RIGHT_OF_K)):
            assert len(cosets) == index(G, H)
            seen = set()
            for c in cosets:
                assert c.side is side
                assert len(c.members) == c.subgroup_order == H.order
                assert c.representative == min(c.members)
                expect = {c.representative * h for h in H} if side is CosetSide.LEFT_OF_H \
                    else {h * c.representative for h in H}
                assert c.members == expect
                assert seen.isdisjoint(c.members)
                seen |= c.members
            assert seen == set(G.elements)
            reps = [c.representative for c in cosets]
            assert reps == sorted(reps)


def test_conjugate_examples(S3, H12):
    assert conjugate_subgroup(H12, identity(3)) == H12
    assert conjugate_subgroup(H12, P("(1 2)")) == H12
    assert conjugate_subgroup(H12, P("(2 3)")) == subgroup(S3, [P("(1 3)")])
    with pytest.raises(DegreeMismatchError):
        conjugate_subgroup(H12, identity(4))


def test_intersect_examples(S3, H12, K13):
    assert intersect(H12, H12) == H12
    assert intersect(H12, trivial_group(3)).order == 1
    assert intersect(H12, K13).order == 1


def test_core_examples(S3, A3, H12):
    assert core(S3, H12).order == 1
    assert core(S3, A3) == A3
    assert core(S3, S3) == S3


def test_is_normal_examples(S3, A3, H12):
    assert is_normal(S3, S3)
    assert is_normal(S3, A3)
    assert not is_normal(S3, H12)


@pytest.mark.parametrize("G", SMALL[:45], ids=str)
def test_core_properties(G):
    for H in cyclic_subgroups(G):
        C = core(G, H)
        assert is_subgroup(H, C)
        assert is_normal(G, C)
        for g in G.generators:
            assert conjugate_subgroup(C, g) == C
        # brute force: intersection of all g^-1 H g
        brute = set(H.elements)
        for g in G.elements:
            brute &= set(conjugate_subgroup(H, ~g).elements)
        assert set(C.elements) == brute


def test_quotient_examples(S3, A3):
    assert quotient(S3, S3).order == 1
    Q = quotient(S3, trivial_group(3))
    assert Q.order == 6 and Q.degree == 6
    Q2 = quotient(S3, A3)
    assert Q2.order == 2 and Q2.degree == 2
    assert format_cycles(Q2.elements[1]) == "(1 2)"
    with pytest.raises(NotNormalError):
        quotient(S3, subgroup(S3, [P("(1 2)")]))


def test_image_in_quotient_examples(S3, A3):
    T = trivial_group(3)
    assert image_in_quotient(S3, A3, A3).order == 1
    assert image_in_quotient(S3, A3, S3) == quotient(S3, A3)
    assert image_in_quotient(S3, T, S3).order == 6
    with pytest.raises(NotASubgroupError):
        image_in_quotient(S3, A3, subgroup(S3, [P("(1 2)")]))


def test_quotient_map_is_homomorphism(S4):
    V = subgroup(S4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    qm = quotient_map(S4, V)
    assert qm.group.order * V.order == S4.order
    for a in S4.elements[::5]:
        for b in S4.elements[::7]:
            assert qm.image(a * b) == qm.image(a) * qm.image(b)
    assert all(qm.image(v).is_identity() for v in V)


@pytest.mark.parametrize("G", SMALL[:45], ids=str)
def test_quotient_sizes(G):
    for H in cyclic_subgroups(G)[:8] + [G]:
        N = core(G, H)
        Q = quotient(G, N)
        assert Q.order * N.order == G.order
        assert image_in_quotient(G, N, H).order * N.order == H.order


@pytest.mark.parametrize("G", SMALL, ids=str)
def test_cycle_round_trip_on_catalog(G):
    for p in G.elements:
        assert parse_cycles(format_cycles(p), G.degree) == p


def test_from_elements_checks_closure():
    assert from_elements([identity(3), P("(1 2)")], 3).order == 2
    with pytest.raises(ValueError):
        from_elements([identity(3), P("(1 2 3)")], 3)


def test_index_examples(S4):
    assert index(S4, S4) == 1
    assert index(S4, trivial_group(4)) == 24
    assert index(S4, generate([parse_cycles("(1 2 3 4)", 4)], 4)) == 6
    assert cyclic(1).order == 1
