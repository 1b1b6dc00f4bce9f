import pytest

from cmhier import (InternalCheckError, classify, cleray_level, cm_level,
                    from_facets, is_bi_cm, is_cl_circ, is_cl_dagger, is_cleray,
                    is_cleray_a, is_cm_a, is_cm_circ, is_cm_dagger,
                    is_cohen_macaulay, is_g_a, is_gorenstein_star, is_steiner,
                    mask_of, missing_face_check)
from cmhier import generators as gen


def test_cm_examples():
    path = gen.path_graph(3)
    assert is_cohen_macaulay(path).member
    two_edges = from_facets(4, [(1, 2), (3, 4)])
    out = is_cohen_macaulay(two_edges)
    assert not out.member
    assert out.witness.labels == () and out.witness.degree == 0
    for n in (2, 3, 4):
        assert is_cohen_macaulay(gen.full_simplex(n)).member


def test_connected_graph_is_cm():
    # dimension-one complexes with every vertex present: CM iff connected
    assert is_cohen_macaulay(gen.cycle_graph(5)).member
    assert is_cohen_macaulay(gen.complete_graph(4)).member
    assert not is_cohen_macaulay(from_facets(5, [(1, 2), (2, 3), (4, 5)])).member


def test_cleray_examples(fano):
    forest = from_facets(6, [(1, 2), (2, 3), (4, 5), (6,)])
    assert is_cleray(forest).member
    c4 = gen.cycle_graph(4)
    out = is_cleray(c4)
    assert not out.member and out.witness.degree == 1
    assert is_cleray(fano).member


def test_cleray_levels(fano):
    assert is_cleray_a(fano, 2).member
    assert is_cleray_a(fano, 1).member  # nested classes: level 2 forces level 1
    assert not is_cleray_a(fano, 3).member
    assert cleray_level(fano) == 2
    path = gen.path_graph(3)
    assert is_cleray_a(path, 0).member and not is_cleray_a(path, 1).member
    assert cleray_level(path) == 0


def test_cm_levels():
    k4 = gen.complete_graph(4)
    assert is_cm_a(k4, 2).member and not is_cm_a(k4, 3).member
    assert cm_level(k4) == 2
    c5 = gen.cycle_graph(5)
    assert is_cm_a(c5, 1).member and not is_cm_a(c5, 2).member
    assert is_cm_a(gen.octahedron(), 1).member


def test_graph_cm_level_is_connectivity():
    # a graph complex is level-a iff it has >= a+2 vertices and is
    # (a+1)-connected; K_4 is 3-connected, cycles are 2-connected
    assert cm_level(gen.complete_graph(5)) == 3
    assert cm_level(gen.cycle_graph(6)) == 1
    assert cm_level(gen.path_graph(4)) == 0


def test_skeleton_conventions():
    skel = gen.simplex_skeleton(7, 1)  # frame number 2
    assert cleray_level(skel) == 3
    for a in (0, 1, 2, 3):
        assert is_cleray_a(skel, a).member
        assert is_cl_dagger(skel, a).member
    assert not is_cleray_a(skel, 4).member
    assert [a for a in range(4) if is_cl_circ(skel, a).member] == [0, 1, 2]
    # dual side: skeleton of dimension d-1 on [n] is level-a iff d <= n-a
    assert cm_level(skel) == 7 - 2
    assert is_cm_a(gen.simplex_skeleton(5, 2), 2).member
    assert not is_cm_a(gen.simplex_skeleton(5, 2), 3).member


def test_dagger_examples(octa):
    c74 = gen.cyclic_polytope_boundary(7, 4)
    assert is_cm_dagger(c74, 1).member
    path = gen.path_graph(3)
    assert not is_cm_dagger(path, 1).member
    # the octahedron is 2-CM and Gorenstein* but not ext-concentrated: the
    # deletion of an antipodal pair is a hollow square with homology in the
    # forbidden window
    assert not is_cm_dagger(octa, 1).member
    assert not is_cm_dagger(octa, 0).member


def test_dagger_facet_dichotomy_negative_control():
    # two simplices of different dimensions plus all connecting edges: each
    # vertex link is an ext-concentrated level-0 member with frame number
    # c-1, yet the complex itself is not ext-concentrated at level 1
    neg = from_facets(7, [(1, 2, 3), (4, 5, 6, 7)]
                      + [(i, j) for i in (1, 2, 3) for j in (4, 5, 6, 7)])
    assert neg.invariants() == (7, 4, 2)
    for v in range(1, 8):
        lk = neg.link((v,))
        assert is_cl_dagger(lk, 0).member
        assert lk.invariants().c == neg.invariants().c - 1
    assert not is_cl_dagger(neg, 1).member
    assert not is_cl_dagger(neg, 0).member


def test_dagger_not_closed_under_deletion():
    # pinned counterexample: deletion of a vertex can leave the
    # ext-concentrated class even though plain levels survive
    cx = from_facets(5, [(1, 3, 4), (2, 3, 4), (2, 4, 5)])
    assert is_cl_dagger(cx, 0).member
    sub = cx.deletion((3,))
    assert sorted(f for f in sub.facet_labels()) == [(1, 4), (2, 4, 5)]
    assert not is_cl_dagger(sub, 0).member
    assert is_cleray_a(sub, 0).member  # the plain level does survive


def test_circ_examples(fano):
    assert is_cl_circ(fano, 2).member
    assert not is_cl_circ(fano, 1).member and not is_cl_circ(fano, 0).member
    c74 = gen.cyclic_polytope_boundary(7, 4)
    assert is_cm_circ(c74, 1).member
    # trees are doubly Cohen-Macaulay, the level-0 circ endpoint
    for tree in (gen.path_graph(4), from_facets(5, [(1, 2), (1, 3), (1, 4), (4, 5)])):
        assert is_cl_circ(tree, 0).member


def test_bi_cm_examples(octa):
    assert is_bi_cm(gen.path_graph(3)).member
    assert not is_bi_cm(gen.cycle_graph(4)).member
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert is_bi_cm(tri).member
    assert not is_bi_cm(octa).member


def test_gorenstein_star(octa):
    assert is_gorenstein_star(octa).member
    assert not is_gorenstein_star(gen.full_simplex(4)).member
    for n in (3, 4, 5, 6):
        assert is_gorenstein_star(gen.cycle_graph(n)).member
    assert not is_gorenstein_star(gen.path_graph(3)).member
    assert is_gorenstein_star(gen.cyclic_polytope_boundary(7, 4)).member


def test_steiner_examples(octa, fano):
    assert is_steiner(fano) == (2, 3, 7)
    three_edges = from_facets(6, [(1, 2), (3, 4), (5, 6)])
    assert is_steiner(three_edges) == (1, 2, 6)
    assert is_steiner(octa) is None


def test_g_a(octa):
    assert is_g_a(octa, 1).member
    # K_4 vertex links are 3 points, the minimum for level 2
    assert is_g_a(gen.complete_graph(4), 2).member
    assert not is_g_a(gen.complete_graph(4), 1).member
    join33 = from_facets(3, [(1,), (2,), (3,)]).join(from_facets(3, [(1,), (2,), (3,)]))
    assert is_g_a(join33, 2).member


def test_missing_face_check(octa):
    assert not missing_face_check(octa)
    assert cm_level(octa) == 1 < octa.n - octa.invariants().d - 1
    # one missing face only: vacuous, and extremal level membership holds
    hollow = gen.simplex_skeleton(4, 2)
    assert missing_face_check(hollow)
    assert missing_face_check(gen.complete_graph(4))


def test_classify_reports(octa, fano):
    rep = classify(fano)
    assert not rep.cm.member and rep.cleray.member
    assert rep.cleray_level == 2 and rep.cleray_circ_levels == (2,)
    assert rep.steiner == (2, 3, 7)

    rep = classify(octa)
    assert rep.cm.member and rep.cm_level == 1
    assert rep.gorenstein_star.member

    rep = classify(from_facets(4, []))
    assert not rep.applicable
    assert rep.d is None

    # serialization shape
    d = classify(fano).to_dict()
    assert d["cleray_level"] == 2 and d["steiner"] == [2, 3, 7]
    assert d["cohen_macaulay"]["witness"]["degree"] == 1


def test_monotonicity_and_chain(small_exhaustive):
    import random
    rng = random.Random(17)
    for cx in rng.sample(small_exhaustive, 60):
        if cx.is_void:
            continue
        rep = classify(cx)
        for a in range(rep.cm_level + 1):
            assert is_cm_a(cx, a).member
        for a in range(rep.cleray_level + 1):
            assert is_cleray_a(cx, a).member
        assert rep.cm_dagger_level <= rep.cm_level
        assert rep.cleray_dagger_level <= rep.cleray_level
        assert all(a <= rep.cm_dagger_level for a in rep.cm_circ_levels)
        assert all(a <= rep.cleray_dagger_level for a in rep.cleray_circ_levels)


def test_circ_excludes_next_level_nondegenerate(fano):
    # the top-vanishing condition at level a rules out level a+1 membership
    # away from the skeleton conventions
    assert is_cl_circ(fano, 2).member and not is_cleray_a(fano, 3).member


def test_level_preconditions(fano):
    with pytest.raises(Exception):
        is_cleray_a(fano, -1)
    with pytest.raises(Exception):
        is_g_a(fano, 0)
