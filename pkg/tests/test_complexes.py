import itertools

import pytest

from cmhier import (Complex, InternalCheckError, ValidationError,
                    are_isomorphic, from_facets, labels_of, mask_of,
                    verify_dual_identity)
from cmhier import generators as gen


def brute_is_face(n, facet_sets, subset):
    return any(subset <= f for f in facet_sets)


def brute_dual_facets(n, facet_sets):
    """Independent dual: maximal F whose complement is not a face."""
    universe = set(range(1, n + 1))
    dual_faces = []
    for k in range(n + 1):
        for comb in itertools.combinations(sorted(universe), k):
            if not brute_is_face(n, facet_sets, universe - set(comb)):
                dual_faces.append(set(comb))
    return {frozenset(f) for f in dual_faces
            if not any(f < g for g in dual_faces)}


def test_from_facets_drops_nonmaximal_and_duplicates():
    cx = from_facets(4, [(1, 2), (2, 3), (1, 2)])
    assert cx.facet_labels() == [(1, 2), (2, 3)]
    assert not cx.is_face((4,))  # isolated label is not added


def test_void_and_irrelevant_are_distinct():
    void = from_facets(3, [])
    irr = from_facets(3, [()])
    assert void.kind == "void" and irr.kind == "irrelevant"
    assert void.invariants().c == -1
    assert irr.invariants() == (3, 0, 0)
    assert void != irr


def test_label_validation():
    with pytest.raises(ValidationError):
        from_facets(3, [(0, 1)])
    with pytest.raises(ValidationError):
        from_facets(3, [(1, 4)])


def test_invariants_examples(fano):
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert tri.invariants() == (3, 2, 2)
    # independent check of the Fano frame number: every pair lies on a line,
    # some triple does not
    lines = [set(l) for l in gen.FANO_LINES]
    assert all(any({i, j} <= l for l in lines)
               for i, j in itertools.combinations(range(1, 8), 2))
    assert not any({1, 2, 4} <= l for l in lines)
    assert fano.invariants() == (7, 3, 2)


def test_alexander_dual_examples(octa):
    assert gen.full_simplex(4).alexander_dual().is_void
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert tri.alexander_dual().is_irrelevant
    got = {frozenset(labels_of(f)) for f in octa.alexander_dual().facets}
    expected = brute_dual_facets(6, [set(labels_of(f)) for f in octa.facets])
    assert got == expected
    assert expected == {frozenset({2, 3, 5, 6}), frozenset({1, 3, 4, 6}),
                        frozenset({1, 2, 4, 5})}


def test_dual_involution_small(small_exhaustive):
    for cx in small_exhaustive:
        assert cx.alexander_dual().alexander_dual() == cx


def test_rel_complex_examples(fano):
    c4 = gen.cycle_graph(4)
    lk1 = c4.link((1,))
    assert set(lk1.facet_labels()) == {(2,), (4,)}
    rest = fano.restriction(mask_of((1, 2, 4)))
    assert set(rest.facet_labels()) == {(1, 2), (1, 4), (2, 4)}
    # S not a face gives the void complex
    assert fano.rel_complex(mask_of((1, 2)), mask_of((4, 5, 6))).is_void


def test_rel_complex_partition_validation(fano):
    with pytest.raises(ValidationError):
        fano.rel_complex(mask_of((1, 2)), mask_of((2, 3)))
    with pytest.raises(ValidationError):
        fano.rel_complex(mask_of((1, 2)), mask_of((3,)), mask_of((4,)))


def test_link_of_simplex_is_simplex():
    simplex = gen.full_simplex(5)
    for k in range(5):
        for S in itertools.combinations(range(1, 6), k):
            lk = simplex.link(mask_of(S))
            assert len(lk.facets) == 1
            assert lk.facets[0] == simplex.ground & ~mask_of(S)


def test_deletion_octahedron(octa):
    sub = octa.deletion((1,))
    assert set(sub.facet_labels()) == {(2, 3, 4), (2, 4, 6), (3, 4, 5), (4, 5, 6)}


def test_restriction_hollow_triangle():
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert tri.restriction(mask_of((1, 2))).facet_labels() == [(1, 2)]


def test_join_three_two_point_factors_is_octahedron(octa):
    p2 = from_facets(2, [(1,), (2,)])
    assert are_isomorphic(p2.join(p2).join(p2), octa)


def test_point_suspension_of_square_is_octahedron(octa):
    assert are_isomorphic(gen.cycle_graph(4).point_suspension(2), octa)


def test_skeleton():
    assert gen.full_simplex(4).skeleton(1) == gen.complete_graph(4)
    assert gen.full_simplex(3).skeleton(-1).is_irrelevant


def test_verify_dual_identity_examples(octa, fano):
    assert verify_dual_identity(octa, mask_of((2, 3, 5, 6)), mask_of((1,)))
    assert verify_dual_identity(octa, octa.ground, 0)
    import random
    rng = random.Random(11)
    for _ in range(25):
        R = S = 0
        for b in range(7):
            block = rng.randrange(3)
            if block == 0:
                R |= 1 << b
            elif block == 1:
                S |= 1 << b
        assert verify_dual_identity(fano, R, S)


def test_link_restriction_commute(small_exhaustive):
    from cmhier.complexes import submasks
    for cx in small_exhaustive[::7]:
        for R in submasks(cx.ground):
            sub = cx.restriction(R)
            for S in submasks(R):
                if cx.is_face(S):
                    assert sub.link(S) == cx.link(S).restriction(R & ~S)


def test_downward_closure_after_constructors(small_exhaustive):
    import random
    rng = random.Random(3)
    for cx in rng.sample(small_exhaustive, 40):
        faces = cx.faces()
        for m in faces:
            for v in labels_of(m):
                assert m & ~(1 << (v - 1)) in faces


def test_relabel_compacts_ground(octa):
    lk = octa.link((1,))
    assert labels_of(lk.ground) == (2, 3, 5, 6)
    rl = lk.relabel()
    assert labels_of(rl.ground) == (1, 2, 3, 4)
    assert are_isomorphic(rl, gen.cycle_graph(4))


def test_trusted_constructor_used_by_generators():
    # generator output must satisfy the public validation
    for cx in (gen.fano_plane(), gen.octahedron(), gen.cyclic_polytope_boundary(6, 4)):
        rebuilt = from_facets(cx.n, cx.facet_labels())
        assert rebuilt == cx
