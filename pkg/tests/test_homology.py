import pytest

from cmhier import (CapacityError, FieldSpec, QQ, ValidationError,
                    chain_complex, dual_homology_check, from_facets, mask_of,
                    reduced_betti, rel_betti, subset_homology_table,
                    weighted_point_cohomology)
from cmhier import generators as gen
from cmhier.fvector import euler_characteristic, f_polynomial


def test_field_validation():
    FieldSpec(0)
    FieldSpec(7)
    with pytest.raises(ValidationError):
        FieldSpec(6)


def test_hollow_triangle_is_a_circle():
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert reduced_betti(tri).nonzero() == [(1, 1)]


def test_irrelevant_complex_has_empty_face_class():
    irr = from_facets(3, [()])
    assert reduced_betti(irr).nonzero() == [(-1, 1)]


def test_void_complex_all_zero():
    assert reduced_betti(from_facets(3, [])).nonzero() == []


def test_simplex_acyclic():
    for n in (1, 2, 3, 4, 5):
        assert reduced_betti(gen.full_simplex(n)).nonzero() == []


def test_fano_homology(fano):
    b = reduced_betti(fano)
    assert b.nonzero() == [(1, 8)]
    # independent Euler-characteristic oracle: -1 + 7 - 21 + 7 = -8
    assert euler_characteristic(f_polynomial(fano)) == -8
    assert b.euler() == -8


def test_octahedron_is_a_two_sphere(octa):
    assert reduced_betti(octa).nonzero() == [(2, 1)]


def test_betti_euler_matches_face_counts(small_exhaustive):
    for cx in small_exhaustive:
        assert reduced_betti(cx).euler() == euler_characteristic(f_polynomial(cx))


def test_rel_betti_examples(octa):
    two_edges = from_facets(4, [(1, 2), (3, 4)])
    b = rel_betti(two_edges, mask_of((1, 2)), mask_of((3,)))
    assert b.nonzero() == [(-1, 1)]
    # S not a face: all zero
    assert rel_betti(two_edges, mask_of((1, 2)), mask_of((3, 4))).nonzero() == []
    b = rel_betti(octa, mask_of((2, 3, 5, 6)), mask_of((1,)))
    assert b.nonzero() == [(1, 1)]


def test_subset_table_examples():
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    tab = subset_homology_table(tri)
    rows = {R: b for R, b in tab.items() if b.nonzero() and R[1] == 0}
    assert set(rows) == {(tri.ground, 0), (0, 0)}
    assert rows[(tri.ground, 0)].nonzero() == [(1, 1)]
    assert rows[(0, 0)].nonzero() == [(-1, 1)]

    simplex = gen.full_simplex(3)
    tab = subset_homology_table(simplex)
    nz = {R for (R, S), b in tab.items() if b.nonzero() and S == 0}
    assert nz == {0}

    two_edges = from_facets(4, [(1, 2), (3, 4)])
    tab = subset_homology_table(two_edges)
    h0_rows = {R for (R, S), b in tab.items() if S == 0 and b.get(0)}
    expected = {mask_of(p) for p in ((1, 2, 3, 4), (1, 3), (1, 4), (2, 3), (2, 4),
                                     (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))}
    assert h0_rows == expected


def test_subset_table_capacity():
    cx = from_facets(4, [(1, 2)])
    with pytest.raises(CapacityError):
        subset_homology_table(cx, bound=3)


def test_dual_homology_examples(octa, small_exhaustive):
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    assert dual_homology_check(tri)
    assert dual_homology_check(octa)
    for cx in small_exhaustive:
        assert dual_homology_check(cx)


def test_chain_complex_dd_zero(small_exhaustive):
    import random
    rng = random.Random(5)
    for cx in rng.sample(small_exhaustive, 30) + [gen.fano_plane()]:
        assert chain_complex(cx).dd_is_zero()


def test_boundary_matrix_shape_and_signs():
    tri = from_facets(3, [(1, 2), (1, 3), (2, 3)])
    cc = chain_complex(tri)
    # degree 0 -> -1: augmentation over three vertices
    assert cc.boundary(0) == [[1], [1], [1]]
    # degree 1 -> 0: edges 12, 13, 23 against vertices 1, 2, 3
    assert cc.boundary(1) == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]


def test_field_characteristic_parameter(small_exhaustive):
    import random
    rng = random.Random(9)
    for cx in rng.sample(small_exhaustive, 25):
        b0 = reduced_betti(cx, QQ)
        for p in (2, 3):
            assert reduced_betti(cx, FieldSpec(p)).nonzero() == b0.nonzero()


def test_weighted_point_cohomology_matches_unweighted(fano):
    weights = {1 << k: 1 for k in range(7)}
    dims = weighted_point_cohomology(fano, weights)
    b = reduced_betti(fano)
    for p in range(0, 8):
        assert dims.get(p, 0) == b.get(p - 1)


def test_weighted_point_cohomology_two_edges():
    two_edges = from_facets(4, [(1, 2), (3, 4)])
    dims = weighted_point_cohomology(two_edges, {1: 2, 2: 3})  # support {1,2}
    assert dims.get(1, 0) == 2
