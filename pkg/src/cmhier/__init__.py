"""Exact combinatorics of simplicial complexes: Alexander duality, reduced
homology, Cohen-Macaulay / CLeray hierarchies, and restriction-homology
profiles of the associated linear sheaf complex."""

from .complexes import (Complex, Invariants, are_isomorphic, from_facets,
                        labels_of, mask_of, verify_dual_identity)
from .errors import (CapacityError, InternalCheckError, PreconditionError,
                     ValidationError)
from .homology import (QQ, BettiTable, FieldSpec, chain_complex,
                       dual_homology_check, reduced_betti, rel_betti,
                       subset_homology_table, weighted_point_cohomology)
from .hierarchy import (ClassificationReport, ClassOutcome, Witness, classify,
                        cleray_level, cm_level, is_bi_cm, is_cl_circ,
                        is_cl_dagger, is_cleray, is_cleray_a, is_cm_a,
                        is_cm_circ, is_cm_dagger, is_cohen_macaulay, is_g_a,
                        is_gorenstein_star, is_steiner, missing_face_check)
from .fvector import (FPolynomial, design_lambda, euler_characteristic,
                      f0_formula, f_polynomial, fa_formula, h_vector,
                      verify_design)
from .bgg import (CohomologyProfile, FiberProfile, HilbertTable,
                  cohomology_profile, fiber_profile, gorenstein_ideal_check,
                  graph_rank_check, hilbert_table, single_sheaf_check,
                  tor_dims)

__version__ = "0.1.0"
