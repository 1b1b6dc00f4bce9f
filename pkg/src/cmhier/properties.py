"""Property suites: the package's theorems-as-tests, shared by pytest and the CLI.

Each check takes a complex (or a pair) and returns a list of violation
strings; an empty list is a pass.  The ``run_all`` driver executes every
suite over a corpus and reports one line per suite.

Exclusions that the checks apply (they are part of the contract):

* the full simplex is excluded from the level-witness check (all its
  homology vanishes, so no witness can exist);
* restrictions and deletions that are skeletons of a simplex are excluded
  from the CLeray-side closure checks (their membership is set by the frame
  convention, which restriction can violate);
* the void complex is skipped wherever a class predicate is not applicable.
"""

from __future__ import annotations

import itertools
import random

from . import bgg, fvector, generators, hierarchy
from .complexes import Complex, labels_of, submasks, verify_dual_identity
from .errors import InternalCheckError
from .homology import (QQ, FieldSpec, betti_cache, chain_complex,
                       dual_homology_check, reduced_betti,
                       weighted_point_cohomology)

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def acceptance_corpus(seed: int = 2024, random_counts=((6, 120), (7, 120))):
    """Exhaustive complexes on n <= 5 plus seeded random complexes at n = 6, 7."""
    corpus = []
    for n in range(1, 6):
        corpus.extend(generators.exhaustive_complexes(n))
    for n, count in random_counts:
        corpus.extend(generators.random_corpus(n, count, seed))
    return corpus


# ---------------------------------------------------------------------------
# core combinatorics
# ---------------------------------------------------------------------------

def check_downward_closure(cx: Complex) -> list[str]:
    faces = cx.faces()
    bad = [m for m in faces for b in labels_of(m)
           if m & ~(1 << (b - 1)) not in faces]
    return [f"{cx!r}: face family not downward closed"] if bad else []


def check_dual_involution(cx: Complex) -> list[str]:
    if cx.alexander_dual().alexander_dual() != cx:
        return [f"{cx!r}: double dual differs from the complex"]
    return []


def check_dual_invariant_identities(cx: Complex) -> list[str]:
    out = []
    inv = cx.invariants()
    dinv = cx.alexander_dual().invariants()
    n = inv.n
    if inv.d is not None and n != inv.d + dinv.c + 1:
        out.append(f"{cx!r}: n != d + c* + 1 ({n} != {inv.d} + {dinv.c} + 1)")
    if dinv.d is not None and n != dinv.d + inv.c + 1:
        out.append(f"{cx!r}: n != d* + c + 1 ({n} != {dinv.d} + {inv.c} + 1)")
    return out


def _partitions_to_check(cx: Complex, rng: random.Random | None, cap: int = 60):
    if cx.n <= 6 or rng is None:
        for R in submasks(cx.ground):
            rest = cx.ground & ~R
            for S in submasks(rest):
                yield R, S
    else:
        for _ in range(cap):
            R = S = 0
            for b in range(cx.n):
                block = rng.randrange(3)
                if block == 0:
                    R |= 1 << b
                elif block == 1:
                    S |= 1 << b
            yield R, S


def check_rel_dual_identity(cx: Complex, rng: random.Random | None = None) -> list[str]:
    """Dualizing a relative complex swaps the roles of the S and T blocks."""
    for R, S in _partitions_to_check(cx, rng):
        if not verify_dual_identity(cx, R, S):
            return [f"{cx!r}: rel-dual identity fails at R={labels_of(R)}, S={labels_of(S)}"]
    return []


def check_link_restriction_commute(cx: Complex) -> list[str]:
    for R in submasks(cx.ground):
        sub = cx.restriction(R)
        for S in submasks(R):
            if not cx.is_face(S):
                continue
            if sub.link(S) != cx.link(S).restriction(R & ~S):
                return [f"{cx!r}: link/restriction do not commute at "
                        f"R={labels_of(R)}, S={labels_of(S)}"]
    return []


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------

def check_dd_zero(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    if not chain_complex(cx, field).dd_is_zero():
        return [f"{cx!r}: boundary composed with boundary is nonzero"]
    return []


def check_dual_betti_pairing(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    if not dual_homology_check(cx, field):
        return [f"{cx!r}: dual homology pairing h~_p <-> h~_(n-3-p) fails"]
    return []


def check_euler_cross(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    f = fvector.f_polynomial(cx)
    if reduced_betti(cx, field).euler() != fvector.euler_characteristic(f):
        return [f"{cx!r}: alternating homology sum differs from face-count Euler value"]
    return []


def check_homology_window(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Nonvanishing h~_p of the relative complex on (S, T) forces
    c-1 <= p+s <= d-1."""
    inv = cx.invariants()
    if inv.d is None or cx.n > 6:
        return []
    tab = betti_cache(cx, field)
    for S, T in _partitions_to_check(cx, None):
        R = cx.ground & ~S & ~T
        if R == 0:
            # degenerate: the relative complex is at most {emptyset}, whose
            # h~_(-1) sits below the window whenever s < c
            continue
        s = S.bit_count()
        for p, _h in tab.rel(R, S).nonzero():
            if not inv.c - 1 <= p + s <= inv.d - 1:
                return [f"{cx!r}: homology at p={p} outside the frame/dimension "
                        f"window for S={labels_of(S)}, T={labels_of(T)}"]
    return []


def check_top_frame_link(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Every complex except the full simplex and void has a link with
    nonvanishing homology in degree c-1."""
    inv = cx.invariants()
    if cx.is_void or inv.c == inv.n:
        return []
    tab = betti_cache(cx, field)
    for S in cx.faces():
        if tab.link(S).get(inv.c - 1):
            return []
    return [f"{cx!r}: no link has homology in degree c-1 = {inv.c - 1}"]


def check_reduction_moves(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """The three reduction moves on nonvanishing relative homology:

    a) shrinking S to S' reaches nonzero h~_{p'} with p'-p = |R'\\R|;
    b) shrinking T keeps the degree;
    c) shrinking R to R' reaches nonzero h~_{p'} with p-p' = |S'\\S|.
    """
    if cx.n > 5:
        return []
    tab = betti_cache(cx, field)
    out = []
    for R, S in _partitions_to_check(cx, None):
        T = cx.ground & ~R & ~S
        nz = tab.rel(R, S).nonzero()
        if not nz:
            continue
        for p, _h in nz:
            for Sp in submasks(S):          # variant a: S -> S' adds S\S' to R or T
                moved = S & ~Sp
                ok = any(tab.rel(R | add, Sp).get(p + add.bit_count())
                         for add in submasks(moved))
                if not ok:
                    out.append(f"{cx!r}: S-reduction stuck at R={labels_of(R)}, "
                               f"S={labels_of(S)}, S'={labels_of(Sp)}, p={p}")
                    return out
            for Tp in submasks(T):          # variant b: T -> T' adds T\T' to R or S
                moved = T & ~Tp
                ok = any(tab.rel(R | add, S | (moved & ~add)).get(p)
                         for add in submasks(moved))
                if not ok:
                    out.append(f"{cx!r}: T-reduction stuck at R={labels_of(R)}, "
                               f"S={labels_of(S)}, T'={labels_of(Tp)}, p={p}")
                    return out
            for Rp in submasks(R):          # variant c: R -> R' adds R\R' to S or T
                moved = R & ~Rp
                ok = any(tab.rel(Rp, S | add).get(p - add.bit_count())
                         for add in submasks(moved))
                if not ok:
                    out.append(f"{cx!r}: R-reduction stuck at R={labels_of(R)}, "
                               f"S={labels_of(S)}, R'={labels_of(Rp)}, p={p}")
                    return out
    return out


def check_field_agreement(cx: Complex, characteristics=(0, 2, 3)) -> list[str]:
    """Generator-produced examples are torsion free, so dimensions must agree
    across coefficient fields."""
    tables = [reduced_betti(cx, FieldSpec(ch)) for ch in characteristics]
    base = tables[0]
    for ch, tab in zip(characteristics[1:], tables[1:]):
        if tab.nonzero() != base.nonzero():
            return [f"{cx!r}: homology over characteristic {ch} differs from "
                    f"characteristic {characteristics[0]}"]
    return []


# ---------------------------------------------------------------------------
# hierarchy
# ---------------------------------------------------------------------------

def check_equivalence_pairs(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Run every classifier (all reformulation cross-checks are inline) plus
    the duality pairing of the base classes."""
    try:
        hierarchy.classify(cx, field)
        if not cx.is_void:
            dual = cx.alexander_dual()
            if hierarchy.is_cleray(cx, field).member != \
                    hierarchy.is_cohen_macaulay(dual, field).member:
                return [f"{cx!r}: CLeray does not match Cohen-Macaulay of the dual"]
    except InternalCheckError as exc:
        return [str(exc)]
    return []


def check_monotone_levels(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    if cx.is_void:
        return []
    out = []
    rep = hierarchy.classify(cx, field)
    for level, member in ((rep.cm_level, hierarchy.is_cm_a),
                          (rep.cleray_level, hierarchy.is_cleray_a)):
        for a in range(level + 1):
            if not member(cx, a, field).member:
                out.append(f"{cx!r}: level {level} membership without level {a}")
    return out


def check_vertex_link_frame(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """2-CLeray complexes have every vertex link of frame number c - 1."""
    if cx.is_void or not hierarchy.is_cleray_a(cx, 1, field).member:
        return []
    c = cx.invariants().c
    for v in labels_of(cx.ground):
        m = 1 << (v - 1)
        if cx.is_face(m) and cx.link(m).invariants().c != c - 1:
            return [f"{cx!r}: vertex {v} link has frame number "
                    f"{cx.link(m).invariants().c}, expected {c - 1}"]
    return []


def check_facet_intersections(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Level-c CLeray membership is pairwise facet intersections smaller than c."""
    if cx.is_void:
        return []
    c = cx.invariants().c
    small = all((f & g).bit_count() < c
                for f, g in itertools.combinations(cx.facets, 2))
    if hierarchy.is_cleray_a(cx, c, field).member != small:
        return [f"{cx!r}: facet-intersection criterion disagrees with level-{c} membership"]
    return []


def check_level_link_nonvanishing(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """(a+1)-CLeray membership forces h~_{c-a}(lk S) != 0 on every (a-1)-face.
    The full simplex is exempt (all its homology vanishes)."""
    inv = cx.invariants()
    if cx.is_void or inv.c == inv.n:
        return []
    tab = betti_cache(cx, field)
    level = hierarchy.cleray_level(cx, field)
    for a in range(1, level + 1):
        for S in cx.faces():
            if S.bit_count() == a - 1 and not tab.link(S).get(inv.c - a):
                return [f"{cx!r}: level {a} member with vanishing link homology "
                        f"at S={labels_of(S)}"]
    return []


def _closure_targets(cx: Complex, rng: random.Random | None, cap: int = 24):
    subs = list(submasks(cx.ground))
    if rng is not None and len(subs) > cap:
        subs = rng.sample(subs, cap)
    return subs


def check_restriction_closure(cx: Complex, field: FieldSpec = QQ,
                              rng: random.Random | None = None) -> list[str]:
    """Restrictions of level-a CLeray members stay level-a.  Skeleton
    restrictions are exempt (their membership is set by the frame
    convention).  The ext-concentrated refinement is NOT closed under
    restriction; see the pinned counterexample in the test suite."""
    if cx.is_void:
        return []
    rep = hierarchy.classify(cx, field)
    out = []
    for R in _closure_targets(cx, rng):
        sub = cx.restriction(R)
        if sub.is_skeleton_family:
            continue
        for a in range(rep.cleray_level + 1):
            if not hierarchy.is_cleray_a(sub, a, field).member:
                out.append(f"{cx!r}: restriction to {labels_of(R)} loses level-{a} "
                           f"CLeray membership")
                return out
    return out


def check_link_closure(cx: Complex, field: FieldSpec = QQ,
                       rng: random.Random | None = None) -> list[str]:
    """Links of level-a Cohen-Macaulay members stay level-a."""
    if cx.is_void:
        return []
    rep = hierarchy.classify(cx, field)
    if rep.cm_level < 0:
        return []
    out = []
    faces = sorted(cx.faces())
    if rng is not None and len(faces) > 24:
        faces = rng.sample(faces, 24)
    for S in faces:
        lk = cx.link(S)
        for a in range(rep.cm_level + 1):
            if not hierarchy.is_cm_a(lk, a, field).member:
                out.append(f"{cx!r}: link of {labels_of(S)} loses level-{a} membership")
                return out
    return out


def check_circ_deletion_closure(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Deleting r <= a vertices from a level-a circ member lands in level a-r."""
    if cx.is_void:
        return []
    rep = hierarchy.classify(cx, field)
    out = []
    for a in rep.cm_circ_levels:
        for r in range(a + 1):
            for R in itertools.combinations(labels_of(cx.ground), r):
                sub = cx.deletion(R)
                if not hierarchy.is_cm_circ(sub, a - r, field).member:
                    out.append(f"{cx!r}: deletion of {R} leaves circ level {a - r}")
                    return out
    return out


def check_join_cm_closure(a_level: int, left: Complex, right: Complex,
                          field: FieldSpec = QQ) -> list[str]:
    """The join of two level-a Cohen-Macaulay complexes is level-a."""
    if not (hierarchy.is_cm_a(left, a_level, field).member
            and hierarchy.is_cm_a(right, a_level, field).member):
        return []
    if not hierarchy.is_cm_a(left.join(right), a_level, field).member:
        return [f"join of {left!r} and {right!r} loses level {a_level}"]
    return []


# ---------------------------------------------------------------------------
# sheaf-shadow suites
# ---------------------------------------------------------------------------

def check_single_sheaf(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    if not bgg.single_sheaf_check(cx, field):
        return [f"{cx!r}: sheaf concentration does not match CLeray membership"]
    return []


def check_fiber_oracle(cx: Complex, field: FieldSpec = QQ,
                       supports=None) -> list[str]:
    """Fiber dimensions from the restriction formula against the chain-level
    computation at an explicit point with distinct prime coordinates."""
    if supports is None:
        supports = [R for R in submasks(cx.ground) if R]
    for R in supports:
        weights = {}
        for i, b in enumerate(1 << k for k in range(cx.n)):
            if b & R:
                weights[b] = _PRIMES[i]
        oracle = weighted_point_cohomology(cx, weights, field)
        profile = bgg.fiber_profile(cx, R, field)
        for p in range(0, cx.n + 2):
            if oracle.get(p, 0) != profile.dim(p):
                return [f"{cx!r}: fiber dimension at support {labels_of(R)}, "
                        f"position {p}: formula {profile.dim(p)}, chain {oracle.get(p, 0)}"]
    return []


def check_profile_consistency(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Generic rank equals the fiber dimension at the full support."""
    profile = bgg.cohomology_profile(cx, field)
    if cx.is_void:
        return []
    fiber = bgg.fiber_profile(cx, cx.ground, field)
    out = []
    for p, info in profile.positions.items():
        if info.generic_rank != fiber.dim(p):
            out.append(f"{cx!r}: generic rank at position {p} differs from the "
                       f"full-support fiber")
        if info.generic_rank > 0 and labels_of(cx.ground) not in \
                tuple(lab for lab, _rho in info.assoc_supports):
            out.append(f"{cx!r}: positive generic rank without the full support "
                       f"among the associated supports at position {p}")
    return out


def check_graph_rank(cx: Complex, field: FieldSpec = QQ,
                     rng: random.Random | None = None) -> list[str]:
    supports = [R for R in submasks(cx.ground) if R]
    if rng is not None and len(supports) > 12:
        supports = rng.sample(supports, 12)
    for R in supports:
        if not bgg.graph_rank_check(cx, R, field):
            return [f"{cx!r}: closed-form forest rank differs from the fiber "
                    f"dimension at {labels_of(R)}"]
    return []


def check_gorenstein_suite(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    gs = hierarchy.is_gorenstein_star(cx, field)
    if not gs.member:
        return []
    if not bgg.gorenstein_ideal_check(cx, field):
        return [f"{cx!r}: Gorenstein* member fails the ideal-identification "
                f"Hilbert check"]
    return []


# ---------------------------------------------------------------------------
# face-count suites
# ---------------------------------------------------------------------------

def check_circ_f_formula(cx: Complex, field: FieldSpec = QQ) -> list[str]:
    """Certified circ members have the closed-form face counts and the
    block-design replication number."""
    if cx.is_void:
        return []
    inv = cx.invariants()
    rep = hierarchy.classify(cx, field)
    out = []
    for a in rep.cleray_circ_levels:
        if not inv.c >= a:
            continue
        expected = fvector.fa_formula(a, inv.n, inv.d, inv.c)
        if fvector.f_polynomial(cx) != expected:
            out.append(f"{cx!r}: circ level {a} face counts differ from the "
                       f"closed form {expected}")
        if not fvector.verify_design(cx, a, field):
            out.append(f"{cx!r}: circ level {a} replication count differs from "
                       f"the closed form")
    return out


def check_f_recursion(max_n: int = 12) -> list[str]:
    """Derivative of the level-a polynomial is n times the level-(a-1)
    polynomial of the reduced parameters."""
    out = []
    for n in range(1, max_n + 1):
        for d in range(0, n + 1):
            for c in range(0, d + 1):
                for a in range(1, c + 1):
                    if c == a and (n - a + 1) % (d - a + 1) != 0:
                        continue
                    try:
                        fa = fvector.fa_formula(a, n, d, c)
                        prev = fvector.fa_formula(a - 1, n - 1, d - 1, c - 1)
                    except InternalCheckError:
                        continue
                    lhs = fa.derivative()
                    rhs = fvector.FPolynomial.of([n * v for v in prev.coeffs])
                    if lhs != rhs:
                        out.append(f"recursion fails at a={a}, (n,d,c)=({n},{d},{c})")
    return out


def check_join_f_multiplicative(left: Complex, right: Complex) -> list[str]:
    f = fvector.f_polynomial(left.join(right))
    if f != fvector.f_polynomial(left) * fvector.f_polynomial(right):
        return [f"join of {left!r} and {right!r}: face polynomial is not the product"]
    return []


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

CORE_SUITES = (
    ("downward closure", check_downward_closure),
    ("dual involution", check_dual_involution),
    ("dual invariant identities", check_dual_invariant_identities),
)

FIELD_SUITES = (
    ("boundary squared is zero", check_dd_zero),
    ("dual homology pairing", check_dual_betti_pairing),
    ("Euler characteristic cross-check", check_euler_cross),
    ("homology frame/dimension window", check_homology_window),
    ("top-frame link homology", check_top_frame_link),
    ("classifier criterion equivalences", check_equivalence_pairs),
    ("level monotonicity", check_monotone_levels),
    ("vertex-link frame drop", check_vertex_link_frame),
    ("facet-intersection criterion", check_facet_intersections),
    ("level link nonvanishing", check_level_link_nonvanishing),
    ("single nonzero sheaf position", check_single_sheaf),
    ("profile/fiber consistency", check_profile_consistency),
    ("Gorenstein* ideal identification", check_gorenstein_suite),
    ("circ face-count formula", check_circ_f_formula),
)


def run_all(corpus, field: FieldSpec = QQ, seed: int = 2024, log=None,
            deep: bool = False):
    """Run every suite over the corpus; returns (checks_run, violations)."""
    rng = random.Random(seed)
    violations: list[str] = []
    checks = 0

    def report(name, bad):
        nonlocal checks
        checks += 1
        if log is not None:
            log(f"[{'FAIL' if bad else 'PASS'}] {name}")
        violations.extend(bad)

    for name, fn in CORE_SUITES:
        bad = []
        for cx in corpus:
            bad.extend(fn(cx))
        report(name, bad)

    bad = []
    for cx in corpus:
        bad.extend(check_rel_dual_identity(cx, rng))
    report("relative-complex dual identity", bad)

    for name, fn in FIELD_SUITES:
        bad = []
        for cx in corpus:
            bad.extend(fn(cx, field))
        report(name, bad)

    bad = []
    for cx in corpus:
        if cx.n <= 4 or (deep and cx.n <= 5):
            bad.extend(check_reduction_moves(cx, field))
    report("homology reduction moves", bad)

    bad = []
    for cx in corpus:
        if cx.n <= 5 or rng.random() < 0.2:
            bad.extend(check_restriction_closure(cx, field, rng))
            bad.extend(check_link_closure(cx, field, rng))
            bad.extend(check_circ_deletion_closure(cx, field))
    report("closure under restriction/link/deletion", bad)

    bad = []
    sample = [cx for cx in corpus if not cx.is_void and cx.n <= 4]
    rng2 = random.Random(seed + 1)
    if len(sample) >= 2:
        for _ in range(25):
            left, right = rng2.choice(sample), rng2.choice(sample)
            for a in range(0, 3):
                bad.extend(check_join_cm_closure(a, left, right, field))
            bad.extend(check_join_f_multiplicative(left, right))
    report("join closure and face-count product", bad)

    bad = []
    for cx in corpus:
        if cx.n <= 4 or (cx.n <= 6 and rng.random() < 0.15):
            bad.extend(check_fiber_oracle(cx, field))
    report("fiber dimensions against chain-level oracle", bad)

    bad = []
    for i in range(50):
        forest = generators.random_forest(4 + i % 5, seed * 31 + i)
        bad.extend(check_graph_rank(forest, field, rng))
    report("forest rank closed form", bad)

    report("face-count recursion", check_f_recursion(10 if not deep else 12))

    return checks, violations
