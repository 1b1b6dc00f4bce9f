"""Membership tests for the Cohen-Macaulay and CLeray hierarchies.

Every class is decided by one designated primary criterion; the equivalent
reformulations run as assertions on every call and a disagreement raises
InternalCheckError (it is never resolved silently).  All homology lookups go
through the shared per-complex table, so nothing is computed twice.

Conventions for the degenerate family (the void complex and the skeletons of
the full simplex, i.e. complexes with d == c):

* a skeleton with frame number c is (a+1)-CLeray iff c >= a-1, and the same
  rule is used for the ext-concentrated (dagger) refinement;
* a skeleton is in the level-a top-vanishing (circ) subclass iff a == 0 or
  a <= c.  The a == 0 escape keeps "circ at level 0" equal to doubly
  Cohen-Macaulay, and the a <= c cap keeps the block-design endpoint (every
  skeleton is trivially a Steiner system with blocks its c-sets);
* the Cohen-Macaulay side inherits these through Alexander duality, where the
  dual of a skeleton is a skeleton with frame number n - d - 1.

The cross-checks that scan all 3^n partitions of the ground set are applied
up to ``EXHAUSTIVE_PARTITION_LIMIT`` vertices; the cheap reformulations run
at every size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import Complex, labels_of, mask_of, submasks
from .errors import InternalCheckError, PreconditionError
from .homology import QQ, FieldSpec, betti_cache

EXHAUSTIVE_PARTITION_LIMIT = 7


@dataclass(frozen=True)
class Witness:
    """Locates a failing homology group: the subset and degree that violate
    the primary criterion ('kind' says how the subset was used)."""

    kind: str
    labels: tuple[int, ...]
    degree: int | None = None

    def to_dict(self):
        return {"kind": self.kind, "labels": list(self.labels), "degree": self.degree}


@dataclass(frozen=True)
class ClassOutcome:
    member: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.member


def _memo(cx: Complex, key, compute):
    hit = cx._memo.get(key)
    if hit is None:
        hit = compute()
        cx._memo[key] = hit
    return hit


def _disagree(name: str, cx: Complex, **routes):
    vals = {k: bool(v) for k, v in routes.items()}
    if len(set(vals.values())) > 1:
        raise InternalCheckError(f"{name} criteria disagree on {cx!r}: {vals}")


def _partition_pairs(ground: int):
    """All ordered pairs (A, B) of disjoint subsets of the ground set."""
    for A in submasks(ground):
        rest = ground & ~A
        for B in submasks(rest):
            yield A, B


def _subsets_of_size(ground: int, k: int):
    for comb in itertools.combinations(labels_of(ground), k):
        yield mask_of(comb)


# ---------------------------------------------------------------------------
# Cohen-Macaulay and CLeray
# ---------------------------------------------------------------------------

def is_cohen_macaulay(cx: Complex, field: FieldSpec = QQ) -> ClassOutcome:
    """Link criterion: h~_p(lk S) = 0 whenever p + |S| <= d - 2, over all faces.

    Cross-checked against the deletion form: h~_p of every deletion of r
    vertices vanishes when p + r = d - 2.  The void complex is vacuously
    Cohen-Macaulay (it has no faces).
    """
    def run():
        if cx.is_void:
            return ClassOutcome(True)
        tab = betti_cache(cx, field)
        d = cx.invariants().d
        witness = None
        for S in sorted(cx.faces()):
            s = S.bit_count()
            for p, _h in tab.link(S).nonzero():
                if p + s <= d - 2:
                    witness = Witness("link", labels_of(S), p)
                    break
            if witness:
                break
        other = None
        for R in submasks(cx.ground):
            p = d - 2 - R.bit_count()
            if p < -1:
                continue
            if tab.restriction(cx.ground & ~R).get(p):
                other = Witness("deletion", labels_of(R), p)
                break
        _disagree("cohen-macaulay", cx, links=witness is None, deletions=other is None)
        return ClassOutcome(witness is None, witness)

    return _memo(cx, ("cm", field.characteristic), run)


def is_cleray(cx: Complex, field: FieldSpec = QQ) -> ClassOutcome:
    """Restriction criterion: h~_p(restriction to R) = 0 for all p >= c, all R.

    Cross-checked against the link form: h~_c(lk S) = 0 for every face S.
    The void complex is vacuously CLeray.
    """
    def run():
        if cx.is_void:
            return ClassOutcome(True)
        tab = betti_cache(cx, field)
        c = cx.invariants().c
        witness = None
        for R in submasks(cx.ground):
            for p, _h in tab.restriction(R).nonzero():
                if p >= c:
                    witness = Witness("restriction", labels_of(R), p)
                    break
            if witness:
                break
        other = None
        for S in cx.faces():
            if tab.link(S).get(c):
                other = Witness("link", labels_of(S), c)
                break
        _disagree("cleray", cx, restrictions=witness is None, links=other is None)
        return ClassOutcome(witness is None, witness)

    return _memo(cx, ("cl", field.characteristic), run)


# ---------------------------------------------------------------------------
# level-a classes
# ---------------------------------------------------------------------------

def is_cleray_a(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """(a+1)-CLeray: c >= a-1 and h~_{c-a}(lk S) = 0 for every face with |S| >= a.

    Skeletons of the full simplex are decided by the convention c >= a-1.
    Cross-checked against the link route (every link of an a-set is CLeray
    with frame number c-a) and, within the partition limit, against the
    window form over all relative complexes.
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        inv = cx.invariants()
        c = inv.c
        if cx.is_skeleton_family:
            ok = c >= a - 1
            return ClassOutcome(ok, None if ok else Witness("frame-convention", (), None))
        tab = betti_cache(cx, field)
        witness = None
        if c < a - 1:
            witness = Witness("frame-bound", (), None)
        else:
            for S in sorted(cx.faces()):
                if S.bit_count() >= a and tab.link(S).get(c - a):
                    witness = Witness("link", labels_of(S), c - a)
                    break
        primary = witness is None

        link_route = True
        for S in _subsets_of_size(cx.ground, a):
            lk = cx.link(S)
            if not (is_cleray(lk, field).member and lk.invariants().c == c - a):
                link_route = False
                break
        routes = {"faces": primary, "links": link_route}
        if a == 0:
            routes["base"] = is_cleray(cx, field).member
        if cx.n <= EXHAUSTIVE_PARTITION_LIMIT:
            window = True
            for R, S in _partition_pairs(cx.ground):
                s = S.bit_count()
                thr = max(c - a, c - s)
                if any(p >= thr for p, _h in tab.rel(R, S).nonzero()):
                    window = False
                    break
            routes["windows"] = window
        _disagree(f"(a+1)-cleray at a={a}", cx, **routes)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cl_a", a, field.characteristic), run)


def is_cm_a(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """(a+1)-Cohen-Macaulay: d <= n-a and h~_p of every deletion of r vertices
    vanishes when p + r = d + a - 2 and p <= d - 2.

    Cross-checked against the deletion route (every deletion of a vertices is
    Cohen-Macaulay of the same dimension) and against Alexander duality with
    the (a+1)-CLeray class of the dual.
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        if cx.is_void:
            dual = is_cleray_a(cx.alexander_dual(), a, field)
            return ClassOutcome(dual.member, dual.witness)
        inv = cx.invariants()
        n, d = inv.n, inv.d
        tab = betti_cache(cx, field)
        witness = None
        if d > n - a:
            witness = Witness("dimension-bound", (), None)
        else:
            for R in submasks(cx.ground):
                p = d + a - 2 - R.bit_count()
                if not -1 <= p <= d - 2:
                    continue
                if tab.restriction(cx.ground & ~R).get(p):
                    witness = Witness("deletion", labels_of(R), p)
                    break
        primary = witness is None

        del_route = a <= n
        if del_route:
            for R in _subsets_of_size(cx.ground, a):
                sub = cx.deletion(R)
                if not (is_cohen_macaulay(sub, field).member and sub.invariants().d == d):
                    del_route = False
                    break
        routes = {
            "window": primary,
            "deletions": del_route,
            "duality": is_cleray_a(cx.alexander_dual(), a, field).member,
        }
        if a == 0:
            routes["base"] = is_cohen_macaulay(cx, field).member
        _disagree(f"(a+1)-cm at a={a}", cx, **routes)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cm_a", a, field.characteristic), run)


def cleray_level(cx: Complex, field: FieldSpec = QQ) -> int:
    """Largest a with (a+1)-CLeray membership; -1 if not CLeray."""
    if not is_cleray_a(cx, 0, field).member:
        return -1
    a = 0
    while is_cleray_a(cx, a + 1, field).member:
        a += 1
        if a > cx.n + 1:
            raise InternalCheckError(f"cleray level failed to terminate on {cx!r}")
    return a


def cm_level(cx: Complex, field: FieldSpec = QQ) -> int:
    """Largest a with (a+1)-Cohen-Macaulay membership; -1 if not Cohen-Macaulay."""
    if not is_cm_a(cx, 0, field).member:
        return -1
    a = 0
    while is_cm_a(cx, a + 1, field).member:
        a += 1
        if a > cx.n + 1:
            raise InternalCheckError(f"cm level failed to terminate on {cx!r}")
    return a


# ---------------------------------------------------------------------------
# dagger refinement (concentrated higher Ext)
# ---------------------------------------------------------------------------

def _cl_dagger_window_violation(p: int, s: int, c: int, d: int, a: int) -> bool:
    return (c <= p + s <= d - 2) or (p + s == d - 1 and p >= c - a)


def _cl_dagger_rel_violation(p: int, s: int, r: int, c: int, d: int, a: int) -> bool:
    # relative-complex form of the link windows: moving the T block into S
    # keeps p and grows s, so the landing at p+s' = d-1 is reachable iff
    # p+r >= d-1 (r = s+t); on links (t = 0) this is the criterion above.
    return p + s >= c and (p + r <= d - 2 or p >= c - a)


def _cm_dagger_rel_violation(p: int, s: int, r: int, c: int, d: int, a: int) -> bool:
    # Alexander dual of the relative-complex windows on the CLeray side
    return p + s <= d - 2 and (p >= c or p + r <= d + a - 2)


def is_cl_dagger(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """Ext-concentrated (a+1)-CLeray: h~_p(lk S) = 0 for c <= p+s <= d-2 and
    for p+s = d-1 with p >= c-a.

    Skeletons are decided by the convention c >= a-1.  When the test passes,
    every facet must have cardinality c or d; anything else is flagged as an
    internal inconsistency.  Cross-checked, within the partition limit,
    against the same windows over all relative complexes.
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        inv = cx.invariants()
        c = inv.c
        if cx.is_skeleton_family:
            ok = c >= a - 1
            return ClassOutcome(ok, None if ok else Witness("frame-convention", (), None))
        d = inv.d
        tab = betti_cache(cx, field)
        witness = None
        for S in sorted(cx.faces()):
            s = S.bit_count()
            for p, _h in tab.link(S).nonzero():
                if _cl_dagger_window_violation(p, s, c, d, a):
                    witness = Witness("link", labels_of(S), p)
                    break
            if witness:
                break
        primary = witness is None

        routes = {"links": primary}
        if cx.n <= EXHAUSTIVE_PARTITION_LIMIT:
            window = True
            for R, S in _partition_pairs(cx.ground):
                s = S.bit_count()
                r = s + (cx.ground & ~R & ~S).bit_count()
                if any(_cl_dagger_rel_violation(p, s, r, c, d, a)
                       for p, _h in tab.rel(R, S).nonzero()):
                    window = False
                    break
            routes["windows"] = window
        _disagree(f"ext-concentrated cleray at a={a}", cx, **routes)
        if primary:
            bad = [f for f in cx.facets if f.bit_count() not in (c, d)]
            if bad:
                raise InternalCheckError(
                    f"ext-concentrated member {cx!r} has a facet of cardinality "
                    f"{bad[0].bit_count()}, outside {{c={c}, d={d}}}")
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cl_dag", a, field.characteristic), run)


def is_cm_dagger(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """Ext-concentrated (a+1)-Cohen-Macaulay: h~_p of every deletion vanishes
    for c <= p <= d-2, and for p = c-1 when fewer than d+a-c vertices were
    deleted.

    Cross-checked against duality with the dual dagger class, against the
    partition-window form, and (one direction) against the level-a deletion
    description: every deletion of a vertices is an ext-concentrated
    Cohen-Macaulay complex with the same (d, c) or a d-truncated simplex.
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        if cx.is_void:
            dual = is_cl_dagger(cx.alexander_dual(), a, field)
            return ClassOutcome(dual.member, dual.witness)
        inv = cx.invariants()
        n, d, c = inv.n, inv.d, inv.c
        if cx.is_skeleton_family:
            ok = d <= n - a
            _disagree(f"ext-concentrated cm at a={a} (skeleton)", cx,
                      convention=ok,
                      duality=is_cl_dagger(cx.alexander_dual(), a, field).member)
            return ClassOutcome(ok, None if ok else Witness("frame-convention", (), None))
        tab = betti_cache(cx, field)
        witness = None
        for R in submasks(cx.ground):
            r = R.bit_count()
            for p, _h in tab.restriction(cx.ground & ~R).nonzero():
                if (c <= p <= d - 2) or (p == c - 1 and r < d + a - c):
                    witness = Witness("deletion", labels_of(R), p)
                    break
            if witness:
                break
        primary = witness is None

        routes = {
            "deletions": primary,
            "duality": is_cl_dagger(cx.alexander_dual(), a, field).member,
        }
        if cx.n <= EXHAUSTIVE_PARTITION_LIMIT:
            window = True
            for S, T in _partition_pairs(cx.ground):
                R = S | T
                s, r = S.bit_count(), R.bit_count()
                if any(_cm_dagger_rel_violation(p, s, r, c, d, a)
                       for p, _h in tab.rel(cx.ground & ~R, S).nonzero()):
                    window = False
                    break
            routes["windows"] = window
        _disagree(f"ext-concentrated cm at a={a}", cx, **routes)
        if primary and a >= 1:
            for R in _subsets_of_size(cx.ground, a):
                sub = cx.deletion(R)
                si = sub.invariants()
                plain = (is_cm_dagger(sub, 0, field).member
                         and (si.d, si.c) == (d, c))
                truncated = sub.is_skeleton_family and si.d == min(d, n - a)
                if not (plain or truncated):
                    raise InternalCheckError(
                        f"ext-concentrated member {cx!r}: deletion of "
                        f"{labels_of(R)} fits neither description")
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cm_dag", a, field.characteristic), run)


# ---------------------------------------------------------------------------
# circ refinement (vanishing top homology at the level)
# ---------------------------------------------------------------------------

def _bi_cm_primary(cx: Complex, field: FieldSpec) -> bool:
    return is_cohen_macaulay(cx, field).member and is_cleray(cx, field).member


def is_cl_circ(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """Level-a circ class on the CLeray side: ext-concentrated membership plus
    h~_{c-a-1}(lk S) = 0 for every a-face S.

    Skeletons are members iff a == 0 or a <= c.  Cross-checked against the
    link description: every link of an a-set is doubly Cohen-Macaulay with
    invariants (n-a, d-a, c-a).
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        inv = cx.invariants()
        c = inv.c
        if cx.is_skeleton_family:
            ok = a == 0 or a <= c
            return ClassOutcome(ok, None if ok else Witness("frame-convention", (), None))
        n, d = inv.n, inv.d
        if a > n:
            return ClassOutcome(False, Witness("level-bound", (), None))
        tab = betti_cache(cx, field)
        dag = is_cl_dagger(cx, a, field)
        witness = None if dag.member else dag.witness
        if witness is None:
            for S in sorted(cx.faces()):
                if S.bit_count() == a and tab.link(S).get(c - a - 1):
                    witness = Witness("link", labels_of(S), c - a - 1)
                    break
        primary = witness is None

        link_route = True
        for S in _subsets_of_size(cx.ground, a):
            lk = cx.link(S)
            li = lk.invariants()
            if not (_bi_cm_primary(lk, field) and (li.n, li.d, li.c) == (n - a, d - a, c - a)):
                link_route = False
                break
        _disagree(f"circ cleray at a={a}", cx, primary=primary, links=link_route)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cl_circ", a, field.characteristic), run)


def is_cm_circ(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """Level-a circ class on the Cohen-Macaulay side: ext-concentrated
    membership plus h~_{d-1} of every deletion of a vertices vanishing.

    Cross-checked against the deletion description (every deletion of a
    vertices is doubly Cohen-Macaulay with the same dimension and frame
    dimension) and against duality with the CLeray-side circ class.
    """
    if a < 0:
        raise PreconditionError(f"level must be >= 0, got {a}")

    def run():
        if cx.is_void:
            dual = is_cl_circ(cx.alexander_dual(), a, field)
            return ClassOutcome(dual.member, dual.witness)
        inv = cx.invariants()
        n, d, c = inv.n, inv.d, inv.c
        if cx.is_skeleton_family:
            ok = a == 0 or a <= n - d - 1
            _disagree(f"circ cm at a={a} (skeleton)", cx,
                      convention=ok,
                      duality=is_cl_circ(cx.alexander_dual(), a, field).member)
            return ClassOutcome(ok, None if ok else Witness("frame-convention", (), None))
        if a > n:
            return ClassOutcome(False, Witness("level-bound", (), None))
        tab = betti_cache(cx, field)
        dag = is_cm_dagger(cx, a, field)
        witness = None if dag.member else dag.witness
        if witness is None:
            for R in _subsets_of_size(cx.ground, a):
                if tab.restriction(cx.ground & ~R).get(d - 1):
                    witness = Witness("deletion", labels_of(R), d - 1)
                    break
        primary = witness is None

        del_route = True
        for R in _subsets_of_size(cx.ground, a):
            sub = cx.deletion(R)
            si = sub.invariants()
            if not (_bi_cm_primary(sub, field) and (si.d, si.c) == (d, c)):
                del_route = False
                break
        _disagree(f"circ cm at a={a}", cx, primary=primary, deletions=del_route,
                  duality=is_cl_circ(cx.alexander_dual(), a, field).member)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("cm_circ", a, field.characteristic), run)


# ---------------------------------------------------------------------------
# endpoints
# ---------------------------------------------------------------------------

def is_bi_cm(cx: Complex, field: FieldSpec = QQ) -> ClassOutcome:
    """Doubly Cohen-Macaulay: the complex and its Alexander dual are both
    Cohen-Macaulay; decided as Cohen-Macaulay + CLeray and cross-checked
    against the dual form and against the level-0 circ class."""
    def run():
        cm = is_cohen_macaulay(cx, field)
        cl = is_cleray(cx, field)
        primary = cm.member and cl.member
        dual_form = cm.member and is_cohen_macaulay(cx.alexander_dual(), field).member
        circ_form = is_cl_circ(cx, 0, field).member
        _disagree("bi-cm", cx, primary=primary, dual=dual_form, circ=circ_form)
        witness = None if primary else (cm.witness or cl.witness)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("bicm", field.characteristic), run)


def is_gorenstein_star(cx: Complex, field: FieldSpec = QQ) -> ClassOutcome:
    """Gorenstein*: h~_p(lk S) is one-dimensional exactly on the diagonal
    p + |S| = d - 1 over faces S, and zero elsewhere.

    Cross-checked against: 2-Cohen-Macaulay with one-dimensional top homology.
    """
    def run():
        if cx.is_void:
            return ClassOutcome(False, Witness("void", (), None))
        tab = betti_cache(cx, field)
        d = cx.invariants().d
        witness = None
        for S in sorted(cx.faces()):
            s = S.bit_count()
            b = tab.link(S)
            top = d - 1 - s
            if b.get(top) != 1:
                witness = Witness("link", labels_of(S), top)
                break
            if any(p != top for p, _h in b.nonzero()):
                bad = next(p for p, _h in b.nonzero() if p != top)
                witness = Witness("link", labels_of(S), bad)
                break
        primary = witness is None
        other = (is_cm_a(cx, 1, field).member
                 and tab.restriction(cx.ground).get(d - 1) == 1)
        _disagree("gorenstein*", cx, diagonal=primary, two_cm_top=other)
        return ClassOutcome(primary, witness)

    return _memo(cx, ("gor", field.characteristic), run)


def is_steiner(cx: Complex, field: FieldSpec = QQ):
    """The block-design endpoint: returns (c, d, n) iff every facet has
    cardinality d and every c-subset of the ground set lies in exactly one
    facet, else None.  For pure complexes this must coincide with the
    level-c circ class, which is asserted."""
    def run():
        inv = cx.invariants()
        if inv.d is None:
            return None
        n, d, c = inv.n, inv.d, inv.c
        result = None
        if all(f.bit_count() == d for f in cx.facets):
            ok = all(sum(1 for f in cx.facets if S & ~f == 0) == 1
                     for S in _subsets_of_size(cx.ground, c))
            if ok:
                result = (c, d, n)
        if cx.is_pure:
            _disagree("steiner endpoint", cx,
                      design=result is not None,
                      circ=is_cl_circ(cx, c, field).member)
        return result

    return _memo(cx, ("steiner", field.characteristic), run)


def is_g_a(cx: Complex, a: int, field: FieldSpec = QQ) -> ClassOutcome:
    """(a+1)-Cohen-Macaulay with every link of a face of dimension d-2
    consisting of exactly a+1 vertices (the minimum the class allows)."""
    if a < 1:
        raise PreconditionError(f"level must be >= 1, got {a}")

    def run():
        base = is_cm_a(cx, a, field)
        if not base.member:
            return ClassOutcome(False, base.witness)
        d = cx.invariants().d
        for S in sorted(cx.faces()):
            if S.bit_count() != d - 1:
                continue
            lk = cx.link(S)
            nverts = sum(1 for f in lk.facets if f.bit_count() == 1)
            if len(lk.facets) != nverts or nverts != a + 1:
                return ClassOutcome(False, Witness("link", labels_of(S), 0))
        return ClassOutcome(True)

    return _memo(cx, ("g_a", a, field.characteristic), run)


def missing_face_check(cx: Complex, field: FieldSpec = QQ) -> bool:
    """Whether every two distinct minimal non-faces F, G have |F u G| >= d+2.

    Equivalent to membership at the extremal level n-d-1 of the
    Cohen-Macaulay hierarchy, which is asserted whenever that level is
    defined (d < n)."""
    def run():
        mnf = cx.minimal_nonfaces()
        ok = all((f | g).bit_count() >= (cx.invariants().d or 0) + 2
                 for f, g in itertools.combinations(mnf, 2))
        inv = cx.invariants()
        if inv.d is not None and inv.n - inv.d - 1 >= 0:
            _disagree("extremal-level missing faces", cx, unions=ok,
                      level=is_cm_a(cx, inv.n - inv.d - 1, field).member)
        return ok

    return _memo(cx, ("missing", field.characteristic), run)


# ---------------------------------------------------------------------------
# full report
# ---------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    applicable: bool
    field_characteristic: int
    n: int
    d: int | None
    c: int
    cm: ClassOutcome
    cleray: ClassOutcome
    bi_cm: ClassOutcome
    gorenstein_star: ClassOutcome
    cm_level: int
    cleray_level: int
    cm_dagger_level: int
    cleray_dagger_level: int
    cm_circ_levels: tuple[int, ...]
    cleray_circ_levels: tuple[int, ...]
    steiner: tuple[int, int, int] | None
    g_levels: tuple[int, ...]
    missing_face_ok: bool

    def to_dict(self):
        def outcome(o: ClassOutcome):
            d = {"member": o.member}
            if o.witness is not None:
                d["witness"] = o.witness.to_dict()
            return d

        return {
            "applicable": self.applicable,
            "field_characteristic": self.field_characteristic,
            "invariants": {"n": self.n, "d": self.d, "c": self.c},
            "cohen_macaulay": outcome(self.cm),
            "cleray": outcome(self.cleray),
            "bi_cm": outcome(self.bi_cm),
            "gorenstein_star": outcome(self.gorenstein_star),
            "cm_level": self.cm_level,
            "cleray_level": self.cleray_level,
            "cm_dagger_level": self.cm_dagger_level,
            "cleray_dagger_level": self.cleray_dagger_level,
            "cm_circ_levels": list(self.cm_circ_levels),
            "cleray_circ_levels": list(self.cleray_circ_levels),
            "steiner": list(self.steiner) if self.steiner else None,
            "g_levels": list(self.g_levels),
            "missing_face_ok": self.missing_face_ok,
        }


def _dagger_level(cx, a_max, member, field) -> int:
    if not member(cx, 0, field).member:
        return -1
    a = 0
    while a < a_max and member(cx, a + 1, field).member:
        a += 1
    return a


def classify(cx: Complex, field: FieldSpec = QQ) -> ClassificationReport:
    """Run every classifier with all cross-checks and assemble the report.

    The void complex is reported as not applicable."""
    def run():
        inv = cx.invariants()
        if cx.is_void:
            na = ClassOutcome(False, Witness("void", (), None))
            return ClassificationReport(
                applicable=False, field_characteristic=field.characteristic,
                n=inv.n, d=None, c=-1, cm=na, cleray=na, bi_cm=na,
                gorenstein_star=na, cm_level=-1, cleray_level=-1,
                cm_dagger_level=-1, cleray_dagger_level=-1,
                cm_circ_levels=(), cleray_circ_levels=(), steiner=None,
                g_levels=(), missing_face_ok=True)

        cm = is_cohen_macaulay(cx, field)
        cl = is_cleray(cx, field)
        bicm = is_bi_cm(cx, field)
        gor = is_gorenstein_star(cx, field)
        cml = cm_level(cx, field)
        cll = cleray_level(cx, field)
        bound = cx.n + 1
        cm_dag = _dagger_level(cx, bound, is_cm_dagger, field)
        cl_dag = _dagger_level(cx, bound, is_cl_dagger, field)
        cm_circ = tuple(a for a in range(cm_dag + 1) if is_cm_circ(cx, a, field).member)
        cl_circ = tuple(a for a in range(cl_dag + 1) if is_cl_circ(cx, a, field).member)
        steiner = is_steiner(cx, field)
        g_levels = tuple(a for a in range(1, cml + 1) if is_g_a(cx, a, field).member)
        missing = missing_face_check(cx, field)

        if not (set(cm_circ) <= set(range(cm_dag + 1)) and cm_dag <= cml):
            raise InternalCheckError(f"cm hierarchy chain broken on {cx!r}")
        if not (set(cl_circ) <= set(range(cl_dag + 1)) and cl_dag <= cll):
            raise InternalCheckError(f"cleray hierarchy chain broken on {cx!r}")

        return ClassificationReport(
            applicable=True, field_characteristic=field.characteristic,
            n=inv.n, d=inv.d, c=inv.c, cm=cm, cleray=cl, bi_cm=bicm,
            gorenstein_star=gor, cm_level=cml, cleray_level=cll,
            cm_dagger_level=cm_dag, cleray_dagger_level=cl_dag,
            cm_circ_levels=cm_circ, cleray_circ_levels=cl_circ,
            steiner=steiner, g_levels=g_levels, missing_face_ok=missing)

    return _memo(cx, ("classify", field.characteristic), run)
