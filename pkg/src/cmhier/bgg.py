"""Restriction-homology profiles of the linear sheaf complex of a complex.

Everything here is derived from the homology of relative complexes; no
module or sheaf presentation is ever built.  For position p:

* the p-th cohomology module is nonzero iff some restriction has nonzero
  h~_{p-1}; it sheafifies to something nonzero iff a nonempty restriction
  does (finite-length modules sheafify to zero, so the two notions are kept
  apart);
* the maximal supports R with h~_{p-1}(restriction to R) nonzero are the
  associated coordinate subspaces, each carrying multiplicity rho equal to
  that homology dimension;
* the generic rank is h~_{p-1} of the complex itself;
* the value of the multigraded Hilbert function at a multidegree depends
  only on its support R and equals h~_{p-1}(restriction to R).

The fiber dimensions at an explicit point are checked in the test suites
against :func:`cmhier.homology.weighted_point_cohomology`, a chain-level
computation that does not go through the restriction formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, labels_of, submasks
from .errors import PreconditionError, ValidationError
from .homology import QQ, FieldSpec, betti_cache
from .hierarchy import is_cleray, is_gorenstein_star


@dataclass(frozen=True)
class PositionInfo:
    module_nonzero: bool
    sheaf_nonzero: bool
    assoc_supports: tuple[tuple[tuple[int, ...], int], ...]  # (labels, multiplicity)
    generic_rank: int


@dataclass(frozen=True)
class CohomologyProfile:
    field_characteristic: int
    positions: dict[int, PositionInfo]

    def sheaf_positions(self) -> list[int]:
        return sorted(p for p, info in self.positions.items() if info.sheaf_nonzero)

    def to_dict(self):
        return {
            "field_characteristic": self.field_characteristic,
            "positions": {
                str(p): {
                    "module_nonzero": info.module_nonzero,
                    "sheaf_nonzero": info.sheaf_nonzero,
                    "assoc_supports": [
                        {"labels": list(lab), "multiplicity": rho}
                        for lab, rho in info.assoc_supports],
                    "generic_rank": info.generic_rank,
                } for p, info in sorted(self.positions.items())
            },
        }


def cohomology_profile(cx: Complex, field: FieldSpec = QQ) -> CohomologyProfile:
    """Nonvanishing, associated supports, and generic ranks per position."""
    tab = betti_cache(cx, field)
    d = cx.invariants().d
    positions = {}
    top = 0 if d is None else d
    for p in range(0, top + 1):
        nonzero = [R for R in submasks(cx.ground) if tab.restriction(R).get(p - 1)]
        maximal = [R for R in nonzero
                   if not any(R != Q and R & ~Q == 0 for Q in nonzero)]
        supports = tuple(sorted(
            (labels_of(R), tab.restriction(R).get(p - 1)) for R in maximal))
        positions[p] = PositionInfo(
            module_nonzero=bool(nonzero),
            sheaf_nonzero=any(R for R in nonzero),
            assoc_supports=supports,
            generic_rank=tab.restriction(cx.ground).get(p - 1),
        )
    return CohomologyProfile(field.characteristic, positions)


@dataclass(frozen=True)
class FiberProfile:
    support: tuple[int, ...]
    dims: dict[int, int]

    def dim(self, p: int) -> int:
        return self.dims.get(p, 0)


def fiber_profile(cx: Complex, R, field: FieldSpec = QQ) -> FiberProfile:
    """Fiber dimensions of each cohomology sheaf at any point with support R.

    dims(p) = sum over S subseteq complement(R) of h~_{p-1-|S|} of the
    relative complex on (R, S); the value depends only on R.
    """
    R = cx.face_mask(R)
    if R == 0:
        raise PreconditionError("the empty support is not a projective point")
    tab = betti_cache(cx, field)
    comp = cx.ground & ~R
    dims: dict[int, int] = {}
    for S in submasks(comp):
        s = S.bit_count()
        for p, h in tab.rel(R, S).nonzero():
            q = p + 1 + s
            dims[q] = dims.get(q, 0) + h
    return FiberProfile(labels_of(R), {p: v for p, v in sorted(dims.items()) if v})


def tor_dims(cx: Complex, R, p: int, field: FieldSpec = QQ) -> int:
    """Dimension of the p-th Tor of the single cohomology sheaf against the
    residue field of a point with support R (CLeray complexes only)."""
    cl = is_cleray(cx, field)
    if not cl.member:
        raise PreconditionError(
            f"tor_dims needs a CLeray complex; witness {cl.witness}")
    R = cx.face_mask(R)
    if R == 0:
        raise PreconditionError("the empty support is not a projective point")
    c = cx.invariants().c
    tab = betti_cache(cx, field)
    total = 0
    for S in submasks(cx.ground & ~R):
        total += tab.rel(R, S).get(p + c - 1 - S.bit_count())
    return total


def graph_rank_check(cx: Complex, R, field: FieldSpec = QQ) -> bool:
    """For a forest with every vertex present, the sheaf rank at a point with
    support R is h~_0 of the restriction to R plus the number of vertices
    outside R whose neighbourhood misses R; compares that closed form with
    the fiber dimension at position 1."""
    inv = cx.invariants()
    if inv.d != 2 or inv.c != 1 or not is_cleray(cx, field).member:
        raise PreconditionError(
            "graph_rank_check needs a forest of dimension 1 with every vertex a face")
    R = cx.face_mask(R)
    if R == 0:
        raise PreconditionError("the empty support is not a projective point")
    tab = betti_cache(cx, field)
    count = 0
    for x in submasks(cx.ground):
        if x.bit_count() != 1 or x & R:
            continue
        neighbours = 0
        for f in cx.facets:
            if f & x:
                neighbours |= f & ~x
        if neighbours & R == 0:
            count += 1
    formula = tab.restriction(R).get(0) + count
    return formula == fiber_profile(cx, R, field).dim(1)


@dataclass(frozen=True)
class HilbertTable:
    """Squarefree multigraded Hilbert function of one cohomology module."""

    n: int
    position: int
    values: dict[int, int]  # support mask -> dimension

    def at_support(self, R) -> int:
        m = R if isinstance(R, int) else sum(1 << (v - 1) for v in R)
        return self.values.get(m, 0)

    def at_multidegree(self, degrees) -> int:
        degrees = list(degrees)
        if len(degrees) != self.n or any(x < 0 for x in degrees):
            raise ValidationError(
                f"multidegree must be {self.n} nonnegative integers")
        m = 0
        for i, x in enumerate(degrees):
            if x > 0:
                m |= 1 << i
        return self.values.get(m, 0)


def hilbert_table(cx: Complex, p: int, field: FieldSpec = QQ) -> HilbertTable:
    """Value at support R is h~_{p-1} of the restriction to R."""
    tab = betti_cache(cx, field)
    values = {}
    for R in submasks(cx.ground):
        v = tab.restriction(R).get(p - 1)
        if v:
            values[R] = v
    return HilbertTable(cx.n, p, values)


def single_sheaf_check(cx: Complex, field: FieldSpec = QQ) -> bool:
    """Whether 'at most one nonzero cohomology sheaf, sitting at position c'
    is equivalent to the complex being CLeray.  Expected to hold always."""
    profile = cohomology_profile(cx, field)
    positions = profile.sheaf_positions()
    c = cx.invariants().c
    concentrated = len(positions) <= 1 and (not positions or positions[0] == c)
    return concentrated == is_cleray(cx, field).member


def gorenstein_ideal_check(cx: Complex, field: FieldSpec = QQ) -> bool:
    """Hilbert-level consequence of identifying the dual's sheaf with the
    ideal sheaf of its face ring.

    For a Gorenstein* complex: over every nonempty R, the dual's restriction
    has top frame homology of dimension one exactly when R is a non-face of
    the dual (the squarefree degrees of the face ideal); and the complements
    of the facets are exactly the minimal non-faces of the dual (the ideal's
    generators).
    """
    gs = is_gorenstein_star(cx, field)
    if not gs.member:
        raise PreconditionError(
            f"gorenstein_ideal_check needs a Gorenstein* complex; witness {gs.witness}")
    dual = cx.alexander_dual()
    c_star = dual.invariants().c
    tab = betti_cache(dual, field)
    for R in submasks(cx.ground):
        if R == 0:
            continue
        expected = 0 if dual.is_face(R) else 1
        if tab.restriction(R).get(c_star - 1) != expected:
            return False
    generators = set(dual.minimal_nonfaces())
    complements = {cx.ground & ~f for f in cx.facets}
    return generators == complements
