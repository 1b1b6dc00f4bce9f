"""Exact reduced simplicial homology over Q or F_p.

Dimensions are computed from boundary-matrix ranks: fraction-free (Bareiss)
integer elimination in characteristic 0, ordinary elimination mod p
otherwise.  The boundary of a face deletes its i-th smallest vertex with
sign (-1)^i, so matrices are reproducible byte for byte.

Homology of every relative complex of a given complex is memoized in a
single per-complex table keyed by (R, S); classifiers never recompute the
same restriction twice.  Tables are write-once-per-key caches with
idempotent fill.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .complexes import Complex, bits_of, labels_of, submasks
from .errors import CapacityError, ValidationError

DEFAULT_ENUMERATION_BOUND = 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValidationError(f"field characteristic must be 0 or prime, got {c}")


QQ = FieldSpec(0)


def _rank_bareiss(rows: list[list[int]]) -> int:
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot_row = m[rank]
        pv = pivot_row[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col, ncols):
                row[j] = (pv * row[j] - f * pivot_row[j]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_modp(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        pivot_row = [(x * inv) % p for x in m[rank]]
        m[rank] = pivot_row
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                row = m[i]
                for j in range(col, ncols):
                    row[j] = (row[j] - f * pivot_row[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows: list[list[int]], field: FieldSpec = QQ) -> int:
    if not rows or not rows[0]:
        return 0
    if field.characteristic == 0:
        return _rank_bareiss(rows)
    return _rank_modp(rows, field.characteristic)


class BettiTable:
    """Reduced homology dimensions h~_p of one complex, sparse over p."""

    __slots__ = ("characteristic", "_dims")

    def __init__(self, characteristic: int, dims: dict[int, int]):
        self.characteristic = characteristic
        self._dims = {p: v for p, v in dims.items() if v}

    def get(self, p: int) -> int:
        return self._dims.get(p, 0)

    def nonzero(self) -> list[tuple[int, int]]:
        return sorted(self._dims.items())

    def total(self) -> int:
        return sum(self._dims.values())

    def euler(self) -> int:
        """Alternating sum over p >= -1 of (-1)^p h~_p (reduced Euler characteristic)."""
        return sum((-1) ** p * v for p, v in self._dims.items())

    def window(self, d: int | None) -> dict[int, int]:
        """Dense map p -> h~_p for p in -1..d-1 (for reports)."""
        if d is None:
            return {}
        return {p: self.get(p) for p in range(-1, d)}

    def __eq__(self, other):
        return (isinstance(other, BettiTable)
                and self.characteristic == other.characteristic
                and self._dims == other._dims)

    def __hash__(self):
        return hash((self.characteristic, tuple(sorted(self._dims.items()))))

    def __repr__(self):
        return f"BettiTable(char={self.characteristic}, {self._dims})"


def _boundary_rows(lower: list[int], upper: list[int], weights=None) -> list[list[int]]:
    col = {m: j for j, m in enumerate(lower)}
    rows = []
    width = len(lower)
    for m in upper:
        row = [0] * width
        sign = 1
        for b in bits_of(m):
            w = 1 if weights is None else weights.get(b, 0)
            if w:
                row[col[m ^ b]] = sign * w
            sign = -sign
        rows.append(row)
    return rows


def _betti_dims(faces, field: FieldSpec, weights=None) -> dict[int, int]:
    """h~ dimensions of a closed face family; weighted variant for point fibers."""
    if not faces:
        return {}
    by_card: dict[int, list[int]] = defaultdict(list)
    for m in faces:
        by_card[m.bit_count()].append(m)
    dmax = max(by_card)
    ranks = {}
    for r in range(1, dmax + 1):
        lower = sorted(by_card.get(r - 1, ()))
        upper = sorted(by_card.get(r, ()))
        ranks[r] = matrix_rank(_boundary_rows(lower, upper, weights), field)
    dims = {}
    for p in range(-1, dmax):
        r = p + 1
        h = len(by_card.get(r, ())) - ranks.get(r, 0) - ranks.get(r + 1, 0)
        if h:
            dims[p] = h
    return dims


class SubsetHomologyTable:
    """Memoized reduced homology of every relative complex of one complex.

    Entries are keyed by the pair ``(R, S)`` of disjoint ground subsets; the
    third block T of the partition carries no face information.  The
    restriction to R is the entry ``(R, 0)`` and the link of S the entry
    ``(ground & ~S, S)``.
    """

    def __init__(self, cx: Complex, field: FieldSpec):
        self.cx = cx
        self.field = field
        self._cache: dict[tuple[int, int], BettiTable] = {}
        self._parent_faces = cx.faces()

    def rel(self, R: int, S: int = 0) -> BettiTable:
        key = (R, S)
        hit = self._cache.get(key)
        if hit is None:
            if S and S not in self._parent_faces:
                faces = ()
            elif R == self.cx.ground and S == 0:
                faces = self._parent_faces
            else:
                pf = self._parent_faces
                faces = [sub for sub in submasks(R) if (sub | S) in pf]
            hit = BettiTable(self.field.characteristic, _betti_dims(faces, self.field))
            self._cache[key] = hit
        return hit

    def restriction(self, R: int) -> BettiTable:
        return self.rel(R, 0)

    def link(self, S: int) -> BettiTable:
        return self.rel(self.cx.ground & ~S, S)

    def fill_restrictions(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> None:
        n = self.cx.n
        if n > bound:
            raise CapacityError(
                f"restriction table over 2^{n} subsets exceeds the bound {bound}; "
                f"use per-query mode (rel/restriction/link) instead")
        for R in submasks(self.cx.ground):
            self.restriction(R)

    def items(self):
        return self._cache.items()


def betti_cache(cx: Complex, field: FieldSpec = QQ) -> SubsetHomologyTable:
    """The per-complex homology table (created on first use, then shared)."""
    tab = cx._hom.get(field.characteristic)
    if tab is None:
        tab = cx._hom[field.characteristic] = SubsetHomologyTable(cx, field)
    return tab


def reduced_betti(cx: Complex, field: FieldSpec = QQ) -> BettiTable:
    """Reduced homology dimensions of the complex (void gives the zero table)."""
    return betti_cache(cx, field).restriction(cx.ground)


def rel_betti(cx: Complex, R, S=0, T=None, field: FieldSpec = QQ) -> BettiTable:
    """Reduced homology of the relative complex on partition (R, S, T)."""
    R = cx.face_mask(R)
    S = cx.face_mask(S)
    cx.rel_complex(R, S, T)  # partition validation
    return betti_cache(cx, field).rel(R, S)


def subset_homology_table(cx: Complex, field: FieldSpec = QQ,
                          bound: int = DEFAULT_ENUMERATION_BOUND) -> SubsetHomologyTable:
    """Eagerly computed table of all 2^n restriction homologies."""
    tab = betti_cache(cx, field)
    tab.fill_restrictions(bound)
    return tab


def dual_homology_check(cx: Complex, field: FieldSpec = QQ) -> bool:
    """Whether h~_{n-3-p} of the dual equals h~_p of the complex for all p."""
    n = cx.n
    b = reduced_betti(cx, field)
    bd = reduced_betti(cx.alexander_dual(), field)
    return all(bd.get(n - 3 - p) == b.get(p) for p in range(-1, n + 1))


class ChainComplex:
    """The reduced chain complex of a complex over a field.

    The basis in degree p is the set of (p+1)-faces; degree -1 is spanned by
    the empty face for non-void complexes.
    """

    def __init__(self, cx: Complex, field: FieldSpec = QQ):
        self.cx = cx
        self.field = field
        by_card: dict[int, list[int]] = defaultdict(list)
        for m in cx.faces():
            by_card[m.bit_count()].append(m)
        self.basis = {r: sorted(v) for r, v in by_card.items()}

    def degrees(self):
        return sorted(r - 1 for r in self.basis)

    def boundary(self, p: int) -> list[list[int]]:
        """Matrix of the boundary from degree p to degree p-1 (rows = p-faces)."""
        upper = self.basis.get(p + 1, [])
        lower = self.basis.get(p, [])
        return _boundary_rows(lower, upper)

    def dd_is_zero(self) -> bool:
        for r in sorted(self.basis):
            if r < 2:
                continue
            b2 = self.boundary(r - 1)
            b1 = self.boundary(r - 2)
            if not b2 or not b1 or not b1[0]:
                continue
            for row in b2:
                acc = [0] * len(b1[0])
                for j, x in enumerate(row):
                    if x:
                        for k, y in enumerate(b1[j]):
                            acc[k] += x * y
                if any(acc):
                    return False
        return True


def chain_complex(cx: Complex, field: FieldSpec = QQ) -> ChainComplex:
    return ChainComplex(cx, field)


def weighted_point_cohomology(cx: Complex, weights: dict[int, int],
                              field: FieldSpec = QQ) -> dict[int, int]:
    """Cohomology dimensions of the face module contracted at an explicit point.

    ``weights`` maps single-bit masks to integer coordinates (absent labels
    count as zero).  The returned map sends p to the dimension at the basis
    of p-element faces, so with all weights equal to one the entry at p is
    h~_{p-1} of the complex.  This is the independent chain-level oracle for
    the fiber-dimension formula in :mod:`cmhier.bgg`.
    """
    faces = cx.faces()
    if not faces:
        return {}
    wt = {}
    for b, v in weights.items():
        if not isinstance(b, int) or b.bit_count() != 1:
            raise ValidationError("weights must be keyed by single-bit masks")
        wt[b] = v
    dims = _betti_dims(faces, field, weights=wt)
    return {p + 1: v for p, v in dims.items() if v}
