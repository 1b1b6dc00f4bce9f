"""Simplicial complexes on a finite ground set, with bitmask-exact combinatorics.

Faces are integer bitmasks: bit ``i-1`` set means label ``i`` is in the face.
The facet list is authoritative; the face family is materialized on demand.
The void complex (no faces at all) and the irrelevant complex ``{emptyset}``
are distinct first-class values: void has frame number -1 and no dimension,
``{emptyset}`` has frame number 0 and maximal face cardinality 0.

Complexes are immutable after construction.  Derived complexes (links,
restrictions, deletions, duals) and all internal caches are populated
idempotently, so instances are safe to share between concurrent workers.
Derived complexes keep the original vertex labels; ``relabel`` compacts a
ground subset back to ``1..m`` for isomorphism work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ValidationError


def mask_of(labels) -> int:
    """Bitmask of an iterable of positive integer labels."""
    m = 0
    for v in labels:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValidationError(f"vertex labels must be positive integers, got {v!r}")
        m |= 1 << (v - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of labels in a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def bits_of(mask: int):
    """Yield the single-bit masks of ``mask``, lowest first."""
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def submasks(mask: int):
    """Yield every subset of ``mask`` (as masks), ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _maximal(masks) -> tuple[int, ...]:
    """Inclusion-maximal elements of a mask collection, sorted ascending."""
    uniq = sorted(set(masks), key=lambda m: m.bit_count(), reverse=True)
    keep: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class Invariants:
    """The three basic invariants of a complex.

    ``n`` is the ground-set size, ``d`` the maximal face cardinality (``None``
    for the void complex, which has no faces), and ``c`` the largest integer
    such that every ``c``-subset of the ground set is a face (``-1`` for void,
    ``0`` for the irrelevant complex).
    """

    n: int
    d: int | None
    c: int


class Complex:
    """An abstract simplicial complex, stored by its facets."""

    __slots__ = ("ground", "facets", "_faces", "_inv", "_minnf", "_dual",
                 "_sub", "_hom", "_memo")

    def __init__(self, ground: int, facets, trusted: bool = False):
        facets = tuple(facets)
        if not trusted:
            for f in facets:
                if f & ~ground:
                    raise ValidationError(
                        f"facet {labels_of(f)} is not contained in the ground set "
                        f"{labels_of(ground)}")
            facets = _maximal(facets)
        self.ground = ground
        self.facets = facets
        self._faces = None
        self._inv = None
        self._minnf = None
        self._dual = None
        self._sub = {}
        self._hom = {}
        self._memo = {}

    @classmethod
    def from_facets(cls, n: int, facets) -> "Complex":
        """Build a complex on the full ground set ``[n]`` from listed facets.

        Facets may be given as iterables of labels or as bitmasks.
        Non-maximal and duplicate entries are dropped silently.  An empty list
        yields the void complex; ``[set()]`` yields the irrelevant complex.
        """
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"ground-set size must be a positive integer, got {n!r}")
        ground = (1 << n) - 1
        masks = []
        for f in facets:
            m = f if isinstance(f, int) else mask_of(f)
            if m & ~ground:
                raise ValidationError(
                    f"facet {labels_of(m)} uses labels outside 1..{n}")
            masks.append(m)
        return cls(ground, masks)

    # -- basic structure -------------------------------------------------

    @property
    def n(self) -> int:
        return self.ground.bit_count()

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def kind(self) -> str:
        if self.is_void:
            return "void"
        if self.is_irrelevant:
            return "irrelevant"
        return "general"

    def face_mask(self, x) -> int:
        """Coerce a face given as mask or label-iterable, checked against ground."""
        m = x if isinstance(x, int) else mask_of(x)
        if m & ~self.ground:
            raise ValidationError(
                f"{labels_of(m)} is not a subset of the ground set {labels_of(self.ground)}")
        return m

    def faces(self) -> frozenset[int]:
        """The full downward-closed face family, as masks (cached)."""
        if self._faces is None:
            out: set[int] = set()
            stack = list(self.facets)
            while stack:
                m = stack.pop()
                if m in out:
                    continue
                out.add(m)
                for b in bits_of(m):
                    sub = m ^ b
                    if sub not in out:
                        stack.append(sub)
            self._faces = frozenset(out)
        return self._faces

    def is_face(self, x) -> bool:
        m = self.face_mask(x)
        return any(m & ~f == 0 for f in self.facets)

    def facet_labels(self) -> list[tuple[int, ...]]:
        return [labels_of(f) for f in self.facets]

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Inclusion-minimal subsets of the ground set that are not faces."""
        if self._minnf is None:
            glabels = labels_of(self.ground)
            out = []
            for k in range(len(glabels) + 1):
                for comb in itertools.combinations(glabels, k):
                    m = mask_of(comb)
                    if self.is_face(m):
                        continue
                    if all(self.is_face(m ^ b) for b in bits_of(m)):
                        out.append(m)
            self._minnf = tuple(out)
        return self._minnf

    def invariants(self) -> Invariants:
        """(n, d, c); see :class:`Invariants` for the conventions."""
        if self._inv is None:
            n = self.n
            if self.is_void:
                self._inv = Invariants(n, None, -1)
            else:
                d = max(f.bit_count() for f in self.facets)
                mnf = self.minimal_nonfaces()
                c = min((m.bit_count() for m in mnf), default=n + 1) - 1
                self._inv = Invariants(n, d, min(c, n))
        return self._inv

    @property
    def is_skeleton_family(self) -> bool:
        """True for the void complex and every skeleton of the full simplex.

        A non-void complex is a skeleton of the simplex on its ground set
        exactly when d == c (all c-sets are faces and nothing larger exists).
        """
        inv = self.invariants()
        return self.is_void or inv.d == inv.c

    @property
    def is_pure(self) -> bool:
        """Non-void with all facets of equal cardinality."""
        if self.is_void:
            return False
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) == 1

    # -- duality and relative complexes ----------------------------------

    def alexander_dual(self) -> "Complex":
        """The complex of all F whose complement (within ground) is a non-face."""
        if self._dual is None:
            g = self.ground
            facets = tuple(sorted(g & ~m for m in self.minimal_nonfaces()))
            self._dual = Complex(g, facets, trusted=True)
        return self._dual

    def rel_complex(self, R, S=0, T=None) -> "Complex":
        """The complex {F subseteq R : F union S is a face}, on ground ``R``.

        ``R``, ``S`` and the implied ``T`` must partition the ground set.
        The result is void iff ``S`` is not a face.
        """
        R = self.face_mask(R)
        S = self.face_mask(S)
        expected_T = self.ground & ~R & ~S
        if R & S:
            raise ValidationError("R and S must be disjoint")
        if T is not None:
            T = self.face_mask(T)
            if T != expected_T:
                raise ValidationError(
                    f"R, S, T do not partition the ground set: T should be "
                    f"{labels_of(expected_T)}, got {labels_of(T)}")
        if R == self.ground and S == 0:
            return self
        key = (R, S)
        hit = self._sub.get(key)
        if hit is None:
            cands = [f & R for f in self.facets if not (S & ~f)]
            hit = Complex(R, _maximal(cands), trusted=True)
            self._sub[key] = hit
        return hit

    def link(self, S) -> "Complex":
        S = self.face_mask(S)
        return self.rel_complex(self.ground & ~S, S)

    def restriction(self, R) -> "Complex":
        return self.rel_complex(self.face_mask(R), 0)

    def deletion(self, R) -> "Complex":
        return self.restriction(self.ground & ~self.face_mask(R))

    # -- constructions ----------------------------------------------------

    def relabel(self) -> "Complex":
        """The same complex with its ground compacted to ``1..m``, order kept."""
        old = labels_of(self.ground)
        pos = {1 << (v - 1): 1 << i for i, v in enumerate(old)}
        def remap(m):
            out = 0
            for b in bits_of(m):
                out |= pos[b]
            return out
        ground = (1 << len(old)) - 1
        return Complex(ground, tuple(sorted(remap(f) for f in self.facets)), trusted=True)

    def join(self, other: "Complex") -> "Complex":
        """Join of two complexes; both factors are relabeled onto fresh labels."""
        a = self.relabel()
        b = other.relabel()
        shift = a.n
        ground = (1 << (a.n + b.n)) - 1
        facets = tuple(sorted(fa | (fb << shift) for fa in a.facets for fb in b.facets))
        return Complex(ground, facets, trusted=True)

    def skeleton(self, k: int) -> "Complex":
        """Faces of cardinality at most ``k + 1``; ``k = -1`` keeps only the empty face."""
        if k < -1:
            raise ValidationError(f"skeleton index must be >= -1, got {k}")
        cands = []
        for f in self.facets:
            if f.bit_count() <= k + 1:
                cands.append(f)
            else:
                for comb in itertools.combinations(labels_of(f), k + 1):
                    cands.append(mask_of(comb))
        return Complex(self.ground, _maximal(cands), trusted=True)

    def point_suspension(self, m: int) -> "Complex":
        """Join with a complex of ``m`` isolated vertices."""
        if m < 1:
            raise ValidationError(f"point suspension needs m >= 1, got {m}")
        pts = Complex((1 << m) - 1, tuple(1 << i for i in range(m)), trusted=True)
        return self.join(pts)

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Complex)
                and self.ground == other.ground and self.facets == other.facets)

    def __hash__(self):
        return hash((self.ground, self.facets))

    def __repr__(self):
        if self.is_void:
            return f"Complex(void on {labels_of(self.ground)})"
        if self.is_irrelevant:
            return f"Complex({{()}} on {labels_of(self.ground)})"
        fac = ",".join("".join(map(str, labels_of(f))) if self.n < 10
                       else str(labels_of(f)) for f in self.facets)
        return f"Complex(n={self.n}, facets=[{fac}])"


def from_facets(n: int, facets) -> Complex:
    return Complex.from_facets(n, facets)


def verify_dual_identity(cx: Complex, R, S=0, T=None) -> bool:
    """Whether dualizing commutes with the relative-complex construction.

    Compares the dual of ``cx.rel_complex(R, S, T)`` (taken on ground ``R``)
    with ``cx.alexander_dual().rel_complex(R, T, S)``; the roles of S and T
    swap on the dual side.  This must hold for every partition.
    """
    R = cx.face_mask(R)
    S = cx.face_mask(S)
    T = cx.ground & ~R & ~S if T is None else cx.face_mask(T)
    lhs = cx.rel_complex(R, S, T).alexander_dual()
    rhs = cx.alexander_dual().rel_complex(R, T, S)
    return lhs == rhs


def are_isomorphic(a: Complex, b: Complex) -> bool:
    """Brute-force isomorphism test (intended for small ground sets)."""
    if a.n != b.n:
        return False
    a = a.relabel()
    b = b.relabel()
    if sorted(f.bit_count() for f in a.facets) != sorted(f.bit_count() for f in b.facets):
        return False

    def signature(cx):
        sig = {}
        for v in range(cx.n):
            bit = 1 << v
            sig[v] = tuple(sorted(f.bit_count() for f in cx.facets if f & bit))
        return sig

    siga, sigb = signature(a), signature(b)
    if sorted(siga.values()) != sorted(sigb.values()):
        return False
    bfacets = set(b.facets)
    verts_a = list(range(a.n))
    # backtracking over signature-compatible assignments
    def extend(i, used, perm):
        if i == len(verts_a):
            mapped = set()
            for f in a.facets:
                m = 0
                for v in range(a.n):
                    if f & (1 << v):
                        m |= 1 << perm[v]
                mapped.add(m)
            return mapped == bfacets
        va = verts_a[i]
        for vb in range(b.n):
            if vb in used or sigb[vb] != siga[va]:
                continue
            perm[va] = vb
            if extend(i + 1, used | {vb}, perm):
                return True
        return False

    return extend(0, frozenset(), {})
