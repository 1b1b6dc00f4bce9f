"""Deterministic generators for the named families plus seeded random corpora.

Random generators are pure functions of their seed.  The random model marks
every candidate facet independently and then takes the downward closure, so
it is reproducible but not uniform over complexes; it is meant for property
suites, not for counting.
"""

from __future__ import annotations

import itertools
import math
import random

from .complexes import Complex, from_facets, mask_of
from .errors import ValidationError
from .hierarchy import is_steiner


def simplex_skeleton(n: int, k: int) -> Complex:
    """All faces of cardinality <= k+1 of the simplex on [n]; k = -1 gives
    the irrelevant complex."""
    if not -1 <= k <= n - 1:
        raise ValidationError(f"skeleton index must be in -1..{n - 1}, got {k}")
    if k == -1:
        return Complex((1 << n) - 1, (0,), trusted=True)
    facets = [mask_of(c) for c in itertools.combinations(range(1, n + 1), k + 1)]
    return Complex((1 << n) - 1, tuple(sorted(facets)), trusted=True)


def full_simplex(n: int) -> Complex:
    return simplex_skeleton(n, n - 1)


def void_complex(n: int) -> Complex:
    return Complex((1 << n) - 1, (), trusted=True)


def irrelevant_complex(n: int) -> Complex:
    return simplex_skeleton(n, -1)


def _gale_even(facet: tuple[int, ...], n: int) -> bool:
    inside = set(facet)
    outside = [v for v in range(1, n + 1) if v not in inside]
    for i, j in itertools.combinations(outside, 2):
        if sum(1 for v in facet if i < v < j) % 2:
            return False
    return True


def cyclic_polytope_boundary(n: int, delta: int) -> Complex:
    """Boundary complex of the cyclic polytope with n vertices and dimension
    delta: facets are the delta-subsets satisfying the evenness condition
    (between any two non-members lies an even number of members)."""
    if delta < 2 or n < delta + 2:
        raise ValidationError(f"need n >= delta + 2 >= 4, got n={n}, delta={delta}")
    facets = [mask_of(f) for f in itertools.combinations(range(1, n + 1), delta)
              if _gale_even(f, n)]
    return Complex((1 << n) - 1, tuple(sorted(facets)), trusted=True)


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_plane() -> Complex:
    """The seven lines of the Fano plane as facets on [7]."""
    return from_facets(7, FANO_LINES)


def steiner_from_blocks(n: int, blocks) -> Complex:
    """Validate a block system and return its complex.

    Blocks must all have the same cardinality and every c-subset (c inferred
    as the frame number of the complex) must lie in exactly one block.
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    if not blocks:
        raise ValidationError("a block system needs at least one block")
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise ValidationError(f"blocks must share one cardinality, got sizes {sorted(sizes)}")
    cx = from_facets(n, blocks)
    if len(cx.facets) != len(set(blocks)):
        raise ValidationError("blocks must be pairwise incomparable")
    params = is_steiner(cx)
    if params is None:
        raise ValidationError(
            f"not a block design: some {cx.invariants().c}-subset lies in more "
            f"than one block")
    return cx


def cross_polytope(m: int) -> Complex:
    """Boundary of the m-dimensional cross-polytope on [2m]: one vertex from
    each antipodal pair {i, i+m}."""
    if m < 1:
        raise ValidationError(f"need m >= 1, got {m}")
    facets = []
    for choice in itertools.product((0, 1), repeat=m):
        facets.append(mask_of(i + 1 + m * b for i, b in enumerate(choice)))
    return Complex((1 << (2 * m)) - 1, tuple(sorted(facets)), trusted=True)


def octahedron() -> Complex:
    return cross_polytope(3)


def cycle_graph(n: int) -> Complex:
    if n < 3:
        raise ValidationError(f"a cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return from_facets(n, edges)


def path_graph(n: int) -> Complex:
    if n < 1:
        raise ValidationError(f"a path needs n >= 1, got {n}")
    if n == 1:
        return from_facets(1, [(1,)])
    return from_facets(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Complex:
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if n == 1:
        return from_facets(1, [(1,)])
    return from_facets(n, itertools.combinations(range(1, n + 1), 2))


def random_complex(n: int, density: float, seed: int) -> Complex:
    """Each nonempty subset of [n] is marked as a candidate facet with the
    given probability; the complex is the closure of the marked sets."""
    if not 1 <= n <= 16:
        raise ValidationError(f"random complexes support 1 <= n <= 16, got {n}")
    rng = random.Random(seed * 1_000_003 + n)
    masks = [m for m in range(1, 1 << n) if rng.random() < density]
    return Complex((1 << n) - 1, masks)


def random_pure_complex(n: int, d: int, count: int, seed: int) -> Complex:
    """A complex generated by ``count`` distinct random d-subsets of [n]."""
    if not 1 <= d <= n:
        raise ValidationError(f"need 1 <= d <= n, got d={d}, n={n}")
    avail = list(itertools.combinations(range(1, n + 1), d))
    if not 1 <= count <= len(avail):
        raise ValidationError(f"count must be in 1..{len(avail)}, got {count}")
    rng = random.Random(seed * 1_000_003 + 17 * n + d)
    return from_facets(n, rng.sample(avail, count))


def random_forest(n: int, seed: int) -> Complex:
    """A random forest on [n] with every vertex present and at least one edge."""
    if n < 2:
        raise ValidationError(f"a forest with an edge needs n >= 2, got {n}")
    rng = random.Random(seed * 1_000_003 + 31 * n)
    # random tree via a growth process, then thinned
    edges = []
    for v in range(2, n + 1):
        edges.append((rng.randrange(1, v), v))
    kept = [e for e in edges if rng.random() > 0.35]
    if not kept:
        kept = [edges[0]]
    isolated = [v for v in range(1, n + 1) if all(v not in e for e in kept)]
    return from_facets(n, kept + [(v,) for v in isolated])


def exhaustive_complexes(n: int):
    """Every complex on [n] exactly once (facet families are the antichains
    of subsets, so this includes the void and irrelevant complexes)."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    full = (1 << n) - 1
    chosen: list[int] = []

    def rec(start: int):
        yield Complex(full, tuple(chosen), trusted=True)
        for m in range(start, full + 1):
            ok = True
            for c in chosen:
                inter = c & m
                if inter == c or inter == m:
                    ok = False
                    break
            if ok:
                chosen.append(m)
                yield from rec(m + 1)
                chosen.pop()

    yield from rec(0)


def random_corpus(n: int, count: int, seed: int) -> list[Complex]:
    """A deterministic mixed bag of random complexes for property suites."""
    out = []
    for i in range(count):
        s = seed * 7_368_787 + i
        if i % 3 == 0:
            out.append(random_complex(n, 0.2 + 0.12 * (i % 5), s))
        else:
            d = 2 + i % max(1, n - 2)
            top = math.comb(n, d)
            out.append(random_pure_complex(n, d, 1 + (i * 7) % top, s))
    return out
