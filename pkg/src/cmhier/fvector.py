"""f-polynomials, h-vectors, closed-form face-count formulas and design checks.

The f-polynomial of a complex is sum_i f_{i-1} t^i where f_{i-1} counts the
faces of cardinality i; the constant term is 1 for every non-void complex.
The closed family formulas are integer-exact: the level-a polynomial is
produced by formal antidifferentiation, and a non-integer coefficient is an
invariant violation (no complex with those parameters exists), except in the
known degenerate regime which is flagged with a warning instead.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .complexes import Complex
from .errors import InternalCheckError, PreconditionError, ValidationError
from .homology import QQ, FieldSpec


@dataclass(frozen=True)
class FPolynomial:
    """coeffs[i] is the number of faces of cardinality i (f_{i-1})."""

    coeffs: tuple

    @staticmethod
    def of(values) -> "FPolynomial":
        vals = [Fraction(v) for v in values]
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        return FPolynomial(tuple(int(v) if v.denominator == 1 else v for v in vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)

    @property
    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in self.coeffs)

    def __call__(self, t):
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * t + v
        return acc

    def __mul__(self, other: "FPolynomial") -> "FPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return FPolynomial.of(out)

    def derivative(self) -> "FPolynomial":
        return FPolynomial.of([i * v for i, v in enumerate(self.coeffs)][1:] or [0])

    def antiderivative(self, scale=1, constant=1) -> "FPolynomial":
        """constant + scale * integral of self."""
        out = [Fraction(constant)]
        for i, v in enumerate(self.coeffs):
            out.append(Fraction(scale) * Fraction(v) / (i + 1))
        return FPolynomial.of(out)

    def __str__(self):
        terms = []
        for i, v in enumerate(self.coeffs):
            if v == 0 and not (i == 0 and len(self.coeffs) == 1):
                continue
            if i == 0:
                terms.append(str(v))
            elif i == 1:
                terms.append(f"{v}t" if v != 1 else "t")
            else:
                terms.append(f"{v}t^{i}" if v != 1 else f"t^{i}")
        return " + ".join(terms) if terms else "0"


def f_polynomial(cx: Complex) -> FPolynomial:
    """Exact face counts by cardinality; the void complex gives 0."""
    if cx.is_void:
        return FPolynomial.of([0])
    counts: dict[int, int] = {}
    for m in cx.faces():
        k = m.bit_count()
        counts[k] = counts.get(k, 0) + 1
    top = max(counts)
    return FPolynomial.of([counts.get(i, 0) for i in range(top + 1)])


def f0_formula(n: int, d: int, c: int) -> FPolynomial:
    """Face-count polynomial shared by all doubly Cohen-Macaulay complexes
    with invariants (n, d, c): (1+t)^(d-c) * sum_{i<=c} C(n-d+c, i) t^i."""
    if not 0 <= c <= d <= n:
        raise ValidationError(f"need 0 <= c <= d <= n, got ({n}, {d}, {c})")
    binom = FPolynomial.of([math.comb(n - d + c, i) for i in range(c + 1)])
    power = FPolynomial.of([1])
    onet = FPolynomial.of([1, 1])
    for _ in range(d - c):
        power = power * onet
    return power * binom


def fa_formula(a: int, n: int, d: int, c: int) -> FPolynomial:
    """Level-a face-count polynomial, defined by the antidifferentiation
    recursion f_a'(n,d,c;t) = n * f_{a-1}(n-1,d-1,c-1;t) with constant term 1
    and base case :func:`f0_formula`.

    A non-integer coefficient normally raises InternalCheckError (no complex
    with these parameters exists).  The one regime the recursion is known to
    leave underdetermined, c = a = 1 with d not dividing n, returns the
    formal fractional polynomial with a warning instead.
    """
    if not 0 <= a <= c <= d <= n:
        raise ValidationError(f"need 0 <= a <= c <= d <= n, got a={a}, ({n}, {d}, {c})")
    poly = f0_formula(n - a, d - a, c - a)
    for k in range(1, a + 1):
        poly = poly.antiderivative(scale=n - a + k, constant=1)
    if not poly.is_integral:
        if c == a and (n - a + 1) % (d - a + 1) != 0:
            warnings.warn(
                f"no complex exists with a={a}, (n,d,c)=({n},{d},{c}): the block size "
                f"{d - a + 1} does not divide {n - a + 1}; returning the formal polynomial",
                stacklevel=2)
            return poly
        raise InternalCheckError(
            f"level-{a} face-count recursion produced non-integer coefficients "
            f"for (n,d,c)=({n},{d},{c}): {poly.coeffs}")
    return poly


def h_from_f(f: FPolynomial, d: int) -> tuple[int, ...]:
    """Standard transform: sum_i f_{i-1}(t-1)^{d-i} = sum_k h_k t^{d-k}."""
    acc = [0] * (d + 1)  # acc[j] = coefficient of t^j
    for i, fv in enumerate(f.coeffs):
        if fv == 0:
            continue
        e = d - i
        for j in range(e + 1):
            acc[j] += fv * math.comb(e, j) * (-1) ** (e - j)
    return tuple(int(acc[d - k]) for k in range(d + 1))


def h_vector(cx: Complex) -> tuple[int, ...]:
    """h-vector (h_0..h_d); empty for the void complex."""
    inv = cx.invariants()
    if inv.d is None:
        return ()
    return h_from_f(f_polynomial(cx), inv.d)


def euler_characteristic(f: FPolynomial):
    """Reduced Euler characteristic sum_{i>=-1} (-1)^i f_i, i.e. -f(-1)."""
    return -f(-1)


def design_lambda(a: int, n: int, d: int, c: int) -> int:
    """Replication number of the block design attached to a level-a member:
    the number of facets in the link of any a-face is C(n-d+c-a, c-a)."""
    if a > c:
        raise ValidationError(f"need a <= c, got a={a}, c={c}")
    return math.comb(n - d + c - a, c - a)


def verify_design(cx: Complex, a: int, field: FieldSpec = QQ) -> bool:
    """Whether the complex is a certified level-a member whose a-face links
    all carry exactly design_lambda facets."""
    from .hierarchy import is_cl_circ

    inv = cx.invariants()
    if inv.d is None:
        return False
    if not is_cl_circ(cx, a, field).member:
        return False
    lam = design_lambda(a, inv.n, inv.d, inv.c)
    for S in cx.faces():
        if S.bit_count() != a:
            continue
        if len(cx.link(S).facets) != lam:
            return False
    return True
