"""Exact arithmetic of the rational affine group and its gapped submonoid.

The ambient group consists of the affine bijections q |-> r + x*q of the
rationals with positive rational scale, multiplied by composition:

    (r, x) * (s, y) = (r + x*s, x*y),        (r, x)^-1 = (-r/x, 1/x).

Inside it sits the monoid of maps n |-> m + a*n with integer scale a >= 1
and shift m taken from the numerical semigroup {0, 2, 3, 4, ...} (every
non-negative integer except 1).  The monoid induces a left-invariant
partial order on the group; two monoid elements may admit common upper
bounds without admitting a least one, so the "least" common upper bound
is replaced here by the one with scale lcm(a, b) and the smallest
admissible shift.  Computing that shift is a linear Diophantine problem
over the gapped semigroup, solved exactly via the extended Euclidean
algorithm and cross-checked by brute-force enumeration oracles.

Everything in this module is immutable and pure; all arithmetic is exact
(Python big integers and fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


def p_contains(m: int) -> bool:
    """Membership in the gapped additive semigroup {0, 2, 3, 4, ...}."""
    return m >= 0 and m != 1


@dataclass(frozen=True)
class RationalAffine:
    """An element (shift, scale) of the rational affine group, scale > 0."""

    shift: Fraction
    scale: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift", Fraction(self.shift))
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    def __repr__(self) -> str:
        return f"({self.shift},{self.scale})"


@dataclass(frozen=True, order=True)
class MonoidElement:
    """A monoid point (shift, scale): shift in {0,2,3,...}, scale >= 1.

    Shift 1 is rejected at construction rather than coerced; the gap at 1
    is what makes the order theory of this monoid non-trivial.
    """

    shift: int
    scale: int

    def __post_init__(self) -> None:
        if not p_contains(self.shift):
            raise ValueError(f"shift must lie in {{0,2,3,...}}, got {self.shift}")
        if self.scale < 1:
            raise ValueError(f"scale must be a positive integer, got {self.scale}")

    def as_affine(self) -> RationalAffine:
        return RationalAffine(Fraction(self.shift), Fraction(self.scale))

    def __repr__(self) -> str:
        return f"({self.shift},{self.scale})"


MONOID_ONE = MonoidElement(0, 1)

Element = RationalAffine | MonoidElement


def compose(g: Element, h: Element):
    """Group law (r,x)(s,y) = (r + x*s, x*y); closed on monoid elements."""
    if isinstance(g, MonoidElement) and isinstance(h, MonoidElement):
        return MonoidElement(g.shift + g.scale * h.shift, g.scale * h.scale)
    ga, ha = _affine(g), _affine(h)
    return RationalAffine(ga.shift + ga.scale * ha.shift, ga.scale * ha.scale)


def invert(g: Element) -> RationalAffine:
    """Group inverse (r,x)^-1 = (-r/x, 1/x)."""
    ga = _affine(g)
    return RationalAffine(-ga.shift / ga.scale, 1 / ga.scale)


def leq(g: Element, h: Element) -> bool:
    """Left-invariant order: g <= h iff g^-1 h lies in the monoid.

    Concretely (s - r)/x must lie in {0,2,3,...} and y/x must be a
    positive integer.
    """
    ga, ha = _affine(g), _affine(h)
    step = (ha.shift - ga.shift) / ga.scale
    ratio = ha.scale / ga.scale
    return (
        step.denominator == 1
        and p_contains(step.numerator)
        and ratio.denominator == 1
        and ratio.numerator >= 1
    )


def _affine(g: Element) -> RationalAffine:
    return g.as_affine() if isinstance(g, MonoidElement) else g


def has_common_upper(u: MonoidElement, v: MonoidElement) -> bool:
    """True iff u and v admit a common upper bound in the monoid.

    Equivalent to gcd(a, b) dividing the difference of the shifts: the
    shift progressions m + a*{0,2,3,...} and n + b*{0,2,3,...} intersect
    exactly when the full arithmetic progressions do.
    """
    return (u.shift - v.shift) % gcd(u.scale, v.scale) == 0


def smallest_solution(k: int, a1: int, b1: int) -> tuple[int, int]:
    """Smallest pair in {0,2,3,...}^2 solving k = alpha*a1 - beta*b1.

    Requires gcd(a1, b1) = 1.  The solution family is
    alpha = alpha0 + j*b1, beta = beta0 + j*a1; both entries grow with j,
    so the minimal admissible j minimises alpha and beta simultaneously
    (and hence the common value m + a*alpha of the two progressions).
    Entries equal to 1 are skipped: 1 is not in the semigroup.
    """
    if gcd(a1, b1) != 1:
        raise ValueError(f"expected coprime steps, got gcd({a1},{b1}) != 1")
    u, v = _bezout(a1, b1)
    alpha0, beta0 = k * u, -k * v
    # -(x // y) == ceil(-x / y) for y > 0: least j with both entries >= 0
    j = max(-(alpha0 // b1), -(beta0 // a1))
    while alpha0 + j * b1 == 1 or beta0 + j * a1 == 1:
        j += 1
    return alpha0 + j * b1, beta0 + j * a1


def _bezout(a: int, b: int) -> tuple[int, int]:
    """Coefficients (u, v) with u*a + v*b = gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_u, old_v


@dataclass(frozen=True)
class CommonUpperBound:
    """The common upper bound of (m,a),(n,b) with scale lcm(a,b) and least shift.

    left_steps/right_steps are the Diophantine pair (number of a-steps
    from m, resp. b-steps from n, up to the common shift), and
    left_quot/right_quot are the corresponding monoid quotients, so that

        u * left_quot == bound == v * right_quot.
    """

    bound: MonoidElement
    left_steps: int
    right_steps: int
    left_quot: MonoidElement
    right_quot: MonoidElement


def cup(u: MonoidElement, v: MonoidElement) -> CommonUpperBound | None:
    """Common upper bound with minimal shift, or None when there is none.

    None encodes the "infinite" outcome: the shift progressions of u and v
    are disjoint.  Otherwise the bound is (l, lcm(a,b)) where l is the
    smallest element of (m + a*{0,2,3,..}) intersect (n + b*{0,2,3,..});
    tests validate l against the brute-force enumeration oracle.
    """
    m, a, n, b = u.shift, u.scale, v.shift, v.scale
    g = gcd(a, b)
    if (m - n) % g:
        return None
    a1, b1 = a // g, b // g
    alpha, beta = smallest_solution((n - m) // g, a1, b1)
    shift = m + a * alpha
    assert shift == n + b * beta
    return CommonUpperBound(
        bound=MonoidElement(shift, lcm(a, b)),
        left_steps=alpha,
        right_steps=beta,
        left_quot=MonoidElement(alpha, b1),
        right_quot=MonoidElement(beta, a1),
    )


def shift_progression(e: MonoidElement, bound: int) -> set[int]:
    """The set {m + a*p : p in {0,2,3,...}} truncated to [0, bound]."""
    values = set(range(e.shift, bound + 1, e.scale))
    values.discard(e.shift + e.scale)
    return values


def min_intersection_bruteforce(
    u: MonoidElement, v: MonoidElement, bound: int
) -> int | None:
    """Minimum of the two shift progressions' intersection below bound.

    Enumeration-only oracle for cup(); no Diophantine shortcuts.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    common = shift_progression(u, bound) & shift_progression(v, bound)
    return min(common) if common else None


@dataclass(frozen=True)
class MinimalUpperBounds:
    """Minimal common upper bounds found inside the search box [0,bound]^2.

    Minimality is relative to the enumerated set; the bound is carried
    along so callers can recognise truncation artifacts.
    """

    bound: int
    elements: tuple[MonoidElement, ...]


def minimal_common_upper_bounds(
    u: MonoidElement, v: MonoidElement, bound: int
) -> MinimalUpperBounds:
    """All minimal common upper bounds (k,c) with k, c <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    uppers = [
        w
        for k in range(bound + 1)
        if p_contains(k)
        for c in range(1, bound + 1)
        if leq(u, w := MonoidElement(k, c)) and leq(v, w)
    ]
    # scanning in (scale, shift) order guarantees dominators are seen first
    uppers.sort(key=lambda w: (w.scale, w.shift))
    minimal: list[MonoidElement] = []
    for w in uppers:
        if not any(leq(m, w) for m in minimal):
            minimal.append(w)
    return MinimalUpperBounds(bound=bound, elements=tuple(sorted(minimal)))


def decompose_p(m: int) -> tuple[int, int]:
    """Canonical (x, y) with m = 2x + 3y and y in {0, 1}."""
    if not p_contains(m):
        raise ValueError(f"{m} is not in {{0,2,3,...}}")
    if m % 2 == 0:
        return m // 2, 0
    return (m - 3) // 2, 1
