"""Univariate polynomials over an exact field, with root machinery for degree <= 3.

Provides monic gcd, in-field root finding (exhaustive over finite fields,
rational-root search over Q), splitting-field construction by root
adjunction, deterministic square roots in a quadratic extension, and the
characteristic-dependent classifier for the number of distinct roots of a
cubic in a root-closed extension.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .fields import (
    GF,
    DivisionByZero,
    Fel,
    Field,
    FieldError,
    FieldMismatch,
    InfiniteField,
    ParseError,
    embed,
    parse_el,
)


class PolyError(FieldError):
    pass


class RationalSplittingUnsupported(PolyError):
    pass


class ZeroPolynomial(PolyError):
    pass


class RootCount(enum.Enum):
    """How many distinct roots (or lines, ideals, ...) an object has."""

    ZERO = "0"
    ONE = "1"
    TWO = "2"
    THREE = "3"
    INFINITE = "inf"

    @classmethod
    def of(cls, n: int) -> "RootCount":
        return {0: cls.ZERO, 1: cls.ONE, 2: cls.TWO, 3: cls.THREE}[n]

    @property
    def label(self) -> str:
        return self.value


class AllElements:
    """Marker for "every field element is a root" (the zero polynomial)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AllElements"


ALL_ELEMENTS = AllElements()


class Poly:
    """Polynomial with constant-first coefficients, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field: Field, ints) -> "Poly":
        return cls(field, [field.el(c) for c in ints])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def const(cls, c: Fel) -> "Poly":
        return cls(c.field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fel:
        return self.coeffs[i] if i <= self.degree else self.field.zero

    def lead(self) -> Fel:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.field, [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.field, [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c: Fel) -> "Poly":
        return Poly(self.field, [a * c for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.field.zero] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = other.lead().inv()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            coef = rem[-1] * inv_lead
            shift = len(rem) - 1 - d
            q[shift] = coef
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - coef * c
            while rem and rem[-1].is_zero:
                rem.pop()
        return Poly(self.field, q), Poly(self.field, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __call__(self, x: Fel) -> Fel:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.lead().inv())

    def lift(self, dst: Field) -> "Poly":
        """Map coefficients through the fixed embedding into dst."""
        return Poly(dst, [embed(c, dst) for c in self.coeffs])

    def text(self) -> str:
        """Canonical text: comma-separated coefficients, constant first."""
        if self.is_zero:
            return "0"
        return ",".join(c.text() for c in self.coeffs)

    def __repr__(self):
        return f"Poly[{self.text()}]"


def parse_poly(field: Field, text: str) -> Poly:
    parts = [t for t in text.strip().split(",")]
    if not parts or parts == [""]:
        raise ParseError("empty polynomial")
    return Poly(field, [parse_el(field, t) for t in parts])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if f.field != g.field:
        raise FieldMismatch("gcd of polynomials over different fields")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def roots_in_field(f: Poly):
    """All distinct roots in the coefficient field; AllElements for the zero poly.

    Finite fields are scanned exhaustively; over Q the rational-root test is
    applied to the primitive integer form.
    """
    if f.is_zero:
        return ALL_ELEMENTS
    F = f.field
    if F.is_finite:
        return [x for x in F.elements() if f(x).is_zero]
    if f.degree == 0:
        return []
    # over Q: strip powers of y, then rational-root search
    roots = []
    coeffs = list(f.coeffs)
    if coeffs[0].is_zero:
        roots.append(F.zero)
        while coeffs and coeffs[0].is_zero:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots, key=lambda r: r.sort_key())
    fracs = [c.coeffs[0] for c in coeffs]
    denom_lcm = 1
    for fr in fracs:
        denom_lcm = denom_lcm * fr.denominator // _gcd(denom_lcm, fr.denominator)
    ints = [int(fr * denom_lcm) for fr in fracs]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    ints = [v // g for v in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    for pnum in _divisors(a0):
        for qden in _divisors(an):
            for sign in (1, -1):
                cand = F.el(Fraction(sign * pnum, qden))
                if f(cand).is_zero and cand not in roots:
                    roots.append(cand)
    return sorted(roots, key=lambda r: r.sort_key())


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def splitting_field(f: Poly) -> tuple[Field, list[Fel]]:
    """Smallest extension of the owner where f (deg <= 3) splits, with its roots.

    Built by adjoining a root of the unique irreducible cofactor left after
    dividing out all in-field linear factors, then flattening to a single
    extension of the prime field.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no splitting field")
    F = f.field
    if not F.is_finite:
        raise RationalSplittingUnsupported("splitting fields over Q are out of scope")
    if f.degree > 3:
        raise PolyError("splitting fields only built for degree <= 3")
    base_roots = [x for x in F.elements() if f(x).is_zero]
    g = f
    for r in base_roots:
        lin = Poly(F, [-r, F.one])
        while True:
            q, rem = divmod(g, lin)
            if rem.is_zero:
                g = q
            else:
                break
    if g.degree <= 0:
        return F, sorted(base_roots, key=lambda x: x.index())
    # the cofactor has no in-field roots, so for degree <= 3 it is irreducible
    d = g.degree
    ext = GF(F.p, F.k * d)
    lifted = f.lift(ext)
    roots = [x for x in ext.elements() if lifted(x).is_zero]
    return ext, sorted(roots, key=lambda x: x.index())


def joint_quadratic_splitting(field: Field, polys) -> Field:
    """Smallest extension where every given polynomial of degree <= 2 splits."""
    for f in polys:
        if f.degree == 2:
            if not any(f(x).is_zero for x in field.elements()):
                return GF(field.p, field.k * 2)
    return field


_SQRT_CACHE: dict = {}


def sqrt_in_ext(x: Fel) -> tuple[Fel, Field]:
    """Deterministic square root: in the base field when x is a square there,
    otherwise in the quadratic extension.  The lex-smallest root is returned."""
    F = x.field
    if not F.is_finite:
        raise InfiniteField("square roots in an extension need a finite base")
    key = (F, x.coeffs)
    got = _SQRT_CACHE.get(key)
    if got is not None:
        return got
    result = None
    for cand in F.elements():
        if (cand * cand - x).is_zero:
            result = (cand, F)
            break
    if result is None:
        ext = GF(F.p, F.k * 2)
        xe = embed(x, ext)
        for cand in ext.elements():
            if (cand * cand - xe).is_zero:
                result = (cand, ext)
                break
    if result is None:
        raise FieldError("no square root found in the quadratic extension")
    _SQRT_CACHE[key] = result
    return result


def distinct_root_count(f: Poly) -> RootCount:
    """Distinct roots of f (deg <= 3) counted in a root-closed extension.

    Over a finite field the count is the number of in-field roots plus the
    degree of the rootless cofactor: that cofactor is irreducible (degree <= 3
    with no roots), hence separable, and contributes exactly its degree.  The
    equality with a literal splitting-field scan is asserted in the tests.
    Over Q the characteristic-zero classifier supplies the count.
    """
    if f.is_zero:
        return RootCount.INFINITE
    if f.degree > 3:
        raise PolyError("closed root counts stop at degree 3")
    F = f.field
    if F.is_finite:
        base_roots = [x for x in F.elements() if f(x).is_zero]
        g = f
        for r in base_roots:
            lin = Poly(F, [-r, F.one])
            while True:
                q, rem = divmod(g, lin)
                if rem.is_zero:
                    g = q
                else:
                    break
        return RootCount.of(len(base_roots) + max(g.degree, 0))
    return cubic_root_count(f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0))


def cubic_root_count(a: Fel, b: Fel, c: Fel, d: Fel) -> RootCount:
    """Distinct-root count of a*y^3+b*y^2+c*y+d over a root-closed extension.

    Case analysis depends on the characteristic (0 behaves like any
    characteristic other than 2 and 3); square-root conditions are evaluated
    in a quadratic extension when needed.
    """
    F = a.field
    for other in (b, c, d):
        if other.field != F:
            raise FieldMismatch("cubic coefficients over different fields")
    p = F.p
    three = F.el(3)
    if not a.is_zero:
        if p not in (2, 3):
            disc = b * b - three * a * c
            if disc.is_zero and (b * c - F.el(9) * a * d).is_zero:
                return RootCount.ONE
            prod = _critical_product(a, b, c, d, disc)
            if not disc.is_zero and prod.is_zero:
                return RootCount.TWO
            return RootCount.THREE
        if p == 2:
            if (a * d - b * c).is_zero:
                return RootCount.ONE if (a * c - b * b).is_zero else RootCount.TWO
            return RootCount.THREE
        # characteristic 3
        if b.is_zero and c.is_zero:
            return RootCount.ONE
        if not b.is_zero:
            t = c / b
            val = ((a * t + b) * t + c) * t + d
            return RootCount.TWO if val.is_zero else RootCount.THREE
        return RootCount.THREE
    # quadratic / linear / constant tail
    if b.is_zero and c.is_zero:
        return RootCount.INFINITE if d.is_zero else RootCount.ZERO
    if b.is_zero:
        return RootCount.ONE
    if p not in (2, 3):
        disc2 = c * c - F.el(4) * b * d
        return RootCount.ONE if disc2.is_zero else RootCount.TWO
    if p == 2:
        return RootCount.ONE if c.is_zero else RootCount.TWO
    disc2 = c * c - b * d
    return RootCount.ONE if disc2.is_zero else RootCount.TWO


def _critical_product(a: Fel, b: Fel, c: Fel, d: Fel, disc: Fel) -> Fel:
    """p(y+)*p(y-) at the critical points y± = (-b ± sqrt(b^2-3ac)) / (3a).

    Over finite fields the root is taken in a quadratic extension with the
    lex-smaller sign; the product is symmetric so the choice is immaterial.
    Over Q the symmetric closed form is used instead.
    """
    F = a.field
    if F.is_finite:
        s, ext = sqrt_in_ext(disc)
        ae, be, ce, de = (embed(x, ext) for x in (a, b, c, d))
        denom = (ext.el(3) * ae).inv()
        vals = []
        for sig in (s, -s):
            y = (-be + sig) * denom
            vals.append(((ae * y + be) * y + ce) * y + de)
        prod = vals[0] * vals[1]
        return prod
    # symmetric form: v+ * v- = (D1^2 - 4*D0^3) / (729 a^4)
    d0 = disc
    d1 = F.el(2) * b * b * b - F.el(9) * a * b * c + F.el(27) * a * a * d
    return (d1 * d1 - F.el(4) * d0 * d0 * d0) / (F.el(729) * (a**4))
