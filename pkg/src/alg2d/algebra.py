"""Two-dimensional algebras given by structure constants, with brute-force oracles.

An algebra is a 2x4 matrix of structure constants over an exact field:

    e1*e1 = a1*e1 + b1*e2    e1*e2 = a2*e1 + b2*e2
    e2*e1 = a3*e1 + b3*e2    e2*e2 = a4*e1 + b4*e2

This module holds the bilinear product, direct definition checkers for every
structure of interest (subalgebras, idempotents, one-sided and two-sided
ideals, left quasiunits), and exhaustive enumeration oracles over finite
fields.  Everything operates on immutable values.
"""

from __future__ import annotations

from .fields import Fel, Field, FieldMismatch, InfiniteField, ParseError, embed, parse_el


class MSC:
    """Matrix of structure constants (a1..a4; b1..b4) over one field."""

    __slots__ = ("field", "alpha", "beta")

    def __init__(self, field: Field, alpha, beta):
        alpha = tuple(alpha)
        beta = tuple(beta)
        if len(alpha) != 4 or len(beta) != 4:
            raise ValueError("an MSC needs 4 alpha and 4 beta entries")
        for c in alpha + beta:
            if c.field != field:
                raise FieldMismatch("structure constants must share the field")
        self.field = field
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def from_ints(cls, field: Field, alpha, beta) -> "MSC":
        return cls(field, [field.el(c) for c in alpha], [field.el(c) for c in beta])

    @classmethod
    def parse(cls, field: Field, text: str) -> "MSC":
        halves = text.strip().split(";")
        if len(halves) != 2:
            raise ParseError("MSC text must be 'a1,a2,a3,a4;b1,b2,b3,b4'")
        rows = []
        for half in halves:
            parts = half.split(",")
            if len(parts) != 4:
                raise ParseError("each MSC row needs 4 entries")
            rows.append([parse_el(field, t) for t in parts])
        return cls(field, rows[0], rows[1])

    def text(self) -> str:
        return (
            ",".join(c.text() for c in self.alpha)
            + ";"
            + ",".join(c.text() for c in self.beta)
        )

    def to_json(self) -> dict:
        return {
            "alpha": [c.text() for c in self.alpha],
            "beta": [c.text() for c in self.beta],
        }

    @classmethod
    def from_json(cls, field: Field, data: dict) -> "MSC":
        return cls(
            field,
            [parse_el(field, t) for t in data["alpha"]],
            [parse_el(field, t) for t in data["beta"]],
        )

    def lift(self, dst: Field) -> "MSC":
        return MSC(
            dst,
            [embed(c, dst) for c in self.alpha],
            [embed(c, dst) for c in self.beta],
        )

    def __eq__(self, other):
        return (
            isinstance(other, MSC)
            and self.field == other.field
            and self.alpha == other.alpha
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"MSC[{self.text()}]"


class Element:
    """x*e1 + y*e2 in the fixed basis."""

    __slots__ = ("x", "y")

    def __init__(self, x: Fel, y: Fel):
        self.x = x
        self.y = y

    def __add__(self, other: "Element") -> "Element":
        return Element(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Element":
        return Element(-self.x, -self.y)

    def scale(self, c: Fel) -> "Element":
        return Element(c * self.x, c * self.y)

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero

    def __eq__(self, other):
        return isinstance(other, Element) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def sort_key(self):
        return (self.x.sort_key(), self.y.sort_key())

    def text(self) -> str:
        """Readable form like '3*e1+2*e2'; coordinates stay canonical."""
        parts = []
        for coord, name in ((self.x, "e1"), (self.y, "e2")):
            if coord.is_zero:
                continue
            t = coord.text()
            if t == "1":
                parts.append(name)
            elif "+" in t or "/" in t:
                parts.append(f"({t})*{name}")
            else:
                parts.append(f"{t}*{name}")
        return "+".join(parts) if parts else "0"

    def to_json(self) -> list[str]:
        return [self.x.text(), self.y.text()]

    @classmethod
    def from_json(cls, field: Field, data) -> "Element":
        return cls(parse_el(field, data[0]), parse_el(field, data[1]))

    def __repr__(self):
        return f"Element({self.text()})"


def basis(field: Field) -> tuple[Element, Element]:
    return (
        Element(field.one, field.zero),
        Element(field.zero, field.one),
    )


def mul(A: MSC, u: Element, v: Element) -> Element:
    """The bilinear product determined by the structure constants."""
    a1, a2, a3, a4 = A.alpha
    b1, b2, b3, b4 = A.beta
    xx = u.x * v.x
    xy = u.x * v.y
    yx = u.y * v.x
    yy = u.y * v.y
    return Element(
        a1 * xx + a2 * xy + a3 * yx + a4 * yy,
        b1 * xx + b2 * xy + b3 * yx + b4 * yy,
    )


class ProjPoint:
    """A one-dimensional subspace, normalised as F(e1 + y0*e2) or F(e2)."""

    __slots__ = ("y0",)

    def __init__(self, y0: Fel | None):
        self.y0 = y0  # None encodes F(e2)

    @classmethod
    def e2(cls) -> "ProjPoint":
        return cls(None)

    @classmethod
    def affine(cls, y0: Fel) -> "ProjPoint":
        return cls(y0)

    @classmethod
    def from_vector(cls, x: Fel, y: Fel) -> "ProjPoint":
        if x.is_zero:
            if y.is_zero:
                raise ValueError("the zero vector spans no line")
            return cls(None)
        return cls(y / x)

    @property
    def is_e2(self) -> bool:
        return self.y0 is None

    def generator(self, field: Field) -> Element:
        if self.y0 is None:
            return Element(field.zero, field.one)
        return Element(field.one, self.y0)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.y0 == other.y0

    def __hash__(self):
        return hash(self.y0)

    def sort_key(self):
        if self.y0 is None:
            return (0, 0)
        return (1, self.y0.sort_key())

    def text(self) -> str:
        if self.y0 is None:
            return "F(e2)"
        if self.y0.is_zero:
            return "F(e1)"
        t = self.y0.text()
        if "+" in t or "/" in t:
            return f"F(e1+({t})e2)"
        return f"F(e1+{t}e2)"

    def to_json(self) -> str:
        return "e2" if self.y0 is None else self.y0.text()

    @classmethod
    def from_json(cls, field: Field, data: str) -> "ProjPoint":
        if data == "e2":
            return cls(None)
        return cls(parse_el(field, data))

    def __repr__(self):
        return self.text()


def projective_points(field: Field) -> list[ProjPoint]:
    """All q+1 lines of the plane, F(e2) first, then by slope order."""
    if not field.is_finite:
        raise InfiniteField("cannot enumerate lines over Q")
    return [ProjPoint.e2()] + [ProjPoint.affine(y) for y in field.elements()]


class LineSet:
    """A set of lines, or the marker 'every line qualifies'."""

    __slots__ = ("points",)

    def __init__(self, points=None, is_all: bool = False):
        self.points = None if is_all else frozenset(points or ())

    @classmethod
    def all_lines(cls) -> "LineSet":
        return cls(is_all=True)

    @classmethod
    def of(cls, points) -> "LineSet":
        return cls(points=points)

    @property
    def is_all(self) -> bool:
        return self.points is None

    def sorted_points(self) -> list[ProjPoint]:
        return sorted(self.points, key=lambda p: p.sort_key())

    def materialize(self, field: Field) -> list[ProjPoint]:
        if self.is_all:
            return projective_points(field)
        return self.sorted_points()

    def count_label(self) -> str:
        return "inf" if self.is_all else str(len(self.points))

    def __eq__(self, other):
        return isinstance(other, LineSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def to_json(self):
        if self.is_all:
            return {"all": True}
        return {"points": [p.to_json() for p in self.sorted_points()]}

    @classmethod
    def from_json(cls, field: Field, data) -> "LineSet":
        if data.get("all"):
            return cls.all_lines()
        return cls.of(ProjPoint.from_json(field, s) for s in data["points"])

    def __repr__(self):
        if self.is_all:
            return "LineSet(all)"
        return "LineSet{" + ", ".join(p.text() for p in self.sorted_points()) + "}"


class IdealWitness:
    """The functional values (lambda(e1), lambda(e2)) certifying an ideal line."""

    __slots__ = ("lambda_e1", "lambda_e2")

    def __init__(self, lambda_e1: Fel, lambda_e2: Fel):
        self.lambda_e1 = lambda_e1
        self.lambda_e2 = lambda_e2

    def __eq__(self, other):
        return (
            isinstance(other, IdealWitness)
            and self.lambda_e1 == other.lambda_e1
            and self.lambda_e2 == other.lambda_e2
        )

    def __repr__(self):
        return f"IdealWitness({self.lambda_e1.text()}, {self.lambda_e2.text()})"


def _scalar_on_line(w: Element, P: ProjPoint) -> Fel | None:
    """The scalar c with w = c * generator(P), or None if w is off the line."""
    if P.y0 is None:
        if not w.x.is_zero:
            return None
        return w.y
    c = w.x
    if w.y == c * P.y0:
        return c
    return None


def subalgebra_scalar(A: MSC, P: ProjPoint) -> Fel | None:
    """u^2 = c*u for the normalised generator u of P; None if not a subalgebra."""
    u = P.generator(A.field)
    return _scalar_on_line(mul(A, u, u), P)


def is_subalgebra(A: MSC, P: ProjPoint) -> bool:
    return subalgebra_scalar(A, P) is not None


def is_idempotent(A: MSC, u: Element) -> bool:
    """v^2 = v for a nonzero v; the zero element is rejected by convention."""
    if u.is_zero:
        return False
    return mul(A, u, u) == u


def left_ideal_witness(A: MSC, P: ProjPoint) -> IdealWitness | None:
    """Checks v*u in F*u on the two basis vectors v, which suffices by linearity."""
    e1, e2 = basis(A.field)
    u = P.generator(A.field)
    c1 = _scalar_on_line(mul(A, e1, u), P)
    if c1 is None:
        return None
    c2 = _scalar_on_line(mul(A, e2, u), P)
    if c2 is None:
        return None
    return IdealWitness(c1, c2)


def right_ideal_witness(A: MSC, P: ProjPoint) -> IdealWitness | None:
    e1, e2 = basis(A.field)
    u = P.generator(A.field)
    c1 = _scalar_on_line(mul(A, u, e1), P)
    if c1 is None:
        return None
    c2 = _scalar_on_line(mul(A, u, e2), P)
    if c2 is None:
        return None
    return IdealWitness(c1, c2)


def is_left_ideal(A: MSC, P: ProjPoint) -> bool:
    return left_ideal_witness(A, P) is not None


def is_right_ideal(A: MSC, P: ProjPoint) -> bool:
    return right_ideal_witness(A, P) is not None


def is_two_sided_ideal(A: MSC, P: ProjPoint) -> bool:
    return is_left_ideal(A, P) and is_right_ideal(A, P)


def is_left_quasiunit(A: MSC, e: Element) -> bool:
    """e(uv) = (eu)v + u(ev) - uv, checked on basis pairs (enough by bilinearity)."""
    e1, e2 = basis(A.field)
    for u in (e1, e2):
        eu = mul(A, e, u)
        for v in (e1, e2):
            uv = mul(A, u, v)
            lhs = mul(A, e, uv)
            rhs = mul(A, eu, v) + mul(A, u, mul(A, e, v)) - uv
            if lhs != rhs:
                return False
    return True


LINE_KINDS = ("subalgebras", "left", "right", "two_sided")
POINT_KINDS = ("idempotents", "quasiunits")

_LINE_CHECKERS = {
    "subalgebras": is_subalgebra,
    "left": is_left_ideal,
    "right": is_right_ideal,
    "two_sided": is_two_sided_ideal,
}


def oracle_enumerate(A: MSC, kind: str) -> LineSet:
    """Test every line of the plane with the direct definition checker."""
    check = _LINE_CHECKERS[kind]
    hits = [P for P in projective_points(A.field) if check(A, P)]
    if len(hits) == A.field.order + 1:
        return LineSet.all_lines()
    return LineSet.of(hits)


def oracle_points(A: MSC, kind: str) -> list[Element]:
    """Exhaustive element scan: idempotents skip zero, quasiunits include it."""
    F = A.field
    if not F.is_finite:
        raise InfiniteField("cannot enumerate elements over Q")
    out = []
    els = F.elements()
    if kind == "idempotents":
        for x in els:
            for y in els:
                u = Element(x, y)
                if not u.is_zero and is_idempotent(A, u):
                    out.append(u)
    elif kind == "quasiunits":
        for x in els:
            for y in els:
                u = Element(x, y)
                if is_left_quasiunit(A, u):
                    out.append(u)
    else:
        raise ValueError(f"unknown point kind {kind!r}")
    return sorted(out, key=lambda u: u.sort_key())


def all_mscs(field: Field):
    """Iterate every MSC over a finite field in canonical order."""
    if not field.is_finite:
        raise InfiniteField("cannot enumerate MSCs over Q")
    els = field.elements()
    n = field.order
    total = n**8
    for idx in range(total):
        digits = []
        rem = idx
        for _ in range(8):
            digits.append(els[rem % n])
            rem //= n
        yield MSC(field, digits[:4], digits[4:])


def msc_from_index(field: Field, idx: int) -> MSC:
    els = field.elements()
    n = field.order
    digits = []
    for _ in range(8):
        digits.append(els[idx % n])
        idx //= n
    return MSC(field, digits[:4], digits[4:])
