"""Exact field arithmetic: prime fields GF(p), extensions GF(p^k), and the rationals.

Extension fields carry an explicit monic irreducible modulus over the prime
field (constant term first).  When no modulus is given, the lexicographically
smallest irreducible polynomial of the requested degree is chosen, so field
construction is reproducible.  Elements are kept in a unique canonical form:
residue vectors in [0, p) for finite fields, one reduced Fraction for Q.

Fields and elements are immutable; the only mutable state is a set of
memoisation caches (construction, embeddings, products), all of which are
safe under CPython's locking or are append-only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


class FieldError(Exception):
    """Base class for field construction and arithmetic errors."""


class NonPrimeCharacteristic(FieldError):
    pass


class UnsupportedRationalExtension(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class IncompatibleFields(FieldError):
    pass


class InfiniteField(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class ParseError(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Integer-coefficient polynomial helpers over GF(p), used for modulus
# selection and validation before any Field object exists.  Coefficient
# lists are constant-first with trailing zeros trimmed.

def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmod(f: list[int], m: list[int], p: int) -> list[int]:
    f = f[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(f) - 1 >= dm and f:
        q = (f[-1] * inv_lead) % p
        shift = len(f) - 1 - dm
        for i, c in enumerate(m):
            f[shift + i] = (f[shift + i] - q * c) % p
        _ptrim(f)
    return f


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = f[:], g[:]
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _ppowmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(f, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(m: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) via x^(p^d) gcd tests."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if m[0] == 0:
        return False
    x = [0, 1]
    # x^(p^k) must equal x mod m
    xq = x
    for _ in range(k):
        xq = _ppowmod(xq, p, m, p)
    if _ptrim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    for r in _prime_factors(k):
        xq = x
        for _ in range(k // r):
            xq = _ppowmod(xq, p, m, p)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)])
        if len(_pgcd(m, diff, p)) - 1 != 0:
            return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for lower in itertools.product(range(p), repeat=k):
        if lower[0] == 0:
            continue  # divisible by x
        m = list(lower) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


# ---------------------------------------------------------------------------

_MUL_CACHE_MAX_ORDER = 1024


class Field:
    """An exact field: GF(p), GF(p^k) with explicit modulus, or Q (p=0, k=1)."""

    __slots__ = (
        "p",
        "k",
        "modulus",
        "order",
        "_red",
        "_mul_cache",
        "_inv_cache",
        "_elements",
    )

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if p == 0:
            if k != 1:
                raise UnsupportedRationalExtension("no extensions of Q are supported")
            if modulus is not None:
                raise UnsupportedRationalExtension("Q takes no modulus")
        else:
            if not is_prime(p):
                raise NonPrimeCharacteristic(f"{p} is not prime")
            if k < 1:
                raise FieldError("degree must be positive")
            if k == 1:
                modulus = None
            else:
                if modulus is None:
                    modulus = _smallest_irreducible(p, k)
                else:
                    modulus = tuple(c % p for c in modulus)
                    if len(modulus) != k + 1 or modulus[-1] != 1:
                        raise FieldError("modulus must be monic of degree k")
                    if not _is_irreducible(list(modulus), p):
                        raise FieldError("modulus is reducible")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k if p else None
        # reduction rows: coefficients of x^d mod modulus for d = k .. 2k-2
        if p and k > 1:
            rows = [tuple((-c) % p for c in modulus[:-1])]  # x^k
            for _ in range(k - 2):
                shifted = [0] + list(rows[-1])
                top = shifted[k]
                shifted = shifted[:k]
                if top:
                    shifted = [(shifted[i] + top * rows[0][i]) % p for i in range(k)]
                rows.append(tuple(shifted))
            self._red = rows
        else:
            self._red = None
        self._mul_cache = {} if (p and 1 < k and p**k <= _MUL_CACHE_MAX_ORDER) else None
        self._inv_cache = {}
        self._elements = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field({self.text()})"

    def text(self) -> str:
        """Canonical text form: gf(p) | gf(p,k;c0,...,ck) | q."""
        if self.p == 0:
            return "q"
        if self.k == 1:
            return f"gf({self.p})"
        mod = ",".join(str(c) for c in self.modulus)
        return f"gf({self.p},{self.k};{mod})"

    @property
    def char(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    # -- element construction ----------------------------------------------

    def el(self, value) -> "Fel":
        """Coerce an int, Fraction, or coefficient sequence into this field."""
        if self.p == 0:
            if isinstance(value, (int, Fraction)):
                return Fel(self, (Fraction(value),))
            if isinstance(value, (tuple, list)) and len(value) == 1:
                return Fel(self, (Fraction(value[0]),))
            raise FieldError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            coeffs = [0] * self.k
            coeffs[0] = value % self.p
            return Fel(self, tuple(coeffs))
        if isinstance(value, (tuple, list)):
            if len(value) > self.k:
                raise FieldError("too many coefficients")
            coeffs = [int(c) % self.p for c in value] + [0] * (self.k - len(value))
            return Fel(self, tuple(coeffs))
        raise FieldError(f"cannot coerce {value!r} into {self.text()}")

    @property
    def zero(self) -> "Fel":
        return self.el(0)

    @property
    def one(self) -> "Fel":
        return self.el(1)

    def from_index(self, idx: int) -> "Fel":
        """Element number idx in the canonical enumeration order."""
        if self.p == 0:
            raise InfiniteField("Q is not enumerable")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(idx % self.p)
            idx //= self.p
        return Fel(self, tuple(coeffs))

    def elements(self):
        """All field elements in canonical order (finite fields only)."""
        if self.p == 0:
            raise InfiniteField("Q is not enumerable")
        if self._elements is None:
            self._elements = [self.from_index(i) for i in range(self.order)]
        return self._elements

    # -- raw coefficient arithmetic ------------------------------------------

    def _add(self, a, b):
        if self.p == 0:
            return (a[0] + b[0],)
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        if self.p == 0:
            return (a[0] - b[0],)
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        if self.p == 0:
            return (-a[0],)
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        if self.p == 0:
            return (a[0] * b[0],)
        p = self.p
        if self.k == 1:
            return ((a[0] * b[0]) % p,)
        cache = self._mul_cache
        if cache is not None:
            got = cache.get((a, b))
            if got is not None:
                return got
        k = self.k
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        red = self._red
        for d in range(k, 2 * k - 1):
            c = conv[d] % p
            if c:
                row = red[d - k]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        res = tuple(out)
        if cache is not None:
            cache[(a, b)] = res
        return res

    def _inv(self, a):
        if self.p == 0:
            if a[0] == 0:
                raise DivisionByZero("inverse of zero")
            return (1 / a[0],)
        if all(c == 0 for c in a):
            raise DivisionByZero("inverse of zero")
        p = self.p
        if self.k == 1:
            return (pow(a[0], -1, p),)
        got = self._inv_cache.get(a)
        if got is not None:
            return got
        # extended Euclid over GF(p)[x] against the modulus
        r0, r1 = list(self.modulus), _ptrim(list(a))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = []
            rem = r0[:]
            inv_lead = pow(r1[-1], -1, p)
            while len(rem) >= len(r1) and rem:
                coef = (rem[-1] * inv_lead) % p
                deg = len(rem) - len(r1)
                while len(q) <= deg:
                    q.append(0)
                q[deg] = coef
                for i, c in enumerate(r1):
                    rem[deg + i] = (rem[deg + i] - coef * c) % p
                _ptrim(rem)
            r0, r1 = r1, rem
            s0, s1 = s1, _ptrim(
                [
                    (x - y) % p
                    for x, y in itertools.zip_longest(s0, _pmul(q, s1, p), fillvalue=0)
                ]
            )
        lead_inv = pow(r0[-1], -1, p)
        inv = [(c * lead_inv) % p for c in s0]
        inv = inv[: self.k] + [0] * (self.k - len(inv))
        res = tuple(inv)
        self._inv_cache[a] = res
        return res


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1, modulus: tuple[int, ...] | None = None) -> Field:
    """Construct (and cache) GF(p^k); modulus defaults to the lex-smallest irreducible."""
    return Field(p, k, modulus)


QQ = Field(0, 1, None)


def make_field(p: int, k: int = 1) -> Field:
    """Field of characteristic p and degree k; p = 0 gives the rationals."""
    if p == 0:
        if k != 1:
            raise UnsupportedRationalExtension("no extensions of Q are supported")
        return QQ
    return GF(p, k)


class Fel:
    """A field element in canonical form; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other) -> "Fel":
        if not isinstance(other, Fel):
            raise TypeError(f"expected field element, got {type(other).__name__}")
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch(
                f"elements of {self.field.text()} and {other.field.text()}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        return Fel(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return Fel(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        return Fel(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        other = self._check(other)
        return Fel(self.field, self.field._mul(self.coeffs, self.field._inv(other.coeffs)))

    def __neg__(self):
        return Fel(self.field, self.field._neg(self.coeffs))

    def inv(self) -> "Fel":
        """Multiplicative inverse; raises DivisionByZero on zero."""
        return Fel(self.field, self.field._inv(self.coeffs))

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Fel)
            and self.coeffs == other.coeffs
            and self.field == other.field
        )

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def is_zero(self) -> bool:
        if self.field.p == 0:
            return self.coeffs[0] == 0
        return all(c == 0 for c in self.coeffs)

    def index(self) -> int:
        """Position in the canonical enumeration (finite fields)."""
        f = self.field
        if f.p == 0:
            raise InfiniteField("Q elements have no enumeration index")
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * f.p + c
        return idx

    def sort_key(self):
        if self.field.p == 0:
            return self.coeffs[0]
        return self.index()

    def __repr__(self):
        return f"<{self.text()} in {self.field.text()}>"

    def text(self) -> str:
        """Canonical element text: c0+c1*w+... for extensions, n/d for Q."""
        f = self.field
        if f.p == 0:
            return str(self.coeffs[0])
        if f.k == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "w" if i == 1 else f"w^{i}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Embeddings between compatible finite fields.

@lru_cache(maxsize=None)
def _embedding_images(src: Field, dst: Field) -> tuple[Fel, ...]:
    """Powers 0..k-1 of the chosen image of src's generator inside dst."""
    if src.p != dst.p:
        raise IncompatibleFields("different characteristic")
    if src.p == 0:
        raise IncompatibleFields("no embeddings over Q")
    if dst.k % src.k != 0:
        raise IncompatibleFields(f"{src.text()} does not embed in {dst.text()}")
    if src.k == 1:
        return (dst.one,)
    # the image of the generator is the lex-smallest root of src's modulus in dst
    mod = src.modulus
    for idx in range(dst.order):
        cand = dst.from_index(idx)
        acc = dst.zero
        power = dst.one
        for c in mod:
            if c:
                acc = acc + dst.el(c) * power
            power = power * cand
        if acc.is_zero:
            root = cand
            break
    else:
        raise IncompatibleFields("modulus has no root in the target field")
    images = [dst.one]
    for _ in range(src.k - 1):
        images.append(images[-1] * root)
    return tuple(images)


def embed(a: Fel, dst: Field) -> Fel:
    """Image of a under the fixed ring embedding of its field into dst."""
    src = a.field
    if src == dst:
        return a if a.field is dst else Fel(dst, a.coeffs)
    images = _embedding_images(src, dst)
    acc = dst.zero
    for c, img in zip(a.coeffs, images):
        if c:
            acc = acc + dst.el(c) * img
    return acc


# ---------------------------------------------------------------------------
# Text formats.

def parse_field(text: str) -> Field:
    """Parse gf(p) | gf(p,k) | gf(p,k;c0,...,ck) | q."""
    s = text.strip().lower()
    if s == "q":
        return QQ
    if s.startswith("gf(") and s.endswith(")"):
        body = s[3:-1]
        mod = None
        if ";" in body:
            body, modpart = body.split(";", 1)
            try:
                mod = tuple(int(c) for c in modpart.split(","))
            except ValueError:
                raise ParseError(f"bad modulus in {text!r}")
        parts = body.split(",")
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"bad field spec {text!r}")
        if len(nums) == 1:
            p, k = nums[0], 1
        elif len(nums) == 2:
            p, k = nums
        else:
            raise ParseError(f"bad field spec {text!r}")
        if mod is not None:
            return GF(p, k, mod)
        return make_field(p, k)
    raise ParseError(f"unrecognised field spec {text!r}")


def parse_el(field: Field, text: str) -> Fel:
    """Parse an element in the canonical text format."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty element")
    if field.p == 0:
        try:
            return field.el(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {text!r}")
    # allow a leading minus by folding it into the first term
    neg_first = s.startswith("-")
    if neg_first:
        s = s[1:]
    coeffs = [0] * field.k
    for t, term in enumerate(s.split("+")):
        if not term:
            raise ParseError(f"bad element {text!r}")
        if "*" in term:
            cpart, wpart = term.split("*", 1)
        elif term.startswith("w"):
            cpart, wpart = "1", term
        else:
            cpart, wpart = term, ""
        try:
            c = int(cpart)
        except ValueError:
            raise ParseError(f"bad coefficient in {text!r}")
        if wpart == "":
            i = 0
        elif wpart == "w":
            i = 1
        elif wpart.startswith("w^"):
            try:
                i = int(wpart[2:])
            except ValueError:
                raise ParseError(f"bad power in {text!r}")
        else:
            raise ParseError(f"bad term {term!r} in {text!r}")
        if i >= field.k:
            raise ParseError(f"power w^{i} out of range for {field.text()}")
        if t == 0 and neg_first:
            c = -c
        coeffs[i] = (coeffs[i] + c) % field.p
    return field.el(coeffs)
