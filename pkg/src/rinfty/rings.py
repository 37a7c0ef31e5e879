"""Exact coefficient rings: integers, Z[T], Z localized at a prime, and F_p.

Values are plain Python objects:

    int              element of Z
    PolyInt          element of Z[T]
    LocalizedAtP     element of Z_(p) (fractions whose denominator is prime to p)
    PrimeFieldElem   element of F_p

A ``Ring`` descriptor names which of these a matrix is built over and does the
coercions, unit tests and exact divisions that generic code needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ModulusMismatch, NotAUnit, RingMismatch, RinftyError

# Degree of the zero polynomial.  A float so that deg(a*b) == deg(a) + deg(b)
# holds without special-casing zero.
NEG_INFINITY = float("-inf")


class NotInRing(RinftyError, ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# Z[T]


class PolyInt:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``T**i``; trailing zeros are stripped
    so the empty tuple is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "PolyInt":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "PolyInt":
        return cls((0,) * n + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_even(self) -> bool:
        """True if only even powers of T occur."""
        return all(c == 0 for c in self.coeffs[1::2])

    @staticmethod
    def _coerce(other) -> "PolyInt":
        if isinstance(other, PolyInt):
            return other
        if _is_int(other):
            return PolyInt((other,))
        raise RingMismatch(f"cannot combine PolyInt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyInt(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyInt(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyInt()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyInt(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = PolyInt((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other) -> "PolyInt":
        """Exact division in Z[T]; raises ArithmeticError if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db, lb = len(other.coeffs) - 1, other.leading
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError(f"{other} does not divide {self}")
            quot[i - db] = q
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] -= q * b
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return PolyInt(quot)

    def __call__(self, a):
        """Horner evaluation; ``a`` may be any ring value that mixes with ints."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __eq__(self, other):
        if isinstance(other, PolyInt):
            return self.coeffs == other.coeffs
        if _is_int(other):
            return self.coeffs == PolyInt((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(("PolyInt", self.coeffs))

    def __repr__(self):
        return f"PolyInt({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "T" if i == 1 else f"T^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


T = PolyInt((0, 1))


def poly_mul(a: PolyInt, b: PolyInt) -> PolyInt:
    return a * b


def poly_eval(f: PolyInt, a: int) -> int:
    return f(a)


def poly_degree(f: PolyInt):
    return f.degree


# ---------------------------------------------------------------------------
# Z_(p)


class LocalizedAtP:
    """Reduced fraction num/den with p not dividing den."""

    __slots__ = ("num", "den", "p")

    def __init__(self, num: int, den: int = 1, p: int = 2):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        num, den = num // g, den // g
        if den % p == 0:
            raise NotInRing(f"{num}/{den} is not in Z_({p})")
        self.num, self.den, self.p = num, den, p

    @classmethod
    def from_fraction(cls, q: Fraction, p: int) -> "LocalizedAtP":
        return cls(q.numerator, q.denominator, p)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def is_integer(self) -> bool:
        return self.den == 1

    def is_unit(self) -> bool:
        return self.num % self.p != 0

    def _coerce(self, other) -> "LocalizedAtP":
        if isinstance(other, LocalizedAtP):
            if other.p != self.p:
                raise ModulusMismatch(f"Z_({self.p}) vs Z_({other.p})")
            return other
        if _is_int(other):
            return LocalizedAtP(other, 1, self.p)
        raise RingMismatch(f"cannot combine LocalizedAtP with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return LocalizedAtP(self.num * o.den + o.num * self.den, self.den * o.den, self.p)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedAtP(-self.num, self.den, self.p)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return LocalizedAtP(self.num * o.num, self.den * o.den, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "LocalizedAtP":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of Z_({self.p})")
        return LocalizedAtP(self.den, self.num, self.p)

    def __eq__(self, other):
        if isinstance(other, LocalizedAtP):
            return (self.num, self.den, self.p) == (other.num, other.den, other.p)
        if _is_int(other):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den, self.p))

    def __repr__(self):
        return f"LocalizedAtP({self.num}, {self.den}, p={self.p})"

    def __str__(self):
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


def loc_arith(op: str, a: LocalizedAtP, b: LocalizedAtP | None = None) -> LocalizedAtP:
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.p != b.p:
        raise ModulusMismatch(f"Z_({a.p}) vs Z_({b.p})")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# F_p


class PrimeFieldElem:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> "PrimeFieldElem":
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        if _is_int(other):
            return PrimeFieldElem(other, self.p)
        raise RingMismatch(f"cannot combine PrimeFieldElem with {type(other).__name__}")

    def __add__(self, other):
        return PrimeFieldElem(self.value + self._coerce(other).value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.p)

    def __sub__(self, other):
        return PrimeFieldElem(self.value - self._coerce(other).value, self.p)

    def __rsub__(self, other):
        return PrimeFieldElem(self._coerce(other).value - self.value, self.p)

    def __mul__(self, other):
        return PrimeFieldElem(self.value * self._coerce(other).value, self.p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return PrimeFieldElem(pow(self.value, n, self.p), self.p)

    def inverse(self) -> "PrimeFieldElem":
        if self.value == 0:
            raise NotAUnit(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElem(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.value == other.value and self.p == other.p
        if _is_int(other):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"PrimeFieldElem({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# ring descriptors


@dataclass(frozen=True)
class Ring:
    """Names one of the four coefficient rings.

    kind is one of "ZZ", "ZZ[T]", "Z_(p)", "F_p"; ``p`` is set for the last two.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind in ("Z_(p)", "F_p"):
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.kind} needs a prime p, got {self.p!r}")
        elif self.kind in ("ZZ", "ZZ[T]"):
            if self.p is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def localized(cls, p: int) -> "Ring":
        return cls("Z_(p)", p)

    @classmethod
    def prime_field(cls, p: int) -> "Ring":
        return cls("F_p", p)

    def __str__(self):
        if self.kind == "Z_(p)":
            return f"Z_({self.p})"
        if self.kind == "F_p":
            return f"F_{self.p}"
        return self.kind

    def coerce(self, x):
        """Bring ``x`` into this ring, accepting ints; reject other kinds."""
        kind = self.kind
        if kind == "ZZ":
            if _is_int(x):
                return x
        elif kind == "ZZ[T]":
            if isinstance(x, PolyInt):
                return x
            if _is_int(x):
                return PolyInt((x,))
        elif kind == "Z_(p)":
            if isinstance(x, LocalizedAtP):
                if x.p != self.p:
                    raise ModulusMismatch(f"Z_({x.p}) value in Z_({self.p})")
                return x
            if _is_int(x):
                return LocalizedAtP(x, 1, self.p)
        else:
            if isinstance(x, PrimeFieldElem):
                if x.p != self.p:
                    raise ModulusMismatch(f"F_{x.p} value in F_{self.p}")
                return x
            if _is_int(x):
                return PrimeFieldElem(x, self.p)
        raise RingMismatch(f"{x!r} is not an element of {self}")

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def contains(self, x) -> bool:
        try:
            return ring_of(x) == self
        except RingMismatch:
            return False

    def is_unit(self, x) -> bool:
        x = self.coerce(x)
        if self.kind == "ZZ":
            return x in (1, -1)
        if self.kind == "ZZ[T]":
            return x.is_constant() and x.leading in (1, -1)
        if self.kind == "Z_(p)":
            return x.is_unit()
        return x.value != 0

    def inverse(self, x):
        x = self.coerce(x)
        if not self.is_unit(x):
            raise NotAUnit(f"{x} is not a unit of {self}")
        if self.kind == "ZZ":
            return x
        if self.kind == "ZZ[T]":
            return PolyInt((x.leading,))
        return x.inverse()

    def exquo(self, a, b):
        """a / b, which must be exact in this ring."""
        a, b = self.coerce(a), self.coerce(b)
        if self.kind == "ZZ":
            q, r = divmod(a, b)
            if r:
                raise ArithmeticError(f"{b} does not divide {a}")
            return q
        if self.kind == "ZZ[T]":
            return a.divexact(b)
        if self.kind == "Z_(p)":
            q = a.as_fraction() / b.as_fraction()
            if q.denominator % self.p == 0:
                raise ArithmeticError(f"{b} does not divide {a} in Z_({self.p})")
            return LocalizedAtP.from_fraction(q, self.p)
        return a * b.inverse()

    def is_zero(self, x) -> bool:
        return x == 0


ZZ = Ring("ZZ")
ZZ_T = Ring("ZZ[T]")


def ring_of(x) -> Ring:
    if _is_int(x):
        return ZZ
    if isinstance(x, PolyInt):
        return ZZ_T
    if isinstance(x, LocalizedAtP):
        return Ring.localized(x.p)
    if isinstance(x, PrimeFieldElem):
        return Ring.prime_field(x.p)
    raise RingMismatch(f"{x!r} is not a ring value")


def join_rings(a: Ring, b: Ring) -> Ring:
    """Smallest of the supported rings containing both; ZZ embeds in the others."""
    if a == b:
        return a
    if a == ZZ:
        return b
    if b == ZZ:
        return a
    if a.kind == b.kind:
        raise ModulusMismatch(f"{a} vs {b}")
    raise RingMismatch(f"{a} vs {b}")
