"""Dense square matrices over one of the exact rings in :mod:`rinfty.rings`."""

from __future__ import annotations

from .errors import DimensionMismatch, NotInvertible, RingMismatch
from .rings import ZZ, PolyInt, Ring, join_rings, ring_of


class SquareMatrix:
    """Immutable n x n matrix; every entry lives in ``ring``.

    If ``ring`` is omitted it is inferred from the entries (plain ints embed
    into whatever other ring appears).
    """

    __slots__ = ("ring", "rows")

    def __init__(self, rows, ring: Ring | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n < 1:
            raise DimensionMismatch("matrix must be at least 1x1")
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix is not square")
        if ring is None:
            ring = ZZ
            for r in rows:
                for x in r:
                    ring = join_rings(ring, ring_of(x))
        self.ring = ring
        self.rows = tuple(tuple(ring.coerce(x) for x in r) for r in rows)

    @classmethod
    def _raw(cls, rows, ring):
        # rows already coerced
        m = object.__new__(cls)
        m.ring = ring
        m.rows = rows
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int, ring: Ring = ZZ) -> "SquareMatrix":
        return cls.scalar(n, 1, ring)

    @classmethod
    def zero(cls, n: int, ring: Ring = ZZ) -> "SquareMatrix":
        return cls.scalar(n, 0, ring)

    @classmethod
    def scalar(cls, n: int, c, ring: Ring = ZZ) -> "SquareMatrix":
        z, c = ring.zero(), ring.coerce(c)
        return cls._raw(tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)), ring)

    @classmethod
    def diag(cls, values, ring: Ring | None = None) -> "SquareMatrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ring)

    # -- basics -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return f"SquareMatrix({[[str(x) for x in r] for r in self.rows]}, ring={self.ring})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def _check(self, other: "SquareMatrix"):
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def over(self, ring: Ring) -> "SquareMatrix":
        """Re-coerce the entries into ``ring`` (e.g. an integer matrix into F_p)."""
        if self.ring == ring:
            return self
        if self.ring != ZZ:
            raise RingMismatch(f"cannot move a {self.ring} matrix to {ring}")
        return SquareMatrix(self.rows, ring)

    def map(self, fn, ring: Ring | None = None) -> "SquareMatrix":
        return SquareMatrix([[fn(x) for x in r] for r in self.rows], ring)

    def evaluate(self, a) -> "SquareMatrix":
        """Substitute T := a in a Z[T] matrix."""
        if self.ring.kind != "ZZ[T]":
            raise RingMismatch(f"evaluate needs a Z[T] matrix, got {self.ring}")
        return SquareMatrix([[x(a) for x in r] for r in self.rows])

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return SquareMatrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ring,
        )

    def __neg__(self):
        return SquareMatrix._raw(tuple(tuple(-x for x in r) for r in self.rows), self.ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SquareMatrix":
        c = self.ring.coerce(c)
        return SquareMatrix._raw(tuple(tuple(c * x for x in r) for r in self.rows), self.ring)

    def __mul__(self, other):
        if not isinstance(other, SquareMatrix):
            return self.scale(other)
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x != 0 and y != 0:
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return SquareMatrix._raw(tuple(out), self.ring)

    __matmul__ = __mul__

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = SquareMatrix.identity(self.n, self.ring), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix._raw(tuple(zip(*self.rows)), self.ring)

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        acc = self.ring.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def direct_sum(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        n, m = self.n, other.n
        z = self.ring.zero()
        rows = [tuple(r) + (z,) * m for r in self.rows]
        rows += [(z,) * n + tuple(r) for r in other.rows]
        return SquareMatrix._raw(tuple(rows), self.ring)

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.n, self.ring)

    # -- elimination ------------------------------------------------------

    def _bareiss_gauss_jordan(self):
        """Fraction-free Gauss-Jordan on [A | I].

        Returns the reduced augmented rows; the left block ends up diagonal
        with every diagonal entry equal to +-det(A), or None if A is singular.
        """
        ring, n = self.ring, self.n
        one, zero = ring.one(), ring.zero()
        M = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        prev = one
        for k in range(n):
            piv = next((r for r in range(k, n) if M[r][k] != 0), None)
            if piv is None:
                return None
            if piv != k:
                M[k], M[piv] = M[piv], M[k]
            pk = M[k]
            akk = pk[k]
            for i in range(n):
                if i == k:
                    continue
                row = M[i]
                aik = row[k]
                M[i] = [ring.exquo(akk * row[j] - aik * pk[j], prev) for j in range(2 * n)]
            prev = akk
        return M

    def det(self):
        ring, n = self.ring, self.n
        M = [list(r) for r in self.rows]
        prev, sign = ring.one(), 1
        for k in range(n - 1):
            piv = next((r for r in range(k, n) if M[r][k] != 0), None)
            if piv is None:
                return ring.zero()
            if piv != k:
                M[k], M[piv] = M[piv], M[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = ring.exquo(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev)
            prev = M[k][k]
        d = M[n - 1][n - 1]
        return d if sign == 1 else -d

    def inverse(self) -> "SquareMatrix":
        ring, n = self.ring, self.n
        M = self._bareiss_gauss_jordan()
        if M is None:
            raise NotInvertible("matrix is singular")
        d = M[0][0]
        if not ring.is_unit(d):
            raise NotInvertible(f"determinant {d} is not a unit of {ring}")
        inv_rows = []
        for i in range(n):
            dinv = ring.inverse(M[i][i])
            inv_rows.append(tuple(x * dinv for x in M[i][n:]))
        inv = SquareMatrix._raw(tuple(inv_rows), ring)
        if not (self * inv).is_identity():
            raise AssertionError("internal error: inverse check failed")
        return inv


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a * b


def transpose(a: SquareMatrix) -> SquareMatrix:
    return a.transpose()


def mat_trace(a: SquareMatrix):
    return a.trace()


def direct_sum(*blocks: SquareMatrix) -> SquareMatrix:
    out = blocks[0]
    for b in blocks[1:]:
        out = out.direct_sum(b)
    return out


def mat_inverse(a: SquareMatrix) -> SquareMatrix:
    return a.inverse()


def commutator(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    """[a, b] = a^-1 b^-1 a b."""
    a._check(b)
    return a.inverse() * b.inverse() * a * b


def poly_matrix(rows) -> SquareMatrix:
    """Shorthand for a Z[T] matrix; ints are lifted to constants."""
    return SquareMatrix([[x if isinstance(x, PolyInt) else PolyInt.const(x) for x in r] for r in rows])
