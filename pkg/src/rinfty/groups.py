"""Form matrices and membership tests for Sp_2l, O_2l(f_D) and O_2l+1(f_B)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionMismatch, RankTooSmall
from .matrix import SquareMatrix, direct_sum
from .rings import ZZ, Ring


class FormTag(enum.Enum):
    SYMPLECTIC_J = "C"
    ORTHO_D = "D"
    ORTHO_B = "B"


@dataclass(frozen=True)
class FormKind:
    tag: FormTag
    l: int

    def __post_init__(self):
        floor = 1 if self.tag is FormTag.SYMPLECTIC_J else 2
        if self.l < floor:
            raise RankTooSmall(f"{self.tag.name} needs l >= {floor}, got l={self.l}")

    @property
    def dim(self) -> int:
        return 2 * self.l + 1 if self.tag is FormTag.ORTHO_B else 2 * self.l

    @classmethod
    def for_case(cls, case: str, l: int) -> "FormKind":
        return cls(FormTag(case), l)


def _hyperbolic(l: int, sign: int, ring: Ring) -> SquareMatrix:
    n = 2 * l
    rows = [[0] * n for _ in range(n)]
    for i in range(l):
        rows[i][l + i] = 1
        rows[l + i][i] = sign
    return SquareMatrix(rows, ring)


def form_matrix(kind: FormKind, ring: Ring = ZZ) -> SquareMatrix:
    if kind.tag is FormTag.SYMPLECTIC_J:
        return _hyperbolic(kind.l, -1, ring)
    if kind.tag is FormTag.ORTHO_D:
        return _hyperbolic(kind.l, 1, ring)
    return direct_sum(SquareMatrix.identity(1, ring), _hyperbolic(kind.l, 1, ring))


def is_member(a: SquareMatrix, kind: FormKind) -> bool:
    """A [f] A^T == [f], entry for entry."""
    if a.n != kind.dim:
        raise DimensionMismatch(f"{a.n}x{a.n} matrix tested against a {kind.dim}-dim form")
    f = form_matrix(kind, a.ring)
    return a * f * a.transpose() == f


def member_defects(a: SquareMatrix, kind: FormKind):
    """Positions (i, j) where A [f] A^T differs from [f]."""
    if a.n != kind.dim:
        raise DimensionMismatch(f"{a.n}x{a.n} matrix tested against a {kind.dim}-dim form")
    f = form_matrix(kind, a.ring)
    g = a * f * a.transpose()
    return [(i, j) for i in range(a.n) for j in range(a.n) if g[i, j] != f[i, j]]


def center_element_check(a: SquareMatrix, kind: FormKind) -> bool:
    if a.n != kind.dim:
        raise DimensionMismatch(f"{a.n}x{a.n} matrix vs {kind.dim}-dim form")
    one = SquareMatrix.identity(a.n, a.ring)
    return a == one or a == -one


def group_inverse(a: SquareMatrix, kind: FormKind) -> SquareMatrix:
    """Inverse of a group element read off the form.

    Sp: A^-1 = -J A^T J.  Orthogonal ([f]^2 = I): A^-1 = [f] A^T [f].
    Only valid for members; callers that are unsure should check first.
    """
    f = form_matrix(kind, a.ring)
    if kind.tag is FormTag.SYMPLECTIC_J:
        return -(f * a.transpose() * f)
    return f * a.transpose() * f
