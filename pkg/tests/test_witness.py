import random

import pytest
import sympy as sp

from rinfty.errors import NonConstantRequired, NotAUnit, RankTooSmall, ShapeViolation
from rinfty.groups import FormKind, FormTag, is_member
from rinfty.matrix import SquareMatrix, poly_matrix
from rinfty.rings import ZZ, LocalizedAtP, PolyInt, Ring, T
from rinfty.witness import (
    AutomorphismSpec,
    aux_shape_check_C,
    aux_shape_check_D,
    family_B,
    family_C,
    family_D,
    invariant_C,
    product_C,
    psi_BD,
    psi_C,
    select_points,
    z_matrix_C,
)

St = sp.Symbol("T")


def sympy_zc(l, y):
    M = sp.zeros(2 * l, 2 * l)
    M[0, 0] = St
    for i in range(1, l):
        M[i, i] = 1
    for i in range(l):
        M[i, l + i] = y
        M[l + i, i] = -1
    return M


def sympy_zd(l):
    M = sp.eye(2 * l)
    M[0, 0], M[0, 1], M[1, 0], M[1, 1] = St**2 + 1, -St, -St, 1
    M[l, l], M[l, l + 1], M[l + 1, l], M[l + 1, l + 1] = 1, St, St, St**2 + 1
    return M


def to_poly(expr):
    return PolyInt(reversed(sp.Poly(sp.expand(expr), St).all_coeffs()))


# -- families ---------------------------------------------------------------


def test_family_c_displayed():
    X, Y, Z = family_C(2, T, 1)
    assert Z == poly_matrix([[T, 0, 1, 0], [0, 1, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    z5 = Ring.localized(5)
    beta = LocalizedAtP(2, 3, 5)
    for a in (-2, 0, 3):
        _, _, Z = family_C(2, a, beta)
        expected = SquareMatrix([[a, 0, beta, 0], [0, 1, 0, beta], [-1, 0, 0, 0], [0, -1, 0, 0]], z5)
        assert Z == expected


def test_family_c_l1():
    X, _, _ = family_C(1, 0, 1)
    assert X == SquareMatrix([[0, 1], [-1, 0]])
    assert is_member(X, FormKind(FormTag.SYMPLECTIC_J, 1))


def test_family_c_units():
    with pytest.raises(NotAUnit):
        family_C(2, T, LocalizedAtP(5, 1, 5))
    with pytest.raises(NotAUnit):
        family_C(2, 0, 2)
    family_C(2, 0, 2, unit_ring=Ring.localized(3))
    with pytest.raises(RankTooSmall):
        family_C(0, T, 1)


def test_family_d():
    _, _, Z = family_D(2, T)
    assert Z == poly_matrix([[T**2 + 1, -T, 0, 0], [-T, 1, 0, 0], [0, 0, 1, T], [0, 0, T, T**2 + 1]])
    assert family_D(2, 0)[2].is_identity()
    assert is_member(family_D(3, 1)[2], FormKind(FormTag.ORTHO_D, 3))
    with pytest.raises(RankTooSmall):
        family_D(1, T)


def test_family_b():
    ZB = family_B(2, T)
    assert ZB.n == 5 and ZB.trace() == 2 * T**2 + 5
    assert family_B(2, 0).is_identity()
    assert is_member(family_B(2, 1), FormKind(FormTag.ORTHO_B, 2))


def test_family_d_matches_sympy_commutator():
    for l in (2, 3):
        Xs = sp.diag(sp.Matrix([[1, St], [0, 1]]), sp.eye(l - 2), sp.Matrix([[1, 0], [-St, 1]]), sp.eye(l - 2))
        Ys = sp.diag(sp.Matrix([[St, 1], [-1, 0]]), sp.eye(l - 2), sp.Matrix([[0, 1], [-1, St]]), sp.eye(l - 2))
        Zs = (Xs.inv() * Ys.inv() * Xs * Ys).applyfunc(sp.expand)
        _, _, Z = family_D(l, T)
        assert Z.tolist() == [[to_poly(Zs[i, j]) for j in range(2 * l)] for i in range(2 * l)]


# -- shape statements -------------------------------------------------------


def test_aux_c_k1():
    for y in (-2, 0, 3):
        r = aux_shape_check_C(2, 1, [y])
        assert (r.f, r.g, r.h, r.p) == (T, PolyInt([y]), PolyInt([-1]), PolyInt())
        assert r.scalars == (1, y, -1, 0)


def test_aux_c_k2():
    r = aux_shape_check_C(2, 2, [1, 1])
    assert r.f == T**2 - 1 and r.f.degree == 2


def test_aux_c_k3_random():
    rng = random.Random(33)
    for _ in range(20):
        ys = [rng.randint(-3, 3) for _ in range(3)]
        r = aux_shape_check_C(3, 3, ys)
        assert r.f.degree == 3
        assert all(q.degree < 3 for q in (r.g, r.h, r.p))
        # independent symbolic product
        P = sympy_zc(3, ys[0]) * sympy_zc(3, ys[1]) * sympy_zc(3, ys[2])
        assert r.f == to_poly(P[0, 0]) and r.g == to_poly(P[0, 3])


def test_aux_c_l1_degenerate():
    r = aux_shape_check_C(1, 4, [1, -1, 2, 0])
    assert r.scalars is None and r.f.degree == 4


def test_aux_d():
    r = aux_shape_check_D(2, 1)
    assert (r.f, r.g, r.h, r.p) == (T**2 + 1, -T, -T, PolyInt([1]))
    r = aux_shape_check_D(2, 2)
    assert r.f == T**4 + 3 * T**2 + 1
    assert 2 * (r.f + r.p) == 2 * T**4 + 8 * T**2 + 4


def test_shape_violation_carries_coords():
    err = ShapeViolation("x", [(0, 1)])
    assert err.coords == [(0, 1)]


# -- trace polynomials ------------------------------------------------------


def test_psi_c_examples():
    assert psi_C(AutomorphismSpec.case_c(2, [1])) == T + 1
    # value frozen from the independent sympy product below
    assert psi_C(AutomorphismSpec.case_c(2, [1, 1])) == T**2 - 3
    assert to_poly((sympy_zc(2, 1) * sympy_zc(2, 1)).trace()) == T**2 - 3
    psi3 = psi_C(AutomorphismSpec.case_c(2, [1, 2, 1]))
    assert psi3.degree == 3
    assert psi3 == to_poly((sympy_zc(2, 1) * sympy_zc(2, 2) * sympy_zc(2, 1)).trace())


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_psi_c_degree_equals_period(l):
    rng = random.Random(l)
    for k in range(1, 7):
        orbit = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(k)]
        spec = AutomorphismSpec.case_c(l, orbit)
        psi = psi_C(spec)
        assert psi.degree == k
        for a in (-2, 0, 5):
            assert psi(a) == invariant_C(spec, a)


def test_psi_c_opaque_for_fractional_orbit():
    spec = AutomorphismSpec.case_c(2, [LocalizedAtP(1, 3, 5), LocalizedAtP(2, 1, 5)])
    assert psi_C(spec) is None
    # with beta = 1/3, d(beta) = 2: compare against sympy with rationals
    P = sympy_zc(2, sp.Rational(1, 3)) * sympy_zc(2, 2)
    for a in range(4):
        assert invariant_C(spec, a).as_fraction() == P.trace().subs(St, a)


def test_psi_bd_examples():
    assert psi_BD("D", 2, 1) == 2 * T**2 + 4
    assert psi_BD("D", 2, 2) == 2 * T**4 + 8 * T**2 + 4
    assert psi_BD("B", 2, 1) == 2 * T**2 + 5


@pytest.mark.parametrize("l", [2, 3, 4])
def test_psi_bd_even_and_degree(l):
    for k in range(1, 7):
        for case in ("D", "B"):
            psi = psi_BD(case, l, k)
            assert psi.degree == 2 * k and psi.is_even()
        assert psi_BD("D", l, k) == to_poly((sympy_zd(l) ** k).trace())


# -- point selection --------------------------------------------------------


def test_select_points_examples():
    assert select_points(T + 1, 3) == ([0, 1, 2], [1, 2, 3])
    pts, vals = select_points(2 * T**4 + 8 * T**2 + 4, 3, need_distinct_squares=True)
    assert pts == [0, 1, 2] and vals == [4, 14, 68]
    with pytest.raises(NonConstantRequired):
        select_points(PolyInt([7]), 3)


def test_select_points_skips_repeats():
    # (T-1)^2 takes 1 at 0 and 2: the scan must skip 2
    pts, vals = select_points((T - 1) ** 2, 3)
    assert pts == [0, 1, 3] and vals == [1, 0, 4]
    # T^2 - 2: values -2, -1, 2, ...; squares of -2 and 2 collide
    pts, vals = select_points(T**2 - 2, 3, need_distinct_squares=True)
    assert pts == [0, 1, 3]


# -- automorphism specs -----------------------------------------------------


def test_spec_validation():
    assert AutomorphismSpec.case_c(2, [1]).ring == Ring.localized(2)
    assert AutomorphismSpec.case_c(2, [2, 3]).ring == Ring.localized(5)
    with pytest.raises(NotAUnit):
        AutomorphismSpec.case_c(2, [0])
    with pytest.raises(NotAUnit):
        AutomorphismSpec.case_c(2, [2], ring=ZZ)
    with pytest.raises(NotAUnit):
        AutomorphismSpec.case_c(2, [LocalizedAtP(5, 2, 5)])
    with pytest.raises(ValueError):
        AutomorphismSpec("C", 2, 2, (1,), ZZ)
    with pytest.raises(RankTooSmall):
        AutomorphismSpec.case_bd("D", 1, 1)
