import pytest

from rinfty.errors import CapExceeded, NotCharacteristic, NotInvertible
from rinfty.finite import (
    automorphism_from_generator_images,
    center_indices,
    check_inner_invariance,
    check_quotient_lemma,
    frobenius_automorphism,
    generate_group,
    identity_automorphism,
    inner_automorphism,
    preset_generators,
    reidemeister_number,
    scalar_subgroup,
    transpose_inverse_automorphism,
    twisted_classes,
    twisted_classes_bruteforce,
)
from rinfty.matrix import SquareMatrix
from rinfty.rings import Ring


def sl2(p):
    return generate_group(preset_generators("sl2", p))


def burnside_count(g, phi):
    # orbits of z.x = z x phi(z)^-1 = average number of fixed points
    total = 0
    for z in range(len(g)):
        w = g.inv(phi(z))
        total += sum(1 for x in range(len(g)) if g.mul(g.mul(z, x), w) == x)
    assert total % len(g) == 0
    return total // len(g)


def conjugacy_classes(g):
    classes, seen = [], set()
    for x in range(len(g)):
        if x in seen:
            continue
        cls = {g.mul(g.mul(z, x), g.inv(z)) for z in range(len(g))}
        seen |= cls
        classes.append(sorted(cls))
    return classes


def test_generate_examples():
    assert len(sl2(2)) == 6
    assert len(sl2(3)) == 24
    assert len(generate_group([SquareMatrix.identity(2, Ring.prime_field(5))])) == 1


def test_generate_errors():
    F = Ring.prime_field(3)
    with pytest.raises(NotInvertible):
        generate_group([SquareMatrix([[1, 0], [0, 0]], F)])
    with pytest.raises(CapExceeded):
        generate_group(preset_generators("sl2", 5), cap=50)


def test_presets_orders():
    assert len(generate_group(preset_generators("sp4", 2))) == 720
    assert len(generate_group(preset_generators("omega4", 2))) == 36
    assert len(generate_group(preset_generators("omega4", 3))) == 288  # 3^2 (3^2-1)^2 / 2


def test_group_table_basics():
    g = sl2(3)
    assert g.codes[0] == (1, 0, 0, 1)
    for x in range(len(g)):
        assert g.mul(x, g.inv(x)) == 0
    assert g.lookup(g.matrix(5)) == 5
    assert len(g.elements) == 24


@pytest.mark.parametrize("p,expected", [(2, 3), (3, 7)])
def test_identity_twist_is_conjugacy(p, expected):
    g = sl2(p)
    phi = identity_automorphism(g)
    classes = twisted_classes(g, phi)
    assert classes == sorted(conjugacy_classes(g))
    assert reidemeister_number(g, phi) == expected == burnside_count(g, phi)


def test_abelian_identity_twist():
    F = Ring.prime_field(7)
    g = generate_group([SquareMatrix([[1, 1], [0, 1]], F)])
    assert len(g) == 7
    assert reidemeister_number(g, identity_automorphism(g)) == 7


def test_trivial_group():
    g = generate_group([SquareMatrix.identity(2, Ring.prime_field(2))])
    phi = identity_automorphism(g)
    assert reidemeister_number(g, phi) == 1
    rep = check_inner_invariance(g, phi)
    assert rep.ok and rep.values == {0: 1}


@pytest.mark.parametrize("name,p", [("sl2", 2), ("sl2", 3), ("sl2", 5), ("omega4", 2)])
def test_partition_against_bruteforce(name, p):
    g = generate_group(preset_generators(name, p))
    for phi in (identity_automorphism(g), inner_automorphism(g, len(g) - 1), transpose_inverse_automorphism(g)):
        classes = twisted_classes(g, phi)
        assert classes == sorted(twisted_classes_bruteforce(g, phi))
        assert len(classes) == burnside_count(g, phi)
        flat = sorted(x for c in classes for x in c)
        assert flat == list(range(len(g)))


def test_identity_class_is_twisted_image():
    g = sl2(3)
    phi = transpose_inverse_automorphism(g)
    cls0 = next(c for c in twisted_classes(g, phi) if 0 in c)
    assert set(cls0) == {g.mul(z, g.inv(phi(z))) for z in range(len(g))}


@pytest.mark.parametrize("name,p", [("sl2", 2), ("sl2", 3), ("sl2", 5), ("omega4", 2)])
def test_inner_invariance_exhaustive(name, p):
    g = generate_group(preset_generators(name, p))
    assert len(g) <= 200
    for phi in (identity_automorphism(g), transpose_inverse_automorphism(g)):
        rep = check_inner_invariance(g, phi)
        assert rep.ok and len(rep.values) == len(g)
        assert set(rep.values.values()) == {rep.base}


def test_inner_invariance_values():
    rep = check_inner_invariance(sl2(2), identity_automorphism(sl2(2)))
    assert set(rep.values.values()) == {3} and len(rep.values) == 6
    rep = check_inner_invariance(sl2(3), identity_automorphism(sl2(3)))
    assert set(rep.values.values()) == {7} and len(rep.values) == 24


def test_quotient_lemma_sl2_f3():
    g = sl2(3)
    N = scalar_subgroup(g)
    assert len(N) == 2 and sorted(N) == sorted(center_indices(g))
    rep = check_quotient_lemma(g, N, identity_automorphism(g))
    assert (rep.r_group, rep.r_quotient, rep.quotient_order) == (7, 4, 12)
    assert rep.ok


def test_quotient_by_trivial_subgroup():
    g = sl2(3)
    phi = transpose_inverse_automorphism(g)
    rep = check_quotient_lemma(g, [0], phi)
    assert rep.r_group == rep.r_quotient


def test_quotient_needs_invariant_subgroup():
    g = sl2(3)
    upper = generate_group([SquareMatrix([[1, 1], [0, 1]], Ring.prime_field(3))])
    N = [g.lookup(c) for c in upper.codes]
    with pytest.raises(ValueError):
        check_quotient_lemma(g, N, identity_automorphism(g))  # not normal in SL2(F3)
    F = Ring.prime_field(3)
    # Klein four-group of diagonal sign matrices; swapping the two generators
    # is an automorphism that moves N = <diag(1, -1)>
    a, b = SquareMatrix([[1, 0], [0, 2]], F), SquareMatrix([[2, 0], [0, 1]], F)
    h = generate_group([a, b])
    assert len(h) == 4
    N = [0, h.lookup(a)]
    phi = automorphism_from_generator_images(h, [h.lookup(b), h.lookup(a)])
    with pytest.raises(NotCharacteristic):
        check_quotient_lemma(h, N, phi)
    assert check_quotient_lemma(h, N, identity_automorphism(h)).r_quotient == 2


def test_automorphism_from_generator_images():
    g = sl2(3)
    # images of the generators under an inner automorphism extend consistently
    inner = inner_automorphism(g, 5)
    phi = automorphism_from_generator_images(g, [inner(s) for s in g.generators])
    assert phi == inner
    with pytest.raises(ValueError):
        automorphism_from_generator_images(g, [0, 0])


def test_frobenius_is_identity_over_prime_field():
    g = sl2(5)
    assert frobenius_automorphism(g) == identity_automorphism(g)
