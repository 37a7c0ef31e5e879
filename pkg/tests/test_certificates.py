import copy
import json
import random

import pytest

from rinfty.certjson import certificate_from_json, certificate_to_json
from rinfty.errors import NotAUnit, NotInGroup
from rinfty.groups import FormKind, FormTag, is_member
from rinfty.matrix import SquareMatrix
from rinfty.rings import LocalizedAtP
from rinfty.witness import (
    AutomorphismSpec,
    build_certificate,
    random_symplectic_word,
    twisted_product_collapse,
    verify_certificate,
    x_matrix_C,
)


def test_case_c_certificate():
    cert = build_certificate(AutomorphismSpec.case_c(2, [1]), 3)
    assert cert.points == [0, 1, 2]
    assert cert.witnesses == [x_matrix_C(2, a) for a in (0, 1, 2)]
    assert cert.invariant_values == [1, 2, 3]
    assert cert.verdict.verified


def test_case_d_certificate():
    cert = build_certificate(AutomorphismSpec.case_bd("D", 2, 1), 3)
    # psi_1 = 2T^2 + 4
    assert cert.invariant_values == [4, 6, 12]
    cert = build_certificate(AutomorphismSpec.case_bd("D", 2, 2), 3)
    assert cert.invariant_values == [4, 14, 68]
    assert cert.verdict.verified


def test_non_unit_orbit():
    with pytest.raises(NotAUnit):
        build_certificate(AutomorphismSpec.case_c(2, [0]), 3)


def test_inner_part_is_dropped():
    H = x_matrix_C(2, 3)
    spec = AutomorphismSpec.case_c(2, [1], inner=H)
    cert = build_certificate(spec, 4)
    assert cert.spec.inner is None and cert.verdict.verified
    with pytest.raises(NotInGroup):
        AutomorphismSpec.case_c(2, [1], inner=SquareMatrix.diag([2, 1, 1, 1]))


def test_fractional_orbit_certificate():
    spec = AutomorphismSpec.case_c(2, [LocalizedAtP(1, 3, 5), LocalizedAtP(3, 1, 5)])
    cert = build_certificate(spec, 12)
    assert cert.psi is None and cert.verdict.verified
    assert len(set(cert.invariant_values)) == 12


@pytest.mark.parametrize(
    "spec",
    [
        AutomorphismSpec.case_c(1, [1]),
        AutomorphismSpec.case_c(2, [-1, 1]),
        AutomorphismSpec.case_c(3, [2, 3]),
        AutomorphismSpec.case_c(4, [1, 2, 3, 5]),
        AutomorphismSpec.case_bd("D", 3, 2),
        AutomorphismSpec.case_bd("B", 3, 1),
        AutomorphismSpec.case_bd("B", 2, 3),
    ],
)
def test_round_trip_verifies(spec):
    cert = build_certificate(spec, 20)
    assert cert.verdict.verified, cert.verdict.failures
    kind = FormKind.for_case(spec.case, spec.l)
    assert all(is_member(W, kind) for W in cert.witnesses)
    if spec.case == "C":
        assert len(set(cert.invariant_values)) == 20
    else:
        assert len({v * v for v in cert.invariant_values}) == 20


def test_tamper_witness_entry():
    cert = build_certificate(AutomorphismSpec.case_c(2, [1]), 5)
    bad = copy.copy(cert)
    rows = bad.witnesses[3].tolist()
    rows[0][2] += 1
    bad.witnesses = list(cert.witnesses)
    bad.witnesses[3] = SquareMatrix(rows)
    v = verify_certificate(bad)
    assert not v.verified
    assert any(f.startswith("membership: witness 3") for f in v.failures)


def test_tamper_entry_that_stays_in_group():
    # bumping the T-slot gives X(a+1), still symplectic: caught by the family check
    cert = build_certificate(AutomorphismSpec.case_c(2, [1]), 5)
    rows = cert.witnesses[2].tolist()
    rows[0][0] += 1
    cert.witnesses[2] = SquareMatrix(rows)
    v = verify_certificate(cert)
    assert not v.verified
    assert any("witness 2: differs" in f for f in v.failures)
    assert not any(f.startswith("membership") for f in v.failures)


def test_tamper_duplicate_point():
    cert = build_certificate(AutomorphismSpec.case_bd("D", 2, 1), 5)
    cert.points[4] = cert.points[1]
    cert.witnesses[4] = cert.witnesses[1]
    cert.invariant_values[4] = cert.invariant_values[1]
    v = verify_certificate(cert)
    assert not v.verified
    assert any(f.startswith("distinctness: points 1 and 4") for f in v.failures)


def test_tamper_invariant_swap():
    cert = build_certificate(AutomorphismSpec.case_c(3, [2, 3]), 6)
    iv = cert.invariant_values
    iv[0], iv[5] = iv[5], iv[0]
    v = verify_certificate(cert)
    assert [f.split(":")[0] for f in v.failures] == ["invariant 0", "invariant 5"]


def test_json_round_trip_and_determinism():
    spec = AutomorphismSpec.case_c(3, [2, 3])
    a = certificate_to_json(build_certificate(spec, 15))
    b = certificate_to_json(build_certificate(spec, 15))
    assert a == b
    d = json.loads(a)
    assert set(d) >= {"case", "l", "k", "orbit", "points", "witnesses", "invariants", "psi_coeffs", "version"}
    assert all(isinstance(x, str) for x in d["points"] + d["invariants"] + d["psi_coeffs"])
    back = certificate_from_json(a)
    assert verify_certificate(back).verified
    assert certificate_to_json(back) == a


def test_json_round_trip_fractional_and_bd():
    for spec in (AutomorphismSpec.case_c(2, [LocalizedAtP(1, 3, 5), 2]), AutomorphismSpec.case_bd("B", 2, 2)):
        text = certificate_to_json(build_certificate(spec, 8))
        assert verify_certificate(certificate_from_json(text)).verified


def test_json_tamper_orbit():
    d = json.loads(certificate_to_json(build_certificate(AutomorphismSpec.case_c(2, [1]), 4)))
    d["orbit"] = ["10"]
    d["ring"] = "Z_(5)"
    v = verify_certificate(certificate_from_json(json.dumps(d)))
    assert not v.verified and any(f.startswith("orbit: entry 0") for f in v.failures)


# -- collapse ---------------------------------------------------------------


def test_collapse_identity_conjugator():
    spec = AutomorphismSpec.case_c(2, [1])
    r = twisted_product_collapse(SquareMatrix.identity(4), 3, spec)
    assert r.A_i.over(spec.ring) == r.A_j
    assert r.P_i == r.P_j and r.traces_equal


def test_collapse_example():
    spec = AutomorphismSpec.case_c(2, [1])
    r = twisted_product_collapse(x_matrix_C(2, 1), 2, spec)
    assert r.traces_equal
    assert r.trace_j == 3  # psi(2) = 2 + 1


def test_collapse_random_words():
    rng = random.Random(8)
    for orbit in ([1, 1], [2, 3], [-1, 5, 7]):
        spec = AutomorphismSpec.case_c(3, orbit)
        for _ in range(10):
            D = random_symplectic_word(3, rng)
            r = twisted_product_collapse(D, rng.randint(-4, 4), spec)
            assert r.traces_equal


def test_collapse_rejects_non_members():
    with pytest.raises(NotInGroup):
        twisted_product_collapse(SquareMatrix.diag([2, 1, 1, 1]), 0, AutomorphismSpec.case_c(2, [1]))
