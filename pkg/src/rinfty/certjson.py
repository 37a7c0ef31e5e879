"""Canonical JSON form of separation certificates.

Every integer is written as a decimal string and every Z_(p) value as
"num/den", so consumers without big integers lose nothing.  Keys are sorted
and the layout is fixed, which makes the bytes reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .matrix import SquareMatrix
from .rings import ZZ, LocalizedAtP, PolyInt, Ring
from .witness import AutomorphismSpec, SeparationCertificate, Verdict, verify_certificate

SCHEMA_VERSION = 1


def _scalar_out(x) -> str:
    if isinstance(x, LocalizedAtP):
        return str(x) if x.den != 1 else str(x.num)
    if isinstance(x, PolyInt):
        return str(x.leading)
    return str(int(x))


def _ring_out(ring: Ring) -> str:
    return str(ring)


def _ring_in(s: str) -> Ring:
    if s == "ZZ":
        return ZZ
    if s.startswith("Z_(") and s.endswith(")"):
        return Ring.localized(int(s[3:-1]))
    raise ValueError(f"unsupported ring {s!r}")


def _scalar_in(s: str, ring: Ring):
    q = Fraction(s)
    if ring.kind == "Z_(p)":
        return LocalizedAtP(q.numerator, q.denominator, ring.p)
    if q.denominator != 1:
        raise ValueError(f"non-integer {s!r} in {ring}")
    return q.numerator


def certificate_to_dict(cert: SeparationCertificate) -> dict:
    spec = cert.spec
    verdict = cert.verdict if cert.verdict is not None else verify_certificate(cert)
    return {
        "version": SCHEMA_VERSION,
        "case": spec.case,
        "l": spec.l,
        "k": spec.k,
        "ring": _ring_out(spec.ring),
        "orbit": [_scalar_out(b) for b in spec.orbit],
        "points": [str(a) for a in cert.points],
        "witnesses": [[[_scalar_out(x) for x in r] for r in W.rows] for W in cert.witnesses],
        "invariants": [_scalar_out(v) for v in cert.invariant_values],
        "psi_coeffs": None if cert.psi is None else [str(c) for c in cert.psi.coeffs],
        "provenance": cert.provenance,
        "verdict": {"verified": verdict.verified, "failures": list(verdict.failures)},
    }


def certificate_to_json(cert: SeparationCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def certificate_from_dict(d: dict) -> SeparationCertificate:
    """Rebuild a certificate.  The stored verdict is kept as ``cert.verdict``;
    call :func:`verify_certificate` for a fresh one."""
    if d.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported certificate version {d.get('version')!r}")
    ring = _ring_in(d.get("ring", "ZZ"))
    case, l, k = d["case"], int(d["l"]), int(d["k"])
    if case == "C":
        orbit = tuple(_scalar_in(b, ring) for b in d["orbit"])
        # no validation here: a tampered orbit should surface as a verdict failure
        spec = object.__new__(AutomorphismSpec)
        for name, val in (("case", case), ("l", l), ("period", k), ("orbit", orbit), ("ring", ring),
                          ("inner", None), ("central_sign_budget", True)):
            object.__setattr__(spec, name, val)
    else:
        spec = AutomorphismSpec.case_bd(case, l, k)
    witnesses = [SquareMatrix([[int(x) for x in r] for r in W]) for W in d["witnesses"]]
    invariants = [_scalar_in(v, ring if case == "C" else ZZ) for v in d["invariants"]]
    psi = None if d.get("psi_coeffs") is None else PolyInt(int(c) for c in d["psi_coeffs"])
    stored = d.get("verdict")
    verdict = None if stored is None else Verdict(bool(stored["verified"]), list(stored["failures"]))
    return SeparationCertificate(spec, [int(a) for a in d["points"]], witnesses, invariants, psi, verdict)


def certificate_from_json(text: str) -> SeparationCertificate:
    return certificate_from_dict(json.loads(text))
