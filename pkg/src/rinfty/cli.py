"""Command-line front end.

Exit codes: 0 success, 2 usage or parameter error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import kernels
from .certjson import certificate_from_json, certificate_to_dict, certificate_to_json
from .errors import RinftyError
from .finite import (
    DEFAULT_CAP,
    PRESETS,
    check_inner_invariance,
    frobenius_automorphism,
    generate_group,
    identity_automorphism,
    inner_automorphism,
    preset_generators,
    transpose_inverse_automorphism,
    twisted_classes,
)
from .matrix import SquareMatrix
from .rings import ZZ, Ring
from .witness import (
    AutomorphismSpec,
    aux_shape_check_C,
    aux_shape_check_D,
    build_certificate,
    random_symplectic_word,
    twisted_product_collapse,
    verify_certificate,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3

MAX_L = 10
MAX_K = 16


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command, params):
        self.command = command
        self.params = params
        self.checks = []
        self.extra = {}
        self.elapsed = 0.0

    def add(self, name, ok, details=""):
        self.checks.append({"name": name, "ok": bool(ok), "details": details})

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks)

    def as_dict(self, timing=False):
        d = {"command": self.command, "parameters": self.params, "checks": self.checks, "ok": self.ok}
        d.update(self.extra)
        if timing:
            d["elapsed_s"] = round(self.elapsed, 4)
        return d

    def emit(self, args, lines=()):
        if args.json:
            print(json.dumps(self.as_dict(args.timing), indent=2, sort_keys=True))
            return
        print(f"{self.command}: {self.params}")
        for line in lines:
            print(line)
        for c in self.checks:
            mark = "PASS" if c["ok"] else "FAIL"
            print(f"  [{mark}] {c['name']}" + (f"  {c['details']}" if c["details"] else ""))
        print(f"{'all checks passed' if self.ok else 'FAILED'} ({self.elapsed:.3f} s)")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_ring(text):
    if text in (None, "auto"):
        return None
    if text in ("ZZ", "Z"):
        return ZZ
    if text.startswith("p:") or text.startswith("local:"):
        return Ring.localized(int(text.split(":", 1)[1]))
    raise UsageError(f"ring must be auto, ZZ or p:<prime>, got {text!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_verify_aux(args):
    if args.case not in ("C", "D"):
        raise UsageError("--case must be C or D")
    floor = 1 if args.case == "C" else 2
    if not floor <= args.l <= MAX_L:
        raise UsageError(f"--l must lie in [{floor}, {MAX_L}] for case {args.case}")
    if not 1 <= args.kmax <= MAX_K:
        raise UsageError(f"--kmax must lie in [1, {MAX_K}]")
    rep = Report("verify-aux", {"case": args.case, "l": args.l, "kmax": args.kmax,
                                "seed": args.seed, "samples": args.samples})
    rng = random.Random(args.seed)
    degrees = {}
    for k in range(1, args.kmax + 1):
        if args.case == "C":
            worst = None
            for _ in range(args.samples):
                ys = [rng.randint(-3, 3) for _ in range(k)]
                try:
                    aux_shape_check_C(args.l, k, ys)
                except RinftyError as exc:
                    worst = f"ys={ys}: {exc}"
                    break
            degrees[k] = k
            rep.add(f"k={k}: shape and deg f_k = {k}", worst is None, worst or f"{args.samples} y-tuples")
        else:
            try:
                r = aux_shape_check_D(args.l, k)
                degrees[k] = r.f.degree
                rep.add(f"k={k}: skew shape and deg f_k = {2 * k}", True, f"f_k = {r.f}")
            except RinftyError as exc:
                rep.add(f"k={k}: skew shape and deg f_k = {2 * k}", False, str(exc))
    rep.extra["deg_f"] = {str(k): v for k, v in degrees.items()}
    return rep, [], EXIT_OK if rep.ok else EXIT_VERIFY


def _spec_from_args(args):
    if args.case not in ("C", "D", "B"):
        raise UsageError("--case must be C, D or B")
    if args.case == "C":
        if args.orbit is None:
            raise UsageError("case C needs --orbit")
        return AutomorphismSpec.case_c(args.l, _int_list(args.orbit), _parse_ring(args.ring))
    if args.k is None:
        raise UsageError(f"case {args.case} needs --k")
    return AutomorphismSpec.case_bd(args.case, args.l, args.k)


def cmd_certificate(args):
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    spec = _spec_from_args(args)
    cert = build_certificate(spec, args.count)
    text = certificate_to_json(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    # re-read what was written and check it from scratch
    again = certificate_from_json(text)
    verdict = verify_certificate(again)
    rep = Report("certificate", {"case": spec.case, "l": spec.l, "k": spec.k,
                                 "orbit": [str(b) for b in spec.orbit], "ring": str(spec.ring),
                                 "count": args.count, "out": args.out})
    rep.add("certificate verified", verdict.verified, "; ".join(verdict.failures[:5]))
    d = certificate_to_dict(cert)
    rep.extra["certificate"] = {k: d[k] for k in ("points", "invariants", "psi_coeffs")}
    square = spec.case != "C"
    lines = [f"  psi(T) = {cert.psi}" if cert.psi is not None else "  psi: not integral (pointwise values)",
             "  point  invariant" + ("  invariant^2" if square else "")]
    for a, v in zip(cert.points, cert.invariant_values):
        lines.append(f"  {a:>5}  {str(v):>9}" + (f"  {str(v * v):>11}" if square else ""))
    return rep, lines, EXIT_OK if verdict.verified else EXIT_VERIFY


def cmd_check_certificate(args):
    try:
        text = Path(args.path).read_text(encoding="utf-8")
        cert = certificate_from_json(text)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    verdict = verify_certificate(cert)
    rep = Report("check-certificate", {"path": args.path})
    rep.add("certificate verified", verdict.verified)
    for f in verdict.failures:
        rep.add("failure", False, f)
    stored = cert.verdict.verified if cert.verdict is not None else None
    rep.extra["stored_verdict"] = stored
    return rep, [], EXIT_OK if verdict.verified else EXIT_VERIFY


def _parse_gens(spec, p):
    if spec in PRESETS:
        return preset_generators(spec, p)
    ring = Ring.prime_field(p)
    gens = []
    for chunk in spec.split("|"):
        rows = [_int_list(r) for r in chunk.split(";")]
        try:
            gens.append(SquareMatrix(rows, ring))
        except RinftyError as exc:
            raise UsageError(f"bad generator {chunk!r}: {exc}") from exc
    return gens


def _parse_aut(text, g):
    if text == "id":
        return identity_automorphism(g)
    if text == "frobenius":
        return frobenius_automorphism(g)
    if text == "transpose-inverse":
        return transpose_inverse_automorphism(g)
    if text.startswith("inner:"):
        h = int(text.split(":", 1)[1])
        if not 0 <= h < len(g):
            raise UsageError(f"inner:{h} out of range, group has {len(g)} elements")
        return inner_automorphism(g, h)
    raise UsageError(f"--aut must be id, inner:<i>, frobenius or transpose-inverse, got {text!r}")


def cmd_reidemeister(args):
    from .rings import is_prime

    if not is_prime(args.p):
        raise UsageError(f"--p must be prime, got {args.p}")
    g = generate_group(_parse_gens(args.gens, args.p), args.p, cap=args.cap)
    phi = _parse_aut(args.aut, g)
    classes = twisted_classes(g, phi)
    rep = Report("reidemeister", {"p": args.p, "gens": args.gens, "aut": args.aut})
    rep.extra.update({"order": len(g), "R": len(classes), "class_sizes": [len(c) for c in classes],
                      "backend": kernels.BACKEND})
    rep.add("twisted classes partition the group", sum(len(c) for c in classes) == len(g))
    if args.check_inner:
        inv = check_inner_invariance(g, phi)
        rep.add("R(phi phi_H) = R(phi) for every H", inv.ok,
                f"{len(g)} choices of H" if inv.ok else f"violations at {inv.violations[:5]}")
    lines = [f"  order = {len(g)}", f"  R(phi) = {len(classes)}",
             f"  class sizes = {[len(c) for c in classes]}"]
    return rep, lines, EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_collapse(args):
    spec = AutomorphismSpec.case_c(args.l, _int_list(args.orbit), _parse_ring(args.ring))
    rng = random.Random(args.seed)
    rep = Report("collapse", {"l": args.l, "orbit": args.orbit, "trials": args.trials, "seed": args.seed})
    bad = 0
    for _ in range(args.trials):
        D = random_symplectic_word(args.l, rng)
        r = twisted_product_collapse(D, rng.randint(-5, 5), spec)
        bad += not r.traces_equal
    rep.add("trace(P_i) = trace(P_j) in every trial", bad == 0, f"{args.trials - bad}/{args.trials}")
    return rep, [], EXIT_OK if rep.ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="include elapsed time in JSON output")

    parser = argparse.ArgumentParser(prog="rinfty", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-aux", parents=[common], help="block shape / degree checks")
    p.add_argument("--case", required=True, choices=["C", "D"])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20, help="random y-tuples per k (case C)")
    p.set_defaults(func=cmd_verify_aux)

    p = sub.add_parser("certificate", parents=[common], help="build and verify a separation certificate")
    p.add_argument("--case", required=True, choices=["C", "D", "B"])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--orbit", help="case C: comma-separated orbit beta, d(beta), ...")
    p.add_argument("--ring", default="auto", help="case C: auto, ZZ or p:<prime>")
    p.add_argument("--k", type=int, help="cases D/B: period of the ring automorphism")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--out", help="write the JSON certificate here")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("check-certificate", parents=[common], help="re-verify a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_certificate)

    p = sub.add_parser("reidemeister", parents=[common], help="twisted classes of a finite matrix group")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--gens", required=True, help=f"{', '.join(PRESETS)} or 'a,b;c,d|...'")
    p.add_argument("--aut", default="id")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--check-inner", action="store_true")
    p.set_defaults(func=cmd_reidemeister)

    p = sub.add_parser("collapse", parents=[common], help="k-fold twisted product collapse trials")
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--orbit", default="1")
    p.add_argument("--ring", default="auto")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_collapse)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        rep, lines, code = args.func(args)
    except (UsageError, RinftyError, ValueError) as exc:
        print(f"rinfty {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep.elapsed = time.perf_counter() - t0
    rep.emit(args, lines)
    return code


if __name__ == "__main__":
    sys.exit(main())
