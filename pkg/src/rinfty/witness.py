"""Witness matrix families, trace invariants and separation certificates.

Three families, one per root system type:

* C (Sp_2l):  X(T) = [[T+I_{l-1}, I], [-I, 0]],  Y(y) = I + yI,  Z_y(T) = X(T) Y(y)
* D (O_2l):   Z(T) = [X(T), Y(T)], a commutator, so it lies in the derived group
* B (O_2l+1): 1 + Z(T)

(``+`` between blocks is a direct sum.)  For an automorphism in standard form
the trace of a product of these matrices is an integer polynomial of positive
degree; points where it takes pairwise different values (different squares for
D and B, where a central sign may creep in) give pairwise non-twisted-conjugate
group elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NonConstantRequired,
    NotAUnit,
    NotInGroup,
    RankTooSmall,
    ShapeViolation,
)
from .groups import FormKind, FormTag, form_matrix, is_member
from .matrix import SquareMatrix, commutator, direct_sum
from .rings import (
    NEG_INFINITY,
    ZZ,
    ZZ_T,
    LocalizedAtP,
    PolyInt,
    Ring,
    T,
    is_prime,
    join_rings,
    ring_of,
)

CASES = ("C", "D", "B")


def _need_rank(l: int, floor: int, what: str):
    if l < floor:
        raise RankTooSmall(f"{what} needs l >= {floor}, got l={l}")


def _ring_for(*values) -> Ring:
    ring = ZZ
    for v in values:
        ring = join_rings(ring, ring_of(v))
    return ring


# ---------------------------------------------------------------------------
# case C


def x_matrix_C(l: int, t, ring: Ring | None = None) -> SquareMatrix:
    _need_rank(l, 1, "family C")
    ring = ring or _ring_for(t)
    n = 2 * l
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = t
    for i in range(1, l):
        rows[i][i] = 1
    for i in range(l):
        rows[i][l + i] = 1
        rows[l + i][i] = -1
    return SquareMatrix(rows, ring)


def y_matrix_C(l: int, y, ring: Ring | None = None) -> SquareMatrix:
    _need_rank(l, 1, "family C")
    ring = ring or _ring_for(y)
    return SquareMatrix.diag([1] * l + [y] * l, ring)


def z_matrix_C(l: int, t, y, ring: Ring | None = None) -> SquareMatrix:
    """Closed form of X(t) Y(y): [[t+I_{l-1}, yI], [-I, 0]].  No unit check on y."""
    _need_rank(l, 1, "family C")
    ring = ring or _ring_for(t, y)
    n = 2 * l
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = t
    for i in range(1, l):
        rows[i][i] = 1
    for i in range(l):
        rows[i][l + i] = y
        rows[l + i][i] = -1
    return SquareMatrix(rows, ring)


def family_C(l: int, t, y, unit_ring: Ring | None = None):
    """Return (X(t), Y(y), X(t) Y(y)).

    ``y`` must be a unit of ``unit_ring`` (default: the ring ``y`` belongs to,
    so a bare int is judged in Z).
    """
    _need_rank(l, 1, "family C")
    unit_ring = unit_ring or ring_of(y)
    if not unit_ring.is_unit(y):
        raise NotAUnit(f"{y} is not a unit of {unit_ring}")
    ring = _ring_for(t, y)
    X = x_matrix_C(l, t, ring)
    Y = y_matrix_C(l, y, ring)
    return X, Y, X * Y


# ---------------------------------------------------------------------------
# cases D and B


def _bd_blocks(l: int, first, second, ring: Ring) -> SquareMatrix:
    pad = [SquareMatrix.identity(l - 2, ring)] if l > 2 else []
    return direct_sum(SquareMatrix(first, ring), *pad, SquareMatrix(second, ring), *pad)


def x_matrix_D(l: int, t, ring: Ring | None = None) -> SquareMatrix:
    _need_rank(l, 2, "family D")
    ring = ring or _ring_for(t)
    return _bd_blocks(l, [[1, t], [0, 1]], [[1, 0], [-t, 1]], ring)


def y_matrix_D(l: int, t, ring: Ring | None = None) -> SquareMatrix:
    _need_rank(l, 2, "family D")
    ring = ring or _ring_for(t)
    return _bd_blocks(l, [[t, 1], [-1, 0]], [[0, 1], [-1, t]], ring)


def z_matrix_D(l: int, t, ring: Ring | None = None) -> SquareMatrix:
    """Closed form of the commutator [X(t), Y(t)]."""
    _need_rank(l, 2, "family D")
    ring = ring or _ring_for(t)
    s = t * t + 1
    return _bd_blocks(l, [[s, -t], [-t, 1]], [[1, t], [t, s]], ring)


def family_D(l: int, t):
    """Return (X(t), Y(t), Z(t)) with Z computed as the commutator X^-1 Y^-1 X Y."""
    _need_rank(l, 2, "family D")
    ring = _ring_for(t)
    X, Y = x_matrix_D(l, t, ring), y_matrix_D(l, t, ring)
    Z = commutator(X, Y)
    if Z != z_matrix_D(l, t, ring):
        raise AssertionError("commutator does not match the closed form of Z")
    return X, Y, Z


def z_matrix_B(l: int, t, ring: Ring | None = None) -> SquareMatrix:
    ring = ring or _ring_for(t)
    return direct_sum(SquareMatrix.identity(1, ring), z_matrix_D(l, t, ring))


def family_B(l: int, t) -> SquareMatrix:
    _need_rank(l, 2, "family B")
    _, _, Z = family_D(l, t)
    return direct_sum(SquareMatrix.identity(1, Z.ring), Z)


# ---------------------------------------------------------------------------
# block shape / degree statements


@dataclass
class AuxReport:
    case: str
    l: int
    k: int
    f: PolyInt
    g: PolyInt
    h: PolyInt
    p: PolyInt
    scalars: tuple | None = None  # (a, b, c, d) for case C with l >= 2
    ys: tuple = ()

    @property
    def degrees(self):
        return {name: getattr(self, name).degree for name in "fghp"}


def _as_poly(x) -> PolyInt:
    return x if isinstance(x, PolyInt) else PolyInt.const(x)


def _shape_mismatches(M: SquareMatrix, expected) -> list:
    return [
        (i, j)
        for i in range(M.n)
        for j in range(M.n)
        if M[i, j] != expected[i][j]
    ]


def product_C(l: int, ys, t=T) -> SquareMatrix:
    """Z_{y_1}(t) ... Z_{y_k}(t)."""
    ring = _ring_for(t, *ys)
    P = SquareMatrix.identity(2 * l, ring)
    for y in ys:
        P = P * z_matrix_C(l, t, y, ring)
    return P


def aux_shape_check_C(l: int, k: int, ys) -> AuxReport:
    """Check the block pattern of Z_{y_1}(T)...Z_{y_k}(T) and the degree bounds.

    Expected shape [[f + aI, g + bI], [h + cI, p + dI]] with deg f = k and
    deg g, h, p < k.  For l = 1 the scalar blocks are empty and only the
    degrees are checked.
    """
    _need_rank(l, 1, "aux_shape_check_C")
    ys = tuple(ys)
    if k < 1 or len(ys) != k:
        raise ValueError(f"need k >= 1 and exactly k ys, got k={k}, {len(ys)} ys")
    P = product_C(l, ys)
    f, g, h, p = (_as_poly(P[0, 0]), _as_poly(P[0, l]), _as_poly(P[l, 0]), _as_poly(P[l, l]))
    scalars = None
    if l >= 2:
        a, b, c, d = P[1, 1], P[1, l + 1], P[l + 1, 1], P[l + 1, l + 1]
        scalars = (a, b, c, d)
        expected = [[0] * (2 * l) for _ in range(2 * l)]
        for bi, (corner, s) in enumerate(((f, a), (g, b), (h, c), (p, d))):
            r0, c0 = (bi // 2) * l, (bi % 2) * l
            expected[r0][c0] = corner
            for i in range(1, l):
                expected[r0 + i][c0 + i] = s
        bad = _shape_mismatches(P, expected)
        bad += [(i, i) for i, s in zip((1, 1, l + 1, l + 1), (a, b, c, d)) if _as_poly(s).degree > 0]
        if bad:
            raise ShapeViolation(f"case C product (l={l}, ys={ys}) breaks block shape", bad)
    bad = []
    if f.degree != k:
        bad.append((0, 0))
    for pos, q in (((0, l), g), ((l, 0), h), ((l, l), p)):
        if not q.degree < k:
            bad.append(pos)
    if bad:
        raise ShapeViolation(f"case C product (l={l}, ys={ys}) breaks degree bounds", bad)
    return AuxReport("C", l, k, f, g, h, p, scalars, ys)


def aux_shape_check_D(l: int, k: int) -> AuxReport:
    """Check Z(T)^k = [[f,g],[h,p]] + I + [[p,-h],[-g,f]] + I with deg f = 2k, others < 2k."""
    _need_rank(l, 2, "aux_shape_check_D")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    P = z_matrix_D(l, T) ** k
    f, g, h, p = (_as_poly(P[0, 0]), _as_poly(P[0, 1]), _as_poly(P[1, 0]), _as_poly(P[1, 1]))
    expected = _bd_blocks(l, [[f, g], [h, p]], [[p, -h], [-g, f]], ZZ_T).rows
    bad = _shape_mismatches(P, expected)
    if bad:
        raise ShapeViolation(f"Z(T)^{k} (l={l}) breaks the skew block shape", bad)
    if f.degree != 2 * k:
        bad.append((0, 0))
    for pos, q in (((0, 1), g), ((1, 0), h), ((1, 1), p)):
        if not q.degree < 2 * k:
            bad.append(pos)
    if bad:
        raise ShapeViolation(f"Z(T)^{k} (l={l}) breaks degree bounds", bad)
    return AuxReport("D", l, k, f, g, h, p)


# ---------------------------------------------------------------------------
# automorphism data


def _auto_localization(values) -> Ring:
    """Smallest Z_(p) in which every integer in ``values`` is a unit."""
    if any(v == 0 for v in values):
        raise NotAUnit("0 is not a unit of any ring")
    p = 2
    while True:
        if is_prime(p) and all(v % p for v in values):
            return Ring.localized(p)
        p += 1


@dataclass(frozen=True)
class AutomorphismSpec:
    """An automorphism of the group in standard form, reduced to the data the
    certificate needs.

    Case C: phi(A) = H1 H2 d(A) H2^-1 H1^-1 with H2 = Y(beta); only the orbit
    beta, d(beta), ..., d^{k-1}(beta) of the ring automorphism is kept.
    Cases D/B: phi = inner * central * ring automorphism; only the period k is
    kept, the central factor is assumed to aggregate to +-I.
    """

    case: str
    l: int
    period: int
    orbit: tuple = ()
    ring: Ring = ZZ
    inner: SquareMatrix | None = None
    central_sign_budget: bool = True

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}, got {self.case!r}")
        FormKind.for_case(self.case, self.l)
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.case == "C":
            if not self.orbit:
                raise ValueError("case C needs a nonempty orbit")
            if self.period != len(self.orbit):
                raise ValueError("period must equal the orbit length")
            for b in self.orbit:
                if not self.ring.is_unit(b):
                    raise NotAUnit(f"orbit entry {b} is not a unit of {self.ring}")
        elif self.orbit:
            raise ValueError("cases D/B carry no orbit")
        if self.inner is not None and not is_member(self.inner, self.form):
            raise NotInGroup("inner conjugator is not in the group")

    @classmethod
    def case_c(cls, l: int, orbit, ring: Ring | None = None, inner=None) -> "AutomorphismSpec":
        """Orbit entries may be ints or LocalizedAtP values.

        Without an explicit ring, integer orbits are read in the smallest
        localization Z_(p) where every entry is a unit (so only 0 is refused).
        """
        orbit = tuple(orbit)
        if ring is None:
            loc = [b for b in orbit if isinstance(b, LocalizedAtP)]
            if loc:
                ring = Ring.localized(loc[0].p)
            else:
                ring = _auto_localization(orbit)
        orbit = tuple(ring.coerce(b) for b in orbit)
        return cls("C", l, len(orbit), orbit, ring, inner)

    @classmethod
    def case_bd(cls, case: str, l: int, k: int, inner=None) -> "AutomorphismSpec":
        return cls(case, l, k, (), ZZ, inner)

    @property
    def form(self) -> FormKind:
        return FormKind.for_case(self.case, self.l)

    @property
    def k(self) -> int:
        return self.period

    def integer_orbit(self):
        """The orbit as plain ints, or None if some entry is not an integer."""
        out = []
        for b in self.orbit:
            if isinstance(b, int):
                out.append(b)
            elif isinstance(b, LocalizedAtP) and b.is_integer():
                out.append(b.num)
            else:
                return None
        return out

    def without_inner(self) -> "AutomorphismSpec":
        """Drop H1: composing with an inner automorphism does not change R(phi)."""
        return AutomorphismSpec(self.case, self.l, self.period, self.orbit, self.ring, None,
                                self.central_sign_budget)


# ---------------------------------------------------------------------------
# invariants


def psi_C(spec: AutomorphismSpec):
    """tr(Z_beta(T) Z_{d(beta)}(T) ... Z_{d^{k-1}(beta)}(T)) as a PolyInt.

    Returns None when the orbit is not integral; use :func:`invariant_C`
    for pointwise values then.
    """
    if spec.case != "C":
        raise ValueError("psi_C needs a case C spec")
    ys = spec.integer_orbit()
    if ys is None:
        return None
    return _as_poly(product_C(spec.l, ys).trace())


def invariant_C(spec: AutomorphismSpec, a: int):
    """psi evaluated at an integer point, computed in the automorphism's ring."""
    return product_C(spec.l, [spec.ring.coerce(b) for b in spec.orbit], spec.ring.coerce(a)).trace()


def psi_BD(case: str, l: int, k: int) -> PolyInt:
    """tr(Z(T)^k), plus 1 for case B."""
    if case not in ("D", "B"):
        raise ValueError(f"psi_BD needs case D or B, got {case!r}")
    _need_rank(l, 2, "psi_BD")
    if k < 1:
        raise ValueError("k must be >= 1")
    tr = _as_poly((z_matrix_D(l, T) ** k).trace())
    return tr + 1 if case == "B" else tr


def select_points(psi, count: int, need_distinct_squares: bool = False, degree=None):
    """Scan 0, 1, 2, ... keeping points whose value (or squared value) is new.

    ``psi`` is a PolyInt, or any callable on ints when ``degree`` is given.
    A degree-d polynomial repeats a value (or square) at most 2d times, which
    bounds the scan.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if degree is None:
        degree = psi.degree
    if degree < 1:
        raise NonConstantRequired(f"point selection needs a nonconstant polynomial, got {psi}")
    limit = count * 2 * degree + 1
    seen, points, values = set(), [], []
    for a in itertools.count():
        if a > limit:
            raise AssertionError("point scan exceeded its bound")
        v = psi(a)
        key = v * v if need_distinct_squares else v
        if key not in seen:
            seen.add(key)
            points.append(a)
            values.append(v)
            if len(points) == count:
                return points, values


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Verdict:
    verified: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.verified


@dataclass
class SeparationCertificate:
    spec: AutomorphismSpec
    points: list
    witnesses: list
    invariant_values: list
    psi: PolyInt | None
    verdict: Verdict | None = None

    @property
    def provenance(self) -> str:
        if self.spec.case == "C":
            return "X(a) in Sp_2l(Z) by the form identity"
        if self.spec.case == "D":
            return "Z(a) = [X(a), Y(a)] with X(a), Y(a) in O_2l(Z, f_D); commutator lies in Omega"
        return "1 + Z(a), Z(a) = [X(a), Y(a)]; commutator lies in Omega_2l+1(Z, f_B)"


def witness_matrix(case: str, l: int, a: int) -> SquareMatrix:
    if case == "C":
        return x_matrix_C(l, a, ZZ)
    if case == "D":
        return z_matrix_D(l, a, ZZ)
    return z_matrix_B(l, a, ZZ)


def build_certificate(spec: AutomorphismSpec, count: int) -> SeparationCertificate:
    spec = spec.without_inner()
    if spec.case == "C":
        psi = psi_C(spec)
        if psi is not None:
            points, values = select_points(psi, count)
        else:
            points, values = select_points(lambda a: invariant_C(spec, a), count, degree=spec.k)
    else:
        psi = psi_BD(spec.case, spec.l, spec.k)
        points, values = select_points(psi, count, need_distinct_squares=True)
    witnesses = [witness_matrix(spec.case, spec.l, a) for a in points]
    cert = SeparationCertificate(spec, points, witnesses, values, psi)
    cert.verdict = verify_certificate(cert)
    return cert


# The verifier deliberately avoids SquareMatrix and the family builders above:
# it recomputes everything from the closed forms with nested lists of Fractions.


def _mm(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def _tr(A):
    return sum(A[i][i] for i in range(len(A)))


def _eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _plain_form(case, l):
    n = 2 * l
    F = [[Fraction(0)] * n for _ in range(n)]
    for i in range(l):
        F[i][l + i] = Fraction(1)
        F[l + i][i] = Fraction(-1 if case == "C" else 1)
    if case == "B":
        F = [[Fraction(1)] + [Fraction(0)] * n] + [[Fraction(0)] + r for r in F]
    return F


def _plain_expected(case, l, a):
    n = 2 * l
    if case == "C":
        E = _eye(n)
        E[0][0] = Fraction(a)
        for i in range(l):
            E[i][l + i] = Fraction(1)
            E[l + i][l + i] = Fraction(0)
            E[l + i][i] = Fraction(-1)
        return E
    E = _eye(n)
    E[0][0], E[0][1], E[1][0], E[1][1] = a * a + 1, -a, -a, 1
    E[l][l], E[l][l + 1], E[l + 1][l], E[l + 1][l + 1] = 1, a, a, a * a + 1
    E = [[Fraction(x) for x in r] for r in E]
    if case == "B":
        E = [[Fraction(1)] + [Fraction(0)] * n] + [[Fraction(0)] + r for r in E]
    return E


def _frac(x) -> Fraction:
    if isinstance(x, LocalizedAtP):
        return x.as_fraction()
    if isinstance(x, PolyInt):
        if not x.is_constant():
            raise TypeError("non-constant polynomial where a scalar was expected")
        return Fraction(x.leading)
    if isinstance(x, Fraction):
        return x
    return Fraction(int(x))


def verify_certificate(cert: SeparationCertificate) -> Verdict:
    """Recheck a certificate from scratch; problems become verdict details."""
    spec = cert.spec
    case, l, k = spec.case, spec.l, spec.k
    fails = []
    N = len(cert.points)
    if not (N == len(cert.witnesses) == len(cert.invariant_values)):
        fails.append(f"length: {N} points, {len(cert.witnesses)} witnesses, "
                     f"{len(cert.invariant_values)} invariants")
        return Verdict(False, fails)

    for i, j in itertools.combinations(range(N), 2):
        if cert.points[i] == cert.points[j]:
            fails.append(f"distinctness: points {i} and {j} are both {cert.points[i]}")

    if case == "C":
        if len(spec.orbit) != k:
            fails.append(f"orbit: length {len(spec.orbit)} != period {k}")
        for m, b in enumerate(spec.orbit):
            fb = _frac(b)
            if spec.ring.kind == "Z_(p)":
                unit = fb.numerator % spec.ring.p != 0 and fb.denominator % spec.ring.p != 0
            else:
                unit = fb in (1, -1)
            if not unit:
                fails.append(f"orbit: entry {m} ({b}) is not a unit of {spec.ring}")
        orbit = [_frac(b) for b in spec.orbit]

    F = _plain_form(case, l)
    dim = len(F)
    for i, (a, W) in enumerate(zip(cert.points, cert.witnesses)):
        rows = W.tolist() if isinstance(W, SquareMatrix) else W
        if len(rows) != dim or any(len(r) != dim for r in rows):
            fails.append(f"witness {i}: wrong dimension")
            continue
        try:
            A = [[_frac(x) for x in r] for r in rows]
        except TypeError as exc:
            fails.append(f"witness {i}: {exc}")
            continue
        G = _mm(_mm(A, F), [list(c) for c in zip(*A)])
        bad = [(r, c) for r in range(dim) for c in range(dim) if G[r][c] != F[r][c]]
        if bad:
            fails.append(f"membership: witness {i} fails A[f]A^T = [f] at {bad[0]}")
        E = _plain_expected(case, l, a)
        bad = [(r, c) for r in range(dim) for c in range(dim) if A[r][c] != E[r][c]]
        if bad:
            fails.append(f"witness {i}: differs from the family matrix at point {a}, entry {bad[0]}")
        if case == "C":
            P = _eye(dim)
            for b in orbit:
                Y = _eye(dim)
                for t in range(l, dim):
                    Y[t][t] = b
                P = _mm(P, _mm(A, Y))
            value = _tr(P)
        else:
            P = _eye(dim)
            for _ in range(k):
                P = _mm(P, A)
            value = _tr(P)
        try:
            claimed = _frac(cert.invariant_values[i])
        except (TypeError, ValueError):
            claimed = None
        if claimed != value:
            fails.append(f"invariant {i}: claimed {cert.invariant_values[i]}, recomputed {value}")
        if cert.psi is not None and Fraction(cert.psi(a)) != value:
            fails.append(f"psi: psi({a}) = {cert.psi(a)} but the trace is {value}")

    if cert.psi is not None:
        want = k if case == "C" else 2 * k
        if cert.psi.degree != want:
            fails.append(f"psi: degree {cert.psi.degree}, expected {want}")
        if case != "C" and not cert.psi.is_even():
            fails.append("psi: odd powers of T in a D/B trace polynomial")

    vals = []
    for x in cert.invariant_values:
        try:
            vals.append(_frac(x))
        except (TypeError, ValueError):
            vals.append(None)
    for i, j in itertools.combinations(range(N), 2):
        if vals[i] is None or vals[j] is None:
            continue
        if case == "C":
            if vals[i] == vals[j]:
                fails.append(f"distinctness: invariants {i} and {j} are equal ({vals[i]})")
        elif vals[i] * vals[i] == vals[j] * vals[j]:
            fails.append(f"distinctness: invariants {i} and {j} have equal squares")

    return Verdict(not fails, fails)


# ---------------------------------------------------------------------------
# the k-fold collapse


@dataclass
class CollapseResult:
    A_i: SquareMatrix
    A_j: SquareMatrix
    P_i: SquareMatrix
    P_j: SquareMatrix
    conjugator: SquareMatrix
    trace_i: object
    trace_j: object

    @property
    def traces_equal(self) -> bool:
        return self.trace_i == self.trace_j


def twisted_product_collapse(D: SquareMatrix, a_j: int, spec: AutomorphismSpec) -> CollapseResult:
    """Build A_i = D A_j phi(D^-1) and show the k-fold products are conjugate.

    phi(A) = H2 d(A) H2^-1 with H2 = Y(beta).  D must be an integer matrix in
    Sp_2l, so the ring automorphism d fixes D and A_j = X(a_j), and it moves
    Y(d^m beta) to Y(d^{m+1} beta).  Applying d^m to A_i H2 = D Z_beta(a_j) d(D^-1)
    for m = 0..k-1 and multiplying telescopes to P_i = D P_j D^-1.
    """
    if spec.case != "C":
        raise ValueError("twisted_product_collapse needs a case C spec")
    if spec.integer_orbit() is None:
        raise ValueError("collapse needs integer orbit values")
    l, ring = spec.l, spec.ring
    if D.n != 2 * l:
        raise DimensionMismatch(f"D is {D.n}x{D.n}, expected {2 * l}")
    if D.ring != ZZ or not is_member(D, spec.form):
        raise NotInGroup("D must be an integer matrix in Sp_2l")
    Dr = D.over(ring)
    Dinv = Dr.inverse()
    A_j = x_matrix_C(l, a_j, ring)
    Ys = [y_matrix_C(l, b, ring) for b in spec.orbit]
    H2 = Ys[0]
    A_i = Dr * A_j * H2 * Dinv * H2.inverse()

    # d^m applied to both sides of A_i H2 = D Z_beta(a_j) D^-1
    lhs = [Dr * A_j * Y * Dinv for Y in Ys]
    if lhs[0] != A_i * H2:
        raise AssertionError("twisted relation failed at m = 0")
    P_i = SquareMatrix.identity(2 * l, ring)
    for M in lhs:
        P_i = P_i * M
    P_j = SquareMatrix.identity(2 * l, ring)
    for Y in Ys:
        P_j = P_j * (A_j * Y)
    if P_i != Dr * P_j * Dinv:
        raise AssertionError("k-fold product did not collapse to a conjugate")
    return CollapseResult(A_i, A_j, P_i, P_j, Dr, P_i.trace(), P_j.trace())


def symplectic_generators(l: int):
    """A few integer elements of Sp_2l used to build random conjugators."""
    J = form_matrix(FormKind(FormTag.SYMPLECTIC_J, l))
    gens = [J]
    for x in (-2, -1, 1, 2):
        X = x_matrix_C(l, x, ZZ)
        gens += [X, X.transpose()]
    return gens


def random_symplectic_word(l: int, rng, length: int = 6) -> SquareMatrix:
    gens = symplectic_generators(l)
    D = SquareMatrix.identity(2 * l)
    for _ in range(length):
        D = D * rng.choice(gens)
    return D
