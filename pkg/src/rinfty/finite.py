"""Brute-force twisted conjugacy in finite matrix groups over F_p.

Elements are stored as flat row-major tuples of residues (the canonical
encoding), so the lookup index is an ordinary dict.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded, DimensionMismatch, NotCharacteristic, NotInvertible
from .matrix import SquareMatrix
from .rings import Ring, is_prime

DEFAULT_CAP = 10_000


def encode(m: SquareMatrix, p: int) -> tuple:
    return tuple(int(getattr(x, "value", x)) % p for r in m.rows for x in r)


def _inverse_mod(a: tuple, n: int, p: int) -> tuple:
    M = [list(a[i * n:(i + 1) * n]) + [int(i == j) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if M[r][k] % p), None)
        if piv is None:
            raise NotInvertible("generator is singular mod p")
        M[k], M[piv] = M[piv], M[k]
        inv = pow(M[k][k], -1, p)
        M[k] = [x * inv % p for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                c = M[i][k]
                M[i] = [(x - c * y) % p for x, y in zip(M[i], M[k])]
    return tuple(x for r in M for x in r[n:])


@dataclass
class FiniteGroupTable:
    n: int
    p: int
    codes: list          # canonical encodings; codes[0] is the identity
    index: dict          # encoding -> position
    generators: list     # positions of the generators

    def __len__(self):
        return len(self.codes)

    @property
    def order(self) -> int:
        return len(self.codes)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self):
        ring = Ring.prime_field(self.p)
        return [self.matrix(i, ring) for i in range(len(self.codes))]

    def matrix(self, i: int, ring: Ring | None = None) -> SquareMatrix:
        n, c = self.n, self.codes[i]
        return SquareMatrix([c[r * n:(r + 1) * n] for r in range(n)], ring or Ring.prime_field(self.p))

    def mul(self, i: int, j: int) -> int:
        return self.index[kernels.matmul_mod(self.codes[i], self.codes[j], self.n, self.p)]

    def inv(self, i: int) -> int:
        return self.index[_inverse_mod(self.codes[i], self.n, self.p)]

    def lookup(self, m) -> int:
        code = m if isinstance(m, tuple) else encode(m, self.p)
        return self.index[code]


def generate_group(gens, p: int | None = None, cap: int = DEFAULT_CAP) -> FiniteGroupTable:
    """Enumerate the group generated by ``gens`` (SquareMatrix over F_p).

    ``p`` may be omitted when the generators carry an F_p ring.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if p is None:
        ring = gens[0].ring
        if ring.kind != "F_p":
            raise ValueError("pass p or give generators over F_p")
        p = ring.p
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise DimensionMismatch("generators of different sizes")
    codes = [encode(g, p) for g in gens]
    for c in codes:
        _inverse_mod(c, n, p)
    elements = kernels.closure(codes, n, p, cap)
    if elements is None:
        raise CapExceeded(f"group has more than {cap} elements")
    index = {c: i for i, c in enumerate(elements)}
    return FiniteGroupTable(n, p, elements, index, [index[c] for c in codes])


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class FiniteAutomorphism:
    images: tuple  # images[i] = position of phi(element i)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "FiniteAutomorphism") -> "FiniteAutomorphism":
        """self after other."""
        return FiniteAutomorphism(tuple(self.images[j] for j in other.images))


def validate_automorphism(g: FiniteGroupTable, images) -> FiniteAutomorphism:
    images = tuple(images)
    if len(images) != len(g) or sorted(images) != list(range(len(g))):
        raise ValueError("images are not a permutation of the group")
    for x in range(len(g)):
        for s in g.generators:
            if images[g.mul(x, s)] != g.mul(images[x], images[s]):
                raise ValueError("images do not respect the product")
    return FiniteAutomorphism(images)


def identity_automorphism(g: FiniteGroupTable) -> FiniteAutomorphism:
    return FiniteAutomorphism(tuple(range(len(g))))


def inner_automorphism(g: FiniteGroupTable, h: int) -> FiniteAutomorphism:
    """x -> h x h^-1."""
    perm = kernels.action_perms(g.codes, g.index, [(g.codes[h], g.codes[g.inv(h)])], g.n, g.p)[0]
    return FiniteAutomorphism(tuple(perm))


def frobenius_automorphism(g: FiniteGroupTable) -> FiniteAutomorphism:
    """Entrywise x -> x^p.  Over a prime field this is the identity map."""
    images = [g.index[tuple(pow(x, g.p, g.p) for x in c)] for c in g.codes]
    return validate_automorphism(g, images)


def transpose_inverse_automorphism(g: FiniteGroupTable) -> FiniteAutomorphism:
    """x -> (x^T)^-1; the group must be closed under transposition."""
    n = g.n
    images = []
    for i, c in enumerate(g.codes):
        t = tuple(c[r * n + s] for s in range(n) for r in range(n))
        if t not in g.index:
            raise ValueError("group is not closed under transposition")
        images.append(g.inv(g.index[t]))
    return validate_automorphism(g, images)


def automorphism_from_generator_images(g: FiniteGroupTable, gen_images) -> FiniteAutomorphism:
    """Extend generator images (positions) to the whole group, validating as we go."""
    gen_images = list(gen_images)
    if len(gen_images) != len(g.generators):
        raise ValueError("one image per generator required")
    images = [None] * len(g)
    images[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, si in zip(g.generators, gen_images):
                y, iy = g.mul(x, s), g.mul(images[x], si)
                if images[y] is None:
                    images[y] = iy
                    nxt.append(y)
                elif images[y] != iy:
                    raise ValueError("generator images do not extend to a homomorphism")
        frontier = nxt
    return validate_automorphism(g, images)


# ---------------------------------------------------------------------------
# twisted classes


def _twist_pairs(g: FiniteGroupTable, phi: FiniteAutomorphism, movers):
    # z . x = z x phi(z)^-1
    return [(g.codes[z], g.codes[g.inv(phi(z))]) for z in movers]


def _labels_to_classes(labels):
    classes = {}
    for x, r in enumerate(labels):
        classes.setdefault(r, []).append(x)
    return [classes[r] for r in sorted(classes)]


def twisted_classes(g: FiniteGroupTable, phi: FiniteAutomorphism):
    """Partition of element positions into phi-twisted conjugacy classes.

    Orbits of z . x = z x phi(z)^-1; acting by the generators is enough since
    the action composes: z.(w.x) = (zw).x.  Classes come out sorted by their
    smallest member.
    """
    perms = kernels.action_perms(g.codes, g.index, _twist_pairs(g, phi, g.generators), g.n, g.p)
    return _labels_to_classes(kernels.orbit_labels(perms, len(g)))


def twisted_classes_bruteforce(g: FiniteGroupTable, phi: FiniteAutomorphism):
    """Same partition straight from the definition, acting by every element."""
    seen = [False] * len(g)
    classes = []
    for x in range(len(g)):
        if seen[x]:
            continue
        cls = set()
        for z in range(len(g)):
            cls.add(g.mul(g.mul(z, x), g.inv(phi(z))))
        for y in cls:
            seen[y] = True
        classes.append(sorted(cls))
    return classes


def reidemeister_number(g: FiniteGroupTable, phi: FiniteAutomorphism) -> int:
    return len(twisted_classes(g, phi))


@dataclass
class InnerInvarianceReport:
    base: int
    values: dict        # H position -> R(phi phi_H)
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_inner_invariance(g: FiniteGroupTable, phi: FiniteAutomorphism) -> InnerInvarianceReport:
    """R(phi phi_H) for every H in g, compared against R(phi)."""
    base = reidemeister_number(g, phi)
    values, bad = {}, []
    for h in range(len(g)):
        r = reidemeister_number(g, phi.compose(inner_automorphism(g, h)))
        values[h] = r
        if r != base:
            bad.append(h)
    return InnerInvarianceReport(base, values, bad)


@dataclass
class QuotientReport:
    r_group: int
    r_quotient: int
    quotient_order: int

    @property
    def ok(self) -> bool:
        return self.r_group >= self.r_quotient


def check_quotient_lemma(g: FiniteGroupTable, n_indices, phi: FiniteAutomorphism) -> QuotientReport:
    """Compare R(phi) on G with R of the induced automorphism on G/N.

    Classes of G/N are the orbits of the twisted action on cosets; merging the
    G-classes along cosets computes them.
    """
    N = sorted(set(n_indices))
    nset = set(N)
    if 0 not in nset:
        raise ValueError("subgroup must contain the identity")
    for a in N:
        for b in N:
            if g.mul(a, b) not in nset:
                raise ValueError("subgroup is not closed under the product")
    for x in g.generators:
        xinv = g.inv(x)
        for a in N:
            if g.mul(g.mul(x, a), xinv) not in nset:
                raise ValueError("subgroup is not normal")
    if any(phi(a) not in nset for a in N):
        raise NotCharacteristic("automorphism does not preserve the subgroup")

    r_group = reidemeister_number(g, phi)
    perms = kernels.action_perms(g.codes, g.index, _twist_pairs(g, phi, g.generators), g.n, g.p)
    ident = g.codes[0]
    perms += kernels.action_perms(g.codes, g.index, [(ident, g.codes[a]) for a in N], g.n, g.p)
    r_quotient = len(set(kernels.orbit_labels(perms, len(g))))
    return QuotientReport(r_group, r_quotient, len(g) // len(N))


def center_indices(g: FiniteGroupTable):
    return [z for z in range(len(g)) if all(g.mul(z, s) == g.mul(s, z) for s in g.generators)]


def scalar_subgroup(g: FiniteGroupTable):
    """Positions of the scalar matrices c I in the group."""
    n = g.n
    out = []
    for i, c in enumerate(g.codes):
        if all(c[r * n + s] == (c[0] if r == s else 0) for r in range(n) for s in range(n)):
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# generator presets


def _levi(a):
    # diag(A, A^-T): preserves both J and [f_D]
    from .matrix import direct_sum

    A = SquareMatrix(a)
    return direct_sum(A, A.inverse().transpose())


def _siegel(s, lower=False):
    # [[I, S], [0, I]]
    n = len(s)
    rows = [[int(i == j) for j in range(n)] + list(s[i]) for i in range(n)]
    rows += [[0] * n + [int(i == j) for j in range(n)] for i in range(n)]
    m = SquareMatrix(rows)
    return m.transpose() if lower else m


def _preset_integer_generators(name: str):
    if name == "sl2":
        return [SquareMatrix([[1, 1], [0, 1]]), SquareMatrix([[0, 1], [-1, 0]])]
    if name == "sp4":
        # root elements of Sp_4: Levi part plus long-root transvections
        return [
            _levi([[1, 1], [0, 1]]),
            _levi([[0, 1], [1, 0]]),
            _siegel([[1, 0], [0, 0]]),
            _siegel([[1, 0], [0, 0]], lower=True),
        ]
    if name == "omega4":
        # root unipotents of the split form [f_D]; they generate Omega^+_4(p)
        return [
            _levi([[1, 1], [0, 1]]),
            _levi([[1, 0], [1, 1]]),
            _siegel([[0, 1], [-1, 0]]),
            _siegel([[0, 1], [-1, 0]], lower=True),
        ]
    raise ValueError(f"unknown preset {name!r}; choose sl2, sp4 or omega4")


PRESETS = ("sl2", "sp4", "omega4")


def preset_generators(name: str, p: int):
    ring = Ring.prime_field(p)
    return [g.over(ring) for g in _preset_integer_generators(name)]
