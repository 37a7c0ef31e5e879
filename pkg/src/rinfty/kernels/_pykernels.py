"""Pure-Python kernels for the finite-group oracle.

Matrices are flat row-major tuples of residues mod p.  ``_ckernels.pyx``
implements the same functions; keep the two in step.
"""


def matmul_mod(a, b, n, p):
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            s = 0
            for t in range(n):
                s += row[t] * b[t * n + j]
            out.append(s % p)
    return tuple(out)


def closure(gens, n, p, cap):
    """Breadth-first closure of ``gens`` under right multiplication.

    Returns the element list with the identity first, or None if more than
    ``cap`` elements turn up.
    """
    ident = tuple(1 if i == j else 0 for i in range(n) for j in range(n))
    elements = [ident]
    seen = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = matmul_mod(x, g, n, p)
            if y not in seen:
                if len(elements) >= cap:
                    return None
                seen[y] = len(elements)
                elements.append(y)
    return elements


def action_perms(elements, index, pairs, n, p):
    """For each (L, R) in ``pairs`` the permutation x -> index[L x R]."""
    perms = []
    for left, right in pairs:
        perm = []
        for x in elements:
            perm.append(index[matmul_mod(matmul_mod(left, x, n, p), right, n, p)])
        perms.append(perm)
    return perms


def orbit_labels(perms, size):
    """Label each point by the smallest point in its orbit under ``perms``."""
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for x in range(size):
            rx, ry = find(x), find(perm[x])
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
    return [find(x) for x in range(size)]
