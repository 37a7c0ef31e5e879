# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernels``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 32


cdef inline void _load(tuple t, long long *buf, int m):
    cdef int i
    for i in range(m):
        buf[i] = t[i]


cdef void _mul(const long long *a, const long long *b, long long *out, int n, long long p) noexcept nogil:
    cdef int i, j, t
    cdef long long s
    for i in range(n):
        for j in range(n):
            s = 0
            for t in range(n):
                s += a[i * n + t] * b[t * n + j]
            out[i * n + j] = s % p


cdef tuple _pack(const long long *buf, int m):
    return tuple([buf[i] for i in range(m)])


def matmul_mod(tuple a, tuple b, int n, long long p):
    cdef long long A[MAXN * MAXN]
    cdef long long B[MAXN * MAXN]
    cdef long long C[MAXN * MAXN]
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    _load(a, A, n * n)
    _load(b, B, n * n)
    _mul(A, B, C, n, p)
    return _pack(C, n * n)


def closure(list gens, int n, long long p, Py_ssize_t cap):
    cdef int m = n * n
    cdef Py_ssize_t ngens = len(gens), head = 0, gi
    cdef long long X[MAXN * MAXN]
    cdef long long Y[MAXN * MAXN]
    cdef long long *G
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    G = <long long *> malloc(max(ngens, 1) * m * sizeof(long long))
    try:
        for gi in range(ngens):
            _load(gens[gi], G + gi * m, m)
        ident = tuple([1 if i // n == i % n else 0 for i in range(m)])
        elements = [ident]
        seen = {ident: 0}
        while head < len(elements):
            _load(elements[head], X, m)
            head += 1
            for gi in range(ngens):
                _mul(X, G + gi * m, Y, n, p)
                y = _pack(Y, m)
                if y not in seen:
                    if len(elements) >= cap:
                        return None
                    seen[y] = len(elements)
                    elements.append(y)
        return elements
    finally:
        free(G)


def action_perms(list elements, dict index, list pairs, int n, long long p):
    cdef int m = n * n
    cdef long long L[MAXN * MAXN]
    cdef long long R[MAXN * MAXN]
    cdef long long X[MAXN * MAXN]
    cdef long long Y[MAXN * MAXN]
    cdef long long W[MAXN * MAXN]
    if n > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    perms = []
    for left, right in pairs:
        _load(left, L, m)
        _load(right, R, m)
        perm = []
        for x in elements:
            _load(x, X, m)
            _mul(L, X, Y, n, p)
            _mul(Y, R, W, n, p)
            perm.append(index[_pack(W, m)])
        perms.append(perm)
    return perms


cdef Py_ssize_t _find(Py_ssize_t *parent, Py_ssize_t x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_labels(list perms, Py_ssize_t size):
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(max(size, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t x, rx, ry
    try:
        for x in range(size):
            parent[x] = x
        for perm in perms:
            for x in range(size):
                rx = _find(parent, x)
                ry = _find(parent, <Py_ssize_t> perm[x])
                if rx != ry:
                    if rx < ry:
                        parent[ry] = rx
                    else:
                        parent[rx] = ry
        return [_find(parent, x) for x in range(size)]
    finally:
        free(parent)
