# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot inner loops: basis enumeration and
diagram composition.

Contract-identical to the pure-Python twin ``tlkit._kernels_py``; see
that module for the algorithm notes.  Partner tuples are 1-based,
``pairing[i-1]`` being the partner of node i.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

DEF MAX_DIM = 64


cdef long _rec(int frontier, int y_max, int n, int* partner, list out) except -1:
    cdef int size = 2 * n
    cdef int f = frontier
    cdef int cand[2 * MAX_DIM]
    cdef int ncand = 0
    cdef int j, idx
    cdef long total = 0

    while f <= size and partner[f]:
        f += 1
    if f > size:
        if out is not None:
            out.append(tuple([partner[idx] for idx in range(1, size + 1)]))
        return 1

    if f <= n:
        j = f + 1
        while j <= n and partner[j] == 0:
            if (j - f) % 2 == 1:
                cand[ncand] = j
                ncand += 1
            j += 1
        if j > n:  # region not walled off by a matched bottom node
            j = y_max + 1 if y_max + 1 > n + 1 else n + 1
            if (f + j + n) % 2 == 1:
                j += 1
            while j <= size:
                cand[ncand] = j
                ncand += 1
                j += 2
    else:
        j = f + 1
        while j <= size and partner[j] == 0:
            cand[ncand] = j
            ncand += 1
            if j + 1 > size or partner[j + 1] != 0:
                break
            j += 2

    for idx in range(ncand):
        j = cand[idx]
        partner[f] = j
        partner[j] = f
        total += _rec(f + 1, j if j > n else y_max, n, partner, out)
        partner[f] = 0
        partner[j] = 0
    return total


cdef _run_search(int dimension, list out):
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    if dimension > MAX_DIM:
        raise ValueError(f"compiled kernel supports dimension <= {MAX_DIM}")
    cdef int partner[2 * MAX_DIM + 1]
    memset(partner, 0, sizeof(partner))
    return _rec(1, 0, dimension, partner, out)


def enumerate_pairings(int dimension):
    """All noncrossing perfect matchings on 2N nodes as partner tuples,
    in ascending lexicographic order."""
    out: list = []
    _run_search(dimension, out)
    return out


def count_pairings(int dimension):
    """Number of noncrossing perfect matchings, without materializing."""
    return _run_search(dimension, None)


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def compose_pairings(bottom, top, int dimension):
    """Stack ``top`` onto ``bottom``; return (product partner tuple, number
    of closed loops) via union-find over the 3N stacking nodes."""
    cdef int n = dimension
    cdef int size3 = 3 * n
    cdef int a, b, x, r, ra, rb, node, other
    cdef int loops = 0
    cdef int* parent = <int*> calloc(size3, sizeof(int))
    cdef int* first_boundary = <int*> calloc(size3, sizeof(int))
    cdef int* result = <int*> calloc(2 * n, sizeof(int))
    if parent == NULL or first_boundary == NULL or result == NULL:
        free(parent); free(first_boundary); free(result)
        raise MemoryError()
    try:
        for x in range(size3):
            parent[x] = x
            first_boundary[x] = -1
        for a in range(1, 2 * n + 1):
            b = bottom[a - 1]
            if a < b:
                ra = _find(parent, a - 1)
                rb = _find(parent, b - 1)
                if ra != rb:
                    parent[rb] = ra
        for a in range(1, 2 * n + 1):
            b = top[a - 1]
            if a < b:
                ra = _find(parent, a + n - 1)
                rb = _find(parent, b + n - 1)
                if ra != rb:
                    parent[rb] = ra
        for x in range(size3):
            if x < n or x >= 2 * n:
                r = _find(parent, x)
                node = x + 1 if x < n else x - n + 1
                if first_boundary[r] == -1:
                    first_boundary[r] = node
                else:
                    other = first_boundary[r]
                    result[other - 1] = node
                    result[node - 1] = other
        for x in range(size3):
            if _find(parent, x) == x and first_boundary[x] == -1:
                loops += 1
        pairing = tuple([result[x] for x in range(2 * n)])
    finally:
        free(parent)
        free(first_boundary)
        free(result)
    return pairing, loops
