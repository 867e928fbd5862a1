# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for counting connected components of path sections.

Input is a path prepared as flat integer arrays (see
traversals.analysis.SectionAuditor): ``cell_of_pos`` maps each path
position to a cell id, ``indptr``/``adj`` hold cell adjacency in CSR
form.  For each queried section [a, b] the kernel runs a stamped
union-find over the cells visited in that range.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "cython"


def section_component_counts(cell_of_pos, indptr, adj, sections_a, sections_b,
                             int n_cells):
    cdef int[::1] cid = cell_of_pos
    cdef int[::1] ip = indptr
    cdef int[::1] ad = adj
    cdef int[::1] sa = sections_a
    cdef int[::1] sb = sections_b

    cdef int n_sections = sa.shape[0]
    cdef int* parent = <int*> PyMem_Malloc(n_cells * sizeof(int))
    cdef int* stamp = <int*> PyMem_Malloc(n_cells * sizeof(int))
    if parent == NULL or stamp == NULL:
        PyMem_Free(parent)
        PyMem_Free(stamp)
        raise MemoryError()

    cdef int k, c
    for k in range(n_cells):
        stamp[k] = -1

    out = bytearray(4 * n_sections)
    cdef unsigned char[::1] raw = out
    cdef int* result = <int*> &raw[0]

    cdef int sec, a, b, p, comps, idx, nb, r1, r2
    try:
        for sec in range(n_sections):
            a = sa[sec]
            b = sb[sec]
            comps = 0
            for p in range(a, b + 1):
                c = cid[p]
                if stamp[c] == sec:
                    continue
                stamp[c] = sec
                parent[c] = c
                comps += 1
                for idx in range(ip[c], ip[c + 1]):
                    nb = ad[idx]
                    if stamp[nb] != sec:
                        continue
                    r1 = c
                    while parent[r1] != r1:
                        parent[r1] = parent[parent[r1]]
                        r1 = parent[r1]
                    r2 = nb
                    while parent[r2] != r2:
                        parent[r2] = parent[parent[r2]]
                        r2 = parent[r2]
                    if r1 != r2:
                        parent[r1] = r2
                        comps -= 1
            result[sec] = comps
    finally:
        PyMem_Free(parent)
        PyMem_Free(stamp)

    import array
    counts = array.array("i")
    counts.frombytes(bytes(out))
    return counts
