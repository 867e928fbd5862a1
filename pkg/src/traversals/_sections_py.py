"""Pure-Python fallback for the section component-count kernel.

Same contract as the compiled ``_sections`` module; used when the
extension is unavailable.  Kept free of per-section allocations: the
union-find arrays are reused across queries via stamping.
"""

from __future__ import annotations

import array

BACKEND = "python"


def section_component_counts(cell_of_pos, indptr, adj, sections_a, sections_b,
                             n_cells):
    parent = [0] * n_cells
    stamp = [-1] * n_cells
    out = array.array("i", bytes(4 * len(sections_a)))
    for sec in range(len(sections_a)):
        a = sections_a[sec]
        b = sections_b[sec]
        comps = 0
        for p in range(a, b + 1):
            c = cell_of_pos[p]
            if stamp[c] == sec:
                continue
            stamp[c] = sec
            parent[c] = c
            comps += 1
            for idx in range(indptr[c], indptr[c + 1]):
                nb = adj[idx]
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
        out[sec] = comps
    return out
