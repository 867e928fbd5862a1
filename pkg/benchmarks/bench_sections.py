"""Benchmark the section component-count kernel: compiled vs pure Python.

The component audit (union-find over thousands of random path sections)
is the one hot loop in the package; path generation and all other checks
are negligible at desk scale.  Usage::

    python benchmarks/bench_sections.py [n_sections]
"""

import array
import random
import sys
import time

from traversals.analysis import SectionAuditor
from traversals.engine import generate_full_path
from traversals.generators import generate

try:
    from traversals import _sections as compiled
except ImportError:
    compiled = None
from traversals import _sections_py as pure


def sections_for(n_points, n_sections, seed):
    rng = random.Random(seed)
    a = array.array("i")
    b = array.array("i")
    for _ in range(n_sections):
        lo = rng.randrange(n_points)
        hi = rng.randrange(n_points)
        if lo > hi:
            lo, hi = hi, lo
        a.append(lo)
        b.append(hi)
    return a, b


def bench(kernel, auditor, a, b, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.section_component_counts(
            auditor._cell_of_pos, auditor._indptr, auditor._adj, a, b,
            auditor.n_cells,
        )
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    n_sections = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    cases = [
        ("z", 3, 3),
        ("z", 4, 3),
        ("maehara", 3, 3),
        ("harmonious", 4, 3),
    ]
    print(f"{'case':<24} {'points':>7} {'pure (s)':>9} {'cython (s)':>11} {'speedup':>8}")
    for kind, d, depth in cases:
        path = generate_full_path(generate(kind, d), depth, "corner")
        auditor = SectionAuditor(path)
        a, b = sections_for(len(path.points), n_sections, seed=99)
        t_py, r_py = bench(pure, auditor, a, b)
        label = f"{kind} d={d} depth={depth}"
        if compiled is None:
            print(f"{label:<24} {len(path.points):>7} {t_py:>9.3f} {'n/a':>11} {'-':>8}")
            continue
        t_cy, r_cy = bench(compiled, auditor, a, b)
        assert list(r_py) == list(r_cy), "backends disagree"
        print(
            f"{label:<24} {len(path.points):>7} {t_py:>9.3f} {t_cy:>11.3f} "
            f"{t_py / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    main()
