"""Finite-depth verification of traversal properties.

Every check here works on enumerated paths (or definitions, enumerating
internally) and returns either raw numbers or a
:class:`PropertyReport` whose failing verdicts always carry a
reproducible witness.  "Touching" means sharing a (d-1)-facet
throughout; corner contact counts as a jump.

Tile paths over simplices may visit one bounding box several times;
component counting collapses all visits of a box onto one node, so the
audit follows the box geometry of the underlying tiling.
"""

from __future__ import annotations

import array
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .engine import Path, generate_full_path
from .generators import gen_base_pattern
from .notation import SignedPermutation, TraversalDefinition

try:  # compiled kernel, with a pure-Python twin as fallback
    from . import _sections as _kernel  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _sections_py as _kernel

KERNEL_BACKEND = _kernel.BACKEND

__all__ = [
    "PropertyReport",
    "AdjacencyProfile",
    "SectionAuditor",
    "KERNEL_BACKEND",
    "check_base_pattern",
    "adjacency_profile",
    "component_count",
    "section_component_audit",
    "check_palindromic",
    "palindromic_on_cells",
    "check_dominance",
    "check_straight_jumping",
    "check_facet_order",
    "max_bbox_ratio",
    "check_well_folded_rank",
]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property check at one depth."""

    name: str
    kind: str
    dimension: int
    depth: int
    verdict: str  # 'holds' | 'fails' | 'inconclusive'
    witness: tuple = ()

    def line(self) -> str:
        parts = [self.name, self.kind or "-", str(self.dimension), str(self.depth), self.verdict]
        parts.extend(str(w) for w in self.witness)
        return " ".join(parts)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


@dataclass(frozen=True)
class AdjacencyProfile:
    face_steps: int
    other_steps: int
    max_jump: Fraction  # Chebyshev distance in cell widths
    first_jump: tuple[int, int] | None = None


def check_base_pattern(defn: TraversalDefinition) -> str:
    """Classify the move list: 'G2', 'G3', 'ZigZag' or 'Other'."""
    d = defn.dimension
    moves = defn.moves
    if len(defn.entries) == 2**d:
        if moves == gen_base_pattern(2, d):
            return "G2"
        from .generators import _zigzag_pattern

        if moves == _zigzag_pattern(d):
            return "ZigZag"
    if len(defn.entries) == 3**d and moves == gen_base_pattern(3, d):
        return "G3"
    return "Other"


def adjacency_profile(path: Path) -> AdjacencyProfile:
    """Classify consecutive steps of a cube path.

    A step is a face step when exactly one axis changes by one cell
    width and all others are unchanged; everything else is a jump.
    ``max_jump`` is the largest Chebyshev distance in cell units.
    """
    pts = path.points
    w = path.cell_units
    face = other = 0
    max_jump = Fraction(0)
    first_jump = None
    for k in range(len(pts) - 1):
        a, b = pts[k], pts[k + 1]
        diffs = [abs(x - y) for x, y in zip(a, b)]
        max_jump = max(max_jump, Fraction(max(diffs), w))
        if max(diffs) == w and sum(1 for x in diffs if x) == 1:
            face += 1
        else:
            other += 1
            if first_jump is None:
                first_jump = (k, k + 1)
    return AdjacencyProfile(face, other, max_jump, first_jump)


class SectionAuditor:
    """Prepared component-count queries over one path.

    Builds the cell table and face-adjacency structure once; individual
    sections are then counted by the compiled kernel (or its Python
    fallback).  Repeated visits to one cell collapse onto one node.
    """

    def __init__(self, path: Path):
        w = path.cell_units
        ids: dict[tuple[int, ...], int] = {}
        cell_of_pos = array.array("i")
        cells: list[tuple[int, ...]] = []
        for p in path.points:
            key = tuple(x // w for x in p)
            i = ids.get(key)
            if i is None:
                i = len(cells)
                ids[key] = i
                cells.append(key)
            cell_of_pos.append(i)
        indptr = array.array("i", [0])
        adj = array.array("i")
        for key in cells:
            for axis in range(len(key)):
                for delta in (-1, 1):
                    nb = ids.get(key[:axis] + (key[axis] + delta,) + key[axis + 1:])
                    if nb is not None:
                        adj.append(nb)
            indptr.append(len(adj))
        self.n_cells = len(cells)
        self._cell_of_pos = cell_of_pos
        self._indptr = indptr
        self._adj = adj
        self.length = len(path.points)

    def counts(self, sections: Iterable[tuple[int, int]]) -> array.array:
        a = array.array("i")
        b = array.array("i")
        for lo, hi in sections:
            if not 0 <= lo <= hi < self.length:
                raise ValueError(f"section ({lo}, {hi}) out of range")
            a.append(lo)
            b.append(hi)
        return _kernel.section_component_counts(
            self._cell_of_pos, self._indptr, self._adj, a, b, self.n_cells
        )

    def count(self, a: int, b: int) -> int:
        return self.counts([(a, b)])[0]


def component_count(path: Path, a: int, b: int) -> int:
    """Connected components of cells path[a..b] under face adjacency."""
    return SectionAuditor(path).count(a, b)


def section_component_audit(
    path: Path, n_sections: int, seed: int
) -> tuple[int, int]:
    """Max and total component count over seeded random sections."""
    auditor = SectionAuditor(path)
    rng = random.Random(seed)
    n = auditor.length
    sections = []
    for _ in range(n_sections):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a > b:
            a, b = b, a
        sections.append((a, b))
    counts = auditor.counts(sections)
    return max(counts), sum(counts)


def _facet_pairs(depth_cells: int, d: int):
    """Pairs of level-1 cells sharing a facet, as (low cell, axis)."""
    for low in range(2**d):
        bits = [(low >> j) & 1 for j in range(d)]
        for axis in range(d):
            if bits[axis] == 0:
                yield low, axis


def palindromic_on_cells(
    cells: Sequence[tuple[int, ...]], d: int, depth: int, *, name="palindromic", kind=""
) -> PropertyReport:
    """Palindromicity of an explicit cell visit order (scale-2 cube).

    For each facet between two level-1 cells, the visit sequences of the
    depth-level cells touching the facet from either side must be exact
    reverses of each other, position by position across the facet.
    """
    n_side = 2**depth  # cells per axis
    half = n_side // 2
    order = {c: k for k, c in enumerate(cells)}

    def facet_sequence(level1: int, axis: int, side_high: bool):
        sel = []
        for c in cells:
            in_cell = all(
                (c[j] >= half) == bool((level1 >> j) & 1) for j in range(d)
            )
            if not in_cell:
                continue
            boundary = half - 1 if side_high else half
            if c[axis] == boundary:
                sel.append(tuple(x for j, x in enumerate(c) if j != axis))
        return sel

    for low, axis in _facet_pairs(len(cells), d):
        high = low | (1 << axis)
        sa = facet_sequence(low, axis, side_high=True)
        sb = facet_sequence(high, axis, side_high=False)
        if sa != sb[::-1]:
            for k in range(len(sa)):
                if sa[k] != sb[len(sb) - 1 - k]:
                    return PropertyReport(
                        name, kind, d, depth, "fails", (low, high, axis + 1, k)
                    )
    return PropertyReport(name, kind, d, depth, "holds")


def check_palindromic(
    defn: TraversalDefinition, depth: int, *, kind: str = ""
) -> PropertyReport:
    if defn.scale != 2 or not defn.fills_cube:
        raise ValueError("palindromicity is checked on scale-2 cube rules")
    path = generate_full_path(defn, depth, "corner")
    return palindromic_on_cells(
        path.cell_indices(), defn.dimension, depth, kind=kind
    )


def check_dominance(path: Path, *, kind: str = "") -> PropertyReport:
    """Coordinate-wise domination must imply a later visit.

    Exhaustive over all cell pairs; cells are taken at their first
    visit.  The witness of a failure is (dominated cell, earlier cell).
    """
    seen: dict[tuple[int, ...], int] = {}
    w = path.cell_units
    for k, p in enumerate(path.points):
        seen.setdefault(tuple(x // w for x in p), k)
    cells = sorted(seen, key=seen.get)  # visit order
    d = path.dimension
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            a, b = cells[i], cells[j]
            # b visited after a; fails if b is dominated by a
            if all(x >= y for x, y in zip(a, b)) and a != b:
                return PropertyReport(
                    "dominance", kind, d, path.depth, "fails", (b, a)
                )
    return PropertyReport("dominance", kind, d, path.depth, "holds")


def check_straight_jumping(
    defn: TraversalDefinition, depth: int, *, kind: str = ""
) -> PropertyReport:
    """Consecutive cells must differ in exactly one coordinate axis."""
    path = generate_full_path(defn, depth, "corner")
    cells = path.cell_indices()
    for k in range(len(cells) - 1):
        changed = sum(1 for x, y in zip(cells[k], cells[k + 1]) if x != y)
        if changed != 1:
            return PropertyReport(
                "straight-jumping", kind, defn.dimension, depth, "fails", (k, k + 1)
            )
    return PropertyReport("straight-jumping", kind, defn.dimension, depth, "holds")


def _cube_symmetries(d: int):
    import itertools

    for unsigned in itertools.permutations(range(1, d + 1)):
        for mask in range(1 << d):
            yield SignedPermutation(
                tuple(-u if mask & (1 << j) else u for j, u in enumerate(unsigned))
            )


def check_facet_order(
    defn_d: TraversalDefinition,
    defn_dminus1: TraversalDefinition,
    facet: tuple[int, int],
    depth: int,
    *,
    kind: str = "",
) -> PropertyReport:
    """Facet restriction must reproduce the lower-dimensional traversal.

    ``facet`` is (axis, side) with 1-based axis and side -1 (low) or +1
    (high).  The cells on that facet, in visit order and with the facet
    axis projected out, must equal the depth-level path of
    ``defn_dminus1`` under one cube symmetry, searched exhaustively.
    """
    axis, side = facet
    d = defn_d.dimension
    if defn_dminus1.dimension != d - 1:
        raise ValueError("the comparison rule must have one dimension less")
    n_side = defn_d.scale**depth
    cells = generate_full_path(defn_d, depth, "corner").cell_indices()
    boundary = n_side - 1 if side > 0 else 0
    seq = [
        tuple(x for j, x in enumerate(c) if j != axis - 1)
        for c in cells
        if c[axis - 1] == boundary
    ]
    target = generate_full_path(defn_dminus1, depth, "corner").cell_indices()
    if len(seq) != len(target):
        return PropertyReport(
            "facet-order", kind, d, depth, "inconclusive", (axis, side)
        )

    def centred(c):  # odd lattice, symmetric about 0
        return tuple(2 * x - (n_side - 1) for x in c)

    seq_c = [centred(c) for c in seq]
    tgt_c = [centred(c) for c in target]
    for g in _cube_symmetries(d - 1):
        if g.apply(seq_c[0]) != tgt_c[0]:
            continue
        if all(g.apply(a) == b for a, b in zip(seq_c, tgt_c)):
            return PropertyReport("facet-order", kind, d, depth, "holds")
    return PropertyReport("facet-order", kind, d, depth, "fails", (axis, side))


def max_bbox_ratio(
    path: Path,
    max_section_count: int | None = 10000,
    seed: int = 0,
) -> Fraction:
    """Worst bounding-box volume per visited cell over curve sections.

    All contiguous sections are scanned when the path has at most 512
    points (or when ``max_section_count`` is None); longer paths are
    sampled with the seeded generator.  Exact rational result.
    """
    w = path.cell_units
    cells = [tuple(x // w for x in p) for p in path.points]
    n = len(cells)
    d = path.dimension
    best = Fraction(0)
    if max_section_count is None or n <= 512:
        for a in range(n):
            lo = list(cells[a])
            hi = list(cells[a])
            for b in range(a, n):
                c = cells[b]
                for j in range(d):
                    if c[j] < lo[j]:
                        lo[j] = c[j]
                    elif c[j] > hi[j]:
                        hi[j] = c[j]
                vol = 1
                for j in range(d):
                    vol *= hi[j] - lo[j] + 1
                r = Fraction(vol, b - a + 1)
                if r > best:
                    best = r
    else:
        rng = random.Random(seed)
        for _ in range(max_section_count):
            a = rng.randrange(n)
            b = rng.randrange(n)
            if a > b:
                a, b = b, a
            lo = list(cells[a])
            hi = list(cells[a])
            for k in range(a, b + 1):
                c = cells[k]
                for j in range(d):
                    if c[j] < lo[j]:
                        lo[j] = c[j]
                    elif c[j] > hi[j]:
                        hi[j] = c[j]
            vol = 1
            for j in range(d):
                vol *= hi[j] - lo[j] + 1
            r = Fraction(vol, b - a + 1)
            if r > best:
                best = r
    return best


def check_well_folded_rank(
    defn: TraversalDefinition, *, kind: str = ""
) -> PropertyReport:
    """First-level centres must follow the reflected-Gray rank law.

    For scale-2 cube rules: reading centre signs as bits (positive = 1,
    axis j is bit j-1) the i-th entry must encode gray(i-1).
    """
    from .bitmatrix import gray

    d = defn.dimension
    if defn.scale != 2:
        raise ValueError("the rank law applies to scale-2 rules")
    for i, c in enumerate(defn.centres):
        bits = 0
        for j, x in enumerate(c):
            if x > 0:
                bits |= 1 << j
        if bits != gray(i):
            return PropertyReport(
                "well-folded-rank", kind, d, 1, "fails", (i + 1, bits, gray(i))
            )
    return PropertyReport("well-folded-rank", kind, d, 1, "holds")
