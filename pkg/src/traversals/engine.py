"""Executing traversal definitions: enumeration, location, squaring.

Paths are enumerated by depth-first expansion of the rule: every level
multiplies the running transform by the entry's signed permutation,
shifts the centre, and divides the scale.  All arithmetic is exact; the
emitted points are integers on a lattice where one lowest-level cell is
two units wide, so cube-tile centres land on odd coordinates in corner
origin mode.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator

from .notation import SignedPermutation, TraversalDefinition, Vector

__all__ = [
    "Path",
    "NotCubicError",
    "NotSymmetricError",
    "ORIGIN_MODES",
    "iter_path",
    "generate_path",
    "generate_full_path",
    "locate",
    "squared_path",
    "find_reversal_symmetry",
    "squared_definition",
]

ORIGIN_MODES = ("centre", "corner", "first", "last")


class NotCubicError(ValueError):
    """The operation needs a rule that fills the full cube grid."""


class NotSymmetricError(ValueError):
    """The rule has no reversal symmetry, so its square is not self-similar."""


@dataclass(frozen=True)
class Path:
    """An enumerated traversal: integer points in visit order.

    ``cell_units`` is the width of one lowest-level cell on the point
    lattice (2 unless the rule has off-grid centres).
    """

    points: tuple[tuple[int, ...], ...]
    dimension: int
    scale: int
    depth: int
    origin: str
    cell_units: int = 2

    def __len__(self) -> int:
        return len(self.points)

    def cell_indices(self) -> tuple[tuple[int, ...], ...]:
        """Points converted to 0-based per-axis cell indices (corner origin)."""
        if self.origin != "corner":
            raise ValueError("cell indices are defined for corner-origin paths")
        w = self.cell_units
        return tuple(tuple(x // w for x in p) for p in self.points)


def _scaled_centres(defn: TraversalDefinition) -> tuple[list[tuple[int, ...]], int]:
    """Centres as integer vectors on the 2*scale*m lattice, plus m."""
    den = lcm(1, *(x.denominator for c in defn.centres for x in c))
    m = lcm(den, 2 * defn.scale) // (2 * defn.scale)
    unit = 2 * defn.scale * m
    scaled = [tuple(int(x * unit) for x in c) for c in defn.centres]
    return scaled, m


def iter_path(defn: TraversalDefinition, depth: int) -> Iterator[tuple[int, ...]]:
    """Stream the centred-frame lattice points of the traversal.

    Memory-bounded alternative to :func:`generate_path`: points are
    yielded in visit order without materialising the whole path.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    d, s = defn.dimension, defn.scale
    centres, _ = _scaled_centres(defn)
    perms = [e.entries for e in defn.entries]
    flips = [e.reverse for e in defn.entries]
    n = len(defn.entries)
    order_fwd = range(n)
    order_rev = range(n - 1, -1, -1)

    def rec(cx: tuple[int, ...], rot: tuple[int, ...], h: int, e: int):
        if e == 0:
            yield cx
            return
        f = s ** (e - 1)
        for i in (order_fwd if h == 1 else order_rev):
            ci = centres[i]
            child = list(cx)
            for j, p in enumerate(rot):
                v = ci[j]
                if p > 0:
                    child[p - 1] += f * v
                else:
                    child[-p - 1] -= f * v
            pi = perms[i]
            nrot = tuple(
                (rot[p - 1] if p > 0 else -rot[-p - 1]) for p in pi
            )
            yield from rec(tuple(child), nrot, -h if flips[i] else h, e - 1)

    ident = tuple(range(1, d + 1))
    yield from rec((0,) * d, ident, 1, depth)


def generate_path(defn: TraversalDefinition, depth: int) -> Path:
    """The traversal at the given refinement depth, centred on the origin."""
    _, m = _scaled_centres(defn)
    points = tuple(iter_path(defn, depth))
    return Path(points, defn.dimension, defn.scale, depth, "centre", 2 * m)


def generate_full_path(
    defn: TraversalDefinition, depth: int, origin: str = "corner"
) -> Path:
    """Enumerate and translate the path according to the origin mode.

    ``corner`` puts the lexicographically smallest corner of the tile
    bounding box at the origin, ``first``/``last`` the first/last point,
    and ``centre`` leaves the exact centred frame untouched.
    """
    if origin not in ORIGIN_MODES:
        raise ValueError(f"unknown origin mode {origin!r}")
    base = generate_path(defn, depth)
    pts = base.points
    d = defn.dimension
    if origin == "centre":
        return base
    if origin == "corner":
        half = base.cell_units // 2
        shift = tuple(min(p[j] for p in pts) - half for j in range(d))
    elif origin == "first":
        shift = pts[0]
    else:
        shift = pts[-1]
    moved = tuple(tuple(x - s for x, s in zip(p, shift)) for p in pts)
    return Path(moved, d, defn.scale, depth, origin, base.cell_units)


def locate(
    defn: TraversalDefinition,
    t: Fraction,
    depth: int,
    side: str = "plus",
) -> Vector:
    """Exact centre of the depth-level cell whose parameter segment holds t.

    ``side='plus'`` breaks ties towards later cells (t in [0,1)),
    ``side='minus'`` towards earlier cells (t in (0,1]).  Runs in
    O(depth) by index arithmetic, without enumerating the path.
    """
    t = Fraction(t)
    D = len(defn.entries)
    N = D**depth
    if side == "plus":
        if not 0 <= t < 1:
            raise ValueError("plus side needs t in [0, 1)")
        i = (t * N).__floor__() + 1
    elif side == "minus":
        if not 0 < t <= 1:
            raise ValueError("minus side needs t in (0, 1]")
        i = -((-t * N).__floor__())
    else:
        raise ValueError("side must be 'plus' or 'minus'")

    d, s = defn.dimension, defn.scale
    centre = [Fraction(0)] * d
    rot = SignedPermutation.identity(d)
    scale = Fraction(1)
    for level in range(depth, 0, -1):
        z = D ** (level - 1)
        b = -(-i // z)  # ceil
        entry = defn.entries[b - 1]
        i = b * z - i + 1 if entry.reverse else i - (b - 1) * z
        step = rot.apply(defn.centres[b - 1])
        for j in range(d):
            centre[j] += scale * step[j]
        rot = rot.compose(entry)
        scale /= s
    return tuple(centre)


def _require_cubic(defn: TraversalDefinition) -> None:
    if not defn.fills_cube:
        raise NotCubicError("this operation needs a cube-filling rule")


def squared_path(defn: TraversalDefinition, depth: int) -> Path:
    """Apply the traversal to each coordinate of its own image.

    Produces the d*d-dimensional point sequence: the path at depth
    ``d * depth`` supplies, per point, d cell indices that each select a
    point of the depth-``depth`` path; the selected coordinate groups
    are concatenated.
    """
    _require_cubic(defn)
    if depth < 1:
        raise ValueError("squared paths need depth >= 1")
    d = defn.dimension
    x = generate_full_path(defn, depth)
    q = generate_full_path(defn, d * depth)
    xs = x.points
    w = q.cell_units
    out = []
    for qp in q.points:
        p = []
        for xi in qp:
            p.extend(xs[xi // w])
        out.append(tuple(p))
    return Path(tuple(out), d * d, defn.scale, depth, "corner", x.cell_units)


def find_reversal_symmetry(
    defn: TraversalDefinition,
) -> SignedPermutation | None:
    """A cube symmetry mapping the traversal onto its own reverse.

    Returns a signed permutation sigma with ``sigma(path[k]) ==
    path[n-1-k]`` for every point of the depth-2 path (confirmed at
    depth 3), or None when no such symmetry exists.
    """
    _require_cubic(defn)
    d = defn.dimension
    pts2 = generate_path(defn, 2).points
    pts3 = None
    n = len(pts2)
    first, last = pts2[0], pts2[-1]
    for unsigned in itertools.permutations(range(1, d + 1)):
        for mask in range(1 << d):
            cand = SignedPermutation(
                tuple(
                    -u if mask & (1 << j) else u
                    for j, u in enumerate(unsigned)
                )
            )
            if cand.apply(first) != last:
                continue
            if all(cand.apply(pts2[k]) == pts2[n - 1 - k] for k in range(n)):
                if pts3 is None:
                    pts3 = generate_path(defn, 3).points
                n3 = len(pts3)
                if all(
                    cand.apply(pts3[k]) == pts3[n3 - 1 - k] for k in range(n3)
                ):
                    return cand
    return None


def _plus_with_sign(base: int, b: int) -> int:
    return base + b if b > 0 else -(base - b)


def squared_definition(defn: TraversalDefinition) -> TraversalDefinition:
    """Self-similar rule for the squared traversal, in d*d dimensions.

    Requires the rule to be symmetric (reversal-free after rewriting
    every reversed entry through the reversal symmetry).  Each entry of
    the result combines the accumulated depth-d transform with the
    first-level entries selected by the cell's coordinates.
    """
    _require_cubic(defn)
    sigma = find_reversal_symmetry(defn)
    if sigma is None:
        raise NotSymmetricError("the rule is not symmetric; squaring is not self-similar")
    d, s = defn.dimension, defn.scale
    D = len(defn.entries)
    forward = [
        e if not e.reverse else SignedPermutation(e.compose(sigma).entries)
        for e in defn.entries
    ]
    low_sigma = [f.compose(sigma) for f in forward]
    centres = defn.centres
    half = Fraction(1, 2)

    sq_entries: list[SignedPermutation] = []
    sq_centres: list[Vector] = []
    for seq in itertools.product(range(D), repeat=d):
        acc = SignedPermutation.identity(d)
        centre = [Fraction(0)] * d
        scale = Fraction(1)
        for m in seq:
            step = acc.apply(centres[m])
            for j in range(d):
                centre[j] += scale * step[j]
            acc = acc.compose(forward[m])
            scale /= s
        x = [int((centre[j] + half) * D) for j in range(d)]  # 0-based cells
        ent = [0] * (d * d)
        for j in range(d):
            pj = acc.entries[j]
            mcell = x[abs(pj) - 1]
            low = forward[mcell] if pj > 0 else low_sigma[mcell]
            base = (abs(pj) - 1) * d
            for j2 in range(d):
                ent[j * d + j2] = _plus_with_sign(base, low.entries[j2])
        sq_entries.append(SignedPermutation(tuple(ent)))
        cvec: list[Fraction] = []
        for j in range(d):
            cvec.extend(centres[x[j]])
        sq_centres.append(tuple(cvec))
    return TraversalDefinition.from_centres(sq_entries, sq_centres, scale=s)
