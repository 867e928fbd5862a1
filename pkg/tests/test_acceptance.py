"""Acceptance suite: one test per criterion, exact tolerances throughout.

Each test prints a single ``criterion NN PASS/FAIL`` line (visible with
``pytest -s``) and asserts the criterion's checks.  All comparisons are
exact: golden text equality, integer path equality, exact rational
bounds.  Run with::

    pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction as F

import pytest

from traversals.analysis import (
    adjacency_profile,
    check_dominance,
    check_facet_order,
    check_palindromic,
    check_straight_jumping,
    max_bbox_ratio,
    section_component_audit,
)
from traversals.bitmatrix import (
    CoordinateMatrix,
    cell_of_rank,
    op_column_ranking,
    op_inversion,
    op_ranking,
    op_row_coding,
    rank_of_cell,
)
from traversals.engine import (
    NotSymmetricError,
    generate_full_path,
    locate,
    squared_definition,
    squared_path,
)
from traversals.generators import (
    builtin_fixed,
    gen_maehara,
    gen_maehara_recursive,
    generate,
)
from traversals.notation import format_definition


class _Criterion:
    def __init__(self, number, description):
        self.number = number
        self.description = description
        self.start = time.perf_counter()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.number:02d} {status} ({elapsed:.2f}s): {self.description}")
        return False


def test_criterion_01_golden_definitions(golden):
    kinds = [
        "z", "u", "gray", "double-gray", "inside-out",
        "hill-z", "maehara",
        "base-camp", "harmonious", "alfa", "beta", "butz",
        "peano", "coil", "half-coil", "meurthe",
    ]
    with _Criterion(1, "printed three-dimensional definitions, token for token"):
        for kind in kinds:
            assert format_definition(generate(kind, 3)) == golden(f"{kind}_d3.txt"), kind


def test_criterion_02_matrix_calculus_worked_example():
    with _Criterion(2, "coordinate-matrix operations on the worked example"):
        x0 = CoordinateMatrix(((0, 1, 1, 0), (1, 0, 1, 1), (0, 0, 0, 1)))
        assert op_inversion(x0).bits == ((0, 0, 1, 1), (1, 1, 1, 0), (0, 1, 0, 0))
        assert op_row_coding(x0).bits == ((0, 1, 0, 1), (1, 1, 1, 0), (0, 0, 0, 1))
        assert op_ranking(x0).bits == ((0, 0, 1, 0), (1, 0, 0, 1), (1, 0, 0, 0))
        assert op_column_ranking(x0).bits == (
            (0, 1, 1, 0), (1, 1, 0, 1), (1, 1, 0, 0),
        )
        rank = rank_of_cell("u", x0)
        assert rank.value == int("011111100010", 2)
        assert cell_of_rank("u", rank, 3, 4).bits == x0.bits


def test_criterion_03_oracle_equivalence():
    with _Criterion(3, "bit-matrix rank order equals engine path order"):
        for kind in ("z", "u", "gray", "double-gray", "inside-out"):
            for d in (1, 2, 3, 4):
                defn = generate(kind, d)
                for depth in (1, 2, 3):
                    cells = generate_full_path(defn, depth, "corner").cell_indices()
                    ranked = sorted(
                        cells,
                        key=lambda c: rank_of_cell(
                            kind, CoordinateMatrix.from_cell(c, depth)
                        ).value,
                    )
                    assert list(cells) == ranked, (kind, d, depth)


def test_criterion_04_hilbert_coincidence_low_dimensions():
    """Base-camp, Harmonious, Alfa and Butz are one traversal at d <= 2.

    The emitted definitions are synonym token forms (symmetric
    sub-curves may be written forward or reversed), so identity is
    asserted as pointwise equality of the generated traversals, which
    pins every entry's geometry and direction at the tested depths.
    """
    with _Criterion(4, "Hilbert generalizations coincide at d = 1 and d = 2"):
        for d in (1, 2):
            paths = [
                tuple(
                    generate_full_path(generate(k, d), depth, "corner").points
                    for depth in (1, 2, 3)
                )
                for k in ("base-camp", "harmonious", "alfa", "butz")
            ]
            assert paths.count(paths[0]) == len(paths)


def test_criterion_05_maehara_double_construction():
    with _Criterion(5, "direct and recursive Maehara constructions agree, d = 1..6"):
        for d in range(1, 7):
            assert gen_maehara_recursive(d) == gen_maehara(d), d


CONTINUOUS = [
    ("harmonious", (2, 3, 4), 3),
    ("alfa", (2, 3, 4), 3),
    ("beta", (3, 4), 3),
    ("butz", (2, 3, 4), 3),
    ("peano", (2, 3), 2),
    ("coil", (2, 3), 2),
    ("half-coil", (2, 3), 2),
    ("meurthe", (2, 3), 2),
]


def test_criterion_06_continuity_suite():
    with _Criterion(6, "face-continuity of the connected families"):
        for kind, dims, depth in CONTINUOUS:
            for d in dims:
                prof = adjacency_profile(
                    generate_full_path(generate(kind, d), depth, "corner")
                )
                assert prof.other_steps == 0, (kind, d)


@pytest.mark.xfail(
    strict=True,
    reason=(
        "stated criterion is unattainable: the Base-camp curve is continuous "
        "but not face-continuous for d >= 3; its printed definition produces "
        "2^(d-1)+1 diagonal edge-contacts per depth-3 path at the cube-centre "
        "junctions (verified exactly), and only the other four families are "
        "claimed face-continuous in the source"
    ),
)
def test_criterion_06_continuity_suite_base_camp():
    with _Criterion(6, "face-continuity of Base-camp (documented expected failure)"):
        for d in (2, 3, 4):
            prof = adjacency_profile(
                generate_full_path(generate("base-camp", d), 3, "corner")
            )
            assert prof.other_steps == 0, d


def test_criterion_07_discontinuity_witnesses():
    with _Criterion(7, "jump witnesses for the disconnected families"):
        for kind in ("z", "u", "gray", "double-gray"):
            prof = adjacency_profile(
                generate_full_path(generate(kind, 3), 2, "corner")
            )
            assert prof.other_steps >= 1, kind
            assert prof.first_jump is not None
        io = generate("inside-out", 3)
        assert adjacency_profile(generate_full_path(io, 2, "corner")).other_steps == 0
        assert adjacency_profile(generate_full_path(io, 3, "corner")).other_steps >= 1


def test_criterion_08_property_matrix():
    with _Criterion(8, "palindromicity, straight jumping, dominance"):
        for kind in ("double-gray", "inside-out"):
            for d in (2, 3):
                assert check_palindromic(generate(kind, d), 3).holds, (kind, d)
        for kind in ("gray", "double-gray"):
            assert check_straight_jumping(generate(kind, 3), 2).holds, kind
        assert check_dominance(
            generate_full_path(generate("z", 3), 2, "corner")
        ).holds
        others = [
            "u", "gray", "double-gray", "inside-out", "hill-z", "maehara",
            "base-camp", "harmonious", "alfa", "beta", "butz",
            "peano", "coil", "half-coil", "meurthe",
        ]
        for kind in others:
            depth = 2 if generate(kind, 3).scale == 2 else 1
            report = check_dominance(
                generate_full_path(generate(kind, 3), depth, "corner"), kind=kind
            )
            assert report.verdict == "fails" and report.witness, kind


def test_criterion_09_squared_curve_goldens(golden):
    with _Criterion(9, "squared definitions and squared paths"):
        sq_io = squared_definition(generate("inside-out", 2))
        assert format_definition(sq_io) == golden("squared_inside-out_d2.txt")
        sq_h = squared_definition(generate("harmonious", 2))
        assert format_definition(sq_h) == golden("squared_hilbert_d2.txt")
        for defn, sq in ((generate("inside-out", 2), sq_io),
                         (generate("harmonious", 2), sq_h)):
            for depth in (2, 3):  # depth 3 gives the 4096-point check
                assert (
                    generate_full_path(sq, depth, "corner").points
                    == squared_path(defn, depth).points
                ), depth


def test_criterion_10_meander_appendix():
    with _Criterion(10, "Meander: published point locations and squaring failure"):
        mea = builtin_fixed("meander2d")
        half = F(1, 2)

        def contained(t, point, k, side="plus"):
            centre = locate(mea, t, k, side)
            hw = F(1, 2 * 3**k)
            return all(abs((p - half) - c) <= hw for p, c in zip(point, centre))

        tau = {
            F(17, 324): (F(2, 9), F(1, 3)),
            F(18, 324): (F(1, 3), F(1, 3)),
            F(19, 324): (F(5, 18), F(5, 18)),
            F(21, 324): (F(1, 3), F(1, 9)),
            F(22, 324): (F(2, 9), F(1, 9)),
            F(23, 324): (F(5, 18), F(1, 6)),
        }
        taup = {
            F(17, 324): (F(2, 3), F(0), F(2, 3), F(1, 3)),
            F(18, 324): (F(2, 3), F(1, 3), F(2, 3), F(1, 3)),
            F(19, 324): (F(1), F(1, 3), F(1), F(1, 3)),
            F(21, 324): (F(2, 3), F(1, 3), F(1, 3), F(0)),
            F(22, 324): (F(2, 3), F(0), F(1, 3), F(0)),
            F(23, 324): (F(1), F(1, 3), F(2, 3), F(1, 3)),
        }
        for t, pt in tau.items():
            for k in range(4, 7):
                assert contained(t, pt, k), (t, k)
            # expanding each coordinate again lands in the published cells
            for i, v in enumerate(pt):
                side = "minus" if v == 1 else "plus"
                group = taup[t][2 * i : 2 * i + 2]
                for k in range(4, 7):
                    assert contained(v, group, k, side), (t, i, k)

        with pytest.raises(NotSymmetricError):
            squared_definition(mea)

        # coordinate sharing among the six expanded points, verbatim:
        # the middle point of the first triple shares at least two
        # coordinates with each neighbour; the last two points of the
        # second triple share none.
        p17, p18, p19 = taup[F(17, 324)], taup[F(18, 324)], taup[F(19, 324)]
        assert sum(a == b for a, b in zip(p18, p17)) >= 2
        assert sum(a == b for a, b in zip(p18, p19)) >= 2
        p22, p23 = taup[F(22, 324)], taup[F(23, 324)]
        assert sum(a == b for a, b in zip(p22, p23)) == 0


def test_criterion_11_locality_bound():
    with _Criterion(11, "bounding-box volume bound for Alfa and Beta"):
        for kind in ("alfa", "beta"):
            path = generate_full_path(generate(kind, 3), 2, "corner")
            assert len(path.points) == 64
            ratio = max_bbox_ratio(path, None)  # all 2080 sections
            assert ratio <= 4, (kind, ratio)


def test_criterion_12_semi_face_continuity_audit():
    with _Criterion(12, "component bound over 10000 random sections"):
        for d in (3, 4):
            path = generate_full_path(generate("z", d), 3, "corner")
            worst, _ = section_component_audit(path, 10000, seed=20240601)
            assert worst <= 2, ("z", d, worst)
        path = generate_full_path(generate("maehara", 3), 3, "corner")
        worst, _ = section_component_audit(path, 10000, seed=20240601)
        assert worst <= 2, ("maehara", worst)


def test_criterion_13_facet_recursion():
    with _Criterion(13, "facet restrictions reproduce lower-dimensional curves"):
        h3, h2 = generate("harmonious", 3), generate("harmonious", 2)
        verdicts = {
            (axis, side): check_facet_order(h3, h2, (axis, side), 3).verdict
            for axis in (1, 2, 3)
            for side in (-1, 1)
        }
        assert verdicts.pop((1, 1)) == "fails"  # facet with midpoint (1/2, 0, 0)
        assert set(verdicts.values()) == {"holds"}
        for kind in ("peano", "coil", "half-coil", "meurthe"):
            d3, d2 = generate(kind, 3), generate(kind, 2)
            for axis in (1, 2, 3):
                for side in (-1, 1):
                    assert check_facet_order(d3, d2, (axis, side), 2).holds, (
                        kind, axis, side,
                    )


def test_criterion_14_hill_z_combinatorics():
    with _Criterion(14, "Hill-Z centre multiplicities are binomial"):
        from math import comb

        for d in (3, 4):
            defn = generate("hill-z", d)
            counts: dict = {}
            for c in defn.centres:
                counts[c] = counts.get(c, 0) + 1
            got = sorted(
                (sum(x > 0 for x in c), n) for c, n in counts.items()
            )
            assert got == [(h, comb(d, h)) for h in range(d + 1)]
