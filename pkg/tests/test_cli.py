"""The command-line surface: output fidelity and exit codes."""

import io
import sys

import pytest

from traversals.cli import main
from traversals.engine import generate_full_path
from traversals.generators import generate
from traversals.notation import parse_definition


def run(argv, stdin=""):
    old_in = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        import contextlib

        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old_in
    return code, out.getvalue(), err.getvalue()


DESCRIBE_GOLDENS = [
    ("z", 3, "z_d3.txt"),
    ("u", 3, "u_d3.txt"),
    ("gray", 3, "gray_d3.txt"),
    ("double-gray", 3, "double-gray_d3.txt"),
    ("inside-out", 3, "inside-out_d3.txt"),
    ("hill-z", 3, "hill-z_d3.txt"),
    ("maehara", 3, "maehara_d3.txt"),
    ("base-camp", 3, "base-camp_d3.txt"),
    ("harmonious", 3, "harmonious_d3.txt"),
    ("alfa", 3, "alfa_d3.txt"),
    ("beta", 3, "beta_d3.txt"),
    ("butz", 3, "butz_d3.txt"),
    ("peano", 3, "peano_d3.txt"),
    ("coil", 3, "coil_d3.txt"),
    ("half-coil", 3, "half-coil_d3.txt"),
    ("meurthe", 3, "meurthe_d3.txt"),
]


@pytest.mark.parametrize("kind,d,fname", DESCRIBE_GOLDENS)
def test_describe_matches_goldens(kind, d, fname, golden):
    code, out, _ = run(["describe", kind, str(d)])
    assert code == 0
    assert out.strip() == golden(fname)


@pytest.mark.parametrize("kind", ["peano", "coil", "half-coil", "meurthe"])
def test_describe_peano_family_two_dimensions(kind, golden):
    """Two-dimensional forms, hand-derived from the stated rules.

    Cross-validated elsewhere: depth-2 face-continuity and the facet
    restriction of the three-dimensional curves onto these orders.
    """
    code, out, _ = run(["describe", kind, "2"])
    assert code == 0
    assert out.strip() == golden(f"{kind}_d2_derived.txt")


def test_describe_z_one_dimension():
    code, out, _ = run(["describe", "z", "1"])
    assert code == 0
    assert out.strip() == "[1} 1 [1}"


def test_describe_beta_low_dimension_is_usage_error():
    code, out, err = run(["describe", "beta", "2"])
    assert code == 2
    assert "Beta" in err or "beta" in err


def test_describe_unknown_kind():
    code, _, err = run(["describe", "lebesgue", "2"])
    assert code == 2


def test_describe_fixed_curve_without_dimension():
    code, out, _ = run(["describe", "meander2d"])
    assert code == 0
    assert out.startswith("[2 1} 1 [2 1}")


def test_path_piped_from_describe_matches_library():
    kinds = [
        ("z", 3), ("u", 3), ("gray", 3), ("double-gray", 3), ("inside-out", 3),
        ("hill-z", 3), ("maehara", 3), ("base-camp", 3), ("harmonious", 3),
        ("alfa", 3), ("beta", 3), ("butz", 3),
        ("peano", 2), ("coil", 2), ("half-coil", 2), ("meurthe", 2),
        ("harmonious", 4), ("z", 4),
    ]
    for kind, d in kinds:
        _, definition, _ = run(["describe", kind, str(d)])
        for depth in (1, 2):
            code, out, _ = run(
                ["path", "-", "--depth", str(depth)], stdin=definition
            )
            assert code == 0
            lines = [l for l in out.splitlines() if not l.startswith("#")]
            pts = [tuple(int(x) for x in l.split()) for l in lines]
            expect = generate_full_path(generate(kind, d), depth, "corner").points
            assert tuple(pts) == expect, (kind, d, depth)


def test_path_header_records_parameters():
    code, out, _ = run(["path", "harmonious", "2", "--depth", "1"])
    assert code == 0
    head = out.splitlines()[0]
    assert head.startswith("#")
    for token in ("d=2", "depth=1", "origin=corner", "units="):
        assert token in head


def test_path_depth_zero_first_origin_is_zeros():
    code, out, _ = run(
        ["path", "-", "--depth", "0", "--origin", "first"], stdin="[1 2 3} 1 [1 2 3}"
    )
    assert code == 0
    assert out.splitlines()[1] == "0 0 0"


def test_path_cells_flag_halves_coordinates():
    code, out, _ = run(["path", "u", "2", "--depth", "1", "--cells"])
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines == ["0 0", "1 0", "1 1", "0 1"]


def test_path_exponent_two_matches_squared_hilbert_order(golden):
    _, definition, _ = run(["describe", "harmonious", "2"])
    code, out, _ = run(
        ["path", "-", "--depth", "1", "--exponent", "2"], stdin=definition
    )
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(lines) == 16
    assert all(len(l.split()) == 4 for l in lines)
    sq = parse_definition(golden("squared_hilbert_d2.txt"))
    expect = generate_full_path(sq, 1, "corner").points
    got = tuple(tuple(int(x) for x in l.split()) for l in lines)
    assert got == expect


def test_path_exponent_two_rejects_shape_definitions():
    _, definition, _ = run(["describe", "polya2d"])
    code, _, err = run(
        ["path", "-", "--depth", "1", "--exponent", "2"], stdin=definition
    )
    assert code == 2


def test_path_parse_error_exit_code():
    code, _, err = run(["path", "-", "--depth", "1"], stdin="[1 2] nonsense")
    assert code == 2


def test_check_palindromic_holds_exit_zero():
    code, out, _ = run(
        ["check", "double-gray", "3", "--property", "palindromic", "--depth", "3"]
    )
    assert code == 0
    assert out.strip() == "palindromic double-gray 3 3 holds"


def test_check_bbox_reports_ratio():
    code, out, _ = run(
        ["check", "alfa", "3", "--property", "bbox", "--depth", "2"]
    )
    assert code == 0
    name, kind, d, depth, verdict, ratio = out.split()
    assert verdict == "holds"
    from fractions import Fraction

    assert Fraction(ratio) <= 4


def test_check_continuity_failure_exit_one():
    code, out, _ = run(["check", "z", "3", "--property", "continuity"])
    assert code == 1
    assert "fails" in out


def test_check_multiple_properties():
    code, out, _ = run(
        [
            "check",
            "double-gray",
            "3",
            "--property",
            "palindromic,straight-jumping,base-pattern",
            "--depth",
            "2",
        ]
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_check_unknown_property():
    code, _, err = run(["check", "z", "2", "--property", "sparkliness"])
    assert code == 2


def test_plot_writes_svg(tmp_path):
    out_file = tmp_path / "curve.svg"
    code, _, _ = run(
        ["plot", "meander2d", "--depth", "2", "--out", str(out_file)]
    )
    assert code == 0
    svg = out_file.read_text()
    assert svg.startswith("<svg")
    assert "polyline" in svg
    assert svg.count(",") >= 81


def test_plot_three_dimensional_projection(tmp_path):
    out_file = tmp_path / "curve3.svg"
    code, _, _ = run(["plot", "butz", "3", "--depth", "2", "--out", str(out_file)])
    assert code == 0
    assert "polyline" in out_file.read_text()


def test_plot_depth_zero_single_dot():
    code, out, _ = run(["plot", "harmonious", "2", "--depth", "0"])
    assert code == 0
    assert "circle" in out


def test_plot_peano_level_one_has_nine_vertices():
    code, out, _ = run(["plot", "peano", "2", "--depth", "1"])
    assert code == 0
    assert out.count(",") == 9


def test_plot_rejects_high_dimensions():
    code, _, err = run(["plot", "harmonious", "4", "--depth", "1"])
    assert code == 2


def test_usage_error_exit_code():
    code, _, _ = run(["path"])
    assert code == 2


def test_check_accepts_definition_files(tmp_path):
    f = tmp_path / "rule.txt"
    f.write_text("# a comment line\n[1 2} 1 {1 2] 2 [1 2} -1 {1 2]\n")
    code, out, _ = run(["check", str(f), "--property", "well-folded"])
    assert code == 0
    assert "holds" in out


def test_path_reads_files_and_skips_comments(tmp_path):
    f = tmp_path / "rule.txt"
    f.write_text("# description\n[1 2} 1 [1 2}\n")
    code, out, _ = run(["path", str(f), "--depth", "1"])
    assert code == 0
    assert [l for l in out.splitlines() if not l.startswith("#")] == ["1 1", "3 1"]


def test_path_centre_origin_is_symmetric():
    code, out, _ = run(["path", "u", "2", "--depth", "1", "--origin", "centre"])
    assert code == 0
    pts = [tuple(int(x) for x in l.split())
           for l in out.splitlines() if not l.startswith("#")]
    assert pts == [(-1, -1), (1, -1), (1, 1), (-1, 1)]


def test_describe_out_flag_writes_file(tmp_path):
    f = tmp_path / "def.txt"
    code, _, _ = run(["describe", "u", "2", "--out", str(f)])
    assert code == 0
    assert f.read_text().strip() == "[1 2} 1 [1 2} 2 [1 2} -1 [1 2}"
