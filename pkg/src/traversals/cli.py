"""Command-line interface.

Four subcommands on one executable:

* ``describe KIND [D]``   print a traversal definition
* ``path SOURCE``         enumerate the points of a definition
* ``check KIND|FILE [D]`` run property checks, exit 1 on failure
* ``plot SOURCE``         draw the path as an SVG polyline (d = 2 or 3)

``describe`` and ``path`` together replace the two classic tools this
interface descends from: ``describe-traversal KIND D`` maps to
``traversals describe KIND D`` and ``generate-path DEPTH EXPONENT
ORIGIN < definition`` maps to ``traversals path - --depth DEPTH
--exponent E --origin O``.

Exit codes: 0 on success (all properties hold), 1 when a checked
property fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path as FsPath

from . import analysis, engine, generators
from .notation import ParseError, TraversalDefinition, format_definition, parse_definition

KIND_SLUGS = tuple(k.value for k in generators.TraversalKind)


class _UsageError(Exception):
    pass


def _load_kind(kind: str, d: int | None) -> tuple[TraversalDefinition, str]:
    slug = kind.lower()
    if slug in KIND_SLUGS:
        if d is None:
            raise _UsageError(f"kind {kind!r} needs a dimension argument")
        try:
            return generators.generate(slug, d), slug
        except generators.BetaUndefinedError as exc:
            raise _UsageError(str(exc)) from None
    try:
        defn = generators.builtin_fixed(slug)
    except ValueError:
        known = ", ".join(KIND_SLUGS + generators.FIXED_NAMES)
        raise _UsageError(f"unknown kind {kind!r}; known kinds: {known}") from None
    if d is not None and d != defn.dimension:
        raise _UsageError(f"{kind} is a fixed {defn.dimension}-dimensional curve")
    return defn, slug


def _read_definition(source: str) -> TraversalDefinition:
    if source == "-":
        text = sys.stdin.read()
    else:
        path = FsPath(source)
        if not path.exists():
            raise _UsageError(f"no such definition file: {source}")
        text = path.read_text()
    body = "\n".join(
        line for line in text.splitlines() if not line.lstrip().startswith("#")
    )
    return parse_definition(body)


def _out_stream(args):
    if getattr(args, "out", None):
        return open(args.out, "w")
    return contextlib.nullcontext(sys.stdout)


def _cmd_describe(args) -> int:
    defn, _ = _load_kind(args.kind, args.dimension)
    with _out_stream(args) as out:
        print(format_definition(defn), file=out)
    return 0


def _cmd_path(args) -> int:
    if args.source in KIND_SLUGS or args.source.lower() in generators.FIXED_NAMES:
        defn, label = _load_kind(args.source, args.dimension)
    else:
        defn = _read_definition(args.source)
        label = "definition"
    if args.exponent == 2:
        try:
            path = engine.squared_path(defn, args.depth)
        except engine.NotCubicError as exc:
            raise _UsageError(str(exc)) from None
        if args.origin != "corner":
            raise _UsageError("squared paths are emitted with corner origin")
    else:
        path = engine.generate_full_path(defn, args.depth, args.origin)
    with _out_stream(args) as out:
        units = "cell" if args.cells else f"half-cell/{path.cell_units // 2}"
        print(
            f"# kind={label} d={path.dimension} depth={path.depth} "
            f"origin={path.origin} units={units}",
            file=out,
        )
        pts = path.cell_indices() if args.cells else path.points
        for p in pts:
            print(" ".join(str(x) for x in p), file=out)
    return 0


_PROPERTIES = (
    "base-pattern",
    "continuity",
    "palindromic",
    "straight-jumping",
    "dominance",
    "bbox",
    "components",
    "well-folded",
)


def _run_property(prop, defn, kind, depth, seed) -> analysis.PropertyReport:
    d = defn.dimension
    if prop == "base-pattern":
        cls = analysis.check_base_pattern(defn)
        verdict = "holds" if cls != "Other" else "fails"
        return analysis.PropertyReport("base-pattern", kind, d, 1, verdict, (cls,))
    if prop == "continuity":
        path = engine.generate_full_path(defn, depth, "corner")
        prof = analysis.adjacency_profile(path)
        if prof.other_steps == 0:
            return analysis.PropertyReport("continuity", kind, d, depth, "holds")
        return analysis.PropertyReport(
            "continuity", kind, d, depth, "fails", prof.first_jump
        )
    if prop == "palindromic":
        return analysis.check_palindromic(defn, depth, kind=kind)
    if prop == "straight-jumping":
        return analysis.check_straight_jumping(defn, depth, kind=kind)
    if prop == "dominance":
        path = engine.generate_full_path(defn, depth, "corner")
        return analysis.check_dominance(path, kind=kind)
    if prop == "bbox":
        path = engine.generate_full_path(defn, depth, "corner")
        ratio = analysis.max_bbox_ratio(path, seed=seed)
        verdict = "holds" if ratio <= 4 else "fails"
        return analysis.PropertyReport("bbox", kind, d, depth, verdict, (ratio,))
    if prop == "components":
        path = engine.generate_full_path(defn, depth, "corner")
        mx, _ = analysis.section_component_audit(path, 10000, seed)
        verdict = "holds" if mx <= 2 else "fails"
        return analysis.PropertyReport("components", kind, d, depth, verdict, (mx,))
    if prop == "well-folded":
        return analysis.check_well_folded_rank(defn, kind=kind)
    raise _UsageError(f"unknown property {prop!r}; known: {', '.join(_PROPERTIES)}")


def _cmd_check(args) -> int:
    if args.source in KIND_SLUGS or args.source.lower() in generators.FIXED_NAMES:
        defn, label = _load_kind(args.source, args.dimension)
    elif FsPath(args.source).exists():
        defn = _read_definition(args.source)
        label = args.source
    else:
        defn, label = _load_kind(args.source, args.dimension)
    props = [p.strip() for p in args.property.split(",") if p.strip()]
    if not props:
        raise _UsageError("no property given")
    all_hold = True
    for prop in props:
        report = _run_property(prop, defn, label, args.depth, args.seed)
        print(report.line())
        all_hold &= report.holds
    return 0 if all_hold else 1


def _svg_polyline(points, width=640, margin=20) -> str:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (width - 2 * margin) / span
    sx = lambda x: margin + (x - min(xs)) * scale
    sy = lambda y: width - margin - (y - min(ys)) * scale  # y up
    body = []
    if len(points) == 1:
        body.append(
            f'<circle cx="{sx(xs[0]):.2f}" cy="{sy(ys[0]):.2f}" r="3" fill="black"/>'
        )
    else:
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
        body.append(
            f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="1"/>'
        )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{width}" '
        f'viewBox="0 0 {width} {width}">\n' + "\n".join(body) + "\n</svg>\n"
    )


def _cmd_plot(args) -> int:
    if args.source in KIND_SLUGS or args.source.lower() in generators.FIXED_NAMES:
        defn, _ = _load_kind(args.source, args.dimension)
    else:
        defn = _read_definition(args.source)
    d = defn.dimension
    if d > 3:
        raise _UsageError("plotting supports 2 or 3 dimensions only")
    path = engine.generate_full_path(defn, args.depth, "corner")
    if d == 3:
        # fixed oblique projection
        pts = [
            (p[0] + 0.35 * p[2], p[1] + 0.2 * p[2]) for p in path.points
        ]
    elif d == 2:
        pts = [(p[0], p[1]) for p in path.points]
    else:
        pts = [(p[0], 0) for p in path.points]
    svg = _svg_polyline(pts)
    if args.out:
        FsPath(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traversals",
        description="Generate, enumerate and verify self-similar grid traversals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="print a built-in traversal definition")
    p.add_argument("kind")
    p.add_argument("dimension", nargs="?", type=int, default=None)
    p.add_argument("--out")

    p = sub.add_parser("path", help="enumerate the points visited by a traversal")
    p.add_argument("source", help="definition file, '-' for stdin, or a kind name")
    p.add_argument("dimension", nargs="?", type=int, default=None)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--exponent", type=int, choices=(1, 2), default=1)
    p.add_argument("--origin", choices=engine.ORIGIN_MODES, default="corner")
    p.add_argument("--cells", action="store_true", help="emit 0-based cell indices")
    p.add_argument("--out")

    p = sub.add_parser("check", help="verify traversal properties")
    p.add_argument("source", help="kind name or definition file")
    p.add_argument("dimension", nargs="?", type=int, default=None)
    p.add_argument("--property", required=True, help="comma-separated property names")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("plot", help="write an SVG polyline of the path")
    p.add_argument("source", help="definition file, '-' for stdin, or a kind name")
    p.add_argument("dimension", nargs="?", type=int, default=None)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--out")

    return parser


_COMMANDS = {
    "describe": _cmd_describe,
    "path": _cmd_path,
    "check": _cmd_check,
    "plot": _cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (_UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
