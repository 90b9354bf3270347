"""Command-line interface.

Subcommands: render (.geo to one SVG), frames (.geo to a numbered zoom
sequence), check (run the theorem suite and print a report), serve (start
the local evaluate endpoint).  Diagnostics go to standard error with source
positions.  Exit codes: 0 success, 1 evaluation or check failure, 2 usage
or file errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks, reportfmt, server
from .dsl import Evaluation, parse_source, run
from .errors import EmptyScene, SourceError
from .kernel import Point
from .render import (
    DEFAULT_RENDER_STYLE,
    DEFAULT_WIDTH,
    RenderStyle,
    Viewport,
    fit_viewport,
    parse_render_style,
    render_frames,
    render_svg,
)

USAGE_ERROR = 2
FAILURE = 1
DEFAULT_ASPECT = 1.0
DEFAULT_PADDING = 0.05


class _UsageError(Exception):
    pass


def _read_source(path_text: str) -> tuple[str, str]:
    path = Path(path_text)
    try:
        return path.read_text(encoding="utf-8"), path.name
    except OSError as exc:
        raise _UsageError(f"cannot read {path_text}: {exc.strerror or exc}") from None


def _load_style(path_text: str | None) -> RenderStyle:
    if path_text is None:
        return DEFAULT_RENDER_STYLE
    try:
        text = Path(path_text).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path_text}: {exc.strerror or exc}") from None
    try:
        return parse_render_style(text)
    except ValueError as exc:
        raise _UsageError(f"{path_text}: {exc}") from None


def _parse_viewport(spec_text: str | None) -> Viewport | None:
    if spec_text is None:
        return None
    parts = spec_text.split(",")
    if len(parts) not in (3, 4):
        raise _UsageError("--viewport wants cx,cy,half or cx,cy,half,aspect")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise _UsageError(f"--viewport has a non-numeric part: {spec_text}") from None
    aspect = numbers[3] if len(numbers) == 4 else DEFAULT_ASPECT
    try:
        return Viewport(Point(numbers[0], numbers[1]), numbers[2], aspect)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _evaluate_file(path_text: str) -> Evaluation:
    source, name = _read_source(path_text)
    try:
        program = parse_source(source)
    except SourceError as exc:
        print(f"{name}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        raise SystemExit(FAILURE) from None
    evaluation = run(program)
    for diagnostic in evaluation.diagnostics:
        print(
            f"{name}:{diagnostic.line}:{diagnostic.column}: {diagnostic.message}",
            file=sys.stderr,
        )
    if not evaluation.ok:
        raise SystemExit(FAILURE)
    return evaluation


def _viewport_for(evaluation: Evaluation, requested: Viewport | None, path_text: str) -> Viewport:
    if requested is not None:
        return requested
    try:
        return fit_viewport(evaluation.scene, DEFAULT_ASPECT, DEFAULT_PADDING)
    except EmptyScene:
        print(f"{Path(path_text).name}: program draws nothing", file=sys.stderr)
        raise SystemExit(FAILURE) from None


def _cmd_render(args: argparse.Namespace) -> int:
    style = _load_style(args.style)
    viewport = _parse_viewport(args.viewport)
    evaluation = _evaluate_file(args.file)
    svg = render_svg(evaluation.scene, _viewport_for(evaluation, viewport, args.file), style, args.width)
    if args.output is None:
        sys.stdout.write(svg)
    else:
        Path(args.output).write_text(svg, encoding="utf-8")
    return 0


def _cmd_frames(args: argparse.Namespace) -> int:
    style = _load_style(args.style)
    viewport = _parse_viewport(args.viewport)
    evaluation = _evaluate_file(args.file)
    base = _viewport_for(evaluation, viewport, args.file)
    try:
        documents = render_frames(evaluation.scene, base, args.zoom, args.frames, style, args.width)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.file).stem
    digits = max(3, len(str(len(documents) - 1)))
    for index, svg in enumerate(documents):
        (out_dir / f"{stem}-{index:0{digits}d}.svg").write_text(svg, encoding="utf-8")
    print(f"wrote {len(documents)} frames to {out_dir}", file=sys.stderr)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.suite == "all":
        names = None
    else:
        names = {part.strip() for part in args.suite.split(",") if part.strip()}
        unknown = sorted(names - set(checks.CHECK_NAMES))
        if unknown:
            raise _UsageError(
                f"unknown checks: {', '.join(unknown)}; choose from {', '.join(checks.CHECK_NAMES)}"
            )
        if not names:
            raise _UsageError("--suite got an empty check list")
    config = checks.TrialConfig(trials=args.trials, seed=args.seed, tolerance=args.tol)
    reports = checks.run_suite(config, names)
    if args.json:
        sys.stdout.write(reportfmt.reports_to_json(reports) + "\n")
    else:
        sys.stdout.write(reportfmt.format_report_lines(reports))
    return 0 if all(r.passed for r in reports) else FAILURE


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        server.serve(args.host, args.port)
    except KeyboardInterrupt:
        pass
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigonlab",
        description="Evaluate triangle construction programs and render them as SVG.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    render_p = sub.add_parser("render", help="evaluate a .geo file and write one SVG")
    render_p.add_argument("file", help=".geo source file")
    render_p.add_argument("-o", "--output", help="output SVG path (default: stdout)")
    render_p.add_argument("--width", type=float, default=DEFAULT_WIDTH, help="document width in pixels")
    render_p.add_argument("--viewport", help="cx,cy,half[,aspect] (default: fit the scene)")
    render_p.add_argument("--style", help="render style file")
    render_p.set_defaults(func=_cmd_render)

    frames_p = sub.add_parser("frames", help="render a zoom sequence of SVG files")
    frames_p.add_argument("file", help=".geo source file")
    frames_p.add_argument("--frames", type=int, required=True, help="number of frames")
    frames_p.add_argument("--zoom", type=float, required=True, help="half-extent factor per frame")
    frames_p.add_argument("--out-dir", default="frames", help="output directory")
    frames_p.add_argument("--width", type=float, default=DEFAULT_WIDTH, help="document width in pixels")
    frames_p.add_argument("--viewport", help="cx,cy,half[,aspect] for frame 0 (default: fit)")
    frames_p.add_argument("--style", help="render style file")
    frames_p.set_defaults(func=_cmd_frames)

    check_p = sub.add_parser("check", help="run the theorem check suite")
    check_p.add_argument("--suite", default="all", help="'all' or comma-separated check names")
    check_p.add_argument("--trials", type=int, default=100, help="random trials per check")
    check_p.add_argument("--seed", type=int, default=0, help="trial seed")
    check_p.add_argument("--tol", type=float, default=1e-9, help="residual tolerance")
    check_p.add_argument("--json", action="store_true", help="emit the JSON report form")
    check_p.set_defaults(func=_cmd_check)

    serve_p = sub.add_parser("serve", help="start the local evaluate endpoint")
    serve_p.add_argument("--port", type=int, default=server.DEFAULT_PORT, help="listen port")
    serve_p.add_argument("--host", default=server.DEFAULT_HOST, help="listen address")
    serve_p.set_defaults(func=_cmd_serve)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"trigonlab: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SystemExit as exc:
        return int(exc.code or 0)
    except OSError as exc:
        print(f"trigonlab: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    raise SystemExit(cli_main())
