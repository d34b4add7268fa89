"""Command-line interface: reference extraction, offline comparison, serving.

Standard output carries only newline-delimited documents; diagnostics go to
standard error. Mismatching poses are normal output, not failures, so compare
exits 0 even when every frame needs correction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO

from .compare import ComparisonConfig, ReferencePose, validate_frame
from .documents import (
    parse_frame,
    parse_reference,
    serialize_feedback,
    serialize_reference,
    serialize_report,
)
from .errors import DocumentError, FitTutorError
from .session import Session, SessionConfig
from .skeleton import mirror_frame, pair_set

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BAD_OUTPUT = 3

DEFAULT_PORT = 8765


def _error_line(message: str) -> str:
    return json.dumps({"error": message}, ensure_ascii=False, separators=(",", ":"))


def _build_config(args: argparse.Namespace, base: ComparisonConfig | None = None) -> ComparisonConfig:
    base = base or ComparisonConfig()
    pairs = base.pairs
    pair_set_name = base.pair_set_name
    if args.pairs is not None:
        pair_set_name = args.pairs
        pairs = pair_set(pair_set_name)
    return ComparisonConfig(
        tolerance=args.tolerance if args.tolerance is not None else base.tolerance,
        min_score=args.min_score if args.min_score is not None else base.min_score,
        pairs=pairs,
        pair_set_name=pair_set_name,
        mode=args.mode if args.mode is not None else base.mode,
        angle_tolerance_deg=(
            args.angle_tolerance
            if args.angle_tolerance is not None
            else base.angle_tolerance_deg
        ),
    )


def cmd_extract(args: argparse.Namespace, stderr: IO[str]) -> int:
    """Read a frame document, write a reference document."""
    try:
        with open(args.input, "rb") as fh:
            frame = parse_frame(fh.read())
    except (OSError, DocumentError) as exc:
        print(f"extract: cannot read frame: {exc}", file=stderr)
        return EXIT_BAD_INPUT
    config = _build_config(args)
    name = args.name or os.path.splitext(os.path.basename(args.output))[0]
    ref = ReferencePose(name=name, frame=frame, config=config)
    validity = validate_frame(frame, config)
    if validity.invalid_pairs:
        valid = len(config.pairs) - len(validity.invalid_pairs)
        print(f"warning: {valid} of {len(config.pairs)} pairs valid", file=stderr)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(serialize_reference(ref) + "\n")
    except OSError as exc:
        print(f"extract: cannot write reference: {exc}", file=stderr)
        return EXIT_BAD_OUTPUT
    return EXIT_OK


def _compare_streams(
    ref: ReferencePose,
    config: SessionConfig,
    mirror: bool,
    want_report: bool,
    lines: IO[str],
    out: IO[str],
) -> int:
    session = Session(ref, config)
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            frame = parse_frame(line)
            if mirror:
                frame = mirror_frame(frame)
            feedback = session.feed(frame)
        except (DocumentError, FitTutorError) as exc:
            out.write(_error_line(str(exc)) + "\n")
            out.flush()
            continue
        out.write(serialize_feedback(feedback) + "\n")
        out.flush()
    if want_report:
        out.write(serialize_report(session.report()) + "\n")
        out.flush()
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, stdin: IO[str], stdout: IO[str], stderr: IO[str]) -> int:
    """Compare a frame stream against a reference, one feedback line per frame."""
    try:
        with open(args.reference, "rb") as fh:
            ref = parse_reference(fh.read())
    except (OSError, DocumentError) as exc:
        print(f"compare: cannot read reference: {exc}", file=stderr)
        return EXIT_BAD_INPUT
    comparison = _build_config(args, base=ref.config)
    if comparison != ref.config:
        # Flags changed the comparison rules; rebuild the profile to match.
        ref = ReferencePose(name=ref.name, frame=ref.frame, config=comparison)
    config = SessionConfig(comparison=comparison, debounce_frames=args.debounce)

    close_in = close_out = None
    try:
        if args.frames == "-":
            lines: IO[str] = stdin
        else:
            try:
                lines = close_in = open(args.frames, "r", encoding="utf-8")
            except OSError as exc:
                print(f"compare: cannot read frames: {exc}", file=stderr)
                return EXIT_BAD_INPUT
        if args.out == "-":
            out: IO[str] = stdout
        else:
            try:
                out = close_out = open(args.out, "w", encoding="utf-8")
            except OSError as exc:
                print(f"compare: cannot write output: {exc}", file=stderr)
                return EXIT_BAD_OUTPUT
        return _compare_streams(ref, config, args.mirror, args.report, lines, out)
    finally:
        if close_in is not None:
            close_in.close()
        if close_out is not None:
            close_out.close()


def resolve_port(flag_value: int | None) -> int:
    """Port precedence: --port flag, FITTUTOR_PORT, then the default."""
    if flag_value is not None:
        return flag_value
    return int(os.environ.get("FITTUTOR_PORT", DEFAULT_PORT))


def cmd_serve(args: argparse.Namespace, stderr: IO[str]) -> int:
    """Run the streaming session server until interrupted."""
    from .server import run_forever

    try:
        run_forever(args.host, resolve_port(args.port), refs_dir=args.refs, log=stderr)
    except KeyboardInterrupt:
        print("serve: interrupted", file=stderr)
    except OSError as exc:
        print(f"serve: {exc}", file=stderr)
        return EXIT_BAD_OUTPUT
    return EXIT_OK


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tolerance", type=float, default=None,
        help="inclusive slope-difference tolerance (default 0.5)",
    )
    parser.add_argument(
        "--min-score", type=float, default=None,
        help="confidence below which a limb is not visible (default 0.5)",
    )
    parser.add_argument(
        "--pairs", choices=("table2", "extended"), default=None,
        help="joint-pair set: arms+legs, or extended with forearms",
    )
    parser.add_argument(
        "--mode", choices=("slope", "angle"), default=None,
        help="compare raw slopes or line-orientation angles",
    )
    parser.add_argument(
        "--angle-tolerance", type=float, default=None, metavar="DEG",
        help="angle-mode tolerance in degrees (default 15)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fittutor",
        description="Posture coaching by per-limb slope comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser(
        "extract", help="build a reference document from a frame document"
    )
    p_extract.add_argument("input", help="frame document path")
    p_extract.add_argument("output", help="reference document path")
    p_extract.add_argument("--name", default=None, help="reference name (default: output stem)")
    _add_config_flags(p_extract)

    p_compare = sub.add_parser(
        "compare", help="compare a frame stream against a reference"
    )
    p_compare.add_argument("reference", help="reference document path")
    p_compare.add_argument(
        "frames", nargs="?", default="-",
        help="newline-delimited frame documents ('-' for stdin)",
    )
    p_compare.add_argument(
        "-o", "--out", default="-", help="feedback stream path ('-' for stdout)"
    )
    p_compare.add_argument(
        "--debounce", type=int, default=0, metavar="N",
        help="corrections must persist N consecutive frames (default 0: off)",
    )
    p_compare.add_argument(
        "--report", action="store_true", help="append a session report line"
    )
    p_compare.add_argument(
        "--mirror", action="store_true",
        help="mirror user frames horizontally before comparing",
    )
    _add_config_flags(p_compare)

    p_serve = sub.add_parser("serve", help="run the streaming session server")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--port", type=int, default=None,
        help=f"listen port (default: $FITTUTOR_PORT or {DEFAULT_PORT})",
    )
    p_serve.add_argument(
        "--refs", default=None, metavar="DIR",
        help="directory of <name>.json references clients may request by name",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "extract":
        return cmd_extract(args, sys.stderr)
    if args.command == "compare":
        return cmd_compare(args, sys.stdin, sys.stdout, sys.stderr)
    return cmd_serve(args, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
