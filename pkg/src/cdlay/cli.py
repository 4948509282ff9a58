"""``cdlay build``: parse, measure, lay out and render one diagram."""
from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .arrows import LayoutError, layout_arrow
from .dsl import Diagram, ParseError, apply_config_override, parse_diagram
from .fixedpoint import DimensionError
from .grid import label_size_class, measure_grid
from .metrics import MetricProvider, load_metrics
from .render import Scene, assemble, emit_geometry, emit_svg

EXIT_OK, EXIT_PARSE, EXIT_LAYOUT, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("cdlay")


@dataclass
class BuildRequest:
    input: Path
    output: Optional[Path] = None
    geometry: Optional[Path] = None
    metrics: Optional[Path] = None
    overrides: list[tuple[str, str]] = field(default_factory=list)
    check: bool = False


class BuildError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


def build_scene(d: Diagram, provider: MetricProvider | None = None) -> Scene:
    """Diagram to Scene.  Raises LayoutError or DimensionError."""
    gm = measure_grid(d, provider)
    size = label_size_class(d.config)
    arrows = [layout_arrow(a, gm, provider, size) for a in d.arrows]
    return assemble(d, gm, arrows, provider)


def write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _load(req: BuildRequest) -> tuple[Diagram, Optional[MetricProvider]]:
    name = str(req.input)
    try:
        source = Path(req.input).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise BuildError(EXIT_IO, f"{name}: cannot read input: {exc}")
    try:
        d = parse_diagram(source)
    except ParseError as exc:
        raise BuildError(EXIT_PARSE, f"{name}:{exc.line}:{exc.col}: {exc.message}")
    cfg = d.config
    for key, value in req.overrides:
        try:
            cfg = apply_config_override(cfg, key, value)
        except ParseError as exc:
            raise BuildError(EXIT_PARSE, f"--set {key}={value}: {exc.message}")
    provider = None
    if req.metrics is not None:
        try:
            provider = load_metrics(req.metrics)
        except OSError as exc:
            raise BuildError(EXIT_IO, f"{req.metrics}: cannot read metrics: {exc}")
        except ValueError as exc:
            raise BuildError(EXIT_PARSE, str(exc))
    return Diagram(d.rows, d.arrows, cfg), provider


def run(req: BuildRequest) -> int:
    try:
        d, provider = _load(req)
        try:
            scene = build_scene(d, provider)
        except LayoutError as exc:
            where = f"{req.input}:{exc.spec.line}:{exc.spec.col}" if exc.spec else str(req.input)
            what = f"{exc.spec.describe()}: " if exc.spec else ""
            raise BuildError(EXIT_LAYOUT, f"{where}: {what}{exc}")
        except DimensionError as exc:
            raise BuildError(EXIT_LAYOUT, f"{req.input}: {exc}")
        if req.check:
            return EXIT_OK
        outputs = []
        if req.output is not None:
            outputs.append((req.output, emit_svg(scene)))
        if req.geometry is not None:
            outputs.append((req.geometry, emit_geometry(scene)))
        for path, text in outputs:
            try:
                write_atomic(path, text)
            except OSError as exc:
                raise BuildError(EXIT_IO, f"{path}: cannot write: {exc}")
    except BuildError as exc:
        print(f"cdlay: error: {exc}", file=sys.stderr)
        return exc.status
    return EXIT_OK


def _override(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), value


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdlay", description="Lay out .cdl commutative diagrams as SVG.")
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="compile one .cdl file")
    b.add_argument("input", type=Path)
    b.add_argument("-o", "--output", type=Path, help="SVG output path")
    b.add_argument("--dump-geometry", type=Path, metavar="JSON", help="also write the geometry dump")
    b.add_argument("--metrics", type=Path, help="metrics override file")
    b.add_argument("--set", type=_override, action="append", default=[], metavar="KEY=VALUE",
                   help="override a [config] key")
    b.add_argument("--check", action="store_true", help="lay out only, write nothing")
    b.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="cdlay: %(levelname)s: %(message)s")
    if args.output is None and not args.check:
        print("cdlay: error: -o/--output is required unless --check is given", file=sys.stderr)
        return EXIT_PARSE
    req = BuildRequest(args.input, args.output, args.dump_geometry, args.metrics, args.set, args.check)
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
