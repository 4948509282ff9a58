"""Absolute placement of a laid-out diagram, SVG emission and the geometry dump.

The Scene is the single source for both outputs: the dump holds every Scene
field, so ``emit_svg(load_geometry(emit_geometry(s)))`` reproduces
``emit_svg(s)`` byte for byte.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence
from xml.sax.saxutils import escape, quoteattr

from .arrows import (ArrowGeometry, HALF_RULE, RULE, markers, shaft_ends, tile_shaft)
from .dsl import Diagram
from .fixedpoint import Sp, cleaders, fil_glue, format_pt, pt
from .grid import GridMetrics
from .metrics import DISPLAY, MetricProvider, measure, DEFAULT_PROVIDER

SCHEMA_VERSION = 1

LEADER_BOX = pt(10)
H_DASH_WEIGHTS = [1, 1, 2, 1, 1]
V_DASH_RULES = (pt("1.67"), pt("3.33"), pt("1.67"))
DIAG_DASH = (pt("3.33"), pt("3.33"))


@dataclass(frozen=True)
class PlacedCell:
    row: int
    col: int
    content: str
    rect: tuple[Sp, Sp, Sp, Sp]
    baseline: Sp
    text_x: Sp
    text_width: Sp
    font_size: Sp


@dataclass(frozen=True)
class Stroke:
    arrow: int
    start: tuple[Sp, Sp]
    end: tuple[Sp, Sp]
    width: Sp
    style: str
    dash: Optional[tuple[Sp, ...]] = None


@dataclass(frozen=True)
class PlacedMarker:
    arrow: int
    kind: str
    position: tuple[Sp, Sp]
    direction: tuple[int, int]


@dataclass(frozen=True)
class PlacedLabel:
    arrow: int
    text: str
    side: str
    size: str
    baseline: tuple[Sp, Sp]
    width: Sp
    height: Sp
    depth: Sp


@dataclass(frozen=True)
class ArrowRecord:
    """Source-frame geometry of one arrow plus its frame origin on the canvas."""

    at: tuple[int, int]
    offset: tuple[int, int]
    origin: tuple[Sp, Sp]
    first: tuple[Sp, Sp]
    second: tuple[Sp, Sp]
    shaft: str
    tail: Optional[str]
    head: Optional[str]
    svertex: bool
    tvertex: bool
    slope: Optional[int] = None
    segments: tuple[tuple[Sp, Sp, Sp, Sp], ...] = ()


@dataclass(frozen=True)
class Scene:
    canvas: tuple[Sp, Sp]
    margin: Sp = 0
    grid: dict = field(default_factory=dict)
    cells: tuple[PlacedCell, ...] = ()
    arrows: tuple[ArrowRecord, ...] = ()
    shafts: tuple[Stroke, ...] = ()
    markers: tuple[PlacedMarker, ...] = ()
    labels: tuple[PlacedLabel, ...] = ()


# ---------------------------------------------------------------- assembly

def _centered(free: Sp) -> Sp:
    # \hss ... \hss: equal fil glue either way
    if free >= 0:
        return fil_glue(free, [1, 1])[0]
    return -fil_glue(-free, [1, 1])[0]


def column_origins(gm: GridMetrics) -> list[Sp]:
    """x of each column's left edge (before its gap); one extra entry for the right end."""
    xs = [0]
    for j in range(1, gm.colcount_max + 1):
        xs.append(xs[-1] + gm.colgap(j) + gm.colwidth(j))
    return xs


def row_baselines(gm: GridMetrics, pre_space: Sp = 0) -> list[Sp]:
    out = []
    y = pre_space
    for i in range(1, gm.rowcount + 1):
        y += gm.rowheight(i)
        out.append(y)
        y += gm.rowdepth(i)
        if i < gm.rowcount:
            y += gm.rowgap(i)
    return out


def _grid_summary(gm: GridMetrics) -> dict:
    n, r = gm.colcount_max, gm.rowcount
    return {
        "colwidth": [gm.colwidth(j) for j in range(1, n + 1)],
        "colgap": [gm.colgap(j) for j in range(1, n + 1)],
        "rowheight": [gm.rowheight(i) for i in range(1, r + 1)],
        "rowdepth": [gm.rowdepth(i) for i in range(1, r + 1)],
        "rowgap": [gm.rowgap(i) for i in range(1, r)],
        "hunit": gm.hunit,
        "vunit": gm.vunit,
        "mathaxis": gm.mathaxis,
    }


def _h_strokes(k, g: ArrowGeometry, to_abs, axis: Sp) -> list[Stroke]:
    (x0, y), (x1, _) = shaft_ends(g)
    lo, hi = min(x0, x1), max(x0, x1)
    span = hi - lo
    if span <= 0 or g.shaft == "none":
        return []
    if g.shaft == "solid":
        return [Stroke(k, to_abs(lo, y), to_abs(hi, y), RULE, "solid")]
    off, n = cleaders(span, LEADER_BOX)
    start = lo + off
    if g.shaft == "dashed":
        dash = tuple(fil_glue(LEADER_BOX, H_DASH_WEIGHTS)) + (0,)
        return [Stroke(k, to_abs(start + i * LEADER_BOX, y), to_abs(start + (i + 1) * LEADER_BOX, y),
                       RULE, "dashed", dash) for i in range(n)]
    # double: rule pairs inside every leader box, i.e. two continuous rules
    base = y - axis
    end = start + n * LEADER_BOX
    out = []
    for centre in (axis + pt(1), axis - pt("1.4")):
        yy = base + centre
        out.append(Stroke(k, to_abs(start, yy), to_abs(end, yy), RULE, "double"))
    return out


def _v_strokes(k, g: ArrowGeometry, to_abs) -> list[Stroke]:
    (x, y0), (_, y1) = shaft_ends(g)
    lo, hi = min(y0, y1), max(y0, y1)
    span = hi - lo
    if span <= 0 or g.shaft == "none":
        return []
    if g.shaft == "solid":
        return [Stroke(k, to_abs(x, hi), to_abs(x, lo), RULE, "solid")]
    if g.shaft == "dashed":
        off, n = cleaders(span, LEADER_BOX)
        top = hi - off
        a, b, c = V_DASH_RULES
        g1, g2 = fil_glue(LEADER_BOX - a - b - c, [1, 1])
        dash = (a, g1, b, g2, c, 0)
        return [Stroke(k, to_abs(x, top - i * LEADER_BOX), to_abs(x, top - (i + 1) * LEADER_BOX),
                       RULE, "dashed", dash) for i in range(n)]
    off, n = cleaders(span, pt(1))
    top = hi - off
    bottom = top - n * pt(1)
    left = x - HALF_RULE
    return [Stroke(k, to_abs(left + cx, top), to_abs(left + cx, bottom), RULE, "double")
            for cx in (HALF_RULE, pt("2.6"))]


def assemble(d: Diagram, gm: GridMetrics, arrows: Sequence[ArrowGeometry],
             provider: MetricProvider | None = None) -> Scene:
    """Place cells and arrows on a top-left-origin canvas (y down)."""
    provider = provider or DEFAULT_PROVIDER
    cfg = d.config
    m = cfg.margin
    xs = column_origins(gm)
    baselines = row_baselines(gm, cfg.pre_space)
    height = cfg.pre_space + cfg.post_space + sum(
        gm.rowheight(i) + gm.rowdepth(i) for i in range(1, gm.rowcount + 1)
    ) + sum(gm.rowgap(i) for i in range(1, gm.rowcount))
    canvas = (xs[-1] + 2 * m, height + 2 * m)

    font = measure("M", DISPLAY, provider)
    font_size = font.height + font.depth

    def content_left(i, j):
        free = gm.colwidth(j) - gm.width(i, j)
        return xs[j - 1] + gm.colgap(j) + _centered(free)

    cells = []
    for i, row in enumerate(d.rows, 1):
        for j, cell in enumerate(row, 1):
            left = content_left(i, j)
            w = gm.width(i, j)
            natural = gm.content_width(i, j)
            base = m + baselines[i - 1]
            rect = (m + left, base - gm.height(i, j), w, gm.height(i, j) + gm.depth(i, j))
            cells.append(PlacedCell(i, j, cell.content, rect, base,
                                    m + left + _centered(w - natural), natural, font_size))

    records, strokes, marks, labels = [], [], [], []
    for k, g in enumerate(arrows):
        i, j = g.at
        w = gm.width(i, j)
        ox = m + content_left(i, j) + w + g.tocenter
        oy = m + baselines[i - 1]

        def to_abs(x, y, ox=ox, oy=oy):
            return (ox + x, oy - y)

        segs = tile_shaft(g)
        records.append(ArrowRecord(
            at=g.at, offset=g.offset, origin=(ox, oy), first=g.first, second=g.second,
            shaft=g.shaft, tail=g.tail, head=g.head, svertex=g.svertex, tvertex=g.tvertex,
            slope=g.slope.index if g.slope is not None else None,
            segments=tuple((s.start[0], s.start[1], s.end[0], s.end[1]) for s in segs),
        ))
        if g.flags.horizontal:
            strokes.extend(_h_strokes(k, g, to_abs, gm.mathaxis))
        elif g.flags.vertical:
            strokes.extend(_v_strokes(k, g, to_abs))
        else:
            dash = DIAG_DASH if g.shaft == "dashed" else None
            for s in segs:
                strokes.append(Stroke(k, to_abs(*s.start), to_abs(*s.end), RULE, g.shaft, dash))
        for mk in markers(g):
            marks.append(PlacedMarker(k, mk.kind, to_abs(*mk.position),
                                      (mk.outward[0], -mk.outward[1])))
        for lab in g.labels:
            labels.append(PlacedLabel(k, lab.text, lab.side, lab.size, to_abs(*lab.position),
                                      lab.width, lab.height, lab.depth))

    return Scene(canvas, m, _grid_summary(gm), tuple(cells), tuple(records),
                 tuple(strokes), tuple(marks), tuple(labels))


# ---------------------------------------------------------------- SVG

MARKER_PATHS = {
    "head": "M-3.5,-2L0,0L-3.5,2",
    "reverse-head": "M0,-2L-3.5,0L0,2",
    "harpoon-upper": "M-3.5,-2L0,0",
    "harpoon-lower": "M-3.5,2L0,0",
    "hook-left": "M0,0A1.5,1.5 0 0 0 0,-3",
    "hook-right": "M0,0A1.5,1.5 0 0 1 0,3",
    "slip": "M-1,-2.5L1,2.5",
    "double-head": "M-3.5,-2L0,0L-3.5,2M-6.5,-2L-3,0L-6.5,2",
}


def _angle(direction: tuple[int, int]) -> str:
    deg = math.degrees(math.atan2(direction[1], direction[0]))
    text = f"{deg:.5f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _p(x: Sp) -> str:
    return format_pt(x)


def emit_svg(s: Scene) -> str:
    w, h = s.canvas
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'version="1.1" width="{_p(w)}pt" height="{_p(h)}pt" viewBox="0 0 {_p(w)} {_p(h)}">',
    ]
    used = sorted({mk.kind for mk in s.markers})
    if used:
        out.append("<defs>")
        for kind in used:
            out.append(f'<path id="m-{kind}" d="{MARKER_PATHS[kind]}" fill="none" '
                       f'stroke="black" stroke-width="0.4" stroke-linecap="round"/>')
        out.append("</defs>")
    out.append('<g id="cells" font-family="serif" font-style="italic">')
    for c in s.cells:
        if not c.content.strip():
            continue
        out.append(f'<text x="{_p(c.text_x)}" y="{_p(c.baseline)}" font-size="{_p(c.font_size)}" '
                   f'textLength="{_p(c.text_width)}" lengthAdjust="spacingAndGlyphs">'
                   f"{escape(c.content)}</text>")
    out.append("</g>")
    out.append('<g id="shafts" stroke="black" fill="none">')
    for st in s.shafts:
        dash = ""
        if st.dash:
            dash = f' stroke-dasharray="{" ".join(_p(x) for x in st.dash)}"'
        out.append(f'<line x1="{_p(st.start[0])}" y1="{_p(st.start[1])}" x2="{_p(st.end[0])}" '
                   f'y2="{_p(st.end[1])}" stroke-width="{_p(st.width)}"{dash}/>')
    out.append("</g>")
    out.append('<g id="markers">')
    for mk in s.markers:
        out.append(f'<use xlink:href="#m-{mk.kind}" transform="translate({_p(mk.position[0])} '
                   f'{_p(mk.position[1])}) rotate({_angle(mk.direction)})"/>')
    out.append("</g>")
    out.append('<g id="labels" font-family="serif" font-style="italic">')
    for lab in s.labels:
        if not lab.text.strip():
            continue
        out.append(f'<text x="{_p(lab.baseline[0])}" y="{_p(lab.baseline[1])}" '
                   f'font-size="{_p(lab.height + lab.depth)}" textLength="{_p(lab.width)}" '
                   f'lengthAdjust="spacingAndGlyphs" data-side={quoteattr(lab.side)}>'
                   f"{escape(lab.text)}</text>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- geometry dump

def _arrow_dict(a: ArrowRecord) -> dict:
    d = {
        "at": list(a.at), "dir": list(a.offset), "origin": list(a.origin),
        "first": list(a.first), "second": list(a.second),
        "shaft": a.shaft, "tail": a.tail, "head": a.head,
        "svertex": a.svertex, "tvertex": a.tvertex,
    }
    if a.slope is not None:
        d["slope"] = a.slope
    d["segments"] = [list(s) for s in a.segments]
    return d


def scene_to_dict(s: Scene) -> dict:
    return {
        "cdlay-geom": SCHEMA_VERSION,
        "canvas": list(s.canvas),
        "margin": s.margin,
        "grid": s.grid,
        "cells": [
            {"row": c.row, "col": c.col, "content": c.content, "rect": list(c.rect),
             "baseline": c.baseline, "text_x": c.text_x, "text_width": c.text_width,
             "font_size": c.font_size}
            for c in s.cells
        ],
        "arrows": [_arrow_dict(a) for a in s.arrows],
        "shafts": [
            {"arrow": st.arrow, "from": list(st.start), "to": list(st.end), "width": st.width,
             "style": st.style, "dash": list(st.dash) if st.dash else None}
            for st in s.shafts
        ],
        "markers": [
            {"arrow": mk.arrow, "kind": mk.kind, "at": list(mk.position), "dir": list(mk.direction)}
            for mk in s.markers
        ],
        "labels": [
            {"arrow": lab.arrow, "text": lab.text, "side": lab.side, "size": lab.size,
             "baseline": list(lab.baseline), "width": lab.width, "height": lab.height,
             "depth": lab.depth}
            for lab in s.labels
        ],
    }


def emit_geometry(s: Scene) -> str:
    return json.dumps(scene_to_dict(s), indent=1) + "\n"


def load_geometry(text: str) -> Scene:
    """Rebuild a Scene from ``emit_geometry`` output."""
    d = json.loads(text)
    if d.get("cdlay-geom") != SCHEMA_VERSION:
        raise ValueError("not a cdlay geometry dump (version mismatch)")
    t = tuple
    return Scene(
        canvas=t(d["canvas"]),
        margin=d["margin"],
        grid=d["grid"],
        cells=t(PlacedCell(c["row"], c["col"], c["content"], t(c["rect"]), c["baseline"],
                           c["text_x"], c["text_width"], c["font_size"]) for c in d["cells"]),
        arrows=t(ArrowRecord(t(a["at"]), t(a["dir"]), t(a["origin"]), t(a["first"]),
                             t(a["second"]), a["shaft"], a["tail"], a["head"], a["svertex"],
                             a["tvertex"], a.get("slope"), t(t(s) for s in a["segments"]))
                 for a in d["arrows"]),
        shafts=t(Stroke(st["arrow"], t(st["from"]), t(st["to"]), st["width"], st["style"],
                        t(st["dash"]) if st["dash"] else None) for st in d["shafts"]),
        markers=t(PlacedMarker(mk["arrow"], mk["kind"], t(mk["at"]), t(mk["dir"]))
                  for mk in d["markers"]),
        labels=t(PlacedLabel(lab["arrow"], lab["text"], lab["side"], lab["size"],
                             t(lab["baseline"]), lab["width"], lab["height"], lab["depth"])
                 for lab in d["labels"]),
    )
