"""Arrow layout: endpoints, slope quantization, options, shaft tiling, labels.

All geometry here lives in the *source frame*: x is measured from the source
cell's center, y from the source row's baseline, y grows upward.  Every
quantity is an integer number of scaled points and every operation keeps
the macro's order of multiplication and (truncating) division.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

from .dsl import ArrowOptions, ArrowSpec
from .fixedpoint import Sp, div_int, fil_glue, mul_int, pt, scale, parse_factor
from .grid import GridMetrics
from .metrics import DISPLAY, LABEL_NORMAL, LABEL_SMALL, MetricProvider, measure

THREE_PT = pt(3)
TWO_PT = pt(2)
SEG = pt(10)
HALF = parse_factor(".5")
POINT3 = parse_factor(".3")
RULE = pt(".4")
HALF_RULE = pt(".2")


class LayoutError(Exception):
    """An arrow cannot be laid out.  ``spec`` names the offending arrow."""

    def __init__(self, message: str, spec: Optional[ArrowSpec] = None):
        super().__init__(message)
        self.spec = spec


class OutsideError(LayoutError):
    pass


class DegenerateArrowError(LayoutError):
    pass


# ---------------------------------------------------------------- slopes

class SlopeEntry(NamedTuple):
    index: int
    rise: int
    run: int

    @property
    def tan_num(self) -> int:
        return self.rise

    @property
    def tan_den(self) -> int:
        return self.run


SLOPES = tuple(
    SlopeEntry(i, t1, t2)
    for i, (t1, t2) in enumerate(
        [(1, 6), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (3, 5), (2, 3), (3, 4), (4, 5),
         (5, 6), (1, 1), (6, 5), (5, 4), (4, 3), (3, 2), (5, 3), (2, 1), (5, 2), (3, 1),
         (4, 1), (5, 1), (6, 1)],
        start=1,
    )
)


def slope_for_index(i: int) -> SlopeEntry:
    if not 1 <= i <= 23:
        raise ValueError(f"slope index {i} outside 1..23")
    return SLOPES[i - 1]


def quantize_slope(dy: Sp, dx: Sp) -> SlopeEntry:
    """Nearest of the 23 slopes to ``dy/dx``, spans already direction-normalized.

    Between neighbouring table entries the cut is the arithmetic mean of
    their tangents; a ratio exactly on the cut takes the steeper entry.
    """
    if dy == 0 and dx == 0:
        raise DegenerateArrowError("degenerate arrow: zero-length span")
    if dx < 0:
        return SLOPES[22]
    if mul_int(dy, 6) < dx:
        return SLOPES[0]
    if mul_int(dx, 6) < dy:
        return SLOPES[22]
    lower = (0, 1)
    for upper in SLOPES:
        if mul_int(dx, upper.rise) < mul_int(dy, upper.run):
            lower = (upper.rise, upper.run)
        else:
            break
    lhs = mul_int(mul_int(mul_int(dy, upper.run), lower[1]), 2)
    rhs = mul_int(dx, upper.rise * lower[1] + lower[0] * upper.run)
    if lhs < rhs:
        return SLOPES[upper.index - 2]
    return upper


def getcos(d: Sp, s: SlopeEntry) -> tuple[Sp, Sp]:
    """Perpendicular offset of length ~``d`` to a line of slope ``s``.

    Returns ``(vertical, horizontal)``.
    """
    if s.rise < s.run:
        f = 9 if s.index < 8 else 8 if s.index < 12 else 7
        v = div_int(mul_int(d, f), 10)
        h = div_int(mul_int(v, s.rise), s.run)
    else:
        c = 24 - s.index
        f = 9 if c < 8 else 8 if c < 12 else 7
        h = div_int(mul_int(d, f), 10)
        v = div_int(mul_int(h, s.run), s.rise)
    return v, h


# ---------------------------------------------------------------- geometry

@dataclass(frozen=True)
class DirectionFlags:
    north: bool
    east: bool
    horizontal: bool
    vertical: bool
    nesw: bool
    hshort: bool = False

    @classmethod
    def from_offset(cls, xoff: int, yoff: int, short: bool = False) -> "DirectionFlags":
        north, east = yoff > 0, xoff > 0
        return cls(north, east, yoff == 0, xoff == 0, north == east, short and yoff == 0)

    @property
    def diagonal(self) -> bool:
        return not (self.horizontal or self.vertical)


@dataclass(frozen=True)
class SegmentBox:
    charwd: Sp
    charht: Sp

    @classmethod
    def for_slope(cls, s: SlopeEntry) -> "SegmentBox":
        if s.rise > s.run:
            return cls(div_int(mul_int(SEG, s.run), s.rise), SEG)
        # divide first, then multiply
        return cls(SEG, mul_int(div_int(SEG, s.run), s.rise))


@dataclass(frozen=True)
class LabelAnchor:
    """A label box: ``position`` is the left end of its baseline."""

    text: str
    side: str
    position: tuple[Sp, Sp]
    size: str
    width: Sp
    height: Sp
    depth: Sp


@dataclass(frozen=True)
class ArrowGeometry:
    at: tuple[int, int]
    offset: tuple[int, int]
    flags: DirectionFlags
    first: tuple[Sp, Sp]
    second: tuple[Sp, Sp]
    tocenter: Sp
    slope: Optional[SlopeEntry]
    seg: Optional[SegmentBox]
    shaft: str
    tail: Optional[str]
    head: Optional[str]
    svertex: bool
    tvertex: bool
    perp: Sp = 0
    dx: Sp = 0
    dX: Sp = 0
    dy: Sp = 0
    dY: Sp = 0
    labels: tuple[LabelAnchor, ...] = ()
    options: ArrowOptions = field(default=ArrowOptions(), compare=False)


def _slope(first, second, flags: DirectionFlags) -> SlopeEntry:
    dy = second[1] - first[1]
    dx = second[0] - first[0]
    if not flags.north:
        dy = -dy
    if not flags.east:
        dx = -dx
    return quantize_slope(dy, dx)


def _project_y(x: Sp, first, s: SlopeEntry, nesw: bool) -> Sp:
    d = x - first[0]
    if not nesw:
        d = -d
    return div_int(mul_int(d, s.rise), s.run) + first[1]


def _project_x(y: Sp, first, s: SlopeEntry, nesw: bool) -> Sp:
    d = y - first[1]
    if not nesw:
        d = -d
    return div_int(mul_int(d, s.run), s.rise) + first[0]


def _layout(at, offset, o: ArrowOptions, gm: GridMetrics, spec: Optional[ArrowSpec] = None) -> ArrowGeometry:
    r, c = at
    xoff, yoff = offset
    if xoff == 0 and yoff == 0:
        raise DegenerateArrowError("arrow direction (0,0) is degenerate", spec)
    flags = DirectionFlags.from_offset(xoff, yoff, o.short)
    N, E, H, V = flags.north, flags.east, flags.horizontal, flags.vertical
    nesw = flags.nesw
    hshort = flags.hshort

    tr, tc = r - yoff, c + xoff
    if not (1 <= tr <= gm.rowcount and 1 <= tc <= gm.colcount_max):
        raise OutsideError("This arrow points outside the CD", spec)

    use_tx = flags.diagonal and o.target_shift_exact is not None
    use_ty = flags.diagonal and o.target_shift_proj is not None
    use_bend = flags.diagonal and o.bend is not None

    hu, vu = gm.hunit, gm.vunit
    wsrc = gm.width(r, c)
    tocenter = div_int(-wsrc, 2)

    # start point
    if wsrc == 0:
        fx, fy, svertex = 0, gm.mathaxis, True
    else:
        svertex = False
        if hshort:
            fx = scale(gm.colwidth(c), HALF if E else -HALF)
        else:
            fx = div_int(wsrc if E else -wsrc, 2)
        if E:
            fx += THREE_PT if H else -THREE_PT
        else:
            fx += -THREE_PT if H else THREE_PT
        if N:
            fy = gm.height(r, c) + (THREE_PT if V else 0)
        elif V:
            fy = -gm.depth(r, c) - THREE_PT
        else:
            fy = 0

    sx = sy = 0
    tvertex = False
    if not V:
        sx = div_int(gm.colwidth(c) if E else -gm.colwidth(c), 2)
        if not E:
            sx -= gm.colgap(c)
        end = c + xoff
        if E:
            k = c + 1
            while k < end:
                sx += gm.colwidth(k) + gm.colgap(k)
                k += 1
        else:
            k = c - 1
            while k > end:
                sx -= gm.colwidth(k) + gm.colgap(k)
                k -= 1
        half = div_int(gm.colwidth(k), 2)
        if not hshort:
            sx += half if E else -half
        if E:
            sx += gm.colgap(k)
        twh = div_int(gm.width(tr, k), 2)
        if H and twh == 0:
            tvertex, hshort = True, False
        if not hshort:
            sx += -twh if E else twh
        if tvertex:
            sx += RULE
        else:
            sx += -THREE_PT if E else THREE_PT

    if not H:
        if N:
            sy = gm.rowheight(r)
        else:
            sy = -gm.rowdepth(r) - gm.rowgap(r)
        end = r - yoff
        if N:
            k = r - 1
            while k > end:
                sy += gm.rowheight(k) + gm.rowdepth(k) + gm.rowgap(k)
                k -= 1
        else:
            k = r + 1
            while k < end:
                sy -= gm.rowheight(k) + gm.rowdepth(k) + gm.rowgap(k)
                k += 1
        tvertex = V and gm.width(k, c) == 0
        if N:
            sy += gm.rowgap(k) + gm.rowdepth(k)
            sy += gm.mathaxis if tvertex else -gm.depth(k, tc) - THREE_PT
        else:
            sy -= gm.rowheight(k)
            sy += gm.mathaxis if tvertex else gm.height(k, tc) + THREE_PT

    # options
    if o.src_shift is not None:
        if not V:
            fx += scale(hu, o.src_shift[0])
        if not H:
            fy += scale(vu, o.src_shift[1])

    slope = None
    if use_tx:
        sx += scale(hu, o.target_shift_exact[0])
        sy += scale(vu, o.target_shift_exact[1])
        slope = _slope((fx, fy), (sx, sy), flags)
    elif use_ty:
        sx += scale(hu, o.target_shift_proj[0])
        sy += scale(vu, o.target_shift_proj[1])
        slope = _slope((fx, fy), (sx, sy), flags)
        sy = _project_y(sx, (fx, fy), slope, nesw)
    elif use_bend:
        slope = _slope((fx, fy), (sx, sy), flags)
        idx = slope.index + (o.bend if nesw else -o.bend)
        slope = slope_for_index(min(23, max(1, idx)))
        if o.dY is not None:
            sy += scale(vu, o.dY)
        elif o.dX is not None:
            sx += scale(hu, o.dX)
            sy = _project_y(sx, (fx, fy), slope, nesw)
    elif flags.diagonal:
        slope = _slope((fx, fy), (sx, sy), flags)

    seg = None
    if flags.diagonal:
        t1, t2 = slope.rise, slope.run
        if not svertex:
            d = div_int(mul_int(pt(6), t2), t1 + t2)
            fx += d if E else -d
            d = div_int(mul_int(d, t1), t2)
            fy += d if N else -d

    p = scale(div_int(hu, 2), o.perp) if o.perp is not None else 0
    if flags.diagonal and o.perp is not None:
        v, h = getcos(p, slope)
        fy += v
        sy += v
        fx += -h if nesw else h

    if flags.diagonal:
        seg = SegmentBox.for_slope(slope)
        ch = seg.charht
        if o.head == "t":
            sy += -scale(ch, POINT3) if N else scale(ch, POINT3)
        if o.tail == "t":
            fx += scale(ch, POINT3) if E else -scale(ch, POINT3)
        if o.head == "s":
            sy += -ch if N else ch
        if not use_ty and use_bend and o.dX is None:
            sx = _project_x(sy, (fx, fy), slope, nesw)

    return ArrowGeometry(
        at=tuple(at),
        offset=tuple(offset),
        flags=replace(flags, hshort=hshort),
        first=(fx, fy),
        second=(sx, sy),
        tocenter=tocenter,
        slope=slope,
        seg=seg,
        shaft=o.shaft_style,
        tail=o.tail,
        head=o.head,
        svertex=svertex,
        tvertex=tvertex,
        perp=p,
        dx=scale(hu, o.dx) if o.dx is not None else 0,
        dX=scale(hu, o.dX) if o.dX is not None else 0,
        dy=scale(vu, o.dy) if o.dy is not None else 0,
        dY=scale(vu, o.dY) if o.dY is not None else 0,
        options=o,
    )


def compute_endpoints(spec: ArrowSpec, gm: GridMetrics) -> ArrowGeometry:
    """Endpoints with no options applied except ``short``, which selects the
    column-edge variant of the horizontal endpoints."""
    base = ArrowOptions(short=spec.options.short, noshort=spec.options.noshort)
    return _layout(spec.at, spec.offset, base, gm, spec)


def apply_options(g: ArrowGeometry, o: ArrowOptions, gm: GridMetrics) -> ArrowGeometry:
    """Re-derive ``g`` with options ``o``.

    Options are one-shot setters applied to the unmodified endpoints, so the
    result depends only on ``g``'s position and ``o``; applying the same
    options again changes nothing.
    """
    return _layout(g.at, g.offset, o, gm)


# ---------------------------------------------------------------- tiling

@dataclass(frozen=True)
class SegmentPlacement:
    """One diagonal stroke unit, drawn from ``start`` to ``end``.

    ``backstep`` is the horizontal overlap of a final partial unit;
    ``copy`` is 0 for a single shaft and -1/+1 for the two strokes of a double one.
    """

    start: tuple[Sp, Sp]
    end: tuple[Sp, Sp]
    backstep: Sp = 0
    copy: int = 0


def _boxes(g: ArrowGeometry):
    # travel coordinates (u along east/west, v along north/south) of each unit box
    cw, ch = g.seg.charwd, g.seg.charht
    t1, t2 = g.slope.rise, g.slope.run
    sgn = 1 if g.flags.north else -1
    goal = (g.second[1] - g.first[1]) * sgn
    u = v = 0
    if g.tail == "s" and g.shaft not in ("none", "double"):
        u, v, goal = cw, ch, goal - ch
    boxes = []
    while goal > ch:
        boxes.append((u, v, 0))
        u += cw
        v += ch
        goal -= ch
    if goal > 0:
        back = mul_int(div_int(ch - goal, t1), t2)
        boxes.append((u - back, v - ch + goal, back))
    return boxes


def tile_shaft(g: ArrowGeometry) -> list[SegmentPlacement]:
    """Tile a diagonal shaft with segment boxes; the last one ends flush at the target."""
    if g.slope is None or g.shaft == "none":
        return []
    cw, ch = g.seg.charwd, g.seg.charht
    sx = 1 if g.flags.east else -1
    sy = 1 if g.flags.north else -1
    fx, fy = g.first
    units = []
    for u, v, back in _boxes(g):
        x0, y0 = fx + sx * u, fy + sy * v
        units.append(((x0, y0), (x0 + sx * cw, y0 + sy * ch), back))
    if g.shaft != "double":
        return [SegmentPlacement(a, b, back) for a, b, back in units]

    v_off, h_off = getcos(pt("1.5"), g.slope)
    dv = -v_off if g.flags.nesw else v_off
    out = []
    for a, b, back in units:
        for copy, k in ((1, 1), (-1, -1)):
            shift = (k * h_off, k * dv)
            out.append(SegmentPlacement((a[0] + shift[0], a[1] + shift[1]),
                                        (b[0] + shift[0], b[1] + shift[1]), back, copy))
    return out


# ---------------------------------------------------------------- markers

HEAD_KINDS = {None: "head", "h": "head", "t": "reverse-head", "'": "harpoon-upper",
              "`": "harpoon-lower", "(": "hook-left", ")": "hook-right", "s": "slip",
              "H": "head"}
TAIL_KINDS = {"h": "head", "t": "reverse-head", "'": "harpoon-upper", "`": "harpoon-lower",
              "(": "hook-left", ")": "hook-right", "s": "slip", "H": "head"}


@dataclass(frozen=True)
class MarkerPlacement:
    """A tip glyph at ``position``; ``outward`` points away from the shaft."""

    kind: str
    end: str
    position: tuple[Sp, Sp]
    outward: tuple[int, int]


def shaft_ends(g: ArrowGeometry) -> tuple[tuple[Sp, Sp], tuple[Sp, Sp]]:
    """Where the drawn shaft starts and ends, in the source frame."""
    f = g.flags
    if f.horizontal:
        y = g.perp + _axis_default()
        return (g.first[0] + g.dx, y), (g.second[0] + g.dX, y)
    if f.vertical:
        sgn = 1 if f.north else -1
        x = g.perp + HALF_RULE
        return (x, g.first[1] + sgn * g.dy), (x, g.second[1] + sgn * g.dY)
    boxes = _boxes(g)
    sx = 1 if f.east else -1
    sy = 1 if f.north else -1
    fx, fy = g.first
    if not boxes:
        return g.first, g.first
    u0, v0, _ = boxes[0]
    u1, v1, _ = boxes[-1]
    cw, ch = g.seg.charwd, g.seg.charht
    return (fx + sx * u0, fy + sy * v0), (fx + sx * (u1 + cw), fy + sy * (v1 + ch))


def _axis_default() -> Sp:
    from .grid import MATHAXIS
    return MATHAXIS


def markers(g: ArrowGeometry) -> list[MarkerPlacement]:
    """Tip glyph placements; phantom and double shafts carry none."""
    if g.shaft in ("none", "double"):
        return []
    f = g.flags
    start, end = shaft_ends(g)
    if f.horizontal:
        fwd = (1 if f.east else -1, 0)
        back3 = (-fwd[0] * THREE_PT, 0)
    elif f.vertical:
        fwd = (0, 1 if f.north else -1)
        back3 = (0, -fwd[1] * THREE_PT)
    else:
        sx = 1 if f.east else -1
        sy = 1 if f.north else -1
        fwd = (sx * g.slope.run, sy * g.slope.rise)
        v, h = getcos(THREE_PT, g.slope)
        back3 = (-sx * h, -sy * v)
        if g.head == "s":
            end = (end[0] + sx * g.seg.charwd, end[1] + sy * g.seg.charht)
    out = []
    if g.head != "e":
        out.append(MarkerPlacement(HEAD_KINDS[g.head], "head", end, fwd))
        if g.head == "H":
            out.append(MarkerPlacement("head", "head", (end[0] + back3[0], end[1] + back3[1]), fwd))
    if g.tail not in (None, "e"):
        tail_start = g.first if f.diagonal else start
        out_dir = (-fwd[0], -fwd[1])
        out.append(MarkerPlacement(TAIL_KINDS[g.tail], "tail", tail_start, out_dir))
        if g.tail == "H":
            out.append(MarkerPlacement("head", "tail",
                                       (tail_start[0] - back3[0], tail_start[1] - back3[1]), out_dir))
    return out


# ---------------------------------------------------------------- labels

def _size_for(label_size: str, shaft: str, side: str) -> str:
    if side == "above" and shaft == "none":
        return DISPLAY
    return label_size


def label_anchors(g: ArrowGeometry, o: ArrowOptions, gm: GridMetrics,
                  provider: MetricProvider | None = None,
                  label_size: str = LABEL_NORMAL) -> list[LabelAnchor]:
    """Place the ``L`` (above) and ``l`` (below) labels; ``l`` is dropped on a phantom shaft."""
    out = []
    phantom = g.shaft == "none"
    double = g.shaft == "double"
    hu = gm.hunit
    for side, text, shift in (("above", o.label_above, o.dL), ("below", o.label_below, o.dl)):
        if text is None or (side == "below" and phantom):
            continue
        size = _size_for(label_size, g.shaft, side)
        m = measure(text, size, provider)
        ld = scale(hu, shift) if shift is not None else 0
        if g.flags.horizontal:
            pos = _h_label(g, side, m, ld, gm, phantom, double)
        elif g.flags.vertical:
            pos = _v_label(g, side, m, ld, phantom, double)
        else:
            pos = _d_label(g, side, m, ld, phantom, double)
        out.append(LabelAnchor(text, side, pos, size, m.width, m.height, m.depth))
    return out


def _h_label(g, side, m, ld, gm, phantom, double):
    E = g.flags.east
    fx, sx = g.first[0], g.second[0]
    left = fx if E else sx
    span = sx - fx if E else fx - sx
    lead = g.dx if E else g.dX
    trail = g.dX if E else g.dx
    g1, _ = fil_glue(span - (lead + 2 * ld + m.width - trail), [1, 1])
    x = left + lead + 2 * ld + g1
    if side == "above":
        y = 0
        if not phantom:
            y += gm.mathaxis + m.depth + TWO_PT + (TWO_PT if double else 0)
        y += g.perp
    else:
        y = -m.height - TWO_PT - (TWO_PT if double else 0) + gm.mathaxis + g.perp
    return (x, y)


def _v_label(g, side, m, ld, phantom, double):
    N = g.flags.north
    fy, sy = g.first[1], g.second[1]
    span = sy - fy if N else fy - sy
    bottom = fy if N else fy - span
    top_glue, _ = fil_glue(span - (m.height + m.depth + 2 * ld), [1, 1])
    y = bottom + span - top_glue - m.height
    if side == "above":
        if phantom:
            x = g.perp - scale(m.width, HALF)
        else:
            x = g.perp - TWO_PT - m.width
    else:
        x = g.perp + (pt("4.5") if double else pt("2.5"))
    return (x, y)


def _d_label(g, side, m, ld, phantom, double):
    nesw = g.flags.nesw
    s = g.slope
    pad = pt(4) if double else TWO_PT
    boxw = m.width + pad
    mx = div_int(g.first[0] + g.second[0], 2)
    my = div_int(g.first[1] + g.second[1], 2)
    lv = div_int(mul_int(ld, s.rise), s.run)
    if side == "above":
        mx += ld
        my += lv if nesw else -lv
        if phantom:
            shift = scale(boxw, HALF) + pt(1)
            mx += shift if nesw else -shift
            my -= scale(m.height, HALF)
        else:
            my += m.depth
            if s.index < 6:
                my += TWO_PT
        # label sits left of the midpoint for NE/SW arrows, right otherwise
        x = mx - boxw if nesw else mx + pad
    else:
        mx += ld if nesw else -ld
        my += lv
        my -= m.height
        if s.index < 9:
            my -= THREE_PT
        x = mx + pad if nesw else mx - boxw
    return (x, my)


def layout_arrow(spec: ArrowSpec, gm: GridMetrics, provider: MetricProvider | None = None,
                 label_size: str = LABEL_NORMAL) -> ArrowGeometry:
    """Full pipeline for one arrow: endpoints, options, then labels."""
    g = apply_options(compute_endpoints(spec, gm), spec.options, gm)
    labels = label_anchors(g, spec.options, gm, provider, label_size)
    return replace(g, labels=tuple(labels))


# ---------------------------------------------------------------- inline arrows

@dataclass(frozen=True)
class InlineArrow:
    """A minimum-width labeled arrow set inline (``\\East``/``\\West``)."""

    width: Sp
    direction: str
    head: tuple[Sp, Sp]
    tail: tuple[Sp, Sp]
    labels: tuple[LabelAnchor, ...]


MINAW = pt("11.111")
THICKSPACE = pt("2.78")


def _half(x: int) -> int:
    return (x + 1) // 2 if x % 2 else x // 2


def east_west_arrow(label_above: str, label_below: str, direction: str = "east",
                    provider: MetricProvider | None = None, *,
                    minaw: Sp = MINAW, thickspace: Sp = THICKSPACE) -> InlineArrow:
    """Arrow at least ``minaw`` wide that also fits either label plus three thick spaces."""
    if direction not in ("east", "west"):
        raise ValueError("direction must be 'east' or 'west'")
    above = measure(label_above, LABEL_SMALL, provider)
    below = measure(label_below, LABEL_SMALL, provider)
    width = max(minaw, above.width + 3 * thickspace, below.width + 3 * thickspace)
    from .grid import MATHAXIS
    # the padded box is centered; East pads one thick space before the label, West two
    lead = thickspace if direction == "east" else 2 * thickspace
    labels = []
    if label_above:
        x = _half(width - above.width - 3 * thickspace) + lead
        y = MATHAXIS + HALF_RULE + TWO_PT + above.depth
        labels.append(LabelAnchor(label_above, "above", (x, y),
                                  LABEL_SMALL, above.width, above.height, above.depth))
    if measure(label_below, DISPLAY, provider).width > 0:
        x = _half(width - below.width - 3 * thickspace) + lead
        y = MATHAXIS - HALF_RULE - TWO_PT - below.height
        labels.append(LabelAnchor(label_below, "below", (x, y),
                                  LABEL_SMALL, below.width, below.height, below.depth))
    left, right = (0, MATHAXIS), (width, MATHAXIS)
    head, tail = (right, left) if direction == "east" else (left, right)
    return InlineArrow(width, direction, head, tail, tuple(labels))
