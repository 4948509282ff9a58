"""Measurement pass: cell boxes, row and column maxima, resolved gaps."""
from __future__ import annotations

from dataclasses import dataclass

from .dsl import Diagram, DiagramConfig
from .fixedpoint import Sp, div_int, pt, scale
from .metrics import DISPLAY, LABEL_NORMAL, LABEL_SMALL, MetricProvider, measure

STRUT_HEIGHT = pt(10)
MATHAXIS = div_int(pt(90), 36)
STANDARD_CGAP = pt(40)
STANDARD_RGAP = pt(32)
HUNIT = pt(2)
VUNIT = pt("1.6")
W_GAP_PAD = pt(15)


def label_size_class(cfg: DiagramConfig) -> str:
    return LABEL_SMALL if cfg.label_size == "small" else LABEL_NORMAL


def standard_cgap(cfg: DiagramConfig) -> Sp:
    return scale(STANDARD_CGAP, cfg.cgap_scale)


def standard_rgap(cfg: DiagramConfig) -> Sp:
    return scale(STANDARD_RGAP, cfg.rgap_scale)


def _resolve(entry, standard: Sp, cfg: DiagramConfig, provider) -> Sp:
    gap = scale(standard, entry.factor)
    if entry.min_snippet is not None:
        boxed = W_GAP_PAD + measure(entry.min_snippet, label_size_class(cfg), provider).width
        gap = max(gap, boxed)
    return gap


def resolve_colgap(j: int, cfg: DiagramConfig, provider: MetricProvider | None = None) -> Sp:
    """Gap before column ``j``; gap 1 is always zero, list entries start at gap 2."""
    if j < 1:
        raise ValueError("column gap index starts at 1")
    if j == 1:
        return 0
    k = j - 2
    if k < len(cfg.colgaps):
        return _resolve(cfg.colgaps[k], standard_cgap(cfg), cfg, provider)
    return standard_cgap(cfg)


def resolve_rowgap(i: int, cfg: DiagramConfig, provider: MetricProvider | None = None) -> Sp:
    """Gap after row ``i``; gap 0 is zero, list entries start at gap 1."""
    if i < 0:
        raise ValueError("row gap index starts at 0")
    if i == 0:
        return 0
    k = i - 1
    if k < len(cfg.rowgaps):
        return _resolve(cfg.rowgaps[k], standard_rgap(cfg), cfg, provider)
    return standard_rgap(cfg)


@dataclass(frozen=True)
class GridMetrics:
    """Measured grid.  All accessors are 1-based like the macro's lookups."""

    widths: tuple[tuple[Sp, ...], ...]
    heights: tuple[tuple[Sp, ...], ...]
    depths: tuple[tuple[Sp, ...], ...]
    content_widths: tuple[tuple[Sp, ...], ...]
    rowheights: tuple[Sp, ...]
    rowdepths: tuple[Sp, ...]
    colwidths: tuple[Sp, ...]
    colgaps: tuple[Sp, ...]
    rowgaps: tuple[Sp, ...]
    standard_cgap: Sp
    standard_rgap: Sp
    hunit: Sp
    vunit: Sp
    mathaxis: Sp = MATHAXIS

    @property
    def rowcount(self) -> int:
        return len(self.rowheights)

    @property
    def colcount_max(self) -> int:
        return len(self.colwidths)

    def _cell(self, table, i: int, j: int) -> Sp:
        if 1 <= i <= len(table) and 1 <= j <= len(table[i - 1]):
            return table[i - 1][j - 1]
        return 0

    def width(self, i: int, j: int) -> Sp:
        return self._cell(self.widths, i, j)

    def height(self, i: int, j: int) -> Sp:
        return self._cell(self.heights, i, j)

    def depth(self, i: int, j: int) -> Sp:
        return self._cell(self.depths, i, j)

    def content_width(self, i: int, j: int) -> Sp:
        return self._cell(self.content_widths, i, j)

    def colwidth(self, j: int) -> Sp:
        return self.colwidths[j - 1] if 1 <= j <= len(self.colwidths) else 0

    def rowheight(self, i: int) -> Sp:
        return self.rowheights[i - 1] if 1 <= i <= len(self.rowheights) else 0

    def rowdepth(self, i: int) -> Sp:
        return self.rowdepths[i - 1] if 1 <= i <= len(self.rowdepths) else 0

    def colgap(self, j: int) -> Sp:
        if j <= 1:
            return 0
        return self.colgaps[j - 1] if j <= len(self.colgaps) else self.standard_cgap

    def rowgap(self, i: int) -> Sp:
        if i <= 0:
            return 0
        return self.rowgaps[i - 1] if i <= len(self.rowgaps) else self.standard_rgap


def measure_grid(d: Diagram, provider: MetricProvider | None = None) -> GridMetrics:
    cfg = d.config
    widths, heights, depths, naturals = [], [], [], []
    for row in d.rows:
        w_row, h_row, d_row, n_row = [], [], [], []
        for cell in row:
            box = measure(cell.content, DISPLAY, provider)
            width = box.width
            if cell.changewidth is not None:
                width = measure(cell.changewidth, DISPLAY, provider).width
            w_row.append(width)
            h_row.append(max(box.height, STRUT_HEIGHT))
            d_row.append(max(box.depth, 0))
            n_row.append(box.width)
        widths.append(tuple(w_row))
        heights.append(tuple(h_row))
        depths.append(tuple(d_row))
        naturals.append(tuple(n_row))

    ncols = d.colcount
    colwidths = tuple(
        max((w[j] for w in widths if j < len(w)), default=0) for j in range(ncols)
    )
    return GridMetrics(
        widths=tuple(widths),
        heights=tuple(heights),
        depths=tuple(depths),
        content_widths=tuple(naturals),
        rowheights=tuple(max(h, default=0) for h in heights),
        rowdepths=tuple(max(dp, default=0) for dp in depths),
        colwidths=colwidths,
        colgaps=tuple(resolve_colgap(j, cfg, provider) for j in range(1, ncols + 1)),
        rowgaps=tuple(resolve_rowgap(i, cfg, provider) for i in range(1, d.rowcount + 1)),
        standard_cgap=standard_cgap(cfg),
        standard_rgap=standard_rgap(cfg),
        hunit=scale(HUNIT, cfg.cgap_scale),
        vunit=scale(VUNIT, cfg.rgap_scale),
    )
