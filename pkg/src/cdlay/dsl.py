"""The ``.cdl`` diagram description language.

A file has up to three sections, in order::

    [config]
    cgap_scale = 1.5
    colgaps = 1.5;;w"XY"2
    [grid]
    A & B & {}
    {} & C & D
    [arrows]
    at (1,2) dir (1,-1) head=h tail=e shaft=- bend=+1 L="f" dL=1 perp=0.5

Option semantics follow the macro setters: every option is one-shot, so the
first occurrence of a key wins and later ones are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, fields, replace
from typing import Optional

from .fixedpoint import Factor, Sp, parse_dimen, parse_factor, print_scaled, pt, UNITY


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        if self.line:
            return f"{self.line}:{self.col}: {self.message}"
        return self.message


TAIL_LETTERS = "eth'`()sH"
HEAD_LETTERS = "eht'`()sH"
SHAFT_CODES = {"0": "none", "+": "solid", "-": "dashed", "\u2212": "dashed", "=": "double",
               "none": "none", "solid": "solid", "dashed": "dashed", "double": "double"}
SHAFT_LETTER = {"none": "0", "solid": "+", "dashed": "-", "double": "="}


@dataclass(frozen=True)
class Cell:
    content: str = ""
    changewidth: Optional[str] = None

    @property
    def is_vertex_candidate(self) -> bool:
        return not self.content.strip() and self.changewidth is None


@dataclass(frozen=True)
class ArrowOptions:
    tail: Optional[str] = None
    head: Optional[str] = None
    shaft: Optional[str] = None
    bend: Optional[int] = None
    src_shift: Optional[tuple[Factor, Factor]] = None
    target_shift_exact: Optional[tuple[Factor, Factor]] = None
    target_shift_proj: Optional[tuple[Factor, Factor]] = None
    dx: Optional[Factor] = None
    dX: Optional[Factor] = None
    dy: Optional[Factor] = None
    dY: Optional[Factor] = None
    perp: Optional[Factor] = None
    label_above: Optional[str] = None
    label_below: Optional[str] = None
    dL: Optional[Factor] = None
    dl: Optional[Factor] = None
    short: bool = False
    noshort: bool = False

    @property
    def shaft_style(self) -> str:
        return self.shaft or "solid"


@dataclass(frozen=True)
class ArrowSpec:
    at: tuple[int, int]
    offset: tuple[int, int]
    options: ArrowOptions = ArrowOptions()
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def describe(self) -> str:
        return f"arrow at ({self.at[0]},{self.at[1]}) dir ({self.offset[0]},{self.offset[1]})"


@dataclass(frozen=True)
class GapEntry:
    factor: Factor = UNITY
    min_snippet: Optional[str] = None


@dataclass(frozen=True)
class DiagramConfig:
    cgap_scale: Factor = UNITY
    rgap_scale: Factor = UNITY
    colgaps: tuple[GapEntry, ...] = ()
    rowgaps: tuple[GapEntry, ...] = ()
    label_size: str = "normal"
    pre_space: Sp = 0
    post_space: Sp = 0
    margin: Sp = pt(5)


@dataclass(frozen=True)
class Diagram:
    rows: tuple[tuple[Cell, ...], ...] = ()
    arrows: tuple[ArrowSpec, ...] = ()
    config: DiagramConfig = DiagramConfig()

    @property
    def rowcount(self) -> int:
        return len(self.rows)

    @property
    def colcount(self) -> int:
        return max((len(r) for r in self.rows), default=0)

    def cell(self, row: int, col: int) -> Optional[Cell]:
        if 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1]):
            return self.rows[row - 1][col - 1]
        return None


# ---------------------------------------------------------------- scanning

class _Scanner:
    """Character scanner over one line that tracks the column for errors."""

    def __init__(self, text: str, line: int, col0: int = 1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    @property
    def col(self) -> int:
        return self.col0 + self.pos

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        p = self.pos if pos is None else pos
        return ParseError(message, self.line, self.col0 + p)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def match(self, regex: re.Pattern) -> Optional[re.Match]:
        self.skip_ws()
        m = regex.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def quoted(self) -> str:
        self.skip_ws()
        if self.peek() != '"':
            raise self.error("expected a quoted string")
        start = self.pos
        self.pos += 1
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string", start)
            ch = self.text[self.pos]
            self.pos += 1
            if ch == '"':
                return "".join(out)
            if ch == "\\" and self.pos < len(self.text) and self.text[self.pos] in '"\\':
                ch = self.text[self.pos]
                self.pos += 1
            out.append(ch)


_INT = re.compile(r"[+-]?\d+")
_WORD = re.compile(r"[A-Za-z_]+")
_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")
_BARE = re.compile(r"[^\s\"()]+")
_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    """Drop a ``#`` comment that is not inside a double-quoted string."""
    quoted = False
    i = 0
    while i < len(line):
        ch = line[i]
        if ch == "\\" and quoted:
            i += 2
            continue
        if ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:i]
        i += 1
    return line


def _factor(sc: _Scanner) -> Factor:
    start = sc.pos
    m = sc.match(_DECIMAL)
    if not m:
        raise sc.error("expected a decimal factor")
    try:
        return parse_factor(m.group())
    except ValueError:
        raise sc.error("malformed factor", start) from None


def _pair(sc: _Scanner, parse) -> tuple:
    sc.expect("(")
    a = parse(sc)
    sc.skip_ws()
    if sc.peek() not in (",", ";"):
        raise sc.error("expected ',' or ';'")
    sc.pos += 1
    b = parse(sc)
    sc.expect(")")
    return a, b


def _int(sc: _Scanner) -> int:
    m = sc.match(_INT)
    if not m:
        raise sc.error("expected an integer")
    return int(m.group())


# ---------------------------------------------------------------- gaps

def parse_gaps(entry_list: str, kind: str = "col", line: int = 0, col0: int = 1) -> tuple[GapEntry, ...]:
    """Parse a ``;``-separated gap list; each entry is ``[factor]`` or ``w"snippet"[factor]``.

    An empty entry means factor 1.  ``kind`` only affects error messages:
    column lists start at gap 2, row lists at gap 1.
    """
    if kind not in ("col", "row"):
        raise ValueError(f"kind must be 'col' or 'row', not {kind!r}")
    if not entry_list.strip():
        return ()
    out = []
    sc = _Scanner(entry_list, line, col0)
    while True:
        snippet = None
        sc.skip_ws()
        if sc.peek() == "w":
            sc.pos += 1
            snippet = sc.quoted()
        factor = UNITY
        sc.skip_ws()
        if sc.peek() not in (";", ""):
            factor = _factor(sc)
        out.append(GapEntry(factor, snippet))
        sc.skip_ws()
        if sc.peek() == "":
            break
        if sc.peek() != ";":
            raise sc.error(f"malformed {kind} gap entry")
        sc.pos += 1
    return tuple(out)


# ---------------------------------------------------------------- options

_FACTOR_KEYS = {"dx", "dX", "dy", "dY", "perp", "dL", "dl"}
_PAIR_KEYS = {"ds": "src_shift", "dtX": "target_shift_exact", "dtY": "target_shift_proj"}
_STRING_KEYS = {"L": "label_above", "l": "label_below"}
_ALIASES = {"p": "perp", "da": "bend"}


def parse_options(text: str, line: int = 0, col0: int = 1) -> ArrowOptions:
    """Parse an option list such as ``head=h tail=e shaft=- L="f" short``."""
    sc = _Scanner(text, line, col0)
    return _options(sc)


def _options(sc: _Scanner) -> ArrowOptions:
    values: dict = {}
    while not sc.at_end():
        start = sc.pos
        m = sc.match(_WORD)
        if not m:
            raise sc.error("expected an option name")
        key = _ALIASES.get(m.group(), m.group())
        if key in ("short", "noshort"):
            if "short" not in values:
                values["short"] = key == "short"
            continue
        sc.expect("=")
        sc.skip_ws()
        vpos = sc.pos
        if key in ("tail", "head"):
            m = sc.match(_TOKEN)
            letters = TAIL_LETTERS if key == "tail" else HEAD_LETTERS
            bad = not m or len(m.group()) != 1 or m.group() not in letters
            if bad and key not in values:
                raise sc.error(f"Invalid option {key}={m.group() if m else ''}", vpos)
            if bad:
                continue
            value = m.group()
        elif key == "shaft":
            m = sc.match(_BARE)
            if not m or m.group() not in SHAFT_CODES:
                if key not in values:
                    raise sc.error(f"Invalid option shaft={m.group() if m else ''}", vpos)
                continue
            value = SHAFT_CODES[m.group()]
        elif key == "bend":
            value = _int(sc)
        elif key in _FACTOR_KEYS:
            value = _factor(sc)
        elif key in _PAIR_KEYS:
            value = _pair(sc, _factor)
            key = _PAIR_KEYS[key]
        elif key in _STRING_KEYS:
            value = sc.quoted()
            key = _STRING_KEYS[key]
        else:
            raise sc.error(f"Invalid option {m.group()}", start)
        values.setdefault(key, value)
    short = values.pop("short", None)
    return ArrowOptions(**values, short=short is True, noshort=short is False)


def merge_options(first: ArrowOptions, later: ArrowOptions) -> ArrowOptions:
    """Options of ``first`` followed by ``later`` under the first-wins rule."""
    kw = {}
    for f in fields(ArrowOptions):
        if f.name in ("short", "noshort"):
            continue
        a = getattr(first, f.name)
        kw[f.name] = a if a is not None else getattr(later, f.name)
    if first.short or first.noshort:
        kw.update(short=first.short, noshort=first.noshort)
    else:
        kw.update(short=later.short, noshort=later.noshort)
    return ArrowOptions(**kw)


# ---------------------------------------------------------------- diagram

_CONFIG_LINE = re.compile(r"\s*([A-Za-z_]+)\s*=(.*)$")
_AT = re.compile(r"at\b")
_DIR = re.compile(r"dir\b")
_CHANGEWIDTH = re.compile(r"\\changewidth\s*\{")


def _parse_cell(text: str, line: int, col: int) -> Cell:
    s = text.strip()
    if s == "{}":
        return Cell("")
    if _CHANGEWIDTH.match(s):
        groups, rest = _brace_groups(s[len("\\changewidth"):], line, col)
        if len(groups) == 2 and not rest.strip():
            return Cell(groups[0], groups[1])
        raise ParseError("\\changewidth takes two brace groups", line, col)
    return Cell(s)


def _brace_groups(s: str, line: int, col: int) -> tuple[list[str], str]:
    groups = []
    i = 0
    while True:
        while i < len(s) and s[i].isspace():
            i += 1
        if i >= len(s) or s[i] != "{" or len(groups) == 2:
            return groups, s[i:]
        depth, j = 0, i
        while j < len(s):
            if s[j] == "{":
                depth += 1
            elif s[j] == "}":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        if depth:
            raise ParseError("unbalanced braces", line, col)
        groups.append(s[i + 1:j])
        i = j + 1


def _config_value(key: str, value: str, line: int, col: int, cfg: dict):
    try:
        if key in ("cgap_scale", "rgap_scale"):
            cfg[key] = parse_factor(value)
        elif key in ("colgaps", "rowgaps"):
            cfg[key] = parse_gaps(value, key[:3], line, col)
        elif key == "label_size":
            if value.strip() not in ("normal", "small"):
                raise ParseError("label_size must be normal or small", line, col)
            cfg[key] = value.strip()
        elif key in ("pre_space", "post_space", "margin"):
            cfg[key] = parse_dimen(value)
        else:
            raise ParseError(f"unknown config key {key!r}", line, col)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), line, col) from None


CONFIG_KEYS = ("cgap_scale", "rgap_scale", "colgaps", "rowgaps", "label_size",
               "pre_space", "post_space", "margin")


def apply_config_override(config: DiagramConfig, key: str, value: str) -> DiagramConfig:
    """Return ``config`` with one key replaced, parsing ``value`` as the file would."""
    cfg: dict = {}
    _config_value(key, value, 0, 0, cfg)
    return replace(config, **cfg)


def _parse_arrow(text: str, line: int) -> ArrowSpec:
    sc = _Scanner(text, line)
    start = sc.col
    if not sc.match(_AT):
        raise ParseError("arrow at-address missing", line, sc.col)
    at = _pair(sc, _int)
    if not sc.match(_DIR):
        raise sc.error("expected 'dir (dx,dy)'")
    offset = _pair(sc, _int)
    opts = _options(sc)
    return ArrowSpec(at, offset, opts, line, start)


def parse_diagram(source: str) -> Diagram:
    section = None
    order = {"config": 0, "grid": 1, "arrows": 2}
    cfg: dict = {}
    rows: list[tuple[Cell, ...]] = []
    arrows: list[ArrowSpec] = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        text = _strip_comment(raw)
        stripped = text.strip()
        if not stripped:
            continue
        if stripped.startswith("[") and stripped.endswith("]") and stripped[1:-1] in order:
            name = stripped[1:-1]
            if section is not None and order[name] <= order[section]:
                raise ParseError(f"section [{name}] out of order", lineno, text.index("[") + 1)
            section = name
            continue
        if section is None:
            raise ParseError("content before any section header", lineno, 1)
        if section == "config":
            m = _CONFIG_LINE.match(text)
            if not m:
                raise ParseError("expected 'key = value'", lineno, 1)
            _config_value(m.group(1), m.group(2), lineno, m.start(2) + 1, cfg)
        elif section == "grid":
            for row_text in re.split(r"\\\\", text):
                if not row_text.strip():
                    continue
                rows.append(tuple(_parse_cell(c, lineno, 1) for c in row_text.split("&")))
        else:
            arrows.append(_parse_arrow(text, lineno))
    d = Diagram(tuple(rows), tuple(arrows), DiagramConfig(**cfg))
    for a in d.arrows:
        if d.cell(*a.at) is None:
            raise ParseError(f"{a.describe()}: source cell is not in the grid", a.line, a.col)
    return d


# ---------------------------------------------------------------- canonical form

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _f(x: Factor) -> str:
    return print_scaled(x)


def render_gaps(entries) -> str:
    parts = []
    for e in entries:
        s = f"w{_q(e.min_snippet)}" if e.min_snippet is not None else ""
        if e.factor != UNITY or e.min_snippet is None:
            s += _f(e.factor)
        parts.append(s)
    return ";".join(parts)


def render_options(o: ArrowOptions) -> str:
    out = []
    if o.tail is not None:
        out.append(f"tail={o.tail}")
    if o.head is not None:
        out.append(f"head={o.head}")
    if o.shaft is not None:
        out.append(f"shaft={SHAFT_LETTER[o.shaft]}")
    if o.bend is not None:
        out.append(f"bend={o.bend:+d}")
    for key, name in _PAIR_KEYS.items():
        v = getattr(o, name)
        if v is not None:
            out.append(f"{key}=({_f(v[0])};{_f(v[1])})")
    for key in ("dx", "dX", "dy", "dY", "perp", "dL", "dl"):
        v = getattr(o, key)
        if v is not None:
            out.append(f"{key}={_f(v)}")
    for key, name in _STRING_KEYS.items():
        v = getattr(o, name)
        if v is not None:
            out.append(f"{key}={_q(v)}")
    if o.short:
        out.append("short")
    if o.noshort:
        out.append("noshort")
    return " ".join(out)


def _render_cell(c: Cell) -> str:
    if c.changewidth is not None:
        return f"\\changewidth{{{c.content}}}{{{c.changewidth}}}"
    return c.content if c.content else "{}"


def render_canonical(d: Diagram) -> str:
    c = d.config
    lines = ["[config]"]
    default = DiagramConfig()
    for key in CONFIG_KEYS:
        v = getattr(c, key)
        if v == getattr(default, key):
            continue
        if key in ("colgaps", "rowgaps"):
            text = render_gaps(v)
            if not text:
                continue
        elif key == "label_size":
            text = v
        elif key in ("cgap_scale", "rgap_scale"):
            text = _f(v)
        else:
            text = f"{v}sp"
        lines.append(f"{key} = {text}")
    lines.append("[grid]")
    lines.extend(" & ".join(_render_cell(cell) for cell in row) for row in d.rows)
    lines.append("[arrows]")
    for a in d.arrows:
        opts = render_options(a.options)
        lines.append(f"at ({a.at[0]},{a.at[1]}) dir ({a.offset[0]},{a.offset[1]})"
                     + (f" {opts}" if opts else ""))
    return "\n".join(lines) + "\n"
