"""Deterministic text measurement standing in for TeX math typesetting."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .fixedpoint import Sp, parse_dimen, pt

log = logging.getLogger(__name__)

DISPLAY = "display"
LABEL_NORMAL = "label_normal"
LABEL_SMALL = "label_small"
SIZES = (DISPLAY, LABEL_NORMAL, LABEL_SMALL)


@dataclass(frozen=True)
class TextMetrics:
    width: Sp = 0
    height: Sp = 0
    depth: Sp = 0


def _ratio(text: str) -> Fraction:
    r = Fraction(text.strip())
    if r <= 0:
        raise ValueError(f"size ratio must be positive: {text!r}")
    return r


@dataclass(frozen=True)
class MetricProvider:
    """Per-codepoint widths at display size plus a shared ascent/descent.

    Label sizes scale every quantity by an exact rational ratio.  Whitespace
    is zero width, as in math mode.
    """

    char_widths: Mapping[int, Sp] = field(default_factory=dict)
    default_width: Sp = pt(5)
    ascent: Sp = pt(7)
    descent: Sp = pt(2)
    ratio_normal: Fraction = Fraction(7, 10)
    ratio_small: Fraction = Fraction(1, 2)
    warn_unknown: bool = False

    def __post_init__(self):
        object.__setattr__(self, "char_widths", MappingProxyType(dict(self.char_widths)))

    def ratio(self, size: str) -> Fraction:
        if size == DISPLAY:
            return Fraction(1)
        if size == LABEL_NORMAL:
            return self.ratio_normal
        if size == LABEL_SMALL:
            return self.ratio_small
        raise ValueError(f"unknown size {size!r}")

    def char_width(self, ch: str) -> Sp:
        if ch.isspace():
            return 0
        cp = ord(ch)
        if cp in self.char_widths:
            return self.char_widths[cp]
        if self.warn_unknown:
            log.warning("no width for U+%04X, using default", cp)
        return self.default_width


def _scaled(x: Sp, r: Fraction) -> Sp:
    return x * r.numerator // r.denominator


def measure(snippet: str, size: str = DISPLAY, provider: MetricProvider | None = None) -> TextMetrics:
    """Box dimensions of ``snippet``; empty (or all-blank) text is an empty box."""
    provider = provider or DEFAULT_PROVIDER
    r = provider.ratio(size)
    if not snippet or snippet.isspace():
        return TextMetrics()
    width = sum(_scaled(provider.char_width(ch), r) for ch in snippet)
    return TextMetrics(width, _scaled(provider.ascent, r), _scaled(provider.descent, r))


DEFAULT_PROVIDER = MetricProvider()


def load_metrics(path: str | Path) -> MetricProvider:
    """Read a metrics override file.

    Lines are ``U+0041 327680`` (codepoint, width in sp) or one of the
    headers ``ascent``, ``descent``, ``default`` (sp, or a ``pt`` dimension)
    and ``ratio_normal``, ``ratio_small`` (decimals).  ``#`` starts a comment.
    """
    widths: dict[int, Sp] = {}
    kwargs: dict = {"warn_unknown": True}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two fields, got {line!r}")
        key, value = parts
        try:
            if key.upper().startswith("U+"):
                widths[int(key[2:], 16)] = _sp(value)
            elif key in ("ascent", "descent"):
                kwargs[key] = _sp(value)
            elif key == "default":
                kwargs["default_width"] = _sp(value)
            elif key in ("ratio_normal", "ratio_small"):
                kwargs[key] = _ratio(value)
            else:
                raise ValueError(f"unknown header {key!r}")
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return MetricProvider(char_widths=widths, **kwargs)


def _sp(text: str) -> Sp:
    if text.lstrip("+-").isdigit():
        return int(text)
    return parse_dimen(text)
