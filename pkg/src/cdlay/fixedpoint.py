"""Scaled-point arithmetic with TeX semantics.

Every dimension in cdlay is a plain ``int`` counting scaled points
(65536 sp = 1 pt).  Factors are 16.16 fixed-point ints.  The helpers here
reproduce ``\\multiply``, ``\\divide`` and ``<factor><dimen>`` exactly,
including truncation toward zero and the ``Dimension too large`` limit.
"""
from __future__ import annotations

import re
from fractions import Fraction

SP_PER_PT = 65536
UNITY = SP_PER_PT
MAX_DIMEN = (1 << 30) - 1

Sp = int
Factor = int


class DimensionError(ArithmeticError):
    """A dimension left TeX's representable range."""


def check(x: int) -> Sp:
    if not -MAX_DIMEN <= x <= MAX_DIMEN:
        raise DimensionError(f"dimension too large: {x} sp")
    return x


def _tdiv(a: int, b: int) -> int:
    # integer division truncating toward zero
    if b == 0:
        raise ZeroDivisionError("division by zero")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def mul_int(x: Sp, n: int) -> Sp:
    return check(x * n)


def div_int(x: Sp, n: int) -> Sp:
    return check(_tdiv(x, n))


def scale(x: Sp, f: Factor) -> Sp:
    """``f`` times ``x`` where ``f`` is 16.16 fixed point, truncated toward zero."""
    return check(_tdiv(x * f, UNITY))


def muldiv(x: Sp, n: int, d: int) -> Sp:
    """Multiply then divide, as ``\\multiply`` followed by ``\\divide``."""
    return div_int(mul_int(x, n), d)


def _round_decimals(digits: str) -> int:
    # TeX's round_decimals: 17 digits at most, result in units of 2^-16
    a = 0
    for ch in reversed(digits[:17]):
        a = (a + int(ch) * 131072) // 10
    return (a + 1) // 2


_DECIMAL = re.compile(r"\s*([+-]?)\s*(\d*)(?:\.(\d*))?\s*$")


def parse_factor(text: str) -> Factor:
    """Parse a decimal constant the way TeX's scanner does.

    >>> parse_factor("1.5")
    98304
    >>> parse_factor("0.3")
    19661
    """
    m = _DECIMAL.match(text)
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"malformed decimal: {text!r}")
    sign, whole, frac = m.group(1), m.group(2) or "0", m.group(3) or ""
    value = int(whole) * UNITY + _round_decimals(frac)
    return -value if sign == "-" else value


def parse_dimen(text: str) -> Sp:
    """``<decimal>pt``, ``<integer>sp`` or a bare decimal (taken as pt)."""
    s = text.strip()
    if s.endswith("sp"):
        try:
            return check(int(s[:-2]))
        except ValueError:
            raise ValueError(f"malformed dimension: {text!r}") from None
    if s.endswith("pt"):
        s = s[:-2]
    return check(parse_factor(s))


def pt(value: int | str) -> Sp:
    """Points to sp: ``pt(40)`` or ``pt("1.6")`` (decimal strings scanned like TeX)."""
    if isinstance(value, int):
        return check(value * SP_PER_PT)
    return check(parse_factor(value))


def print_scaled(s: int) -> str:
    """TeX's ``print_scaled``: shortest decimal that scans back to ``s``."""
    out = "-" if s < 0 else ""
    s = abs(s)
    out += str(s // UNITY) + "."
    s = 10 * (s % UNITY) + 5
    delta = 10
    while True:
        if delta > UNITY:
            s = s + 0x8000 - 50000
        out += str(s // UNITY)
        s = 10 * (s % UNITY)
        delta *= 10
        if s <= delta:
            break
    return out


def format_pt(sp: int, places: int = 5) -> str:
    """sp as a pt decimal rounded (half away from zero) to ``places``, zeros trimmed."""
    unit = 10 ** places
    q, r = divmod(abs(sp) * unit, UNITY)
    if 2 * r >= UNITY:
        q += 1
    whole, frac = divmod(q, unit)
    text = str(whole)
    if frac:
        text += "." + str(frac).rjust(places, "0").rstrip("0")
    if sp < 0 and q:
        text = "-" + text
    return text


def tex_round(x: Fraction) -> int:
    """Pascal ``round``: half away from zero."""
    n = abs(x.numerator) * 2 + x.denominator
    q = n // (2 * x.denominator)
    return q if x >= 0 else -q


def fil_glue(excess: Sp, weights: list[int]) -> list[Sp]:
    """Set ``fil`` glue the way TeX's shipout does (cumulative rounding).

    Negative excess leaves fil glue at zero: it has no shrink.
    """
    if excess <= 0 or not weights:
        return [0] * len(weights)
    total = sum(weights)
    ratio = Fraction(excess, total)
    out, acc, prev = [], 0, 0
    for w in weights:
        acc += w
        cur = tex_round(ratio * acc)
        out.append(cur - prev)
        prev = cur
    return out


def cleaders(span: Sp, unit: Sp) -> tuple[Sp, int]:
    """Offset of the first box and box count for ``\\cleaders`` of ``unit`` boxes."""
    if span <= 0 or unit <= 0:
        return 0, 0
    padded = span + 10
    return (padded % unit) // 2, padded // unit
