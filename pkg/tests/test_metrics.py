from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cdlay.fixedpoint import pt
from cdlay.metrics import (DISPLAY, LABEL_NORMAL, LABEL_SMALL, MetricProvider, TextMetrics,
                           load_metrics, measure)

FLAT = MetricProvider(ratio_small=Fraction(7, 10))


def test_empty_snippet_is_empty_box():
    for size in (DISPLAY, LABEL_NORMAL, LABEL_SMALL):
        assert measure("", size) == TextMetrics(0, 0, 0)


def test_additive_widths():
    assert measure("AB", DISPLAY, FLAT) == TextMetrics(pt(10), pt(7), pt(2))


def test_linear_scaling():
    assert measure("X", LABEL_SMALL, FLAT).width == pt("3.5")


def test_whitespace_has_no_width():
    assert measure("a b", DISPLAY).width == measure("ab", DISPLAY).width


def test_per_codepoint_override():
    p = MetricProvider(char_widths={ord("i"): pt(2)})
    assert measure("ii", DISPLAY, p).width == pt(4)
    assert measure("iM", DISPLAY, p).width == pt(7)


@given(st.text(min_size=0, max_size=12), st.text(min_size=0, max_size=12),
       st.sampled_from([DISPLAY, LABEL_NORMAL, LABEL_SMALL]))
def test_width_is_additive(a, b, size):
    assert measure(a + b, size).width == measure(a, size).width + measure(b, size).width


def test_unknown_size_rejected():
    with pytest.raises(ValueError):
        measure("x", "huge")


def test_load_metrics(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("# test\nascent 8pt\ndescent 131072\ndefault 4pt\nratio_small 0.6\nU+0041 10pt\n")
    p = load_metrics(f)
    assert p.ascent == pt(8) and p.descent == pt(2) and p.default_width == pt(4)
    assert p.ratio_small == Fraction(3, 5)
    assert measure("AB", DISPLAY, p).width == pt(14)


def test_load_metrics_reports_line(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("ascent 8pt\nbogus 1\n")
    with pytest.raises(ValueError, match=":2:"):
        load_metrics(f)
