import pytest
from hypothesis import given, strategies as st

from cdlay.dsl import (ArrowOptions, Cell, DiagramConfig, GapEntry, ParseError,
                       apply_config_override, merge_options, parse_diagram, parse_gaps,
                       parse_options, render_canonical)
from cdlay.fixedpoint import UNITY, parse_factor, pt


def test_minimal_diagram():
    d = parse_diagram("[grid]\nA & B \\\\ C & D\n[arrows]\nat (1,1) dir (1,0)\n")
    assert d.rowcount == 2 and d.colcount == 2
    assert d.rows[1][0] == Cell("C")
    assert len(d.arrows) == 1
    assert d.arrows[0].options == ArrowOptions()
    assert d.arrows[0].at == (1, 1) and d.arrows[0].offset == (1, 0)


def test_first_option_wins():
    assert parse_options("tail=e tail=h").tail == "e"
    assert parse_options("head=t head=h L=\"a\" L=\"b\"").label_above == "a"
    assert parse_options("dx=1 dx=2").dx == UNITY


def test_shaft_codes():
    assert parse_options("shaft=0").shaft == "none"
    assert parse_options("shaft=+").shaft == "solid"
    assert parse_options("shaft=-").shaft == "dashed"
    assert parse_options("shaft==").shaft == "double"
    assert ArrowOptions().shaft_style == "solid"


def test_short_noshort_first_wins():
    o = parse_options("short noshort")
    assert o.short and not o.noshort
    o = parse_options("noshort short")
    assert o.noshort and not o.short


def test_pairs_and_aliases():
    o = parse_options("ds=(1;-2) dtY=(0,0) p=0.5 da=-2")
    assert o.src_shift == (UNITY, -2 * UNITY)
    assert o.target_shift_proj == (0, 0)
    assert o.perp == UNITY // 2
    assert o.bend == -2


def test_invalid_letter():
    with pytest.raises(ParseError, match="Invalid option tail=q"):
        parse_options("tail=q")
    # a later bad letter is ignored once the key is set
    assert parse_options("tail=h tail=q").tail == "h"


def test_unknown_option_has_position():
    with pytest.raises(ParseError) as exc:
        parse_diagram("[grid]\nA & B\n[arrows]\nat (1,1) dir (1,0) zz=1\n")
    assert (exc.value.line, exc.value.col) == (4, 20)


def test_missing_at():
    with pytest.raises(ParseError, match="at-address missing"):
        parse_diagram("[grid]\nA\n[arrows]\ndir (1,0)\n")


def test_source_outside_grid():
    with pytest.raises(ParseError, match="not in the grid"):
        parse_diagram("[grid]\nA\n[arrows]\nat (2,1) dir (1,0)\n")


def test_section_order():
    with pytest.raises(ParseError, match="out of order"):
        parse_diagram("[grid]\nA\n[config]\ncgap_scale = 2\n")


def test_gap_lists():
    assert parse_gaps("1.5;;2") == (GapEntry(parse_factor("1.5")), GapEntry(UNITY), GapEntry(2 * UNITY))
    assert parse_gaps('w"XY"') == (GapEntry(UNITY, "XY"),)
    assert parse_gaps('w"XY"1.5') == (GapEntry(parse_factor("1.5"), "XY"),)
    assert parse_gaps("") == ()
    with pytest.raises(ParseError):
        parse_gaps("1.5;x")


def test_config_section():
    d = parse_diagram('[config]\ncgap_scale = 1.5\nrowgaps = ;2\nlabel_size = small\n'
                      'pre_space = 5pt\n[grid]\nA\n')
    c = d.config
    assert c.cgap_scale == parse_factor("1.5")
    assert c.rowgaps == (GapEntry(UNITY), GapEntry(2 * UNITY))
    assert c.label_size == "small" and c.pre_space == pt(5)


def test_config_override():
    c = apply_config_override(DiagramConfig(), "margin", "0pt")
    assert c.margin == 0
    with pytest.raises(ParseError):
        apply_config_override(DiagramConfig(), "nope", "1")


def test_changewidth_and_empty_cells():
    d = parse_diagram("[grid]\n\\changewidth{WIDE}{XX} & {} & \n")
    assert d.rows[0] == (Cell("WIDE", "XX"), Cell(""), Cell(""))


def test_comments_respect_quotes():
    d = parse_diagram('[grid]\nA & B # two cells\n[arrows]\nat (1,1) dir (1,0) L="#1"\n')
    assert d.arrows[0].options.label_above == "#1"


letters = st.sampled_from(list("eth'`()sH"))
factor_text = st.decimals(-20, 20, places=2, allow_nan=False, allow_infinity=False).map(str)
token = st.one_of(
    letters.map(lambda c: f"tail={c}"),
    st.sampled_from(list("eht'`()sH")).map(lambda c: f"head={c}"),
    st.sampled_from(list("0+-=")).map(lambda c: f"shaft={c}"),
    st.integers(-30, 30).map(lambda n: f"bend={n:+d}"),
    st.sampled_from(["dx", "dX", "dy", "dY", "perp", "dL", "dl"]).flatmap(
        lambda k: factor_text.map(lambda v: f"{k}={v}")),
    st.tuples(st.sampled_from(["ds", "dtX", "dtY"]), factor_text, factor_text).map(
        lambda t: f"{t[0]}=({t[1]};{t[2]})"),
    st.sampled_from(["L", "l"]).flatmap(
        lambda k: st.text("abcxyz+-f", max_size=4).map(lambda v: f'{k}="{v}"')),
    st.sampled_from(["short", "noshort"]),
)


@given(st.lists(token, max_size=12))
def test_canonical_round_trip(tokens):
    src = "[grid]\nA & B\n[arrows]\nat (1,1) dir (1,0) " + " ".join(tokens) + "\n"
    d = parse_diagram(src)
    again = parse_diagram(render_canonical(d))
    assert again == d


@given(st.lists(token, max_size=10), st.lists(token, max_size=10))
def test_merge_matches_concatenation(a, b):
    merged = merge_options(parse_options(" ".join(a)), parse_options(" ".join(b)))
    assert merged == parse_options(" ".join(a + b))
