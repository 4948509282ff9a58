"""Acceptance criteria 1-8.  Each test records a one-line verdict that the
pytest terminal summary prints; running this file directly prints them too."""
import json
import random
import time
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from cdlay.arrows import apply_options, compute_endpoints, getcos, layout_arrow, quantize_slope, tile_shaft
from cdlay.cli import build_scene
from cdlay.dsl import (ArrowSpec, Cell, Diagram, DiagramConfig, GapEntry, parse_diagram,
                       parse_options)
from cdlay.fixedpoint import UNITY, div_int, pt
from cdlay.grid import measure_grid, resolve_colgap
from cdlay.metrics import MetricProvider
from cdlay.render import emit_geometry, emit_svg
from oracles import cell_edges, check_tiling, midpoint, nearest_slope

RESULTS = {}
CORPUS = sorted((Path(__file__).parent / "corpus").glob("*.cdl"))


def report(n, ok, detail):
    RESULTS[n] = (ok, detail)
    assert ok, f"criterion {n}: {detail}"


def test_criterion_1_quantizer_oracle():
    t0 = time.perf_counter()
    got = [quantize_slope(pt(dy), pt(dx)).index for dy in range(1, 121) for dx in range(1, 121)]
    elapsed = time.perf_counter() - t0
    want = [nearest_slope(dy, dx) for dy in range(1, 121) for dx in range(1, 121)]
    matches = sum(a == b for a, b in zip(got, want))
    report(1, matches == 14400 and elapsed < 1.0,
           f"{matches}/14400 match the rational oracle in {elapsed:.3f}s")


def test_criterion_2_constants():
    src = "[grid]\n{} & A\nB & C\n[arrows]\nat (1,1) dir (1,-1)\n"
    dump = json.loads(emit_geometry(build_scene(parse_diagram(src))))
    grid = dump["grid"]
    heights = [c["baseline"] - c["rect"][1] for c in dump["cells"]]
    checks = {
        "colgap": grid["colgap"][1] == 2621440,
        "rowgap": grid["rowgap"][0] == 2097152,
        "cell height": all(h >= 655360 for h in heights) and len(heights) == 4,
        "vertex y": dump["arrows"][0]["first"] == [0, 163840],
        "mathaxis": grid["mathaxis"] == 163840,
    }
    report(2, all(checks.values()), ", ".join(f"{k} {'ok' if v else 'BAD'}" for k, v in checks.items()))


def test_criterion_3_horizontal_trace():
    p = MetricProvider()  # 5pt per character
    d = Diagram(((Cell("AAAA"), Cell("AAAAAA")),), (ArrowSpec((1, 1), (1, 0)),), DiagramConfig())
    gm = measure_grid(d, p)
    g = compute_endpoints(d.arrows[0], gm)
    cws = [gm.colwidth(1), gm.colwidth(2)]
    gaps = [gm.colgap(1), gm.colgap(2)]
    sl, sr = cell_edges(cws, gaps, gm.width(1, 1), 1)
    tl, _ = cell_edges(cws, gaps, gm.width(1, 2), 2)
    origin = sl + gm.width(1, 1) + div_int(-gm.width(1, 1), 2)
    ok = (g.first[0] == pt(13) and g.second[0] == pt(47)
          and origin + g.first[0] == sr + pt(3) and origin + g.second[0] == tl - pt(3))
    report(3, ok, f"first.x={g.first[0]}sp second.x={g.second[0]}sp; absolute edges agree: {ok}")


def _random_grid(rng):
    rows, cols = rng.randint(2, 5), rng.randint(2, 5)
    cells = tuple(tuple(Cell("" if rng.random() < 0.2 else "x" * rng.randint(1, 8)) for _ in range(cols))
                  for _ in range(rows))
    cfg = DiagramConfig(cgap_scale=rng.choice([UNITY // 2, UNITY, 3 * UNITY // 2, 2 * UNITY]),
                        rgap_scale=rng.choice([UNITY // 2, UNITY, 3 * UNITY // 2]))
    return Diagram(cells, (), cfg)


def _random_opts(rng):
    toks = []
    if rng.random() < 0.3:
        toks.append(f"bend={rng.randint(-4, 4):+d}")
    if rng.random() < 0.2:
        toks.append(f"dtX=({rng.randint(-3, 3)};{rng.randint(-3, 3)})")
    if rng.random() < 0.2:
        toks.append(f"dtY=({rng.randint(-3, 3)};{rng.randint(-3, 3)})")
    if rng.random() < 0.3:
        toks.append(f"perp={rng.uniform(-3, 3):.2f}")
    if rng.random() < 0.3:
        toks.append(f"ds=({rng.uniform(-2, 2):.2f};{rng.uniform(-2, 2):.2f})")
    if rng.random() < 0.3:
        toks.append("head=" + rng.choice("eht'`()sH"))
    if rng.random() < 0.3:
        toks.append("tail=" + rng.choice("eth'`()sH"))
    if rng.random() < 0.2:
        toks.append(f"dY={rng.uniform(-3, 3):.1f}")
    return " ".join(toks)


def _tiling_errors(g):
    ch = g.seg.charht
    sy = 1 if g.flags.north else -1
    goal = (g.second[1] - g.first[1]) * sy
    start = ch if g.tail == "s" and g.shaft not in ("none", "double") else 0
    segs = [(s.start[1], s.end[1]) for s in tile_shaft(g)]
    return check_tiling(g.first[1], goal, segs, ch, sy, start)


def test_criterion_4_tiling():
    rng = random.Random(20240611)
    done, failures = 0, []
    while done < 500:
        d = _random_grid(rng)
        gm = measure_grid(d)
        r, c = rng.randint(1, d.rowcount), rng.randint(1, d.colcount)
        tr, tc = rng.randint(1, d.rowcount), rng.randint(1, d.colcount)
        if tr == r or tc == c:
            continue
        spec = ArrowSpec((r, c), (tc - c, r - tr), parse_options(_random_opts(rng)))
        g = layout_arrow(spec, gm)
        solid = replace(g, shaft="solid")
        errs = _tiling_errors(solid)
        dashed = tile_shaft(replace(g, shaft="dashed"))
        if [(s.start, s.end) for s in dashed] != [(s.start, s.end) for s in tile_shaft(solid)]:
            errs.append("dashed tiling moved")
        plain = tile_shaft(replace(solid, tail=None))
        doubled = tile_shaft(replace(g, shaft="double", tail=None))
        v, h = getcos(pt("1.5"), g.slope)
        dv = -v if g.flags.nesw else v
        ups = [s for s in doubled if s.copy == 1]
        if [(s.start[0] - h, s.start[1] - dv, s.end[0] - h, s.end[1] - dv) for s in ups] != \
                [(*s.start, *s.end) for s in plain]:
            errs.append("double tiling moved")
        if errs:
            failures.append((spec.describe(), errs))
        done += 1
    report(4, not failures, f"{done - len(failures)}/{done} random diagonal tilings exact"
           + (f"; first failure {failures[0]}" if failures else ""))


def test_criterion_5_midpoint_ties():
    ok = 0
    for i in range(1, 23):
        m = midpoint(i)
        for k in (1, 7, 65536):
            if quantize_slope(m.numerator * k, m.denominator * k).index != i + 1:
                break
        else:
            ok += 1
    report(5, ok == 22, f"{ok}/22 adjacent-pair midpoints select the upper index")


def test_criterion_6_w_gap():
    p = MetricProvider(char_widths={ord("a"): pt(10)}, ratio_normal=Fraction(1))
    out = []
    for snippet, w in (("", 0), ("a", pt(10)), ("a" * 10, pt(100))):
        cfg = DiagramConfig(colgaps=(GapEntry(UNITY, snippet),))
        out.append(resolve_colgap(2, cfg, p) == max(pt(40), pt(15) + w))
    report(6, all(out), "widths 0/10/100pt resolve to max(40pt, 15pt+w): " + str(out))


def _build_all():
    return [(emit_svg(s), emit_geometry(s)) for s in
            (build_scene(parse_diagram(p.read_text())) for p in CORPUS)]


def test_criterion_7_determinism():
    first, second = _build_all(), _build_all()
    report(7, first == second and len(first) == len(CORPUS),
           f"{len(CORPUS)} corpus files byte-identical across two builds: {first == second}")


OPTION_KEYS = {
    "tail": lambda r: "tail=" + r.choice("eth'`()sH"),
    "head": lambda r: "head=" + r.choice("eht'`()sH"),
    "shaft": lambda r: "shaft=" + r.choice("0+-="),
    "bend": lambda r: f"bend={r.randint(-6, 6):+d}",
    "ds": lambda r: f"ds=({r.randint(-3, 3)};{r.randint(-3, 3)})",
    "dtX": lambda r: f"dtX=({r.randint(-3, 3)};{r.randint(-3, 3)})",
    "dtY": lambda r: f"dtY=({r.randint(-3, 3)};{r.randint(-3, 3)})",
    "dX": lambda r: f"dX={r.uniform(-4, 4):.2f}",
    "dY": lambda r: f"dY={r.uniform(-4, 4):.2f}",
    "perp": lambda r: f"perp={r.uniform(-4, 4):.2f}",
    "L": lambda r: 'L="' + r.choice(["f", "g", "hk"]) + '"',
    "l": lambda r: 'l="' + r.choice(["u", "v"]) + '"',
    "short": lambda r: r.choice(["short", "noshort"]),
}


def _first_wins_oracle(tokens):
    # each key keeps the value from its first token; short/noshort share one slot
    seen = {}
    for t in tokens:
        key = t.split("=", 1)[0]
        key = "short" if key in ("short", "noshort") else key
        seen.setdefault(key, t)
    return parse_options(" ".join(seen.values()))


def test_criterion_8_option_algebra():
    rng = random.Random(8)
    d = parse_diagram("[grid]\nA & BB & C\nDD & {} & E\nF & G & HHH\n")
    gm = measure_grid(d)
    places = [((1, 1), (1, -1)), ((1, 1), (2, -2)), ((3, 1), (2, 1)), ((1, 3), (-1, -2)),
              ((3, 3), (-2, 2)), ((1, 1), (2, 0)), ((1, 2), (0, -2))]
    bad = []
    for n in range(1000):
        tokens = [OPTION_KEYS[rng.choice(list(OPTION_KEYS))](rng) for _ in range(rng.randint(0, 14))]
        o = parse_options(" ".join(tokens))
        if o != _first_wins_oracle(tokens):
            bad.append(("first-wins", tokens))
            continue
        if parse_options(" ".join(tokens + tokens)) != o:
            bad.append(("repeat", tokens))
            continue
        at, off = places[n % len(places)]
        g = compute_endpoints(ArrowSpec(at, off, o), gm)
        once = apply_options(g, o, gm)
        if apply_options(once, o, gm) != once:
            bad.append(("idempotence", tokens))
    report(8, not bad, f"{1000 - len(bad)}/1000 option lists first-wins and idempotent"
           + (f"; first failure {bad[0]}" if bad else ""))


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
