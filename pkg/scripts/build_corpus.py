"""Build every ``.cdl`` file in a directory twice and report output digests.

    python3 scripts/build_corpus.py tests/corpus --out build/
"""
import argparse
import hashlib
import sys
from pathlib import Path

from cdlay.cli import build_scene, write_atomic
from cdlay.dsl import parse_diagram
from cdlay.render import emit_geometry, emit_svg


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("corpus", type=Path)
    ap.add_argument("--out", type=Path, help="write SVG and JSON here")
    args = ap.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    stable = True
    for path in sorted(args.corpus.glob("*.cdl")):
        runs = []
        for _ in range(2):
            s = build_scene(parse_diagram(path.read_text()))
            runs.append((emit_svg(s), emit_geometry(s)))
        same = runs[0] == runs[1]
        stable &= same
        svg, geo = runs[0]
        print(f"{path.name:<20} svg {digest(svg)}  geom {digest(geo)}  {'stable' if same else 'UNSTABLE'}")
        if args.out:
            write_atomic(args.out / f"{path.stem}.svg", svg)
            write_atomic(args.out / f"{path.stem}.json", geo)
    return 0 if stable else 1


if __name__ == "__main__":
    sys.exit(main())
