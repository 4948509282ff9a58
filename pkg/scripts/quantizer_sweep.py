"""Sweep the slope quantizer over an integer grid of spans.

Prints how often each of the 23 slopes is chosen, the worst angular error
against the true direction, and the time per call.

    python3 scripts/quantizer_sweep.py --max 120
"""
import argparse
import math
import time
from collections import Counter
from dataclasses import dataclass

from cdlay.arrows import SLOPES, quantize_slope
from cdlay.fixedpoint import pt


@dataclass
class SweepConfig:
    max_span: int = 120
    unit_pt: int = 1


def sweep(cfg: SweepConfig):
    hits = Counter()
    worst = {}
    t0 = time.perf_counter()
    n = 0
    for dy in range(1, cfg.max_span + 1):
        for dx in range(1, cfg.max_span + 1):
            s = quantize_slope(pt(dy * cfg.unit_pt), pt(dx * cfg.unit_pt))
            n += 1
            hits[s.index] += 1
            err = abs(math.degrees(math.atan2(dy, dx) - math.atan2(s.rise, s.run)))
            worst[s.index] = max(worst.get(s.index, 0.0), err)
    return hits, worst, (time.perf_counter() - t0) / n


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=120, help="largest span in pt")
    args = ap.parse_args()
    hits, worst, per_call = sweep(SweepConfig(args.max))
    print(f"{'idx':>3} {'slope':>5} {'hits':>6} {'max err (deg)':>14}")
    for s in SLOPES:
        print(f"{s.index:>3} {s.rise}/{s.run:<3} {hits[s.index]:>6} {worst.get(s.index, 0):>14.3f}")
    print(f"{sum(hits.values())} cases, {per_call * 1e6:.2f} us per call")


if __name__ == "__main__":
    main()
