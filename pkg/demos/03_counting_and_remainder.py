#!/usr/bin/env python3
"""Exact counts, the smooth approximation, and the oscillating remainder.

The count A(x) of almost-squares up to x grows like
(2*sqrt(2)/3) x^(3/4) + sqrt(x)/2.  What is left after subtracting that
main term oscillates on two scales, described by the period-1 shapes g
and h.  This script prints the comparison and writes the series behind
the picture to CSV files.
"""

import math
from pathlib import Path

from almost_squares import count_at_square, count_le
from almost_squares.analysis import SamplingPlan, b_value, emit_series, limit_probe

print("exact count vs smooth approximation at squares:")
for m in (10, 100, 1000, 10**4, 10**5):
    exact = count_at_square(m)
    smooth = b_value(m * m).b
    print(f"  A({m}^2) = {exact:>10,}    B = {smooth:>14,.3f}")

print()
print("the normalized remainder R(x) / x^(1/4) stays inside a fixed band:")
low_lim = 5 / (6 * math.sqrt(2))
high_lim = 19 / (12 * math.sqrt(2))
print(f"  lim inf = 5/(6*sqrt 2)  = {low_lim:.5f}")
print(f"  lim sup = 19/(12*sqrt 2) = {high_lim:.5f}")
for j in (10, 100, 1000):
    low, high = limit_probe(j)
    print(f"  probe j={j:>5}: near-inf sample {low:.5f}, near-sup sample {high:.5f}")

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

with open(out_dir / "count_series.csv", "w", encoding="utf-8") as fh:
    rows = emit_series(SamplingPlan("A-of-x", 1, 5000), fh)
print(f"\nwrote {rows} rows of exact counts to {out_dir / 'count_series.csv'}")

with open(out_dir / "remainder_series.csv", "w", encoding="utf-8") as fh:
    rows = emit_series(SamplingPlan("R-normalized", 1, 5000), fh)
print(f"wrote {rows} member-sampled remainder rows to {out_dir / 'remainder_series.csv'}")

# the small-scale stutter pattern near 800^2, as member-sampled points
with open(out_dir / "stutter_series.csv", "w", encoding="utf-8") as fh:
    rows = emit_series(SamplingPlan("R-normalized", 800 * 800, 802 * 802), fh)
print(f"wrote {rows} rows around 800^2..802^2 to {out_dir / 'stutter_series.csv'}")
print("breakpoints to look for: 800*801, 801^2, 801*802")

print(f"\nsanity: count_le(5000) = {count_le(5000)}")
