#!/usr/bin/env python3
"""Walk the flock structure: shared semiperimeters, extents, and pioneers.

Almost-squares arrive in flocks that share one semiperimeter.  The k-th
flock is empty for k = 1, then grows roughly like sqrt(k)/2; a flock
that outgrows its predecessor of the same parity is opened by a
"pioneer", and the pioneers are exactly the products of consecutive
triangular numbers.
"""

from almost_squares import flock_members, pioneer, seq_a, seq_b, triangular

print("the first dozen flocks:")
for k in range(1, 13):
    members = flock_members(k)
    shown = ", ".join(f"{r.rect.width}x{r.rect.length}={r.value}" for r in members)
    print(f"  flock {k:2d}: {shown if shown else '(empty)'}")

print()
print("flock sizes are controlled by two slowly growing extents:")
for m in (10, 100, 1000, 10**6):
    print(
        f"  m = {m:>8}: odd flock 2m-1 has {1 + seq_a(m):4d} members, "
        f"even flock 2m has {1 + seq_b(m):4d}"
    )

print()
print("pioneers (first member of each suddenly-longer flock):")
for j in range(1, 9):
    value, fid = pioneer(j)
    w, l = triangular(j + 1), triangular(j + 2)
    print(f"  pioneer {j}: {w} x {l} = {value}, opening flock {fid.k} = {j + 1}^2")

print()
print("even-numbered pioneers tie the ratio record instead of beating it:")
for j in (2, 4, 6):
    value, fid = pioneer(j)
    members = flock_members(fid.k - 1) or flock_members(fid.k - 2)
    prev = members[-1]
    print(
        f"  {value}/{fid.k} = {value / fid.k:.6f}  equals  "
        f"{prev.value}/{prev.semiperimeter} = {prev.value / prev.semiperimeter:.6f}"
    )
