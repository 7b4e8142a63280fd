"""Known reference values shared across test modules.

The 59 almost-squares up to 200 and their optimal rectangles; the list
is cross-checked against the brute-force oracle in the test suite
itself, so it can safely serve as frozen expected output elsewhere.
"""

FIRST_59 = [
    1, 2, 3, 4, 6, 8, 9, 12, 15, 16, 18, 20, 24, 25, 28, 30,
    35, 36, 40, 42, 48, 49, 54, 56, 60, 63, 64, 70, 72, 77, 80, 81, 88,
    90, 96, 99, 100, 108, 110, 117, 120, 121, 130, 132, 140, 143, 144,
    150, 154, 156, 165, 168, 169, 176, 180, 182, 192, 195, 196,
]

FIRST_59_DIMS = [
    (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 3),
    (3, 4), (3, 5), (4, 4), (3, 6), (4, 5), (4, 6), (5, 5), (4, 7),
    (5, 6), (5, 7), (6, 6), (5, 8), (6, 7), (6, 8), (7, 7), (6, 9),
    (7, 8), (6, 10), (7, 9), (8, 8), (7, 10), (8, 9), (7, 11), (8, 10),
    (9, 9), (8, 11), (9, 10), (8, 12), (9, 11), (10, 10), (9, 12),
    (10, 11), (9, 13), (10, 12), (11, 11), (10, 13), (11, 12), (10, 14),
    (11, 13), (12, 12), (10, 15), (11, 14), (12, 13), (11, 15), (12, 14),
    (13, 13), (11, 16), (12, 15), (13, 14), (12, 16), (13, 15), (14, 14),
]

assert len(FIRST_59) == 59
assert len(FIRST_59_DIMS) == 59
assert all(w * l == v for v, (w, l) in zip(FIRST_59, FIRST_59_DIMS))

# factorial arguments n <= 500 whose factorial is an almost-square
FACTORIAL_MEMBERS = [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15]
