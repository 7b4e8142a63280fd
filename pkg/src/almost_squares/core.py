"""Exact integer machinery for almost-squares.

An almost-square is a positive integer n whose optimal integer-sided
rectangle (area n, least semiperimeter s(n)) sets or ties the running
record for the ratio n / s(n) among all integers up to n.  The
almost-squares organize themselves into "flocks": maximal runs of
members sharing one semiperimeter k.  Odd flocks (k = 2m-1) live in the
interval ((m-1)^2, m(m-1)] and even flocks (k = 2m) in (m(m-1), m^2],
and within each flock the members form an explicit family indexed by
how far the rectangle is from square:

    odd flock:   (m+a)(m-a-1)  for a = a_m down to 0
    even flock:  (m+b)(m-b)    for b = b_m down to 0

where a_m = floor((sqrt(2m-1)-1)/2) and b_m = floor(sqrt(m/2)).  That
structure is what every routine below exploits: membership reduces to a
perfect-square or pronic-gap test, counting to a closed form in
floor(sqrt(2m)), and ranked access to inverting that count.

Everything in this module is exact integer arithmetic, so results are
bit-exact for integers of any size and run in time polynomial in the
digit count.  No routine here ever factors its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import ceil, gcd, isqrt

__all__ = [
    "AlmostSquareRecord",
    "FlockId",
    "RatioValue",
    "Rectangle",
    "count_at_square",
    "count_le",
    "count_triangular_le",
    "enumerate_range",
    "flock_members",
    "floor_almost_square",
    "is_almost_square",
    "isqrt",
    "nth",
    "pioneer",
    "seq_a",
    "seq_b",
    "tri_decompose",
    "triangular",
]


# --------------------------------------------------------------------------
# domain types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Rectangle:
    """An optimal factorization of an almost-square, width <= length.

    The width is the largest divisor of the area not exceeding its
    square root; the semiperimeter width + length is the least possible
    over all integer-sided rectangles of the same area.
    """

    width: int
    length: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.length < self.width:
            raise ValueError(f"invalid rectangle {self.width}x{self.length}")

    @property
    def area(self) -> int:
        return self.width * self.length

    @property
    def semiperimeter(self) -> int:
        return self.width + self.length

    def __str__(self) -> str:
        return f"{self.width}x{self.length}"


@dataclass(frozen=True)
class FlockId:
    """A flock addressed by its common semiperimeter k.

    The k-th flock holds the almost-squares whose optimal rectangle has
    semiperimeter exactly k.  Odd k = 2m-1 cover ((m-1)^2, m(m-1)], even
    k = 2m cover (m(m-1), m^2].  Flock 1 is empty; flocks 2 and 3 hold
    the single members 1 and 2.
    """

    k: int
    m: int
    parity: str

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("flock semiperimeter k must be >= 1")
        if self.k % 2:
            expected = ((self.k + 1) // 2, "odd")
        else:
            expected = (self.k // 2, "even")
        if (self.m, self.parity) != expected:
            raise ValueError(
                f"inconsistent flock id k={self.k}, m={self.m}, parity={self.parity!r}"
            )

    @classmethod
    def from_semiperimeter(cls, k: int) -> "FlockId":
        if k < 1:
            raise ValueError("flock semiperimeter k must be >= 1")
        if k % 2:
            return cls(k=k, m=(k + 1) // 2, parity="odd")
        return cls(k=k, m=k // 2, parity="even")

    def value_interval(self) -> tuple[int, int]:
        """Bounds (lo, hi] of the values this flock may contain."""
        m = self.m
        if self.parity == "odd":
            return (m - 1) ** 2, m * (m - 1)
        return m * (m - 1), m * m


@dataclass(frozen=True)
class AlmostSquareRecord:
    """One almost-square together with its membership witness."""

    value: int
    rect: Rectangle
    semiperimeter: int
    flock: FlockId

    @property
    def ratio(self) -> "RatioValue":
        return RatioValue(self.value, self.semiperimeter)


@total_ordering
class RatioValue:
    """Area-to-semiperimeter ratio kept as an unreduced integer pair.

    Comparisons cross-multiply, so records and ties are decided exactly
    no matter how large the operands get.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: int, denominator: int) -> None:
        if numerator < 1 or denominator < 1:
            raise ValueError("ratio numerator and denominator must be positive")
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatioValue):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __lt__(self, other: "RatioValue") -> bool:
        if not isinstance(other, RatioValue):
            return NotImplemented
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self) -> int:
        g = gcd(self.numerator, self.denominator)
        return hash((self.numerator // g, self.denominator // g))

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __repr__(self) -> str:
        return f"RatioValue({self.numerator}, {self.denominator})"


# --------------------------------------------------------------------------
# integer root helpers
# --------------------------------------------------------------------------

def _ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def _icbrt(n: int) -> int:
    """Floor cube root, exact for arbitrary magnitude."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    x = 1 << -(-n.bit_length() // 3)  # power of two at or above the root
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


# extents of the two flock families; unguarded so the m = 1 edge flocks
# (k = 1 empty, k = 2 holding just 1x1) reuse the same formulas
def _odd_extent(m: int) -> int:
    return (isqrt(2 * m - 1) - 1) // 2


def _even_extent(m: int) -> int:
    return isqrt(m // 2)


# --------------------------------------------------------------------------
# supporting sequences
# --------------------------------------------------------------------------

def triangular(i: int) -> int:
    """The i-th triangular number under the zero-first convention.

    triangular(1) = 0, triangular(2) = 1, triangular(3) = 3, and in
    general i*(i-1)/2.
    """
    if i < 1:
        raise ValueError("index i must be >= 1")
    return i * (i - 1) // 2


def count_triangular_le(x: int) -> int:
    """How many triangular numbers 0, 1, 3, 6, 10, ... are <= x."""
    if x < 0:
        raise ValueError("x must be >= 0")
    return (1 + isqrt(8 * x + 1)) // 2


def seq_a(m: int) -> int:
    """Largest offset a for which (m+a)(m-a-1) still joins the odd flock 2m-1.

    The odd flock with parameter m has exactly 1 + seq_a(m) members.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    return _odd_extent(m)


def seq_b(m: int) -> int:
    """Largest offset b for which (m+b)(m-b) still joins the even flock 2m.

    The even flock with parameter m has exactly 1 + seq_b(m) members.
    Equivalently the largest b with b*b*(2m-1) <= m*m.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    return _even_extent(m)


# --------------------------------------------------------------------------
# flocks and membership
# --------------------------------------------------------------------------

def _record(rect: Rectangle, fid: FlockId) -> AlmostSquareRecord:
    return AlmostSquareRecord(
        value=rect.area, rect=rect, semiperimeter=fid.k, flock=fid
    )


def flock_members(flock: FlockId | int) -> list[AlmostSquareRecord]:
    """All members of a flock in increasing value order.

    Accepts a FlockId or a bare semiperimeter k >= 1.  Flock 1 is empty.
    """
    fid = flock if isinstance(flock, FlockId) else FlockId.from_semiperimeter(flock)
    if fid.k == 1:
        return []
    m = fid.m
    out: list[AlmostSquareRecord] = []
    if fid.parity == "odd":
        for a in range(_odd_extent(m), -1, -1):
            out.append(_record(Rectangle(m - a - 1, m + a), fid))
    else:
        for b in range(_even_extent(m), -1, -1):
            out.append(_record(Rectangle(m - b, m + b), fid))
    return out


def is_almost_square(n: int) -> Rectangle | None:
    """Return the optimal rectangle of n if n is an almost-square, else None.

    Pure interval test: with m the ceiling square root of n, membership
    on the even side means m^2 - n is a perfect square b^2 with
    b <= seq_b(m); on the odd side it means m(m-1) - n is a pronic
    number a(a+1) with a <= seq_a(m).  Runs in time polynomial in the
    digit count of n and never factors n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = _ceil_sqrt(n)
    if n > m * (m - 1):
        gap = m * m - n
        b = isqrt(gap)
        if b * b == gap and b <= _even_extent(m):
            return Rectangle(m - b, m + b)
        return None
    gap = m * (m - 1) - n
    a = (isqrt(4 * gap + 1) - 1) // 2
    if a * (a + 1) == gap and a <= _odd_extent(m):
        return Rectangle(m - a - 1, m + a)
    return None


def tri_decompose(n: int) -> tuple[int, int]:
    """Write an almost-square n as k*(k+h) with 0 <= h <= count_triangular_le(k).

    k is the width of the optimal rectangle and h the excess of its
    length.  Raises ValueError if n is not an almost-square.
    """
    rect = is_almost_square(n)
    if rect is None:
        raise ValueError(f"{n} is not an almost-square")
    return rect.width, rect.length - rect.width


# --------------------------------------------------------------------------
# counting and ranked access
# --------------------------------------------------------------------------

def count_at_square(m: int) -> int:
    """Number of almost-squares not exceeding m**2, in closed form.

    With mu = floor(sqrt(2m)) the count times 12 equals
    12m(mu+1) + 6mu - 12 - mu(mu+1)(2mu+1) + 6*floor(mu/2); the
    divisibility by 12 is asserted as an internal consistency check.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    mu = isqrt(2 * m)
    twelve = (
        12 * m * (mu + 1)
        + 6 * mu
        - 12
        - mu * (mu + 1) * (2 * mu + 1)
        + 6 * (mu // 2)
    )
    if twelve % 12:
        raise AssertionError(f"closed-form count not divisible by 12 at m={m}")
    return twelve // 12


def count_le(n: int) -> int:
    """Number of almost-squares not exceeding n (exact, polynomial time)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = _ceil_sqrt(n)
    pivot = m * (m - 1)
    if n > pivot:
        # members above n in the even flock are m^2 - b'^2 for b' < b
        b = _ceil_sqrt(m * m - n)
        b_max = _even_extent(m)
        return count_at_square(m) - (b if b <= b_max else b_max + 1)
    gap = pivot - n
    a = isqrt(gap)
    if a * (a + 1) < gap:
        a += 1
    # a is now the least offset with a(a+1) >= gap
    if a <= _odd_extent(m):
        return count_at_square(m) - _even_extent(m) - 1 - a
    return count_at_square(m - 1)


_FIRST_FIVE: tuple[AlmostSquareRecord, ...] = ()


def _first_five() -> tuple[AlmostSquareRecord, ...]:
    global _FIRST_FIVE
    if not _FIRST_FIVE:
        table: list[AlmostSquareRecord] = []
        k = 1
        while len(table) < 5:
            table.extend(flock_members(k))
            k += 1
        _FIRST_FIVE = tuple(table[:5])
    return _FIRST_FIVE


def _seed_square_param(j: int) -> int:
    # the j-th member sits near the square of (3j)^(2/3)/2 - (3j)^(1/3)/4;
    # beyond float range, integer cube roots give the same seed
    t = 3 * j
    if t < (1 << 50):
        c = t ** (1.0 / 3.0)
        return max(1, ceil(0.5 * c * c - 0.25 * c))
    return max(1, (2 * _icbrt(t * t) - _icbrt(t)) // 4 + 1)


def nth(j: int) -> AlmostSquareRecord:
    """The j-th almost-square in increasing order, with its rectangle.

    The square parameter is seeded from a float (or integer-root)
    estimate and then pinned down with exact counts, so rounding can
    never corrupt the answer.
    """
    if j < 1:
        raise ValueError("index must be >= 1")
    first = _first_five()
    if j <= len(first):
        return first[j - 1]
    m = _seed_square_param(j)
    while count_at_square(m) < j:
        m += 1
    while m > 1 and count_at_square(m - 1) >= j:
        m -= 1
    offset = count_at_square(m) - j
    b_max = _even_extent(m)
    if offset <= b_max:
        b = offset
        fid = FlockId(2 * m, m, "even")
        rect = Rectangle(m - b, m + b)
    else:
        a = offset - b_max - 1
        fid = FlockId(2 * m - 1, m, "odd")
        rect = Rectangle(m - a - 1, m + a)
    return _record(rect, fid)


def floor_almost_square(n: int) -> AlmostSquareRecord:
    """The largest almost-square not exceeding n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return nth(count_le(n))


def pioneer(j: int) -> tuple[int, FlockId]:
    """The j-th flock-lengthening almost-square and the flock it opens.

    A pioneer starts the first flock that is longer than the preceding
    flock of the same parity.  The j-th pioneer is the product of the
    (j+1)-st and (j+2)-nd triangular numbers and opens flock (j+1)^2.
    """
    if j < 1:
        raise ValueError("index j must be >= 1")
    value = triangular(j + 1) * triangular(j + 2)
    return value, FlockId.from_semiperimeter((j + 1) ** 2)


def enumerate_range(lo: int, hi: int) -> list[AlmostSquareRecord]:
    """All almost-squares in [lo, hi] in increasing order."""
    if lo < 1:
        raise ValueError("lo must be >= 1")
    if hi < lo:
        raise ValueError("lo must not exceed hi")
    out: list[AlmostSquareRecord] = []
    for m in range(_ceil_sqrt(lo), _ceil_sqrt(hi) + 1):
        for k in (2 * m - 1, 2 * m):
            for rec in flock_members(k):
                if lo <= rec.value <= hi:
                    out.append(rec)
    return out
