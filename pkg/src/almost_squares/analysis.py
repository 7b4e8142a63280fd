"""Floating-point counting approximation and remainder-term analysis.

The core module counts almost-squares exactly.  This module carries the
continuous side of the story: the smooth approximation B(x) built from
fractional parts of fourth roots, the oscillating remainder R(x) left
after subtracting the main growth term (2*sqrt(2)/3) * x^(3/4) +
sqrt(x)/2, the two period-1 shapes g and h that explain the large and
small oscillations, probes of the lim inf / lim sup of the normalized
remainder, and CSV emission of the series behind all of it.

Fractional parts are evaluated with mpmath at generous working
precision, and the discontinuity points are pinned with exact integer
root checks: gamma(4) really is 0 and b_value(4).b really is 4.0, not
3.5 from a fractional part that rounded to 0.999... just below the
jump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import TextIO

import numpy as np
from mpmath import mp, mpf

from .core import count_le, enumerate_range, is_almost_square, triangular

__all__ = [
    "AnalysisSample",
    "BTerms",
    "SamplingPlan",
    "b_value",
    "emit_series",
    "g_func",
    "h_func",
    "kite_region_contains",
    "limit_probe",
    "remainder",
    "tri_product_grid",
    "z_bracket",
]

SQRT2 = math.sqrt(2.0)

_MIN_DPS = 60


def _digit_count(n: int) -> int:
    return max(1, (abs(n).bit_length() * 30103) // 100000 + 1)


def _dps_for(x: Fraction) -> int:
    # enough digits to hold x exactly plus comfortable headroom for the
    # fractional parts of its roots
    return max(_MIN_DPS, _digit_count(x.numerator) + 30)


def _iroot4(n: int) -> int:
    return isqrt(isqrt(n))


def _frac_fourth_root(y: Fraction) -> mpf:
    """Fractional part of y**(1/4) for rational y >= 0.

    Integer perfect fourth powers are detected exactly so the result is
    a true 0 at the discontinuities of the fractional part.
    """
    if y.denominator == 1:
        n = y.numerator
        r = _iroot4(n)
        if r**4 == n:
            return mpf(0)
        return mp.root(mpf(n), 4) - r
    f = mp.root(mpf(y.numerator) / y.denominator, 4)
    return f - mp.floor(f)


def _frac_sqrt(y: Fraction) -> mpf:
    """Fractional part of sqrt(y) for rational y >= 0, exact at squares."""
    if y.denominator == 1:
        n = y.numerator
        r = isqrt(n)
        if r * r == n:
            return mpf(0)
        return mp.sqrt(mpf(n)) - r
    f = mp.sqrt(mpf(y.numerator) / y.denominator)
    return f - mp.floor(f)


# --------------------------------------------------------------------------
# the smooth counting approximation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BTerms:
    """The smooth count approximation at x, split into its pieces.

    gamma and delta are the fractional parts of sqrt(2)*x^(1/4) and
    x^(1/4)/sqrt(2); b0 carries the growth terms, b1 is a bounded
    correction confined to [-2, -1], and b = b0 + b1.
    """

    x: float
    gamma: float
    delta: float
    b0: float
    b1: float
    b: float


def b_value(x: int | float) -> BTerms:
    """Evaluate the smooth counting approximation at x >= 1.

    At every perfect square x = m^2 the value agrees with the exact
    count of almost-squares up to m^2 (to the accuracy of the float
    conversion of the result).
    """
    xq = Fraction(x)
    if xq < 1:
        raise ValueError("x must be >= 1")
    with mp.workdps(_dps_for(xq)):
        gamma = _frac_fourth_root(4 * xq)
        delta = _frac_fourth_root(xq / 4)
        xm = mpf(xq.numerator) / xq.denominator
        quarter = mp.root(xm, 4)
        c = 2 * mp.sqrt(2) / 3
        b0 = (
            c * quarter**3
            + mp.sqrt(xm) / 2
            + (c + gamma * (1 - gamma) / mp.sqrt(2)) * quarter
        )
        b1 = gamma**3 / 6 - gamma**2 / 4 - 5 * gamma / 12 - delta / 2 - 1
        return BTerms(
            x=float(xm),
            gamma=float(gamma),
            delta=float(delta),
            b0=float(b0),
            b1=float(b1),
            b=float(b0 + b1),
        )


# --------------------------------------------------------------------------
# the two oscillation shapes
# --------------------------------------------------------------------------

def g_func(t: float) -> float:
    """Period-1 arch {t}(1-{t})/sqrt(2); peaks at 1/(4*sqrt(2))."""
    f = t - math.floor(t)
    return f * (1.0 - f) / SQRT2


def h_func(t: float) -> float:
    """Period-1 ramp with a square-root shoulder; peaks at 1/(2*sqrt(2))."""
    f = t - math.floor(t)
    if f <= 0.5:
        return f / SQRT2
    return math.sqrt(1.0 - f) - (1.0 - f) / SQRT2


# --------------------------------------------------------------------------
# remainder term
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisSample:
    """One sampled point of the remainder-term series."""

    x: float
    a_of_x: int
    r: float
    r_normalized: float
    g_val: float
    h_val: float


def remainder(n: int) -> AnalysisSample:
    """Exact count at n minus the smooth main term, plus oscillation inputs.

    g_val samples the large-scale shape at sqrt(2)*n^(1/4); h_val
    samples the small-scale shape at 2*sqrt(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = count_le(n)
    nq = Fraction(n)
    with mp.workdps(_dps_for(nq)):
        xm = mpf(n)
        quarter = mp.root(xm, 4)
        main = 2 * mp.sqrt(2) / 3 * quarter**3 + mp.sqrt(xm) / 2
        r = mpf(a) - main
        r_norm = r / quarter
        g_val = g_func(float(_frac_fourth_root(4 * nq)))
        h_val = h_func(float(_frac_sqrt(4 * nq)))
    return AnalysisSample(
        x=float(n),
        a_of_x=a,
        r=float(r),
        r_normalized=float(r_norm),
        g_val=g_val,
        h_val=h_val,
    )


def limit_probe(j: int) -> tuple[float, float]:
    """Normalized remainder along the two extremal sequences.

    The first component samples x = 4j^4 + j^2 and tends to
    5/(6*sqrt(2)) from nearby; the second samples x = (2j^2+j)^2 and
    tends to 19/(12*sqrt(2)).
    """
    if j < 1:
        raise ValueError("index j must be >= 1")
    low_x = 4 * j**4 + j**2
    high_x = (2 * j * j + j) ** 2
    return remainder(low_x).r_normalized, remainder(high_x).r_normalized


def z_bracket(j: int) -> tuple[float, bool]:
    """Seed estimate z for locating the j-th almost-square, and its bracket check.

    z = (3j)^(2/3)/2 - (3j)^(1/3)/4.  ok reports whether
    b_value((z-1)^2).b < j < b_value(z^2).b, the property that makes z a
    safe starting point for ranked access.
    """
    if j <= 5:
        raise ValueError("index j must be > 5")
    t = 3.0 * j
    z = 0.5 * t ** (2.0 / 3.0) - 0.25 * t ** (1.0 / 3.0)
    ok = b_value((z - 1.0) ** 2).b < j < b_value(z * z).b
    return z, ok


# --------------------------------------------------------------------------
# products of two triangular numbers
# --------------------------------------------------------------------------

def kite_region_contains(m: int, n: int) -> bool:
    """Strict interior of the region where parity alone decides the grid.

    The region is n - 1 > m > 3n - sqrt(8n(n-1)) - 1, tested here in
    exact integer arithmetic.
    """
    if m >= n - 1:
        return False
    d = 3 * n - m - 1
    return d <= 0 or d * d < 8 * n * (n - 1)


def tri_product_grid(m_max: int) -> np.ndarray:
    """Boolean table: entry [m, n] says whether t_m * t_n is an almost-square.

    Rows and columns are 1-based (index 0 is unused).  Products with
    t_1 = 0 are not positive integers and come out False.  Strictly
    inside the kite region the table equals the parity of n - m.
    """
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    tri = [0] * (m_max + 1)
    for i in range(1, m_max + 1):
        tri[i] = triangular(i)
    grid = np.zeros((m_max + 1, m_max + 1), dtype=bool)
    for m in range(2, m_max + 1):
        for n in range(m, m_max + 1):
            product = tri[m] * tri[n]
            hit = product >= 1 and is_almost_square(product) is not None
            grid[m, n] = hit
            grid[n, m] = hit
    return grid


# --------------------------------------------------------------------------
# CSV emission
# --------------------------------------------------------------------------

_PLAN_KINDS = ("A-of-x", "R-of-x", "R-normalized", "tri-grid")


@dataclass(frozen=True)
class SamplingPlan:
    """What to emit: which series, over which range, sampled how.

    The remainder series default to sampling at the almost-square values
    themselves (one point every time x passes a member); pass
    at_members=False to sample a fixed-step grid instead.  For tri-grid
    plans lo and hi bound both table indices.
    """

    kind: str
    lo: int
    hi: int
    step: int = 1
    at_members: bool | None = None
    max_rows: int = 1_000_000


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _check_rows(expected: int, plan: SamplingPlan) -> None:
    if expected > plan.max_rows:
        raise ValueError(
            f"plan would emit {expected} rows, above the cap of {plan.max_rows}"
        )


def emit_series(plan: SamplingPlan, out: TextIO) -> int:
    """Write the planned series as CSV to out; returns the row count.

    Output is deterministic for a fixed plan: header line, then one row
    per sample, LF line endings, reals at 17 significant digits,
    integers exact.  Infeasible plans are rejected before any output is
    written.
    """
    if plan.kind not in _PLAN_KINDS:
        raise ValueError(f"unknown plan kind {plan.kind!r}")
    if plan.step < 1:
        raise ValueError("step must be >= 1")

    if plan.kind == "tri-grid":
        lo = max(plan.lo, 1)
        hi = plan.hi
        span = hi - lo + 1
        if span > 0:
            _check_rows(span * span, plan)
        out.write("m,n,is_member\n")
        rows = 0
        if span > 0 and hi >= 2:
            grid = tri_product_grid(hi)
            for m in range(lo, hi + 1):
                for n in range(lo, hi + 1):
                    out.write(f"{m},{n},{1 if grid[m, n] else 0}\n")
                    rows += 1
        return rows

    if plan.hi >= plan.lo and plan.lo < 1:
        raise ValueError("lo must be >= 1")

    if plan.kind == "A-of-x":
        expected = 0 if plan.hi < plan.lo else (plan.hi - plan.lo) // plan.step + 1
        _check_rows(expected, plan)
        out.write("x,A\n")
        rows = 0
        for x in range(plan.lo, plan.hi + 1, plan.step):
            out.write(f"{x},{count_le(x)}\n")
            rows += 1
        return rows

    # remainder series
    at_members = True if plan.at_members is None else plan.at_members
    header = "x,A,R,R_norm,g,h\n"
    if plan.hi < plan.lo:
        out.write(header)
        return 0
    if at_members:
        expected = count_le(plan.hi) - (count_le(plan.lo - 1) if plan.lo > 1 else 0)
        _check_rows(expected, plan)
        xs = (rec.value for rec in enumerate_range(plan.lo, plan.hi))
    else:
        expected = (plan.hi - plan.lo) // plan.step + 1
        _check_rows(expected, plan)
        xs = iter(range(plan.lo, plan.hi + 1, plan.step))
    out.write(header)
    rows = 0
    for x in xs:
        s = remainder(x)
        out.write(
            f"{x},{s.a_of_x},{_fmt(s.r)},{_fmt(s.r_normalized)},"
            f"{_fmt(s.g_val)},{_fmt(s.h_val)}\n"
        )
        rows += 1
    return rows
