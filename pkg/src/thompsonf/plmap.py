"""Exact piecewise-linear homeomorphisms of the real line with dyadic data.

This is an independent semantic model of F: a forest diagram maps the k-th
bottom leaf interval linearly onto the k-th top leaf interval, and acts as
an integer translation outside its support.  Coordinates are anchored at
the pointers, whose trees occupy [0, 1].

Dyadic rationals are ``fractions.Fraction`` values with power-of-two
denominators.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Forest, ForestDiagram
from .errors import PreconditionError

Dyadic = Fraction


def is_dyadic(q: Fraction) -> bool:
    d = Fraction(q).denominator
    return d & (d - 1) == 0


def power_of_two_exponent(q: Fraction) -> int | None:
    """k with q == 2**k, or None."""
    q = Fraction(q)
    if q <= 0:
        return None
    n, d = q.numerator, q.denominator
    if n & (n - 1) == 0 and d == 1:
        return n.bit_length() - 1
    if n == 1 and d & (d - 1) == 0:
        return -(d.bit_length() - 1)
    return None


def format_dyadic(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/2^{q.denominator.bit_length() - 1}"


@dataclass(frozen=True)
class PLMap:
    """Breakpoints (x, y) in increasing order; t -> t - m on the far left, t - n on the far right."""

    breakpoints: tuple
    m: int
    n: int

    def __call__(self, t) -> Fraction:
        return plmap_apply(self, t)


def _canonical_map(points: list[tuple[Fraction, Fraction]], m: int, n: int) -> PLMap:
    """Keep only points where the slope changes (the ends have slope 1)."""
    kept = []
    for k, (x, y) in enumerate(points):
        if k == 0:
            before = Fraction(1)
        else:
            px, py = points[k - 1]
            before = (y - py) / (x - px)
        if k == len(points) - 1:
            after = Fraction(1)
        else:
            nx, ny = points[k + 1]
            after = (ny - y) / (nx - x)
        if before != after:
            kept.append((x, y))
    return PLMap(tuple(kept), m, n)


def identity_map() -> PLMap:
    return PLMap((), 0, 0)


def translation(m: int) -> PLMap:
    return PLMap((), m, m)


def leaf_partition(forest: Forest) -> list[Fraction]:
    """Endpoints of the leaf intervals; tree at offset j from the pointer spans [j, j+1]."""
    out: list[Fraction] = []

    def walk(t, lo, size):
        if not t:
            out.append(lo)
            return
        half = size / 2
        walk(t[0], lo, half)
        walk(t[1], lo + half, half)

    for i, t in enumerate(forest.trees):
        walk(t, Fraction(i - forest.pointer), Fraction(1))
    out.append(Fraction(len(forest.trees) - forest.pointer))
    return out


def to_plmap(f: ForestDiagram) -> PLMap:
    xs = leaf_partition(f.bottom)
    ys = leaf_partition(f.top)
    m = xs[0] - ys[0]
    n = xs[-1] - ys[-1]
    return _canonical_map(list(zip(xs, ys)), int(m), int(n))


def plmap_apply(a: PLMap, t) -> Fraction:
    t = Fraction(t)
    bps = a.breakpoints
    if not bps or t <= bps[0][0]:
        return t - a.m
    if t >= bps[-1][0]:
        return t - a.n
    k = bisect_right([x for x, _ in bps], t)
    (x0, y0), (x1, y1) = bps[k - 1], bps[k]
    return y0 + (t - x0) * (y1 - y0) / (x1 - x0)


def plmap_inverse(a: PLMap) -> PLMap:
    return PLMap(tuple((y, x) for x, y in a.breakpoints), -a.m, -a.n)


def plmap_compose(a: PLMap, b: PLMap) -> PLMap:
    """The map t -> a(b(t))."""
    check_plmap(a)
    check_plmap(b)
    b_inv = plmap_inverse(b)
    xs = {x for x, _ in b.breakpoints}
    xs.update(plmap_apply(b_inv, x) for x, _ in a.breakpoints)
    points = [(x, plmap_apply(a, plmap_apply(b, x))) for x in sorted(xs)]
    return _canonical_map(points, a.m + b.m, a.n + b.n)


def plmap_equal(a: PLMap, b: PLMap) -> bool:
    return a == b


def plmap_violations(a: PLMap) -> list[str]:
    """Everything wrong with a as an element of the group; empty when valid."""
    problems = []
    if not isinstance(a.m, int) or not isinstance(a.n, int):
        problems.append("end translations must be integers")
    bps = a.breakpoints
    if not bps and a.m != a.n:
        problems.append("a map without breakpoints is a single translation")
    for x, y in bps:
        if not (is_dyadic(x) and is_dyadic(y)):
            problems.append(f"non-dyadic breakpoint ({x}, {y})")
    for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
        if x1 <= x0 or y1 <= y0:
            problems.append(f"not increasing between {x0} and {x1}")
            continue
        if power_of_two_exponent((y1 - y0) / (x1 - x0)) is None:
            problems.append(f"slope {(y1 - y0) / (x1 - x0)} on [{x0}, {x1}] is not a power of 2")
    if bps:
        if bps[0][1] != bps[0][0] - a.m:
            problems.append("leftmost segment is not t - m")
        if bps[-1][1] != bps[-1][0] - a.n:
            problems.append("rightmost segment is not t - n")
    return problems


def check_plmap(a: PLMap) -> None:
    problems = plmap_violations(a)
    if problems:
        raise PreconditionError("; ".join(problems))


def breakpoint_table(a: PLMap) -> str:
    """Header with m and n, then rows "x y slope_exponent" (slope to the right of x)."""
    lines = [f"m={a.m} n={a.n}"]
    bps = a.breakpoints
    for k, (x, y) in enumerate(bps):
        if k + 1 < len(bps):
            nx, ny = bps[k + 1]
            exp = power_of_two_exponent((ny - y) / (nx - x))
        else:
            exp = 0
        lines.append(f"{format_dyadic(x)} {format_dyadic(y)} {exp}")
    return "\n".join(lines)
