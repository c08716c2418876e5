"""Exhaustive experiments on the Cayley graph of F over {x0, x1}.

Edges join f and s*f for s in {x0, x1} (left multiplication, matching the
generator actions on forest diagrams).  The BFS ball is the ground-truth
oracle for the length formula.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from . import diagram as dg
from .diagram import Forest, ForestDiagram, LEAF
from .errors import BudgetExceeded, PreconditionError
from .metric import (
    WEIGHTS,
    is_dead_end,
    is_k_pocket,
    length,
    word_length,
)
from .words import GENERATORS, X0, X1_INV, Word

DEFAULT_RADIUS = 10
DEFAULT_BUDGET = 10**7


@dataclass
class Ball:
    radius: int
    distances: dict  # canonical ForestDiagram -> BFS distance

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, f) -> bool:
        return f in self.distances

    def sphere_sizes(self) -> list[int]:
        counts = Counter(self.distances.values())
        return [counts[d] for d in range(self.radius + 1)]

    def sphere(self, d: int) -> list[ForestDiagram]:
        return sorted((f for f, k in self.distances.items() if k == d), key=dg.serialize)

    def by_serialization(self) -> dict[str, int]:
        return {dg.serialize(f): d for f, d in self.distances.items()}


def iter_spheres(radius: int, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, list[ForestDiagram], set]]:
    """Yield (d, elements at distance d, set of elements at distance d-1).

    Only two spheres are held at a time, so memory tracks the sphere size
    rather than the ball size.  ``budget`` caps the size of a single sphere.
    """
    if radius < 0:
        raise PreconditionError("radius must be >= 0")
    previous: set = set()
    current = {dg.identity()}
    yield 0, [dg.identity()], previous
    for d in range(1, radius + 1):
        nxt = set()
        for f in current:
            for s in GENERATORS:
                g = dg.apply_generator(s, f)
                if g not in current and g not in previous:
                    nxt.add(g)
        if len(nxt) > budget:
            raise BudgetExceeded(f"sphere of radius {d} has {len(nxt)} elements, budget {budget}")
        previous, current = current, nxt
        yield d, list(nxt), previous


def bfs_ball(radius: int, budget: int = DEFAULT_BUDGET) -> Ball:
    distances: dict = {}
    for d, sphere, _ in iter_spheres(radius, budget):
        if len(distances) + len(sphere) > budget:
            raise BudgetExceeded(f"ball of radius {radius} exceeds the budget of {budget} elements")
        for f in sphere:
            distances[f] = d
    return Ball(radius, distances)


def _ball(ball_or_radius) -> Ball:
    return ball_or_radius if isinstance(ball_or_radius, Ball) else bfs_ball(ball_or_radius)


@dataclass(frozen=True)
class Mismatch:
    diagram: str
    formula: int
    distance: int


def verify_length_formula(ball_or_radius, weights: Mapping = WEIGHTS) -> list[Mismatch]:
    ball = _ball(ball_or_radius)
    out = []
    for f, d in ball.distances.items():
        ell = length(f, weights).total
        if ell != d:
            out.append(Mismatch(dg.serialize(f), ell, d))
    return sorted(out, key=lambda m: (m.distance, m.diagram))


# --------------------------------------------------------------------------
# Growth of the positive monoid


def positive_growth_series(max_len: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Number of positive elements at each distance 0..max_len, by BFS."""
    return [sum(1 for f in sphere if dg.is_positive(f)) for _, sphere, _ in iter_spheres(max_len, budget)]


def growth_reference_series(max_len: int) -> list[int]:
    """Coefficients of (1 - x^2) / (1 - 2x - x^2 + x^3)."""
    num = [1, 0, -1]
    den = [1, -2, -1, 1]
    p: list[int] = []
    for k in range(max_len + 1):
        c = num[k] if k < len(num) else 0
        c -= sum(den[j] * p[k - j] for j in range(1, len(den)) if k - j >= 0)
        p.append(c)
    return p


def recurrence_start(p: list[int]) -> int | None:
    """Least n0 >= 3 with p_n = 2p_{n-1} + p_{n-2} - p_{n-3} for all n0 <= n < len(p)."""
    start = None
    for k in range(len(p) - 1, 2, -1):
        if p[k] != 2 * p[k - 1] + p[k - 2] - p[k - 3]:
            break
        start = k
    return start


# --------------------------------------------------------------------------
# Dead ends and pockets


@dataclass
class DeadEndReport:
    radius: int
    counts: dict = field(default_factory=dict)  # length -> number of dead ends
    dead_ends: list = field(default_factory=list)
    disagreements: list = field(default_factory=list)  # characterization != definition
    escape_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.escape_failures

    def table(self) -> str:
        lines = ["length count"]
        lines += [f"{ell} {self.counts.get(ell, 0)}" for ell in range(self.radius + 1)]
        return "\n".join(lines)


def _ball_spheres(ball: Ball) -> Iterator[tuple[int, list[ForestDiagram], set]]:
    spheres: list[list] = [[] for _ in range(ball.radius + 1)]
    for f, d in ball.distances.items():
        spheres[d].append(f)
    previous: set = set()
    for d, sphere in enumerate(spheres):
        yield d, sphere, previous
        previous = set(sphere)


def dead_end_census(ball_or_radius, budget: int = DEFAULT_BUDGET) -> DeadEndReport:
    """Dead ends by length, judged by BFS: every neighbor lies one sphere closer.

    Each one is cross-checked against the local label characterization and
    the escape path x1^-1 x1^-1 x0.  An integer radius streams the spheres
    instead of materializing the ball.
    """
    if isinstance(ball_or_radius, Ball):
        radius, spheres = ball_or_radius.radius, _ball_spheres(ball_or_radius)
    else:
        radius, spheres = ball_or_radius, iter_spheres(ball_or_radius, budget)
    report = DeadEndReport(radius)
    for d, sphere, previous in spheres:
        if d == 0:
            continue
        for f in sorted(sphere, key=dg.serialize):
            by_definition = all(dg.apply_generator(s, f) in previous for s in GENERATORS)
            if is_dead_end(f) != by_definition:
                report.disagreements.append(dg.serialize(f))
            if not by_definition:
                continue
            report.dead_ends.append(f)
            report.counts[d] = report.counts.get(d, 0) + 1
            escaped = word_length(dg.apply_word((X1_INV, X1_INV, X0), f))
            if escaped != d + 1:
                report.escape_failures.append(dg.serialize(f))
    return report


def pocket_census(ball_or_radius, k: int = 3) -> list[ForestDiagram]:
    """All k-pockets in the ball (expected empty for k >= 3)."""
    ball = _ball(ball_or_radius)
    return [f for f in ball.distances if is_k_pocket(f, k)]


# --------------------------------------------------------------------------
# Isoperimetric ratios


def trees_of_height(k: int) -> list:
    """All binary trees of height at most k."""
    trees = [LEAF]
    for _ in range(k):
        trees = [LEAF] + [(a, b) for a in trees for b in trees]
    return trees


def _forests(trees: list, width: int) -> Iterator[tuple]:
    """Sequences of the given trees with exactly ``width`` leaves in total."""
    if width == 0:
        yield ()
        return
    for t in trees:
        n = dg.leaf_count(t)
        if n <= width:
            for rest in _forests(trees, width - n):
                yield (t,) + rest


def folner_set(n: int, k: int) -> set[ForestDiagram]:
    """Positive elements of support width <= n spaces whose trees have height <= k."""
    trees = trees_of_height(k)
    out = set()
    for cols in range(1, n + 2):
        bottom = Forest((LEAF,) * cols, 0)
        for top in _forests(trees, cols):
            for p in range(len(top)):
                if top[-1] or p == len(top) - 1:
                    out.add(ForestDiagram(Forest(top, p), bottom))
    return out


def in_folner_set(f: ForestDiagram, n: int, k: int) -> bool:
    return dg.is_positive(f) and f.width - 1 <= n and all(dg.height(t) <= k for t in f.top.trees)


@dataclass(frozen=True)
class IsoReport:
    width: int
    height: int
    size: int
    boundary: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.boundary, self.size)


def iso_report(n: int, k: int) -> IsoReport:
    if n < 0 or k < 0:
        raise PreconditionError("width and height bounds must be >= 0")
    s = folner_set(n, k)
    boundary = 0
    for f in s:
        for g in GENERATORS:
            if dg.apply_generator(g, f) not in s:
                boundary += 1
    return IsoReport(n, k, len(s), boundary)


def iso_ratio(n: int, k: int) -> Fraction:
    """|boundary edges| / |S_{n,k}| as an exact rational."""
    return iso_report(n, k).ratio


# --------------------------------------------------------------------------
# Convexity witnesses


@dataclass(frozen=True)
class ConvexityWitness:
    n: int
    start: ForestDiagram  # l with length 2n+2
    end: ForestDiagram  # x0^2 l, also of length 2n+2
    path: Word  # letters s_1 ... s_m with end = s_m ... s_1 start
    distance: int


def _ball_distance(ball: Ball, source: ForestDiagram, target: ForestDiagram,
                   with_path: bool = False):
    """Shortest path length from source to target inside the ball, or None."""
    parent = {source: None}
    queue = deque([source])
    while queue:
        f = queue.popleft()
        if f == target:
            break
        for s in GENERATORS:
            g = dg.apply_generator(s, f)
            if g in ball.distances and g not in parent:
                parent[g] = (f, s)
                queue.append(g)
    if target not in parent:
        return None
    letters = []
    node = target
    while parent[node] is not None:
        node, s = parent[node]
        letters.append(s)
    letters.reverse()
    return (len(letters), tuple(letters)) if with_path else len(letters)


def convexity_witness(n: int, ball: Ball | None = None) -> ConvexityWitness:
    """Find l with |l| = |x0^2 l| = 2n+2 whose in-ball distance to x0^2 l is 4n+4."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    radius = 2 * n + 2
    if ball is None or ball.radius != radius:
        ball = bfs_ball(radius)
    for f in ball.sphere(radius):
        r = dg.apply_word((X0, X0), f)
        if ball.distances.get(r) != radius:
            continue
        found = _ball_distance(ball, f, r, with_path=True)
        if found is not None and found[0] == 4 * n + 4:
            return ConvexityWitness(n, f, r, found[1], found[0])
    raise AssertionError(f"no convexity witness in the {radius}-ball")


def verify_convexity_witness(w: ConvexityWitness) -> list[str]:
    """Re-check a witness with the length formula and a reverse search; empty when valid."""
    problems = []
    radius = 2 * w.n + 2
    if word_length(w.start) != radius or word_length(w.end) != radius:
        problems.append("endpoint lengths differ from 2n+2")
    if dg.apply_word((X0, X0), w.start) != w.end:
        problems.append("end is not x0^2 * start")
    if word_length(dg.apply_generator(X0, w.start)) <= radius:
        problems.append("direct path stays inside the ball")
    f = w.start
    for s in w.path:
        f = dg.apply_generator(s, f)
        if word_length(f) > radius:
            problems.append("path leaves the ball")
            break
    if f != w.end or len(w.path) != w.distance:
        problems.append("path does not join the endpoints")
    # Reverse search over the ball membership predicate rather than the BFS ball.
    seen = {w.end}
    frontier = [w.end]
    steps = 0
    while frontier and w.start not in seen:
        steps += 1
        nxt = []
        for g in frontier:
            for s in GENERATORS:
                h = dg.apply_generator(s, g)
                if h not in seen and word_length(h) <= radius:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    if w.start not in seen or steps != w.distance:
        problems.append(f"reverse search distance {steps} differs from {w.distance}")
    return problems
