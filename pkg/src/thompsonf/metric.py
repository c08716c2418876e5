"""Word length over {x0, x1} read off the reduced forest diagram.

Every gap between adjacent leaf columns of the support gets one label per
forest:

    L  exterior and left of that forest's pointer
    N  the leaf just right of the gap is a left child (the gap sits
       immediately to the left of a caret)
    R  exterior and right of the pointer
    I  interior

with precedence L > N > R > I.  The length is the sum of the weights of
the (top, bottom) label pairs plus the number of carets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from . import diagram as dg
from .diagram import ForestDiagram, Forest
from .errors import PreconditionError
from .words import GENERATORS, Letter, Word, X0, X0_INV, X1, X1_INV

LABELS = "LNRI"

WEIGHTS: Mapping[tuple[str, str], int] = {
    (top, bottom): w
    for top, row in zip(LABELS, ((2, 1, 1, 1), (1, 2, 2, 2), (1, 2, 2, 0), (1, 2, 0, 0)))
    for bottom, w in zip(LABELS, row)
}


def weight(top: str, bottom: str) -> int:
    return WEIGHTS[top, bottom]


class LengthBreakdown(NamedTuple):
    ell0: int
    ell1: int

    @property
    def total(self) -> int:
        return self.ell0 + self.ell1


def forest_labels(forest: Forest) -> list[str]:
    """Label of every gap of the window; gap g lies between columns g and g+1."""
    tree_of: list[int] = []
    left_child: list[bool] = []

    def walk(t, j, is_left):
        if not t:
            tree_of.append(j)
            left_child.append(is_left)
            return
        walk(t[0], j, True)
        walk(t[1], j, False)

    for j, t in enumerate(forest.trees):
        walk(t, j, False)

    labels = []
    for g in range(len(tree_of) - 1):
        j = tree_of[g + 1]
        exterior = tree_of[g] != j
        if exterior and j <= forest.pointer:
            labels.append("L")
        elif left_child[g + 1]:
            labels.append("N")
        elif exterior:
            labels.append("R")
        else:
            labels.append("I")
    return labels


class Labeling(NamedTuple):
    spaces: tuple  # tuple of (top label, bottom label)

    def weights(self, table: Mapping[tuple[str, str], int] = WEIGHTS) -> list[int]:
        return [table[s] for s in self.spaces]

    def dump(self) -> str:
        return "\n".join(
            f"{g}: top={t} bottom={b} weight={WEIGHTS[t, b]}" for g, (t, b) in enumerate(self.spaces)
        )


def label_spaces(f: ForestDiagram) -> Labeling:
    return Labeling(tuple(zip(forest_labels(f.top), forest_labels(f.bottom))))


def length(f: ForestDiagram, weights: Mapping[tuple[str, str], int] = WEIGHTS) -> LengthBreakdown:
    """ell0 = total gap weight, ell1 = carets; ``weights`` exists for mutation tests."""
    ell0 = sum(label_spaces(f).weights(weights))
    return LengthBreakdown(ell0, f.caret_count)


def word_length(f: ForestDiagram) -> int:
    return length(f).total


def strongly_positive_length_stats(f: ForestDiagram) -> tuple[int, int]:
    """(n, c): gaps that are exterior or left of a caret, and caret count."""
    if not dg.is_strongly_positive(f):
        raise PreconditionError("element is not strongly positive")
    n = sum(1 for lab in forest_labels(f.top) if lab in "NR")
    return n, f.caret_count


# --------------------------------------------------------------------------
# Local geometry around the top pointer


@dataclass(frozen=True)
class _Local:
    width: int
    start: int  # first column of the current tree
    end: int  # one past its last column
    top: list
    bottom: list
    bottom_tree_of: list  # tree index of each bottom column


def _local(f: ForestDiagram) -> _Local:
    starts = f.top.starts()
    p = f.top.pointer
    bottom_tree_of = []
    for j, t in enumerate(f.bottom.trees):
        bottom_tree_of.extend([j] * dg.leaf_count(t))
    return _Local(
        f.width, starts[p], starts[p + 1],
        forest_labels(f.top), forest_labels(f.bottom), bottom_tree_of,
    )


def _lone_column(f: ForestDiagram, loc: _Local, col: int) -> bool:
    """Bottom tree at col is trivial and not the bottom pointer."""
    j = loc.bottom_tree_of[col]
    return not f.bottom.trees[j] and j != f.bottom.pointer


def cancels_bottom_caret(f: ForestDiagram) -> bool:
    """Whether x1*f deletes a bottom caret rather than creating a top one."""
    p = f.top.pointer
    if p + 1 >= len(f.top.trees) or f.top.trees[p] or f.top.trees[p + 1]:
        return False
    col = f.top.starts()[p]
    return col in dg._leaf_pair_carets(f.bottom.trees)


def predict_delta(s: tuple[int, int], f: ForestDiagram) -> int:
    """length(s*f) - length(f) from the labels of f alone."""
    s = Letter(*s)
    loc = _local(f)
    current = f.current_tree
    right = loc.end - 1  # gap index of the right space
    left = loc.start - 1  # gap index of the left space
    has_right = loc.end < loc.width
    has_left = loc.start > 0

    if s == X0:
        if not has_right:
            return 1
        shrink = loc.start == 0 and not current and _lone_column(f, loc, 0)
        top, bottom = loc.top[right], loc.bottom[right]
        if bottom == "L" and not shrink:
            return 1
        if (top, bottom) == ("R", "I"):
            return 1
        return -1
    if s == X0_INV:
        if not has_right and not current and _lone_column(f, loc, loc.width - 1):
            return -1
        if not has_left:
            return 1
        pair = (loc.top[left], loc.bottom[left])
        if pair == ("L", "L") or (pair == ("L", "I") and not current):
            return -1
        return 1
    if s == X1:
        if cancels_bottom_caret(f):
            return -1
        if has_right and (loc.top[right], loc.bottom[right]) == ("R", "R"):
            return -1
        return 1
    if s == X1_INV:
        if not current:
            return 1
        a, b = current
        if b:
            return -1
        gap = loc.start + dg.leaf_count(a) - 1
        if gap + 1 == loc.width - 1 and _lone_column(f, loc, gap + 1):
            return -1  # the uncovered space leaves the support
        return 1 if loc.bottom[gap] == "R" else -1
    raise PreconditionError(f"not an x0/x1 letter: {s!r}")


def minimum_length_word(f: ForestDiagram) -> Word:
    """A geodesic word for f whose x1^+-1 letters each build a caret of f."""
    f = dg.reduce(f)
    steps: list[Letter] = []
    while not dg.is_identity(f):
        for s in (X1, X1_INV, X0, X0_INV):
            if s == X1 and not cancels_bottom_caret(f):
                continue
            if s == X1_INV and not f.current_tree:
                continue
            if predict_delta(s, f) < 0:
                steps.append(s)
                f = dg.apply_generator(s, f)
                break
        else:  # pragma: no cover - some generator always shortens a nonidentity element
            raise AssertionError(f"no length-decreasing generator for\n{f}")
    return tuple(s.inverse() for s in steps)


def _right_space(f: ForestDiagram) -> tuple[str, str] | None:
    loc = _local(f)
    if loc.end >= loc.width:
        return None
    return loc.top[loc.end - 1], loc.bottom[loc.end - 1]


def _left_space(f: ForestDiagram) -> tuple[str, str] | None:
    loc = _local(f)
    if loc.start == 0:
        return None
    return loc.top[loc.start - 1], loc.bottom[loc.start - 1]


def dead_end_conditions(f: ForestDiagram) -> tuple[bool, bool, bool, bool]:
    """The four local conditions characterizing dead ends."""
    nontrivial = bool(f.current_tree)
    left_ll = _left_space(f) == ("L", "L")
    right_rr = _right_space(f) == ("R", "R")
    after = _right_space(dg.apply_generator(X1_INV, f))
    return nontrivial, left_ll, right_rr, after != ("R", "R")


def is_dead_end(f: ForestDiagram) -> bool:
    if dg.is_identity(f):
        raise PreconditionError("the identity is not a candidate dead end")
    # Same conditions as dead_end_conditions, cheapest first.
    return (
        bool(f.current_tree)
        and _right_space(f) == ("R", "R")
        and _left_space(f) == ("L", "L")
        and _right_space(dg.apply_generator(X1_INV, f)) != ("R", "R")
    )


def is_dead_end_by_definition(f: ForestDiagram) -> bool:
    """Every generator neighbor is strictly shorter."""
    if dg.is_identity(f):
        raise PreconditionError("the identity is not a candidate dead end")
    ell = word_length(f)
    return all(word_length(dg.apply_generator(s, f)) < ell for s in GENERATORS)


def dead_end_escape_length(f: ForestDiagram) -> int:
    """length(x1^-1 x1^-1 x0 f), which always equals length(f) + 1."""
    if not is_dead_end(f):
        raise PreconditionError("element is not a dead end")
    g = dg.apply_word((X1_INV, X1_INV, X0), f)
    escaped = word_length(g)
    if escaped != word_length(f) + 1:
        raise AssertionError(f"escape path did not leave the ball for\n{f}")
    return escaped


def is_k_pocket(f: ForestDiagram, k: int) -> bool:
    """No path of at most k generator steps reaches length above length(f)."""
    ell = word_length(f)
    frontier = {f}
    seen = {f}
    for _ in range(k):
        nxt = set()
        for g in frontier:
            for s in GENERATORS:
                h = dg.apply_generator(s, g)
                if h in seen:
                    continue
                if word_length(h) > ell:
                    return False
                seen.add(h)
                nxt.add(h)
        frontier = nxt
    return True
