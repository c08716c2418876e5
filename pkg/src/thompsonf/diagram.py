"""Forest diagrams for elements of Thompson's group F.

A tree is a nested tuple: ``LEAF == ()`` and a caret is ``(left, right)``.
A forest stores a finite window of trees plus the index of the pointer tree;
everything outside the window is implicitly trivial.  Both forests of a
diagram are stored over one shared window of leaf columns, so the leaf
bijection is positional.

Canonical diagrams have the window equal to the support: the minimal run of
columns containing both pointers and every nontrivial tree.  All public
operations return canonical diagrams; ``reduce`` additionally removes
opposing caret pairs.

Letters are ``(index, sign)`` pairs.  Left multiplication acts on the top
forest (the range); the bottom forest is the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DiagramSyntaxError, MalformedDiagram, PreconditionError

LEAF: tuple = ()
# () for a leaf, (left, right) for a caret
Tree = tuple


def caret(left: Tree, right: Tree) -> Tree:
    return (left, right)


def is_leaf(t: Tree) -> bool:
    return not t


def leaf_count(t: Tree) -> int:
    if not t:
        return 1
    return leaf_count(t[0]) + leaf_count(t[1])


def caret_count(t: Tree) -> int:
    return leaf_count(t) - 1


def height(t: Tree) -> int:
    if not t:
        return 0
    return 1 + max(height(t[0]), height(t[1]))


def tree_to_str(t: Tree) -> str:
    if not t:
        return "."
    return "(" + tree_to_str(t[0]) + tree_to_str(t[1]) + ")"


def _parse_tree(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text):
        raise DiagramSyntaxError(f"unexpected end of tree in {text!r}")
    ch = text[pos]
    if ch == ".":
        return LEAF, pos + 1
    if ch == "(":
        left, pos = _parse_tree(text, pos + 1)
        right, pos = _parse_tree(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise DiagramSyntaxError(f"expected ')' at {pos} in {text!r}")
        return (left, right), pos + 1
    raise DiagramSyntaxError(f"unexpected {ch!r} at {pos} in {text!r}")


def parse_tree(text: str) -> Tree:
    t, pos = _parse_tree(text, 0)
    if pos != len(text):
        raise DiagramSyntaxError(f"trailing characters in tree {text!r}")
    return t


class Forest(NamedTuple):
    trees: tuple
    pointer: int

    @property
    def total_leaves(self) -> int:
        return sum(leaf_count(t) for t in self.trees)

    @property
    def caret_count(self) -> int:
        return sum(caret_count(t) for t in self.trees)

    def starts(self) -> list[int]:
        """Column index of the leftmost leaf of every tree, plus the window width."""
        out = [0]
        for t in self.trees:
            out.append(out[-1] + leaf_count(t))
        return out

    def is_trivial(self) -> bool:
        return all(not t for t in self.trees)

    def __str__(self) -> str:
        return " ".join(
            ("*" if i == self.pointer else "") + tree_to_str(t)
            for i, t in enumerate(self.trees)
        )


def parse_forest(text: str) -> Forest:
    if not text:
        raise DiagramSyntaxError("empty forest")
    trees = []
    pointer = None
    for i, token in enumerate(text.split(" ")):
        if not token:
            raise DiagramSyntaxError(f"forests are separated by single spaces: {text!r}")
        if token.startswith("*"):
            if pointer is not None:
                raise DiagramSyntaxError(f"more than one pointer in {text!r}")
            pointer = i
            token = token[1:]
        trees.append(parse_tree(token))
    if pointer is None:
        raise DiagramSyntaxError(f"no pointer in {text!r}")
    return Forest(tuple(trees), pointer)


@dataclass(frozen=True, slots=True)
class ForestDiagram:
    top: Forest
    bottom: Forest

    def __post_init__(self):
        for f in (self.top, self.bottom):
            if not 0 <= f.pointer < len(f.trees):
                raise MalformedDiagram(f"pointer {f.pointer} outside window of {len(f.trees)} trees")
        if self.top.total_leaves != self.bottom.total_leaves:
            raise MalformedDiagram(
                f"leaf counts differ: top {self.top.total_leaves}, bottom {self.bottom.total_leaves}"
            )

    @property
    def width(self) -> int:
        """Number of leaf columns in the stored window."""
        return self.top.total_leaves

    @property
    def caret_count(self) -> int:
        return self.top.caret_count + self.bottom.caret_count

    @property
    def current_tree(self) -> Tree:
        return self.top.trees[self.top.pointer]

    def __str__(self) -> str:
        return serialize(self)


def serialize(d: ForestDiagram) -> str:
    return f"{d.top}\n{d.bottom}"


def parse_diagram(text: str) -> ForestDiagram:
    lines = text.split("\n")
    if len(lines) == 3 and lines[2] == "":
        lines = lines[:2]
    if len(lines) != 2:
        raise DiagramSyntaxError("a diagram is exactly two lines: top forest, bottom forest")
    return ForestDiagram(parse_forest(lines[0]), parse_forest(lines[1]))


# --------------------------------------------------------------------------
# Canonical window and the mutable working form used by generator actions


def _canonical(top: Sequence[Tree], tp: int, bot: Sequence[Tree], bp: int) -> ForestDiagram:
    width = sum(leaf_count(t) for t in top)
    top_starts = [0]
    for t in top:
        top_starts.append(top_starts[-1] + leaf_count(t))
    bot_starts = [0]
    for t in bot:
        bot_starts.append(bot_starts[-1] + leaf_count(t))

    lo = min(top_starts[tp], bot_starts[bp])
    hi = max(top_starts[tp + 1], bot_starts[bp + 1])
    for trees, starts in ((top, top_starts), (bot, bot_starts)):
        for i, t in enumerate(trees):
            if t:
                lo = min(lo, starts[i])
                break
        for i in range(len(trees) - 1, -1, -1):
            if trees[i]:
                hi = max(hi, starts[i + 1])
                break
    # Columns outside [lo, hi) are trivial on both sides, one tree per column.
    right = width - hi
    return ForestDiagram(
        Forest(tuple(top[lo:len(top) - right]), tp - lo),
        Forest(tuple(bot[lo:len(bot) - right]), bp - lo),
    )


def _replace_leaf_pair(t: Tree, col: int) -> Tree | None:
    """Collapse the caret whose children are the leaves at local columns col, col+1.

    Returns None when no such caret exists.
    """
    if not t:
        return None
    left, right = t
    if not left and not right:
        return LEAF if col == 0 else None
    n = leaf_count(left)
    if col + 1 < n:
        sub = _replace_leaf_pair(left, col)
        return None if sub is None else (sub, right)
    if col >= n:
        sub = _replace_leaf_pair(right, col - n)
        return None if sub is None else (left, sub)
    return None


def _split_leaf(t: Tree, col: int) -> Tree:
    """Attach a caret to the leaf at local column col."""
    if not t:
        return (LEAF, LEAF)
    left, right = t
    n = leaf_count(left)
    if col < n:
        return (_split_leaf(left, col), right)
    return (left, _split_leaf(right, col - n))


def _locate(trees: Sequence[Tree], col: int) -> tuple[int, int]:
    """Tree index containing column col, and col's offset inside that tree."""
    start = 0
    for i, t in enumerate(trees):
        n = leaf_count(t)
        if col < start + n:
            return i, col - start
        start += n
    raise IndexError(col)


class _Builder:
    """Mutable working copy of a diagram; finish() returns the canonical form.

    The window may grow past the support while letters are applied.  If the
    starting diagram is reduced, every action keeps it reduced.
    """

    __slots__ = ("top", "bot", "tp", "bp")

    def __init__(self, d: ForestDiagram):
        self.top = list(d.top.trees)
        self.bot = list(d.bottom.trees)
        self.tp = d.top.pointer
        self.bp = d.bottom.pointer

    def _ensure(self, i: int) -> None:
        if i < 0:
            pad = [LEAF] * (-i)
            self.top[:0] = pad
            self.bot[:0] = pad
            self.tp -= i
            self.bp -= i
        elif i >= len(self.top):
            pad = [LEAF] * (i - len(self.top) + 1)
            self.top.extend(pad)
            self.bot.extend(pad)

    def _column(self, i: int) -> int:
        return sum(leaf_count(t) for t in self.top[:i])

    def shift(self, k: int) -> None:
        self.tp += k
        self._ensure(self.tp)

    def join(self, offset: int = 0) -> None:
        """Caret over top trees at pointer+offset and pointer+offset+1."""
        i = self.tp + offset
        self._ensure(i)
        self._ensure(i + 1)
        i = self.tp + offset
        a, b = self.top[i], self.top[i + 1]
        if not a and not b:
            j, local = _locate(self.bot, self._column(i))
            collapsed = _replace_leaf_pair(self.bot[j], local)
            if collapsed is not None:
                self.bot[j] = collapsed
                self.top[i:i + 2] = [LEAF]
                if self.tp > i:
                    self.tp -= 1
                return
        self.top[i:i + 2] = [(a, b)]
        if self.tp > i:
            self.tp -= 1

    def drop(self, offset: int = 0) -> None:
        """Drop a negative caret at the top tree pointer+offset."""
        i = self.tp + offset
        self._ensure(i)
        i = self.tp + offset
        t = self.top[i]
        if t:
            self.top[i:i + 1] = [t[0], t[1]]
            if self.tp > i:
                self.tp += 1
        else:
            j, local = _locate(self.bot, self._column(i))
            self.bot[j] = _split_leaf(self.bot[j], local)
            self.top.insert(i + 1, LEAF)
            if self.tp > i:
                self.tp += 1

    def apply(self, index: int, sign: int) -> None:
        if index < 0:
            raise PreconditionError(f"generator index must be >= 0, got {index}")
        if index == 0:
            self.shift(sign)
        elif sign > 0:
            self.join(index - 1)
        else:
            self.drop(index - 1)

    def finish(self) -> ForestDiagram:
        return _canonical(self.top, self.tp, self.bot, self.bp)


# --------------------------------------------------------------------------
# Public operations

_IDENTITY = ForestDiagram(Forest((LEAF,), 0), Forest((LEAF,), 0))


def identity() -> ForestDiagram:
    return _IDENTITY


def is_identity(f: ForestDiagram) -> bool:
    return f == _IDENTITY


def canonicalize(d: ForestDiagram) -> ForestDiagram:
    """Trim or pad the window to the support (no caret reduction)."""
    return _canonical(d.top.trees, d.top.pointer, d.bottom.trees, d.bottom.pointer)


def apply_generator(s: tuple[int, int], f: ForestDiagram) -> ForestDiagram:
    """Reduced diagram of s*f for s one of x0, x1 and their inverses."""
    index, sign = s
    if index not in (0, 1) or sign not in (1, -1):
        raise PreconditionError(f"not an x0/x1 letter: {s!r}")
    b = _Builder(f)
    b.apply(index, sign)
    return b.finish()


def apply_xn(n: int, sign: int, f: ForestDiagram) -> ForestDiagram:
    """Reduced diagram of x_n^sign * f."""
    if n < 0:
        raise PreconditionError(f"generator index must be >= 0, got {n}")
    b = _Builder(f)
    b.apply(n, sign)
    return b.finish()


def apply_word(letters: Iterable[tuple[int, int]], f: ForestDiagram) -> ForestDiagram:
    """Left-multiply f by a word; the rightmost letter acts first."""
    b = _Builder(f)
    for index, sign in reversed(list(letters)):
        b.apply(index, sign)
    return b.finish()


def _leaf_pair_carets(trees: Sequence[Tree]) -> set[int]:
    """Columns c such that some caret has exactly the leaves c, c+1 as children."""
    out = set()

    def walk(t, col):
        if not t:
            return
        left, right = t
        if not left and not right:
            out.add(col)
            return
        walk(left, col)
        walk(right, col + leaf_count(left))

    col = 0
    for t in trees:
        walk(t, col)
        col += leaf_count(t)
    return out


def opposing_pairs(d: ForestDiagram) -> list[int]:
    """Columns c where a top caret and a bottom caret both span leaves {c, c+1}."""
    return sorted(_leaf_pair_carets(d.top.trees) & _leaf_pair_carets(d.bottom.trees))


def remove_opposing_pair(d: ForestDiagram, col: int) -> ForestDiagram:
    """Delete the opposing caret pair over leaves {col, col+1}; window is left as is."""
    sides = []
    for forest in (d.top, d.bottom):
        trees = list(forest.trees)
        j, local = _locate(trees, col)
        collapsed = _replace_leaf_pair(trees[j], local)
        if collapsed is None:
            raise PreconditionError(f"no opposing caret pair at column {col}")
        trees[j] = collapsed
        sides.append(Forest(tuple(trees), forest.pointer))
    return ForestDiagram(*sides)


def insert_opposing_pair(d: ForestDiagram, col: int) -> ForestDiagram:
    """Attach a caret to leaf col in both forests (an expansion of d)."""
    sides = []
    for forest in (d.top, d.bottom):
        trees = list(forest.trees)
        j, local = _locate(trees, col)
        trees[j] = _split_leaf(trees[j], local)
        sides.append(Forest(tuple(trees), forest.pointer))
    return ForestDiagram(*sides)


def reduce(d: ForestDiagram) -> ForestDiagram:
    """The unique reduced, canonical diagram for the element d represents."""
    if d.top.total_leaves != d.bottom.total_leaves:
        raise MalformedDiagram("leaf counts differ")
    while True:
        pairs = opposing_pairs(d)
        if not pairs:
            return canonicalize(d)
        # Removing the rightmost pair first keeps the other columns valid.
        for col in reversed(pairs):
            d = remove_opposing_pair(d, col)


def equals(f: ForestDiagram, g: ForestDiagram) -> bool:
    return reduce(f) == reduce(g)


def invert(f: ForestDiagram) -> ForestDiagram:
    return ForestDiagram(f.bottom, f.top)


def forest_indices(forest: Forest) -> list[int]:
    """Generator indices x_i building the forest's carets, in normal-form order.

    Offsets are measured from the left end of the window.
    """
    out: list[int] = []

    def emit(t, col):
        if not t:
            return
        out.append(col + 1)
        emit(t[0], col)
        emit(t[1], col + leaf_count(t[0]))

    col = 0
    for t in forest.trees:
        emit(t, col)
        col += leaf_count(t)
    return out


def normal_form_pairs(f: ForestDiagram) -> list[tuple[int, int]]:
    f = reduce(f)
    pos = [(0, 1)] * f.top.pointer + [(i, 1) for i in forest_indices(f.top)]
    neg = [(0, 1)] * f.bottom.pointer + [(i, 1) for i in forest_indices(f.bottom)]
    return pos + [(i, -s) for i, s in reversed(neg)]


def multiply(f: ForestDiagram, g: ForestDiagram) -> ForestDiagram:
    """Reduced diagram of f*g, i.e. the map of f composed after the map of g."""
    return apply_word(normal_form_pairs(f), g)


def is_positive(f: ForestDiagram) -> bool:
    return f.bottom.pointer == 0 and f.bottom.is_trivial()


def is_strongly_positive(f: ForestDiagram) -> bool:
    return is_positive(f) and f.top.pointer == 0


def positive_negative_split(f: ForestDiagram) -> tuple[ForestDiagram, ForestDiagram]:
    """(pos, neg) with pos positive, neg the inverse of a positive, pos*neg == f."""
    trivial = Forest((LEAF,) * f.width, 0)
    pos = canonicalize(ForestDiagram(f.top, trivial))
    neg = canonicalize(ForestDiagram(trivial, f.bottom))
    return pos, neg


# --------------------------------------------------------------------------
# Tree diagrams


class TreeDiagramPair(NamedTuple):
    top_tree: Tree
    bottom_tree: Tree


def _left_vine(trees: Sequence[Tree]) -> Tree:
    t = LEAF
    for s in trees:
        t = (t, s)
    return t


def _right_vine(trees: Sequence[Tree]) -> Tree:
    t = LEAF
    for s in reversed(trees):
        t = (s, t)
    return t


def _reduce_tree_pair(top: Tree, bottom: Tree) -> TreeDiagramPair:
    while True:
        pairs = sorted(_leaf_pair_carets([top]) & _leaf_pair_carets([bottom]))
        # The root caret frames the pair and is never cancelled.
        if not pairs or top == (LEAF, LEAF):
            return TreeDiagramPair(top, bottom)
        for col in reversed(pairs):
            top = _replace_leaf_pair(top, col)
            bottom = _replace_leaf_pair(bottom, col)


def to_tree_diagram(f: ForestDiagram) -> TreeDiagramPair:
    """Wrap each forest as caret(left vine, right vine) and reduce the pair."""
    f = reduce(f)
    trees = []
    for forest in (f.top, f.bottom):
        p = forest.pointer
        trees.append((_left_vine(forest.trees[:p]), _right_vine(forest.trees[p:])))
    return _reduce_tree_pair(*trees)


def _unwind_left(t: Tree) -> list[Tree]:
    out = []
    while t:
        out.append(t[1])
        t = t[0]
    return out[::-1]


def _unwind_right(t: Tree) -> list[Tree]:
    out = []
    while t:
        out.append(t[0])
        t = t[1]
    return out


def from_tree_diagram(p: TreeDiagramPair) -> ForestDiagram:
    top, bottom = p
    if leaf_count(top) != leaf_count(bottom):
        raise MalformedDiagram("tree diagram leaves differ")
    # Expand at the rightmost leaf until both right halves carry a pointer tree.
    while not top or not bottom or not top[1] or not bottom[1]:
        last = leaf_count(top) - 1
        top = _split_leaf(top, last)
        bottom = _split_leaf(bottom, last)
    sides = []
    for t in (top, bottom):
        left = _unwind_left(t[0])
        right = _unwind_right(t[1])
        sides.append(Forest(tuple(left + right), len(left)))
    return reduce(ForestDiagram(*sides))
