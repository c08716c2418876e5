"""Words in the generators x0, x1, x2, ...

Words are stored fully expanded as tuples of ``Letter``; exponent syntax
(``x3^2``, ``x1^-1``) exists only in text I/O.  The leftmost letter acts last.
"""

from __future__ import annotations

import re
from math import comb
from typing import NamedTuple, Sequence

from . import diagram as dg
from .diagram import ForestDiagram
from .errors import PreconditionError, WordSyntaxError


class Letter(NamedTuple):
    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign > 0 else f"x{self.index}^-1"


Word = tuple  # tuple[Letter, ...]

X0 = Letter(0, 1)
X0_INV = Letter(0, -1)
X1 = Letter(1, 1)
X1_INV = Letter(1, -1)
GENERATORS = (X0, X0_INV, X1, X1_INV)

_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse ``"x0^2 x1 x3^-1"``; ``"e"`` or blank is the empty word."""
    letters: list[Letter] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "e" and (pos + 1 == n or text[pos + 1].isspace()):
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"expected a letter like 'x3' or 'x1^-2', got {text[pos:pos + 8]!r}", pos)
        end = m.end()
        if end < n and not text[end].isspace():
            raise WordSyntaxError(f"unexpected character {text[end]!r}", end)
        index = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if exp > 0 else -1
        letters.extend([Letter(index, sign)] * abs(exp))
        pos = end
    return tuple(letters)


def format_word(w: Sequence[tuple[int, int]]) -> str:
    if not w:
        return "e"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and tuple(w[j]) == tuple(w[i]):
            j += 1
        index, sign = w[i]
        exp = (j - i) * sign
        parts.append(f"x{index}" if exp == 1 else f"x{index}^{exp}")
        i = j
    return " ".join(parts)


def as_word(w) -> Word:
    """Accept a word as text or as a sequence of (index, sign) pairs."""
    if isinstance(w, str):
        return parse_word(w)
    return tuple(Letter(*l) for l in w)


def inverse_word(w: Sequence[tuple[int, int]]) -> Word:
    return tuple(Letter(i, -s) for i, s in reversed(w))


def free_reduce(w: Sequence[tuple[int, int]]) -> Word:
    out: list[Letter] = []
    for i, s in w:
        if out and out[-1].index == i and out[-1].sign == -s:
            out.pop()
        else:
            out.append(Letter(i, s))
    return tuple(out)


def expand_general_letter(l: tuple[int, int]) -> Word:
    """x_n -> x0^(1-n) x1 x0^(n-1); inverses map to the formal inverse."""
    index, sign = l
    if index <= 1:
        return (Letter(index, sign),)
    return (X0_INV,) * (index - 1) + (Letter(1, sign),) + (X0,) * (index - 1)


def expand_word(w) -> Word:
    out: list[Letter] = []
    for l in as_word(w):
        out.extend(expand_general_letter(l))
    return free_reduce(out)


def evaluate(w) -> ForestDiagram:
    return dg.apply_word(as_word(w), dg.identity())


def _require_strongly_positive_word(w: Word) -> None:
    for l in w:
        if l.sign != 1 or l.index < 1:
            raise PreconditionError(f"{format_word(w)!r} is not a word in x1, x2, ... (positive letters only)")


def x0x1_length_of_general_word(w) -> int:
    """Length of the {x0,x1} word that x_{i_n} ... x_{i_1} stands for."""
    w = as_word(w)
    _require_strongly_positive_word(w)
    if not w:
        return 0
    idx = [l.index for l in w]
    moves = abs(1 - idx[0]) + abs(idx[-1] - 1)
    moves += sum(abs(a - b) for a, b in zip(idx, idx[1:]))
    return moves + len(idx)


def normal_form(f: ForestDiagram) -> Word:
    return tuple(Letter(i, s) for i, s in dg.normal_form_pairs(f))


def exponent_profile(w) -> tuple[list[int], list[int]]:
    """(a, b) exponent vectors of a word x0^a0 ... xn^an xn^-bn ... x0^-b0.

    Raises PreconditionError if the word does not have that shape.
    """
    w = as_word(w)
    k = 0
    while k < len(w) and w[k].sign > 0:
        k += 1
    pos, neg = w[:k], w[k:]
    if any(l.sign > 0 for l in neg):
        raise PreconditionError("positive letter after a negative one")
    if any(a.index > b.index for a, b in zip(pos, pos[1:])):
        raise PreconditionError("positive part indices decrease")
    if any(a.index < b.index for a, b in zip(neg, neg[1:])):
        raise PreconditionError("negative part indices increase")
    top = max((l.index for l in w), default=-1)
    a = [0] * (top + 1)
    b = [0] * (top + 1)
    for l in pos:
        a[l.index] += 1
    for l in neg:
        b[l.index] += 1
    return a, b


def is_normal_form(w) -> bool:
    """Both side conditions of the unique normal form."""
    try:
        a, b = exponent_profile(w)
    except PreconditionError:
        return False
    if not a:
        return True
    n = len(a) - 1
    if (a[n] > 0) == (b[n] > 0):
        return False
    for i in range(n):
        if a[i] > 0 and b[i] > 0 and not (a[i + 1] > 0 or b[i + 1] > 0):
            return False
    return True


def is_anti_normal(w) -> bool:
    w = as_word(w)
    return all(l.sign == 1 and l.index >= 1 for l in w) and all(
        nxt.index >= cur.index - 1 for nxt, cur in zip(w, w[1:])
    )


def anti_normal_form(f: ForestDiagram) -> Word:
    """Build f by always creating the leftmost caret whose children are done."""
    f = dg.reduce(f)
    if not dg.is_strongly_positive(f):
        raise PreconditionError("anti-normal form needs a strongly positive element")
    # Carets as (first column, last column, left child, right child) with children
    # either a leaf column or another caret id.
    carets = []

    def collect(t, col):
        if not t:
            return ("leaf", col)
        left = collect(t[0], col)
        right = collect(t[1], col + dg.leaf_count(t[0]))
        carets.append((col, col + dg.leaf_count(t) - 1, left, right))
        return ("caret", len(carets) - 1)

    col = 0
    for t in f.top.trees:
        collect(t, col)
        col += dg.leaf_count(t)

    built = [False] * len(carets)
    # current roots: list of (first column, node)
    roots = [(c, ("leaf", c)) for c in range(f.width)]
    letters = []

    def done(node):
        return node[0] == "leaf" or built[node[1]]

    for _ in range(len(carets)):
        ready = [i for i, c in enumerate(carets) if not built[i] and done(c[2]) and done(c[3])]
        i = min(ready, key=lambda k: carets[k][0])
        lo = carets[i][0]
        pos = next(k for k, (c, _) in enumerate(roots) if c == lo)
        letters.append(Letter(pos + 1, 1))
        roots[pos:pos + 2] = [(lo, ("caret", i))]
        built[i] = True
    return tuple(reversed(letters))


def rewrite_to_anti_normal(w, strategy: str = "leftmost") -> tuple[Word, int]:
    """Apply x_k x_n -> x_{n-1} x_k (k < n-1) until none applies.

    Returns the fixed point and the number of rewrites performed.
    """
    w = list(as_word(w))
    _require_strongly_positive_word(tuple(w))
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    steps = 0
    while True:
        redexes = [k for k in range(len(w) - 1) if w[k].index < w[k + 1].index - 1]
        if not redexes:
            break
        k = redexes[0] if strategy == "leftmost" else redexes[-1]
        a, b = w[k], w[k + 1]
        w[k:k + 2] = [Letter(b.index - 1, 1), a]
        steps += 1
    assert steps <= comb(len(w), 2)
    return tuple(w), steps
