"""Deterministic text renderings of diagrams and balls.

ASCII art puts the top forest above its leaf row and the bottom forest
below its own leaf row.  Leaf column c sits at character 2*c; ``*`` marks
the leftmost leaf of a pointer tree and ``o`` every other leaf.  A caret
is a ``+--+`` bar joining the anchors of its two children; a caret's
anchor is the middle of its bar, and ``|`` links a bar to a child that
sits more than one row nearer the leaves.
"""

from __future__ import annotations

from . import diagram as dg
from .diagram import Forest, ForestDiagram
from .words import X0, X1


def _layout(forest: Forest) -> tuple[str, list[str]]:
    """Leaf row and caret rows (nearest the leaves first) of one forest."""
    width = forest.total_leaves
    pointer_col = forest.starts()[forest.pointer]
    leaf_row = " ".join("*" if c == pointer_col else "o" for c in range(width))

    span = 2 * width
    rows: list[list[str]] = []

    def put(row: int, x: int, ch: str) -> None:
        while len(rows) < row:
            rows.append([" "] * span)
        rows[row - 1][x] = ch

    def draw(t, col: int) -> tuple[int, int]:
        """Draw t with its leftmost leaf at col; return (anchor x, row)."""
        if not t:
            return 2 * col, 0
        xl, hl = draw(t[0], col)
        xr, hr = draw(t[1], col + dg.leaf_count(t[0]))
        h = max(hl, hr) + 1
        for x, child_row in ((xl, hl), (xr, hr)):
            for r in range(child_row + 1, h):
                put(r, x, "|")
        for x in range(xl, xr + 1):
            put(h, x, "-")
        put(h, xl, "+")
        put(h, xr, "+")
        return (xl + xr) // 2, h

    for col, t in zip(forest.starts(), forest.trees):
        draw(t, col)
    return leaf_row, ["".join(r).rstrip() for r in rows]


def render_ascii(f: ForestDiagram) -> str:
    top_leaves, top_rows = _layout(f.top)
    bottom_leaves, bottom_rows = _layout(f.bottom)
    lines = list(reversed(top_rows)) + [top_leaves, bottom_leaves] + bottom_rows
    return "\n".join(lines)


def _dot_label(f: ForestDiagram) -> str:
    return dg.serialize(f).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def render_ball_dot(ball) -> str:
    """Vertices sorted by (distance, serialization); edges f -> s*f for s in x0, x1."""
    order = sorted(ball.distances, key=lambda f: (ball.distances[f], dg.serialize(f)))
    ids = {f: k for k, f in enumerate(order)}
    lines = ["digraph ball {", "  node [shape=box, fontname=monospace];"]
    for f in order:
        lines.append(f'  v{ids[f]} [label="{_dot_label(f)}", distance={ball.distances[f]}];')
    for f in order:
        for s, name in ((X0, "x0"), (X1, "x1")):
            g = dg.apply_generator(s, f)
            if g in ids:
                lines.append(f'  v{ids[f]} -> v{ids[g]} [label="{name}"];')
    lines.append("}")
    return "\n".join(lines)


def render_diagram_dot(f: ForestDiagram) -> str:
    """Top carets point down to the shared leaves, bottom carets point up to them."""
    lines = ["digraph diagram {", "  rankdir=TB;", "  node [fontname=monospace];"]
    leaves = [f"l{c}" for c in range(f.width)]
    for c, name in enumerate(leaves):
        lines.append(f'  {name} [label="{c}", shape=circle];')
    lines.append("  { rank=same; " + " ".join(leaves) + "; }")
    counter = 0

    def emit(t, col: int, prefix: str, root_mark: bool, top: bool) -> str:
        nonlocal counter
        if not t:
            return leaves[col]
        name = f"{prefix}{counter}"
        counter += 1
        shape = "doublecircle" if root_mark else "point"
        lines.append(f"  {name} [shape={shape}, label=\"\"];")
        for child in (emit(t[0], col, prefix, False, top),
                      emit(t[1], col + dg.leaf_count(t[0]), prefix, False, top)):
            edge = f"{name} -> {child}" if top else f"{child} -> {name}"
            lines.append(f"  {edge};")
        return name

    for prefix, forest, top in (("t", f.top, True), ("b", f.bottom, False)):
        for j, (col, t) in enumerate(zip(forest.starts(), forest.trees)):
            root = emit(t, col, prefix, j == forest.pointer, top)
            if j == forest.pointer and not t:
                lines.append(f'  {prefix}ptr [shape=plaintext, label="*"];')
                edge = f"{prefix}ptr -> {root}" if top else f"{root} -> {prefix}ptr"
                lines.append(f"  {edge} [style=dashed];")
    lines.append("}")
    return "\n".join(lines)


def render_dot(obj) -> str:
    """DOT text for a ball or a single diagram."""
    if isinstance(obj, ForestDiagram):
        return render_diagram_dot(obj)
    return render_ball_dot(obj)
