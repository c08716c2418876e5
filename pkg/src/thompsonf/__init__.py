"""Forest diagrams, normal forms and the {x0, x1} word metric of Thompson's group F."""

from .census import (
    Ball,
    bfs_ball,
    convexity_witness,
    dead_end_census,
    growth_reference_series,
    iso_ratio,
    positive_growth_series,
    verify_length_formula,
)
from .diagram import (
    Forest,
    ForestDiagram,
    TreeDiagramPair,
    apply_generator,
    apply_word,
    identity,
    invert,
    multiply,
    parse_diagram,
    reduce,
    serialize,
    to_tree_diagram,
    from_tree_diagram,
)
from .errors import (
    BudgetExceeded,
    DiagramSyntaxError,
    MalformedDiagram,
    PreconditionError,
    ThompsonError,
    WordSyntaxError,
)
from .metric import is_dead_end, length, minimum_length_word, word_length
from .plmap import PLMap, plmap_compose, to_plmap
from .render import render_ascii, render_dot
from .words import (
    GENERATORS,
    Letter,
    anti_normal_form,
    evaluate,
    format_word,
    normal_form,
    parse_word,
    rewrite_to_anti_normal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
