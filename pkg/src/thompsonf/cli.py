"""Command-line front end: ``thompsonf <subcommand> ...``.

Element arguments are words such as ``"x0^2 x1 x3^-1"``; text containing a
``*`` is read as a two-line diagram serialization instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import census
from . import diagram as dg
from . import metric, plmap, render, words
from .errors import (
    BudgetExceeded,
    DiagramSyntaxError,
    MalformedDiagram,
    PreconditionError,
    WordSyntaxError,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3


def read_element(text: str) -> dg.ForestDiagram:
    if "*" in text:
        return dg.reduce(dg.parse_diagram(text.replace("\\n", "\n")))
    return words.evaluate(words.parse_word(text))


def cmd_eval(args) -> str:
    return dg.serialize(read_element(args.word))


def cmd_len(args) -> str:
    f = read_element(args.word)
    ell = metric.length(f)
    out = f"l={ell.total} l0={ell.ell0} l1={ell.ell1}"
    if args.explain:
        dump = metric.label_spaces(f).dump()
        out = f"{out}\n{dump}" if dump else out
    return out


def cmd_normal(args) -> str:
    return words.format_word(words.normal_form(read_element(args.word)))


def cmd_antinormal(args) -> str:
    return words.format_word(words.anti_normal_form(read_element(args.word)))


def cmd_minword(args) -> str:
    return words.format_word(metric.minimum_length_word(read_element(args.word)))


def cmd_render(args) -> str:
    f = read_element(args.word)
    return render.render_dot(f) if args.format == "dot" else render.render_ascii(f)


def cmd_plmap(args) -> str:
    return plmap.breakpoint_table(plmap.to_plmap(read_element(args.word)))


def cmd_ball(args) -> str:
    ball = census.bfs_ball(args.radius, budget=args.budget)
    if args.format == "dot":
        return render.render_dot(ball)
    lines = ["distance count"]
    lines += [f"{d} {n}" for d, n in enumerate(ball.sphere_sizes())]
    lines.append(f"total {len(ball)}")
    if args.verify:
        mismatches = census.verify_length_formula(ball)
        lines.append(f"mismatches {len(mismatches)}")
        lines += [f"{m.diagram!r} formula={m.formula} distance={m.distance}" for m in mismatches]
    return "\n".join(lines)


def cmd_growth(args) -> str:
    counted = census.positive_growth_series(args.max, budget=args.budget)
    reference = census.growth_reference_series(args.max)
    lines = ["n p_n reference"]
    lines += [f"{n} {a} {b}" for n, (a, b) in enumerate(zip(counted, reference))]
    start = census.recurrence_start(counted)
    lines.append("recurrence holds from n=" + (str(start) if start is not None else "none"))
    return "\n".join(lines)


def cmd_deadends(args) -> str:
    report = census.dead_end_census(args.radius, budget=args.budget)
    lines = [report.table()]
    lines += [dg.serialize(f).replace("\n", " / ") for f in report.dead_ends]
    lines.append(f"disagreements {len(report.disagreements)}")
    lines.append(f"escape failures {len(report.escape_failures)}")
    return "\n".join(lines)


def cmd_iso(args) -> str:
    ratio = census.iso_ratio(args.width, args.height)
    return f"{ratio.numerator}/{ratio.denominator}"


def cmd_convexity(args) -> str:
    w = census.convexity_witness(args.n)
    problems = census.verify_convexity_witness(w)
    lines = [
        "start:", dg.serialize(w.start),
        "end:", dg.serialize(w.end),
        f"length {metric.word_length(w.start)} {metric.word_length(w.end)}",
        f"distance {w.distance}",
        f"path {words.format_word(w.path)}",
        "verified" if not problems else "problems: " + "; ".join(problems),
    ]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompsonf", description="Forest diagrams and the word metric of Thompson's group F.")
    sub = parser.add_subparsers(dest="command", required=True)

    def element_command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help='word like "x0^2 x1" or a diagram serialization')
        p.set_defaults(handler=handler)
        return p

    element_command("eval", cmd_eval, "print the reduced forest diagram")
    p = element_command("len", cmd_len, "word length over {x0, x1}")
    p.add_argument("--explain", action="store_true", help="dump the per-gap labels and weights")
    element_command("normal", cmd_normal, "normal form")
    element_command("antinormal", cmd_antinormal, "anti-normal form of a strongly positive element")
    element_command("minword", cmd_minword, "a minimum-length word over {x0, x1}")
    p = element_command("render", cmd_render, "draw the diagram")
    p.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    element_command("plmap", cmd_plmap, "breakpoint table of the PL homeomorphism")

    p = sub.add_parser("ball", help="BFS ball in the Cayley graph")
    p.add_argument("--radius", type=int, default=census.DEFAULT_RADIUS)
    p.add_argument("--verify", action="store_true", help="compare every distance with the length formula")
    p.add_argument("--format", choices=("table", "dot"), default="table")
    p.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    p.set_defaults(handler=cmd_ball)

    p = sub.add_parser("growth", help="positive elements per length")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    p.set_defaults(handler=cmd_growth)

    p = sub.add_parser("deadends", help="dead-end census")
    p.add_argument("--radius", type=int, default=census.DEFAULT_RADIUS)
    p.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    p.set_defaults(handler=cmd_deadends)

    p = sub.add_parser("iso", help="boundary-to-size ratio of S(n, k)")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("convexity", help="witness pair for the convexity gap")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_convexity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except (WordSyntaxError, DiagramSyntaxError, MalformedDiagram) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
