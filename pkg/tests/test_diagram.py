import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import general_words, x0x1_words
from thompsonf import diagram as dg
from thompsonf.diagram import LEAF, Forest, ForestDiagram, TreeDiagramPair
from thompsonf.errors import DiagramSyntaxError, MalformedDiagram, PreconditionError
from thompsonf.words import X0, X0_INV, X1, X1_INV, evaluate, expand_general_letter, normal_form, format_word

C = dg.caret


class TestTrees:
    def test_counts(self):
        t = C(C(LEAF, LEAF), C(LEAF, C(LEAF, LEAF)))
        assert dg.leaf_count(t) == 5
        assert dg.caret_count(t) == 4
        assert dg.height(t) == 3

    @pytest.mark.parametrize("text", [".", "(..)", "((..).)", "(.(..))", "((..)(..))"])
    def test_tree_text_round_trip(self, text):
        assert dg.tree_to_str(dg.parse_tree(text)) == text

    @pytest.mark.parametrize("bad", ["", "(.", "(...)", "x", "(..))"])
    def test_bad_tree_text(self, bad):
        with pytest.raises(DiagramSyntaxError):
            dg.parse_tree(bad)


class TestSerialization:
    @pytest.mark.parametrize("word, text", [
        ("e", "*.\n*."),
        ("x0", ". *.\n*. ."),
        ("x1", "*(..)\n*. ."),
        ("x0^-1", "*. .\n. *."),
        ("x1^-1", "*. .\n*(..)"),
        ("x2", "*. (..)\n*. . ."),
    ])
    def test_generator_diagrams(self, word, text):
        assert dg.serialize(evaluate(word)) == text

    def test_identity(self):
        assert dg.serialize(dg.identity()) == "*.\n*."
        assert dg.is_identity(evaluate("x0 x0^-1"))

    @given(x0x1_words)
    def test_round_trip(self, w):
        f = evaluate(w)
        assert dg.parse_diagram(dg.serialize(f)) == f

    @pytest.mark.parametrize("bad", ["*.", "*. .\n*.\n", "*.  .\n*. .", "(..)\n*. .", "*.*.\n*. ."])
    def test_malformed_text(self, bad):
        with pytest.raises((DiagramSyntaxError, MalformedDiagram)):
            dg.parse_diagram(bad)

    def test_leaf_count_mismatch(self):
        with pytest.raises(MalformedDiagram):
            dg.parse_diagram("*(..)\n*.")

    def test_pointer_out_of_range(self):
        with pytest.raises(MalformedDiagram):
            ForestDiagram(Forest((LEAF,), 1), Forest((LEAF,), 0))


class TestGeneratorActions:
    def test_x1_cancels_x1_inverse(self):
        assert dg.reduce(dg.apply_generator(X1, evaluate("x1^-1"))) == dg.identity()

    def test_opposing_pair_reduces_to_identity(self):
        d = ForestDiagram(Forest((C(LEAF, LEAF),), 0), Forest((C(LEAF, LEAF),), 0))
        assert dg.reduce(d) == dg.identity()

    @given(x0x1_words)
    def test_generator_then_inverse(self, w):
        f = evaluate(w)
        for s in (X0, X0_INV, X1, X1_INV):
            assert dg.apply_generator(s.inverse(), dg.apply_generator(s, f)) == f

    @pytest.mark.parametrize("n", range(0, 9))
    @pytest.mark.parametrize("sign", [1, -1])
    def test_apply_xn_matches_expansion(self, n, sign):
        rng = random.Random(n * 10 + sign)
        for _ in range(20):
            w = [rng.choice((X0, X0_INV, X1, X1_INV)) for _ in range(rng.randrange(15))]
            f = evaluate(w)
            expanded = dg.apply_word(expand_general_letter((n, sign)), f)
            assert dg.apply_xn(n, sign, f) == expanded

    def test_apply_xn_examples(self):
        e = dg.identity()
        assert dg.apply_xn(2, 1, e) == evaluate("x0^-1 x1 x0")
        assert dg.apply_xn(0, 1, evaluate("x1")) == dg.apply_generator(X0, evaluate("x1"))
        # x4 x2 = x2 x5, each side built right to left
        assert dg.apply_xn(4, 1, dg.apply_xn(2, 1, e)) == dg.apply_xn(2, 1, dg.apply_xn(5, 1, e))

    def test_negative_index_rejected(self):
        with pytest.raises(PreconditionError):
            dg.apply_xn(-1, 1, dg.identity())

    @pytest.mark.parametrize("k, n", [(k, n) for n in range(1, 9) for k in range(n)])
    def test_presentation_relations(self, k, n):
        assert evaluate(f"x{n} x{k}") == evaluate(f"x{k} x{n + 1}")


class TestReduction:
    @given(x0x1_words, st.lists(st.integers(min_value=0, max_value=40), max_size=6), st.randoms())
    def test_confluence_under_random_orders(self, w, inserts, rnd):
        f = evaluate(w)
        d = f
        for col in inserts:
            d = dg.insert_opposing_pair(d, col % d.width)
        while True:
            pairs = dg.opposing_pairs(d)
            if not pairs:
                break
            d = dg.remove_opposing_pair(d, rnd.choice(pairs))
        assert dg.canonicalize(d) == f
        assert dg.reduce(d) == f

    def test_reduced_has_no_opposing_pairs(self, ball5):
        for f in ball5.distances:
            assert dg.opposing_pairs(f) == []

    def test_equals(self):
        assert dg.equals(evaluate("x3 x8"), evaluate("x7 x3"))
        assert not dg.equals(evaluate("x0"), evaluate("x1"))

    @given(general_words, st.randoms())
    def test_equals_respects_relation_rewriting(self, w, rnd):
        # Rewrite x_n x_k <-> x_k x_{n+1} (k < n) at random positive adjacent pairs.
        original = evaluate(w)
        w = list(w)
        for _ in range(5):
            spots = [i for i in range(len(w) - 1) if w[i].sign == w[i + 1].sign == 1]
            if not spots:
                break
            i = rnd.choice(spots)
            a, b = w[i], w[i + 1]
            if a.index > b.index:
                w[i:i + 2] = [b, type(a)(a.index + 1, 1)]
            elif a.index + 1 < b.index:
                w[i:i + 2] = [type(b)(b.index - 1, 1), a]
        assert dg.equals(evaluate(w), original)


class TestGroupLaws:
    def test_inverse_law_example(self):
        f = evaluate("x0^2 x1 x3^2 x4 x8^3")
        assert dg.multiply(f, dg.invert(f)) == dg.identity()

    def test_multiply_relation(self):
        assert dg.multiply(evaluate("x4"), evaluate("x2")) == dg.multiply(evaluate("x2"), evaluate("x5"))

    def test_invert_examples(self):
        assert dg.invert(dg.identity()) == dg.identity()
        assert dg.invert(evaluate("x0")) == evaluate("x0^-1")

    def test_ball5_laws(self, ball5):
        e = dg.identity()
        elements = sorted(ball5.distances, key=dg.serialize)
        for f in elements:
            assert dg.multiply(f, dg.invert(f)) == e
            assert dg.multiply(dg.invert(f), f) == e
            assert dg.multiply(e, f) == f == dg.multiply(f, e)
            assert dg.invert(dg.invert(f)) == f
        rng = random.Random(5)
        for _ in range(300):
            f, g, h = (rng.choice(elements) for _ in range(3))
            assert dg.multiply(dg.multiply(f, g), h) == dg.multiply(f, dg.multiply(g, h))

    @given(x0x1_words, x0x1_words, x0x1_words)
    def test_random_words(self, u, v, w):
        f, g, h = evaluate(u), evaluate(v), evaluate(w)
        assert dg.multiply(f, g) == evaluate(tuple(u) + tuple(v))
        assert dg.multiply(dg.multiply(f, g), h) == dg.multiply(f, dg.multiply(g, h))
        assert dg.invert(dg.multiply(f, g)) == dg.multiply(dg.invert(g), dg.invert(f))


class TestPositivity:
    @pytest.mark.parametrize("word, positive, strongly", [
        ("x0", True, False),
        ("x1 x2", True, True),
        ("x1^-1", False, False),
        ("e", True, True),
    ])
    def test_examples(self, word, positive, strongly):
        f = evaluate(word)
        assert dg.is_positive(f) is positive
        assert dg.is_strongly_positive(f) is strongly

    def test_split_example(self):
        f = evaluate("x0^3 x2 x5^2 x7 x6^-1 x5^-1 x1^-2 x0^-1")
        pos, neg = dg.positive_negative_split(f)
        assert format_word(normal_form(pos)) == "x0^3 x2 x5^2 x7"
        assert format_word(normal_form(neg)) == "x6^-1 x5^-1 x1^-2 x0^-1"

    def test_split_identity(self):
        assert dg.positive_negative_split(dg.identity()) == (dg.identity(), dg.identity())

    def test_split_recomposes_on_ball8(self, ball8):
        for f in ball8.distances:
            pos, neg = dg.positive_negative_split(f)
            assert dg.multiply(pos, neg) == f
            assert dg.is_positive(pos)
            assert dg.is_positive(dg.invert(neg))


class TestTreeDiagrams:
    def test_x0(self):
        assert dg.to_tree_diagram(evaluate("x0")) == TreeDiagramPair(
            C(C(LEAF, LEAF), LEAF), C(LEAF, C(LEAF, LEAF)))

    def test_x1(self):
        assert dg.to_tree_diagram(evaluate("x1")) == TreeDiagramPair(
            C(LEAF, C(C(LEAF, LEAF), LEAF)), C(LEAF, C(LEAF, C(LEAF, LEAF))))

    def test_identity(self):
        assert dg.to_tree_diagram(dg.identity()) == TreeDiagramPair(C(LEAF, LEAF), C(LEAF, LEAF))

    def test_round_trip_on_ball5(self, ball5):
        for f in ball5.distances:
            pair = dg.to_tree_diagram(f)
            assert dg.leaf_count(pair.top_tree) == dg.leaf_count(pair.bottom_tree)
            assert dg.from_tree_diagram(pair) == f

    @given(x0x1_words)
    def test_round_trip_random(self, w):
        f = evaluate(w)
        assert dg.from_tree_diagram(dg.to_tree_diagram(f)) == f
