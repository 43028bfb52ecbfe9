"""核心服务单元测试 - 数字频率多边形"""

import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest

from rotkit.core.errors import CertificationError, GraphError, WordError
from rotkit.core.geometry import RatPolygon
from rotkit.core.infimax import lambda_n, subst_fixed_prefix
from rotkit.core.polytope import (
    build_beta_graph,
    build_sft,
    df_approx,
    inner_polytope,
    max_mean_cycle,
    outer_model,
    outer_polytope,
)
from rotkit.core.words import (
    DIGITS,
    DigitWord,
    Status,
    Verdict,
    beta_member,
    freq,
    max_rotation,
)

F = Fraction


def W(text: str) -> DigitWord:
    return DigitWord.parse(text)


def _simple_cycle_words(g):
    """networkx 穷举简单环，返回各环的周期串"""
    multi = g.to_networkx()
    digits = {}
    for u, v, data in multi.edges(data=True):
        digits.setdefault((u, v), set()).add(data["digit"])
    simple = nx.DiGraph(list(digits))
    out = []
    for cycle in nx.simple_cycles(simple):
        hops = list(zip(cycle, cycle[1:] + cycle[:1]))
        for labels in itertools.product(*(sorted(digits[h]) for h in hops)):
            out.append(DigitWord.periodic(max_rotation(labels)))
    return out


def _simple_cycle_freqs(g):
    return [freq(w) for w in _simple_cycle_words(g)]


def _dot(d, alpha):
    return sum(x * y for x, y in zip(d, alpha.as_tuple()))


class TestBuildSft:
    """窗口图构建测试"""

    @pytest.mark.parametrize("ref,edges", [("22", 9), ("21", 8), ("20", 7)])
    def test_edge_counts(self, ref, edges):
        g = build_sft(W(ref), 2)
        assert len(g.edges) == edges
        assert len(g.nodes) == 3

    def test_order_too_small(self):
        with pytest.raises(GraphError):
            build_sft(W("22"), 1)

    def test_prefix_too_short(self):
        with pytest.raises(GraphError):
            build_sft(W("21"), 3)


class TestBetaGraph:
    """β-shift 自动机测试"""

    def test_exact_automaton(self):
        g = build_beta_graph(W("2(1)"))
        assert g.kind == "beta"
        assert g.nodes == ("q0", "q1")
        assert len(g.edges) == 5

    def test_strict_prefix(self):
        g = build_beta_graph(W("21"))
        assert g.kind == "strict"
        assert all(not (e.source == "q1" and e.digit == 1) for e in g.edges)

    def test_outer_model_selection(self):
        assert outer_model(W("(2220)"), 6).kind == "beta"
        assert outer_model(W("(2220)"), 6).order == 4
        assert outer_model(W("(2220)"), 3, "window").kind == "window"
        truncated = outer_model(W("201200201"), 6)
        assert truncated.reference == "(201200)"
        with pytest.raises(GraphError):
            outer_model(W("(2)"), 3, "other")


class TestMaxMeanCycle:
    """最大平均环测试"""

    def test_full_shift(self):
        g = build_sft(W("22"), 2)
        value, cycle = max_mean_cycle(g, (0, 0, 1))
        assert value == 1 and cycle == W("(2)")
        value, _ = max_mean_cycle(g, (1, 1, 1))
        assert value == 1

    def test_forbidden_window(self):
        value, cycle = max_mean_cycle(build_sft(W("21"), 2), (0, 0, 1))
        assert value == F(1, 2)
        assert freq(cycle).a2 == F(1, 2)

    def test_against_simple_cycles(self):
        """与 networkx 简单环穷举对照"""
        directions = [(1, 0, 0), (0, 0, 1), (-1, 0, 1), (1, -2, 3), (F(1, 2), 1, F(-1, 3))]
        graphs = [build_sft(W(ref), 2) for ref in ("22", "21", "20", "11")]
        graphs += [build_sft(W("2102"), 3), build_beta_graph(W("(2220)")), build_beta_graph(W("2(10)"))]
        for g in graphs:
            freqs = _simple_cycle_freqs(g)
            for d in directions:
                value, cycle = max_mean_cycle(g, d)
                assert value == max(_dot(d, a) for a in freqs)
                assert _dot(d, freq(cycle)) == value

    def test_deterministic(self):
        g = build_sft(W("2102"), 3)
        assert max_mean_cycle(g, (0, 1, 1)) == max_mean_cycle(g, (0, 1, 1))

    def test_tie_prefers_smallest_word(self):
        """并列最优环中取周期串字典序最小者"""
        assert max_mean_cycle(build_sft(W("22"), 2), (1, 1, 1))[1] == W("(0)")
        assert max_mean_cycle(build_sft(W("21"), 2), (0, 0, 1))[1] == W("(20)")

    def test_tie_matches_simple_cycles(self):
        directions = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
        graphs = [build_sft(W(ref), 2) for ref in ("22", "21", "20")]
        graphs += [build_sft(W("2102"), 3), build_beta_graph(W("(2220)"))]
        for g in graphs:
            words = _simple_cycle_words(g)
            for d in directions:
                value, cycle = max_mean_cycle(g, d)
                optimal = [w for w in words if _dot(d, freq(w)) == value]
                span = 2 * len(g.nodes)
                assert cycle.prefix(span) == min(w.prefix(span) for w in optimal)


class TestPolygons:
    """内外逼近多边形测试"""

    def test_full_shift_is_simplex(self):
        assert outer_polytope(build_sft(W("22"), 2)) == RatPolygon.hull([(0, 0), (1, 0), (0, 1)])

    def test_cut_simplex(self):
        expected = RatPolygon.hull([(0, 0), (1, 0), (F(1, 2), F(1, 2)), (0, F(1, 2))])
        assert outer_polytope(build_sft(W("21"), 2)) == expected

    def test_outer_matches_simple_cycle_hull(self):
        for g in (build_sft(W("2102"), 3), build_beta_graph(W("(2220)"))):
            hull = RatPolygon.hull([a.chart for a in _simple_cycle_freqs(g)])
            assert outer_polytope(g) == hull

    def test_inner_witnesses(self):
        w = W("2(1)")
        polygon, witnesses = inner_polytope(build_beta_graph(w), w, 6)
        words = {str(word) for word, _ in witnesses}
        assert {"(0)", "(1)", "(20)"} <= words
        assert polygon.contains_point((F(1, 3), F(1, 3)))

    def test_inner_simplex(self):
        w = W("(2)")
        polygon, witnesses = inner_polytope(build_beta_graph(w), w, 3)
        assert polygon == RatPolygon.hull([(0, 0), (1, 0), (0, 1)])
        assert {str(word) for word, _ in witnesses} == {"(0)", "(1)", "(2)"}

    def test_inner_discards_uncertified(self):
        """成员判定不是 IN 的见证被丢弃，内逼近收缩为其余见证的凸包"""
        w = W("(2)")

        def member(s, ref):
            if str(s) == "(2)":
                return Verdict(Status.UNDECIDED, 3)
            return beta_member(s, ref)

        notes = []
        polygon, witnesses = inner_polytope(build_beta_graph(w), w, 3, notes, member)
        assert {str(word) for word, _ in witnesses} == {"(0)", "(1)"}
        assert polygon == RatPolygon.hull([(0, 0), (1, 0)])
        assert len(notes) == 1
        assert "(2)" in notes[0]
        assert "undecided" in notes[0]

    def test_inner_nothing_certified(self):
        w = W("(2)")
        with pytest.raises(CertificationError):
            inner_polytope(build_beta_graph(w), w, 3, member=lambda s, ref: Verdict(Status.OUT, 0))


class TestDfApprox:
    """df_approx 测试"""

    def test_two_bar_closed(self):
        approx = df_approx(W("(2)"), 3, 3)
        assert approx.closed
        assert approx.gap == 0

    def test_two_one_bar_closed(self):
        approx = df_approx(W("2(1)"), 6, 6)
        assert approx.closed
        assert approx.outer == RatPolygon.hull([(0, 0), (1, 0), (F(1, 2), F(1, 2))])

    def test_quad_closed(self):
        approx = df_approx(W("(2220)"), 8, 8)
        assert approx.closed
        assert {str(w) for w, _ in approx.witnesses} == {"(0)", "(1)", "(221)", "(2220)"}

    def test_window_model_contains_beta_model(self):
        w = W("(2220)")
        window = df_approx(w, 6, 6, model="window")
        beta = df_approx(w, 6, 6)
        assert window.outer.contains(beta.outer)
        assert window.outer.contains(window.inner)

    def test_irrational_prefix_stays_open(self):
        w = subst_fixed_prefix(lambda_n(1), 2, 32)
        approx = df_approx(w, 6, 6)
        assert not approx.closed
        assert approx.outer.contains(approx.inner)
        assert approx.gap > 0

    def test_sandwich_monotone_in_order(self):
        """inner ⊆ outer 且 outer(n+1) ⊆ outer(n)"""
        words = [subst_fixed_prefix(lambda_n(k), 2, 40) for k in (1, 2)]
        words += [W("22102210221"), W("(22010)"), W("2(10)")]
        for w in words:
            previous = None
            for n in range(3, 9):
                approx = df_approx(w, n, n)
                assert approx.outer.contains(approx.inner)
                if previous is not None:
                    assert previous.contains(approx.outer)
                previous = approx.outer

    def test_sandwich_random_words(self):
        """50 个随机周期最大序列：inner ⊆ outer(n+1) ⊆ outer(n)"""
        rng = random.Random(20240604)
        for _ in range(50):
            block = [rng.choice(DIGITS) for _ in range(rng.randint(2, 8))]
            block[rng.randrange(len(block))] = 2
            w = DigitWord.periodic(max_rotation(block))
            previous = None
            for n in range(3, 7):
                approx = df_approx(w, n, n)
                assert approx.outer.contains(approx.inner), (w, n)
                if previous is not None:
                    assert previous.contains(approx.outer), (w, n)
                previous = approx.outer

    @pytest.mark.parametrize("model", ["beta", "window"])
    def test_short_prefix_keeps_order(self, model):
        """已认证前缀短于阶数时，阶数不降低，外模型改用前缀的最大延拓"""
        approx = df_approx(W("2"), 2, 2, model=model)
        assert approx.order == 2
        assert approx.outer == RatPolygon.hull([(0, 0), (1, 0), (0, 1)])
        assert approx.diagnostics

    def test_short_prefix_extension(self):
        approx = df_approx(W("2220"), 6, 6)
        assert approx.order == 6
        assert approx.outer == df_approx(W("(2220)"), 6, 6).outer
        assert "(2220)" in approx.diagnostics[0]
        assert approx.outer.contains(approx.inner)

    def test_rejects_non_maximal(self):
        with pytest.raises(WordError):
            df_approx(W("(12)"), 4, 4)
