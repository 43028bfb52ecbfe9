"""数字频率多边形 - DF(w) 的内外逼近

外逼近：有限型模型（窗口 SFT 或 β-shift 自动机）上所有环的平均频率的凸包，
通过最大平均环 (Karp) 的方向支撑查询与递归细分得到。
内逼近：长度不超过 max_period 的闭路径，其周期串逐一经 beta_member 认证。
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import CertificationError, GraphError, WordError
from .geometry import Point, RatPolygon, convex_hull, dot, hausdorff
from .words import (
    DIGITS,
    DigitWord,
    FreqVector,
    Status,
    Verdict,
    beta_member,
    freq,
    is_maximal,
    largest_maximal_with_prefix,
    max_rotation,
)

__all__ = [
    "Edge", "SftGraph", "DfApprox",
    "build_sft", "build_beta_graph", "outer_model",
    "max_mean_cycle", "outer_polytope", "inner_polytope", "df_approx", "hausdorff",
]

Direction = Tuple[Fraction, Fraction, Fraction]

# 初始探测方向（图册坐标 (α₀, α₂)）
_INITIAL_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1))

# 最大平均环并列时检查的标号环上限
MAX_TIGHT_CYCLES = 4096


# ==================== 数据模型 ====================

@dataclass(frozen=True)
class Edge:
    """带数字标签的有向边"""
    source: str
    digit: int
    target: str


@dataclass(frozen=True)
class SftGraph:
    """有限型子移位图

    Attributes:
        order: 阶数 n（β 自动机为状态数）
        reference: 参考串的文本形式
        kind: "window"（n 窗口图）、"beta"（精确 Parry 自动机）或 "strict"（有限前缀的严格截断自动机）
        nodes: 节点
        edges: 边；沿环读出的数字即环对应的周期串
    """

    order: int
    reference: str
    kind: str
    nodes: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    @cached_property
    def index(self) -> Dict[str, int]:
        return {node: i for i, node in enumerate(self.nodes)}

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.nodes)
        for e in self.edges:
            g.add_edge(e.source, e.target, digit=e.digit)
        return g


@dataclass(frozen=True)
class DfApprox:
    """DF(w) 的内外逼近对"""

    word: DigitWord
    order: int
    max_period: int
    inner: RatPolygon
    outer: RatPolygon
    witnesses: Tuple[Tuple[DigitWord, FreqVector], ...]
    outer_cycles: Tuple[Tuple[DigitWord, FreqVector], ...] = field(default=())
    model: str = "beta"
    diagnostics: Tuple[str, ...] = ()

    @property
    def closed(self) -> bool:
        return self.inner == self.outer

    @property
    def gap(self) -> Fraction:
        return hausdorff(self.inner, self.outer)


# ==================== 图构建 ====================

def _label(digits: Sequence[int]) -> str:
    return "".join(map(str, digits))


def build_sft(u: DigitWord, n: int) -> SftGraph:
    """
    n 阶窗口图：节点为 (n−1) 窗口，每个字典序 ≤ u[:n] 的 n 窗口给出一条边

    Args:
        u: 最大序列的前缀（有限或无穷）
        n: 阶数

    Raises:
        GraphError: n < 2 或 u 长度不足
    """
    if n < 2:
        raise GraphError(f"阶数必须 ≥ 2，当前为 {n}")
    if u.is_finite and len(u.preperiod) < n:
        raise GraphError(f"参考前缀长度 {len(u.preperiod)} 小于阶数 {n}")
    ref = u.prefix(n)

    edges = []
    nodes = set()
    for window in itertools.product(DIGITS, repeat=n):
        if window > ref:
            continue
        src, dst = _label(window[:-1]), _label(window[1:])
        nodes.update((src, dst))
        edges.append(Edge(src, window[0], dst))
    return SftGraph(n, _label(ref), "window", tuple(sorted(nodes)), tuple(edges))


def build_beta_graph(w: DigitWord) -> SftGraph:
    """
    β-shift 的紧凑自动机

    状态 k 表示已与 w 匹配 k 个符号。读入 c：c < w_k 回到 0；c = w_k 前进一格；
    c > w_k 拒绝。最终周期串在匹配完整个 u·v 后折回 len(u)，给出精确的 B(w)；
    有限前缀 P 在即将完全匹配 P 时丢弃该路径，只保留严格小于 P 的序列。

    Raises:
        GraphError: w 为空串
    """
    if w.is_finite:
        states = len(w.preperiod)
        kind = "strict"
    else:
        states = w.state_count
        kind = "beta"
    if states == 0:
        raise GraphError("参考串为空")

    digits = w.prefix(states)
    nodes = tuple(f"q{k}" for k in range(states))
    edges = []
    for k in range(states):
        for c in DIGITS:
            if c < digits[k]:
                edges.append(Edge(nodes[k], c, nodes[0]))
            elif c == digits[k]:
                nxt = k + 1
                if nxt == states:
                    if kind == "strict":
                        continue
                    nxt = len(w.preperiod)
                edges.append(Edge(nodes[k], c, nodes[nxt]))
    return SftGraph(states, str(w), kind, nodes, tuple(edges))


def outer_model(w: DigitWord, n: int, model: str = "beta") -> SftGraph:
    """
    n 阶外模型

    beta：若 w 最终周期且状态数 ≤ n，则为 w 的精确自动机；否则为共享 n 前缀的
    最大的最大序列的自动机（包含 B(w)，对 w 单调，对 n 不增）。
    window：字面意义的 n 阶窗口图。
    """
    if model == "window":
        return build_sft(w, n)
    if model != "beta":
        raise GraphError(f"未知外模型: {model}")
    if not w.is_finite and w.state_count <= n:
        return build_beta_graph(w)
    if w.is_finite and len(w.preperiod) < n:
        raise GraphError(f"前缀长度 {len(w.preperiod)} 小于阶数 {n}")
    return build_beta_graph(largest_maximal_with_prefix(w.prefix(n)))


# ==================== 最大平均环 ====================

def _scaled_weights(d: Sequence) -> Tuple[List[int], int]:
    """把有理方向放大为整数权重"""
    fracs = [Fraction(x) for x in d]
    scale = lcm(*(f.denominator for f in fracs))
    return [int(f * scale) for f in fracs], scale


def _cycle_word(digits: Sequence[int]) -> DigitWord:
    return DigitWord.periodic(max_rotation(digits))


def max_mean_cycle(g: SftGraph, d: Sequence) -> Tuple[Fraction, DigitWord]:
    """
    最大平均环：max over 环 C of d · freq(C)

    Karp 动态规划求最优值；再以 −λ* 重新赋权，用 Bellman-Ford 势函数找出紧边。
    紧子图的简单环都是最优环，返回周期串字典序最小的一个（至多检查
    MAX_TIGHT_CYCLES 个标号环）。

    Args:
        g: 图
        d: ℝ³ 中的有理方向

    Returns:
        (最优值, 最优环的周期串)

    Raises:
        GraphError: 图中无环
    """
    weights, scale = _scaled_weights(d)
    idx = g.index
    arcs = [(idx[e.source], idx[e.target], weights[e.digit], e.digit) for e in g.edges]
    n = len(g.nodes)
    if n == 0 or not arcs:
        raise GraphError("图中没有边")

    # Karp：D[k][v] 为恰好 k 步到达 v 的最大权
    table: List[List[Optional[int]]] = [[0] * n]
    for _ in range(n):
        prev = table[-1]
        cur: List[Optional[int]] = [None] * n
        for u, v, wt, _digit in arcs:
            if prev[u] is not None:
                val = prev[u] + wt  # type: ignore[operator]
                if cur[v] is None or val > cur[v]:  # type: ignore[operator]
                    cur[v] = val
        table.append(cur)

    best: Optional[Fraction] = None
    for v in range(n):
        if table[n][v] is None:
            continue
        worst = min(
            Fraction(table[n][v] - table[k][v], n - k)  # type: ignore[operator]
            for k in range(n)
            if table[k][v] is not None
        )
        if best is None or worst > best:
            best = worst
    if best is None:
        raise GraphError("图中无环")

    # 势函数：在 w − λ* 下无正环，最长路径收敛
    potential = [Fraction(0)] * n
    for _ in range(n):
        changed = False
        for u, v, wt, _digit in arcs:
            val = potential[u] + wt - best
            if val > potential[v]:
                potential[v] = val
                changed = True
        if not changed:
            break

    labels: Dict[Tuple[int, int], List[int]] = {}
    for u, v, wt, digit in arcs:
        if potential[u] + wt - best == potential[v]:
            labels.setdefault((u, v), []).append(digit)
    tg = nx.DiGraph()
    tg.add_nodes_from(range(n))
    tg.add_edges_from(labels)

    # 紧子图中的每个环都达到最优值；取周期串字典序最小者
    span = 2 * n
    chosen: Optional[Tuple[Tuple[int, ...], int, DigitWord]] = None
    examined = 0
    for nodes in nx.simple_cycles(tg):
        hops = list(zip(nodes, nodes[1:] + nodes[:1]))
        for digits in itertools.product(*(sorted(labels[h]) for h in hops)):
            word = _cycle_word(digits)
            key = (word.prefix(span), word.state_count, word)
            if chosen is None or key[:2] < chosen[:2]:
                chosen = key
            examined += 1
        if examined >= MAX_TIGHT_CYCLES:
            break
    if chosen is None:
        raise CertificationError("最大平均环提取失败：紧子图无环")
    return best / scale, chosen[2]


def _bounded_support(g: SftGraph, d: Sequence, max_period: int) -> Tuple[Fraction, DigitWord]:
    """
    长度 ≤ max_period 的闭路径中 d·freq 的最大值

    对每个起点做分层动态规划；并列时保留先找到的（起点编号小、长度短）。

    Raises:
        GraphError: 不存在长度 ≤ max_period 的闭路径
    """
    weights, scale = _scaled_weights(d)
    idx = g.index
    arcs = [(idx[e.source], idx[e.target], weights[e.digit], e.digit) for e in g.edges]

    best: Optional[Tuple[Fraction, List[int]]] = None
    for s in range(len(g.nodes)):
        layer: Dict[int, int] = {s: 0}
        parents: List[Dict[int, Tuple[int, int]]] = []
        for k in range(1, max_period + 1):
            nxt: Dict[int, int] = {}
            par: Dict[int, Tuple[int, int]] = {}
            for u, v, wt, digit in arcs:
                if u in layer:
                    val = layer[u] + wt
                    if v not in nxt or val > nxt[v]:
                        nxt[v] = val
                        par[v] = (u, digit)
            parents.append(par)
            layer = nxt
            if not layer:
                break
            if s in layer:
                value = Fraction(layer[s], k)
                if best is None or value > best[0]:
                    digits = []
                    node = s
                    for level in range(k - 1, -1, -1):
                        u, digit = parents[level][node]
                        digits.append(digit)
                        node = u
                    best = (value, digits[::-1])
    if best is None:
        raise GraphError(f"不存在长度 ≤ {max_period} 的闭路径")
    return best[0] / scale, _cycle_word(best[1])


# ==================== 多边形 ====================

Support = Callable[[Tuple[Fraction, Fraction]], DigitWord]


def _support_polygon(support: Support) -> Tuple[RatPolygon, Dict[Point, DigitWord]]:
    """
    由支撑查询重建凸多边形（图册坐标 (α₀, α₂)）

    对每条逆时针边取外法向查询；若支撑点严格越过该边则插入并递归细分，
    否则该边已在边界上。
    """
    found: Dict[Point, DigitWord] = {}

    def support_at(direction: Tuple[Fraction, Fraction]) -> Point:
        word = support(direction)
        pt = freq(word).chart
        found.setdefault(pt, word)
        return pt

    def refine(p: Point, q: Point) -> List[Point]:
        normal = (q[1] - p[1], p[0] - q[0])
        r = support_at(normal)
        if dot(normal, r) <= dot(normal, p):
            return []
        return refine(p, r) + [r] + refine(r, q)

    initial = convex_hull(support_at((Fraction(a), Fraction(b))) for a, b in _INITIAL_DIRECTIONS)
    points = list(initial)
    if len(initial) >= 2:
        ring = initial + [initial[0]] if len(initial) > 2 else [initial[0], initial[1], initial[0]]
        for p, q in zip(ring, ring[1:]):
            points.extend(refine(p, q))
    polygon = RatPolygon.hull(points, "delta")
    witnesses = {v: found[v] for v in polygon.vertices}
    return polygon, witnesses


def _chart_direction(direction: Tuple[Fraction, Fraction]) -> Direction:
    return (Fraction(direction[0]), Fraction(0), Fraction(direction[1]))


def _outer_with_cycles(g: SftGraph) -> Tuple[RatPolygon, Dict[Point, DigitWord]]:
    return _support_polygon(lambda dr: max_mean_cycle(g, _chart_direction(dr))[1])


def outer_polytope(g: SftGraph) -> RatPolygon:
    """图上所有环平均频率的凸包（精确顶点）"""
    return _outer_with_cycles(g)[0]


def inner_polytope(
    g: SftGraph,
    w: DigitWord,
    max_period: int,
    diagnostics: Optional[List[str]] = None,
    member: Optional[Callable[[DigitWord, DigitWord], Verdict]] = None,
) -> Tuple[RatPolygon, List[Tuple[DigitWord, FreqVector]]]:
    """
    长度 ≤ max_period 的周期见证的凸包

    只有 member(·, w) = IN 的见证进入凸包；其余见证丢弃，原因写入 diagnostics，
    内逼近因此只会变小。

    Args:
        member: 成员判定，默认 beta_member

    Raises:
        CertificationError: 没有任何见证通过认证
    """
    member = member or beta_member
    polygon, found = _support_polygon(
        lambda dr: _bounded_support(g, _chart_direction(dr), max_period)[1]
    )
    witnesses = []
    for vertex in polygon.vertices:
        word = found[vertex]
        verdict = member(word, w)
        if verdict.status is not Status.IN:
            if diagnostics is not None:
                diagnostics.append(f"丢弃见证 {word}: B({w}) 成员判定为 {verdict.status.value}")
            continue
        witnesses.append((word, freq(word)))
    if not witnesses:
        raise CertificationError(f"B({w}) 中没有通过认证的周期见证")
    if len(witnesses) < len(polygon.vertices):
        polygon = RatPolygon.hull([a.chart for _, a in witnesses])
    return polygon, witnesses


def df_approx(w: DigitWord, n: int, max_period: int, model: str = "beta") -> DfApprox:
    """
    DF(w) 的 n 阶内外逼近

    有限前缀短于 n 时，外模型改用以该前缀开头的最大的最大序列：真实的 kneading 串
    不超过它，因而外逼近仍然有效，阶数保持为 n。

    Raises:
        WordError: w 不是最大序列
        CertificationError: inner ⊄ outer
    """
    if is_maximal(w).status is Status.NO:
        raise WordError(f"{w} 不是最大序列")
    if n < 2 or max_period < 1:
        raise GraphError(f"阶数必须 ≥ 2 且 max_period ≥ 1（当前 n={n}, max_period={max_period}）")
    if w.is_finite and not w.preperiod:
        raise WordError("参考前缀为空")

    reference = w
    diagnostics = []
    if w.is_finite and len(w.preperiod) < n:
        reference = largest_maximal_with_prefix(w.preperiod)
        diagnostics.append(
            f"已认证前缀长度 {len(w.preperiod)} 小于阶数 {n}，外模型改用 {reference}"
        )

    outer, cycles = _outer_with_cycles(outer_model(reference, n, model))
    inner, witnesses = inner_polytope(build_beta_graph(w), w, max_period, diagnostics)
    if not outer.contains(inner):
        raise CertificationError(f"内逼近不包含于外逼近 (w={w}, n={n})")

    return DfApprox(
        word=w,
        order=n,
        max_period=max_period,
        inner=inner,
        outer=outer,
        witnesses=tuple(witnesses),
        outer_cycles=tuple((cycles[v], freq(cycles[v])) for v in outer.vertices),
        model=model,
        diagnostics=tuple(diagnostics),
    )
