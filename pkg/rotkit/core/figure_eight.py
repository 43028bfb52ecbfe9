"""八字形空间上的映射 f、f_t 与 kneading 序列

X = S₁ ∨ S₂，两圆周长分别为 5 和 3，楔点 v 规范存储为 (S1, 0)。
S₁ 上的边 C c 1 2 2r 依次为 [0,1) [1,2) [2,3) [3,4) [4,5)，
S₂ 上的边 A B b 依次为 [0,1) [1,2) [2,3)。所有运算为精确有理运算。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterator, List, Optional, Tuple

from .errors import FigureEightError
from .words import DigitWord, max_maximal_below

# ==================== 数据模型 ====================


class Circle(str, Enum):
    S1 = "S1"
    S2 = "S2"


CIRCLE_LENGTH = {Circle.S1: 5, Circle.S2: 3}


@dataclass(frozen=True)
class EightPoint:
    """X 中的点 (圆周, 位置)"""

    circle: Circle
    pos: Fraction

    def __post_init__(self):
        circle = Circle(self.circle)
        pos = Fraction(self.pos)
        if not 0 <= pos < CIRCLE_LENGTH[circle]:
            raise FigureEightError(f"位置 {pos} 超出 {circle.value} 的范围 [0,{CIRCLE_LENGTH[circle]})")
        if circle is Circle.S2 and pos == 0:
            circle = Circle.S1
        object.__setattr__(self, "circle", circle)
        object.__setattr__(self, "pos", pos)

    @classmethod
    def at(cls, circle: Circle, pos: Fraction) -> "EightPoint":
        """按圆周长度取模后构造"""
        circle = Circle(circle)
        return cls(circle, Fraction(pos) % CIRCLE_LENGTH[circle])

    @classmethod
    def parse(cls, text: str) -> "EightPoint":
        """
        解析 "S1:149/40"

        Raises:
            FigureEightError: 格式错误
        """
        head, sep, tail = text.strip().partition(":")
        if not sep or head not in ("S1", "S2"):
            raise FigureEightError(f"无效的点: {text!r}，格式应为 S1:p/q 或 S2:p/q")
        try:
            pos = Fraction(tail.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise FigureEightError(f"无效的位置: {tail!r}") from e
        return cls(Circle(head), pos)

    def __str__(self) -> str:
        return f"{self.circle.value}:{self.pos}"


@dataclass(frozen=True)
class Branch:
    """一条边上的仿射分支：image = slope·pos + offset（在目标圆周上取模）"""

    name: str
    circle: Circle
    start: int
    end: int
    slope: int
    offset: int
    target: Circle
    gamma: Tuple[int, int]

    def image(self, pos: Fraction) -> Fraction:
        return self.slope * pos + self.offset


BRANCH_TABLE: Tuple[Branch, ...] = (
    Branch("C", Circle.S1, 0, 1, 3, 0, Circle.S2, (0, 0)),
    Branch("c", Circle.S1, 1, 2, -3, 6, Circle.S2, (0, 0)),
    Branch("1", Circle.S1, 2, 3, 5, -10, Circle.S1, (0, 0)),
    Branch("2", Circle.S1, 3, 4, 5, -15, Circle.S1, (1, 0)),
    Branch("2r", Circle.S1, 4, 5, -5, 25, Circle.S1, (1, 0)),
    Branch("A", Circle.S2, 0, 1, 3, 0, Circle.S2, (0, 0)),
    Branch("B", Circle.S2, 1, 2, 5, -5, Circle.S1, (0, 1)),
    Branch("b", Circle.S2, 2, 3, -5, 15, Circle.S1, (0, 1)),
)

# 回归映射 F 的片段：(数字, 起点, 终点, 斜率, 截距)
RETURN_PIECES: Tuple[Tuple[int, Fraction, Fraction, int, int], ...] = (
    (0, Fraction(1, 3), Fraction(3, 5), 15, -5),
    (1, Fraction(2), Fraction(14, 5), 5, -10),
    (2, Fraction(3), Fraction(4), 5, -15),
)

P_POINT = EightPoint(Circle.S1, Fraction(4))
WEDGE = EightPoint(Circle.S1, Fraction(0))


@dataclass
class KneadingResult:
    """kneading 计算结果"""

    t: Fraction
    theta: DigitWord
    kneading: DigitWord
    depth: int
    diagnostics: List[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not self.kneading.is_finite

    def to_dict(self) -> dict:
        return {
            "t": str(self.t),
            "theta": str(self.theta),
            "kneading": str(self.kneading),
            "exact": self.exact,
            "depth": self.depth,
            "diagnostics": list(self.diagnostics),
        }


@dataclass
class OrbitResult:
    """轨道余链结果"""

    final: EightPoint
    gamma_sum: Tuple[int, int]
    steps: int

    @property
    def estimate(self) -> Tuple[Fraction, Fraction]:
        return (Fraction(self.gamma_sum[0], self.steps), Fraction(self.gamma_sum[1], self.steps))


# ==================== 映射 ====================

def _check_t(t: Fraction) -> Fraction:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise FigureEightError(f"参数 t 必须位于 [0,1]: {t}")
    return t


def branch_of(x: EightPoint) -> Branch:
    """按半开区间查找所在边"""
    for branch in BRANCH_TABLE:
        if branch.circle is x.circle and branch.start <= x.pos < branch.end:
            return branch
    raise FigureEightError(f"找不到点 {x} 所在的边")


def ell(t: Fraction) -> EightPoint:
    """ℓ(t)：距 p 为 (5−3t)/10 的左侧点"""
    t = _check_t(t)
    return EightPoint(Circle.S1, 4 - (5 - 3 * t) / 10)


def r_pt(t: Fraction) -> EightPoint:
    """r(t)：距 p 为 (5−3t)/10 的右侧点"""
    t = _check_t(t)
    return EightPoint(Circle.S1, 4 + (5 - 3 * t) / 10)


def apply_f(x: EightPoint) -> EightPoint:
    branch = branch_of(x)
    return EightPoint.at(branch.target, branch.image(x.pos))


def in_clip(t: Fraction, x: EightPoint) -> bool:
    """x ∈ I_t = [ℓ(t), r(t)]（闭区间）"""
    return x.circle is Circle.S1 and ell(t).pos <= x.pos <= r_pt(t).pos


def apply_ft(t: Fraction, x: EightPoint) -> EightPoint:
    """f_t(x) = f(ℓ(t))（x ∈ I_t），否则 f(x)"""
    if in_clip(t, x):
        return apply_f(ell(t))
    return apply_f(x)


def gamma(x: EightPoint) -> Tuple[int, int]:
    """位移余链 Γ：B ∪ b 上为 (0,1)，2 ∪ 2r 上为 (1,0)，其余为 (0,0)"""
    return branch_of(x).gamma


def return_F(x: EightPoint) -> EightPoint:
    """
    回归映射 F：C′ 上为 15x−5，1′ 上为 5x−10，2 上为 5x−15

    Raises:
        FigureEightError: x 不在 C′ ∪ 1′ ∪ 2 中
    """
    if x.circle is Circle.S1:
        for _digit, start, end, slope, offset in RETURN_PIECES:
            if start <= x.pos <= end:
                return EightPoint.at(Circle.S1, slope * x.pos + offset)
    raise FigureEightError(f"{x} 不在回归映射的定义域 C′ ∪ 1′ ∪ 2 内")


# ==================== 轨道 ====================

def orbit(t: Fraction, x: EightPoint, steps: int) -> Iterator[Tuple[int, EightPoint, Tuple[int, int]]]:
    """
    逐步迭代 f_t，产出 (步数, 点, Γ)

    位置以公共分母 D = lcm(den(x₀), 10·den(t)) 的整数分子表示，
    轨道上所有点的分母都整除 D。
    """
    t = _check_t(t)
    if steps < 0:
        raise FigureEightError("步数不能为负")
    denom = lcm(x.pos.denominator, 10 * t.denominator)
    lo = int(ell(t).pos * denom)
    hi = int(r_pt(t).pos * denom)
    clip = apply_f(ell(t))
    clip_state = (clip.circle, int(clip.pos * denom))
    scaled = [
        (b, b.start * denom, b.end * denom, b.offset * denom, CIRCLE_LENGTH[b.target] * denom)
        for b in BRANCH_TABLE
    ]

    circle, k = x.circle, int(x.pos * denom)
    for step in range(steps):
        for b, start, end, offset, modulus in scaled:
            if b.circle is circle and start <= k < end:
                break
        else:
            raise FigureEightError(f"找不到点 {circle.value}:{Fraction(k, denom)} 所在的边")
        yield step, EightPoint(circle, Fraction(k, denom)), b.gamma
        if circle is Circle.S1 and lo <= k <= hi:
            circle, k = clip_state
        else:
            k = (b.slope * k + offset) % modulus
            circle = b.target
            if circle is Circle.S2 and k == 0:
                circle = Circle.S1


def orbit_cocycle(t: Fraction, x: EightPoint, steps: int) -> OrbitResult:
    """
    前 steps 步的 Γ 之和与旋转估计

    Raises:
        FigureEightError: steps < 1
    """
    if steps < 1:
        raise FigureEightError("步数必须 ≥ 1")
    gx = gy = 0
    point = x
    for _step, point, g in orbit(t, x, steps):
        gx += g[0]
        gy += g[1]
    final = apply_ft(t, point)
    return OrbitResult(final=final, gamma_sum=(gx, gy), steps=steps)


# ==================== kneading ====================

def _trace_theta(t: Fraction, depth: int) -> Tuple[DigitWord, List[str]]:
    """
    θ(t) = sup{h₁(z) : z ≤ ℓ(t)} 的贪心提取

    每步取起点不超过当前点的最大片段 d；若当前点位于 d 上方的间隙，
    输出 d·(2) 并停止；若低于所有片段，回溯到上一个非零数字减一后接 (2)。
    轨道重复出现时得到精确的最终周期串。深度耗尽时，最后一个非零数字及其后的
    数字仍可能被回溯改写，只返回其之前的已认证前缀。
    """
    t = _check_t(t)
    if depth < 2:
        raise FigureEightError("深度必须 ≥ 2")
    x = ell(t).pos
    digits: List[int] = []
    seen = {}
    diagnostics: List[str] = []

    for step in range(depth):
        if x in seen:
            start = seen[x]
            return DigitWord(tuple(digits[:start]), tuple(digits[start:])), diagnostics
        seen[x] = step

        if x < RETURN_PIECES[0][1]:
            k = max(i for i, d in enumerate(digits) if d > 0)
            diagnostics.append(
                f"步骤 {step}: 点 {x} 低于所有片段，回溯到位置 {k} 并减一"
            )
            return DigitWord(tuple(digits[:k]) + (digits[k] - 1,), (2,)), diagnostics

        digit, start_pos, end_pos, slope, offset = max(
            piece for piece in RETURN_PIECES if piece[1] <= x
        )
        if x > end_pos:
            digits.append(digit)
            diagnostics.append(f"步骤 {step}: 点 {x} 落入片段 {digit} 上方的间隙，输出 {digit}(2)")
            return DigitWord(tuple(digits), (2,)), diagnostics
        if x == start_pos or x == end_pos:
            diagnostics.append(f"步骤 {step}: 点 {x} 位于片段 {digit} 的端点（取上侧约定）")
        digits.append(digit)
        x = slope * x + offset

    last = max(i for i, d in enumerate(digits) if d > 0)
    diagnostics.append(f"深度 {depth} 耗尽，已认证前缀长度 {last}")
    return DigitWord.finite(digits[:last]), diagnostics


def theta(t: Fraction, depth: int) -> DigitWord:
    """θ(t) 的精确值或已认证前缀"""
    return _trace_theta(t, depth)[0]


def kneading_prefix(t: Fraction, depth: int) -> KneadingResult:
    """K(a(t)) = 不超过 θ(t) 的最大的最大序列"""
    t = _check_t(t)
    word, diagnostics = _trace_theta(t, depth)
    return KneadingResult(
        t=t,
        theta=word,
        kneading=max_maximal_below(word),
        depth=depth,
        diagnostics=diagnostics,
    )


def _affine_of(digits) -> Tuple[Fraction, Fraction]:
    """F_{d_{k-1}} ∘ … ∘ F_{d_0} 的仿射系数 (a, b)"""
    a, b = Fraction(1), Fraction(0)
    for d in digits:
        _digit, _s, _e, slope, offset = RETURN_PIECES[d]
        a, b = slope * a, slope * b + offset
    return a, b


def itinerary_point(w: DigitWord) -> Fraction:
    """
    回归映射下行程为 w 的点（S₁ 上的位置）

    Raises:
        FigureEightError: w 为有限串
    """
    if w.is_finite:
        raise FigureEightError("只能对最终周期串求行程点")
    a, b = _affine_of(w.period)
    y = b / (1 - a)
    a_u, b_u = _affine_of(w.preperiod)
    return (y - b_u) / a_u


def kneading_parameter(w: DigitWord) -> Fraction:
    """
    满足 ℓ(t) = itinerary_point(w) 的参数 t，即 θ(t) = w 的参数

    对最大序列 w，这是 kneading 串为 w 的参数区间的左端点。

    Raises:
        FigureEightError: 对应的 t 不在 [0,1] 内
    """
    t = (10 * itinerary_point(w) - 35) / 3
    if not 0 <= t <= 1:
        raise FigureEightError(f"{w} 对应的参数 {t} 不在 [0,1] 内")
    return t
