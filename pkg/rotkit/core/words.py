"""数字串核心 - 字母表 {0,1,2} 上的精确符号运算

包含字典序比较、移位、最大序列判定、β-shift 成员判定、
数字计数余链 (cocycle) 与频率向量。

有限串表示“观测到的前缀”，最终周期串表示精确的无穷序列；
无法从已有符号判定的结论一律返回 Undecided 并附带已检查的深度。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence, Tuple

from .errors import WordError

DIGITS = (0, 1, 2)


# ==================== 数据模型 ====================

def _minimal_period(block: Tuple[int, ...]) -> Tuple[int, ...]:
    """返回周期块的最小周期形式"""
    n = len(block)
    for p in range(1, n + 1):
        if n % p == 0 and block[:p] * (n // p) == block:
            return block[:p]
    return block


@dataclass(frozen=True)
class DigitWord:
    """{0,1,2} 上的有限串或最终周期串

    Attributes:
        preperiod: 前周期部分
        period: 周期部分（为空表示有限串，即前缀观测）

    构造时规范化：周期取最小周期；前周期末位与周期末位相同时向周期内吸收。
    """

    preperiod: Tuple[int, ...] = ()
    period: Tuple[int, ...] = ()

    def __post_init__(self):
        pre = tuple(int(d) for d in self.preperiod)
        per = tuple(int(d) for d in self.period)
        bad = (set(pre) | set(per)) - set(DIGITS)
        if bad:
            raise WordError(f"非法数字: {sorted(bad)}，字母表为 {{0,1,2}}")
        if per:
            per = _minimal_period(per)
            while pre and pre[-1] == per[-1]:
                pre = pre[:-1]
                per = per[-1:] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    # ---------- 构造 ----------

    @classmethod
    def finite(cls, digits: Iterable[int]) -> "DigitWord":
        """有限前缀"""
        return cls(tuple(digits), ())

    @classmethod
    def periodic(cls, block: Iterable[int]) -> "DigitWord":
        """纯周期串 (block)̄"""
        block = tuple(block)
        if not block:
            raise WordError("周期块不能为空")
        return cls((), block)

    @classmethod
    def parse(cls, text: str) -> "DigitWord":
        """
        解析文本形式，如 "21(1)"、"(2)"、"2012"

        Raises:
            WordError: 格式错误
        """
        raw = text.strip()
        if raw.count("(") > 1 or raw.count(")") > 1:
            raise WordError(f"无效的数字串: {text!r}")
        if "(" in raw:
            if not raw.endswith(")"):
                raise WordError(f"周期部分必须位于末尾: {text!r}")
            head, _, tail = raw[:-1].partition("(")
            if not tail:
                raise WordError(f"周期部分为空: {text!r}")
        else:
            if ")" in raw:
                raise WordError(f"括号不匹配: {text!r}")
            head, tail = raw, ""
        if any(c not in "0123456789" for c in head + tail):
            raise WordError(f"无效的数字串: {text!r}")
        return cls(tuple(int(c) for c in head), tuple(int(c) for c in tail))

    def __str__(self) -> str:
        head = "".join(map(str, self.preperiod))
        if self.period:
            return f"{head}({''.join(map(str, self.period))})"
        return head

    # ---------- 属性 ----------

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def observable_length(self) -> Optional[int]:
        """可观测符号数；无穷串返回 None"""
        return len(self.preperiod) if self.is_finite else None

    @property
    def state_count(self) -> int:
        """前周期长度 + 周期长度（即 β-shift 自动机的状态数）"""
        return len(self.preperiod) + len(self.period)

    def symbol(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            raise WordError(f"位置 {i} 超出有限串的观测长度 {len(self.preperiod)}")
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> Tuple[int, ...]:
        """前 n 个符号"""
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        if not self.period:
            raise WordError(f"需要 {n} 个符号，但有限串只有 {len(self.preperiod)} 个")
        rest = n - len(self.preperiod)
        reps = rest // len(self.period) + 1
        return self.preperiod + (self.period * reps)[:rest]

    def shift(self, r: int) -> "DigitWord":
        """移位 σ^r"""
        if r < 0:
            raise WordError("移位次数不能为负")
        if r <= len(self.preperiod):
            return DigitWord(self.preperiod[r:], self.period)
        if not self.period:
            raise WordError(f"移位 {r} 超出有限串长度 {len(self.preperiod)}")
        k = (r - len(self.preperiod)) % len(self.period)
        return DigitWord((), self.period[k:] + self.period[:k])


@dataclass(frozen=True)
class FreqVector:
    """2-单纯形 Δ 中的有理点 (α₀, α₁, α₂)"""

    a0: Fraction
    a1: Fraction
    a2: Fraction

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in (self.a0, self.a1, self.a2))
        if any(c < 0 for c in coords):
            raise WordError(f"频率向量分量必须非负: {coords}")
        if sum(coords) != 1:
            raise WordError(f"频率向量分量之和必须为 1: {coords}")
        object.__setattr__(self, "a0", coords[0])
        object.__setattr__(self, "a1", coords[1])
        object.__setattr__(self, "a2", coords[2])

    @classmethod
    def from_chart(cls, x: Fraction, y: Fraction) -> "FreqVector":
        """由图册坐标 (α₀, α₂) 还原"""
        return cls(Fraction(x), 1 - Fraction(x) - Fraction(y), Fraction(y))

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "FreqVector":
        total = sum(counts)
        if total <= 0:
            raise WordError("计数总和必须为正")
        return cls(*(Fraction(c, total) for c in counts))

    @property
    def chart(self) -> Tuple[Fraction, Fraction]:
        """图册坐标 (α₀, α₂)"""
        return (self.a0, self.a2)

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.as_tuple()) + ")"


@dataclass(frozen=True)
class CocycleSum:
    """数字计数余链 κ_σ(s, r)"""

    counts: Tuple[int, int, int]
    length: int

    def __post_init__(self):
        if any(c < 0 for c in self.counts) or sum(self.counts) != self.length:
            raise WordError(f"计数 {self.counts} 与长度 {self.length} 不一致")

    def __add__(self, other: "CocycleSum") -> "CocycleSum":
        return CocycleSum(
            tuple(a + b for a, b in zip(self.counts, other.counts)),  # type: ignore[arg-type]
            self.length + other.length,
        )


class Order(str, Enum):
    """字典序比较结果"""
    LT = "lt"
    EQ = "eq"
    GT = "gt"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Comparison:
    """比较结果；depth 为首个差异位置或已检查的符号数"""
    order: Order
    depth: int


class Status(str, Enum):
    """判定状态"""
    YES = "yes"
    NO = "no"
    IN = "in"
    OUT = "out"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    """判定结果

    position 含义：NO/OUT 时为违例的移位次数，UNDECIDED 时为已检查深度。
    """
    status: Status
    position: Optional[int] = None

    def __str__(self) -> str:
        if self.position is None:
            return self.status.value
        return f"{self.status.value}({self.position})"


# ==================== 字典序与最大性 ====================

def lex_cmp(a: DigitWord, b: DigitWord) -> Comparison:
    """
    字典序比较

    两个最终周期串总能在 max(前周期) + lcm(周期) 个位置内判定；
    有限前缀在公共长度内无差异时返回 Undecided。
    """
    if not a.is_finite and not b.is_finite:
        bound = max(len(a.preperiod), len(b.preperiod)) + lcm(len(a.period), len(b.period))
        limit = bound
    else:
        lengths = [w.observable_length for w in (a, b) if w.is_finite]
        limit = min(lengths)  # type: ignore[type-var]
    for i, (x, y) in enumerate(zip(a.prefix(limit), b.prefix(limit))):
        if x != y:
            return Comparison(Order.LT if x < y else Order.GT, i)
    if not a.is_finite and not b.is_finite:
        return Comparison(Order.EQ, limit)
    return Comparison(Order.UNDECIDED, limit)


def is_maximal(w: DigitWord) -> Verdict:
    """
    判断 w 是否为最大序列（w₀ = 2 且所有移位 ≤ w）

    最终周期串给出精确结论；有限前缀只能精确给出 NO。
    """
    if w.is_finite and not w.preperiod:
        return Verdict(Status.UNDECIDED, 0)
    if w.symbol(0) != 2:
        return Verdict(Status.NO, 0)

    if not w.is_finite:
        for r in range(1, w.state_count):
            if lex_cmp(w.shift(r), w).order is Order.GT:
                return Verdict(Status.NO, r)
        return Verdict(Status.YES)

    length = len(w.preperiod)
    for r in range(1, length):
        if lex_cmp(w.shift(r), w).order is Order.GT:
            return Verdict(Status.NO, r)
    return Verdict(Status.UNDECIDED, length)


def beta_member(s: DigitWord, w: DigitWord) -> Verdict:
    """
    判断 s 是否属于 β-shift B(w)：对所有 r ≥ 0 有 σ^r(s) ≤ w

    OUT 结论是精确的；只有当 s 最终周期且所有移位比较都能严格判定
    （或与最终周期 w 精确相等）时才返回 IN。

    Raises:
        WordError: w 不是最大序列
    """
    if is_maximal(w).status is Status.NO:
        raise WordError(f"{w} 不是最大序列，B(w) 无定义")

    shifts = len(s.preperiod) if s.is_finite else s.state_count
    pending: Optional[int] = None
    for r in range(shifts):
        c = lex_cmp(s.shift(r), w)
        if c.order is Order.GT:
            return Verdict(Status.OUT, r)
        if c.order is Order.UNDECIDED:
            pending = c.depth if pending is None else min(pending, c.depth)

    if s.is_finite:
        depth = len(s.preperiod) if pending is None else min(pending, len(s.preperiod))
        return Verdict(Status.UNDECIDED, depth)
    if pending is not None:
        return Verdict(Status.UNDECIDED, pending)
    return Verdict(Status.IN)


# ==================== 余链与频率 ====================

def kappa_cocycle(s: DigitWord, r: int) -> CocycleSum:
    """
    前 r 个符号中各数字的出现次数

    Raises:
        WordError: r 超出有限串的观测长度
    """
    if r < 0:
        raise WordError("r 不能为负")
    if s.is_finite and r > len(s.preperiod):
        raise WordError(f"r={r} 超出有限串的观测长度 {len(s.preperiod)}")

    head = s.preperiod[:r]
    counts = [head.count(d) for d in DIGITS]
    rest = r - len(head)
    if rest > 0:
        reps, tail = divmod(rest, len(s.period))
        for d in DIGITS:
            counts[d] += reps * s.period.count(d) + s.period[:tail].count(d)
    return CocycleSum((counts[0], counts[1], counts[2]), r)


def freq(s: DigitWord) -> FreqVector:
    """
    周期串的数字频率（最终周期串取其周期部分的频率）

    Raises:
        WordError: 有限串没有渐近频率
    """
    if s.is_finite:
        raise WordError(f"{s} 不是周期串，无法计算频率")
    return FreqVector.from_counts([s.period.count(d) for d in DIGITS])


# ==================== 最大序列修复 ====================

def max_rotation(block: Sequence[int]) -> Tuple[int, ...]:
    """周期块的最大旋转"""
    block = tuple(block)
    return max(block[i:] + block[:i] for i in range(len(block)))


def _prenecklace_scan(digits: Sequence[int]) -> Tuple[int, Optional[int]]:
    """
    最大序下的前项链扫描（以 digits[0] = 2 为前提）

    Returns:
        (p, violation)：p 为当前最大 Lyndon 前缀长度；
        violation 为首个违例位置（无违例时为 None）
    """
    p = 1
    for i in range(1, len(digits)):
        a, b = digits[i], digits[i - p]
        if a == b:
            continue
        if a < b:
            p = i + 1
        else:
            return p, i
    return p, None


def max_maximal_below(theta: DigitWord) -> DigitWord:
    """
    不超过 θ 的最大的最大序列

    若 θ 本身最大则返回 θ；否则扫描到首个违例位置 i，
    此时结果为当前 Lyndon 前缀的周期延拓 (θ[:p])̄。
    有限 θ 在观测范围内无违例时返回 θ 本身（已认证的前缀）。

    Raises:
        WordError: θ < 2·0̄
    """
    if (theta.is_finite and not theta.preperiod) or theta.symbol(0) != 2:
        raise WordError(f"{theta} 小于最小的最大序列 2(0)")

    if is_maximal(theta).status is Status.YES:
        return theta

    limit = len(theta.preperiod) if theta.is_finite else 2 * theta.state_count + 1
    digits = theta.prefix(limit)
    p, violation = _prenecklace_scan(digits)
    if violation is not None:
        return DigitWord.periodic(digits[:p])
    if theta.is_finite:
        return theta
    raise WordError(f"{theta} 的修复扫描未终止（不应发生）")


def largest_maximal_with_prefix(prefix: Sequence[int]) -> DigitWord:
    """
    以给定可容许前缀开头的最大的最大序列 (P[:p])̄

    Raises:
        WordError: 前缀不以 2 开头或不是任何最大序列的前缀
    """
    digits = tuple(prefix)
    if not digits or digits[0] != 2:
        raise WordError("前缀必须以 2 开头")
    p, violation = _prenecklace_scan(digits)
    if violation is not None:
        raise WordError(f"{''.join(map(str, digits))} 不是最大序列的前缀（位置 {violation}）")
    return DigitWord.periodic(digits[:p])
