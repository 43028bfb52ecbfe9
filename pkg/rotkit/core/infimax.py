"""infimax 实验室 - 有理 infimax、代换、Perron-Frobenius 数据、偏差增长与 Sturmian 构造

整数计数全部精确；浮点数只出现在特征值、Sturmian 斜率与报告中。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm, log
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.linalg import eig, matrix_power
from sympy.utilities.iterables import multiset_permutations

from .errors import InfimaxError
from .words import (
    DIGITS,
    DigitWord,
    FreqVector,
    Order,
    Status,
    freq,
    is_maximal,
    lex_cmp,
    max_rotation,
)

DEFAULT_ORACLE_BOUND = 12
DEFAULT_PRIMITIVE_POWER = 6


# ==================== 有理 infimax ====================

def infimax_rational(alpha: FreqVector, bound: int = DEFAULT_ORACLE_BOUND) -> DigitWord:
    """
    有理频率 α 的 infimax 序列 I(α)

    在所有长度为 q、数字计数为 qα 的项链中取最大旋转，再取其中最小者。
    只需枚举以 2 开头的排列：每条项链的最大旋转都以 2 开头。

    Args:
        alpha: α₂ > 0 的有理频率向量
        bound: 公分母上限

    Raises:
        InfimaxError: α₂ = 0 或公分母超过上限
    """
    if alpha.a2 == 0:
        raise InfimaxError("α₂ = 0 时不存在最大序列代表")
    q = lcm(*(c.denominator for c in alpha.as_tuple()))
    if q > bound:
        raise InfimaxError(f"公分母 {q} 超过上限 {bound}")

    counts = [int(c * q) for c in alpha.as_tuple()]
    counts[2] -= 1
    rest = [d for d in DIGITS for _ in range(counts[d])]

    best: Optional[Tuple[int, ...]] = None
    for perm in multiset_permutations(rest):
        rotation = max_rotation((2, *perm))
        if best is None or rotation < best:
            best = rotation
    assert best is not None

    word = DigitWord.periodic(best)
    if is_maximal(word).status is not Status.YES or freq(word) != alpha:
        raise InfimaxError(f"infimax 结果 {word} 未通过最大性/频率校验")
    return word


def df_char_test(alpha: FreqVector, w: DigitWord, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """
    α ∈ DF(w) ⟺ I(α) ≤ w

    Raises:
        InfimaxError: w 为有限前缀且比较无法判定
    """
    c = lex_cmp(infimax_rational(alpha, bound), w)
    if c.order is Order.UNDECIDED:
        raise InfimaxError(f"前缀 {w} 不足以比较（已检查 {c.depth} 位）")
    return c.order in (Order.LT, Order.EQ)


# ==================== 代换 ====================

@dataclass(frozen=True)
class Substitution:
    """{0,1,2} 上的代换，images[d] 为数字 d 的像"""

    images: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    def __post_init__(self):
        if len(self.images) != 3:
            raise InfimaxError("代换必须为 0、1、2 三个数字各给出像")
        images = tuple(tuple(int(c) for c in img) for img in self.images)
        for d, img in enumerate(images):
            if not img:
                raise InfimaxError(f"数字 {d} 的像不能为空")
            if set(img) - set(DIGITS):
                raise InfimaxError(f"数字 {d} 的像含非法数字: {img}")
        object.__setattr__(self, "images", images)

    @classmethod
    def parse(cls, text: str) -> "Substitution":
        """
        解析 "0>1;1>200;2>20"

        Raises:
            InfimaxError: 格式错误
        """
        mapping: Dict[int, Tuple[int, ...]] = {}
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition(">")
            key, value = key.strip(), value.strip()
            if not sep or key not in ("0", "1", "2") or not value.isdigit():
                raise InfimaxError(f"无效的代换项: {part!r}")
            if int(key) in mapping:
                raise InfimaxError(f"数字 {key} 重复定义")
            mapping[int(key)] = tuple(int(c) for c in value)
        if set(mapping) != set(DIGITS):
            raise InfimaxError("代换必须覆盖数字 0、1、2")
        return cls((mapping[0], mapping[1], mapping[2]))

    def __str__(self) -> str:
        return ";".join(f"{d}>{''.join(map(str, img))}" for d, img in enumerate(self.images))

    def apply(self, word: Sequence[int]) -> Tuple[int, ...]:
        out: List[int] = []
        for c in word:
            out.extend(self.images[c])
        return tuple(out)

    def compose(self, other: "Substitution") -> "Substitution":
        """(self ∘ other)(c) = self(other(c))"""
        return Substitution(tuple(self.apply(other.images[d]) for d in DIGITS))  # type: ignore[arg-type]


def lambda_n(n: int) -> Substitution:
    """Λ_n: 0 ↦ 1, 1 ↦ 2 0^{n+1}, 2 ↦ 2 0^n"""
    if n < 1:
        raise InfimaxError("n 必须 ≥ 1")
    return Substitution(((1,), (2,) + (0,) * (n + 1), (2,) + (0,) * n))


def subst_fixed_prefix(sub: Substitution, seed: int, length: int) -> DigitWord:
    """
    代换不动点的前 length 个符号

    任意正确前缀的像仍是正确前缀，因此每轮迭代只保留前 length 个符号。

    Raises:
        InfimaxError: Λ(seed) 不以 seed 开头或长度 < 2
    """
    image = sub.images[seed]
    if image[0] != seed or len(image) < 2:
        raise InfimaxError(f"种子 {seed} 无法延拓：像为 {''.join(map(str, image))}")
    if length < 0:
        raise InfimaxError("长度不能为负")

    table = {str(d): "".join(map(str, sub.images[d])) for d in DIGITS}
    text = str(seed)
    while len(text) < length:
        text = "".join(map(table.__getitem__, text))[:length]
    return DigitWord.finite(int(c) for c in text[:length])


@dataclass(frozen=True)
class AbelMatrix:
    """代换的阿贝尔化矩阵，第 j 列为 Λ(j) 的数字计数"""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        arr = np.array(self.rows, dtype=np.int64)
        if arr.shape != (3, 3) or (arr < 0).any():
            raise InfimaxError(f"阿贝尔化矩阵必须为 3×3 非负整数矩阵: {self.rows}")
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows))

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> "AbelMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in arr))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def __matmul__(self, other: "AbelMatrix") -> "AbelMatrix":
        return AbelMatrix.from_numpy(self.to_numpy() @ other.to_numpy())


def abelianization(sub: Substitution) -> AbelMatrix:
    """第 j 列 = Λ(j) 的数字计数向量"""
    arr = np.zeros((3, 3), dtype=np.int64)
    for j, img in enumerate(sub.images):
        for c in img:
            arr[c, j] += 1
    return AbelMatrix.from_numpy(arr)


@dataclass(frozen=True)
class PerronFrobenius:
    """Perron-Frobenius 数据"""
    lambda1: float
    alpha: Tuple[float, float, float]
    lambda2_abs: float

    @property
    def nu(self) -> float:
        """偏差增长指数 ν = log|λ₂| / log λ₁"""
        return log(self.lambda2_abs) / log(self.lambda1)

    def to_dict(self) -> dict:
        return {
            "lambda1": self.lambda1,
            "alpha": list(self.alpha),
            "lambda2_abs": self.lambda2_abs,
            "nu": self.nu,
        }


def is_primitive(matrix: AbelMatrix, max_power: int = DEFAULT_PRIMITIVE_POWER) -> bool:
    m = matrix.to_numpy()
    return any((matrix_power(m, k) > 0).all() for k in range(1, max_power + 1))


def pf_eigen(matrix: AbelMatrix, max_power: int = DEFAULT_PRIMITIVE_POWER) -> PerronFrobenius:
    """
    主特征值、ℓ¹ 归一化的正特征向量与次大特征值模

    Raises:
        InfimaxError: 矩阵非本原（检查到 max_power 次幂）
    """
    if not is_primitive(matrix, max_power):
        raise InfimaxError(f"矩阵在 {max_power} 次幂内不是本原矩阵")
    vals, vecs = eig(matrix.to_numpy().astype(float))
    i = int(np.argmax(vals.real))
    v = np.abs(vecs[:, i].real)
    v = v / v.sum()
    others = sorted((abs(vals[j]) for j in range(len(vals)) if j != i), reverse=True)
    return PerronFrobenius(
        lambda1=float(vals[i].real),
        alpha=(float(v[0]), float(v[1]), float(v[2])),
        lambda2_abs=float(others[0]),
    )


def substitution_checkpoints(matrix: AbelMatrix, seed: int, limit: int) -> List[int]:
    """r_i = ‖A^i e_seed‖₁，取所有 ≤ limit 的值（i = 0, 1, ...）"""
    m = matrix.to_numpy()
    vec = np.zeros(3, dtype=np.int64)
    vec[seed] = 1
    out: List[int] = []
    while int(vec.sum()) <= limit:
        r = int(vec.sum())
        if out and r <= out[-1]:
            break
        out.append(r)
        vec = m @ vec
    return out


# ==================== 偏差 ====================

Target = Union[FreqVector, Tuple[float, float, float]]


@dataclass(frozen=True)
class DeviationProfile:
    """偏差剖面 ‖κ_σ(s, r) − rα‖∞"""

    target: Target
    samples: Tuple[Tuple[int, Union[Fraction, float]], ...]
    max_so_far: Tuple[Union[Fraction, float], ...]

    @property
    def max_deviation(self) -> Union[Fraction, float]:
        return self.max_so_far[-1] if self.max_so_far else 0.0

    def bounded_by(self, bound: float) -> bool:
        return all(dev < bound for _, dev in self.samples)

    def strictly_increasing_from(self, start: int) -> bool:
        devs = [dev for _, dev in self.samples[start:]]
        return all(a < b for a, b in zip(devs, devs[1:]))

    def loglog_slope(self, skip: int = 2) -> float:
        """丢弃前 skip 个点后 log dev 对 log r 的最小二乘斜率"""
        pts = [(r, float(dev)) for r, dev in self.samples[skip:] if dev > 0]
        if len(pts) < 2:
            raise InfimaxError("有效采样点不足，无法拟合斜率")
        xs = np.log([r for r, _ in pts])
        ys = np.log([d for _, d in pts])
        return float(np.polyfit(xs, ys, 1)[0])

    def rows(self) -> List[Tuple[int, str, str]]:
        return [
            (r, str(dev), str(mx))
            for (r, dev), mx in zip(self.samples, self.max_so_far)
        ]


def deviation_profile(s: DigitWord, target: Target, checkpoints: Sequence[int]) -> DeviationProfile:
    """
    在检查点处计算偏差

    计数使用 numpy 整数前缀和（精确）；目标为 FreqVector 时偏差为精确有理数，
    否则为浮点数。

    Raises:
        InfimaxError: 检查点非严格递增或超出观测长度
    """
    points = list(checkpoints)
    if any(r <= 0 for r in points) or any(a >= b for a, b in zip(points, points[1:])):
        raise InfimaxError("检查点必须为严格递增的正整数")
    if not points:
        return DeviationProfile(target, (), ())
    top = points[-1]
    if s.is_finite and top > len(s.preperiod):
        raise InfimaxError(f"检查点 {top} 超出观测长度 {len(s.preperiod)}")

    digits = np.frombuffer(bytes(s.prefix(top)), dtype=np.uint8)
    cum = np.zeros((3, top + 1), dtype=np.int64)
    for d in DIGITS:
        cum[d, 1:] = np.cumsum(digits == d)

    samples = []
    if isinstance(target, FreqVector):
        alpha = target.as_tuple()
        for r in points:
            dev = max(abs(int(cum[d, r]) - r * alpha[d]) for d in DIGITS)
            samples.append((r, dev))
    else:
        alpha_f = np.array(target, dtype=float)
        idx = np.array(points)
        devs = np.abs(cum[:, idx] - np.outer(alpha_f, idx)).max(axis=0)
        samples = [(r, float(dev)) for r, dev in zip(points, devs)]

    running = []
    current = None
    for _, dev in samples:
        current = dev if current is None or dev > current else current
        running.append(current)
    return DeviationProfile(target, tuple(samples), tuple(running))


# ==================== Sturmian 与 goober ====================

def sturmian(slope: float, length: int) -> Tuple[int, ...]:
    """
    斜率为 λ 的 Sturmian 序列 s_r = ⌊(r+1)λ⌋ − ⌊rλ⌋

    Raises:
        InfimaxError: λ ∉ [0,1]
    """
    if not 0.0 <= slope <= 1.0:
        raise InfimaxError(f"斜率必须位于 [0,1]: {slope}")
    floors = np.floor(np.arange(length + 1) * slope).astype(np.int64)
    return tuple(int(x) for x in np.diff(floors))


@dataclass(frozen=True)
class Goober:
    """代换后的 Sturmian 轨道及其目标旋转向量"""
    word: DigitWord
    target: Tuple[float, float, float]
    q: int
    block0: Tuple[int, ...]
    block1: Tuple[int, ...]


def build_goober(
    w0: Sequence[int],
    w1: Sequence[int],
    k0: int,
    k1: int,
    slope: float,
    length: int,
) -> Goober:
    """
    Sturmian 序列经 0 ↦ W₀^{k₀}、1 ↦ W₁^{k₁} 代换得到的有界偏差序列

    W₀、W₁ 是有限数字块（周期串的一个周期），按原样重复，不做最小周期约化。

    目标向量 v = (1−λ)p₀/q + λp₁/q，偏差在每个位置都小于 2q。

    Raises:
        InfimaxError: 块长度不一致或含非法数字
    """
    block0 = tuple(w0) * k0
    block1 = tuple(w1) * k1
    if any(d not in DIGITS for d in block0 + block1):
        raise InfimaxError("块只能包含数字 0、1、2")
    if not block0 or len(block0) != len(block1):
        raise InfimaxError(f"块长度不一致: |W₀^k₀|={len(block0)}, |W₁^k₁|={len(block1)}")
    q = len(block0)

    base = sturmian(slope, ceil(length / q))
    digits: List[int] = []
    for bit in base:
        digits.extend(block1 if bit else block0)
    p0 = [block0.count(d) for d in DIGITS]
    p1 = [block1.count(d) for d in DIGITS]
    target = tuple((1 - slope) * p0[d] / q + slope * p1[d] / q for d in DIGITS)
    return Goober(
        word=DigitWord.finite(digits[:length]),
        target=target,  # type: ignore[arg-type]
        q=q,
        block0=block0,
        block1=block1,
    )
