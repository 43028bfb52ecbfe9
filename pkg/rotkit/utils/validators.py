"""参数验证工具

把命令行字符串解析为核心层对象。所有解析失败都抛出 ValueError，
由命令层转换为退出码 2。
"""

from fractions import Fraction
from typing import Tuple

from ..core.errors import RotkitError
from ..core.figure_eight import EightPoint
from ..core.infimax import Substitution
from ..core.words import DigitWord, FreqVector
from ..schemas import OutputFormat

FORMATS = tuple(f.value for f in OutputFormat)


def parse_rational(text: str, name: str = "数值") -> Fraction:
    """
    解析有理数，支持 "3/4"、"0.75"、"1"

    Raises:
        ValueError: 格式无效
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"无效的{name}: {text!r}") from e


def parse_t(text: str) -> Fraction:
    """
    解析参数 t ∈ [0,1]

    Raises:
        ValueError: 格式无效或超出 [0,1]
    """
    t = parse_rational(text, "参数 t")
    if not 0 <= t <= 1:
        raise ValueError(f"参数 t 必须位于 [0,1]: {text}")
    return t


def parse_t_range(start: str, end: str) -> Tuple[Fraction, Fraction]:
    """
    解析扫描区间，要求 t₀ ≤ t₁

    Raises:
        ValueError: 端点无效或 t₀ > t₁
    """
    t0, t1 = parse_t(start), parse_t(end)
    if t0 > t1:
        raise ValueError(f"扫描区间起点大于终点: {start} > {end}")
    return t0, t1


def parse_word(text: str) -> DigitWord:
    """
    解析 "21(1)" 形式的数字串

    Raises:
        ValueError: 格式无效
    """
    try:
        return DigitWord.parse(text)
    except RotkitError as e:
        raise ValueError(str(e)) from e


def parse_block(text: str) -> Tuple[int, ...]:
    """
    解析有限数字块，"(22)" 与 "22" 都表示块 22（不约化为最小周期）

    Raises:
        ValueError: 块为空或含 0、1、2 以外的字符
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body or any(c not in "012" for c in body):
        raise ValueError(f"无效的数字块: {text!r}")
    return tuple(int(c) for c in body)


def parse_int_list(text: str, name: str = "整数列表") -> Tuple[int, ...]:
    """
    解析逗号分隔的正整数，如 "22,24,26"

    Raises:
        ValueError: 为空或含非正整数
    """
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise ValueError(f"无效的{name}: {text!r}") from e
    if any(v < 1 for v in values):
        raise ValueError(f"{name}必须为正整数: {text!r}")
    return values


def parse_alpha(text: str) -> FreqVector:
    """
    解析频率向量 "1/2,0,1/2"

    Raises:
        ValueError: 分量个数不为 3、含负数或和不为 1
    """
    parts = [p for p in text.replace(" ", "").split(",")]
    if len(parts) != 3:
        raise ValueError(f"频率向量必须有 3 个分量: {text!r}")
    values = [parse_rational(p, "频率分量") for p in parts]
    try:
        return FreqVector(*values)
    except RotkitError as e:
        raise ValueError(str(e)) from e


def parse_point(text: str) -> EightPoint:
    """
    解析八字形空间中的点 "S1:149/40"

    Raises:
        ValueError: 格式无效或位置越界
    """
    try:
        return EightPoint.parse(text)
    except RotkitError as e:
        raise ValueError(str(e)) from e


def parse_substitution(text: str) -> Substitution:
    """
    解析代换 "0>1;1>200;2>20"

    Raises:
        ValueError: 格式无效
    """
    try:
        return Substitution.parse(text)
    except RotkitError as e:
        raise ValueError(str(e)) from e


def validate_positive(value: int, name: str, minimum: int = 1) -> int:
    """
    检查整数参数下限

    Raises:
        ValueError: value < minimum
    """
    if value < minimum:
        raise ValueError(f"{name} 必须 ≥ {minimum}: {value}")
    return value


def validate_format(fmt: str) -> OutputFormat:
    """
    检查输出格式

    Raises:
        ValueError: 不支持的格式
    """
    fmt = fmt.lower()
    if fmt not in FORMATS:
        raise ValueError(f"不支持的输出格式: {fmt}（可选 {', '.join(FORMATS)}）")
    return OutputFormat(fmt)
