"""异常体系与退出码

核心层抛出的所有异常都继承自 RotkitError，命令层据此映射到进程退出码。
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """CLI 退出码"""

    OK = 0
    INTERNAL = 1    # 内部不变量被破坏（例如 inner ⊄ outer）
    USAGE = 2       # 参数错误


class RotkitError(Exception):
    """rotkit 基础异常"""
    pass


class WordError(RotkitError):
    """数字串相关错误（非法数字、观测长度不足、非最大序列等）"""
    pass


class GraphError(RotkitError):
    """有限型子移位图构建或最大平均环错误"""
    pass


class PolygonError(RotkitError):
    """有理多边形错误"""
    pass


class InfimaxError(RotkitError):
    """infimax / 代换 / 偏差实验错误"""
    pass


class FigureEightError(RotkitError):
    """八字形空间映射错误"""
    pass


class CertificationError(RotkitError):
    """认证失败：内逼近不包含于外逼近等不应发生的情况"""
    pass
