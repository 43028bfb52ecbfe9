"""命令层共用的错误映射与全局选项读取"""

from typing import List, Optional

import typer

from ..core.errors import CertificationError, ExitCode
from ..utils.config import get_config_value
from ..utils.console import print_error, print_structured_error, print_warning


def is_verbose(ctx: Optional[typer.Context]) -> bool:
    return bool(ctx is not None and (ctx.obj or {}).get("verbose"))


def is_quiet(ctx: Optional[typer.Context]) -> bool:
    return bool(ctx is not None and (ctx.obj or {}).get("quiet"))


def usage_error(message: str) -> typer.Exit:
    """打印参数错误并返回退出码 2"""
    print_error(message)
    return typer.Exit(int(ExitCode.USAGE))


def certification_error(error: CertificationError) -> typer.Exit:
    """打印认证失败并返回退出码 1"""
    print_structured_error(
        title="认证失败",
        error_message=str(error),
        causes=[
            "内逼近见证未通过 B(w) 成员检查",
            "内逼近多边形不包含于外逼近",
        ],
        suggestions=[
            "使用 --verbose 查看 kneading 诊断",
            "提交包含完整参数的问题报告",
        ],
    )
    return typer.Exit(int(ExitCode.INTERNAL))


def show_diagnostics(ctx: Optional[typer.Context], diagnostics: List[str]):
    """--verbose 时逐条打印诊断"""
    if is_verbose(ctx):
        for line in diagnostics:
            print_warning(line)


def or_config(value: Optional[int], key: str, default: int) -> int:
    """命令行未给出时取配置值"""
    return int(get_config_value(key, default)) if value is None else value
