"""infimax 序列命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import RotkitError
from ..core.infimax import df_char_test, infimax_rational
from ..utils.console import print_info
from ..utils.file_utils import write_output
from ..utils.validators import parse_alpha, parse_word
from .common import is_quiet, or_config, usage_error


def infimax(
    ctx: typer.Context,
    alpha: str = typer.Option(
        ...,
        "--alpha",
        "-a",
        help="有理频率向量，如 1/2,0,1/2",
    ),
    bound: Optional[int] = typer.Option(
        None,
        "--bound",
        "-b",
        help="公分母上限（默认取配置 infimax.oracle_bound）",
    ),
    word: Optional[str] = typer.Option(
        None,
        "--word",
        "-w",
        help="同时判定 α ∈ DF(w)，w 如 (2220)",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="输出文件（默认写到标准输出）",
    ),
):
    """
    计算有理频率 α 的 infimax 序列 I(α)

    示例:
        rotkit infimax --alpha 1/2,0,1/2
        rotkit infimax --alpha 1/4,0,3/4 --word "(2220)"
    """
    try:
        target = parse_alpha(alpha)
        w = parse_word(word) if word is not None else None
    except ValueError as e:
        raise usage_error(str(e))
    limit = or_config(bound, "infimax.oracle_bound", 12)

    try:
        result = infimax_rational(target, limit)
        member = df_char_test(target, w, limit) if w is not None else None
    except RotkitError as e:
        raise usage_error(str(e))

    content = f"{result}\n"
    if member is not None:
        content += f"{'yes' if member else 'no'}\n"
    write_output(content, output)

    if not is_quiet(ctx):
        print_info(f"I{target} = [word]{result}[/]")
        if member is not None:
            print_info(f"α ∈ DF({w}): {'是' if member else '否'}")
