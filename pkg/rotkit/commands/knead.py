"""kneading 序列命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import RotkitError
from ..core.figure_eight import kneading_prefix
from ..schemas import KneadingModel
from ..utils.console import print_info, print_success
from ..utils.file_utils import to_json, write_output
from ..utils.validators import parse_t, validate_positive
from .common import is_quiet, show_diagnostics, usage_error


def knead(
    ctx: typer.Context,
    t: str = typer.Option(
        ...,
        "--t",
        help="参数 t ∈ [0,1]",
    ),
    length: int = typer.Option(
        32,
        "--len",
        "-l",
        help="回归映射迭代深度",
    ),
    json_output: bool = typer.Option(
        False,
        "--json",
        "-j",
        help="JSON 格式输出（含 θ、深度与诊断）",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="输出文件（默认写到标准输出）",
    ),
):
    """
    计算 kneading 序列 K(a(t))

    示例:
        rotkit knead --t 0 --len 32
        rotkit knead --t 3/4 --json
    """
    try:
        t_value = parse_t(t)
        validate_positive(length, "深度", 2)
    except ValueError as e:
        raise usage_error(str(e))

    try:
        result = kneading_prefix(t_value, length)
    except RotkitError as e:
        raise usage_error(str(e))

    show_diagnostics(ctx, result.diagnostics)
    if json_output:
        content = to_json(KneadingModel.model_validate(result.to_dict()))
    else:
        content = f"{result.kneading}\n"
    written = write_output(content, output)

    if not is_quiet(ctx):
        status = "精确" if result.exact else "已认证前缀"
        print_info(f"θ = [word]{result.theta}[/]  K = [word]{result.kneading}[/] ({status})")
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
