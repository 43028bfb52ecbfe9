"""Sturmian 代换（有界偏差）构造命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import RotkitError
from ..core.infimax import build_goober, deviation_profile
from ..utils.console import print_info, print_success
from ..utils.file_utils import to_csv, write_output
from ..utils.validators import parse_block, validate_positive
from .common import is_quiet, usage_error
from .deviation import DEVIATION_HEADER


def goober(
    ctx: typer.Context,
    w0: str = typer.Option(
        ...,
        "--w0",
        help="有限块 W₀，如 (20) 或 20",
    ),
    w1: str = typer.Option(
        ...,
        "--w1",
        help="有限块 W₁，如 (21) 或 21",
    ),
    k0: int = typer.Option(1, "--k0", help="W₀ 的重复次数"),
    k1: int = typer.Option(1, "--k1", help="W₁ 的重复次数"),
    slope: float = typer.Option(
        ...,
        "--lambda",
        help="Sturmian 斜率 λ ∈ [0,1]",
    ),
    length: int = typer.Option(
        100000,
        "--len",
        "-l",
        help="序列长度",
    ),
    every: int = typer.Option(
        1,
        "--every",
        help="检查点间隔",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="CSV 输出文件（默认写到标准输出）",
    ),
):
    """
    构造 0 ↦ W₀^k₀、1 ↦ W₁^k₁ 代换后的 Sturmian 序列并测量偏差

    示例:
        rotkit goober --w0 "(20)" --w1 "(21)" --lambda 0.618 --len 100000 -o goober.csv
    """
    try:
        block0, block1 = parse_block(w0), parse_block(w1)
        validate_positive(k0, "k0")
        validate_positive(k1, "k1")
        validate_positive(length, "长度")
        validate_positive(every, "检查点间隔")
    except ValueError as e:
        raise usage_error(str(e))

    try:
        result = build_goober(block0, block1, k0, k1, slope, length)
        profile = deviation_profile(result.word, result.target, range(every, length + 1, every))
    except RotkitError as e:
        raise usage_error(str(e))

    written = write_output(to_csv(DEVIATION_HEADER, profile.rows()), output)

    if not is_quiet(ctx):
        target = ", ".join(f"{c:.6f}" for c in result.target)
        print_info(
            f"目标 v = ({target})  最大偏差 [number]{float(profile.max_deviation):.6f}[/] "
            f"< 2q = [number]{2 * result.q}[/]"
        )
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
