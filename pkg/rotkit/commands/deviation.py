"""代换不动点偏差实验命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import RotkitError
from ..core.infimax import (
    abelianization,
    deviation_profile,
    lambda_n,
    pf_eigen,
    subst_fixed_prefix,
    substitution_checkpoints,
)
from ..utils.console import print_info, print_success, print_warning
from ..utils.file_utils import to_csv, write_output
from ..utils.validators import parse_substitution, validate_positive
from .common import is_quiet, or_config, usage_error

DEVIATION_HEADER = ("r", "dev", "max_dev")


def deviation(
    ctx: typer.Context,
    subst: Optional[str] = typer.Option(
        None,
        "--subst",
        help='代换，如 "0>1;1>200;2>20"',
    ),
    family: Optional[int] = typer.Option(
        None,
        "--lambda-n",
        help="使用 Λ_n 族中的代换（与 --subst 二选一）",
    ),
    seed: int = typer.Option(
        2,
        "--seed",
        help="不动点的首字母",
    ),
    length: int = typer.Option(
        100000,
        "--len",
        "-l",
        help="不动点前缀长度",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="CSV 输出文件（默认写到标准输出）",
    ),
):
    """
    在检查点 r_i = ‖A^i e_seed‖₁ 处测量代换不动点的频率偏差

    示例:
        rotkit deviation --subst "0>1;1>200;2>20" --len 100000 -o dev.csv
        rotkit deviation --lambda-n 2 --len 50000
    """
    try:
        if (subst is None) == (family is None):
            raise ValueError("必须且只能给出 --subst 或 --lambda-n 之一")
        if seed not in (0, 1, 2):
            raise ValueError(f"种子必须为 0、1 或 2: {seed}")
        validate_positive(length, "长度")
        sub = parse_substitution(subst) if subst is not None else lambda_n(family)  # type: ignore[arg-type]
    except (ValueError, RotkitError) as e:
        raise usage_error(str(e))

    try:
        matrix = abelianization(sub)
        pf = pf_eigen(matrix, or_config(None, "infimax.primitive_power", 6))
        word = subst_fixed_prefix(sub, seed, length)
        checkpoints = substitution_checkpoints(matrix, seed, length)
        profile = deviation_profile(word, pf.alpha, checkpoints)
    except RotkitError as e:
        raise usage_error(str(e))

    written = write_output(to_csv(DEVIATION_HEADER, profile.rows()), output)

    if not is_quiet(ctx):
        print_info(
            f"λ₁ = [number]{pf.lambda1:.6f}[/]  |λ₂| = [number]{pf.lambda2_abs:.6f}[/]  "
            f"ν = [number]{pf.nu:.6f}[/]"
        )
        skip = or_config(None, "deviation.skip_points", 2)
        try:
            print_info(f"log-log 斜率 = [number]{profile.loglog_slope(skip):.6f}[/]")
        except RotkitError as e:
            print_warning(str(e))
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
