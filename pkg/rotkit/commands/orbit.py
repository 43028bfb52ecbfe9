"""f_t 轨道模拟命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import RotkitError
from ..core.figure_eight import orbit as iterate_orbit
from ..core.figure_eight import orbit_cocycle
from ..utils.console import print_info, print_success
from ..utils.file_utils import to_csv, write_output
from ..utils.validators import parse_point, parse_t, validate_positive
from .common import is_quiet, usage_error

ORBIT_HEADER = ("step", "circle", "pos", "gamma_x", "gamma_y")


def orbit(
    ctx: typer.Context,
    t: str = typer.Option(..., "--t", help="参数 t ∈ [0,1]"),
    x: str = typer.Option(
        ...,
        "--x",
        help="起点，如 S1:1/2",
    ),
    steps: int = typer.Option(
        100,
        "--steps",
        "-s",
        help="迭代步数",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="CSV 输出文件（默认写到标准输出）",
    ),
):
    """
    迭代 f_t 并记录每一步的位移余链 Γ

    示例:
        rotkit orbit --t 3/4 --x S1:1/2 --steps 100 -o orbit.csv
    """
    try:
        t_value = parse_t(t)
        start = parse_point(x)
        validate_positive(steps, "步数")
    except ValueError as e:
        raise usage_error(str(e))

    try:
        rows = [
            (step, point.circle.value, point.pos, g[0], g[1])
            for step, point, g in iterate_orbit(t_value, start, steps)
        ]
        summary = orbit_cocycle(t_value, start, steps)
    except RotkitError as e:
        raise usage_error(str(e))

    written = write_output(to_csv(ORBIT_HEADER, rows), output)

    if not is_quiet(ctx):
        ex, ey = summary.estimate
        print_info(
            f"Γ 累计 = {summary.gamma_sum}  Birkhoff 估计 = ({float(ex):.6f}, {float(ey):.6f})"
        )
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
