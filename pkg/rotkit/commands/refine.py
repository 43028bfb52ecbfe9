"""逐阶细化命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import CertificationError, RotkitError
from ..core.figure_eight import kneading_parameter
from ..core.pipeline import refine as run_refine
from ..styles.colors import Icons
from ..utils.config import get_config_value
from ..utils.console import print_info, print_success, print_table
from ..utils.file_utils import to_csv, write_output
from ..utils.validators import parse_int_list, parse_t, parse_word, validate_positive
from .common import certification_error, is_quiet, usage_error

REFINE_HEADER = ("order", "max_period", "classification", "outer_vertices", "inner_vertices", "gap")


def refine(
    ctx: typer.Context,
    t: Optional[str] = typer.Option(
        None,
        "--t",
        help="参数 t ∈ [0,1]",
    ),
    word: Optional[str] = typer.Option(
        None,
        "--word",
        "-w",
        help="以最大序列给出参数：取 kneading 串为该序列的平台左端点",
    ),
    orders: str = typer.Option(
        ...,
        "--orders",
        "-n",
        help="逗号分隔的阶数序列，如 22,24,26",
    ),
    max_periods: Optional[str] = typer.Option(
        None,
        "--max-periods",
        "-p",
        help="逗号分隔的最大周期序列（默认与阶数相同）",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="CSV 输出文件（默认写到标准输出）",
    ),
):
    """
    固定 t，逐步提高阶数，记录外逼近顶点数与内外间隙

    示例:
        rotkit refine --t 3/4 --orders 4,6,8
        rotkit refine --word "(21202112120202120211211)" -n 22,24,26 -p 22,21,23
    """
    try:
        if (t is None) == (word is None):
            raise ValueError("--t 与 --word 必须且只能给出一个")
        ns = parse_int_list(orders, "阶数序列")
        periods = ns if max_periods is None else parse_int_list(max_periods, "最大周期序列")
        if len(periods) != len(ns):
            raise ValueError(f"最大周期序列长度 {len(periods)} 与阶数序列长度 {len(ns)} 不一致")
        for n in ns:
            validate_positive(n, "阶数", 2)
        t_value = parse_t(t) if t is not None else kneading_parameter(parse_word(word))
    except (ValueError, RotkitError) as e:
        raise usage_error(str(e))

    model = str(get_config_value("polytope.outer_model", "beta"))
    try:
        rows = run_refine(t_value, list(zip(ns, periods)), model)
    except CertificationError as e:
        raise certification_error(e)
    except RotkitError as e:
        raise usage_error(str(e))

    written = write_output(to_csv(REFINE_HEADER, [r.csv_row() for r in rows]), output)

    if not is_quiet(ctx):
        print_info(f"t = [number]{t_value}[/]")
        print_table(
            title=f"{Icons.SCAN} 逐阶细化",
            columns=["阶数", "最大周期", "分类", "外顶点", "内顶点", "间隙"],
            rows=[r.csv_row() for r in rows],
        )
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
