"""旋转集计算命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import CertificationError, RotkitError
from ..core.pipeline import RotsetReport, rotation_set
from ..core.render import RenderSpec, render_svg
from ..schemas import OutputFormat, RotsetReportModel
from ..styles.colors import Icons
from ..utils.config import get_config_value
from ..utils.console import print_info, print_success, print_table
from ..utils.file_utils import to_csv, to_json, write_output
from ..utils.validators import parse_t, validate_format, validate_positive
from .common import certification_error, is_quiet, or_config, show_diagnostics, usage_error


def format_report(report: RotsetReport, fmt: OutputFormat) -> str:
    """按格式序列化报告"""
    if fmt is OutputFormat.JSON:
        return to_json(RotsetReportModel.model_validate(report.to_dict()))
    if fmt is OutputFormat.SVG:
        spec = RenderSpec.from_config(get_config_value("render", {}))
        title = f"t = {report.t}  {report.classification}"
        return render_svg(report.outer, report.inner, spec, title)
    rows = [("outer", i, x, y) for i, (x, y) in enumerate(report.outer.vertices)]
    rows += [("inner", i, x, y) for i, (x, y) in enumerate(report.inner.vertices)]
    return to_csv(("polygon", "index", "x", "y"), rows)


def rotset(
    ctx: typer.Context,
    t: str = typer.Option(
        ...,
        "--t",
        help="参数 t ∈ [0,1]，如 3/4",
    ),
    depth: Optional[int] = typer.Option(
        None,
        "--depth",
        "-n",
        help="阶数 n（默认取配置 defaults.depth）",
    ),
    max_period: Optional[int] = typer.Option(
        None,
        "--max-period",
        "-p",
        help="内逼近见证的最大周期（默认取配置 defaults.max_period）",
    ),
    fmt: Optional[str] = typer.Option(
        None,
        "--format",
        "-f",
        help="输出格式: json | svg | csv",
    ),
    model: Optional[str] = typer.Option(
        None,
        "--model",
        help="外逼近模型: beta | window",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="输出文件（默认写到标准输出）",
    ),
):
    """
    计算 ρ(t) 的内外逼近多边形

    示例:
        rotkit rotset --t 3/4 --depth 12 --format json -o quad.json
        rotkit rotset --t 1 --depth 4 --format svg -o triangle.svg
    """
    try:
        t_value = parse_t(t)
        n = validate_positive(or_config(depth, "defaults.depth", 12), "阶数", 2)
        period = validate_positive(
            or_config(max_period, "defaults.max_period", 12), "最大周期"
        )
        out_fmt = validate_format(fmt or str(get_config_value("defaults.format", "json")))
        outer_model = model or str(get_config_value("polytope.outer_model", "beta"))
        if outer_model not in ("beta", "window"):
            raise ValueError(f"未知的外逼近模型: {outer_model}")
    except ValueError as e:
        raise usage_error(str(e))

    try:
        report = rotation_set(t_value, n, period, outer_model)
    except CertificationError as e:
        raise certification_error(e)
    except RotkitError as e:
        raise usage_error(str(e))

    show_diagnostics(ctx, report.diagnostics)
    written = write_output(format_report(report, out_fmt), output)

    if not is_quiet(ctx):
        print_table(
            title=f"{Icons.POLYGON} ρ({report.t})  {report.classification}",
            columns=["外逼近顶点", "内逼近顶点"],
            rows=[
                [_vertex(report.outer.vertices, i), _vertex(report.inner.vertices, i)]
                for i in range(max(len(report.outer.vertices), len(report.inner.vertices)))
            ],
            column_styles=["rational", "rational"],
        )
        print_info(f"kneading: [word]{report.kneading.kneading}[/]  间隙: [number]{report.gap}[/]")
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")


def _vertex(vertices, i: int) -> str:
    if i >= len(vertices):
        return ""
    x, y = vertices[i]
    return f"({x}, {y})"
