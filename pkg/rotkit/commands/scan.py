"""参数扫描命令"""

from pathlib import Path
from typing import Optional

import typer

from ..core.errors import CertificationError, RotkitError
from ..core.pipeline import scan as run_scan
from ..schemas import ScanModel
from ..styles.colors import Icons
from ..utils.config import get_config_value, get_worker_count
from ..utils.console import LiveProgress, print_success, print_table
from ..utils.file_utils import to_csv, to_json, write_output
from ..utils.validators import parse_t_range, validate_positive
from .common import certification_error, is_quiet, or_config, usage_error

SCAN_HEADER = ("t", "plateau_id", "n_vertices", "closed")


def scan(
    ctx: typer.Context,
    t_from: str = typer.Option(
        ...,
        "--from",
        help="扫描起点 t₀",
    ),
    t_to: str = typer.Option(
        ...,
        "--to",
        help="扫描终点 t₁",
    ),
    steps: int = typer.Option(
        64,
        "--steps",
        "-s",
        help="网格点数（≥ 2）",
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
        help="内逼近见证的最大周期（默认等于阶数）",
    ),
    workers: Optional[int] = typer.Option(
        None,
        "--workers",
        "-w",
        help="进程数（默认取 ROTKIT_THREADS 或配置 pipeline.threads）",
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="输出文件（默认写到标准输出）",
    ),
    json_output: bool = typer.Option(
        False,
        "--json",
        help="输出平台汇总 JSON 而不是逐点 CSV",
    ),
):
    """
    在 [t₀, t₁] 的等距网格上扫描旋转集，按外逼近多边形合并平台

    示例:
        rotkit scan --from 0 --to 1 --steps 256 --depth 8 -o plateaus.csv
        rotkit scan --from 1/2 --to 1 --steps 65 --json -o plateaus.json
    """
    try:
        t0, t1 = parse_t_range(t_from, t_to)
        validate_positive(steps, "网格点数", 2)
        n = validate_positive(or_config(depth, "defaults.depth", 12), "阶数", 2)
        period = validate_positive(n if max_period is None else max_period, "最大周期")
        n_workers = validate_positive(get_worker_count() if workers is None else workers, "进程数")
    except ValueError as e:
        raise usage_error(str(e))

    model = str(get_config_value("polytope.outer_model", "beta"))
    quiet = is_quiet(ctx)

    try:
        if quiet:
            result = run_scan(t0, t1, steps, n, period, model, workers=n_workers)
        else:
            with LiveProgress(f"{Icons.SCAN} 扫描参数", total=steps) as progress:
                result = run_scan(
                    t0, t1, steps, n, period, model,
                    workers=n_workers,
                    progress=lambda t: progress.update(advance=1, detail=f"t = {t}"),
                )
    except CertificationError as e:
        raise certification_error(e)
    except RotkitError as e:
        raise usage_error(str(e))

    if json_output:
        content = to_json(ScanModel.model_validate(result.to_dict()))
    else:
        content = to_csv(SCAN_HEADER, result.csv_rows())
    written = write_output(content, output)

    if not quiet:
        print_table(
            title=f"{Icons.SCAN} 平台 ({len(result.plateaus)} 个, 阶数 {n})",
            columns=["编号", "起点", "终点", "点数", "顶点数", "闭合"],
            rows=[
                [
                    str(p.plateau_id),
                    str(p.t_start),
                    str(p.t_end),
                    str(p.points),
                    str(len(p.polygon.vertices)),
                    "是" if p.closed else "否",
                ]
                for p in result.plateaus
            ],
        )
        if written is not None:
            print_success(f"已写入 [path]{written}[/]")
