#!/usr/bin/env python3
"""rotkit - 八字形映射族旋转集的精确计算工具"""

import typer

from . import __version__
from .utils.console import console

# 创建主应用
app = typer.Typer(
    name="rotkit",
    help="⬠ 八字形映射族旋转集的精确计算工具",
    add_completion=False,
    rich_markup_mode="rich",
    no_args_is_help=False,
    pretty_exceptions_show_locals=False,
    pretty_exceptions_enable=False,
)


def version_callback(value: bool):
    """显示版本号"""
    if value:
        console.print(f"[title]rotkit[/] version [number]{__version__}[/]")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="显示版本号",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        help="详细输出（打印 kneading 诊断）",
    ),
    quiet: bool = typer.Option(
        False,
        "--quiet",
        "-q",
        help="静默模式（只输出数据产物）",
    ),
):
    """
    rotkit - 八字形映射族旋转集的精确计算工具

    使用 [bold cyan]rotkit COMMAND --help[/] 查看具体命令的帮助信息。
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet

    if ctx.invoked_subcommand is None:
        _print_usage()


def _print_usage():
    """打印使用说明"""
    from rich.table import Table

    table = Table(show_header=False, show_edge=False, padding=(0, 1), box=None)
    table.add_column("category", style="title", width=16)
    table.add_column("commands", style="text")

    table.add_row(
        "[bold green]旋转集[/]",
        "rotset     计算 ρ(t) 的内外逼近多边形\n"
        "scan       参数扫描与平台检测\n"
        "refine     固定 t 逐阶细化内外逼近",
    )
    table.add_row(
        "[bold green]符号动力学[/]",
        "knead      kneading 序列 K(a(t))\n"
        "infimax    有理频率的 infimax 序列\n"
        "orbit      f_t 轨道与位移余链",
    )
    table.add_row(
        "[bold green]偏差实验[/]",
        "deviation  代换不动点的频率偏差\n"
        "goober     Sturmian 代换的有界偏差",
    )
    table.add_row("[bold green]配置[/]", "config     init / show")

    console.print(table)
    console.print()
    console.print("[bold cyan]示例:[/]")
    console.print("  $ rotkit rotset --t 3/4 --format svg -o quad.svg")
    console.print("  $ rotkit scan --from 0 --to 1 --steps 256 --depth 8 -o plateaus.csv")


# 注册子命令
from .commands.config import app as config_app  # noqa: E402
from .commands.deviation import deviation as deviation_cmd  # noqa: E402
from .commands.goober import goober as goober_cmd  # noqa: E402
from .commands.infimax import infimax as infimax_cmd  # noqa: E402
from .commands.knead import knead as knead_cmd  # noqa: E402
from .commands.orbit import orbit as orbit_cmd  # noqa: E402
from .commands.refine import refine as refine_cmd  # noqa: E402
from .commands.rotset import rotset as rotset_cmd  # noqa: E402
from .commands.scan import scan as scan_cmd  # noqa: E402

app.command(name="rotset")(rotset_cmd)
app.command(name="scan")(scan_cmd)
app.command(name="refine")(refine_cmd)
app.command(name="knead")(knead_cmd)
app.command(name="infimax")(infimax_cmd)
app.command(name="deviation")(deviation_cmd)
app.command(name="goober")(goober_cmd)
app.command(name="orbit")(orbit_cmd)
app.add_typer(config_app, name="config")


def run():
    """运行 CLI"""
    app()
