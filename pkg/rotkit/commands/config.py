"""配置管理命令"""

import typer
import yaml

from ..utils import config as config_module
from ..utils.console import console, print_info, print_success

app = typer.Typer(help="查看或初始化配置")


@app.command("init")
def init():
    """
    在配置目录写入默认配置文件（已存在时不覆盖）

    示例:
        rotkit config init
    """
    if config_module.init_config():
        print_success(f"已创建配置文件: [path]{config_module.CONFIG_FILE}[/]")
    else:
        print_info(f"配置文件已存在: [path]{config_module.CONFIG_FILE}[/]")


@app.command("show")
def show():
    """
    打印合并后的配置

    示例:
        rotkit config show
    """
    merged = config_module.reload_config()
    typer.echo(yaml.safe_dump(merged, allow_unicode=True, default_flow_style=False, sort_keys=True), nl=False)
    console.print(f"[emphasis]来源: {config_module.CONFIG_FILE}[/]")
