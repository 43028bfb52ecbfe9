"""控制台输出工具"""

from typing import List, Optional

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskID, TextColumn, TimeElapsedColumn
from rich.table import Table

from ..styles.colors import BORDER, Icons, get_theme
from .platform import setup_windows_console

setup_windows_console()

# 全局控制台实例（人类可读信息走 stderr，数据产物走 stdout）
console = Console(theme=get_theme(), stderr=True)


def print_success(message: str):
    """打印成功消息"""
    console.print(f"{Icons.SUCCESS} {message}", style="success")


def print_error(message: str):
    """打印错误消息"""
    console.print(f"{Icons.ERROR} {message}", style="error")


def print_warning(message: str):
    """打印警告消息"""
    console.print(f"{Icons.WARNING} {message}", style="warning")


def print_info(message: str):
    """打印信息消息"""
    console.print(f"{Icons.INFO} {message}", style="info")


def print_structured_error(
    title: str,
    error_message: str,
    causes: Optional[List[str]] = None,
    suggestions: Optional[List[str]] = None,
):
    """打印结构化错误信息，包含原因和建议

    Args:
        title: 错误标题
        error_message: 错误消息
        causes: 可能的原因列表
        suggestions: 建议操作列表
    """
    console.print(f"{Icons.ERROR} {title}", style="error")
    console.print(f"  {error_message}")

    if causes:
        console.print()
        console.print("可能的原因:", style="emphasis")
        for cause in causes:
            console.print(f"  {Icons.DOT} {cause}")

    if suggestions:
        console.print()
        console.print("建议操作:", style="emphasis")
        for i, suggestion in enumerate(suggestions, 1):
            console.print(f"  {i}. {suggestion}")

    console.print()


class LiveProgress:
    """实时进度显示（单行更新）

    示例:
        with LiveProgress("扫描参数", total=len(grid)) as progress:
            for t in grid:
                progress.update(advance=1, detail=f"t = {t}")
    """

    def __init__(self, description: str = "计算中", total: int = 100, show_bar: bool = True):
        self.description = description
        self.total = total
        self.show_bar = show_bar
        self.progress: Optional[Progress] = None
        self.task_id: Optional[TaskID] = None

    def __enter__(self):
        columns = [SpinnerColumn(style="info"), TextColumn("[progress.description]{task.description}")]
        if self.show_bar:
            columns.append(BarColumn(
                complete_style="progress.bar.complete",
                finished_style="success",
                bar_width=40,
            ))
        columns.append(TextColumn("[progress.percentage]{task.percentage:>3.0f}%"))
        columns.append(TimeElapsedColumn())

        self.progress = Progress(*columns, console=console, refresh_per_second=10, transient=True)
        self.progress.start()
        self.task_id = self.progress.add_task(f"{Icons.RUNNING} {self.description}", total=self.total)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.progress:
            try:
                if self.task_id is not None and exc_type is None:
                    self.progress.update(self.task_id, completed=self.total)
                self.progress.stop()
            except Exception:
                pass

    def update(self, advance: int = 1, detail: Optional[str] = None):
        """更新进度

        Args:
            advance: 增加的进度数
            detail: 详情描述
        """
        if self.progress is None or self.task_id is None:
            return
        if detail is not None:
            self.progress.update(
                self.task_id,
                advance=advance,
                description=f"{Icons.RUNNING} {self.description} - {detail}",
            )
        else:
            self.progress.update(self.task_id, advance=advance)


def print_table(
    title: str,
    columns: List[str],
    rows: List[List[str]],
    column_styles: Optional[List[str]] = None,
):
    """打印通用表格"""
    table = Table(
        title=title,
        title_style="title",
        border_style=BORDER,
        show_header=True,
        header_style="table.header",
    )
    for i, col in enumerate(columns):
        style = column_styles[i] if column_styles and i < len(column_styles) else None
        table.add_column(col, style=style)
    for row in rows:
        table.add_row(*row)
    console.print(table)
