"""产物写出工具

所有产物以 UTF-8、"\n" 换行写出，内容只由参数决定。
"""

import csv
import io
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from pydantic import BaseModel


def ensure_dir(path: Union[str, Path]) -> Path:
    """
    确保目录存在，不存在则创建

    Args:
        path: 目录路径

    Returns:
        目录路径
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def to_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """生成 CSV 文本（逗号分隔，\n 换行）"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(c) for c in row])
    return buffer.getvalue()


def to_json(model: BaseModel) -> str:
    """pydantic 模型序列化为缩进 JSON"""
    return model.model_dump_json(indent=2) + "\n"


def write_output(content: str, output: Optional[Path]) -> Optional[Path]:
    """
    写出产物

    Args:
        content: 文本内容
        output: 输出路径；为 None 时原样写到 stdout

    Returns:
        实际写入的路径（stdout 时为 None）
    """
    if output is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return None
    output = Path(output)
    ensure_dir(output.parent)
    with open(output, "w", encoding="utf-8", newline="") as f:
        f.write(content)
    return output
