"""工具函数测试"""

from pathlib import Path

from rotkit.schemas import KneadingModel
from rotkit.utils.file_utils import ensure_dir, to_csv, to_json, write_output


def test_to_csv():
    """测试 CSV 生成"""
    content = to_csv(("t", "closed"), [("3/4", "true"), (1, False)])
    assert content == "t,closed\n3/4,true\n1,False\n"


def test_to_json():
    """测试 JSON 序列化"""
    model = KneadingModel(t="3/4", theta="2220(2)", kneading="(2220)", exact=True, depth=32)
    content = to_json(model)
    assert content.endswith("}\n")
    assert '"kneading": "(2220)"' in content


def test_ensure_dir(tmp_path: Path):
    """测试目录创建"""
    target = tmp_path / "a" / "b"
    assert ensure_dir(target) == target
    assert target.is_dir()


def test_write_output_file(tmp_path: Path):
    """测试写入文件"""
    output = tmp_path / "out" / "plateaus.csv"
    written = write_output("t\n0\n", output)

    assert written == output
    assert output.read_bytes() == b"t\n0\n"


def test_write_output_stdout(capsys):
    """测试写到标准输出"""
    assert write_output("(2220)\n", None) is None
    assert capsys.readouterr().out == "(2220)\n"
