"""CLI 命令测试"""

import json
from pathlib import Path

import pytest

from rotkit.cli import app
from rotkit.schemas import RotsetReportModel


def test_usage(runner):
    """测试无子命令时打印用法"""
    result = runner.invoke(app, [])

    assert result.exit_code == 0
    assert "rotset" in result.output


def test_version(runner):
    """测试 --version"""
    result = runner.invoke(app, ["--version"])

    assert result.exit_code == 0
    assert "rotkit" in result.output


class TestRotset:
    """rotset 命令"""

    def test_json(self, runner, tmp_path: Path):
        output = tmp_path / "quad.json"
        result = runner.invoke(app, ["-q", "rotset", "--t", "3/4", "-n", "8", "-p", "8", "-o", str(output)])

        assert result.exit_code == 0
        report = RotsetReportModel.model_validate_json(output.read_text(encoding="utf-8"))
        assert report.closed
        assert report.classification == "RationalRegular"
        assert report.kneading.kneading == "(2220)"
        assert report.outer.vertices == [["0", "0"], ["2/3", "0"], ["3/5", "1/5"], ["0", "1/2"]]

    def test_svg(self, runner, tmp_path: Path):
        output = tmp_path / "triangle.svg"
        result = runner.invoke(app, ["-q", "rotset", "--t", "1", "-n", "4", "--format", "svg", "-o", str(output)])

        assert result.exit_code == 0
        svg = output.read_text(encoding="utf-8")
        assert svg.startswith("<?xml")
        assert "(0, 1/2)" in svg

    def test_csv_stdout(self, runner):
        result = runner.invoke(app, ["-q", "rotset", "--t", "0", "-n", "6", "-f", "csv"])

        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "polygon,index,x,y"
        assert lines[1] == "outer,0,0,0"
        assert "inner,1,1/3,1/3" in lines

    def test_open_approximation(self, runner):
        result = runner.invoke(app, ["-q", "rotset", "--t", "3/4", "-n", "2", "-p", "4"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["kneading"]["exact"] is False

    @pytest.mark.parametrize(
        "args",
        [
            ["--t", "2"],
            ["--t", "abc"],
            ["--t", "1/2", "-n", "1"],
            ["--t", "1/2", "--format", "pdf"],
            ["--t", "1/2", "--model", "other"],
        ],
    )
    def test_usage_errors(self, runner, args):
        result = runner.invoke(app, ["rotset", *args])
        assert result.exit_code == 2

    def test_window_model_low_depth(self, runner):
        """--depth 2 配合 window 模型不会把阶数降到 2 以下"""
        result = runner.invoke(app, ["-q", "rotset", "--t", "3/4", "-n", "2", "--model", "window"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["order"] == 2

    def test_config_defaults(self, runner, isolated_config):
        """未给出 --format 时取配置 defaults.format"""
        isolated_config.parent.mkdir(parents=True)
        isolated_config.write_text("defaults:\n  format: csv\n  depth: 6\n", encoding="utf-8")

        result = runner.invoke(app, ["-q", "rotset", "--t", "1"])

        assert result.exit_code == 0
        assert result.stdout.startswith("polygon,index,x,y\n")

    def test_byte_identical(self, runner, tmp_path: Path):
        """相同参数两次运行的产物逐字节相同"""
        outputs = []
        for name in ("a.json", "b.json"):
            path = tmp_path / name
            runner.invoke(app, ["-q", "rotset", "--t", "1/2", "-n", "6", "-o", str(path)])
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]


class TestScan:
    """scan 命令"""

    def test_endpoints(self, runner, tmp_path: Path):
        output = tmp_path / "plateaus.csv"
        result = runner.invoke(
            app, ["-q", "scan", "--from", "0", "--to", "1", "--steps", "2", "-n", "6", "-o", str(output)]
        )

        assert result.exit_code == 0
        assert output.read_text(encoding="utf-8") == (
            "t,plateau_id,n_vertices,closed\n0,0,3,true\n1,1,3,true\n"
        )

    def test_single_point(self, runner):
        result = runner.invoke(app, ["-q", "scan", "--from", "3/4", "--to", "3/4", "--steps", "2", "-n", "8"])

        assert result.exit_code == 0
        rows = result.stdout.splitlines()[1:]
        assert rows == ["3/4,0,4,true", "3/4,0,4,true"]

    def test_json_summary(self, runner, tmp_path: Path):
        output = tmp_path / "plateaus.json"
        result = runner.invoke(
            app, ["-q", "scan", "--from", "0", "--to", "1", "--steps", "2", "-n", "6", "--json", "-o", str(output)]
        )

        assert result.exit_code == 0
        data = json.loads(output.read_text(encoding="utf-8"))
        assert data["steps"] == 2
        assert data["order"] == 6
        assert [p["plateau_id"] for p in data["plateaus"]] == [0, 1]
        assert data["plateaus"][1]["polygon"]["vertices"] == [["0", "0"], ["1", "0"], ["0", "1/2"]]

    def test_with_progress(self, runner):
        result = runner.invoke(app, ["scan", "--from", "1/2", "--to", "1", "-s", "3", "-n", "6"])

        assert result.exit_code == 0
        assert "t,plateau_id,n_vertices,closed" in result.output

    @pytest.mark.parametrize(
        "args",
        [
            ["--from", "1", "--to", "0"],
            ["--from", "0", "--to", "1", "--steps", "1"],
            ["--from", "0", "--to", "3/2"],
            ["--from", "0", "--to", "1", "--workers", "0"],
        ],
    )
    def test_usage_errors(self, runner, args):
        result = runner.invoke(app, ["scan", *args])
        assert result.exit_code == 2


class TestRefine:
    """refine 命令"""

    def test_closed_rows(self, runner):
        result = runner.invoke(app, ["-q", "refine", "--t", "3/4", "--orders", "8,10"])

        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "order,max_period,classification,outer_vertices,inner_vertices,gap",
            "8,8,RationalRegular,4,4,0",
            "10,10,RationalRegular,4,4,0",
        ]

    def test_word_parameter(self, runner, tmp_path: Path):
        output = tmp_path / "refine.csv"
        result = runner.invoke(
            app,
            ["-q", "refine", "--word", "(2220)", "-n", "8", "-p", "3", "-o", str(output)],
        )

        assert result.exit_code == 0
        row = output.read_text(encoding="utf-8").splitlines()[1].split(",")
        assert row[:3] == ["8", "3", "OpenIrrational(8)"]

    @pytest.mark.parametrize(
        "args",
        [
            ["--orders", "8"],
            ["--t", "3/4", "--word", "(2220)", "--orders", "8"],
            ["--t", "3/4", "--orders", "8,x"],
            ["--t", "3/4", "--orders", "8,10", "--max-periods", "8"],
            ["--t", "3/4", "--orders", "1"],
            ["--word", "(1)", "--orders", "8"],
        ],
    )
    def test_usage_errors(self, runner, args):
        result = runner.invoke(app, ["refine", *args])
        assert result.exit_code == 2


class TestKnead:
    """knead 命令"""

    def test_lower_end(self, runner):
        result = runner.invoke(app, ["-q", "knead", "--t", "0"])

        assert result.exit_code == 0
        assert result.stdout == "2(1)\n"

    def test_json(self, runner):
        result = runner.invoke(app, ["-q", "knead", "--t", "3/4", "--json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["theta"] == "2220(2)"
        assert data["kneading"] == "(2220)"

    def test_verbose_diagnostics(self, runner):
        result = runner.invoke(app, ["--verbose", "knead", "--t", "1/3"])

        assert result.exit_code == 0
        assert "回溯" in result.output

    def test_bad_length(self, runner):
        result = runner.invoke(app, ["knead", "--t", "0", "--len", "1"])
        assert result.exit_code == 2


class TestInfimax:
    """infimax 命令"""

    def test_value(self, runner):
        result = runner.invoke(app, ["-q", "infimax", "--alpha", "1/2,0,1/2"])

        assert result.exit_code == 0
        assert result.stdout == "(20)\n"

    def test_membership(self, runner):
        result = runner.invoke(app, ["-q", "infimax", "--alpha", "0,1/2,1/2", "--word", "2(1)"])

        assert result.exit_code == 0
        assert result.stdout == "(21)\nno\n"

    @pytest.mark.parametrize("alpha", ["1/2,1/2", "1/2,1/2,0", "1/13,0,12/13"])
    def test_usage_errors(self, runner, alpha):
        result = runner.invoke(app, ["infimax", "--alpha", alpha])
        assert result.exit_code == 2


class TestDeviation:
    """deviation 与 goober 命令"""

    def test_lambda_family(self, runner, tmp_path: Path):
        output = tmp_path / "dev.csv"
        result = runner.invoke(app, ["-q", "deviation", "--lambda-n", "1", "--len", "1000", "-o", str(output)])

        assert result.exit_code == 0
        lines = output.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "r,dev,max_dev"
        assert [line.split(",")[0] for line in lines[1:7]] == ["1", "2", "3", "6", "10", "19"]

    def test_explicit_substitution(self, runner):
        result = runner.invoke(app, ["deviation", "--subst", "0>1;1>200;2>20", "--len", "200"])

        assert result.exit_code == 0
        assert "ν" in result.output

    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["--subst", "0>1;1>200;2>20", "--lambda-n", "1"],
            ["--lambda-n", "1", "--seed", "0"],
            ["--subst", "0>0;1>1;2>2"],
        ],
    )
    def test_usage_errors(self, runner, args):
        result = runner.invoke(app, ["deviation", *args, "--len", "100"])
        assert result.exit_code == 2

    def test_goober(self, runner, tmp_path: Path):
        output = tmp_path / "goober.csv"
        result = runner.invoke(
            app,
            ["-q", "goober", "--w0", "(20)", "--w1", "(22)", "--lambda", "0.618",
             "--len", "100", "--every", "10", "-o", str(output)],
        )

        assert result.exit_code == 0
        lines = output.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 11
        assert lines[-1].startswith("100,")

    def test_goober_mismatch(self, runner):
        result = runner.invoke(app, ["goober", "--w0", "(20)", "--w1", "(221)", "--lambda", "0.5"])
        assert result.exit_code == 2


class TestOrbit:
    """orbit 命令"""

    def test_rows(self, runner):
        result = runner.invoke(app, ["-q", "orbit", "--t", "3/4", "--x", "S1:4", "--steps", "3"])

        assert result.exit_code == 0
        assert result.stdout == (
            "step,circle,pos,gamma_x,gamma_y\n"
            "0,S1,4,1,0\n"
            "1,S1,29/8,1,0\n"
            "2,S1,25/8,1,0\n"
        )

    def test_bad_point(self, runner):
        result = runner.invoke(app, ["orbit", "--t", "3/4", "--x", "S3:1"])
        assert result.exit_code == 2


class TestConfig:
    """config 命令"""

    def test_init_and_show(self, runner, isolated_config):
        result = runner.invoke(app, ["config", "init"])
        assert result.exit_code == 0
        assert isolated_config.exists()

        result = runner.invoke(app, ["config", "show"])
        assert result.exit_code == 0
        assert "depth: 12" in result.output
        assert "outer_model: beta" in result.output
