"""配置管理测试"""

import yaml

from rotkit.utils import config as config_module
from rotkit.utils.config import (
    get_config_value,
    get_worker_count,
    init_config,
    load_config,
    reload_config,
)


def test_defaults():
    """测试内置默认值"""
    assert get_config_value("defaults.depth") == 12
    assert get_config_value("polytope.outer_model") == "beta"
    assert get_config_value("render.width") == 800
    assert get_config_value("missing.key", "fallback") == "fallback"


def test_init_config(isolated_config):
    """测试初始化配置文件"""
    assert init_config() is True
    assert isolated_config.exists()
    assert init_config() is False

    data = yaml.safe_load(isolated_config.read_text(encoding="utf-8"))
    assert data["infimax"]["oracle_bound"] == 12


def test_user_override(isolated_config):
    """测试用户配置深度合并"""
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("defaults:\n  depth: 8\n", encoding="utf-8")
    config = reload_config()

    assert config["defaults"]["depth"] == 8
    assert config["defaults"]["max_period"] == 12


def test_env_expansion(isolated_config, monkeypatch):
    """测试 ${VAR} 展开"""
    monkeypatch.setenv("ROTKIT_TEST_STROKE", "#000000")
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("render:\n  outer_stroke: ${ROTKIT_TEST_STROKE}\n", encoding="utf-8")
    reload_config()

    assert get_config_value("render.outer_stroke") == "#000000"


def test_broken_file(isolated_config, capsys):
    """配置文件损坏时回退到默认值"""
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("defaults: [unclosed\n", encoding="utf-8")
    config = load_config()

    assert config["defaults"]["depth"] == 12
    assert "警告" in capsys.readouterr().err


def test_worker_count(isolated_config, monkeypatch):
    """测试进程数：环境变量优先，无效值忽略"""
    assert get_worker_count() == 1

    monkeypatch.setenv(config_module.THREADS_ENV, "4")
    assert get_worker_count() == 4

    monkeypatch.setenv(config_module.THREADS_ENV, "zero")
    assert get_worker_count() == 1

    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text("pipeline:\n  threads: 3\n", encoding="utf-8")
    reload_config()
    monkeypatch.setenv(config_module.THREADS_ENV, "0")
    assert get_worker_count() == 3
