"""Pytest 配置和共享 fixtures"""

from fractions import Fraction

import pytest
from typer.testing import CliRunner

from rotkit.core.geometry import RatPolygon
from rotkit.core.words import DigitWord
from rotkit.utils import config as config_module


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """每个测试使用独立的配置文件路径，避免读到用户目录"""
    config_file = tmp_path / "rotkit_home" / "config.yaml"
    monkeypatch.setattr(config_module, "CONFIG_FILE", config_file)
    monkeypatch.delenv(config_module.THREADS_ENV, raising=False)
    config_module.load_config.cache_clear()
    yield config_file
    config_module.load_config.cache_clear()


@pytest.fixture
def runner() -> CliRunner:
    """CLI 测试运行器"""
    return CliRunner()


@pytest.fixture
def w_two() -> DigitWord:
    """K(1) = (2)"""
    return DigitWord.parse("(2)")


@pytest.fixture
def w_two_one() -> DigitWord:
    """K(0) = 2(1)"""
    return DigitWord.parse("2(1)")


@pytest.fixture
def w_quad() -> DigitWord:
    """K(3/4) = (2220)"""
    return DigitWord.parse("(2220)")


@pytest.fixture
def quad_pi() -> RatPolygon:
    """t = 3/4 时的旋转集"""
    return RatPolygon.hull(
        [(0, 0), (Fraction(2, 3), 0), (Fraction(3, 5), Fraction(1, 5)), (0, Fraction(1, 2))],
        "pi",
    )


@pytest.fixture
def triangle_pi() -> RatPolygon:
    """t = 1 时的旋转集"""
    return RatPolygon.hull([(0, 0), (1, 0), (0, Fraction(1, 2))], "pi")
