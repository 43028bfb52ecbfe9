"""配置管理 - 从配置文件加载所有可配置项"""

import os
import sys
from functools import lru_cache
from typing import Any, Dict

import yaml

from .platform import get_app_config_dir

# 配置文件路径 (跨平台兼容)
CONFIG_DIR = get_app_config_dir()
CONFIG_FILE = CONFIG_DIR / "config.yaml"

THREADS_ENV = "ROTKIT_THREADS"


@lru_cache(maxsize=1)
def load_config() -> Dict[str, Any]:
    """
    加载配置文件

    优先级:
    1. 用户配置 (~/.rotkit/config.yaml)
    2. 默认配置 (内置)

    Returns:
        配置字典
    """
    config = _get_default_config()

    if CONFIG_FILE.exists():
        try:
            with open(CONFIG_FILE, "r", encoding="utf-8") as f:
                user_config = yaml.safe_load(f) or {}
            config = _deep_merge(config, user_config)
        except Exception as e:
            print(f"警告: 加载配置文件失败: {e}", file=sys.stderr)

    return _expand_env_vars(config)


def _get_default_config() -> Dict[str, Any]:
    """获取默认配置"""
    return {
        "defaults": {
            "depth": 12,
            "max_period": 12,
            "format": "json",
        },
        "polytope": {
            "outer_model": "beta",  # beta | window
        },
        "infimax": {
            "oracle_bound": 12,
            "primitive_power": 6,
        },
        "deviation": {
            "skip_points": 2,
        },
        "pipeline": {
            "threads": 1,
        },
        "render": {
            "bounds": [-0.05, 1.05, -0.05, 0.6],
            "width": 800,
            "height": 480,
            "outer_stroke": "#1D4ED8",
            "inner_stroke": "#F97316",
            "label_size": 11,
        },
    }


def _deep_merge(base: Dict, override: Dict) -> Dict:
    """深度合并两个字典"""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def _expand_env_vars(config: Any) -> Any:
    """递归展开环境变量引用 (${VAR_NAME})"""
    if isinstance(config, dict):
        return {k: _expand_env_vars(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [_expand_env_vars(item) for item in config]
    elif isinstance(config, str) and config.startswith("${") and config.endswith("}"):
        return os.getenv(config[2:-1], "")
    return config


def get_config_value(key_path: str, default: Any = None) -> Any:
    """
    获取配置值

    Args:
        key_path: 配置路径，如 "render.width"
        default: 默认值

    Returns:
        配置值
    """
    value = load_config()
    for key in key_path.split("."):
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            return default
    return value


def get_worker_count() -> int:
    """
    扫描使用的进程数

    ROTKIT_THREADS 为正整数时优先，否则取 pipeline.threads；无效值被忽略。
    """
    env = os.getenv(THREADS_ENV, "").strip()
    if env.isdigit() and int(env) > 0:
        return int(env)
    value = get_config_value("pipeline.threads", 1)
    try:
        return max(1, int(value))
    except (TypeError, ValueError):
        return 1


def init_config() -> bool:
    """
    初始化配置文件（如果不存在）

    Returns:
        是否新建了配置文件
    """
    CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
    if CONFIG_FILE.exists():
        return False
    with open(CONFIG_FILE, "w", encoding="utf-8") as f:
        yaml.safe_dump(_get_default_config(), f, allow_unicode=True, default_flow_style=False)
    return True


def reload_config() -> Dict[str, Any]:
    """重新加载配置（清除缓存）"""
    load_config.cache_clear()
    return load_config()
