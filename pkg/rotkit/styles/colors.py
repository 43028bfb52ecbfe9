"""颜色和主题系统"""

from typing import Dict

from rich.theme import Theme

# ============================================================================
# 主色调定义
# ============================================================================

PRIMARY = "#3B82F6"
PRIMARY_LIGHT = "#60A5FA"

SUCCESS = "#10B981"
WARNING = "#F59E0B"
ERROR = "#EF4444"
INFO = "#06B6D4"

TEXT = "#E5E7EB"
TEXT_MUTED = "#9CA3AF"
BORDER = "#374151"

CODE = "#F472B6"
PATH = "#34D399"
NUMBER = "#FBBF24"


# ============================================================================
# Rich 主题定义
# ============================================================================

def _theme_styles(primary: str, success: str, warning: str, error: str, info: str) -> Dict[str, str]:
    return {
        "info": f"bold {info}",
        "warning": f"bold {warning}",
        "error": f"bold {error}",
        "success": f"bold {success}",
        "text": TEXT,
        "title": f"bold {primary}",
        "subtitle": PRIMARY_LIGHT,
        "emphasis": f"italic {TEXT_MUTED}",
        "command": f"bold {CODE}",
        "path": PATH,
        "number": NUMBER,
        "word": f"bold {CODE}",
        "rational": NUMBER,
        "status.closed": f"bold {success}",
        "status.open": f"bold {warning}",
        "progress.description": TEXT,
        "progress.percentage": f"bold {primary}",
        "progress.bar.complete": success,
        "progress.bar.incomplete": BORDER,
        "table.header": f"bold {primary}",
        "table.border": BORDER,
    }


ROTKIT_THEME = Theme(_theme_styles(PRIMARY, SUCCESS, WARNING, ERROR, INFO))


# ============================================================================
# 图标定义
# ============================================================================

class Icons:
    SUCCESS = "✓"
    ERROR = "✗"
    WARNING = "⚠"
    INFO = "ℹ"
    RUNNING = "◐"

    POLYGON = "⬠"
    SCAN = "⇢"

    DOT = "•"


def load_theme_from_config(config_colors: Dict[str, str]) -> Theme:
    """
    从配置文件加载自定义颜色主题

    Args:
        config_colors: 配置文件中的 ui.colors 字典

    Returns:
        Rich Theme 对象
    """
    return Theme(_theme_styles(
        config_colors.get("primary", PRIMARY),
        config_colors.get("success", SUCCESS),
        config_colors.get("warning", WARNING),
        config_colors.get("error", ERROR),
        config_colors.get("info", INFO),
    ))


def get_theme(use_config: bool = True) -> Theme:
    """获取当前主题（配置中有 ui.colors 时使用自定义颜色）"""
    if use_config:
        try:
            from ..utils.config import load_config
            config_colors = load_config().get("ui", {}).get("colors", {})
            if config_colors:
                return load_theme_from_config(config_colors)
        except Exception:
            pass

    return ROTKIT_THEME
