"""跨平台工具"""

import os
import sys
from functools import lru_cache
from pathlib import Path


def is_windows() -> bool:
    """检查是否为 Windows 系统"""
    return sys.platform == "win32"


@lru_cache(maxsize=1)
def get_app_config_dir() -> Path:
    """
    获取应用程序配置目录

    - Windows: %APPDATA%\\rotkit
    - macOS/Linux: ~/.rotkit
    """
    if is_windows():
        appdata = os.environ.get("APPDATA")
        if appdata:
            return Path(appdata) / "rotkit"
        return Path.home() / "AppData" / "Roaming" / "rotkit"
    return Path.home() / ".rotkit"


def setup_windows_console():
    """
    设置 Windows 控制台以支持 ANSI 颜色和 UTF-8

    多边形标签与序列记号含非 ASCII 字符，需要 UTF-8 代码页。
    """
    if not is_windows():
        return

    try:
        import ctypes

        kernel32 = ctypes.windll.kernel32
        for handle_id in (-11, -12):
            handle = kernel32.GetStdHandle(handle_id)
            if handle == -1:
                continue
            mode = ctypes.c_ulong()
            if kernel32.GetConsoleMode(handle, ctypes.byref(mode)):
                kernel32.SetConsoleMode(handle, mode.value | 0x0004)

        kernel32.SetConsoleOutputCP(65001)
        kernel32.SetConsoleCP(65001)
    except Exception:
        # 静默失败，Rich 有后备方案
        pass
