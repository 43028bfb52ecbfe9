"""旋转集多边形的 SVG 渲染

使用 matplotlib 的 SVG 后端。固定 hashsalt 并去掉日期与生成器元数据，
相同输入得到逐字节相同的文本。外逼近为实线，内逼近为虚线，顶点标注精确有理坐标。
"""

import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .errors import PolygonError  # noqa: E402
from .geometry import Point, RatPolygon  # noqa: E402

DPI = 100

SVG_RC = {
    "svg.hashsalt": "rotkit",
    "svg.fonttype": "none",
}


@dataclass(frozen=True)
class RenderSpec:
    """画布与样式（宽高以像素计，按 DPI 换算成英寸）"""

    bounds: Tuple[float, float, float, float] = (-0.05, 1.05, -0.05, 0.6)
    width: int = 800
    height: int = 480
    outer_stroke: str = "#1D4ED8"
    inner_stroke: str = "#F97316"
    label_size: int = 11

    def __post_init__(self):
        xmin, xmax, ymin, ymax = (float(b) for b in self.bounds)
        if not (xmin < xmax and ymin < ymax):
            raise PolygonError(f"渲染范围退化: {self.bounds}")
        if self.width <= 0 or self.height <= 0:
            raise PolygonError(f"画布尺寸必须为正: {self.width}x{self.height}")
        object.__setattr__(self, "bounds", (xmin, xmax, ymin, ymax))

    @classmethod
    def from_config(cls, section: Optional[dict]) -> "RenderSpec":
        """由配置 render 段构造，缺失项取默认值"""
        section = section or {}
        defaults = cls()
        return cls(
            bounds=tuple(section.get("bounds", defaults.bounds)),  # type: ignore[arg-type]
            width=int(section.get("width", defaults.width)),
            height=int(section.get("height", defaults.height)),
            outer_stroke=str(section.get("outer_stroke", defaults.outer_stroke)),
            inner_stroke=str(section.get("inner_stroke", defaults.inner_stroke)),
            label_size=int(section.get("label_size", defaults.label_size)),
        )

    @property
    def figsize(self) -> Tuple[float, float]:
        return self.width / DPI, self.height / DPI


def _label(p: Point) -> str:
    return f"({Fraction(p[0])}, {Fraction(p[1])})"


def _draw(ax, poly: RatPolygon, color: str, gid: str, dashed: bool):
    xs = [float(x) for x, _ in poly.vertices]
    ys = [float(y) for _, y in poly.vertices]
    linestyle = "--" if dashed else "-"
    if len(poly.vertices) == 1:
        (artist,) = ax.plot(xs, ys, marker="o", color=color, linestyle="none")
    elif len(poly.vertices) == 2:
        (artist,) = ax.plot(xs, ys, color=color, linewidth=2, linestyle=linestyle)
    else:
        artist = Polygon(
            list(zip(xs, ys)),
            closed=True,
            fill=False,
            edgecolor=color,
            linewidth=2,
            linestyle=linestyle,
        )
        ax.add_patch(artist)
    artist.set_gid(gid)


def render_svg(
    outer: RatPolygon,
    inner: Optional[RatPolygon] = None,
    spec: Optional[RenderSpec] = None,
    title: str = "",
) -> str:
    """
    渲染外逼近（实线）与内逼近（虚线）

    Args:
        outer: 外逼近多边形
        inner: 内逼近多边形（可选，与外逼近相同时只画一次实线）
        spec: 画布设置
        title: 标题

    Returns:
        SVG 文本
    """
    spec = spec or RenderSpec()
    xmin, xmax, ymin, ymax = spec.bounds

    with matplotlib.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=spec.figsize, dpi=DPI)
        try:
            ax.set_xlim(xmin, xmax)
            ax.set_ylim(ymin, ymax)
            ax.axhline(0, color="#9CA3AF", linewidth=1)
            ax.axvline(0, color="#9CA3AF", linewidth=1)

            _draw(ax, outer, spec.outer_stroke, "outer", dashed=False)
            if inner is not None and inner != outer:
                _draw(ax, inner, spec.inner_stroke, "inner", dashed=True)

            labelled = list(outer.vertices)
            if inner is not None:
                labelled += [v for v in inner.vertices if v not in outer.vertices]
            for v in labelled:
                ax.annotate(
                    _label(v),
                    (float(v[0]), float(v[1])),
                    xytext=(4, 4),
                    textcoords="offset points",
                    fontsize=spec.label_size,
                    family="monospace",
                )

            if title:
                ax.set_title(title, fontsize=spec.label_size + 2)

            buffer = io.BytesIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None, "Creator": None})
        finally:
            plt.close(fig)

    return buffer.getvalue().decode("utf-8")
