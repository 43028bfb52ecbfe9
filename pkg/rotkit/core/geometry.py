"""精确有理几何 - 凸包、有理多边形与 Hausdorff 距离

所有坐标均为 Fraction。距离采用图册坐标下的上确界范数 (ℓ∞)，
因此点到线段、多边形之间的距离都是精确有理数。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import PolygonError

Point = Tuple[Fraction, Fraction]

CHARTS = ("delta", "pi")


def as_point(p: Sequence) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """(a − o) × (b − o)"""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dot(d: Point, p: Point) -> Fraction:
    return d[0] * p[0] + d[1] * p[1]


def convex_hull(points: Iterable[Sequence]) -> List[Point]:
    """
    单调链凸包，逆时针，去除共线点

    退化情形：单点返回 [p]，共线点集返回两个端点。
    """
    pts = sorted({as_point(p) for p in points})
    if len(pts) <= 2:
        return pts

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


# ==================== 数据模型 ====================

@dataclass(frozen=True)
class RatPolygon:
    """顶点为精确有理数的凸多边形

    Attributes:
        vertices: 逆时针顶点（规范起点为字典序最小的顶点）
        chart: "delta"（Δ 的 (α₀, α₂) 图册）或 "pi"（Π 之后的 ℝ²）

    允许退化为单点或线段。
    """

    vertices: Tuple[Point, ...]
    chart: str = "delta"

    def __post_init__(self):
        if self.chart not in CHARTS:
            raise PolygonError(f"未知图册: {self.chart}")
        verts = tuple(as_point(v) for v in self.vertices)
        if not verts:
            raise PolygonError("多边形顶点不能为空")
        if len(set(verts)) != len(verts):
            raise PolygonError("多边形顶点重复")
        if len(verts) >= 3:
            n = len(verts)
            for i in range(n):
                if cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) <= 0:
                    raise PolygonError("顶点序列不是严格凸的逆时针序列")
        start = verts.index(min(verts))
        object.__setattr__(self, "vertices", verts[start:] + verts[:start])

    @classmethod
    def hull(cls, points: Iterable[Sequence], chart: str = "delta") -> "RatPolygon":
        """由点集的凸包构造"""
        return cls(tuple(convex_hull(points)), chart)

    @property
    def edges(self) -> List[Tuple[Point, Point]]:
        n = len(self.vertices)
        if n == 1:
            return []
        if n == 2:
            return [(self.vertices[0], self.vertices[1])]
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @property
    def area(self) -> Fraction:
        n = len(self.vertices)
        if n < 3:
            return Fraction(0)
        total = sum(
            (self.vertices[i][0] * self.vertices[(i + 1) % n][1]
             - self.vertices[(i + 1) % n][0] * self.vertices[i][1])
            for i in range(n)
        )
        return Fraction(total) / 2

    def contains_point(self, p: Sequence) -> bool:
        """闭集意义下的点包含（边界计入）"""
        q = as_point(p)
        verts = self.vertices
        if len(verts) == 1:
            return q == verts[0]
        if len(verts) == 2:
            a, b = verts
            if cross(a, b, q) != 0:
                return False
            return (min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]))
        return all(cross(a, b, q) >= 0 for a, b in self.edges)

    def contains(self, other: "RatPolygon") -> bool:
        """other ⊆ self"""
        _check_chart(self, other)
        return all(self.contains_point(v) for v in other.vertices)

    def map(self, fn, chart: str) -> "RatPolygon":
        """对顶点施加映射后取凸包（适用于保持凸性的射影映射）"""
        return RatPolygon.hull([fn(v) for v in self.vertices], chart)


def _check_chart(p: RatPolygon, q: RatPolygon) -> None:
    if p.chart != q.chart:
        raise PolygonError(f"图册不一致: {p.chart} vs {q.chart}")


# ==================== 距离 ====================

def linf(p: Point, q: Point) -> Fraction:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def point_segment_distance(p: Point, a: Point, b: Point) -> Fraction:
    """
    ℓ∞ 范数下点到线段的距离

    f(s) = max(|u − s·dx|, |v − s·dy|) 在 [0,1] 上分段线性且凸，
    最小值在端点或折点处取得。
    """
    u, v = p[0] - a[0], p[1] - a[1]
    dx, dy = b[0] - a[0], b[1] - a[1]
    candidates = {Fraction(0), Fraction(1)}
    if dx != 0:
        candidates.add(u / dx)
    if dy != 0:
        candidates.add(v / dy)
    for sign in (1, -1):
        den = dx - sign * dy
        if den != 0:
            candidates.add((u - sign * v) / den)
    return min(
        max(abs(u - s * dx), abs(v - s * dy))
        for s in candidates
        if 0 <= s <= 1
    )


def point_polygon_distance(p: Sequence, poly: RatPolygon) -> Fraction:
    q = as_point(p)
    if poly.contains_point(q):
        return Fraction(0)
    if len(poly.vertices) == 1:
        return linf(q, poly.vertices[0])
    return min(point_segment_distance(q, a, b) for a, b in poly.edges)


def hausdorff(p: RatPolygon, q: RatPolygon) -> Fraction:
    """
    两个凸多边形之间的 Hausdorff 距离（ℓ∞ 图册度量）

    到凸集的距离是凸函数，最大值在顶点处取得。
    """
    _check_chart(p, q)
    forward = max(point_polygon_distance(v, q) for v in p.vertices)
    backward = max(point_polygon_distance(v, p) for v in q.vertices)
    return max(forward, backward)
