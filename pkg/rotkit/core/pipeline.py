"""旋转集计算流水线

ρ(t) = Π(DF(K(a(t))))：kneading 串 → 数字频率多边形 → Π 图册。
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import FigureEightError, PolygonError, WordError
from .figure_eight import KneadingResult, kneading_parameter, kneading_prefix
from .geometry import Point, RatPolygon, as_point, hausdorff
from .polytope import df_approx
from .words import DigitWord, FreqVector

# ==================== Π 投影 ====================


def project_pi(alpha: FreqVector) -> Point:
    """Π(α₀,α₁,α₂) = (α₂/(1+α₀), α₀/(1+α₀))"""
    scale = 1 + alpha.a0
    return (alpha.a2 / scale, alpha.a0 / scale)


def pi_inverse(p: Sequence) -> FreqVector:
    """
    Π⁻¹(x,y) = (y/(1−y), (1−x−2y)/(1−y), x/(1−y))

    Raises:
        PolygonError: p ∉ Π(Δ)
    """
    x, y = as_point(p)
    if y >= 1:
        raise PolygonError(f"点 {x},{y} 不在 Π(Δ) 内")
    try:
        return FreqVector(y / (1 - y), (1 - x - 2 * y) / (1 - y), x / (1 - y))
    except WordError as e:
        raise PolygonError(f"点 ({x}, {y}) 不在 Π(Δ) 内") from e


def chart_to_pi(v: Point) -> Point:
    """Δ 图册 (α₀, α₂) 到 Π 图册"""
    return project_pi(FreqVector.from_chart(*v))


def hausdorff_pi(p: RatPolygon, q: RatPolygon) -> Fraction:
    """
    Π 图册中的 Hausdorff 距离

    Raises:
        PolygonError: 多边形不在 Π 图册
    """
    if p.chart != "pi" or q.chart != "pi":
        raise PolygonError("hausdorff_pi 只接受 Π 图册中的多边形")
    return hausdorff(p, q)


# ==================== 报告 ====================


@dataclass(frozen=True)
class Classification:
    """RationalRegular 或 OpenIrrational(depth)"""

    closed: bool
    depth: int

    def __str__(self) -> str:
        return "RationalRegular" if self.closed else f"OpenIrrational({self.depth})"


@dataclass
class RotsetReport:
    """单个参数 t 的旋转集报告（多边形均在 Π 图册）"""

    t: Fraction
    order: int
    max_period: int
    kneading: KneadingResult
    inner: RatPolygon
    outer: RatPolygon
    witnesses: Tuple[Tuple[DigitWord, FreqVector], ...]
    outer_cycles: Tuple[Tuple[DigitWord, FreqVector], ...] = ()
    diagnostics: List[str] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return self.inner == self.outer

    @property
    def classification(self) -> Classification:
        return Classification(self.closed, self.order)

    @property
    def gap(self) -> Fraction:
        return hausdorff_pi(self.inner, self.outer)

    @property
    def mode_locking_start(self) -> Optional[Fraction]:
        """kneading 串精确时，当前平台的左端点"""
        word = self.kneading.kneading
        if word.is_finite:
            return None
        try:
            return kneading_parameter(word)
        except FigureEightError:
            return None

    def to_dict(self) -> dict:
        start = self.mode_locking_start
        return {
            "t": str(self.t),
            "order": self.order,
            "max_period": self.max_period,
            "kneading": self.kneading.to_dict(),
            "classification": str(self.classification),
            "closed": self.closed,
            "gap": str(self.gap),
            "mode_locking_start": None if start is None else str(start),
            "inner": _polygon_dict(self.inner),
            "outer": _polygon_dict(self.outer),
            "witnesses": [_witness_dict(w, a) for w, a in self.witnesses],
            "outer_cycles": [_witness_dict(w, a) for w, a in self.outer_cycles],
            "diagnostics": list(self.diagnostics),
        }


def _polygon_dict(poly: RatPolygon) -> dict:
    return {
        "chart": poly.chart,
        "vertices": [[str(x), str(y)] for x, y in poly.vertices],
    }


def _witness_dict(word: DigitWord, alpha: FreqVector) -> dict:
    x, y = project_pi(alpha)
    return {
        "word": str(word),
        "freq": [str(c) for c in alpha.as_tuple()],
        "point": [str(x), str(y)],
    }


def rotation_set(t: Fraction, n: int, max_period: int, model: str = "beta") -> RotsetReport:
    """
    计算 ρ(t) 的 n 阶内外逼近

    Raises:
        FigureEightError: t ∉ [0,1] 或深度过小
        CertificationError: inner ⊄ outer
    """
    knead = kneading_prefix(Fraction(t), n)
    approx = df_approx(knead.kneading, n, max_period, model)
    report = RotsetReport(
        t=knead.t,
        order=approx.order,
        max_period=max_period,
        kneading=knead,
        inner=approx.inner.map(chart_to_pi, "pi"),
        outer=approx.outer.map(chart_to_pi, "pi"),
        witnesses=approx.witnesses,
        outer_cycles=approx.outer_cycles,
        diagnostics=list(knead.diagnostics) + list(approx.diagnostics),
    )
    if not report.closed:
        report.diagnostics.append(
            f"阶数 {approx.order} 下内外逼近未闭合，Hausdorff 间隙 {report.gap}"
        )
    return report


# ==================== 逐阶细化 ====================


@dataclass(frozen=True)
class RefinementStep:
    """细化序列中的一行"""

    order: int
    max_period: int
    classification: Classification
    outer_vertices: int
    inner_vertices: int
    gap: Fraction

    def csv_row(self) -> List[str]:
        return [
            str(self.order),
            str(self.max_period),
            str(self.classification),
            str(self.outer_vertices),
            str(self.inner_vertices),
            str(self.gap),
        ]


def refine(
    t: Fraction,
    steps: Sequence[Tuple[int, int]],
    model: str = "beta",
) -> List[RefinementStep]:
    """
    固定 t，依次提高 (阶数, 最大周期)，记录顶点数与间隙的变化

    用于观察未闭合的旋转集：外逼近顶点数增长、内外间隙收缩。

    Raises:
        FigureEightError: t ∉ [0,1]、深度过小或 steps 为空
        CertificationError: inner ⊄ outer
    """
    if not steps:
        raise FigureEightError("细化序列不能为空")
    rows = []
    for n, max_period in steps:
        report = rotation_set(t, n, max_period, model)
        rows.append(
            RefinementStep(
                order=report.order,
                max_period=max_period,
                classification=report.classification,
                outer_vertices=len(report.outer.vertices),
                inner_vertices=len(report.inner.vertices),
                gap=report.gap,
            )
        )
    return rows


# ==================== 参数扫描 ====================


@dataclass(frozen=True)
class Plateau:
    """外逼近多边形相同的极大参数区间"""

    plateau_id: int
    t_start: Fraction
    t_end: Fraction
    polygon: RatPolygon
    closed: bool
    points: int

    @property
    def width(self) -> Fraction:
        return self.t_end - self.t_start

    def to_dict(self) -> dict:
        return {
            "plateau_id": self.plateau_id,
            "t_start": str(self.t_start),
            "t_end": str(self.t_end),
            "points": self.points,
            "closed": self.closed,
            "polygon": _polygon_dict(self.polygon),
        }


@dataclass
class PlateauList:
    """扫描结果：网格上的平台划分"""

    t0: Fraction
    t1: Fraction
    steps: int
    order: int
    plateaus: List[Plateau]
    rows: List[Tuple[Fraction, int, int, bool]]

    @property
    def step(self) -> Fraction:
        return (self.t1 - self.t0) / (self.steps - 1)

    def plateau_at(self, t: Fraction) -> Optional[Plateau]:
        for plateau in self.plateaus:
            if plateau.t_start <= t <= plateau.t_end:
                return plateau
        return None

    def csv_rows(self) -> List[List[str]]:
        return [[str(t), str(pid), str(nv), str(closed).lower()] for t, pid, nv, closed in self.rows]

    def to_dict(self) -> dict:
        return {
            "t0": str(self.t0),
            "t1": str(self.t1),
            "steps": self.steps,
            "order": self.order,
            "plateaus": [p.to_dict() for p in self.plateaus],
        }


def scan_grid(t0: Fraction, t1: Fraction, steps: int) -> List[Fraction]:
    """[t₀, t₁] 上 steps 个等距有理点"""
    if steps < 2:
        raise FigureEightError("扫描点数必须 ≥ 2")
    if t0 > t1:
        raise FigureEightError(f"扫描区间起点大于终点: {t0} > {t1}")
    h = (Fraction(t1) - Fraction(t0)) / (steps - 1)
    return [Fraction(t0) + i * h for i in range(steps)]


def _scan_point(args: Tuple[Fraction, int, int, str]) -> Tuple[Fraction, RatPolygon, bool]:
    t, n, max_period, model = args
    report = rotation_set(t, n, max_period, model)
    return t, report.outer, report.closed


def scan(
    t0: Fraction,
    t1: Fraction,
    steps: int,
    n: int,
    max_period: Optional[int] = None,
    model: str = "beta",
    workers: int = 1,
    progress: Optional[Callable[[Fraction], None]] = None,
) -> PlateauList:
    """
    分岔扫描：按外逼近多边形精确相等把相邻网格点合并为平台

    workers > 1 时使用进程池，结果按 t 顺序合并。

    Raises:
        FigureEightError: 区间或点数无效
    """
    grid = scan_grid(t0, t1, steps)
    period = n if max_period is None else max_period
    tasks = [(t, n, period, model) for t in grid]

    results = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for item in pool.map(_scan_point, tasks):
                results.append(item)
                if progress:
                    progress(item[0])
    else:
        for task in tasks:
            item = _scan_point(task)
            results.append(item)
            if progress:
                progress(item[0])

    plateaus: List[Plateau] = []
    rows = []
    for t, outer, closed in results:
        last = plateaus[-1] if plateaus else None
        if last is not None and last.polygon == outer:
            plateaus[-1] = Plateau(
                plateau_id=last.plateau_id,
                t_start=last.t_start,
                t_end=t,
                polygon=outer,
                closed=last.closed and closed,
                points=last.points + 1,
            )
        else:
            plateaus.append(Plateau(len(plateaus), t, t, outer, closed, 1))
        rows.append((t, plateaus[-1].plateau_id, len(outer.vertices), closed))

    return PlateauList(
        t0=Fraction(t0),
        t1=Fraction(t1),
        steps=steps,
        order=n,
        plateaus=plateaus,
        rows=rows,
    )
