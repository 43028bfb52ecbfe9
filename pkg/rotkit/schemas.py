"""输出产物模型定义

使用 Pydantic 描述所有 JSON 产物。有理数统一序列化为 "p/q" 字符串，
重新解析多边形时校验严格凸、逆时针的不变量。
"""

from enum import Enum
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .core.errors import RotkitError
from .core.geometry import RatPolygon


def _check_rational(value: str) -> str:
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"无效的有理数: {value!r}") from e
    return value


class OutputFormat(str, Enum):
    """rotset 输出格式"""
    JSON = "json"
    SVG = "svg"
    CSV = "csv"


# ==================== 多边形 ====================

class PolygonModel(BaseModel):
    """有理多边形"""
    chart: Literal["delta", "pi"] = Field(description="图册")
    vertices: List[List[str]] = Field(description="逆时针顶点，每个坐标为 p/q 字符串")

    @field_validator("vertices")
    @classmethod
    def _rational_pairs(cls, vertices: List[List[str]]) -> List[List[str]]:
        for v in vertices:
            if len(v) != 2:
                raise ValueError(f"顶点必须为二元组: {v}")
            for c in v:
                _check_rational(c)
        return vertices

    @model_validator(mode="after")
    def _polygon_invariants(self) -> "PolygonModel":
        self.to_polygon()
        return self

    def to_polygon(self) -> RatPolygon:
        """
        还原为 RatPolygon

        Raises:
            ValueError: 顶点不满足多边形不变量
        """
        try:
            return RatPolygon(
                tuple((Fraction(x), Fraction(y)) for x, y in self.vertices),
                self.chart,
            )
        except RotkitError as e:
            raise ValueError(str(e)) from e


class WitnessModel(BaseModel):
    """周期见证"""
    word: str = Field(description="周期串，如 (2220)")
    freq: List[str] = Field(description="数字频率 (α₀, α₁, α₂)")
    point: List[str] = Field(description="Π 图册中的点")


# ==================== 报告 ====================

class KneadingModel(BaseModel):
    """kneading 结果"""
    t: str
    theta: str
    kneading: str
    exact: bool
    depth: int = Field(ge=2)
    diagnostics: List[str] = Field(default_factory=list)

    @field_validator("t")
    @classmethod
    def _t_rational(cls, value: str) -> str:
        return _check_rational(value)


class RotsetReportModel(BaseModel):
    """rotset 报告"""
    t: str
    order: int = Field(ge=1)
    max_period: int = Field(ge=1)
    kneading: KneadingModel
    classification: str
    closed: bool
    gap: str
    mode_locking_start: Optional[str] = None
    inner: PolygonModel
    outer: PolygonModel
    witnesses: List[WitnessModel]
    outer_cycles: List[WitnessModel] = Field(default_factory=list)
    diagnostics: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _inner_in_outer(self) -> "RotsetReportModel":
        if not self.outer.to_polygon().contains(self.inner.to_polygon()):
            raise ValueError("内逼近不包含于外逼近")
        return self


class PlateauModel(BaseModel):
    """扫描平台"""
    plateau_id: int = Field(ge=0)
    t_start: str
    t_end: str
    points: int = Field(ge=1)
    closed: bool
    polygon: PolygonModel

    @model_validator(mode="after")
    def _ordered_interval(self) -> "PlateauModel":
        if Fraction(_check_rational(self.t_start)) > Fraction(_check_rational(self.t_end)):
            raise ValueError(f"平台区间端点颠倒: {self.t_start} > {self.t_end}")
        return self


class ScanModel(BaseModel):
    """scan 汇总"""
    t0: str
    t1: str
    steps: int = Field(ge=2)
    order: int = Field(ge=1)
    plateaus: List[PlateauModel]

    @model_validator(mode="after")
    def _contiguous_ids(self) -> "ScanModel":
        ids = [p.plateau_id for p in self.plateaus]
        if ids != list(range(len(ids))):
            raise ValueError(f"平台编号必须从 0 连续递增: {ids}")
        return self
