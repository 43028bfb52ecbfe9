"""核心计算层：数字串、有限型子移位、有理多边形、八字形映射与流水线"""

from .errors import (
    CertificationError,
    ExitCode,
    FigureEightError,
    GraphError,
    InfimaxError,
    PolygonError,
    RotkitError,
    WordError,
)
from .figure_eight import EightPoint, KneadingResult, kneading_prefix
from .geometry import RatPolygon, hausdorff
from .pipeline import RotsetReport, project_pi, pi_inverse, rotation_set, scan
from .polytope import DfApprox, df_approx
from .words import DigitWord, FreqVector

__all__ = [
    "CertificationError",
    "DfApprox",
    "DigitWord",
    "EightPoint",
    "ExitCode",
    "FigureEightError",
    "FreqVector",
    "GraphError",
    "InfimaxError",
    "KneadingResult",
    "PolygonError",
    "RatPolygon",
    "RotkitError",
    "RotsetReport",
    "WordError",
    "df_approx",
    "hausdorff",
    "kneading_prefix",
    "pi_inverse",
    "project_pi",
    "rotation_set",
    "scan",
]
