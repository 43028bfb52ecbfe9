"""rotkit - 八字形映射族旋转集的精确计算工具"""

__version__ = "0.1.1"
__license__ = "MIT"
