"""
异常定义模块
所有可预期的失败都从 ClassConeError 派生
"""
from pathlib import Path
from typing import Union


PathLike = Union[str, Path]


class ClassConeError(Exception):
    """基础异常"""


class SourceReadError(ClassConeError):
    """源文件无法读取"""

    def __init__(self, path: PathLike, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path}: 无法读取文件: {reason}")


class SourceDecodeError(ClassConeError):
    """源文件不是合法的 UTF-8"""

    def __init__(self, path: PathLike, offset: int):
        self.path = str(path)
        self.offset = offset
        super().__init__(f"{self.path}: 非 UTF-8 内容，字节偏移 {offset}")


class JavaParseError(ClassConeError):
    """括号不配对等结构性解析错误"""

    def __init__(self, path: PathLike, line: int, reason: str):
        self.path = str(path)
        self.line = line
        self.reason = reason
        super().__init__(f"{self.path}:{line}: {reason}")


class ExtractionError(ClassConeError):
    """项目级抽取失败（根目录缺失或严格模式下的文件错误）"""


class MetricsError(ClassConeError):
    """度量计算的内部不变式被破坏"""


class ChartContractError(ClassConeError, ValueError):
    """图表缩放上限小于某个度量值"""


class ConfigError(ClassConeError):
    """配置或用法错误"""
