"""
类信息抽取模块
三个抽取器：方法数、属性数、代码行数
"""
import logging
from pathlib import Path
from typing import Iterable, List, Mapping, Optional

from ..models.java_class import ClassUnit, MemberKind, SourceFile
from ..models.metrics import ClassMetrics, LocMode
from .errors import MetricsError
from .extractor import relative_posix
from .lexer import code_line_numbers


logger = logging.getLogger(__name__)

METHOD_KINDS = (MemberKind.METHOD, MemberKind.CONSTRUCTOR)
ATTRIBUTE_KINDS = (MemberKind.FIELD_DECLARATOR, MemberKind.ENUM_CONSTANT)


def count_methods(c: ClassUnit) -> int:
    """直接声明的方法与构造方法个数"""
    return len(c.members_of(*METHOD_KINDS))


def count_attributes(c: ClassUnit) -> int:
    """直接声明的字段声明符与枚举常量个数"""
    return len(c.members_of(*ATTRIBUTE_KINDS))


def count_loc(c: ClassUnit, src: SourceFile, mode: LocMode) -> int:
    """
    统计类范围内的代码行

    Args:
        c: 类单元
        src: 类所在的源文件
        mode: PHYSICAL 计全部物理行；SLOC 只计含非注释记号的行

    Raises:
        MetricsError: 类范围超出文件行数
    """
    span = c.span
    if span.end_line > src.line_count:
        raise MetricsError(
            f"{c.qualified_name} 的范围 {span.to_text()} 超出 {src.path} 的 {src.line_count} 行"
        )
    if mode is LocMode.PHYSICAL:
        return span.line_total
    code_lines = code_line_numbers(src.text)
    return sum(1 for line in range(span.start_line, span.end_line + 1) if line in code_lines)


def compute_metrics(classes: Iterable[ClassUnit],
                    sources: Mapping[Path, SourceFile],
                    mode: LocMode = LocMode.SLOC,
                    root: Optional[Path] = None) -> List[ClassMetrics]:
    """
    为每个类计算 (NOM, NOA, LOC)，输出顺序与输入一致

    Args:
        classes: 类列表
        sources: 按路径查找源文件
        mode: 代码行计数模式
        root: 给出时，报告中的文件路径相对于该目录

    Raises:
        MetricsError: 某个类的源文件不在 sources 中
    """
    results: List[ClassMetrics] = []
    for unit in classes:
        src = sources.get(unit.file)
        if src is None:
            raise MetricsError(f"找不到类 {unit.qualified_name} 的源文件 {unit.file}")
        results.append(ClassMetrics(
            class_ref=unit.qualified_name,
            simple_name=unit.simple_name,
            nom=count_methods(unit),
            noa=count_attributes(unit),
            loc=count_loc(unit, src, mode),
            loc_mode=mode,
            kind=unit.kind,
            file=relative_posix(root, unit.file) if root is not None else Path(unit.file).as_posix(),
            start_line=unit.span.start_line,
            end_line=unit.span.end_line,
        ))
    logger.debug("计算了 %d 个类的度量 (%s)", len(results), mode.value)
    return results
