"""
类抽取模块
遍历项目目录，解析匹配的源文件，汇总所有类并收集诊断信息
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..models.java_class import ClassUnit, SourceFile
from ..models.metrics import Diagnostic
from .errors import ClassConeError, ExtractionError, PathLike
from .parser import load_source, parse_source


logger = logging.getLogger(__name__)

DEFAULT_INCLUDE = ("**/*.java",)


@dataclass
class ExtractionResult:
    """一次项目抽取的结果"""
    root: Path
    classes: List[ClassUnit] = field(default_factory=list)
    sources: Dict[Path, SourceFile] = field(default_factory=dict)
    diagnostics: List[Diagnostic] = field(default_factory=list)


def relative_posix(root: Path, path: Path) -> str:
    """相对于根目录的 POSIX 风格路径；不在根目录下时返回原路径"""
    try:
        return path.relative_to(root).as_posix()
    except ValueError:
        return path.as_posix()


def glob_match(rel_path: str, pattern: str) -> bool:
    """
    shell 风格匹配相对路径

    '*' 可以跨越目录；以 '**/' 开头的模式同时匹配根目录下的文件。
    """
    if fnmatchcase(rel_path, pattern):
        return True
    while pattern.startswith("**/"):
        pattern = pattern[3:]
        if fnmatchcase(rel_path, pattern):
            return True
    return False


def discover_files(root: Path, include: Sequence[str], exclude: Sequence[str]) -> List[Path]:
    """按字节序返回 root 下所有匹配 include 且不匹配 exclude 的文件"""
    found: List[Tuple[bytes, Path]] = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for filename in filenames:
            path = Path(dirpath) / filename
            rel = relative_posix(root, path)
            if not any(glob_match(rel, p) for p in include):
                continue
            if any(glob_match(rel, p) for p in exclude):
                continue
            found.append((rel.encode("utf-8"), path))
    return [path for _, path in sorted(found)]


def _load_and_parse(path: Path) -> Tuple[Optional[SourceFile], List[ClassUnit], Optional[ClassConeError]]:
    """加载并解析单个文件，错误作为返回值而不是异常"""
    try:
        src = load_source(path)
        return src, parse_source(src), None
    except ClassConeError as e:
        return None, [], e


def extract_classes(root: PathLike,
                    include: Iterable[str] = DEFAULT_INCLUDE,
                    exclude: Iterable[str] = (),
                    strict: bool = False,
                    workers: int = 1) -> ExtractionResult:
    """
    抽取项目中的所有类

    Args:
        root: 项目根目录
        include: 需要解析的文件模式
        exclude: 排除的文件模式
        strict: 为 True 时任何文件错误都会中止抽取
        workers: 并行解析的线程数

    Returns:
        按限定名字节序排列的抽取结果

    Raises:
        ExtractionError: 根目录不存在
        ClassConeError: 严格模式下按路径顺序遇到的第一个文件错误
    """
    root = Path(root)
    if not root.is_dir():
        raise ExtractionError(f"根目录不存在或不是目录: {root}")

    paths = discover_files(root, tuple(include), tuple(exclude))
    logger.info("在 %s 下找到 %d 个源文件", root, len(paths))

    if workers > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_load_and_parse, paths))
    else:
        outcomes = [_load_and_parse(p) for p in paths]

    result = ExtractionResult(root=root)
    units: List[ClassUnit] = []
    for path, (src, parsed, error) in zip(paths, outcomes):
        if error is not None:
            if strict:
                raise error
            logger.debug("跳过 %s: %s", path, error)
            result.diagnostics.append(Diagnostic(relative_posix(root, path), str(error)))
            continue
        result.sources[path] = src
        units.extend(parsed)

    result.classes = _dedupe(root, units, result.diagnostics)
    logger.info("共抽取 %d 个类，%d 条诊断", len(result.classes), len(result.diagnostics))
    return result


def _dedupe(root: Path, units: List[ClassUnit], diagnostics: List[Diagnostic]) -> List[ClassUnit]:
    """同一限定名只保留路径最小、行号最小的那个"""
    ordered = sorted(
        units,
        key=lambda u: (u.sort_key, relative_posix(root, u.file).encode("utf-8"), u.span.start_line),
    )
    kept: List[ClassUnit] = []
    for unit in ordered:
        if kept and kept[-1].qualified_name == unit.qualified_name:
            first = kept[-1]
            diagnostics.append(Diagnostic(
                relative_posix(root, unit.file),
                f"重复的限定名 {unit.qualified_name}（第 {unit.span.start_line} 行），"
                f"已保留 {relative_posix(root, first.file)}:{first.span.start_line}",
            ))
            continue
        kept.append(unit)
    return kept
