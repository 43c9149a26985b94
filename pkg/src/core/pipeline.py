"""
流水线执行模块
类抽取 → 类信息抽取 → 类选择 → 图表/报告输出
"""
import logging
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from ..chart.builder import build_charts
from ..chart.svg import render_grid, render_svg
from ..models.config import RunConfig
from ..models.metrics import ClassMetrics, Diagnostic
from ..report.writer import REPORT_FORMATS, build_report, write_report
from .errors import ClassConeError, ConfigError, ExtractionError
from .extractor import extract_classes
from .metrics import compute_metrics
from .xml_export import export_xml, read_xml


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

GRID_FILE = "grid.svg"
STRUCTURE_FILE = "structure.xml"


@dataclass
class RunResult:
    """一次运行的结果"""
    exit_code: int = EXIT_OK
    written: List[Path] = field(default_factory=list)
    summary: List[str] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)


def select_metrics(metrics: Sequence[ClassMetrics], patterns: Sequence[str]) -> List[ClassMetrics]:
    """
    类选择器：按 shell 通配符匹配简单名或限定名

    没有模式时选中全部类。
    """
    if not patterns:
        return list(metrics)
    return [
        m for m in metrics
        if any(fnmatchcase(m.simple_name, p) or fnmatchcase(m.class_ref, p) for p in patterns)
    ]


def summary_line(m: ClassMetrics) -> str:
    """标准输出中每个类的一行摘要"""
    return f"{m.class_ref}  NOM={m.nom} NOA={m.noa} LOC={m.loc}"


class PipelineRunner:
    """流水线执行器"""

    def __init__(self):
        self._on_class_summary: Optional[Callable[[str], None]] = None
        self._on_diagnostic: Optional[Callable[[Diagnostic], None]] = None

    def set_on_class_summary(self, callback: Callable[[str], None]):
        """设置每个选中类的摘要回调"""
        self._on_class_summary = callback

    def set_on_diagnostic(self, callback: Callable[[Diagnostic], None]):
        """设置诊断回调"""
        self._on_diagnostic = callback

    def run(self, config: RunConfig) -> RunResult:
        """
        执行完整流水线

        Args:
            config: 运行配置

        Returns:
            退出码 0 成功；1 严格模式解析失败或输出目录不可写；2 配置错误
        """
        result = RunResult()
        try:
            config.validate()
            style = config.chart_style()
        except ConfigError as e:
            logger.error("%s", e)
            result.exit_code = EXIT_USAGE
            return result

        try:
            self._execute(config, style, result)
        except ClassConeError as e:
            logger.error("%s", e)
            result.exit_code = EXIT_FAILURE
        except OSError as e:
            logger.error("无法写入输出目录 %s: %s", config.out_dir, e)
            result.exit_code = EXIT_FAILURE
        return result

    def _execute(self, config: RunConfig, style, result: RunResult):
        root = Path(config.root)
        extraction = extract_classes(
            root, config.include, config.exclude,
            strict=config.strict, workers=config.workers,
        )
        result.diagnostics = list(extraction.diagnostics)
        for diagnostic in extraction.diagnostics:
            if self._on_diagnostic:
                self._on_diagnostic(diagnostic)

        metrics = compute_metrics(extraction.classes, extraction.sources, config.loc_mode, root)
        logger.info("行数口径: %s", config.loc_mode.get_display_name())
        selected = select_metrics(metrics, config.select)
        if config.select and not selected:
            logger.warning("没有类匹配选择模式: %s", ", ".join(config.select))
        logger.info("选中 %d / %d 个类", len(selected), len(metrics))

        out_dir = Path(config.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)

        if config.wants("svg") and selected:
            charts = build_charts(selected, style, qualified=config.qualified_captions)
            for chart in charts:
                self._write(out_dir / f"{chart.qualified_name}.svg", render_svg(chart, style), result)
            self._write(out_dir / GRID_FILE, render_grid(charts, style, config.columns), result)

        report = build_report(root.as_posix(), config.loc_mode, selected, extraction.diagnostics)
        for fmt in REPORT_FORMATS:
            if config.wants(fmt):
                self._write(out_dir / f"report.{fmt}", write_report(report, fmt), result)

        if config.export_xml:
            xml_text = export_xml(extraction.classes, extraction.sources.values(), root)
            self._write(out_dir / STRUCTURE_FILE, xml_text, result)
            self._check_structure(extraction.classes, xml_text)

        for m in selected:
            line = summary_line(m)
            result.summary.append(line)
            if self._on_class_summary:
                self._on_class_summary(line)

    @staticmethod
    def _check_structure(classes, xml_text: str):
        """导出的 XML 读回后应与内存中的类列表一致"""
        def shape(units):
            return sorted((u.qualified_name, u.kind.value, u.span.to_text()) for u in units)

        if shape(read_xml(xml_text)) != shape(classes):
            raise ExtractionError("structure.xml 与抽取结果不一致")
        logger.debug("structure.xml 一致性检查通过")

    @staticmethod
    def _write(path: Path, text: str, result: RunResult):
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        result.written.append(path)
        logger.debug("已写入 %s", path)
