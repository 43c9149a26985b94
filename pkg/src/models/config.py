"""
运行配置模型
保存一次分析运行的全部参数，支持与 JSON 设置文件互相转换
"""
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Tuple
import json

from ..core.errors import ConfigError
from ..core.extractor import DEFAULT_INCLUDE
from .chart import CaptionPosition, ChartStyle, ScaleMode
from .metrics import LocMode


OUTPUT_FORMATS = ("svg", "json", "csv")


@dataclass
class RunConfig:
    """一次运行的配置"""
    root: Path = Path(".")
    include: Tuple[str, ...] = DEFAULT_INCLUDE
    exclude: Tuple[str, ...] = ()
    select: Tuple[str, ...] = ()
    loc_mode: LocMode = LocMode.SLOC
    scale_mode: ScaleMode = ScaleMode.PER_CHART
    caption_position: CaptionPosition = CaptionPosition.ABOVE
    columns: int = 3
    out_dir: Path = Path("classcone-out")
    formats: Tuple[str, ...] = OUTPUT_FORMATS
    strict: bool = False
    export_xml: bool = False
    qualified_captions: bool = False
    show_legend: bool = False
    workers: int = 1
    style_overrides: Dict[str, Any] = field(default_factory=dict)

    def validate(self):
        """检查配置不变式，失败时抛出 ConfigError"""
        if not Path(self.root).is_dir():
            raise ConfigError(f"根目录不存在或不是目录: {self.root}")
        if not self.formats:
            raise ConfigError("至少需要一种输出格式")
        unknown = [f for f in self.formats if f not in OUTPUT_FORMATS]
        if unknown:
            raise ConfigError(f"未知输出格式: {', '.join(unknown)}")
        if self.columns < 1:
            raise ConfigError("列数必须为正整数")
        if self.workers < 1:
            raise ConfigError("工作线程数必须为正整数")
        if not self.include:
            raise ConfigError("include 模式不能为空")
        # 样式本身的校验在构造时完成
        self.chart_style()

    def chart_style(self) -> ChartStyle:
        """由配置组装图表样式"""
        data = dict(self.style_overrides)
        data['caption_position'] = self.caption_position.value
        data['scale_mode'] = self.scale_mode.value
        data['show_legend'] = self.show_legend
        try:
            return ChartStyle.from_dict(data)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"样式设置无效: {e}") from e

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            'root': str(self.root),
            'include': list(self.include),
            'exclude': list(self.exclude),
            'select': list(self.select),
            'loc_mode': self.loc_mode.value,
            'scale_mode': self.scale_mode.value,
            'caption_position': self.caption_position.value,
            'columns': self.columns,
            'out_dir': str(self.out_dir),
            'formats': list(self.formats),
            'strict': self.strict,
            'export_xml': self.export_xml,
            'qualified_captions': self.qualified_captions,
            'show_legend': self.show_legend,
            'workers': self.workers,
            'style': dict(self.style_overrides),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        """从字典创建，缺失的键使用默认值"""
        config = cls()
        try:
            return replace(
                config,
                root=Path(data.get('root', config.root)),
                include=tuple(data.get('include', config.include)),
                exclude=tuple(data.get('exclude', config.exclude)),
                select=tuple(data.get('select', config.select)),
                loc_mode=LocMode(data.get('loc_mode', config.loc_mode.value)),
                scale_mode=ScaleMode(data.get('scale_mode', config.scale_mode.value)),
                caption_position=CaptionPosition(
                    data.get('caption_position', config.caption_position.value)),
                columns=int(data.get('columns', config.columns)),
                out_dir=Path(data.get('out_dir', config.out_dir)),
                formats=tuple(data.get('formats', config.formats)),
                strict=bool(data.get('strict', config.strict)),
                export_xml=bool(data.get('export_xml', config.export_xml)),
                qualified_captions=bool(data.get('qualified_captions', config.qualified_captions)),
                show_legend=bool(data.get('show_legend', config.show_legend)),
                workers=int(data.get('workers', config.workers)),
                style_overrides=dict(data.get('style', {})),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"配置内容无效: {e}") from e

    def save_to_file(self, filepath: str):
        """保存到文件"""
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, ensure_ascii=False, indent=2)

    @classmethod
    def load_from_file(cls, filepath: str) -> 'RunConfig':
        """从文件加载"""
        return cls.from_dict(read_settings(filepath))


def known_keys() -> List[str]:
    """设置文件中可识别的键"""
    return list(RunConfig().to_dict().keys())


def read_settings(filepath: str) -> Dict[str, Any]:
    """读取设置文件的原始内容"""
    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"无法加载配置文件 {filepath}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"配置文件 {filepath} 的顶层必须是对象")
    return data
