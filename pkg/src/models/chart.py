"""
锥形图数据模型
定义图表样式、单个锥体和整张图表的几何描述
"""
from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from ..core.errors import ConfigError


class ConeMetric(Enum):
    """锥体对应的度量，顺序即从左到右的绘制顺序"""
    METHODS = "methods"
    ATTRIBUTES = "attributes"
    LOC = "loc"

    def get_display_name(self) -> str:
        """图例中使用的短名称"""
        names = {
            ConeMetric.METHODS: "NOM",
            ConeMetric.ATTRIBUTES: "NOA",
            ConeMetric.LOC: "LOC",
        }
        return names.get(self, self.value)


CONE_ORDER: Tuple[ConeMetric, ...] = (ConeMetric.METHODS, ConeMetric.ATTRIBUTES, ConeMetric.LOC)


class ScaleMode(Enum):
    """锥体高度归一化方式"""
    PER_CHART = "per_chart"   # 以本图最大值为上限
    GLOBAL = "global"         # 以所有图的最大值为上限


class CaptionPosition(Enum):
    """类名标题位置"""
    ABOVE = "above"
    BELOW = "below"


def default_cone_colors() -> Dict[ConeMetric, str]:
    """绿色=方法，红色=属性，蓝色=代码行"""
    return {
        ConeMetric.METHODS: "#008000",
        ConeMetric.ATTRIBUTES: "#FF0000",
        ConeMetric.LOC: "#0000FF",
    }


@dataclass(frozen=True)
class ChartStyle:
    """图表样式与几何参数"""
    cone_colors: Dict[ConeMetric, str] = field(default_factory=default_cone_colors)
    max_cone_height_px: int = 200
    cone_base_width_px: int = 60
    cone_gap_px: int = 24
    caption_position: CaptionPosition = CaptionPosition.ABOVE
    scale_mode: ScaleMode = ScaleMode.PER_CHART
    min_visible_height_px: int = 2
    show_legend: bool = False

    def __post_init__(self):
        missing = [m.value for m in CONE_ORDER if m not in self.cone_colors]
        if missing:
            raise ConfigError(f"缺少锥体颜色: {', '.join(missing)}")
        colors = [self.cone_colors[m].upper() for m in CONE_ORDER]
        if len(set(colors)) != len(colors):
            raise ConfigError(f"三个锥体颜色必须互不相同: {colors}")
        if self.max_cone_height_px < 1 or self.cone_base_width_px < 1:
            raise ConfigError("锥体最大高度和底宽必须为正整数")
        if self.cone_gap_px < 0:
            raise ConfigError("锥体间距不能为负数")
        if not 1 <= self.min_visible_height_px <= self.max_cone_height_px:
            raise ConfigError(
                f"最小可见高度 {self.min_visible_height_px} 必须在 1 和 "
                f"{self.max_cone_height_px} 之间"
            )

    def color_of(self, metric: ConeMetric) -> str:
        return self.cone_colors[metric]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ChartStyle':
        """从设置字典创建，未给出的项使用默认值"""
        colors = default_cone_colors()
        for key, value in data.get('cone_colors', {}).items():
            colors[ConeMetric(key)] = value
        defaults = cls()
        return cls(
            cone_colors=colors,
            max_cone_height_px=int(data.get('max_cone_height_px', defaults.max_cone_height_px)),
            cone_base_width_px=int(data.get('cone_base_width_px', defaults.cone_base_width_px)),
            cone_gap_px=int(data.get('cone_gap_px', defaults.cone_gap_px)),
            caption_position=CaptionPosition(data.get('caption_position', defaults.caption_position.value)),
            scale_mode=ScaleMode(data.get('scale_mode', defaults.scale_mode.value)),
            min_visible_height_px=int(data.get('min_visible_height_px', defaults.min_visible_height_px)),
            show_legend=bool(data.get('show_legend', defaults.show_legend)),
        )


@dataclass(frozen=True)
class ConeSpec:
    """单个锥体"""
    metric: ConeMetric
    value: int
    height_px: int
    color: str

    @property
    def label(self) -> str:
        """标签总是精确的度量值"""
        return str(self.value)


@dataclass(frozen=True)
class ChartSpec:
    """一张三锥图"""
    class_name: str
    qualified_name: str
    cones: Tuple[ConeSpec, ConeSpec, ConeSpec]
    caption_position: CaptionPosition = CaptionPosition.ABOVE

    def cone(self, metric: ConeMetric) -> ConeSpec:
        for cone in self.cones:
            if cone.metric is metric:
                return cone
        raise KeyError(metric)
