"""
锥形图几何计算模块
把类度量换算成三个锥体的像素高度、颜色和标签
"""
from typing import List, Sequence

from ..core.errors import ChartContractError
from ..models.chart import CONE_ORDER, ChartSpec, ChartStyle, ConeSpec, ScaleMode
from ..models.metrics import ClassMetrics


def round_half_up(numerator: int, denominator: int) -> int:
    """整数除法，0.5 向上取整"""
    return (2 * numerator + denominator) // (2 * denominator)


def cone_height(value: int, ceiling: int, style: ChartStyle) -> int:
    """
    计算单个锥体高度

    0 值对应 0 高度；非 0 值线性缩放后不低于最小可见高度。
    """
    if value == 0:
        return 0
    scaled = round_half_up(style.max_cone_height_px * value, ceiling)
    return max(style.min_visible_height_px, scaled)


def per_chart_ceiling(m: ClassMetrics) -> int:
    """本图三个值中的最大值，全为 0 时取 1"""
    return max(m.values) or 1


def resolve_ceilings(metrics: Sequence[ClassMetrics], scale_mode: ScaleMode) -> List[int]:
    """
    为每张图确定缩放上限

    Args:
        metrics: 将要绘制的类度量
        scale_mode: PER_CHART 各自归一化；GLOBAL 使用所有图的最大值
    """
    if scale_mode is ScaleMode.GLOBAL:
        shared = max((per_chart_ceiling(m) for m in metrics), default=1)
        return [shared] * len(metrics)
    return [per_chart_ceiling(m) for m in metrics]


def build_chart(m: ClassMetrics, style: ChartStyle, scale_ceiling: int,
                qualified: bool = False) -> ChartSpec:
    """
    生成一张三锥图的几何描述

    Args:
        m: 类度量
        style: 图表样式
        scale_ceiling: 缩放上限，不能小于任何一个度量值
        qualified: 标题使用限定名而不是简单名

    Raises:
        ChartContractError: 上限小于某个度量值
    """
    if scale_ceiling < 1 or scale_ceiling < max(m.values):
        raise ChartContractError(
            f"{m.class_ref}: 缩放上限 {scale_ceiling} 小于度量值 {m.values}"
        )
    cones = tuple(
        ConeSpec(
            metric=metric,
            value=value,
            height_px=cone_height(value, scale_ceiling, style),
            color=style.color_of(metric),
        )
        for metric, value in zip(CONE_ORDER, m.values)
    )
    return ChartSpec(
        class_name=m.class_ref if qualified else m.simple_name,
        qualified_name=m.class_ref,
        cones=cones,
        caption_position=style.caption_position,
    )


def build_charts(metrics: Sequence[ClassMetrics], style: ChartStyle,
                 qualified: bool = False) -> List[ChartSpec]:
    """按样式中的缩放方式为一组类生成图表"""
    ceilings = resolve_ceilings(metrics, style.scale_mode)
    return [build_chart(m, style, c, qualified) for m, c in zip(metrics, ceilings)]
