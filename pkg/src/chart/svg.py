"""
SVG 渲染模块
把 ChartSpec 绘制成二维锥体剪影（三角形 + 半高椭圆底座）
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape, quoteattr

from ..models.chart import CONE_ORDER, CaptionPosition, ChartSpec, ChartStyle


PADDING = 16
CAPTION_BAND = 24
LABEL_BAND = 18
LEGEND_BAND = 28
CAPTION_FONT_SIZE = 14
LABEL_FONT_SIZE = 12
LABEL_GAP = 6
SWATCH = 12
FONT_FAMILY = "sans-serif"
SVG_NS = "http://www.w3.org/2000/svg"


def fmt(value: float) -> str:
    """坐标格式化：整数不带小数点，其余最多两位小数"""
    if float(value).is_integer():
        return str(int(value))
    return f"{value:.2f}".rstrip("0").rstrip(".")


class SvgCanvas:
    """按顺序累积元素的 SVG 文档构建器"""

    def __init__(self, width: float, height: float):
        self.width = width
        self.height = height
        self._lines: List[str] = []
        self._depth = 1

    def _emit(self, text: str):
        self._lines.append("  " * self._depth + text)

    @staticmethod
    def _attrs(attrs: Sequence[Tuple[str, str]]) -> str:
        return "".join(f" {key}={quoteattr(str(value))}" for key, value in attrs)

    def group_start(self, attrs: Sequence[Tuple[str, str]]):
        self._emit(f"<g{self._attrs(attrs)}>")
        self._depth += 1

    def group_end(self):
        self._depth -= 1
        self._emit("</g>")

    def polygon(self, points: Sequence[Tuple[float, float]], fill: str, css_class: str):
        text = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self._emit(f"<polygon{self._attrs([('class', css_class), ('points', text), ('fill', fill)])}/>")

    def ellipse(self, cx: float, cy: float, rx: float, ry: float, fill: str, css_class: str):
        attrs = [('class', css_class), ('cx', fmt(cx)), ('cy', fmt(cy)),
                 ('rx', fmt(rx)), ('ry', fmt(ry)), ('fill', fill), ('fill-opacity', '0.6')]
        self._emit(f"<ellipse{self._attrs(attrs)}/>")

    def rect(self, x: float, y: float, width: float, height: float, fill: str, css_class: str):
        attrs = [('class', css_class), ('x', fmt(x)), ('y', fmt(y)),
                 ('width', fmt(width)), ('height', fmt(height)), ('fill', fill)]
        self._emit(f"<rect{self._attrs(attrs)}/>")

    def text(self, x: float, y: float, content: str, css_class: str,
             font_size: int, anchor: str = "middle"):
        attrs = [('class', css_class), ('x', fmt(x)), ('y', fmt(y)), ('text-anchor', anchor),
                 ('font-family', FONT_FAMILY), ('font-size', str(font_size))]
        self._emit(f"<text{self._attrs(attrs)}>{escape(content)}</text>")

    def desc(self, content: str, css_class: str = "note"):
        self._emit(f"<desc{self._attrs([('class', css_class)])}>{escape(content)}</desc>")

    def render(self) -> str:
        """输出完整的 SVG 文档"""
        w, h = fmt(self.width), fmt(self.height)
        header = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="{SVG_NS}" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        ]
        return "\n".join(header + self._lines + ["</svg>"]) + "\n"


@dataclass(frozen=True)
class ChartGeometry:
    """由样式推导出的单图尺寸"""
    width: float
    height: float
    baseline: float
    caption_y: float
    ry: float

    @classmethod
    def from_style(cls, style: ChartStyle) -> 'ChartGeometry':
        base = style.cone_base_width_px
        ry = base / 4
        width = 2 * PADDING + 3 * base + 2 * style.cone_gap_px
        height = 2 * PADDING + CAPTION_BAND + LABEL_BAND + style.max_cone_height_px + ry
        if style.caption_position is CaptionPosition.ABOVE:
            caption_y = PADDING + CAPTION_FONT_SIZE
            baseline = PADDING + CAPTION_BAND + LABEL_BAND + style.max_cone_height_px
        else:
            baseline = PADDING + LABEL_BAND + style.max_cone_height_px
            caption_y = baseline + ry + CAPTION_FONT_SIZE + 4
        return cls(width=width, height=height, baseline=baseline, caption_y=caption_y, ry=ry)

    def cone_center(self, index: int, style: ChartStyle) -> float:
        base = style.cone_base_width_px
        return PADDING + base / 2 + index * (base + style.cone_gap_px)


def _draw_chart(canvas: SvgCanvas, chart: ChartSpec, style: ChartStyle,
                geometry: ChartGeometry, x: float, y: float):
    """在 (x, y) 处绘制一张图；单图与网格共用"""
    half = style.cone_base_width_px / 2
    canvas.group_start([('class', 'cone-chart'), ('data-class', chart.qualified_name),
                        ('transform', f"translate({fmt(x)},{fmt(y)})")])
    canvas.text(geometry.width / 2, geometry.caption_y, chart.class_name, 'caption', CAPTION_FONT_SIZE)
    for index, cone in enumerate(chart.cones):
        cx = geometry.cone_center(index, style)
        apex = geometry.baseline - cone.height_px
        canvas.group_start([('class', 'cone'), ('data-metric', cone.metric.value)])
        canvas.ellipse(cx, geometry.baseline, half, geometry.ry, cone.color, 'cone-base')
        canvas.polygon([(cx - half, geometry.baseline), (cx + half, geometry.baseline), (cx, apex)],
                       cone.color, 'cone-body')
        canvas.text(cx, apex - LABEL_GAP, cone.label, 'cone-label', LABEL_FONT_SIZE)
        canvas.group_end()
    canvas.group_end()


def render_svg(chart: ChartSpec, style: ChartStyle) -> str:
    """
    渲染单张三锥图

    Args:
        chart: 图表几何描述
        style: 图表样式

    Returns:
        独立的 SVG 文档文本
    """
    geometry = ChartGeometry.from_style(style)
    canvas = SvgCanvas(geometry.width, geometry.height)
    _draw_chart(canvas, chart, style, geometry, 0, 0)
    return canvas.render()


def grid_shape(count: int, columns: int) -> Tuple[int, int]:
    """返回 (行数, 实际列数)"""
    if count == 0:
        return 0, 0
    return (count + columns - 1) // columns, min(count, columns)


def _draw_legend(canvas: SvgCanvas, style: ChartStyle, top: float):
    x = PADDING
    for metric in CONE_ORDER:
        canvas.rect(x, top + (LEGEND_BAND - SWATCH) / 2, SWATCH, SWATCH, style.color_of(metric), 'legend-swatch')
        canvas.text(x + SWATCH + 4, top + LEGEND_BAND / 2 + LABEL_FONT_SIZE / 3,
                    metric.get_display_name(), 'legend-label', LABEL_FONT_SIZE, anchor="start")
        x += SWATCH + 4 + 48


def render_grid(charts: Sequence[ChartSpec], style: ChartStyle, columns: int) -> str:
    """
    把多张图按从左到右、从上到下的顺序排进一个 SVG

    Args:
        charts: 图表列表
        style: 图表样式
        columns: 每行图表数，至少为 1

    Returns:
        SVG 文档文本；没有图表时为带说明元素的空画布
    """
    if columns < 1:
        raise ValueError(f"列数必须为正整数: {columns}")
    if not charts:
        canvas = SvgCanvas(2 * PADDING, 2 * PADDING)
        canvas.desc("没有选中的类")
        return canvas.render()

    geometry = ChartGeometry.from_style(style)
    rows, cols = grid_shape(len(charts), columns)
    legend = LEGEND_BAND if style.show_legend else 0
    canvas = SvgCanvas(cols * geometry.width, rows * geometry.height + legend)
    for index, chart in enumerate(charts):
        row, col = divmod(index, columns)
        _draw_chart(canvas, chart, style, geometry, col * geometry.width, row * geometry.height)
    if style.show_legend:
        _draw_legend(canvas, style, rows * geometry.height)
    return canvas.render()
