# 图表几何与 SVG 渲染
