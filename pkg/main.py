"""
ClassCone - Java 类信息锥形图可视化工具

功能:
- 抽取 Java 源码中的类（含嵌套类、接口、枚举）
- 统计每个类的方法数 NOM、属性数 NOA 和代码行数 LOC
- 为每个类绘制三锥图（SVG），并输出网格图
- 输出 JSON / CSV 度量报告，可选导出 XML 结构

使用方法:
    python main.py --root path/to/src --out out

打包为exe:
    pyinstaller --onefile --name ClassCone main.py
"""

import sys
import os

# 确保项目根目录在路径中
sys.path.insert(0, os.path.dirname(__file__))

from src.cli.app import main

if __name__ == "__main__":
    main()
