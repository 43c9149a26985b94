"""
结构 XML 导出模块
把解析得到的类结构写成 XML 中间表示，并能从该 XML 读回类列表
"""
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from ..models.java_class import ClassKind, ClassUnit, Member, MemberKind, SourceFile, Span
from .extractor import relative_posix


XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>\n'
FORMAT_VERSION = "1"


def export_xml(classes: Iterable[ClassUnit], sources: Iterable[SourceFile],
               root: Optional[Path] = None) -> str:
    """
    导出类结构 XML

    每个含有类的源文件对应一个 <unit>，其下按输入顺序列出 <class>，
    每个直接成员对应一个 <member>。

    Args:
        classes: 类列表
        sources: 这些类所在的源文件
        root: 给出时，unit 的 path 相对于该目录

    Returns:
        UTF-8、LF 换行、逐字节确定的 XML 文本
    """
    by_path: Dict[Path, SourceFile] = {Path(s.path): s for s in sources}
    grouped: Dict[Path, List[ClassUnit]] = {}
    for unit in classes:
        grouped.setdefault(Path(unit.file), []).append(unit)

    doc = ET.Element("classcone", {"version": FORMAT_VERSION})
    for path in sorted(grouped, key=lambda p: p.as_posix().encode("utf-8")):
        src = by_path.get(path)
        unit_el = ET.SubElement(doc, "unit", {
            "path": relative_posix(root, path) if root is not None else path.as_posix(),
            "language": src.language if src else "java",
            "lines": str(src.line_count) if src else "0",
        })
        for unit in grouped[path]:
            class_el = ET.SubElement(unit_el, "class", {
                "name": unit.simple_name,
                "qualified_name": unit.qualified_name,
                "kind": unit.kind.value,
                "depth": str(unit.nesting_depth),
                "start_line": str(unit.span.start_line),
                "end_line": str(unit.span.end_line),
            })
            for member in unit.members:
                ET.SubElement(class_el, "member", member.to_dict())

    ET.indent(doc, space="  ")
    return XML_DECLARATION + ET.tostring(doc, encoding="unicode") + "\n"


def read_xml(text: str) -> List[ClassUnit]:
    """
    从 export_xml 的输出读回类列表

    Args:
        text: XML 文本

    Returns:
        文档顺序的 ClassUnit 列表
    """
    root = ET.fromstring(text.encode("utf-8"))
    classes: List[ClassUnit] = []
    for unit_el in root.iter("unit"):
        path = Path(unit_el.get("path", ""))
        for class_el in unit_el.iter("class"):
            members = tuple(
                Member(
                    kind=MemberKind(m.get("kind")),
                    name=m.get("name", ""),
                    span=Span.from_text(m.get("lines")),
                )
                for m in class_el.iter("member")
            )
            classes.append(ClassUnit(
                file=path,
                simple_name=class_el.get("name"),
                qualified_name=class_el.get("qualified_name"),
                kind=ClassKind(class_el.get("kind")),
                span=Span(int(class_el.get("start_line")), int(class_el.get("end_line"))),
                nesting_depth=int(class_el.get("depth", "0")),
                members=members,
            ))
    return classes
