"""结构 XML 导出测试"""
import xml.etree.ElementTree as ET

from src.core.extractor import extract_classes
from src.core.xml_export import export_xml, read_xml


def shape(units):
    return sorted((u.qualified_name, u.kind.value, u.span.to_text()) for u in units)


class TestExportXml:

    def test_document_structure(self, corpus_dir):
        result = extract_classes(corpus_dir, include=("Outer.java",))
        text = export_xml(result.classes, result.sources.values(), corpus_dir)
        assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>\n')
        assert text.endswith("</classcone>\n")

        doc = ET.fromstring(text.encode("utf-8"))
        assert doc.tag == "classcone" and doc.get("version") == "1"
        units = doc.findall("unit")
        assert [(u.get("path"), u.get("lines")) for u in units] == [("Outer.java", "21")]
        classes = units[0].findall("class")
        assert [c.get("qualified_name") for c in classes] == [
            "corpus.Outer", "corpus.Outer.Inner", "corpus.Outer.Listener",
        ]
        inner = classes[1]
        assert (inner.get("kind"), inner.get("depth"), inner.get("start_line"), inner.get("end_line")) == (
            "class", "1", "9", "16")
        members = [(m.get("kind"), m.get("name")) for m in inner.findall("member")]
        assert members == [
            ("field_declarator", "count"), ("field_declarator", "total"), ("method", "tick"),
        ]

    def test_units_only_for_files_with_classes(self, tmp_path):
        (tmp_path / "package-info.java").write_text("package p;\n", encoding="utf-8")
        (tmp_path / "A.java").write_text("package p;\nclass A {}\n", encoding="utf-8")
        result = extract_classes(tmp_path)
        doc = ET.fromstring(export_xml(result.classes, result.sources.values(), tmp_path).encode("utf-8"))
        assert [u.get("path") for u in doc.findall("unit")] == ["A.java"]

    def test_read_back_matches_extraction(self, corpus_dir):
        result = extract_classes(corpus_dir)
        recovered = read_xml(export_xml(result.classes, result.sources.values(), corpus_dir))
        assert shape(recovered) == shape(result.classes)
        by_name = {u.qualified_name: u for u in recovered}
        for unit in result.classes:
            assert by_name[unit.qualified_name].members == unit.members
            assert by_name[unit.qualified_name].nesting_depth == unit.nesting_depth

    def test_deterministic(self, corpus_dir):
        result = extract_classes(corpus_dir)
        first = export_xml(result.classes, result.sources.values(), corpus_dir)
        second = export_xml(result.classes, result.sources.values(), corpus_dir)
        assert first == second

    def test_non_ascii_names(self, tmp_path):
        (tmp_path / "Ünï.java").write_text("class Ünï { int a; }\n", encoding="utf-8")
        result = extract_classes(tmp_path)
        recovered = read_xml(export_xml(result.classes, result.sources.values(), tmp_path))
        assert [u.qualified_name for u in recovered] == ["Ünï"]
