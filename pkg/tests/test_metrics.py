"""类信息抽取（NOM / NOA / LOC）测试"""
from pathlib import Path

import pytest

from src.core.errors import MetricsError
from src.core.extractor import extract_classes
from src.core.metrics import compute_metrics, count_attributes, count_loc, count_methods
from src.models.java_class import ClassKind, ClassUnit, MemberKind, SourceFile, Span
from src.models.metrics import LocMode

from conftest import parse_text


def metrics_by_name(root, mode):
    result = extract_classes(root)
    return {m.class_ref: m for m in compute_metrics(result.classes, result.sources, mode, root)}


class TestCorpusOracle:

    @pytest.mark.parametrize("mode, column", [
        (LocMode.PHYSICAL, "loc_physical"),
        (LocMode.SLOC, "loc_sloc"),
    ])
    def test_counts_match_manifest(self, corpus_dir, manifest, mode, column):
        metrics = metrics_by_name(corpus_dir, mode)
        assert set(metrics) == set(manifest)
        for name, expected in manifest.items():
            m = metrics[name]
            assert (m.nom, m.noa, m.loc) == (expected["nom"], expected["noa"], expected[column]), name

    def test_provenance(self, corpus_dir):
        m = metrics_by_name(corpus_dir, LocMode.SLOC)["corpus.Outer.Inner"]
        assert m.file == "Outer.java"
        assert (m.start_line, m.end_line) == (9, 16)
        assert m.kind is ClassKind.CLASS
        assert m.simple_name == "Inner"

    def test_mode_monotonicity_and_bounds(self, corpus_dir):
        result = extract_classes(corpus_dir)
        physical = compute_metrics(result.classes, result.sources, LocMode.PHYSICAL)
        sloc = compute_metrics(result.classes, result.sources, LocMode.SLOC)
        for unit, p, s in zip(result.classes, physical, sloc):
            assert s.loc <= p.loc
            assert p.loc <= result.sources[unit.file].line_count


class TestCounting:

    def test_empty_class(self):
        units, src = parse_text("class A {}")
        a = units["A"]
        assert (count_methods(a), count_attributes(a)) == (0, 0)
        assert count_loc(a, src, LocMode.PHYSICAL) == 1
        assert count_loc(a, src, LocMode.SLOC) == 1

    def test_declarators_counted_separately(self):
        units, _ = parse_text("class A { int a, b; static final int C = 1; }")
        assert count_attributes(units["A"]) == 3

    def test_outer_inner_members(self):
        units, _ = parse_text(
            "class Outer {\n"
            "  class Inner {\n"
            "    void i() {}\n"
            "  }\n"
            "  void o() {}\n"
            "}\n"
        )
        outer, inner = units["Outer"], units["Outer.Inner"]
        assert [(m.kind, m.name) for m in outer.members] == [
            (MemberKind.NESTED_TYPE, "Inner"), (MemberKind.METHOD, "o"),
        ]
        assert [(m.kind, m.name) for m in inner.members] == [(MemberKind.METHOD, "i")]
        assert inner.nesting_depth == 1

    def test_constructor_counts_nested_excluded(self):
        units, _ = parse_text(
            "class A {\n"
            "  A() {}\n"
            "  void a() {}\n"
            "  static void b() {}\n"
            "  static class N { void hidden() {} }\n"
            "}\n"
        )
        assert count_methods(units["A"]) == 3
        assert count_methods(units["A.N"]) == 1

    def test_initializers_not_counted(self):
        units, src = parse_text("class A {\n  static {\n  }\n  int x;\n}\n")
        a = units["A"]
        assert (count_methods(a), count_attributes(a)) == (0, 1)
        assert count_loc(a, src, LocMode.SLOC) == 5

    def test_trailing_comment_line_counts(self):
        units, src = parse_text("class A { // note\n  // only comment\n}\n")
        assert count_loc(units["A"], src, LocMode.SLOC) == 2
        assert count_loc(units["A"], src, LocMode.PHYSICAL) == 3

    def test_span_beyond_file_is_defect(self):
        src = SourceFile(path=Path("A.java"), text="class A {}\n")
        unit = ClassUnit(file=Path("A.java"), simple_name="A", qualified_name="A",
                         kind=ClassKind.CLASS, span=Span(1, 5))
        with pytest.raises(MetricsError):
            count_loc(unit, src, LocMode.PHYSICAL)


class TestComputeMetrics:

    def test_empty(self):
        assert compute_metrics([], {}) == []

    def test_order_preserved(self):
        units, src = parse_text("class B {}\nclass A {}\n")
        ordered = [units["B"], units["A"]]
        metrics = compute_metrics(ordered, {src.path: src})
        assert [m.class_ref for m in metrics] == ["B", "A"]

    def test_missing_source(self):
        units, _ = parse_text("class A {}")
        with pytest.raises(MetricsError, match="A"):
            compute_metrics(list(units.values()), {})


class TestStructuralInvariants:

    def test_moving_method_into_nested_class(self, pair_dir):
        before = metrics_by_name(pair_dir / "before", LocMode.SLOC)
        after = metrics_by_name(pair_dir / "after", LocMode.SLOC)
        assert after["pair.Pair"].nom == before["pair.Pair"].nom - 1
        assert after["pair.Pair.Nested"].nom == before["pair.Pair.Nested"].nom + 1

    @pytest.mark.parametrize("name", ["Point.java", "Color.java", "Generics.java", "Overloads.java"])
    def test_comment_lines_change_only_physical(self, corpus_dir, name):
        text = (corpus_dir / name).read_text(encoding="utf-8")
        lines = text.split("\n")
        # 在类头之后插入注释行
        head = next(i for i, line in enumerate(lines) if line.rstrip().endswith("{"))
        commented = "\n".join(lines[:head + 1] + ["    // x", "    /* y */", ""] + lines[head + 1:])

        base_units, base_src = parse_text(text, name)
        new_units, new_src = parse_text(commented, name)
        for qname, unit in base_units.items():
            changed = new_units[qname]
            assert count_methods(changed) == count_methods(unit)
            assert count_attributes(changed) == count_attributes(unit)
            assert count_loc(changed, new_src, LocMode.SLOC) == count_loc(unit, base_src, LocMode.SLOC)
        top = next(iter(base_units))
        assert (count_loc(new_units[top], new_src, LocMode.PHYSICAL)
                == count_loc(base_units[top], base_src, LocMode.PHYSICAL) + 3)
