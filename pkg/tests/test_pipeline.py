"""流水线执行器测试"""
import logging

from src.core.pipeline import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, PipelineRunner, select_metrics, summary_line
from src.models.config import RunConfig
from src.models.metrics import ClassMetrics, LocMode


def metrics(name):
    return ClassMetrics(class_ref=name, simple_name=name.rsplit(".", 1)[-1],
                        nom=1, noa=2, loc=3, loc_mode=LocMode.SLOC)


class TestSelect:

    def test_no_patterns_selects_all(self):
        ms = [metrics("a.A"), metrics("b.B")]
        assert select_metrics(ms, ()) == ms

    def test_simple_and_qualified(self):
        ms = [metrics("a.Alpha"), metrics("b.Beta"), metrics("a.Gamma")]
        assert [m.class_ref for m in select_metrics(ms, ("Beta", "a.G*"))] == ["b.Beta", "a.Gamma"]

    def test_case_sensitive(self):
        assert select_metrics([metrics("a.Alpha")], ("alpha",)) == []


def test_summary_line():
    assert summary_line(metrics("p.Q")) == "p.Q  NOM=1 NOA=2 LOC=3"


class TestRunner:

    def test_callbacks_and_result(self, tmp_path):
        summaries, diagnostics = [], []
        (tmp_path / "src").mkdir()
        (tmp_path / "src" / "A.java").write_text("class A { int x; }\n", encoding="utf-8")
        (tmp_path / "src" / "B.java").write_text("class B {\n", encoding="utf-8")

        runner = PipelineRunner()
        runner.set_on_class_summary(summaries.append)
        runner.set_on_diagnostic(diagnostics.append)
        result = runner.run(RunConfig(root=tmp_path / "src", out_dir=tmp_path / "out", export_xml=True))

        assert result.exit_code == EXIT_OK
        assert summaries == result.summary == ["A  NOM=0 NOA=1 LOC=1"]
        assert [d.path for d in diagnostics] == ["B.java"]
        assert sorted(p.name for p in result.written) == [
            "A.svg", "grid.svg", "report.csv", "report.json", "structure.xml",
        ]

    def test_usage_error(self, tmp_path):
        result = PipelineRunner().run(RunConfig(root=tmp_path / "absent"))
        assert result.exit_code == EXIT_USAGE
        assert result.written == []

    def test_strict_failure(self, tmp_path):
        (tmp_path / "B.java").write_text("}\n", encoding="utf-8")
        result = PipelineRunner().run(RunConfig(root=tmp_path, out_dir=tmp_path / "out", strict=True))
        assert result.exit_code == EXIT_FAILURE

    def test_loc_mode_logged_by_display_name(self, tmp_path, caplog):
        (tmp_path / "A.java").write_text("class A {}\n", encoding="utf-8")
        config = RunConfig(root=tmp_path, out_dir=tmp_path / "out", loc_mode=LocMode.PHYSICAL,
                           formats=("json",))
        with caplog.at_level(logging.INFO, logger="src.core.pipeline"):
            assert PipelineRunner().run(config).exit_code == EXIT_OK
        assert "行数口径: 物理行" in caplog.text
