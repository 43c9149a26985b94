"""
度量报告模块
把度量结果序列化为 JSON 或 CSV，供其他工具使用
"""
import csv
import io
import json
from typing import Iterable, List

from ..models.metrics import ClassMetrics, Diagnostic, LocMode, MetricsReport


CSV_COLUMNS = (
    "qualified_name", "simple_name", "kind", "file",
    "start_line", "end_line", "nom", "noa", "loc",
)


def build_report(root: str, loc_mode: LocMode, metrics: Iterable[ClassMetrics],
                 diagnostics: Iterable[Diagnostic] = ()) -> MetricsReport:
    """组装报告，条目按限定名字节序排列"""
    return MetricsReport(
        generated_for=root,
        loc_mode=loc_mode,
        entries=list(metrics),
        diagnostics=list(diagnostics),
    )


def _to_json(r: MetricsReport) -> str:
    return json.dumps(r.to_dict(), ensure_ascii=False, indent=2) + "\n"


def _to_csv(r: MetricsReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for entry in r.entries:
        row = entry.to_dict()
        writer.writerow([row[column] for column in CSV_COLUMNS])
    return buffer.getvalue()


_SERIALIZERS = {"json": _to_json, "csv": _to_csv}
REPORT_FORMATS = tuple(_SERIALIZERS)


def write_report(r: MetricsReport, format: str) -> str:
    """
    序列化报告

    Args:
        r: 报告
        format: "json" 或 "csv"

    Returns:
        逐字节确定的文本，LF 换行
    """
    if format not in _SERIALIZERS:
        raise ValueError(f"不支持的报告格式: {format}")
    return _SERIALIZERS[format](r)


def read_report_json(text: str) -> MetricsReport:
    """从 JSON 报告文本恢复 MetricsReport"""
    return MetricsReport.from_dict(json.loads(text))


def read_report_csv(text: str) -> List[dict]:
    """读取 CSV 报告为字典列表（数值列转为 int）"""
    rows = list(csv.DictReader(io.StringIO(text)))
    for row in rows:
        for column in ("start_line", "end_line", "nom", "noa", "loc"):
            row[column] = int(row[column])
    return rows
