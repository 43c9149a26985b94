"""
类度量数据模型
定义代码行计数模式、单个类的度量结果和度量报告
"""
from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .java_class import ClassKind


class LocMode(Enum):
    """代码行计数模式"""
    PHYSICAL = "physical"   # 类范围内的全部物理行
    SLOC = "sloc"           # 非空且非纯注释的行

    def get_display_name(self) -> str:
        """获取显示名称"""
        names = {
            LocMode.PHYSICAL: "物理行",
            LocMode.SLOC: "有效代码行",
        }
        return names.get(self, self.value)


@dataclass(frozen=True)
class ClassMetrics:
    """一个类的三项规模度量 (NOM, NOA, LOC)"""
    class_ref: str          # 限定名
    simple_name: str
    nom: int
    noa: int
    loc: int
    loc_mode: LocMode
    kind: ClassKind = ClassKind.CLASS
    file: str = ""
    start_line: int = 1
    end_line: int = 1

    @property
    def qualified_name(self) -> str:
        return self.class_ref

    @property
    def values(self) -> tuple:
        """按锥体顺序 (方法, 属性, 代码行) 返回度量值"""
        return (self.nom, self.noa, self.loc)

    def to_dict(self) -> Dict[str, Any]:
        """转换为报告条目字典"""
        return {
            'qualified_name': self.class_ref,
            'simple_name': self.simple_name,
            'kind': self.kind.value,
            'file': self.file,
            'start_line': self.start_line,
            'end_line': self.end_line,
            'nom': self.nom,
            'noa': self.noa,
            'loc': self.loc,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], loc_mode: LocMode) -> 'ClassMetrics':
        """从报告条目字典创建"""
        return cls(
            class_ref=data['qualified_name'],
            simple_name=data['simple_name'],
            nom=int(data['nom']),
            noa=int(data['noa']),
            loc=int(data['loc']),
            loc_mode=loc_mode,
            kind=ClassKind(data.get('kind', 'class')),
            file=data.get('file', ''),
            start_line=int(data.get('start_line', 1)),
            end_line=int(data.get('end_line', 1)),
        )


@dataclass(frozen=True)
class Diagnostic:
    """被跳过或失败文件的诊断信息"""
    path: str
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {'path': self.path, 'message': self.message}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Diagnostic':
        return cls(path=data['path'], message=data['message'])


@dataclass
class MetricsReport:
    """度量报告：按限定名排序的条目加诊断列表"""
    generated_for: str
    loc_mode: LocMode
    entries: List[ClassMetrics] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    def __post_init__(self):
        self.entries = sorted(self.entries, key=lambda m: m.class_ref.encode("utf-8"))

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（键顺序固定）"""
        return {
            'root': self.generated_for,
            'loc_mode': self.loc_mode.value,
            'classes': [m.to_dict() for m in self.entries],
            'diagnostics': [d.to_dict() for d in self.diagnostics],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MetricsReport':
        """从字典创建"""
        loc_mode = LocMode(data.get('loc_mode', LocMode.SLOC.value))
        return cls(
            generated_for=data.get('root', ''),
            loc_mode=loc_mode,
            entries=[ClassMetrics.from_dict(e, loc_mode) for e in data.get('classes', [])],
            diagnostics=[Diagnostic.from_dict(d) for d in data.get('diagnostics', [])],
        )
