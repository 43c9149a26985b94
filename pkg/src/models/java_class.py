"""
Java 类结构数据模型
定义源文件、行范围、类单元和成员的数据结构
"""
from enum import Enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Tuple


class ClassKind(Enum):
    """类型声明种类枚举"""
    CLASS = "class"
    INTERFACE = "interface"
    ENUM = "enum"

    def get_display_name(self) -> str:
        """获取显示名称"""
        names = {
            ClassKind.CLASS: "类",
            ClassKind.INTERFACE: "接口",
            ClassKind.ENUM: "枚举",
        }
        return names.get(self, self.value)


class MemberKind(Enum):
    """直接成员种类枚举"""
    METHOD = "method"                       # 普通方法
    CONSTRUCTOR = "constructor"             # 构造方法
    FIELD_DECLARATOR = "field_declarator"   # 字段声明符（每个名字一个）
    ENUM_CONSTANT = "enum_constant"         # 枚举常量
    NESTED_TYPE = "nested_type"             # 嵌套类型
    INITIALIZER = "initializer"             # 初始化块


@dataclass(frozen=True)
class Span:
    """物理行范围，1 起始，两端包含"""
    start_line: int
    end_line: int

    def __post_init__(self):
        if self.start_line < 1 or self.end_line < self.start_line:
            raise ValueError(f"非法行范围: {self.start_line}-{self.end_line}")

    @property
    def line_total(self) -> int:
        """范围内的物理行数"""
        return self.end_line - self.start_line + 1

    def contains(self, other: "Span") -> bool:
        """是否完整包含另一个范围"""
        return self.start_line <= other.start_line and other.end_line <= self.end_line

    def to_text(self) -> str:
        return f"{self.start_line}-{self.end_line}"

    @classmethod
    def from_text(cls, text: str) -> "Span":
        """从 "起始-结束" 文本解析"""
        start, _, end = text.partition("-")
        return cls(int(start), int(end))


@dataclass(frozen=True)
class SourceFile:
    """已加载并规范化换行的源文件"""
    path: Path
    text: str
    language: str = "java"

    @property
    def line_count(self) -> int:
        """物理行数；空文件为 0"""
        if not self.text:
            return 0
        count = self.text.count("\n")
        return count if self.text.endswith("\n") else count + 1


@dataclass(frozen=True)
class Member:
    """类的直接成员"""
    kind: MemberKind
    name: str
    span: Span

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            'kind': self.kind.value,
            'name': self.name,
            'lines': self.span.to_text(),
        }


@dataclass(frozen=True)
class ClassUnit:
    """一个已解析的类、接口或枚举"""
    file: Path
    simple_name: str
    qualified_name: str
    kind: ClassKind
    span: Span
    nesting_depth: int = 0
    members: Tuple[Member, ...] = field(default_factory=tuple)

    def members_of(self, *kinds: MemberKind) -> List[Member]:
        """按种类筛选直接成员"""
        return [m for m in self.members if m.kind in kinds]

    @property
    def sort_key(self) -> bytes:
        """按限定名字节序排序的键"""
        return self.qualified_name.encode("utf-8")
