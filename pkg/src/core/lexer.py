"""
Java 词法扫描模块
把源码切分为记号，跳过注释、字符串和字符字面量，并完成括号配对
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List

from .errors import JavaParseError, PathLike


IDENT = "IDENT"
NUMBER = "NUMBER"
STRING = "STRING"
CHAR = "CHAR"
OP = "OP"
COMMENT = "COMMENT"

# 顺序即优先级：文本块先于普通字符串，注释先于除号
_TOKEN_SPEC = [
    ("TEXT_BLOCK", r'"""(?:\\.|[^\\])*?"""'),
    (STRING, r'"(?:\\.|[^"\\\n])*"'),
    (CHAR, r"'(?:\\.|[^'\\\n])*'"),
    ("LINE_COMMENT", r"//[^\n]*"),
    ("BLOCK_COMMENT", r"/\*[\s\S]*?\*/"),
    ("OPEN_COMMENT", r"/\*[\s\S]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[^\S\n]+"),
    (IDENT, r"(?:[^\W\d]|\$)[\w$]*"),
    (NUMBER, r"\.?\d[\w.]*"),
    (OP, r"\.\.\.|::|->|[^\s\w]"),
]

_MASTER = re.compile(
    "|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC),
    re.DOTALL,
)

_KIND_ALIASES = {
    "TEXT_BLOCK": STRING,
    "LINE_COMMENT": COMMENT,
    "BLOCK_COMMENT": COMMENT,
    "OPEN_COMMENT": COMMENT,
}

OPENERS = {"(": ")", "[": "]", "{": "}"}
CLOSERS = {v: k for k, v in OPENERS.items()}


@dataclass(frozen=True)
class Token:
    """一个记号及其所在的物理行范围"""
    kind: str
    text: str
    line: int
    end_line: int

    def is_op(self, text: str) -> bool:
        return self.kind == OP and self.text == text

    def is_word(self, text: str) -> bool:
        return self.kind == IDENT and self.text == text


def tokenize(text: str) -> List[Token]:
    """
    把规范化后的源码切分为记号

    Args:
        text: 只含 LF 换行的源码

    Returns:
        记号列表（含注释，不含空白）
    """
    tokens: List[Token] = []
    line = 1
    for match in _MASTER.finditer(text):
        kind = match.lastgroup
        value = match.group()
        if kind == "NEWLINE":
            line += 1
            continue
        newlines = value.count("\n")
        if kind != "SPACE":
            tokens.append(Token(_KIND_ALIASES.get(kind, kind), value, line, line + newlines))
        line += newlines
    return tokens


def code_tokens(tokens: Iterable[Token]) -> List[Token]:
    """去掉注释记号"""
    return [t for t in tokens if t.kind != COMMENT]


@lru_cache(maxsize=256)
def code_line_numbers(text: str) -> frozenset:
    """
    返回含有至少一个非注释记号的行号集合

    跨行的字符串（文本块）覆盖的每一行都算代码行。
    """
    lines = set()
    for token in tokenize(text):
        if token.kind != COMMENT:
            lines.update(range(token.line, token.end_line + 1))
    return frozenset(lines)


def match_brackets(tokens: List[Token], path: PathLike = "<memory>") -> Dict[int, int]:
    """
    配对 ()、[]、{}

    Args:
        tokens: 不含注释的记号列表
        path: 用于错误信息的文件路径

    Returns:
        开括号下标与闭括号下标的双向映射

    Raises:
        JavaParseError: 多余的闭括号、类型不符或未闭合的开括号
    """
    pairs: Dict[int, int] = {}
    stack: List[int] = []
    for index, token in enumerate(tokens):
        if token.kind != OP:
            continue
        if token.text in OPENERS:
            stack.append(index)
        elif token.text in CLOSERS:
            if not stack:
                raise JavaParseError(path, token.line, f"多余的 '{token.text}'")
            opener = stack.pop()
            if tokens[opener].text != CLOSERS[token.text]:
                raise JavaParseError(
                    path, token.line,
                    f"'{token.text}' 与第 {tokens[opener].line} 行的 '{tokens[opener].text}' 不匹配",
                )
            pairs[opener] = index
            pairs[index] = opener
    if stack:
        last = tokens[stack[-1]]
        raise JavaParseError(path, last.line, f"'{last.text}' 未闭合")
    return pairs
