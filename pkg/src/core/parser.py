"""
Java 结构解析模块
在记号流上识别类型声明和直接成员的声明头，生成 ClassUnit 列表
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..models.java_class import ClassKind, ClassUnit, Member, MemberKind, SourceFile, Span
from .errors import PathLike, SourceDecodeError, SourceReadError
from .lexer import IDENT, OP, Token, code_tokens, match_brackets, tokenize


logger = logging.getLogger(__name__)

_UTF8_BOM = b"\xef\xbb\xbf"

MODIFIERS = frozenset({
    "public", "protected", "private", "static", "final", "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default", "sealed",
})

TYPE_KEYWORDS = {
    "class": ClassKind.CLASS,
    "interface": ClassKind.INTERFACE,
    "enum": ClassKind.ENUM,
}


def normalize_newlines(text: str) -> str:
    """CRLF / CR 统一为 LF"""
    return text.replace("\r\n", "\n").replace("\r", "\n")


def load_source(path: PathLike) -> SourceFile:
    """
    读取并规范化一个源文件

    Args:
        path: 文件路径

    Returns:
        换行已规范化的 SourceFile

    Raises:
        SourceReadError: 文件无法读取
        SourceDecodeError: 内容不是合法的 UTF-8
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise SourceReadError(path, e.strerror or str(e)) from e

    skipped = len(_UTF8_BOM) if raw.startswith(_UTF8_BOM) else 0
    try:
        text = raw[skipped:].decode("utf-8")
    except UnicodeDecodeError as e:
        raise SourceDecodeError(path, e.start + skipped) from e

    return SourceFile(path=path, text=normalize_newlines(text))


def parse_source(src: SourceFile) -> List[ClassUnit]:
    """
    解析一个源文件中的全部类、接口和枚举（含嵌套和局部类型）

    Args:
        src: 已加载的源文件

    Returns:
        按声明先后（外层在前）排列的 ClassUnit 列表

    Raises:
        JavaParseError: 括号不配对
    """
    return _StructureParser(src).parse()


class _StructureParser:
    """单文件结构解析器"""

    def __init__(self, src: SourceFile):
        self.src = src
        self.tokens: List[Token] = code_tokens(tokenize(src.text))
        self.pairs: Dict[int, int] = match_brackets(self.tokens, src.path)
        self.units: List[Optional[ClassUnit]] = []
        # (外层限定名, 简单名) -> 已出现的局部类型个数
        self.local_counts: Dict[Tuple[str, str], int] = {}

    def parse(self) -> List[ClassUnit]:
        tokens = self.tokens
        end = len(tokens)
        package = ""
        i = 0
        while i < end:
            if tokens[i].is_op(";"):
                i += 1
                continue
            j = self._skip_modifiers(i, end)
            if j >= end:
                break
            head = tokens[j]
            if head.is_word("package"):
                stop = self._find_op(j, end, ";")
                package = "".join(t.text for t in tokens[j + 1:stop])
                i = stop + 1
            elif head.is_word("import"):
                i = self._find_op(j, end, ";") + 1
            elif self._is_type_start(j):
                parsed = self._parse_type(j, package, 0)
                i = parsed[0] + 1 if parsed else j + 1
            else:
                # 模块声明等无关内容
                i = self._skip_unknown(j, end)
        return [unit for unit in self.units if unit is not None]

    # ---- 记号导航 ----

    def _find_op(self, i: int, hi: int, text: str) -> int:
        """在括号深度 0 处查找运算符，找不到时返回 hi"""
        tokens = self.tokens
        while i < hi:
            token = tokens[i]
            if token.is_op(text):
                return i
            if token.kind == OP and token.text in "([{":
                i = self.pairs[i] + 1
                continue
            i += 1
        return hi

    def _skip_unknown(self, i: int, hi: int) -> int:
        """跳过一个无法识别的声明，返回其后的位置"""
        tokens = self.tokens
        while i < hi:
            token = tokens[i]
            if token.is_op(";"):
                return i + 1
            if token.is_op("{"):
                return self.pairs[i] + 1
            if token.is_op("(") or token.is_op("["):
                i = self.pairs[i] + 1
                continue
            i += 1
        return hi

    def _skip_modifiers(self, i: int, hi: int) -> int:
        """跳过注解和修饰符，返回第一个其他记号的位置"""
        tokens = self.tokens
        while i < hi:
            token = tokens[i]
            if token.is_op("@"):
                if i + 1 < hi and tokens[i + 1].is_word("interface"):
                    return i
                i = self._skip_annotation(i, hi)
            elif token.kind == IDENT and token.text in MODIFIERS:
                i += 1
            elif (token.is_word("non") and i + 2 < hi
                  and tokens[i + 1].is_op("-") and tokens[i + 2].is_word("sealed")):
                i += 3
            else:
                return i
        return i

    def _skip_annotation(self, i: int, hi: int) -> int:
        """跳过从 '@' 开始的一个注解（含参数），返回其后的位置"""
        tokens = self.tokens
        i += 1
        if i < hi and tokens[i].kind == IDENT:
            i += 1
        while i + 1 < hi and tokens[i].is_op(".") and tokens[i + 1].kind == IDENT:
            i += 2
        if i < hi and tokens[i].is_op("("):
            i = self.pairs[i] + 1
        return i

    def _generic_end(self, i: int, hi: int) -> Optional[int]:
        """
        i 处的 '<' 若开始一段类型实参，返回配对 '>' 之后的位置，否则返回 None

        类型实参里只允许名字、'.'、','、'?'、'&'、数组括号和类型注解。
        """
        tokens = self.tokens
        depth = 0
        while i < hi:
            token = tokens[i]
            if token.is_op("<"):
                depth += 1
            elif token.is_op(">"):
                depth -= 1
                if depth == 0:
                    return i + 1
            elif token.is_op("@"):
                i = self._skip_annotation(i, hi)
                continue
            elif token.is_op("["):
                if self.pairs[i] != i + 1:
                    return None
                i = self.pairs[i] + 1
                continue
            elif token.kind != IDENT and not (token.kind == OP and token.text in ".,?&"):
                return None
            i += 1
        return None

    def _skip_angles(self, i: int, hi: int) -> int:
        """跳过从 i 开始的 <...> 类型参数"""
        tokens = self.tokens
        depth = 0
        while i < hi:
            token = tokens[i]
            if token.is_op("<"):
                depth += 1
            elif token.is_op(">"):
                depth -= 1
                if depth == 0:
                    return i + 1
            i += 1
        return hi

    def _is_type_start(self, j: int) -> bool:
        tokens = self.tokens
        end = len(tokens)
        token = tokens[j]
        if token.is_op("@"):
            return (j + 2 < end and tokens[j + 1].is_word("interface")
                    and tokens[j + 2].kind == IDENT)
        if token.kind != IDENT:
            return False
        if j > 0 and tokens[j - 1].is_op("."):
            # Foo.class 之类的类字面量
            return False
        if token.text in TYPE_KEYWORDS:
            return j + 1 < end and tokens[j + 1].kind == IDENT
        if token.text == "record":
            return (j + 2 < end and tokens[j + 1].kind == IDENT
                    and (tokens[j + 2].is_op("(") or tokens[j + 2].is_op("<")))
        return False

    def _find_body(self, i: int) -> Optional[int]:
        """查找类型声明头之后的类体左花括号"""
        tokens = self.tokens
        while i < len(tokens):
            token = tokens[i]
            if token.is_op("{"):
                return i
            if token.is_op("(") or token.is_op("["):
                i = self.pairs[i] + 1
                continue
            if token.kind == OP and token.text in ";)]}=":
                return None
            i += 1
        return None

    # ---- 类型与成员 ----

    def _parse_type(self, k: int, prefix: str, depth: int,
                    local: bool = False) -> Optional[Tuple[int, str]]:
        """
        解析从关键字位置 k 开始的类型声明

        局部类型的限定名按 javac 的习惯带序号：同一外层中第 n 个名为
        Helper 的局部类型记作 Outer.nHelper。

        Returns:
            (右花括号下标, 简单名)；不是类型声明时返回 None
        """
        tokens = self.tokens
        if tokens[k].is_op("@"):
            kind = ClassKind.INTERFACE
            name_index = k + 2
        else:
            kind = TYPE_KEYWORDS.get(tokens[k].text, ClassKind.CLASS)
            name_index = k + 1
        name = tokens[name_index].text
        body = self._find_body(name_index + 1)
        if body is None:
            logger.debug("%s:%d: '%s' 后没有类体，忽略", self.src.path, tokens[k].line, name)
            return None
        close = self.pairs[body]
        local_name = name
        if local:
            ordinal = self.local_counts.get((prefix, name), 0) + 1
            self.local_counts[(prefix, name)] = ordinal
            local_name = f"{ordinal}{name}"
        qualified = f"{prefix}.{local_name}" if prefix else local_name
        logger.debug("%s:%d: %s %s", self.src.path, tokens[k].line,
                     kind.get_display_name(), qualified)

        # 先占位，保证外层类排在嵌套类之前
        slot = len(self.units)
        self.units.append(None)
        members = self._parse_body(body + 1, close, name, qualified, depth, kind)
        self.units[slot] = ClassUnit(
            file=self.src.path,
            simple_name=name,
            qualified_name=qualified,
            kind=kind,
            span=Span(tokens[k].line, tokens[close].line),
            nesting_depth=depth,
            members=tuple(members),
        )
        return close, name

    def _parse_body(self, lo: int, hi: int, class_name: str, qualified: str,
                    depth: int, kind: ClassKind) -> List[Member]:
        """解析类体 (lo, hi) 中的直接成员"""
        tokens = self.tokens
        members: List[Member] = []
        i = lo
        if kind is ClassKind.ENUM:
            i = self._parse_enum_constants(lo, hi, qualified, depth, members)

        while i < hi:
            if tokens[i].is_op(";"):
                i += 1
                continue
            start = i
            j = self._skip_modifiers(i, hi)
            if j >= hi:
                break

            if self._is_type_start(j):
                parsed = self._parse_type(j, qualified, depth + 1)
                if parsed is None:
                    i = self._skip_unknown(j, hi)
                    continue
                close, name = parsed
                members.append(Member(MemberKind.NESTED_TYPE, name,
                                      Span(tokens[start].line, tokens[close].line)))
                i = close + 1
                continue

            term = self._header_end(j, hi)
            if term >= hi:
                logger.debug("%s:%d: 不完整的成员声明", self.src.path, tokens[start].line)
                break

            if tokens[term].is_op("{") and term == j:
                # static {...} 或 {...}
                close = self.pairs[term]
                self._scan_block(term + 1, close, qualified, depth)
                members.append(Member(MemberKind.INITIALIZER, "",
                                      Span(tokens[start].line, tokens[close].line)))
                i = close + 1
                continue

            member_kind, names = self._classify(j, term, class_name)
            if tokens[term].is_op("{"):
                end = self.pairs[term]
                self._scan_block(term + 1, end, qualified, depth)
            else:
                end = term
                self._scan_block(j, term, qualified, depth)
            span = Span(tokens[start].line, tokens[end].line)
            members.extend(Member(member_kind, name, span) for name in names)
            i = end + 1
        return members

    def _parse_enum_constants(self, lo: int, hi: int, qualified: str, depth: int,
                              members: List[Member]) -> int:
        """解析枚举常量列表，返回普通成员开始的位置"""
        tokens = self.tokens
        i = lo
        while i < hi:
            token = tokens[i]
            if token.is_op(";"):
                return i + 1
            if token.is_op(","):
                i += 1
                continue
            if token.is_op("@"):
                after = self._skip_modifiers(i, hi)
                if after == i:
                    return i
                i = after
                continue
            if token.kind != IDENT:
                return i
            start = i
            i += 1
            if i < hi and tokens[i].is_op("("):
                i = self.pairs[i] + 1
            if i < hi and tokens[i].is_op("{"):
                # 常量类体是匿名类，只查找其中的具名类型
                close = self.pairs[i]
                self._scan_block(i + 1, close, qualified, depth)
                i = close + 1
            members.append(Member(MemberKind.ENUM_CONSTANT, token.text,
                                  Span(tokens[start].line, tokens[i - 1].line)))
        return hi

    def _header_end(self, j: int, hi: int) -> int:
        """
        查找成员声明头的结束位置：';' 或方法体 '{'

        出现 '=' 后（或注解元素的 default 之后）花括号属于初始化表达式。
        """
        tokens = self.tokens
        in_initializer = False
        seen_params = False
        k = j
        while k < hi:
            token = tokens[k]
            if token.kind == OP:
                if token.text == ";":
                    return k
                if token.text == "{":
                    if not in_initializer:
                        return k
                    k = self.pairs[k] + 1
                    continue
                if token.text in "([":
                    seen_params = seen_params or token.text == "("
                    k = self.pairs[k] + 1
                    continue
                if token.text == "=":
                    in_initializer = True
            elif token.is_word("default") and seen_params:
                in_initializer = True
            k += 1
        return hi

    def _classify(self, j: int, term: int, class_name: str) -> Tuple[MemberKind, List[str]]:
        """根据声明头判断成员种类，字段返回每个声明符的名字"""
        tokens = self.tokens
        type_start = j
        if type_start < term and tokens[type_start].is_op("<"):
            type_start = self._skip_angles(type_start, term)

        paren = None
        k = type_start
        while k < term:
            token = tokens[k]
            if token.is_op("="):
                break
            if token.is_op("@"):
                # 类型注解 @Size(max = 3) 的括号不是参数列表
                k = self._skip_annotation(k, term)
                continue
            if token.is_op("<"):
                k = self._skip_angles(k, term)
                continue
            if token.is_op("("):
                paren = k
                break
            if token.is_op("["):
                k = self.pairs[k] + 1
                continue
            k += 1

        if paren is not None and paren > type_start and tokens[paren - 1].kind == IDENT:
            name = tokens[paren - 1].text
            has_return_type = paren - 1 > type_start
            if not has_return_type and name == class_name:
                return MemberKind.CONSTRUCTOR, [name]
            return MemberKind.METHOD, [name]

        if tokens[term].is_op("{"):
            # record 的紧凑构造方法：Name { ... }
            if term - type_start == 1 and tokens[type_start].is_word(class_name):
                return MemberKind.CONSTRUCTOR, [class_name]
            return MemberKind.INITIALIZER, [""]

        return MemberKind.FIELD_DECLARATOR, self._declarator_names(type_start, term)

    def _declarator_names(self, lo: int, hi: int) -> List[str]:
        """取出字段声明中每个声明符的名字"""
        tokens = self.tokens
        names: List[str] = []
        current: Optional[str] = None
        angle = 0
        in_initializer = False
        k = lo
        while k < hi:
            token = tokens[k]
            if token.kind == OP and token.text in "([{":
                k = self.pairs[k] + 1
                continue
            if in_initializer:
                if (token.is_op("<") and k > lo
                        and (tokens[k - 1].kind == IDENT or tokens[k - 1].is_op("."))):
                    # new HashMap<String, Integer>() 或 Collections.<K, V>emptyMap()
                    after = self._generic_end(k, hi)
                    if after is not None:
                        k = after
                        continue
                if token.is_op(","):
                    in_initializer = False
            elif token.kind == IDENT:
                current = token.text
            elif token.is_op("<"):
                angle += 1
            elif token.is_op(">"):
                angle = max(0, angle - 1)
            elif token.is_op("=") or (token.is_op(",") and angle == 0):
                if current is not None:
                    names.append(current)
                current = None
                in_initializer = token.is_op("=")
            k += 1
        if current is not None and not in_initializer:
            names.append(current)
        return names

    def _scan_block(self, lo: int, hi: int, qualified: str, depth: int):
        """在方法体、初始化块或初始化表达式中查找局部具名类型"""
        i = lo
        while i < hi:
            if self._is_type_start(i):
                parsed = self._parse_type(i, qualified, depth + 1, local=True)
                if parsed is not None:
                    i = parsed[0] + 1
                    continue
            i += 1
