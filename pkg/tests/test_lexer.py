"""词法扫描与括号配对测试"""
import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import JavaParseError
from src.core.lexer import (
    CHAR, COMMENT, IDENT, NUMBER, OP, STRING,
    code_line_numbers, code_tokens, match_brackets, tokenize,
)


def kinds(text):
    return [(t.kind, t.text) for t in tokenize(text)]


class TestTokenize:

    def test_basic_declaration(self):
        assert kinds("int x = 42;") == [
            (IDENT, "int"), (IDENT, "x"), (OP, "="), (NUMBER, "42"), (OP, ";"),
        ]

    def test_line_numbers(self):
        tokens = tokenize("a\n\n  b\n")
        assert [(t.text, t.line) for t in tokens] == [("a", 1), ("b", 3)]

    def test_comments_and_strings_are_single_tokens(self):
        tokens = tokenize('x = "{"; // }\n/* { */ y')
        assert [t.kind for t in tokens] == [IDENT, OP, STRING, OP, COMMENT, COMMENT, IDENT]
        assert tokens[-1].line == 2

    def test_block_comment_spans_lines(self):
        token = tokenize("/* a\nb\nc */")[0]
        assert (token.kind, token.line, token.end_line) == (COMMENT, 1, 3)

    def test_unterminated_block_comment_runs_to_end(self):
        tokens = tokenize("int a; /* never closed {\n}")
        assert tokens[-1].kind == COMMENT
        assert tokens[-1].end_line == 2

    def test_escaped_quote_in_string(self):
        tokens = tokenize(r'"a \" }" + b')
        assert tokens[0].kind == STRING
        assert tokens[0].text == r'"a \" }"'

    def test_char_literals(self):
        assert [t.kind for t in tokenize("'}' '\\'' '{'")] == [CHAR] * 3

    def test_text_block(self):
        tokens = tokenize('s = """\n  "}"\n  """;')
        block = tokens[2]
        assert block.kind == STRING
        assert (block.line, block.end_line) == (1, 3)

    def test_multi_char_operators(self):
        assert [t.text for t in tokenize("a -> b :: c ...")] == ["a", "->", "b", "::", "c", "..."]

    def test_dollar_and_unicode_identifiers(self):
        assert kinds("$x größe") == [(IDENT, "$x"), (IDENT, "größe")]


class TestCodeLines:

    def test_blank_and_comment_lines_excluded(self):
        text = "a\n\n// c\n/* d */\nb /* e */\n"
        assert code_line_numbers(text) == frozenset({1, 5})

    def test_text_block_lines_all_count(self):
        text = 's = """\n\n""";\n'
        assert code_line_numbers(text) == frozenset({1, 2, 3})


class TestMatchBrackets:

    def test_pairs_are_two_way(self):
        tokens = code_tokens(tokenize("f(a[1]) { }"))
        pairs = match_brackets(tokens)
        assert pairs[1] == 6 and pairs[6] == 1
        assert pairs[3] == 5
        assert pairs[7] == 8

    def test_stray_closer(self):
        with pytest.raises(JavaParseError) as info:
            match_brackets(code_tokens(tokenize("a\n}")), "X.java")
        assert info.value.line == 2
        assert str(info.value).startswith("X.java:2:")

    def test_mismatch(self):
        with pytest.raises(JavaParseError) as info:
            match_brackets(code_tokens(tokenize("{\n(\n}")))
        assert info.value.line == 3

    def test_unclosed_reports_last_opener(self):
        with pytest.raises(JavaParseError) as info:
            match_brackets(code_tokens(tokenize("{\n  {\n    (\n")))
        assert info.value.line == 3


_noise = st.sampled_from([
    '"{"', '"}"', "'{'", "'}'", "// { }\n", "/* } { */", '"\\"}"', "x", " ", "\n", ";",
])


class TestBraceNeutrality:

    @given(st.lists(_noise, max_size=30))
    @settings(max_examples=200)
    def test_literals_and_comments_never_unbalance(self, pieces):
        """字符串、字符和注释中的括号不影响配对"""
        text = "class A {\n" + "".join(pieces) + "\n}\n"
        tokens = code_tokens(tokenize(text))
        pairs = match_brackets(tokens)
        braces = [i for i, t in enumerate(tokens) if t.kind == OP and t.text in "{}"]
        assert len(braces) == 2
        assert pairs[braces[0]] == braces[1]

    @given(st.text(max_size=200))
    @settings(max_examples=300)
    def test_tokenize_never_crashes(self, text):
        tokens = tokenize(text)
        assert all(t.line <= t.end_line for t in tokens)
        try:
            match_brackets(code_tokens(tokens))
        except JavaParseError:
            pass
