"""
测试公共设施
把项目根目录加入 sys.path，并提供夹具目录与源码构造工具
"""
import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from src.core.parser import parse_source  # noqa: E402
from src.models.java_class import SourceFile  # noqa: E402

FIXTURES = Path(__file__).resolve().parent / "fixtures"
CORPUS = FIXTURES / "corpus"
PAIR = FIXTURES / "pair"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture
def pair_dir() -> Path:
    return PAIR


@pytest.fixture(scope="session")
def manifest() -> dict:
    with open(CORPUS / "manifest.json", "r", encoding="utf-8") as f:
        return json.load(f)


def parse_text(text: str, name: str = "Snippet.java"):
    """解析内存中的源码，返回 {限定名: ClassUnit}"""
    src = SourceFile(path=Path(name), text=text)
    return {unit.qualified_name: unit for unit in parse_source(src)}, src
