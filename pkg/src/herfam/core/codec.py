"""族的文本格式、十六进制格式与单行紧凑编码.

文本格式::

    n=3
    {}
    {1}
    {1,2}

十六进制格式：首行 ``n=<int>``，之后每行一个十六进制子集字.
紧凑编码（报告用）：``"<n>:<hex>,<hex>,..."``，空族为 ``"<n>:"``.
"""

import re
from pathlib import Path

from .family import FamilyError, GroundSet, SetFamily, SubsetWord, format_set

HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")
SET_RE = re.compile(r"^\{(.*)\}$")
HEX_RE = re.compile(r"^(?:0x)?([0-9a-fA-F]+)$")


class FamilyParseError(FamilyError):
    """族文件解析错误."""

    def __init__(self, message: str, line_no: int | None = None) -> None:
        prefix = f"第 {line_no} 行: " if line_no is not None else ""
        super().__init__(prefix + message)
        self.line_no = line_no


def _content_lines(text: str) -> list[tuple[int, str]]:
    """非空、非注释行（带 1 起始行号）."""
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((line_no, line))
    return out


def _parse_header(lines: list[tuple[int, str]]) -> GroundSet:
    if not lines:
        raise FamilyParseError("缺少首行 n=<int>", 1)
    line_no, line = lines[0]
    match = HEADER_RE.match(line)
    if not match:
        raise FamilyParseError(f"首行必须为 n=<int>: {line!r}", line_no)
    try:
        return GroundSet(int(match.group(1)))
    except FamilyError as e:
        raise FamilyParseError(str(e), line_no) from e


def _collect(
    ground: GroundSet, words: list[tuple[int, SubsetWord]], strict: bool
) -> SetFamily:
    seen: set[SubsetWord] = set()
    for line_no, word in words:
        if word in seen and strict:
            raise FamilyParseError(f"重复的集合 {format_set(word)}", line_no)
        seen.add(word)
    return SetFamily(ground, tuple(sorted(seen)))


def parse_family(text: str, strict: bool = True) -> SetFamily:
    """解析文本格式.

    Args:
        text: 文件内容
        strict: 严格模式下重复集合、非升序元素报错；宽松模式合并/排序

    Returns:
        规范 SetFamily

    Raises:
        FamilyParseError: 格式错误（带行号）
    """
    lines = _content_lines(text)
    ground = _parse_header(lines)
    words: list[tuple[int, SubsetWord]] = []
    for line_no, line in lines[1:]:
        match = SET_RE.match(line)
        if not match:
            raise FamilyParseError(f"无法解析的集合: {line!r}", line_no)
        body = match.group(1).strip()
        elements: list[int] = []
        if body:
            for token in body.split(","):
                token = token.strip()
                if not token.isdigit():
                    raise FamilyParseError(f"非法元素 {token!r}", line_no)
                elements.append(int(token))
        if strict and any(a >= b for a, b in zip(elements, elements[1:], strict=False)):
            raise FamilyParseError(f"元素必须严格升序: {line!r}", line_no)
        try:
            words.append((line_no, ground.word(elements)))
        except FamilyError as e:
            raise FamilyParseError(str(e), line_no) from e
    return _collect(ground, words, strict)


def parse_hex(text: str, strict: bool = True) -> SetFamily:
    """解析十六进制格式."""
    lines = _content_lines(text)
    ground = _parse_header(lines)
    words: list[tuple[int, SubsetWord]] = []
    for line_no, line in lines[1:]:
        match = HEX_RE.match(line)
        if not match:
            raise FamilyParseError(f"非法十六进制字: {line!r}", line_no)
        word = int(match.group(1), 16)
        try:
            ground.check_word(word)
        except FamilyError as e:
            raise FamilyParseError(str(e), line_no) from e
        words.append((line_no, word))
    return _collect(ground, words, strict)


def parse_any(text: str, strict: bool = True) -> SetFamily:
    """按内容自动识别文本或十六进制格式."""
    body = _content_lines(text)[1:]
    if any(line.startswith("{") for _, line in body):
        return parse_family(text, strict=strict)
    return parse_hex(text, strict=strict)


def read_family(path: str | Path, strict: bool = True) -> SetFamily:
    """从文件读取族（自动识别格式）."""
    return parse_any(Path(path).read_text(encoding="utf-8"), strict=strict)


def format_family(family: SetFamily) -> str:
    """输出文本格式（含结尾换行）."""
    lines = [f"n={family.n}"]
    lines.extend(format_set(w) for w in family.members)
    return "\n".join(lines) + "\n"


def format_hex(family: SetFamily) -> str:
    """输出十六进制格式（含结尾换行）."""
    lines = [f"n={family.n}"]
    lines.extend(f"{w:x}" for w in family.members)
    return "\n".join(lines) + "\n"


def encode_compact(family: SetFamily) -> str:
    """单行紧凑编码."""
    return f"{family.n}:" + ",".join(f"{w:x}" for w in family.members)


def decode_compact(text: str) -> SetFamily:
    """解析单行紧凑编码."""
    head, sep, body = text.partition(":")
    if not sep or not head.isdigit():
        raise FamilyParseError(f"非法紧凑编码: {text!r}")
    try:
        ground = GroundSet(int(head))
        words: list[SubsetWord] = []
        for token in filter(None, body.split(",")):
            if not HEX_RE.match(token):
                raise FamilyParseError(f"非法十六进制字: {token!r}")
            word = int(token, 16)
            ground.check_word(word)
            words.append(word)
    except FamilyParseError:
        raise
    except FamilyError as e:
        raise FamilyParseError(f"非法紧凑编码 {text!r}: {e}") from e
    if any(a >= b for a, b in zip(words, words[1:], strict=False)):
        raise FamilyParseError(f"紧凑编码成员必须严格递增: {text!r}")
    return SetFamily(ground, tuple(words))
