"""共享 fixtures."""

from collections.abc import Callable
from pathlib import Path

import pytest

from herfam.core.family import SetFamily, make_family, power_set, singletons_with_empty


@pytest.fixture
def power2() -> SetFamily:
    """2^[2]."""
    return power_set(2)


@pytest.fixture
def power3() -> SetFamily:
    """2^[3]."""
    return power_set(3)


@pytest.fixture
def tight3() -> SetFamily:
    """{∅,{1},{2},{3}}."""
    return singletons_with_empty(3)


@pytest.fixture
def triangle() -> SetFamily:
    """{{1,2},{1,3},{2,3}}：相交但没有公共元素."""
    return make_family(3, [[1, 2], [1, 3], [2, 3]])


@pytest.fixture
def family_file(tmp_path: Path) -> Callable[[str], Path]:
    """把族文本写入临时文件."""

    def write(text: str, name: str = "family.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
