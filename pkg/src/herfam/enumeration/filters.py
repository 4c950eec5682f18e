"""遗传族枚举的过滤原子.

原子写法：``nonempty``、``not-just-empty-set``、``compressed-wrt(x)``、
``compressed-wrt-some``、``bases-share-element``、``left-compressed``.
多个原子取合取.
"""

import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from herfam.core.family import (
    FamilyError,
    SetFamily,
    bases_share_element,
    is_compressed_wrt,
    is_left_compressed,
)

FamilyPredicate = Callable[[SetFamily], bool]

ATOM_RE = re.compile(r"^compressed-wrt\((\d+)\)$")


def _compressed_some(family: SetFamily) -> bool:
    return any(is_compressed_wrt(family, x) for x in family.ground.elements())


SIMPLE_ATOMS: dict[str, FamilyPredicate] = {
    "nonempty": lambda f: not f.is_empty(),
    "not-just-empty-set": lambda f: f.members != (0,),
    "compressed-wrt-some": _compressed_some,
    "bases-share-element": lambda f: bases_share_element(f) != 0,
    "left-compressed": is_left_compressed,
}


@dataclass(frozen=True)
class FamilyFilter:
    """已解析的过滤器（原子的合取）."""

    atoms: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for atom in self.atoms:
            parse_atom(atom)

    def __call__(self, family: SetFamily) -> bool:
        return all(parse_atom(atom)(family) for atom in self.atoms)

    def compressed_x(self) -> int | None:
        """若含 compressed-wrt(x) 原子，返回第一个 x."""
        for atom in self.atoms:
            match = ATOM_RE.match(atom)
            if match:
                return int(match.group(1))
        return None


def parse_atom(atom: str) -> FamilyPredicate:
    """原子名 → 谓词.

    Raises:
        FamilyError: 未知原子，或 compressed-wrt(x) 中 x < 1
    """
    atom = atom.strip()
    if atom in SIMPLE_ATOMS:
        return SIMPLE_ATOMS[atom]
    match = ATOM_RE.match(atom)
    if match:
        x = int(match.group(1))
        if x < 1:
            raise FamilyError(f"compressed-wrt(x) 要求 x ≥ 1: {atom!r}")

        def predicate(family: SetFamily) -> bool:
            if x > family.n:
                return False
            return is_compressed_wrt(family, x)

        return predicate
    known = ", ".join([*SIMPLE_ATOMS, "compressed-wrt(x)"])
    raise FamilyError(f"未知过滤原子 {atom!r}（可用: {known}）")


def make_filter(atoms: Sequence[str] | None) -> FamilyFilter:
    """由原子列表构造过滤器；None 或空列表表示不过滤."""
    return FamilyFilter(tuple(a.strip() for a in atoms or ()))
