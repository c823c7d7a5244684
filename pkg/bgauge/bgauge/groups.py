import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple


class SpecSyntaxError(ValueError):
    """A group spec that does not parse; `position` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True)
class GroupType:
    """Type {n_1 <= ... <= n_l} of a simply-connected simple compact Lie group.

    Entries form a multiset: Spin(4m) has its degree 4m-1 generator twice.
    """

    entries: Tuple[int, ...]
    name: Optional[str] = field(default=None, compare=False)
    dim: Optional[int] = field(default=None, compare=False)
    custom: bool = field(default=False, compare=False)

    def __post_init__(self):
        entries = tuple(sorted(self.entries))
        if not entries:
            raise ValueError("A group type needs at least one entry")
        low = [n for n in entries if n < 2]
        if low:
            raise ValueError(f"Type entries must be >= 2, got {low[0]}")
        if not self.custom and entries[0] != 2:
            raise ValueError(f"Named group types start at 2, got {list(entries)}")
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def top(self) -> int:
        return self.entries[-1]

    @property
    def display_name(self) -> str:
        if self.name:
            return self.name
        text = "type:" + ",".join(str(n) for n in self.entries)
        if self.dim is not None:
            text += f"@dim={self.dim}"
        return text


def get_su_type(n: int) -> GroupType:
    """SU(n), n >= 2: type {2, ..., n}."""
    if n < 2:
        raise ValueError(f"SU(n) needs n >= 2, got {n}")
    return GroupType(tuple(range(2, n + 1)), f"SU({n})", n * n - 1)


def get_sp_type(n: int) -> GroupType:
    """Sp(n), n >= 1: type {2, 4, ..., 2n}."""
    if n < 1:
        raise ValueError(f"Sp(n) needs n >= 1, got {n}")
    return GroupType(tuple(range(2, 2 * n + 1, 2)), f"Sp({n})", n * (2 * n + 1))


def get_spin_type(n: int) -> GroupType:
    """
    Spin(2m+1): {2, 4, ..., 2m}. Spin(2m): {2, 4, ..., 2m-2} plus m.
    Spin(3), Spin(5), Spin(6) are SU(2), Sp(2), SU(4); Spin(4) is not simple.
    """
    if n < 3:
        raise ValueError(f"Spin(n) needs n >= 3, got {n}")
    if n == 4:
        raise ValueError("Spin(4) = SU(2) x SU(2) is not simple")
    dim = n * (n - 1) // 2
    m = n // 2
    if n % 2:
        entries = tuple(range(2, 2 * m + 1, 2))
    else:
        entries = tuple(range(2, 2 * m - 1, 2)) + (m,)
    return GroupType(entries, f"Spin({n})", dim)


EXCEPTIONAL_TYPES: Dict[str, Tuple[Tuple[int, ...], int]] = {
    "G2": ((2, 6), 14),
    "F4": ((2, 6, 8, 12), 52),
    "E6": ((2, 5, 6, 8, 9, 12), 78),
    "E7": ((2, 6, 8, 10, 12, 14, 18), 133),
    "E8": ((2, 8, 12, 14, 18, 20, 24, 30), 248),
}


def get_exceptional_type(name: str) -> GroupType:
    entries, dim = EXCEPTIONAL_TYPES[name]
    return GroupType(entries, name, dim)


CLASSICAL_FAMILIES: Dict[str, Callable[[int], GroupType]] = {
    "su": get_su_type,
    "sp": get_sp_type,
    "spin": get_spin_type,
}

_CLASSICAL = re.compile(r"^(su|sp|spin)\((\d+)\)$", re.IGNORECASE)


def lookup(name: str) -> GroupType:
    """Catalog type of a named group, e.g. "SU(5)", "spin(10)", "e8"."""
    compact = re.sub(r"\s+", "", name)
    match = _CLASSICAL.match(compact)
    if match:
        get_type = CLASSICAL_FAMILIES[match.group(1).lower()]
        return get_type(int(match.group(2)))
    if compact.upper() in EXCEPTIONAL_TYPES:
        return get_exceptional_type(compact.upper())
    raise ValueError(
        f"Unknown group: {name!r}. Available: SU(n), Sp(n), Spin(n), "
        f"{', '.join(EXCEPTIONAL_TYPES)}"
    )


def _parse_literal(text: str, start: int) -> GroupType:
    body = text[start:].rstrip()
    dim = None
    entries_text = body
    if "@" in body:
        at = body.index("@")
        entries_text = body[:at]
        dim_text = body[at + 1 :]
        if not dim_text.startswith("dim="):
            raise SpecSyntaxError("expected 'dim=' after '@'", text, start + at + 1)
        digits = dim_text[len("dim=") :]
        if not digits.isdigit():
            raise SpecSyntaxError(
                "expected a dimension", text, start + at + 1 + len("dim=")
            )
        dim = int(digits)

    entries: List[int] = []
    offset = start
    for chunk in entries_text.split(","):
        stripped = chunk.strip()
        if not stripped.isdigit():
            raise SpecSyntaxError(
                f"expected a type entry, found {stripped!r}", text, offset
            )
        value = int(stripped)
        if value < 2:
            raise SpecSyntaxError(f"type entry {value} < 2", text, offset)
        entries.append(value)
        offset += len(chunk) + 1
    return GroupType(tuple(entries), None, dim, custom=True)


def parse_spec(text: str) -> GroupType:
    """Parse a --group value: a catalog name or a literal "type:2,4,6[@dim=D]"."""
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped:
        raise SpecSyntaxError("empty group spec", text, 0)
    if stripped.lower().startswith("type:"):
        return _parse_literal(text, lead + len("type:"))
    try:
        return lookup(stripped)
    except ValueError as e:
        # reject bad parameters (SU(1), Spin(4)) with their own message
        if _CLASSICAL.match(re.sub(r"\s+", "", stripped)):
            raise
        raise SpecSyntaxError(str(e), text, lead) from e


def dimension_check(t: GroupType) -> bool:
    """Sum of (2n_i - 1) equals the manifold dimension."""
    if t.dim is None:
        raise ValueError(f"{t.display_name} carries no dimension to check")
    return sum(2 * n - 1 for n in t.entries) == t.dim


def catalog_names(max_su: int = 12, max_sp: int = 8, max_spin: int = 16) -> List[str]:
    names = [f"SU({n})" for n in range(2, max_su + 1)]
    names += [f"Sp({n})" for n in range(1, max_sp + 1)]
    names += [f"Spin({n})" for n in range(7, max_spin + 1)]
    names += list(EXCEPTIONAL_TYPES)
    return names


def catalog_groups(
    max_rank: Optional[int] = None, names: Optional[Sequence[str]] = None
) -> List[GroupType]:
    groups = [lookup(name) for name in (names or catalog_names())]
    if max_rank is not None:
        groups = [g for g in groups if g.rank <= max_rank]
    return groups
