"""Families of subsets of ``[n] = {1..n}``, bit-encoded.

Element ``e`` of the ground set is bit ``e - 1`` of a mask.  Members are kept
sorted by mask value, which fixes iteration order and witness output.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence, Union

__all__ = [
    "MAX_N",
    "SetFamily",
    "full_level",
    "level_union",
    "power_set",
    "is_antichain",
    "is_k_sperner",
    "canonical_partition",
    "complement_family",
    "comparability_components",
    "format_family",
    "parse_family",
    "popcount",
]

MAX_N = 30


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SetFamily:
    """A family of distinct subsets of ``[n]``; ``members`` is a sorted tuple of masks."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"n must lie in 0..{MAX_N}, got {self.n}")
        full = (1 << self.n) - 1
        members = tuple(sorted(set(self.members)))
        for mask in members:
            if mask < 0 or mask & ~full:
                raise ValueError(f"mask {mask:#x} is not a subset of [{self.n}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build from sets of 1-based ground elements, e.g. ``[[1], [1, 2]]``."""
        masks = []
        for s in sets:
            mask = 0
            for e in s:
                if not 1 <= e <= n:
                    raise ValueError(f"element {e} outside [1..{n}]")
                mask |= 1 << (e - 1)
            masks.append(mask)
        return cls(n, tuple(masks))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        if not isinstance(mask, int):
            return False
        i = bisect_left(self.members, mask)
        return i < len(self.members) and self.members[i] == mask

    def sets(self) -> list[tuple[int, ...]]:
        """Members as tuples of 1-based elements."""
        return [tuple(i + 1 for i in range(self.n) if m >> i & 1) for m in self.members]

    def union(self, other: Union["SetFamily", Iterable[int]]) -> "SetFamily":
        extra = other.members if isinstance(other, SetFamily) else tuple(other)
        return SetFamily(self.n, self.members + tuple(extra))

    def with_member(self, mask: int) -> "SetFamily":
        return SetFamily(self.n, self.members + (mask,))

    def permuted(self, perm: Sequence[int]) -> "SetFamily":
        """Relabel the ground set: element ``i`` (0-based bit) goes to ``perm[i]``."""
        out = []
        for mask in self.members:
            image = 0
            for i in range(self.n):
                if mask >> i & 1:
                    image |= 1 << perm[i]
            out.append(image)
        return SetFamily(self.n, tuple(out))

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"[{body}]"


def _check_level(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"level {k} out of range 0..{n}")


def _level_masks(n: int, k: int):
    for combo in combinations(range(n), k):
        yield sum(1 << i for i in combo)


def full_level(n: int, k: int) -> SetFamily:
    _check_level(n, k)
    return SetFamily(n, tuple(_level_masks(n, k)))


def level_union(n: int, ks: Iterable[int]) -> SetFamily:
    masks: list[int] = []
    for k in set(ks):
        _check_level(n, k)
        masks.extend(_level_masks(n, k))
    return SetFamily(n, tuple(masks))


def power_set(n: int) -> SetFamily:
    return SetFamily(n, tuple(range(1 << n)))


def _longest_chain_ending(members: Sequence[int]) -> list[int]:
    # Members sorted by size so every strict subset is processed earlier.
    order = sorted(range(len(members)), key=lambda i: popcount(members[i]))
    depth = [1] * len(members)
    for pos, i in enumerate(order):
        mi = members[i]
        for j in order[:pos]:
            mj = members[j]
            if mj != mi and mj & mi == mj and depth[j] + 1 > depth[i]:
                depth[i] = depth[j] + 1
    return depth


def is_k_sperner(family: SetFamily, k: int) -> bool:
    """True iff the family has no chain of ``k + 1`` sets."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return max(_longest_chain_ending(family.members), default=0) <= k


def is_antichain(family: SetFamily) -> bool:
    return is_k_sperner(family, 1)


def canonical_partition(family: SetFamily) -> list[SetFamily]:
    """Split into antichains by repeatedly peeling off the minimal members.

    Part ``i`` (0-based) is exactly the set of members whose longest chain
    ending at them has ``i + 1`` sets, which is the same fixed point.
    """
    depth = _longest_chain_ending(family.members)
    parts: list[list[int]] = [[] for _ in range(max(depth, default=0))]
    for mask, d in zip(family.members, depth):
        parts[d - 1].append(mask)
    return [SetFamily(family.n, tuple(p)) for p in parts]


def complement_family(family: SetFamily) -> SetFamily:
    full = family.full
    return SetFamily(family.n, tuple(full ^ m for m in family.members))


def comparability_components(family: SetFamily) -> list[SetFamily]:
    """Connected components of the comparability graph, ordered by smallest member."""
    members = family.members
    parent = list(range(len(members)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(members)), 2):
        a, b = members[i], members[j]
        if a & b == a or a & b == b:
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(members):
        groups.setdefault(find(i), []).append(m)
    comps = [SetFamily(family.n, tuple(g)) for g in groups.values()]
    comps.sort(key=lambda f: f.members[0])
    return comps


def format_family(family: SetFamily, hex_masks: bool = False) -> str:
    """Serialise to the text format: ``n=<n>`` header, then one set per line."""
    lines = [f"n={family.n}"]
    width = max(1, (family.n + 3) // 4)
    for mask, s in zip(family.members, family.sets()):
        if hex_masks:
            lines.append(f"0x{mask:0{width}X}")
        else:
            lines.append(",".join(map(str, s)) if s else "-")
    return "\n".join(lines) + "\n"


def parse_family(text: str, hex_masks: bool = False) -> SetFamily:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("family text must start with an 'n=<value>' header")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}") from None
    masks = []
    for ln in lines[1:]:
        if hex_masks:
            masks.append(int(ln, 16))
        elif ln == "-":
            masks.append(0)
        else:
            elems = [int(tok) for tok in ln.split(",")]
            if elems != sorted(set(elems)):
                raise ValueError(f"elements must be strictly increasing: {ln!r}")
            masks.append(sum(1 << (e - 1) for e in elems if 1 <= e <= n))
            if any(not 1 <= e <= n for e in elems):
                raise ValueError(f"element outside [1..{n}] in {ln!r}")
    if len(set(masks)) != len(masks):
        raise ValueError("duplicate set in family text")
    return SetFamily(n, tuple(masks))


def level_count(n: int, ks: Iterable[int]) -> int:
    return sum(comb(n, k) for k in set(ks))
