"""Finite strict partial orders, the named posets and the two gluing operators.

Elements are the indices ``0..m-1``.  The order is stored transitively
closed, one bitmask per element (``up[x]`` holds every ``y`` with ``x < y``),
so an embedding test is a single bit lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

__all__ = [
    "Poset",
    "chain",
    "antichain",
    "vee",
    "wedge",
    "n_poset",
    "butterfly",
    "butterfly_plus",
    "butterfly_plusplus",
    "diamond",
    "multilevel",
    "empty",
    "named",
    "otimes",
    "oplus",
    "height",
    "is_isomorphic",
    "isomorphisms",
    "automorphism_count",
    "multilevel_parts",
    "ISO_SIZE_GUARD",
]

ISO_SIZE_GUARD = 12


def _close(m: int, up: list[int]) -> list[int]:
    # Warshall on bitmask rows.
    up = list(up)
    for k in range(m):
        bit = 1 << k
        above_k = up[k]
        for x in range(m):
            if up[x] & bit:
                up[x] |= above_k
    return up


@dataclass(frozen=True)
class Poset:
    """A finite strict partial order on ``range(m)``.

    ``up[x]`` is the bitmask of elements strictly above ``x``; ``down`` is the
    transpose.  Build instances with :meth:`from_relations` or the named
    constructors, which close the relation and check it is a strict order.
    """

    m: int
    up: tuple[int, ...]
    label: Optional[str] = field(default=None, compare=False)
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.m < 0 or len(self.up) != self.m:
            raise ValueError("up must have one mask per element")
        down = [0] * self.m
        for x, mask in enumerate(self.up):
            if mask >> self.m:
                raise ValueError(f"element {x} relates to an index >= m")
            if mask >> x & 1:
                raise ValueError(f"relation is not irreflexive at {x}")
            for y in _bits(mask):
                if self.up[y] >> x & 1:
                    raise ValueError(f"relation is not antisymmetric on ({x}, {y})")
                if self.up[y] & ~mask:
                    raise ValueError("relation is not transitively closed")
                down[y] |= 1 << x
        object.__setattr__(self, "down", tuple(down))

    @classmethod
    def from_relations(
        cls, m: int, pairs: Iterable[tuple[int, int]], label: Optional[str] = None
    ) -> "Poset":
        """Build a poset from generating pairs ``(x, y)`` meaning ``x < y``."""
        up = [0] * m
        for x, y in pairs:
            if not (0 <= x < m and 0 <= y < m):
                raise ValueError(f"pair ({x}, {y}) out of range for m={m}")
            up[x] |= 1 << y
        return cls(m, tuple(_close(m, up)), label)

    @property
    def rel(self) -> tuple[tuple[bool, ...], ...]:
        """The strict order as an ``m x m`` boolean matrix."""
        return tuple(
            tuple(bool(self.up[x] >> y & 1) for y in range(self.m)) for x in range(self.m)
        )

    def less(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def relations(self) -> set[tuple[int, int]]:
        return {(x, y) for x in range(self.m) for y in _bits(self.up[x])}

    def __len__(self) -> int:
        return self.m

    def __str__(self) -> str:
        return self.label or f"Poset({self.m}, {sorted(self.relations())})"

    def render(self) -> str:
        """A poset-language expression for this poset (see :mod:`.dsl`)."""
        if self.label is not None:
            return self.label
        raise ValueError("anonymous poset has no expression form")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _require_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def chain(k: int) -> Poset:
    _require_positive("k", k)
    return Poset.from_relations(k, ((i, i + 1) for i in range(k - 1)), f"P{k}")


def antichain(r: int) -> Poset:
    _require_positive("r", r)
    return Poset(r, (0,) * r, f"AC{r}")


def vee(r: int) -> Poset:
    """One bottom element (index 0) below an ``r``-antichain."""
    _require_positive("r", r)
    return Poset.from_relations(r + 1, ((0, i) for i in range(1, r + 1)), f"V{r}")


def wedge(r: int) -> Poset:
    """An ``r``-antichain (indices ``0..r-1``) below one top element."""
    _require_positive("r", r)
    return Poset.from_relations(r + 1, ((i, r) for i in range(r)), f"A{r}")


def n_poset() -> Poset:
    # a, b, c, d = 0, 1, 2, 3 with a < c and b < c, d
    return Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)], "N")


def butterfly() -> Poset:
    return Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)], "B")


def butterfly_plus() -> Poset:
    # a < c, e;  b < c, d;  d < e
    return Poset.from_relations(5, [(0, 2), (0, 4), (1, 2), (1, 3), (3, 4)], "B+")


def butterfly_plusplus() -> Poset:
    # a, b < c, d;  d < e
    return Poset.from_relations(
        5, [(0, 2), (0, 3), (1, 2), (1, 3), (3, 4)], "B++"
    )


def diamond(k: int) -> Poset:
    """Bottom 0, middles ``1..k``, top ``k+1``."""
    _require_positive("k", k)
    pairs = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    return Poset.from_relations(k + 2, pairs, f"D{k}")


def multilevel(*parts: int) -> Poset:
    """Complete multi-level poset: every element of level i is below level j > i.

    Elements are numbered level by level, bottom level first.
    """
    if not parts:
        raise ValueError("K needs at least one level")
    for r in parts:
        _require_positive("level size", r)
    starts = [0]
    for r in parts:
        starts.append(starts[-1] + r)
    m = starts[-1]
    up = [0] * m
    for lvl in range(len(parts)):
        above = ((1 << m) - 1) ^ ((1 << starts[lvl + 1]) - 1)
        for x in range(starts[lvl], starts[lvl + 1]):
            up[x] = above
    label = "K(" + ",".join(str(r) for r in parts) + ")"
    return Poset(m, tuple(up), label)


def empty() -> Poset:
    return Poset(0, (), "0")


def named(name: str, *params: int) -> Poset:
    """Look up a named poset: ``named("P", 3)``, ``named("N")``, ``named("K", 1, 2)``."""
    table = {
        "P": chain,
        "V": vee,
        "A": wedge,
        "AC": antichain,
        "D": diamond,
        "N": n_poset,
        "B": butterfly,
        "B+": butterfly_plus,
        "Bplus": butterfly_plus,
        "B++": butterfly_plusplus,
        "Bplusplus": butterfly_plusplus,
        "K": multilevel,
        "0": empty,
        "empty": empty,
    }
    try:
        ctor = table[name]
    except KeyError:
        raise ValueError(f"unknown poset name {name!r}") from None
    return ctor(*params)


def otimes(q1: Poset, r: int, q2: Poset) -> Poset:
    """Insert an ``r``-antichain above all of ``q1`` and below all of ``q2``.

    Element order: ``q1``'s elements, then the ``r`` middles, then ``q2``'s.
    """
    _require_positive("r", r)
    a, b = q1.m, q2.m
    m = a + r + b
    mid = ((1 << r) - 1) << a
    top = ((1 << b) - 1) << (a + r)
    up = [q1.up[x] | mid | top for x in range(a)]
    up += [top] * r
    up += [q2.up[x] << (a + r) for x in range(b)]
    label = None
    if q1.label is not None and q2.label is not None:
        label = f"otimes({q1.label},{r},{q2.label})"
    return Poset(m, tuple(up), label)


def oplus(q: Poset, r: int) -> Poset:
    """``q`` with an ``r``-antichain placed above every element."""
    p = otimes(q, r, empty())
    label = f"oplus({q.label},{r})" if q.label is not None else None
    return Poset(p.m, p.up, label)


def height(p: Poset) -> int:
    """Number of elements in a longest chain (0 for the empty poset)."""
    longest = [1] * p.m
    # Process in reverse topological order: an element with fewer elements
    # above it is finished first.
    for x in sorted(range(p.m), key=lambda v: bin(p.up[v]).count("1")):
        best = 0
        for y in _bits(p.up[x]):
            best = max(best, longest[y])
        longest[x] = best + 1
    return max(longest, default=0)


def _signature(p: Poset, x: int) -> tuple[int, int]:
    return (bin(p.down[x]).count("1"), bin(p.up[x]).count("1"))


def isomorphisms(p: Poset, q: Poset, guard: int = ISO_SIZE_GUARD):
    """Yield every order isomorphism ``p -> q`` as a tuple ``phi[x]``."""
    if p.m != q.m:
        return
    if p.m > guard:
        raise ValueError(f"isomorphism search limited to {guard} elements, got {p.m}")
    if len(p.relations()) != len(q.relations()):
        return
    sig_p = [_signature(p, x) for x in range(p.m)]
    sig_q = [_signature(q, y) for y in range(q.m)]
    if sorted(sig_p) != sorted(sig_q):
        return
    order = sorted(range(p.m), key=lambda x: sig_p[x])
    phi = [-1] * p.m
    used = 0

    def extend(t: int):
        nonlocal used
        if t == p.m:
            yield tuple(phi)
            return
        x = order[t]
        for y in range(q.m):
            if used >> y & 1 or sig_q[y] != sig_p[x]:
                continue
            ok = True
            for s in range(t):
                w = order[s]
                if p.less(w, x) != q.less(phi[w], y) or p.less(x, w) != q.less(y, phi[w]):
                    ok = False
                    break
            if not ok:
                continue
            phi[x] = y
            used |= 1 << y
            yield from extend(t + 1)
            used &= ~(1 << y)
            phi[x] = -1

    yield from extend(0)


def is_isomorphic(p: Poset, q: Poset, guard: int = ISO_SIZE_GUARD) -> bool:
    return next(isomorphisms(p, q, guard), None) is not None


def automorphism_count(p: Poset, guard: int = ISO_SIZE_GUARD) -> int:
    return sum(1 for _ in isomorphisms(p, p, guard))


def multilevel_parts(p: Poset) -> Optional[tuple[int, ...]]:
    """Return ``(r1, ..., rs)`` if ``p`` is isomorphic to ``K(r1..rs)``, else None."""
    if p.m == 0:
        return None
    remaining = (1 << p.m) - 1
    parts = []
    while remaining:
        level = [x for x in _bits(remaining) if not (p.down[x] & remaining)]
        level_mask = sum(1 << x for x in level)
        rest = remaining & ~level_mask
        for x in level:
            if p.up[x] != rest:
                return None
        parts.append(len(level))
        remaining = rest
    return tuple(parts)


def twin_classes(p: Poset) -> list[list[int]]:
    """Group elements with identical up-sets and down-sets (interchangeable)."""
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(p.m):
        groups.setdefault((p.up[x], p.down[x]), []).append(x)
    return list(groups.values())


iter_bits = _bits
