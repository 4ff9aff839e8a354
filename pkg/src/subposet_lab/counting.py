"""Copies of a poset inside a set family.

A copy of ``Q`` in ``F`` is a ``|Q|``-element subfamily ``G`` with a
bijection ``Q -> G`` sending every relation ``x < y`` to a strict inclusion.
Non-relations impose nothing (weak containment).  ``c(Q, F)`` counts
subfamilies, not bijections.

The engine works on a :class:`FamilyIndex`: the member masks plus, for each
member, bitmasks (over member positions) of its strict supersets and
subsets.  A subfamily is then just an ``int`` bitmask over positions, which
lets the extremal search reuse one index for every candidate family.

Deduplication: embeddings are enumerated in a fixed element order with
twin elements (same up- and down-sets) forced into increasing position
order; a completed embedding is counted only if it is the lexicographically
smallest such embedding onto its image.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .families import SetFamily
from .posets import Poset, height, iter_bits, twin_classes

__all__ = [
    "BudgetExceeded",
    "Budget",
    "FamilyIndex",
    "embeddings",
    "count_copies",
    "contains_copy",
    "is_free",
    "count_in",
    "contains_in",
    "contains_through",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = int(os.environ.get("SUBPOSET_LAB_BUDGET", 200_000_000))


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allows."""


class Budget:
    """Mutable node counter shared by the searches of one top-level call."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int] = None):
        self.limit = DEFAULT_NODE_BUDGET if limit is None else limit
        self.used = 0

    def charge(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise BudgetExceeded(f"node budget {self.limit} exhausted")


def _as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


class FamilyIndex:
    """Member masks with strict-inclusion bitmasks over member positions."""

    __slots__ = ("masks", "up", "down", "size")

    def __init__(self, masks: Sequence[int]):
        self.masks = tuple(masks)
        k = len(self.masks)
        up = [0] * k
        down = [0] * k
        for i, a in enumerate(self.masks):
            for j in range(i + 1, k):
                b = self.masks[j]
                if a & b == a and a != b:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
                elif a & b == b and a != b:
                    up[j] |= 1 << i
                    down[i] |= 1 << j
        self.up = up
        self.down = down
        self.size = k

    @property
    def all(self) -> int:
        return (1 << self.size) - 1


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    below: tuple[tuple[int, ...], ...]  # earlier positions that must be strict subsets
    above: tuple[tuple[int, ...], ...]  # earlier positions that must be strict supersets
    twin_prev: tuple[int, ...]  # earlier position of the previous twin, or -1
    need_up: tuple[int, ...]
    need_down: tuple[int, ...]


def _search_order(q: Poset, start: Optional[int]) -> list[int]:
    degree = [(q.up[x] | q.down[x]).bit_count() for x in range(q.m)]
    placed: list[int] = []
    placed_mask = 0
    remaining = set(range(q.m))
    if start is not None:
        placed.append(start)
        placed_mask |= 1 << start
        remaining.discard(start)
    while remaining:
        best = max(
            remaining,
            key=lambda x: (((q.up[x] | q.down[x]) & placed_mask).bit_count(), degree[x], -x),
        )
        placed.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)
    return placed


@lru_cache(maxsize=512)
def _plan(q: Poset, start: Optional[int] = None, break_twins: bool = True) -> _Plan:
    order = _search_order(q, start)
    pos = {x: t for t, x in enumerate(order)}
    twin_of: dict[int, int] = {}
    if break_twins:
        for cls in twin_classes(q):
            ranked = sorted(cls, key=pos.__getitem__)
            for a, b in zip(ranked, ranked[1:]):
                twin_of[b] = a
    below, above, twin_prev = [], [], []
    for t, x in enumerate(order):
        below.append(tuple(pos[y] for y in order[:t] if q.less(y, x)))
        above.append(tuple(pos[y] for y in order[:t] if q.less(x, y)))
        twin_prev.append(pos[twin_of[x]] if x in twin_of else -1)
    return _Plan(
        tuple(order),
        tuple(below),
        tuple(above),
        tuple(twin_prev),
        tuple(q.up[x].bit_count() for x in order),
        tuple(q.down[x].bit_count() for x in order),
    )


def _candidates(plan: _Plan, index: FamilyIndex, domain: int, img: list[int], t: int) -> int:
    cand = domain
    for s in plan.below[t]:
        cand &= index.up[img[s]]
    for s in plan.above[t]:
        cand &= index.down[img[s]]
    tp = plan.twin_prev[t]
    if tp >= 0:
        cand &= ~((2 << img[tp]) - 1)
    return cand


def _viable(plan: _Plan, index: FamilyIndex, domain: int, t: int, c: int) -> bool:
    nu = plan.need_up[t]
    if nu and (index.up[c] & domain).bit_count() < nu:
        return False
    nd = plan.need_down[t]
    if nd and (index.down[c] & domain).bit_count() < nd:
        return False
    return True


def _exists(plan: _Plan, index: FamilyIndex, domain: int, img: list[int], t: int,
            budget: Budget, full: int) -> bool:
    """Complete ``img[:t]`` to an embedding; ``domain`` holds the still-unused
    positions of the subfamily ``full``."""
    m = len(plan.order)
    if t == m:
        return True
    cand = _candidates(plan, index, domain, img, t)
    while cand:
        low = cand & -cand
        c = low.bit_length() - 1
        cand ^= low
        budget.charge()
        if not _viable(plan, index, full, t, c):
            continue
        img[t] = c
        if _exists(plan, index, domain ^ low, img, t + 1, budget, full):
            return True
    return False


def _is_lex_min(plan: _Plan, index: FamilyIndex, image: int, emb: list[int],
                budget: Budget) -> bool:
    """Is ``emb`` the smallest twin-ordered embedding onto the subfamily ``image``?"""
    m = len(plan.order)
    img = [0] * m
    domain = image
    for t in range(m):
        target = emb[t]
        cand = _candidates(plan, index, domain, img, t)
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            if c >= target:
                break
            cand ^= low
            budget.charge()
            img[t] = c
            if _exists(plan, index, domain ^ low, img, t + 1, budget, image):
                return False
        img[t] = target
        domain ^= 1 << target
    return True


def _count_generic(q: Poset, index: FamilyIndex, domain: int, budget: Budget) -> int:
    plan = _plan(q)
    m = q.m
    img = [0] * m
    total = 0

    def walk(t: int, free: int, image: int) -> None:
        nonlocal total
        if t == m:
            if _is_lex_min(plan, index, image, img, budget):
                total += 1
            return
        cand = _candidates(plan, index, free, img, t)
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            budget.charge()
            if not _viable(plan, index, domain, t, c):
                continue
            img[t] = c
            walk(t + 1, free ^ low, image | low)

    walk(0, domain, 0)
    return total


def _count_chains(k: int, index: FamilyIndex, domain: int) -> int:
    if k == 1:
        return domain.bit_count()
    if k == 2:
        return sum((index.up[i] & domain).bit_count() for i in iter_bits(domain))
    members = sorted(iter_bits(domain), key=lambda i: index.masks[i].bit_count())
    ways = {i: 1 for i in members}
    for _ in range(k - 1):
        nxt = {}
        for j in members:
            nxt[j] = sum(ways[i] for i in iter_bits(index.down[j] & domain))
        ways = nxt
    return sum(ways.values())


def _is_chain(q: Poset) -> bool:
    return q.m > 0 and height(q) == q.m


def _require_nonempty(q: Poset) -> None:
    if q.m == 0:
        raise ValueError("the empty poset is only allowed as an operand of otimes/oplus")


def count_in(q: Poset, index: FamilyIndex, domain: int, budget=None,
             fast_paths: bool = True) -> int:
    """``c(q, G)`` for the subfamily ``G`` given by the position bitmask ``domain``."""
    _require_nonempty(q)
    budget = _as_budget(budget)
    if domain.bit_count() < q.m:
        return 0
    if fast_paths and _is_chain(q):
        return _count_chains(q.m, index, domain)
    return _count_generic(q, index, domain, budget)


def contains_in(p: Poset, index: FamilyIndex, domain: int, budget=None) -> bool:
    _require_nonempty(p)
    if domain.bit_count() < p.m:
        return False
    return _exists(_plan(p), index, domain, [0] * p.m, 0, _as_budget(budget), domain)


def contains_through(p: Poset, index: FamilyIndex, domain: int, position: int,
                     budget=None) -> bool:
    """Does the subfamily ``domain`` hold a copy of ``p`` using member ``position``?"""
    _require_nonempty(p)
    if not domain >> position & 1 or domain.bit_count() < p.m:
        return False
    budget = _as_budget(budget)
    img = [0] * p.m
    img[0] = position
    for cls in twin_classes(p):
        plan = _plan(p, cls[0], False)
        if not _viable(plan, index, domain, 0, position):
            continue
        if _exists(plan, index, domain ^ (1 << position), img, 1, budget, domain):
            return True
    return False


def _index_of(family: SetFamily) -> FamilyIndex:
    return FamilyIndex(family.members)


def embeddings(q: Poset, family: SetFamily, budget=None) -> list[tuple[int, ...]]:
    """Every injective order-preserving map, as a tuple of masks indexed by element."""
    _require_nonempty(q)
    budget = _as_budget(budget)
    index = _index_of(family)
    plan = _plan(q, None, False)
    m = q.m
    img = [0] * m
    out: list[tuple[int, ...]] = []

    def walk(t: int, free: int) -> None:
        if t == m:
            phi = [0] * m
            for pos, x in enumerate(plan.order):
                phi[x] = index.masks[img[pos]]
            out.append(tuple(phi))
            return
        cand = _candidates(plan, index, free, img, t)
        while cand:
            low = cand & -cand
            cand ^= low
            budget.charge()
            img[t] = low.bit_length() - 1
            walk(t + 1, free ^ low)

    walk(0, index.all)
    return out


def count_copies(q: Poset, family: SetFamily, budget=None) -> int:
    """Number of subfamilies of ``family`` that are copies of ``q``."""
    index = _index_of(family)
    return count_in(q, index, index.all, budget)


def contains_copy(p: Poset, family: SetFamily, budget=None) -> bool:
    index = _index_of(family)
    return contains_in(p, index, index.all, budget)


def is_free(forbidden: Iterable[Poset], family: SetFamily, budget=None) -> bool:
    index = _index_of(family)
    budget = _as_budget(budget)
    return not any(contains_in(p, index, index.all, budget) for p in forbidden)
