"""Profile vectors of set families and their closed forms on full levels.

* ``profile``        sizes of the members (alpha)
* ``chain_profile``  l-chains grouped by their size tuple
* ``beta``           r-subsets grouped by intersection size
* ``gamma``          r-subsets grouped by (intersection size, union size)

plus exact counts on full levels (``beta_level``, ``gamma_level``), the
weight maximization over unions of full levels, and a union-size dynamic
program that counts complete multi-level posets on level unions.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Optional, Sequence, Union

from .counting import BudgetExceeded
from .families import SetFamily, popcount
from .posets import Poset, multilevel_parts

__all__ = [
    "DEFAULT_TUPLE_BUDGET",
    "profile",
    "chain_profile",
    "beta",
    "gamma",
    "gamma_kernel",
    "gamma_level",
    "beta_level",
    "union_profile",
    "maximize_level_weight",
    "count_multilevel_on_levels",
]

DEFAULT_TUPLE_BUDGET = 5_000_000


def profile(family: SetFamily) -> list[int]:
    alpha = [0] * (family.n + 1)
    for mask in family:
        alpha[popcount(mask)] += 1
    return alpha


def chain_profile(family: SetFamily, l: int) -> dict[tuple[int, ...], int]:
    """Number of chains ``F1 < ... < Fl`` in the family, keyed by ``(|F1|, ..., |Fl|)``."""
    if l < 1:
        raise ValueError("chain length must be at least 1")
    members = sorted(family.members, key=popcount)
    # ends[m] maps a size tuple to the number of chains of the current length ending at m
    ends = {m: Counter({(popcount(m),): 1}) for m in members}
    for _ in range(l - 1):
        nxt = {}
        for top in members:
            acc: Counter = Counter()
            size = popcount(top)
            for low in members:
                if low != top and low & top == low:
                    for key, cnt in ends[low].items():
                        acc[key + (size,)] += cnt
            nxt[top] = acc
        ends = nxt
    total: Counter = Counter()
    for acc in ends.values():
        total.update(acc)
    return {k: v for k, v in sorted(total.items()) if v}


def _check_tuples(family: SetFamily, r: int, budget: Optional[int]) -> None:
    if r < 2:
        raise ValueError("r must be at least 2")
    limit = DEFAULT_TUPLE_BUDGET if budget is None else budget
    if comb(len(family), r) > limit:
        raise BudgetExceeded(f"C({len(family)}, {r}) r-subsets exceed budget {limit}")


def _meet_join(sets: Sequence[int], full: int) -> tuple[int, int]:
    inter, union = full, 0
    for s in sets:
        inter &= s
        union |= s
    return inter, union


def beta(family: SetFamily, r: int, budget: Optional[int] = None) -> list[int]:
    """``beta[i]`` = number of r-subsets of distinct members whose intersection has size i."""
    _check_tuples(family, r, budget)
    out = [0] * family.n
    for combo in combinations(family.members, r):
        inter, _ = _meet_join(combo, family.full)
        out[popcount(inter)] += 1
    return out


def gamma(family: SetFamily, r: int, budget: Optional[int] = None) -> dict[tuple[int, int], int]:
    """Sparse table ``(i, j) -> count`` of r-subsets with intersection size i, union size j."""
    _check_tuples(family, r, budget)
    out: Counter = Counter()
    for combo in combinations(family.members, r):
        inter, union = _meet_join(combo, family.full)
        out[popcount(inter), popcount(union)] += 1
    return dict(sorted(out.items()))


def _kernel_enumerate(u: int, k: int, r: int) -> int:
    full = (1 << u) - 1
    level = [sum(1 << i for i in c) for c in combinations(range(u), k)]
    hits = 0
    for combo in combinations(level, r):
        inter, union = _meet_join(combo, full)
        if inter == 0 and union == full:
            hits += 1
    return hits


def _kernel_inclusion_exclusion(u: int, k: int, r: int) -> int:
    # Forbid a elements from every set (uncovered) and force b elements into
    # every set (common); the r sets are then chosen among (k-b)-subsets of the
    # remaining u-a-b elements.  The two events exclude each other per element.
    total = 0
    for a in range(u + 1):
        for b in range(u - a + 1):
            if b > k:
                break
            ways = comb(comb(u - a - b, k - b), r)
            if ways:
                sign = -1 if (a + b) % 2 else 1
                total += sign * comb(u, a) * comb(u - a, b) * ways
    return total


@lru_cache(maxsize=4096)
def gamma_kernel(u: int, k: int, r: int, enumerate_limit: int = 200_000) -> int:
    """r-subsets of the k-subsets of ``[u]`` with empty intersection and union ``[u]``."""
    if r == 2:
        if 2 * k != u or u == 0:
            return 0
        return comb(u, k) // 2
    if comb(comb(u, k), r) <= enumerate_limit:
        return _kernel_enumerate(u, k, r)
    return _kernel_inclusion_exclusion(u, k, r)


def gamma_level(n: int, m: int, r: int, i: int, j: int) -> int:
    """``gamma^r_{i,j}`` of the full level ``C([n], m)``."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if not (0 <= i < j <= n and i <= m <= j):
        raise ValueError(f"need 0 <= i < j <= n and i <= m <= j, got n={n} m={m} i={i} j={j}")
    # Pick the union J, then the intersection I inside it; the sets minus I
    # are (m-i)-subsets of J \ I with empty intersection and full union.
    return comb(n, j) * comb(j, i) * gamma_kernel(j - i, m - i, r)


def _beta0_level(n: int, k: int, r: int) -> int:
    # r-subsets of C([n], k) with empty common intersection.
    if r == 2:
        return comb(n, k) * comb(n - k, k) // 2 if k >= 1 else 0
    return sum((-1) ** a * comb(n, a) * comb(comb(n - a, k - a), r) for a in range(k + 1))


def beta_level(n: int, m: int, r: int, i: int) -> int:
    """``beta^r_i`` of the full level ``C([n], m)``."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if not (0 <= m <= n and 0 <= i <= n):
        raise ValueError(f"need 0 <= m <= n and 0 <= i <= n, got n={n} m={m} i={i}")
    if i > m:
        return 0
    return comb(n, i) * _beta0_level(n - i, m - i, r)


def union_profile(n: int, k: int, r: int) -> dict[int, int]:
    """r-subsets of ``C([n], k)`` keyed by the size of their union."""
    if r == 1:
        return {k: comb(n, k)} if 0 <= k <= n else {}
    out = {}
    for j in range(k, n + 1):
        total = sum(gamma_level(n, k, r, i, j) for i in range(0, min(k, j - 1) + 1))
        if total:
            out[j] = total
    return out


def maximize_level_weight(
    n: int, k: int, l: int, weight: Callable[[tuple[int, ...]], Union[int, float]]
) -> tuple[tuple[int, ...], Union[int, float]]:
    """Best union of ``k`` full levels for a weight on l-chains that depends on sizes only.

    Returns ``(levels, value)``; ties go to the lexicographically smallest level tuple.
    """
    if not 1 <= l <= k <= n + 1:
        raise ValueError(f"need 1 <= l <= k <= n+1, got n={n} k={k} l={l}")
    chain_weight = {}
    for sizes in combinations(range(n + 1), l):
        count = comb(n, sizes[-1])
        for lo, hi in zip(sizes, sizes[1:]):
            count *= comb(hi, lo)
        chain_weight[sizes] = count * weight(sizes)
    best_levels: tuple[int, ...] = ()
    best_value = None
    for levels in combinations(range(n + 1), k):
        value = sum(chain_weight[s] for s in combinations(levels, l))
        if best_value is None or value > best_value:
            best_levels, best_value = levels, value
    return best_levels, best_value


def count_multilevel_on_levels(
    k: Union[Poset, Sequence[int]], n: int, levels: Sequence[int]
) -> int:
    """Exact ``c(K(r1..rs), C([n], m1) u ... u C([n], ms))`` for ``m1 < ... < ms``.

    With exactly s levels every copy puts K's t-th level into level ``m_t``.
    The state is the size u of the union of the sets chosen on the previous
    level; the next r sets must contain that union, so they are
    ``(m_t - u)``-subsets of the other ``n - u`` points, grouped by union size.
    """
    parts = multilevel_parts(k) if isinstance(k, Poset) else tuple(k)
    if not parts:
        raise ValueError("expected a complete multi-level poset")
    levels = tuple(levels)
    if len(levels) != len(parts):
        raise ValueError(f"{len(parts)} poset levels but {len(levels)} set sizes given")
    if any(b <= a for a, b in zip(levels, levels[1:])) or not all(0 <= m <= n for m in levels):
        raise ValueError(f"levels must be strictly increasing within 0..{n}: {levels}")
    states = {0: 1}
    for r, m in zip(parts, levels):
        nxt: Counter = Counter()
        for u, ways in states.items():
            if m < u:
                continue
            for extra, cnt in union_profile(n - u, m - u, r).items():
                nxt[u + extra] += ways * cnt
        states = {u: w for u, w in nxt.items() if w}
        if not states:
            return 0
    return sum(states.values())
