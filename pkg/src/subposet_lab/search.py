"""Exact extremal search at small n and optimization over unions of full levels.

``la_exact`` enumerates P-free families of ``2^[n]`` up to permutations of
the ground set by orderly generation: a family is kept only if its sorted
mask tuple is the smallest among all relabelings, and children append a
mask larger than the current maximum.  Removing the largest member of a
canonical family leaves a canonical family, so every isomorphism class is
reached exactly once.  Only maximal P-free families are scored: adding a
member never lowers a copy count, and P-freeness is inherited by subfamilies.

The DFS visits families in lexicographic order of their sorted mask tuples,
so the first family reaching the best value is the reported witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional, Sequence, Union

from .counting import (
    Budget,
    BudgetExceeded,
    FamilyIndex,
    contains_copy,
    contains_in,
    contains_through,
    count_copies,
    count_in,
    is_free,
)
from .families import SetFamily, level_union
from .posets import Poset, height, multilevel_parts
from .profiles import count_multilevel_on_levels

__all__ = [
    "SearchResult",
    "SelfCheckError",
    "EXACT_CAP",
    "INFINITY",
    "la_exact",
    "la_levels",
    "iter_antichains",
    "antichain_max_beta",
    "antichain_max_gamma",
    "conjecture_ratio",
]

EXACT_CAP = 4
LEVELS_CAP_MULTILEVEL = 20
LEVELS_CAP_GENERAL = 8
WITNESS_MATERIALIZE_CAP = 12
INFINITY = math.inf


class SelfCheckError(AssertionError):
    """A witness failed re-verification against the counting engine."""


@dataclass
class SearchResult:
    value: int
    witnesses: list[SetFamily] = field(default_factory=list)
    explored: int = 0
    exact: bool = True
    levels: Optional[tuple[int, ...]] = None


def _self_check(result: SearchResult, forbidden: Sequence[Poset], q: Poset) -> None:
    for fam in result.witnesses:
        if forbidden and not is_free(forbidden, fam):
            raise SelfCheckError(f"witness {fam} contains a forbidden poset")
        got = count_copies(q, fam)
        if got != result.value:
            raise SelfCheckError(f"witness {fam} has {got} copies, expected {result.value}")


def _permutation_tables(n: int, universe: Sequence[int]) -> list[list[int]]:
    # table[k][mask] = image of mask under the k-th ground permutation
    tables = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        row = [0] * (1 << n)
        for mask in range(1 << n):
            image = 0
            for i in range(n):
                if mask >> i & 1:
                    image |= 1 << perm[i]
            row[mask] = image
        tables.append(row)
    return tables


def _is_canonical(masks: list[int], tables: list[list[int]]) -> bool:
    for row in tables:
        if sorted(row[m] for m in masks) < masks:
            return False
    return True


def la_exact(
    n: int,
    forbidden: Sequence[Poset],
    q: Poset,
    exclude_empty_and_full: bool = False,
    budget: Optional[int] = None,
    witnesses: int = 1,
    exact_cap: int = EXACT_CAP,
) -> SearchResult:
    """Largest ``c(q, F)`` over families ``F`` of ``2^[n]`` containing no member of ``forbidden``.

    ``n`` may exceed ``exact_cap`` by one; the run is then best effort and is
    flagged ``exact=False`` if the node budget runs out.
    """
    if not forbidden:
        raise ValueError("at least one forbidden poset is required")
    if n < 0 or n > exact_cap + 1:
        raise ValueError(f"exact search supports n <= {exact_cap + 1}, got {n}")
    full = (1 << n) - 1
    universe = [m for m in range(1 << n) if not (exclude_empty_and_full and m in (0, full))]
    index = FamilyIndex(universe)
    tables = _permutation_tables(n, universe)
    meter = Budget(budget)
    size = len(universe)

    # Singletons {x} that are already forbidden are never addable.
    start_addable = 0
    for pos in range(size):
        if all(not contains_in(p, index, 1 << pos, meter) for p in forbidden):
            start_addable |= 1 << pos

    best = -1
    found: list[SetFamily] = []
    explored = 0

    def score(domain: int) -> None:
        nonlocal best, found
        value = count_in(q, index, domain, meter)
        if value > best:
            best = value
            found = []
        if value == best and len(found) < witnesses:
            found.append(SetFamily(n, tuple(universe[i] for i in range(size) if domain >> i & 1)))

    def still_addable(domain: int, addable: int) -> int:
        out = 0
        rest = addable
        while rest:
            low = rest & -rest
            rest ^= low
            pos = low.bit_length() - 1
            trial = domain | low
            if all(not contains_through(p, index, trial, pos, meter) for p in forbidden):
                out |= low
        return out

    def walk(domain: int, masks: list[int], top: int, addable: int) -> None:
        nonlocal explored
        explored += 1
        meter.charge()
        if not addable:
            score(domain)
            return
        # Children append a member larger than every current one.
        cand = addable & ~((2 << top) - 1) if top >= 0 else addable
        while cand:
            low = cand & -cand
            cand ^= low
            pos = low.bit_length() - 1
            child = masks + [universe[pos]]
            if tables and not _is_canonical(child, tables):
                continue
            new_domain = domain | low
            walk(new_domain, child, pos, still_addable(new_domain, addable & ~low))

    exact = True
    try:
        walk(0, [], -1, start_addable)
    except BudgetExceeded:
        exact = False
    result = SearchResult(max(best, 0), found, explored, exact)
    _self_check(result, forbidden, q)
    return result


def _levels_free(n: int, levels: tuple[int, ...], forbidden: Sequence[Poset],
                 chain_heights: Optional[list[int]], budget: Budget) -> bool:
    if chain_heights is not None:
        return len(levels) < min(chain_heights)
    fam = level_union(n, levels)
    return not any(contains_copy(p, fam, budget) for p in forbidden)


def la_levels(
    n: int, forbidden: Sequence[Poset], q: Poset, budget: Optional[int] = None,
    witnesses: int = 1,
) -> SearchResult:
    """Largest ``c(q, F)`` over forbidden-free unions ``F`` of full levels of ``2^[n]``."""
    if not forbidden:
        raise ValueError("at least one forbidden poset is required")
    parts = multilevel_parts(q)
    cap = LEVELS_CAP_MULTILEVEL if parts is not None else LEVELS_CAP_GENERAL
    if n < 0 or n > cap:
        raise ValueError(f"level search supports n <= {cap} for {q}, got {n}")
    chain_heights = [p.m for p in forbidden] if all(height(p) == p.m for p in forbidden) else None
    if chain_heights is None and n > LEVELS_CAP_GENERAL:
        raise ValueError(f"non-chain forbidden posets need n <= {LEVELS_CAP_GENERAL}")
    meter = Budget(budget)
    q_height = height(q)
    best_value = -1
    best_levels: tuple[int, ...] = ()
    explored = 0
    # With chain-only forbidden posets, only unions of fewer levels than the
    # shortest forbidden chain can be free.
    max_levels = n + 1 if chain_heights is None else min(n + 1, min(chain_heights) - 1)
    choices = sorted(c for k in range(1, max_levels + 1) for c in combinations(range(n + 1), k))
    for levels in choices:
        explored += 1
        meter.charge()
        if not _levels_free(n, levels, forbidden, chain_heights, meter):
            continue
        if len(levels) < q_height:
            value = 0
        elif parts is not None and len(levels) == len(parts):
            value = count_multilevel_on_levels(parts, n, levels)
        else:
            if n > LEVELS_CAP_GENERAL:
                raise ValueError(f"counting {q} on {len(levels)} levels needs n <= {LEVELS_CAP_GENERAL}")
            value = count_copies(q, level_union(n, levels), meter)
        if value > best_value:
            best_value, best_levels = value, levels
    result = SearchResult(max(best_value, 0), [], explored, True, best_levels)
    if n <= WITNESS_MATERIALIZE_CAP and witnesses > 0 and best_levels:
        result.witnesses.append(level_union(n, best_levels))
        _self_check(result, forbidden, q)
    return result


def iter_antichains(n: int, budget: Optional[Budget] = None):
    """Every antichain of ``2^[n]`` (as a list of masks), in lexicographic order."""
    meter = budget if budget is not None else Budget()
    masks = range(1 << n)
    chosen: list[int] = []

    def walk(start: int):
        meter.charge()
        yield list(chosen)
        for m in masks[start:]:
            if all(m & c != m and m & c != c for c in chosen):
                chosen.append(m)
                yield from walk(m + 1)
                chosen.pop()

    yield from walk(0)


def _antichain_max(n: int, r: int, objective, exact_cap: int, budget: Optional[int]) -> SearchResult:
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 0 or n > exact_cap + 1:
        raise ValueError(f"antichain search supports n <= {exact_cap + 1}, got {n}")
    meter = Budget(budget)
    best = -1
    witness: list[int] = []
    exact = True
    try:
        for chosen in iter_antichains(n, meter):
            value = objective(chosen)
            if value > best:
                best, witness = value, chosen
    except BudgetExceeded:
        exact = False
    return SearchResult(max(best, 0), [SetFamily(n, tuple(witness))], meter.used, exact)


def antichain_max_beta(n: int, r: int, exact_cap: int = EXACT_CAP,
                       budget: Optional[int] = None) -> SearchResult:
    """Most r-subsets with empty common intersection in an antichain of ``2^[n]``."""
    full = (1 << n) - 1

    def objective(chosen: list[int]) -> int:
        hits = 0
        for combo in combinations(chosen, r):
            inter = full
            for s in combo:
                inter &= s
            hits += inter == 0
        return hits

    return _antichain_max(n, r, objective, exact_cap, budget)


def antichain_max_gamma(n: int, r: int, exact_cap: int = EXACT_CAP,
                        budget: Optional[int] = None) -> SearchResult:
    """Most r-subsets with empty intersection and union ``[n]`` in an antichain of ``2^[n]``."""
    full = (1 << n) - 1

    def objective(chosen: list[int]) -> int:
        hits = 0
        for combo in combinations(chosen, r):
            inter, union = full, 0
            for s in combo:
                inter &= s
                union |= s
            hits += inter == 0 and union == full
        return hits

    return _antichain_max(n, r, objective, exact_cap, budget)


def conjecture_ratio(n: int, forbidden: Sequence[Poset], q: Poset,
                     budget: Optional[int] = None) -> Union[Fraction, float]:
    """``la_exact / la_levels`` as a Fraction; ``INFINITY`` when only level unions score 0.

    Both zero counts as agreement (ratio 1).
    """
    top = la_exact(n, forbidden, q, budget=budget).value
    bottom = la_levels(n, forbidden, q, budget=budget).value
    if bottom == 0:
        return Fraction(1) if top == 0 else INFINITY
    return Fraction(top, bottom)
