"""Explicit extremal families.

Each builder returns a :class:`SetFamily` over ``[n]``:

``vee_extremal``   middle level plus ``[n]``
``kt``             middle level of ``[n-1]`` and its shift by ``n``
``b_free``         middle level plus ``∅`` and ``[n]``
``diamond``        chain-rich P3-free base on ``[n-k+1]`` with its top part lifted k-1 times
``bollobas_odd``   the two middle levels split by membership of 1
``fork_two_level`` levels ``i`` and ``i // 2``
``bplus_shifted``  middle level of ``[n-2]`` shifted by ``{n-1}`` and ``{n-1, n}``
"""

from __future__ import annotations

from typing import Callable

from .families import SetFamily, full_level, level_union
from .formulas import chain_chain_value

__all__ = ["CONSTRUCTIONS", "construct"]


def _bit(e: int) -> int:
    return 1 << (e - 1)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def vee_extremal(n: int) -> SetFamily:
    _need(n >= 1, "vee_extremal needs n >= 1")
    full = (1 << n) - 1
    return full_level(n, n // 2).union([full])


def kt(n: int) -> SetFamily:
    _need(n >= 1, "kt needs n >= 1")
    base = full_level(n - 1, (n - 1) // 2).members
    return SetFamily(n, base + tuple(m | _bit(n) for m in base))


def b_free(n: int) -> SetFamily:
    _need(n >= 1, "b_free needs n >= 1")
    return full_level(n, n // 2).union([0, (1 << n) - 1])


def diamond(n: int, k: int) -> SetFamily:
    """D_k-free family with many copies of every smaller diamond.

    The base is the two-level P3-free family on ``[n-k+1]`` with the most
    comparable pairs; its upper level is then extended by ``{n-k+2..n-k+j-1}``
    for ``j = 3..k+1``, giving ``k - 1`` stacked copies above it.
    """
    _need(k >= 1 and n >= k, "diamond needs 1 <= k <= n")
    m = n - k + 1
    lo, hi = chain_chain_value(m, 2).arg
    lower = full_level(m, lo).members
    upper = full_level(m, hi).members
    masks = list(lower) + list(upper)
    for j in range(3, k + 2):
        extra = 0
        for e in range(m + 1, m + j - 1):
            extra |= _bit(e)
        masks.extend(f | extra for f in upper)
    return SetFamily(n, tuple(masks))


def bollobas_odd(n: int) -> SetFamily:
    _need(n >= 1 and n % 2 == 1, "bollobas_odd needs odd n")
    low = [m for m in full_level(n, n // 2).members if m & 1]
    high = [m for m in full_level(n, n // 2 + 1).members if not m & 1]
    return SetFamily(n, tuple(low + high))


def fork_two_level(n: int, i: int) -> SetFamily:
    _need(0 <= i <= n, "fork_two_level needs 0 <= i <= n")
    return level_union(n, {i, i // 2})


def bplus_shifted(n: int) -> SetFamily:
    _need(n >= 2, "bplus_shifted needs n >= 2")
    base = full_level(n - 2, (n - 2) // 2).members
    a, b = _bit(n - 1), _bit(n)
    return SetFamily(n, base + tuple(m | a for m in base) + tuple(m | a | b for m in base))


CONSTRUCTIONS: dict[str, Callable[..., SetFamily]] = {
    "vee_extremal": vee_extremal,
    "kt": kt,
    "b_free": b_free,
    "diamond": diamond,
    "bollobas_odd": bollobas_odd,
    "fork_two_level": fork_two_level,
    "bplus_shifted": bplus_shifted,
}

# extra integer parameters after n
CONSTRUCTION_PARAMS = {"diamond": ("k",), "fork_two_level": ("i",)}


def construct(name: str, n: int, **params: int) -> SetFamily:
    try:
        builder = CONSTRUCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}; choose from {sorted(CONSTRUCTIONS)}") from None
    expected = CONSTRUCTION_PARAMS.get(name, ())
    missing = [p for p in expected if p not in params]
    unknown = [p for p in params if p not in expected]
    if missing or unknown:
        raise ValueError(f"{name} takes parameters {list(expected)}, got {sorted(params)}")
    return builder(n, **params)
