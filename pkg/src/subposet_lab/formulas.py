"""Closed-form values and bounds for generalized forbidden-subposet counts.

All counting quantities are exact integers (``Fraction`` where a closed form
is not integral).  The entropy constants are the only floating-point values.
Maximizations break ties toward the lexicographically smallest argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from .posets import Poset, height
from .profiles import beta_level, gamma_kernel

__all__ = [
    "ArgValue",
    "BoundPair",
    "sperner_erdos",
    "la_chain_chain",
    "chain_chain_value",
    "easy_value",
    "la_p3_fork",
    "la_p4_diamond",
    "diamond_bounds",
    "rtuples_bounds",
    "beta2_level",
    "beta2_level_bound",
    "compose_otimes_bound",
    "compose_oplus_bound",
    "chain_oracle",
    "multi1_value",
    "n_two_level_bounds",
    "h",
    "c_p",
    "numeric_constants",
]


@dataclass(frozen=True)
class ArgValue:
    value: int
    arg: tuple[int, ...]
    levels: tuple[int, ...] = ()


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")


def _argmax(candidates) -> ArgValue:
    """First strict maximum over ``(arg, value)`` pairs given in increasing arg order."""
    best: Optional[ArgValue] = None
    for arg, value in candidates:
        if best is None or value > best.value:
            best = ArgValue(value, tuple(arg))
    if best is None:
        raise ValueError("empty maximization range")
    return best


def sperner_erdos(n: int, k: int) -> int:
    """Largest size of a family in ``2^[n]`` with no chain of ``k + 1`` sets."""
    if not (n >= 0 and 1 <= k <= n + 1):
        raise ValueError(f"need 1 <= k <= n+1, got n={n} k={k}")
    base = (n - k) // 2
    return sum(comb(n, base + i) for i in range(1, k + 1))


def _balanced(total: int, parts: int) -> list[int]:
    q, rem = divmod(total, parts)
    return [q] * (parts - rem) + [q + 1] * rem


def _multinomial(total: int, parts) -> int:
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def chain_chain_value(n: int, k: int) -> ArgValue:
    """Most k-chains in a family with no (k+1)-chain, allowing degenerate n.

    The sizes ``i_1 < ... < i_k`` split ``n`` into ``k + 1`` gaps; the count
    is the multinomial of the gaps, largest when they are balanced.  The
    first and last gaps may be empty.
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n} k={k}")
    if k == 0:
        return ArgValue(1, ())
    if n < k - 1:
        return ArgValue(0, ())
    if n == k - 1:
        return ArgValue(factorial(n), tuple(range(n + 1)))
    gaps = _balanced(n, k + 1)
    sizes, acc = [], 0
    for g in gaps[:-1]:
        acc += g
        sizes.append(acc)
    return ArgValue(_multinomial(n, gaps), tuple(sizes))


def la_chain_chain(n: int, k: int) -> ArgValue:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    return chain_chain_value(n, k)


def _mid(n: int) -> int:
    return comb(n, n // 2)


def easy_value(case: str, n: int, r: int = 1) -> int:
    """The four elementary exact values, selected by ``case`` in ``a``..``d``.

    a: most comparable pairs in a family avoiding V (or A).
    b: most comparable pairs avoiding both V and A.
    c: most copies of D_r avoiding B.
    d: most copies of A_r avoiding V (or of V_r avoiding A).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if case == "a":
        return _mid(n)
    if case == "b":
        if n < 1:
            raise ValueError("case b needs n >= 1")
        return _mid(n - 1)
    if case in ("c", "d"):
        if r < 1:
            raise ValueError("r must be at least 1")
        return comb(_mid(n), r)
    raise ValueError(f"unknown case {case!r}; expected one of a, b, c, d")


def _below_weight(i: int) -> int:
    # Largest antichain strictly inside an i-set (none when i = 0).
    return _mid(i) if i >= 1 else 0


def _between_weight(d: int) -> int:
    # Largest antichain strictly between two sets that differ in d points.
    return _mid(d) if d >= 2 else 0


def la_p3_fork(n: int, r: int) -> ArgValue:
    """``max_i C(n,i) C(C(i,i//2), r)``: r-antichains below a common top set."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n} r={r}")
    return _argmax(((i,), comb(n, i) * comb(_below_weight(i), r)) for i in range(n + 1))


def la_p4_diamond(n: int, r: int) -> ArgValue:
    """``max_{i<j} C(n,j) C(j,i) C(C(j-i,(j-i)//2), r)``, argument ``(i, j)``."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n} r={r}")
    return _argmax(
        ((i, j), comb(n, j) * comb(j, i) * comb(_between_weight(j - i), r))
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    )


def diamond_bounds(n: int, k: int, l: int) -> BoundPair:
    if not (k > l >= 1 and n >= k):
        raise ValueError(f"need k > l >= 1 and n >= k, got n={n} k={k} l={l}")
    coeff = comb(k - 1, l)
    lower = coeff * chain_chain_value(n - k + 1, 2).value
    upper = (comb(k + 1, 2) - k) * coeff * la_chain_chain(n, 2).value
    return BoundPair(lower, upper)


def beta2_level(n: int) -> int:
    """Level whose disjoint-pair count is largest among antichains of ``2^[n]``."""
    if n % 3 == 2:
        return -(-n // 3)
    return n // 3


def beta2_level_bound(n: int, i: int) -> ArgValue:
    """Sharp antichain bound on pairs meeting in exactly ``i`` points; ``arg = (j(i),)``."""
    if not 0 <= i < n:
        raise ValueError(f"need 0 <= i < n, got n={n} i={i}")
    j = i + beta2_level(n - i)
    return ArgValue(beta_level(n, j, 2, i), (j,))


def rtuples_bounds(n: int, r: int) -> dict:
    """Antichain bounds on r-subsets with empty intersection (and full union).

    Keys: ``gamma0n`` (bound on the empty-meet full-union count) and
    ``gamma0n_kind``; for ``r = 2`` also ``beta0`` (the sharp value of the
    disjoint-pair count), ``beta0_level`` (a level attaining it) and
    ``beta0_closed_form`` (the single binomial expression, a Fraction).
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 1:
        raise ValueError("n must be at least 1")
    out: dict = {"n": n, "r": r}
    if r == 2 and n % 2 == 0:
        out["gamma0n"] = gamma_kernel(n, n // 2, 2)
        out["gamma0n_kind"] = "sharp"
    elif r == 2:
        out["gamma0n"] = comb(n - 1, n // 2 - 1) if n >= 2 else 0
        out["gamma0n_kind"] = "odd"
    else:
        out["gamma0n"] = n ** (2 * r) * gamma_kernel(n, n // 2, r)
        out["gamma0n_kind"] = "polynomial"
    if r == 2:
        level = beta2_level(n)
        out["beta0"] = beta_level(n, level, 2, 0)
        out["beta0_level"] = level
        t = n // 3
        out["beta0_closed_form"] = Fraction(comb(n, t) * comb(-(-2 * n // 3), t), 2)
    return out


LaOracle = Callable[[int, Poset], int]


def chain_oracle(m: int, q: Poset) -> int:
    """Exact ``La(m, P_{h+1}, Q)`` when ``Q`` is a chain of height h."""
    k = height(q)
    if k != q.m:
        raise ValueError(f"chain_oracle only handles chains, got {q}")
    return chain_chain_value(m, k).value


def compose_otimes_bound(n: int, q1: Poset, r: int, q2: Poset, la_oracle: LaOracle = chain_oracle) -> int:
    """Upper bound for copies of ``otimes(q1, r, q2)`` with forbidden chain one above its height."""
    if r < 1 or n < 0:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n} r={r}")
    if r == 1:
        return max(comb(n, j) * la_oracle(j, q1) * la_oracle(n - j, q2) for j in range(n + 1))
    best = 0
    for i in range(n + 1):
        lo = la_oracle(i, q1)
        if not lo:
            continue
        for j in range(i + 1, n + 1):
            u = j - i
            value = comb(n, j) * comb(j, i) * gamma_kernel(u, u // 2, r)
            if value:
                best = max(best, value * lo * la_oracle(n - j, q2))
    return n ** (2 * r + 2) * best


def compose_oplus_bound(n: int, q: Poset, r: int, la_oracle: LaOracle = chain_oracle) -> int:
    """Upper bound for copies of ``oplus(q, r)`` with forbidden chain one above its height."""
    if r < 1 or n < 0:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n} r={r}")
    if r == 1:
        return max(comb(n, j) * la_oracle(j, q) for j in range(n + 1))
    best = 0
    for i in range(n + 1):
        lo = la_oracle(i, q)
        if not lo:
            continue
        # The r sets above the copy of q meet in an i-set holding it.
        for j in range(i + 1, n + 1):
            best = max(best, beta_level(n, j, r, i) * lo)
    return n ** (2 * r + 2) * best


def multi1_value(n: int, mid: int, r: int, s: int) -> ArgValue:
    """Most copies of ``K(r, 1, ..., 1, s)`` (``mid`` singleton levels) avoiding a chain of ``mid + 3``.

    ``arg`` is ``(i,)`` for ``mid = 1`` and ``(i, j)`` otherwise, the sizes
    of the lowest and highest singleton levels; ``levels`` is the full level
    tuple of an extremal union of full levels.
    """
    if n < 0 or mid < 1 or r < 1 or s < 1:
        raise ValueError(f"need n >= 0 and mid, r, s >= 1, got n={n} mid={mid} r={r} s={s}")

    def _top(j: int) -> int:
        return max((n + j) // 2, j + 1)

    def ends(i: int, j: int) -> int:
        return comb(_below_weight(i), r) * comb(_below_weight(n - j), s)

    if mid == 1:
        best = _argmax(((i,), comb(n, i) * ends(i, i)) for i in range(n + 1))
        i = best.arg[0]
        return ArgValue(best.value, best.arg, (i // 2, i, _top(i)))

    gaps = mid - 1

    def interior(i: int, j: int) -> int:
        if j - i < gaps:
            return 0
        return _multinomial(j - i, _balanced(j - i, gaps))

    best = _argmax(
        ((i, j), comb(n, j) * comb(j, i) * interior(i, j) * ends(i, j))
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    )
    i, j = best.arg
    if best.value == 0:
        return best
    inner, acc = [], i
    for g in _balanced(j - i, gaps)[:-1]:
        acc += g
        inner.append(acc)
    return ArgValue(best.value, best.arg, (i // 2, i, *inner, j, _top(j)))


def n_two_level_bounds(n: int, i: int, j: int) -> BoundPair:
    """Bounds on copies of N in the union of levels ``i < j`` of ``2^[n]``."""
    if not 0 <= i < j <= n:
        raise ValueError(f"need 0 <= i < j <= n, got n={n} i={i} j={j}")
    lower = comb(n, j) * comb(j, i) ** 2 * comb(n - i, j - i) // 4
    upper = comb(n, j) * comb(j, i) * _mid(n - i) * _mid(j)
    return BoundPair(lower, upper)


def h(x: float) -> float:
    """Binary entropy, with ``h(0) = h(1) = 0``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def c_p(p: int) -> float:
    q = 2 ** p
    return (2 + p * q) / (3 + q) + h(q / (3 + q)) + 3 / (3 + q) * h(2 / 3)


def _cubic_root(tol: float = 1e-12) -> float:
    f = lambda x: 7 * x ** 3 - 10 * x ** 2 + 5 * x - 1
    lo, hi = 0.0, 1.0  # f(0) < 0 < f(1), f increasing
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def numeric_constants() -> dict:
    """Growth-rate constants: ``c0`` (cubic root), ``c``, ``c2`` and ``bb``."""
    c0 = _cubic_root()
    return {
        "c0": c0,
        "c": h(c0) + 3 * c0 * h((1 - c0) / c0),
        "c2": c_p(2),
        "bb": h(4 / 5) + 8 / 5,
    }
