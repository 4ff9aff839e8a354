"""Acceptance suites: exact small-n reproduction and property checks.

Each suite returns a :class:`SuiteResult`; ``run_suites`` runs a selection
and ``SUITES`` maps the public suite names to their functions.  A suite
fails if any check fails or it overruns its time limit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Callable, Optional

from . import posets as P
from .constructions import construct
from .counting import count_copies, is_free
from .families import SetFamily, level_union
from .formulas import (
    diamond_bounds,
    h,
    c_p,
    la_chain_chain,
    la_p3_fork,
    la_p4_diamond,
    numeric_constants,
    rtuples_bounds,
    sperner_erdos,
)
from .posets import Poset
from .profiles import count_multilevel_on_levels, maximize_level_weight
from .search import antichain_max_beta, antichain_max_gamma, iter_antichains, la_exact, la_levels

__all__ = ["SuiteResult", "SUITES", "run_suites", "oracle_count", "named_small_posets"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.seconds:.1f}s of {self.limit:.0f}s) {self.detail}"


class _Checks:
    def __init__(self) -> None:
        self.failures: list[str] = []
        self.count = 0

    def eq(self, got, want, what: str) -> None:
        self.count += 1
        if got != want:
            self.failures.append(f"{what}: got {got}, want {want}")

    def true(self, cond: bool, what: str) -> None:
        self.count += 1
        if not cond:
            self.failures.append(what)

    def summary(self) -> str:
        if self.failures:
            shown = "; ".join(self.failures[:3])
            more = f" (+{len(self.failures) - 3} more)" if len(self.failures) > 3 else ""
            return f"{len(self.failures)}/{self.count} checks failed: {shown}{more}"
        return f"{self.count} checks"


def oracle_count(q: Poset, family: SetFamily) -> int:
    """Copies of ``q`` by trying every |q|-subset and every bijection onto it."""
    rels = sorted(q.relations())
    m = q.m
    cache: dict[frozenset, bool] = {}
    total = 0
    for sub in combinations(family.members, m):
        # Pattern of strict inclusions among the chosen members, by position.
        pattern = frozenset(
            (a, b) for a in range(m) for b in range(m)
            if a != b and sub[a] & sub[b] == sub[a] and sub[a] != sub[b]
        )
        hit = cache.get(pattern)
        if hit is None:
            hit = any(all((perm[x], perm[y]) in pattern for x, y in rels)
                      for perm in permutations(range(m)))
            cache[pattern] = hit
        total += hit
    return total


def named_small_posets() -> list[Poset]:
    """Every named poset with at most five elements."""
    out = [P.chain(k) for k in range(1, 6)] + [P.antichain(r) for r in range(1, 6)]
    out += [P.vee(r) for r in range(1, 5)] + [P.wedge(r) for r in range(1, 5)]
    out += [P.diamond(k) for k in range(1, 4)]
    out += [P.n_poset(), P.butterfly(), P.butterfly_plus(), P.butterfly_plusplus()]
    out += [P.multilevel(*c) for c in _compositions_up_to(5) if len(c) > 1 and max(c) > 1]
    return out


def _compositions_up_to(total: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix: tuple[int, ...], left: int) -> None:
        if prefix:
            out.append(prefix)
        for part in range(1, left + 1):
            rec(prefix + (part,), left - part)

    rec((), total)
    return out


def suite_sperner_erdos(c: _Checks) -> None:
    for n in range(0, 5):
        for k in range(1, 4):
            if k <= n + 1:
                c.eq(la_exact(n, [P.chain(k + 1)], P.chain(1)).value, sperner_erdos(n, k),
                     f"La({n},P{k + 1},P1)")


def suite_chain_in_chain(c: _Checks) -> None:
    for n, want in ((2, 2), (3, 6), (4, 12)):
        got = la_exact(n, [P.chain(3)], P.chain(2)).value
        c.eq(got, la_chain_chain(n, 2).value, f"La({n},P3,P2) vs formula")
        c.eq(got, want, f"La({n},P3,P2)")


def suite_easy(c: _Checks) -> None:
    v2, a2 = P.vee(2), P.wedge(2)
    for n in range(1, 5):
        mid = comb(n, n // 2)
        c.eq(la_exact(n, [v2], P.chain(2)).value, mid, f"La({n},V2,P2)")
        c.eq(la_exact(n, [v2, a2], P.chain(2)).value, comb(n - 1, (n - 1) // 2), f"La({n},{{V2,A2}},P2)")
    for n in (2, 3):
        pairs = comb(comb(n, n // 2), 2)
        c.eq(la_exact(n, [P.butterfly()], P.diamond(2)).value, pairs, f"La({n},B,D2)")
        c.eq(la_exact(n, [v2], a2).value, pairs, f"La({n},V2,A2)")


def suite_profile_finite(c: _Checks) -> None:
    fork = la_p3_fork(3, 2).value
    c.eq(fork, 3, "fork formula at n=3")
    c.eq(la_exact(3, [P.chain(3)], P.wedge(2)).value, fork, "La(3,P3,A2)")
    c.eq(la_exact(4, [P.chain(4)], P.diamond(2)).value, la_p4_diamond(4, 2).value, "La(4,P4,D2)")
    for r in (1, 2, 3):
        ratio = la_p3_fork(400, r).arg[0] / 400
        target = 2 ** r / (2 ** r + 1)
        c.true(abs(ratio - target) <= 0.05, f"argmax ratio r={r}: {ratio:.4f} vs {target:.4f}")


def suite_diamond(c: _Checks) -> None:
    for k, l in ((2, 1), (3, 1), (3, 2)):
        for n in range(k, 5):
            bounds = diamond_bounds(n, k, l)
            value = la_exact(n, [P.diamond(k)], P.diamond(l)).value
            c.true(bounds.lower <= value <= bounds.upper,
                   f"D{k}/D{l} n={n}: {bounds.lower} <= {value} <= {bounds.upper}")


def suite_antichain_profile(c: _Checks) -> None:
    for n, want in ((3, 3), (4, 6)):
        closed = rtuples_bounds(n, 2)["beta0_closed_form"]
        got = antichain_max_beta(n, 2).value
        c.eq(got, closed, f"max beta0 n={n} vs closed form")
        c.eq(got, want, f"max beta0 n={n}")
    c.eq(antichain_max_gamma(3, 2).value, comb(2, 0), "max gamma0n n=3")


def suite_level_weight(c: _Checks, seed: int = 2024) -> None:
    rng = random.Random(seed)
    for n in range(0, 5):
        antichains = list(iter_antichains(n))
        for _ in range(20):
            w = [rng.randint(0, 100) for _ in range(n + 1)]
            exhaustive = max(sum(w[m.bit_count()] for m in a) for a in antichains)
            _, level_best = maximize_level_weight(n, 1, 1, lambda s: w[s[0]])
            c.eq(exhaustive, level_best, f"n={n} w={w}")


def suite_engine_oracle(c: _Checks, seed: int = 7) -> None:
    rng = random.Random(seed)
    all3 = [SetFamily(3, tuple(m for m in range(8) if bits >> m & 1)) for bits in range(256)]
    for q in named_small_posets():
        sample4 = [SetFamily(4, tuple(m for m in range(16) if rng.random() < 0.5)) for _ in range(256)]
        for fam in all3 + sample4:
            c.eq(count_copies(q, fam), oracle_count(q, fam), f"{q} on {fam}")


def suite_level_dp(c: _Checks) -> None:
    for parts in _compositions_up_to(6):
        q = P.multilevel(*parts)
        for n in range(0, 6):
            for levels in combinations(range(n + 1), len(parts)):
                c.eq(count_multilevel_on_levels(parts, n, levels),
                     count_copies(q, level_union(n, levels)), f"{q} n={n} levels={levels}")


def suite_constants(c: _Checks) -> None:
    k = numeric_constants()
    c.true(abs(k["c0"] - 0.69922) <= 1e-4, f"c0={k['c0']}")
    c.true(abs(k["c"] - 2.9502) <= 1e-3, f"c={k['c']}")
    c.true(abs(k["bb"] - 2.3219) <= 1e-3, f"bb={k['bb']}")
    c.true(k["bb"] < c_p(2), f"bb={k['bb']} < c_2={c_p(2)}")
    c.true(abs(h(0.5) - 1) <= 1e-12, "h(1/2)=1")


def suite_d2_collapse(c: _Checks) -> None:
    d2, p3 = P.diamond(2), P.chain(3)
    c.eq(la_levels(4, [d2], p3).value, 0, "level unions score 0")
    fam = construct("diamond", 4, k=2)
    c.true(is_free([d2], fam), "construction is D2-free")
    built = count_copies(p3, fam)
    c.true(built >= 2, f"construction has {built} copies of P3")
    exact = la_exact(4, [d2], p3).value
    c.true(exact >= max(2, built), f"La(4,D2,P3)={exact} >= {built}")


def suite_bplusplus(c: _Checks) -> None:
    b = P.butterfly()
    for n in (3, 4):
        a = la_exact(n, [P.chain(3)], b).value
        m = la_exact(n, [P.butterfly_plus()], b).value
        z = la_exact(n, [P.butterfly_plusplus()], b).value
        c.true(a <= m <= z, f"n={n}: {a} <= {m} <= {z}")


SuiteFn = Callable[[_Checks], None]

SUITES: dict[str, tuple[SuiteFn, float]] = {
    "sperner-erdos": (suite_sperner_erdos, 60),
    "chain-in-chain": (suite_chain_in_chain, 60),
    "easy": (suite_easy, 120),
    "profile-finite": (suite_profile_finite, 120),
    "diamond": (suite_diamond, 120),
    "antichain-profile": (suite_antichain_profile, 60),
    "level-weight": (suite_level_weight, 60),
    "engine-oracle": (suite_engine_oracle, 120),
    "level-dp": (suite_level_dp, 60),
    "constants": (suite_constants, 1),
    "d2-collapse": (suite_d2_collapse, 60),
    "bplusplus": (suite_bplusplus, 300),
}


_SEEDED = {"level-weight", "engine-oracle"}


def run_suite(name: str, seed: Optional[int] = None) -> SuiteResult:
    try:
        fn, limit = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    checks = _Checks()
    start = time.perf_counter()
    error = None
    try:
        if seed is not None and name in _SEEDED:
            fn(checks, seed=seed)
        else:
            fn(checks)
    except Exception as exc:  # a crash is a failed suite, not a crashed run
        error = f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    passed = error is None and not checks.failures and seconds <= limit
    detail = error or checks.summary()
    if seconds > limit:
        detail += f"; over time limit {limit:.0f}s"
    return SuiteResult(name, passed, detail, seconds, limit)


def run_suites(names, seed: Optional[int] = None) -> list[SuiteResult]:
    if isinstance(names, str):
        names = [names]
    selected: list[str] = []
    for name in names:
        selected.extend(SUITES if name == "all" else [name])
    for name in selected:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [run_suite(n, seed) for n in selected]
