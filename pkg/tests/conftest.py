from itertools import combinations, permutations

from subposet_lab.families import SetFamily


def brute_count(q, family):
    """Copies of q: every |q|-subset, every bijection, checked relation by relation."""
    rels = q.relations()
    total = 0
    for sub in combinations(family.members, q.m):
        for perm in permutations(sub):
            if all(perm[x] != perm[y] and perm[x] & perm[y] == perm[x] for x, y in rels):
                total += 1
                break
    return total


def all_families(n, exclude_extremes=False):
    full = (1 << n) - 1
    universe = [m for m in range(1 << n) if not (exclude_extremes and m in (0, full))]
    for bits in range(1 << len(universe)):
        yield SetFamily(n, tuple(u for i, u in enumerate(universe) if bits >> i & 1))


def brute_la(n, forbidden, q, exclude_extremes=False):
    best = 0
    for fam in all_families(n, exclude_extremes):
        if all(brute_count(p, fam) == 0 for p in forbidden):
            best = max(best, brute_count(q, fam))
    return best
