"""Independent brute-force oracles used to check the package.

Everything here works on plain Python sets of gaps and literal definitions,
deliberately sharing no code with the package under test.
"""

from itertools import combinations


def frob(gaps) -> int:
    return max(gaps) if gaps else -1


def members_upto(gaps, hi) -> list[int]:
    g = set(gaps)
    return [x for x in range(hi + 1) if x not in g]


def is_closed(gaps) -> bool:
    """Complement of the gap set closed under addition."""
    f = frob(gaps)
    t = members_upto(gaps, f)
    return all(a + b not in gaps for a in t for b in t if a and b and a + b <= f)


def atom_monoid_gaps(gaps) -> frozenset:
    """Gaps of A(T) = {x : x + T inside T}, straight from the definition."""
    f = frob(gaps)
    g = set(gaps)
    t = members_upto(gaps, f)
    bad = set()
    for x in range(1, f + 1):
        if x in g or any(x + u in g for u in t if x + u <= f):
            bad.add(x)
    return frozenset(bad)


def gaps_from_generators(gens, hi) -> frozenset:
    """Non-representable values up to hi by breadth-first combination."""
    reach = {0}
    grew = True
    while grew:
        grew = False
        for r in list(reach):
            for g in gens:
                if r + g <= hi and r + g not in reach:
                    reach.add(r + g)
                    grew = True
    return frozenset(x for x in range(1, hi + 1) if x not in reach)


def walk_partition(gaps) -> tuple[int, ...]:
    """Partition of the profile walk, built by simulating the walk itself."""
    rows = []
    x = 0
    for n in range(frob(gaps) + 1):
        if n in set(gaps):
            rows.append(x)  # up-step closes a row of the current width
        else:
            x += 1
    return tuple(reversed(rows))


def hook_multiset(parts) -> tuple[int, ...]:
    """All hook lengths by literally counting boxes right and below."""
    diagram = [[True] * p for p in parts]
    out = []
    for i, row in enumerate(diagram):
        for j in range(len(row)):
            arm = len(row) - j - 1
            leg = sum(1 for r in diagram[i + 1:] if j < len(r))
            out.append(arm + leg + 1)
    return tuple(sorted(out))


def all_gap_sets(max_f):
    """Every numerical-set gap set with Frobenius number <= max_f, N included."""
    yield frozenset()
    for f in range(1, max_f + 1):
        pool = list(range(1, f))
        for r in range(len(pool) + 1):
            for c in combinations(pool, r):
                yield frozenset(c) | {f}


def semigroup_gap_sets_frobenius(f):
    """All semigroup gap sets with Frobenius number exactly f."""
    pool = list(range(1, f))
    out = []
    for r in range(len(pool) + 1):
        for c in combinations(pool, r):
            g = frozenset(c) | {f}
            if is_closed(g):
                out.append(g)
    return out


def semigroup_gap_sets_genus(g):
    """All semigroup gap sets with exactly g gaps (F <= 2g-1 always holds)."""
    if g == 0:
        return [frozenset()]
    return [frozenset(c) for c in combinations(range(1, 2 * g), g)
            if is_closed(frozenset(c))]


def partitions_of(n):
    """All partitions of n as weakly decreasing tuples."""
    def rec(rest, biggest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, biggest), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(n, n)


def pf_numbers(gaps) -> frozenset:
    f = frob(gaps)
    t = [s for s in members_upto(gaps, f) if s]
    return frozenset(p for p in gaps
                     if all(p + s > f or p + s not in gaps for s in t))


def void_of(gaps) -> frozenset:
    f = frob(gaps)
    return frozenset(x for x in gaps if f - x in gaps)


def dual_gap_set(gaps) -> frozenset:
    f = frob(gaps)
    return frozenset(x for x in range(1, f + 1) if f - x not in gaps)


def associated_subsets(gaps):
    """All subsets I of the void with A(S u I) = S, brute force."""
    base = set(gaps)
    out = []
    m = sorted(void_of(gaps))
    for r in range(len(m) + 1):
        for c in combinations(m, r):
            t = frozenset(base - set(c))
            if atom_monoid_gaps(t) == base:
                out.append(frozenset(c))
    return out


def partition_size(gaps) -> int:
    return sum(sum(1 for u in range(x) if u not in set(gaps)) for x in gaps)
