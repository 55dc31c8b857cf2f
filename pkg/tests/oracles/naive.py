"""Slow reference implementations used to freeze expected values.

Everything here trades speed for obviousness: plain dictionaries, full map
enumerations, a hand-rolled union-find.  The optimized library answers are
compared against these in the test modules; none of the functions below share
code with the package beyond reading the input data's public accessors.
"""

from __future__ import annotations

import itertools

from gammacalc.pointed import FinPointedSet, PointedMap


def pointed_tables(m: int, n: int):
    """Tables of every pointed map m⁺ → n⁺ (slot 0 pinned to 0)."""
    for tail in itertools.product(range(n + 1), repeat=m):
        yield (0,) + tail


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj


def coend_classes(A, X):
    """Classes of (element, evaluation tuple) pairs under the full zig-zag
    relation, scanned over *every* pointed map between degrees — no epi/mono
    shortcut, no degree cutoff below the stored bound.

    Returns ``(class_count, assignment, base_root)`` where ``assignment``
    maps each pair ``(n, a, y_table)`` with ``a`` nonbase to its union-find
    root and ``class_count`` includes the collapsed basepoint class.
    """
    D = A.bound
    pairs: list[tuple[int, int, tuple[int, ...]]] = []
    where: dict[tuple[int, int, tuple[int, ...]], int] = {}
    for n in range(D + 1):
        for a in range(1, A.level(n).total):
            for y in pointed_tables(n, X.size):
                where[(n, a, y)] = len(pairs)
                pairs.append((n, a, y))
    sink = len(pairs)  # everything that degenerates to the basepoint
    uf = UnionFind(sink + 1)

    for m in range(D + 1):
        M = FinPointedSet(m)
        for n in range(D + 1):
            N = FinPointedSet(n)
            for bt in pointed_tables(m, n):
                act = A.act(PointedMap(M, N, bt))
                for y in pointed_tables(n, X.size):
                    pulled = tuple(y[v] for v in bt)
                    for b in range(1, A.level(m).total):
                        moved = act(b)
                        left = sink if moved == 0 else where[(n, moved, y)]
                        uf.union(left, where[(m, b, pulled)])

    base_root = uf.find(sink)
    assignment = {p: uf.find(i) for p, i in where.items()}
    roots = {base_root} | set(assignment.values())
    return len(roots), assignment, base_root


def matches_library_coend(A, X, tb) -> bool:
    """Does the optimized class table induce exactly the naive partition?"""
    n_classes, assignment, base_root = coend_classes(A, X)
    if tb.space.total != n_classes:
        return False
    seen = {base_root: 0}
    used = {0}
    for (n, a, y), root in assignment.items():
        idx = tb.index(n, a, PointedMap(FinPointedSet(n), X, y))
        if root in seen:
            if seen[root] != idx:
                return False
        else:
            if idx in used:
                return False
            seen[root] = idx
            used.add(idx)
    return True


def bell_numbers(upto: int) -> list[int]:
    """1, 1, 2, 5, 15, 52, ... by the triangle recurrence."""
    out = [1]
    row = [1]
    for _ in range(upto):
        prev = row
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        out.append(row[0])
    return out


def rep_level_counts(n: int, k: int) -> tuple[int, int, int]:
    """(total, boundary, outer) at level k of the degree-n representable,
    counted directly over value tuples: boundary = some slot repeats a
    nonzero value or hits zero, outer = some slot hits zero."""
    total = boundary = outer = 0
    for t in itertools.product(range(k + 1), repeat=n):
        total += 1
        hits = 0 in t
        nz = [v for v in t if v]
        if hits:
            outer += 1
        if hits or len(set(nz)) < len(nz):
            boundary += 1
    return total, boundary, outer


# --- finite-subsets semantics ----------------------------------------------


def subsets_semantics(monad, X) -> dict[int, frozenset]:
    """Read each class of the finite-subsets monad as an honest subset.

    The witness element's support is probed with collapse-to-one-slot maps,
    so only the public action of the carrier is consulted — no assumption
    about how levels are numbered internally.
    """
    tb = monad.table(X)
    carrier = monad.theory.carrier
    one = FinPointedSet(1)
    out = {0: frozenset()}
    for cls in range(1, tb.space.total):
        n, a, y = tb.witness(cls)
        N = FinPointedSet(n)
        supp = set()
        for i in range(1, n + 1):
            delta = PointedMap(N, one, tuple(1 if j == i else 0 for j in range(n + 1)))
            if carrier.act(delta)(a) != 0:
                supp.add(y(i))
        out[cls] = frozenset(supp - {0})
    return out


def image_set(f, S: frozenset) -> frozenset:
    return frozenset(f(s) for s in S) - {0}


def all_subsets(xs):
    for r in range(len(xs) + 1):
        for c in itertools.combinations(xs, r):
            yield frozenset(c)


def naive_subsets_algebra_count(sz: int) -> int:
    """Structure maps for the subsets monad on a carrier with ``sz`` nonbase
    points, counted directly on frozensets.

    The unit law pins the empty set and all singletons; the remaining slots
    range over every value and survive only if collapsing a family by union
    agrees with collapsing its image.
    """
    xs = list(range(1, sz + 1))
    nonempty = [S for S in all_subsets(xs) if S]
    bigger = [S for S in nonempty if len(S) >= 2]
    count = 0
    for choice in itertools.product(range(sz + 1), repeat=len(bigger)):
        xi = {frozenset(): 0}
        for x in xs:
            xi[frozenset((x,))] = x
        xi.update(zip(bigger, choice))
        ok = True
        for family in all_subsets(nonempty):
            flat = frozenset().union(*family) if family else frozenset()
            pushed = frozenset(xi[S] for S in family) - {0}
            if xi[flat] != xi[pushed]:
                ok = False
                break
        if ok:
            count += 1
    return count
