"""Extending level functors to arbitrary finite pointed sets, and products.

The extension of a tabulated functor A along a finite pointed set X is the
quotient of all triples (degree n, label a ∈ A(n), evaluation y: n⁺ → X) by
the relations (n, A(β)(a′), y) ~ (m, a′, y∘β).  Degrees are enumerated up to
``min(A.bound, X.size)`` — every triple reduces below that line by factoring
its evaluation through its image, and the reduced relations generate the same
classes with the same numbering, so the truncation is observationally
invisible (a ``full_degrees`` switch exists for cross-checking).

Relations are generated along epis and monos only: a step along an arbitrary
β is the concatenation of the steps along its epi-mono factorization, so the
equivalence closure is unchanged (``full_relations`` runs the literal
all-maps scan for cross-checking).

The same machinery drives the convolution smash product of two functors, the
substitution (circle) product, and the assembly comparison between them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .budget import guard
from .errors import BinaturalityViolation, DegreeMismatch, NotGenerated
from .gammaset import GammaMap, GammaSet, truncate
from .pointed import (
    FinPointedSet,
    MapSpace,
    PointedMap,
    _UnionFind,
    factor_epi_mono,
    identity,
    map_space,
    smash,
    smash_map,
    smash_pair,
    smash_swap,
)


def _is_epi(f: PointedMap) -> bool:
    return set(f.table) >= set(range(1, f.cod.size + 1))


def _is_mono(f: PointedMap) -> bool:
    return len(set(f.table)) == f.dom.total


@lru_cache(maxsize=None)
def _epi_mono_maps(m: int, n: int) -> tuple[PointedMap, ...]:
    H = map_space(FinPointedSet(m), FinPointedSet(n))
    return tuple(f for f in H.maps() if _is_epi(f) or _is_mono(f))


def _relation_maps(m: int, n: int, full: bool) -> Iterable[PointedMap]:
    if full:
        return map_space(FinPointedSet(m), FinPointedSet(n)).maps()
    return _epi_mono_maps(m, n)


class CoendTable:
    """Classes of (degree, label, evaluation) triples for one target set."""

    __slots__ = ("gamma", "target", "depth", "space", "witnesses", "_offsets", "_class_raw", "_homs")

    def __init__(self, gamma: GammaSet, target: FinPointedSet, depth: int,
                 offsets: list[int], class_raw: list[int], witnesses: list[tuple[int, int, int]],
                 homs: list[MapSpace]):
        self.gamma = gamma
        self.target = target
        self.depth = depth
        self._offsets = offsets
        self._class_raw = class_raw
        self.witnesses = tuple(witnesses)
        self._homs = homs
        self.space = FinPointedSet(len(witnesses) - 1)

    # raw layout: 0 is the basepoint; degree-n block holds (label-1)*t^n + y_idx
    def _raw(self, n: int, a: int, y_idx: int) -> int:
        if a == 0 or n == 0:
            return 0
        return self._offsets[n] + (a - 1) * (self.target.total ** n) + y_idx

    def index_raw(self, n: int, a: int, y_idx: int) -> int:
        return self._class_raw[self._raw(n, a, y_idx)]

    def index(self, n: int, a: int, y: PointedMap) -> int:
        """Class of the triple; degrees above the table's depth are reduced
        by factoring the evaluation through its image."""
        if y.dom.size != n or y.cod != self.target:
            raise DegreeMismatch("evaluation map has the wrong shape")
        if a == 0 or n == 0:
            return 0
        if n > self.depth:
            if n > self.gamma.bound:
                raise NotGenerated(f"degree {n} exceeds the carrier bound {self.gamma.bound}")
            epi, mono = factor_epi_mono(y)
            return self.index(epi.cod.size, self.gamma.act(epi)(a), mono)
        return self._class_raw[self._raw(n, a, self._homs[n].index_of(y))]

    def witness(self, cls: int) -> tuple[int, int, PointedMap]:
        n, a, y_idx = self.witnesses[cls]
        if cls == 0:
            return 0, 0, PointedMap(FinPointedSet(0), self.target, (0,))
        return n, a, self._homs[n].map_at(y_idx)

    @property
    def classes(self) -> int:
        return self.space.total


def prolong(A: GammaSet, X: FinPointedSet, full_degrees: bool = False,
            full_relations: bool = False) -> CoendTable:
    """Value of the extended functor at X, as an explicit class table."""
    d = A.bound if full_degrees else min(A.bound, X.size)
    t = X.total
    homs = [map_space(FinPointedSet(n), X) for n in range(d + 1)]
    offsets = [0] * (d + 1)
    acc = 1
    for n in range(1, d + 1):
        offsets[n] = acc
        acc += A.levels[n].size * (t ** n)
    guard(acc, f"coend table over target of size {X.size}")
    uf = _UnionFind(acc)

    tn = [t ** n for n in range(d + 1)]
    for m in range(d + 1):
        size_m = A.levels[m].size
        for n in range(d + 1):
            off_n, off_m = offsets[n], offsets[m]
            for beta in _relation_maps(m, n, full_relations):
                act = A.act(beta).table
                bt = beta.table  # entries in 0..n
                for y_idx, y in enumerate(itertools.product(range(t), repeat=n)):
                    # y tuple lists values at 1..n; compose with beta, re-read as an index
                    yb = 0
                    for j in range(1, m + 1):
                        v = bt[j]
                        yb = yb * t + (y[v - 1] if v else 0)
                    for a in range(1, size_m + 1):
                        la = act[a]
                        left = off_n + (la - 1) * tn[n] + y_idx if la else 0
                        uf.union(left, off_m + (a - 1) * tn[m] + yb)

    class_raw = [0] * acc
    witnesses: list[tuple[int, int, int]] = [(0, 0, 0)]
    root_to_class = {uf.find(0): 0}
    for n in range(1, d + 1):
        off = offsets[n]
        for a in range(1, A.levels[n].size + 1):
            base = off + (a - 1) * tn[n]
            for y_idx in range(tn[n]):
                r = uf.find(base + y_idx)
                c = root_to_class.get(r)
                if c is None:
                    c = len(root_to_class)
                    root_to_class[r] = c
                    witnesses.append((n, a, y_idx))
                class_raw[base + y_idx] = c
    return CoendTable(A, X, d, offsets, class_raw, witnesses, homs)


def prolong_map(src: CoendTable, dst: CoendTable, f: PointedMap) -> PointedMap:
    """Functoriality in the target: push every class along f."""
    if f.dom != src.target or f.cod != dst.target:
        raise DegreeMismatch("map does not connect the two tables")
    table = [0] * src.space.total
    for cls in range(1, src.space.total):
        n, a, y = src.witness(cls)
        table[cls] = dst.index(n, a, y.then(f))
    return PointedMap(src.space, dst.space, tuple(table))


def prolong_nat(src: CoendTable, dst: CoendTable, theta: GammaMap) -> PointedMap:
    """Naturality in the functor: apply a transformation to every label."""
    if src.target != dst.target:
        raise DegreeMismatch("tables must share their target")
    table = [0] * src.space.total
    for cls in range(1, src.space.total):
        n, a, y = src.witness(cls)
        table[cls] = dst.index(n, theta.level(n)(a), y)
    return PointedMap(src.space, dst.space, tuple(table))


def evaluation_comparison(A: GammaSet, k: int, table: CoendTable | None = None
                          ) -> tuple[CoendTable, PointedMap]:
    """Level k versus the extension at the skeletal k-point target.

    The comparison sends a label to the class of (k, label, identity); it is
    a bijection — the class table is just a re-indexing of the level.
    """
    K = FinPointedSet(k)
    if table is None:
        table = prolong(A, K)
    ident = identity(K)
    fwd = PointedMap(
        A.levels[k], table.space,
        tuple(table.index(k, a, ident) if a else 0 for a in A.levels[k].elements()),
    )
    return table, fwd


# ---------------------------------------------------------------------------
# strength


def strength_elt(x: int, n: int, a: int, y: PointedMap, X: FinPointedSet
                 ) -> tuple[int, int, PointedMap]:
    """x ∧ [a, y] ↦ [a, j ↦ x ∧ y(j)] — the element-level tensorial strength."""
    Y = y.cod
    XY = smash(X, Y)
    table = tuple(smash_pair(X, Y, x, y(j)) for j in y.dom.elements())
    return n, a, PointedMap(y.dom, XY, table)


def strength(A: GammaSet, X: FinPointedSet, Y: FinPointedSet,
             t_y: CoendTable | None = None, t_xy: CoendTable | None = None) -> PointedMap:
    """Materialized X ∧ A(Y) → A(X ∧ Y)."""
    if t_y is None:
        t_y = prolong(A, Y)
    if t_xy is None:
        t_xy = prolong(A, smash(X, Y))
    dom = smash(X, t_y.space)
    table = [0] * dom.total
    for x in X.nonbase():
        for c in t_y.space.nonbase():
            n, a, y = t_y.witness(c)
            en, ea, ey = strength_elt(x, n, a, y, X)
            table[smash_pair(X, t_y.space, x, c)] = t_xy.index(en, ea, ey)
    return PointedMap(dom, t_xy.space, tuple(table))


def costrength(A: GammaSet, X: FinPointedSet, Y: FinPointedSet,
               t_x: CoendTable, t_yx: CoendTable, t_xy: CoendTable) -> PointedMap:
    """A(X) ∧ Y → A(X ∧ Y), literally swap, strength, push the inner swap."""
    sw_out = smash_swap(t_x.space, Y)
    sig = strength(A, Y, X, t_x, t_yx)
    push = prolong_map(t_yx, t_xy, smash_swap(Y, X))
    return sw_out.then(sig).then(push)


# ---------------------------------------------------------------------------
# convolution smash product


class DayProduct:
    """Convolution product of two tabulated functors, with class tables per level."""

    __slots__ = ("left", "right", "out_bound", "gamma", "_levels")

    def __init__(self, left: GammaSet, right: GammaSet, out_bound: int,
                 levels: list["_DayLevelTable"]):
        self.left = left
        self.right = right
        self.out_bound = out_bound
        self._levels = levels
        action = {}
        for m in range(out_bound + 1):
            for n in range(out_bound + 1):
                for f in map_space(FinPointedSet(m), FinPointedSet(n)).maps():
                    action[(m, n, f.table)] = self._act(f)
        self.gamma = GammaSet([lv.space for lv in levels], action, check_keys=False)

    def _act(self, f: PointedMap) -> PointedMap:
        src, dst = self._levels[f.dom.size], self._levels[f.cod.size]
        table = [0] * src.space.total
        for cls in range(1, src.space.total):
            m, n, a, b, g = src.witness(cls)
            table[cls] = dst.index(m, n, a, b, g.then(f))
        return PointedMap(src.space, dst.space, tuple(table))

    def index(self, k: int, m: int, n: int, a: int, b: int, g: PointedMap) -> int:
        return self._levels[k].index(m, n, a, b, g)

    def witness(self, k: int, cls: int) -> tuple[int, int, int, int, PointedMap]:
        return self._levels[k].witness(cls)

    def level(self, k: int) -> FinPointedSet:
        return self._levels[k].space


def day_smash(A: GammaSet, B: GammaSet, out_bound: int) -> DayProduct:
    """Convolution product; inner degrees run over the factors' own bounds."""
    levels = [_build_day_level(A, B, k) for k in range(out_bound + 1)]
    return DayProduct(A, B, out_bound, levels)


class _DayLevelTable:
    """One output level of the convolution product."""

    __slots__ = ("k", "A", "B", "space", "witnesses", "_offsets", "_class_raw", "_homs")

    def __init__(self, k, A, B, offsets, class_raw, witnesses, homs):
        self.k, self.A, self.B = k, A, B
        self._offsets = offsets
        self._class_raw = class_raw
        self.witnesses = witnesses
        self._homs = homs
        self.space = FinPointedSet(len(witnesses) - 1)

    def _raw(self, m: int, n: int, a: int, b: int, g_idx: int) -> int:
        if a == 0 or b == 0:
            return 0
        sb = self.B.levels[n].size
        return self._offsets[(m, n)] + ((a - 1) * sb + (b - 1)) * self._homs[(m, n)].space.total + g_idx

    def index(self, m: int, n: int, a: int, b: int, g: PointedMap) -> int:
        if a == 0 or b == 0:
            return 0
        H = self._homs.get((m, n))
        if H is None:
            raise NotGenerated(f"inner degrees ({m},{n}) exceed the factor bounds")
        if g.dom.size != m * n or g.cod.size != self.k:
            raise DegreeMismatch("pairing map has the wrong shape")
        return self._class_raw[self._raw(m, n, a, b, H.index_of(g))]

    def witness(self, cls: int) -> tuple[int, int, int, int, PointedMap]:
        if cls == 0:
            return 0, 0, 0, 0, PointedMap(FinPointedSet(0), FinPointedSet(self.k), (0,))
        m, n, a, b, g_idx = self.witnesses[cls]
        return m, n, a, b, self._homs[(m, n)].map_at(g_idx)


def _build_day_level(A: GammaSet, B: GammaSet, k: int) -> _DayLevelTable:
    dA, dB = A.bound, B.bound
    K = FinPointedSet(k)
    homs: dict[tuple[int, int], MapSpace] = {}
    offsets: dict[tuple[int, int], int] = {}
    acc = 1
    for m in range(dA + 1):
        for n in range(dB + 1):
            homs[(m, n)] = map_space(FinPointedSet(m * n), K)
            offsets[(m, n)] = acc
            acc += A.levels[m].size * B.levels[n].size * homs[(m, n)].space.total
    guard(acc, f"convolution level {k}")
    uf = _UnionFind(acc)
    t = k + 1

    def raw(m, n, a, b, g_idx):
        if a == 0 or b == 0:
            return 0
        return offsets[(m, n)] + ((a - 1) * B.levels[n].size + (b - 1)) * homs[(m, n)].space.total + g_idx

    # left-axis relations: (A(α)a, b, g) ~ (a, b, g∘(α∧id))
    for m in range(dA + 1):
        for m2 in range(dA + 1):
            for alpha in _epi_mono_maps(m, m2):
                act = A.act(alpha).table
                for n in range(dB + 1):
                    sb = B.levels[n].size
                    if sb == 0 and n != 0:
                        continue
                    pre = smash_map(alpha, identity(FinPointedSet(n))).table
                    Hs, Hd = homs[(m2, n)], homs[(m, n)]
                    for g_idx, g in enumerate(itertools.product(range(t), repeat=m2 * n)):
                        gi = 0
                        for s in range(1, m * n + 1):
                            v = pre[s]
                            gi = gi * t + (g[v - 1] if v else 0)
                        for a in range(1, A.levels[m].size + 1):
                            la = act[a]
                            for b in range(1, sb + 1):
                                uf.union(raw(m2, n, la, b, g_idx), raw(m, n, a, b, gi))
    # right-axis relations: (a, B(β)b, g) ~ (a, b, g∘(id∧β))
    for n in range(dB + 1):
        for n2 in range(dB + 1):
            for beta in _epi_mono_maps(n, n2):
                act = B.act(beta).table
                for m in range(dA + 1):
                    sa = A.levels[m].size
                    if sa == 0 and m != 0:
                        continue
                    pre = smash_map(identity(FinPointedSet(m)), beta).table
                    for g_idx, g in enumerate(itertools.product(range(t), repeat=m * n2)):
                        gi = 0
                        for s in range(1, m * n + 1):
                            v = pre[s]
                            gi = gi * t + (g[v - 1] if v else 0)
                        for a in range(1, sa + 1):
                            for b in range(1, B.levels[n].size + 1):
                                lb = act[b]
                                uf.union(raw(m, n2, a, lb, g_idx), raw(m, n, a, b, gi))

    class_raw = [0] * acc
    witnesses: list[tuple[int, int, int, int, int]] = [(0, 0, 0, 0, 0)]
    root_to_class = {uf.find(0): 0}
    for m in range(dA + 1):
        for n in range(dB + 1):
            ht = homs[(m, n)].space.total
            for a in range(1, A.levels[m].size + 1):
                for b in range(1, B.levels[n].size + 1):
                    base = offsets[(m, n)] + ((a - 1) * B.levels[n].size + (b - 1)) * ht
                    for g_idx in range(ht):
                        r = uf.find(base + g_idx)
                        c = root_to_class.get(r)
                        if c is None:
                            c = len(root_to_class)
                            root_to_class[r] = c
                            witnesses.append((m, n, a, b, g_idx))
                        class_raw[base + g_idx] = c
    return _DayLevelTable(k, A, B, offsets, class_raw, witnesses, homs)


def pairing_into_product(day: DayProduct, m: int, n: int) -> PointedMap:
    """The universal pairing A(m) ∧ B(n) → (A∧B)(m·n)."""
    Am, Bn = day.left.levels[m], day.right.levels[n]
    dom = smash(Am, Bn)
    ident = identity(FinPointedSet(m * n))
    table = [0] * dom.total
    for a in Am.nonbase():
        for b in Bn.nonbase():
            table[smash_pair(Am, Bn, a, b)] = day.index(m * n, m, n, a, b, ident)
    return PointedMap(dom, day.level(m * n), tuple(table))


def from_binatural_family(day: DayProduct, C: GammaSet,
                          family: Callable[[int, int], PointedMap]) -> GammaMap:
    """Induce a transformation out of the product from a two-sided natural family.

    ``family(m, n)`` must be a pointed map A(m) ∧ B(n) → C(m·n); two-sided
    naturality is checked first and BinaturalityViolation raised on failure.
    """
    A, B = day.left, day.right
    for m in range(A.bound + 1):
        for m2 in range(A.bound + 1):
            for alpha in map_space(FinPointedSet(m), FinPointedSet(m2)).maps():
                for n in range(B.bound + 1):
                    if m * n > day.out_bound or m2 * n > day.out_bound:
                        continue
                    lhs = smash_map(A.act(alpha), identity(B.levels[n])).then(family(m2, n))
                    rhs = family(m, n).then(C.act(smash_map(alpha, identity(FinPointedSet(n)))))
                    if lhs.table != rhs.table:
                        raise BinaturalityViolation(f"left naturality fails at {alpha.table}, n={n}")
    for n in range(B.bound + 1):
        for n2 in range(B.bound + 1):
            for beta in map_space(FinPointedSet(n), FinPointedSet(n2)).maps():
                for m in range(A.bound + 1):
                    if m * n > day.out_bound or m * n2 > day.out_bound:
                        continue
                    lhs = smash_map(identity(A.levels[m]), B.act(beta)).then(family(m, n2))
                    rhs = family(m, n).then(C.act(smash_map(identity(FinPointedSet(m)), beta)))
                    if lhs.table != rhs.table:
                        raise BinaturalityViolation(f"right naturality fails at {beta.table}, m={m}")
    comps = []
    for k in range(day.out_bound + 1):
        table = [0] * day.level(k).total
        for cls in range(1, day.level(k).total):
            m, n, a, b, g = day.witness(k, cls)
            u = family(m, n)(smash_pair(day.left.levels[m], day.right.levels[n], a, b))
            table[cls] = C.act(g)(u)
        comps.append(PointedMap(day.level(k), C.levels[k], tuple(table)))
    # witnesses may sit in blocks above the output bound, so C can be wider
    # than the product; the transformation itself lives at the output bound
    cod = C if C.bound == day.out_bound else truncate(C, day.out_bound)
    gm = GammaMap(day.gamma, cod, tuple(comps))
    gm.validate()
    return gm


def to_binatural_family(day: DayProduct, gm: GammaMap, m: int, n: int) -> PointedMap:
    """Restrict a transformation out of the product to one pairing component."""
    return pairing_into_product(day, m, n).then(gm.level(m * n))


# ---------------------------------------------------------------------------
# substitution product and assembly


class CircleProduct:
    """Levelwise extension of A along the levels of B."""

    __slots__ = ("left", "right", "gamma", "tables")

    def __init__(self, left: GammaSet, right: GammaSet, out_bound: int):
        self.left = left
        self.right = right
        self.tables = [prolong(left, right.levels[k]) for k in range(out_bound + 1)]
        action = {}
        for m in range(out_bound + 1):
            for n in range(out_bound + 1):
                for f in map_space(FinPointedSet(m), FinPointedSet(n)).maps():
                    action[(m, n, f.table)] = self._act(f)
        self.gamma = GammaSet([tb.space for tb in self.tables], action, check_keys=False)

    def _act(self, f: PointedMap) -> PointedMap:
        src, dst = self.tables[f.dom.size], self.tables[f.cod.size]
        push = self.right.act(f)
        table = [0] * src.space.total
        for cls in range(1, src.space.total):
            n, a, y = src.witness(cls)
            table[cls] = dst.index(n, a, y.then(push))
        return PointedMap(src.space, dst.space, tuple(table))


def circle(A: GammaSet, B: GammaSet, out_bound: int) -> CircleProduct:
    if out_bound > B.bound:
        raise DegreeMismatch("output bound exceeds the right factor's bound")
    return CircleProduct(A, B, out_bound)


def block_inclusion(i: int, n: int, m: int) -> PointedMap:
    """The i-th block n⁺ → (m·n)⁺ under the lexicographic pairing, 1 ≤ i ≤ m."""
    return PointedMap(
        FinPointedSet(n), FinPointedSet(m * n),
        (0,) + tuple((i - 1) * n + j for j in range(1, n + 1)),
    )


def extends(low: GammaSet, high: GammaSet) -> bool:
    """True when `high` agrees with `low` on all of `low`'s degrees."""
    if high.bound < low.bound:
        return False
    for m in range(low.bound + 1):
        if high.levels[m] != low.levels[m]:
            return False
        for n in range(low.bound + 1):
            for f in map_space(FinPointedSet(m), FinPointedSet(n)).maps():
                if high.act(f).table != low.act(f).table:
                    return False
    return True


def assembly(day: DayProduct, circ: CircleProduct) -> GammaMap:
    """Canonical comparison from the convolution product to the substitution product.

    A product class (m, n, a, b, g) goes to [a, w] where w feeds b into each
    of the m blocks of g.  The substitution product's factors may carry more
    degrees than the convolution's (the latter only ever needs witnesses up
    to each factor's generating degree) but must agree where both exist.
    """
    if not (extends(day.left, circ.left) and extends(day.right, circ.right)):
        raise DegreeMismatch("products must share their factors where defined")
    B = circ.right
    comps = []
    for k in range(day.out_bound + 1):
        Bk = B.levels[k]
        table = [0] * day.level(k).total
        for cls in range(1, day.level(k).total):
            m, n, a, b, g = day.witness(k, cls)
            w = PointedMap(
                FinPointedSet(m), Bk,
                (0,) + tuple(B.act(block_inclusion(i, n, m).then(g))(b) for i in range(1, m + 1)),
            )
            table[cls] = circ.tables[k].index(m, a, w)
        comps.append(PointedMap(day.level(k), circ.tables[k].space, tuple(table)))
    gm = GammaMap(day.gamma, circ.gamma, tuple(comps))
    gm.validate()
    return gm


# ---------------------------------------------------------------------------
# comparison between extension-of-substitution and iterated extension


@dataclass(frozen=True)
class NestedExtension:
    """prolong(A∘B, X) against prolong(A, prolong(B, X))."""

    outer_of_circle: CoendTable  # classes of (A∘B) extended along X
    inner: CoendTable  # B extended along X
    outer: CoendTable  # A extended along the classes of `inner`
    forward: PointedMap
    backward: PointedMap


def circle_prolong_iso(A: GammaSet, B: GammaSet, circ: CircleProduct,
                       X: FinPointedSet) -> NestedExtension:
    lhs = prolong(circ.gamma, X)
    inner = prolong(B, X)
    outer = prolong(A, inner.space)

    fwd = [0] * lhs.space.total
    for cls in range(1, lhs.space.total):
        m, c, y = lhs.witness(cls)  # c is a class of prolong(A, B(m)), y: m → X
        n, a, z = circ.tables[m].witness(c)  # z: n → B(m)
        w = PointedMap(
            FinPointedSet(n), inner.space,
            (0,) + tuple(inner.index(m, z(i), y) for i in range(1, n + 1)),
        )
        fwd[cls] = outer.index(n, a, w)
    forward = PointedMap(lhs.space, outer.space, tuple(fwd))

    bwd = [0] * outer.space.total
    for cls in range(1, outer.space.total):
        n, a, w = outer.witness(cls)  # w: n → classes of inner
        parts = []
        for i in range(1, n + 1):
            wi = w(i)
            if wi == 0:
                parts.append(None)
            else:
                parts.append(inner.witness(wi))  # (m_i, b_i, y_i)
        N = sum(p[0] for p in parts if p is not None)
        if N > circ.right.bound or N > len(circ.tables) - 1:
            raise NotGenerated(f"assembled degree {N} exceeds the available levels")
        z_table = [0] * (n + 1)
        y_table = [0] * (N + 1)
        off = 0
        for i, p in enumerate(parts, start=1):
            if p is None:
                continue
            m_i, b_i, y_i = p
            kappa = PointedMap(
                FinPointedSet(m_i), FinPointedSet(N),
                (0,) + tuple(off + s for s in range(1, m_i + 1)),
            )
            z_table[i] = B.act(kappa)(b_i)
            for s in range(1, m_i + 1):
                y_table[off + s] = y_i(s)
            off += m_i
        z = PointedMap(FinPointedSet(n), B.levels[N], tuple(z_table))
        c = circ.tables[N].index(n, a, z)
        yN = PointedMap(FinPointedSet(N), X, tuple(y_table))
        bwd[cls] = lhs.index(N, c, yN)
    backward = PointedMap(outer.space, lhs.space, tuple(bwd))
    return NestedExtension(lhs, inner, outer, forward, backward)


# ---------------------------------------------------------------------------
# canonical comparisons for representable factors


def representable_day_iso(day: DayProduct, target: GammaSet, a_deg: int, b_deg: int) -> GammaMap:
    """(degree-a rep) ∧ (degree-b rep) → degree-a·b rep: smash the two elements."""
    ab = a_deg * b_deg
    Hs = {m: map_space(FinPointedSet(a_deg), FinPointedSet(m)) for m in range(day.left.bound + 1)}
    Ks = {n: map_space(FinPointedSet(b_deg), FinPointedSet(n)) for n in range(day.right.bound + 1)}
    comps = []
    for k in range(day.out_bound + 1):
        Out = map_space(FinPointedSet(ab), FinPointedSet(k))
        table = [0] * day.level(k).total
        for cls in range(1, day.level(k).total):
            m, n, a, b, g = day.witness(k, cls)
            fa = Hs[m].map_at(a)
            fb = Ks[n].map_at(b)
            table[cls] = Out.index_of(smash_map(fa, fb).then(g))
        comps.append(PointedMap(day.level(k), target.levels[k], tuple(table)))
    gm = GammaMap(day.gamma, target, tuple(comps))
    gm.validate()
    return gm


def day_unit_right_iso(day: DayProduct, right_ext: GammaSet) -> GammaMap:
    """(degree-1 rep) ∧ B → B: route b through the block its label selects.

    ``right_ext`` must extend the product's right factor up to the output
    bound (the comparison composes with pairings into every output level).
    """
    if day.left.levels[1].size != 1 or day.left.bound < 1:
        raise DegreeMismatch("left factor is not the unit representable")
    if not extends(day.right, right_ext) or right_ext.bound < day.out_bound:
        raise DegreeMismatch("need the right factor extended to the output bound")
    comps = []
    for k in range(day.out_bound + 1):
        table = [0] * day.level(k).total
        for cls in range(1, day.level(k).total):
            m, n, a, b, g = day.witness(k, cls)
            # nonbase elements of the degree-1 representable at m are the values 1..m
            table[cls] = right_ext.act(block_inclusion(a, n, m).then(g))(b)
        comps.append(PointedMap(day.level(k), right_ext.levels[k], tuple(table)))
    gm = GammaMap(day.gamma, right_ext, tuple(comps))
    gm.validate()
    return gm


def day_unit_left_iso(day: DayProduct, left_ext: GammaSet) -> GammaMap:
    """A ∧ (degree-1 rep) → A, mirror of the right-unit comparison."""
    if day.right.levels[1].size != 1 or day.right.bound < 1:
        raise DegreeMismatch("right factor is not the unit representable")
    if not extends(day.left, left_ext) or left_ext.bound < day.out_bound:
        raise DegreeMismatch("need the left factor extended to the output bound")
    comps = []
    for k in range(day.out_bound + 1):
        table = [0] * day.level(k).total
        for cls in range(1, day.level(k).total):
            m, n, a, b, g = day.witness(k, cls)
            # pick the b-th entry of each block: m⁺ → k⁺, i ↦ g((i-1)n + b)
            sel = PointedMap(
                FinPointedSet(m), FinPointedSet(g.cod.size),
                (0,) + tuple(g((i - 1) * n + b) for i in range(1, m + 1)),
            )
            table[cls] = left_ext.act(sel)(a)
        comps.append(PointedMap(day.level(k), left_ext.levels[k], tuple(table)))
    gm = GammaMap(day.gamma, left_ext, tuple(comps))
    gm.validate()
    return gm


def circle_unit_right_iso(circ: CircleProduct, left_ext: GammaSet) -> GammaMap:
    """A ∘ (degree-1 rep) → A: evaluations into unit-rep levels are plain maps."""
    if circ.right.levels[1].size != 1:
        raise DegreeMismatch("right factor is not the unit representable")
    out_bound = len(circ.tables) - 1
    if not extends(circ.left, left_ext) or left_ext.bound < out_bound:
        raise DegreeMismatch("need the left factor extended to the output bound")
    comps = []
    for k in range(out_bound + 1):
        src = circ.tables[k]
        table = [0] * src.space.total
        for cls in range(1, src.space.total):
            m, a, y = src.witness(cls)
            # unit-rep level k is 1⁺ → k⁺, so the element y(j) *is* a value in 0..k
            as_map = PointedMap(FinPointedSet(m), FinPointedSet(k), y.table)
            table[cls] = left_ext.act(as_map)(a)
        comps.append(PointedMap(src.space, left_ext.levels[k], tuple(table)))
    gm = GammaMap(circ.gamma, left_ext, tuple(comps))
    gm.validate()
    return gm


def circle_unit_left_iso(circ: CircleProduct, target: GammaSet) -> GammaMap:
    """(degree-1 rep) ∘ B → B: a class [a, y] is just the point y(a)."""
    if circ.left.levels[1].size != 1:
        raise DegreeMismatch("left factor is not the unit representable")
    out_bound = len(circ.tables) - 1
    comps = []
    for k in range(out_bound + 1):
        src = circ.tables[k]
        table = [0] * src.space.total
        for cls in range(1, src.space.total):
            m, a, y = src.witness(cls)
            # nonbase degree-1-rep elements at m are the values 1..m
            table[cls] = y(a)
        comps.append(PointedMap(src.space, target.levels[k], tuple(table)))
    gm = GammaMap(circ.gamma, target, tuple(comps))
    gm.validate()
    return gm


def representable_circle_iso(circ: CircleProduct, target: GammaSet, a_deg: int, b_deg: int) -> GammaMap:
    """(degree-a rep) ∘ (degree-b rep) → degree-a·b rep: block-substitute."""
    ab = a_deg * b_deg
    comps = []
    for k in range(len(circ.tables)):
        Out = map_space(FinPointedSet(ab), FinPointedSet(k))
        Bk = map_space(FinPointedSet(b_deg), FinPointedSet(k))
        src = circ.tables[k]
        table = [0] * src.space.total
        for cls in range(1, src.space.total):
            n, a, y = src.witness(cls)  # a indexes a map a_deg → n; y: n → rep(b)(k)
            fa = map_space(FinPointedSet(a_deg), FinPointedSet(n)).map_at(a)
            out = [0] * (ab + 1)
            for i in range(1, a_deg + 1):
                yi = y(fa(i))
                if yi == 0:
                    continue
                fy = Bk.map_at(yi)
                for j in range(1, b_deg + 1):
                    out[(i - 1) * b_deg + j] = fy(j)
            table[cls] = Out.index_of(PointedMap(FinPointedSet(ab), FinPointedSet(k), tuple(out)))
        comps.append(PointedMap(src.space, target.levels[k], tuple(table)))
    gm = GammaMap(circ.gamma, target, tuple(comps))
    gm.validate()
    return gm
