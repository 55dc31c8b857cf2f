"""Finite pointed sets and the closed symmetric monoidal structure on them.

Conventions used throughout the library:

* A finite pointed set is skeletal: its elements are ``0..size`` and ``0`` is
  the basepoint.  ``size`` counts the NON-basepoint elements, so the total
  cardinality is ``size + 1``.
* The smash product of ``X`` and ``Y`` has size ``X.size * Y.size`` and the
  nonzero pair ``(i, j)`` sits at index ``(i - 1) * Y.size + j`` — a global
  lexicographic pairing that every other module relies on.
* The internal hom ``map_space(X, Y)`` enumerates pointed maps in
  lexicographic order of their value tables; index ``0`` is the constant
  basepoint map, which is the basepoint of the hom object.

Everything is immutable after construction so tables can be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .budget import guard
from .errors import DegreeMismatch, SubsetNotInvariant


@dataclass(frozen=True)
class FinPointedSet:
    """Skeletal finite pointed set ``{0, 1, .., size}`` with basepoint 0."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be >= 0")
        if self.labels is not None and len(self.labels) != self.size + 1:
            raise ValueError("labels must name every element incl. basepoint")

    @property
    def total(self) -> int:
        return self.size + 1

    def elements(self) -> range:
        return range(self.size + 1)

    def nonbase(self) -> range:
        return range(1, self.size + 1)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def __repr__(self):
        return f"FinPointedSet({self.size})"


#: the monoidal unit: two points, basepoint and one marker
UNIT = FinPointedSet(1)


def pt() -> FinPointedSet:
    """The zero object: just a basepoint."""
    return FinPointedSet(0)


@dataclass(frozen=True)
class PointedMap:
    """Basepoint-preserving map, stored as a full value table.

    ``table[i]`` is the image of ``i``; ``table[0]`` must be 0.
    """

    dom: FinPointedSet
    cod: FinPointedSet
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.total:
            raise DegreeMismatch(
                f"table has {len(self.table)} entries for domain of total {self.dom.total}"
            )
        if self.table[0] != 0:
            raise ValueError("basepoint must map to basepoint")
        for v in self.table:
            if not 0 <= v <= self.cod.size:
                raise ValueError(f"value {v} outside codomain 0..{self.cod.size}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def then(self, other: "PointedMap") -> "PointedMap":
        """Diagrammatic composite: ``self`` first, then ``other``."""
        if self.cod.size != other.dom.size:
            raise DegreeMismatch("composition mismatch")
        return PointedMap(self.dom, other.cod, tuple(other.table[v] for v in self.table))

    def is_identity(self) -> bool:
        return self.dom.size == self.cod.size and all(v == i for i, v in enumerate(self.table))

    def is_iso(self) -> bool:
        if self.dom.size != self.cod.size:
            return False
        return sorted(self.table) == list(range(self.dom.total))

    def image(self) -> frozenset[int]:
        return frozenset(self.table)

    def __repr__(self):
        return f"PointedMap({self.dom.size}->{self.cod.size}, {list(self.table)})"


def identity(X: FinPointedSet) -> PointedMap:
    return PointedMap(X, X, tuple(X.elements()))


def zero_map(X: FinPointedSet, Y: FinPointedSet) -> PointedMap:
    return PointedMap(X, Y, (0,) * X.total)


def compose(g: PointedMap, f: PointedMap) -> PointedMap:
    """Classical order: ``compose(g, f) = g after f``."""
    return f.then(g)


# ---------------------------------------------------------------------------
# smash product


def smash(X: FinPointedSet, Y: FinPointedSet) -> FinPointedSet:
    return FinPointedSet(X.size * Y.size)


def smash_pair(X: FinPointedSet, Y: FinPointedSet, i: int, j: int) -> int:
    """Index of ``i ∧ j``.  Anything involving a basepoint collapses to 0."""
    if i == 0 or j == 0:
        return 0
    return (i - 1) * Y.size + j


def smash_unpair(X: FinPointedSet, Y: FinPointedSet, k: int) -> tuple[int, int]:
    """Inverse of :func:`smash_pair` on nonzero indices."""
    if k == 0:
        return (0, 0)
    return ((k - 1) // Y.size + 1, (k - 1) % Y.size + 1)


def smash_map(f: PointedMap, g: PointedMap) -> PointedMap:
    """``f ∧ g`` on the smash products."""
    dom = smash(f.dom, g.dom)
    cod = smash(f.cod, g.cod)
    table = [0] * dom.total
    for i in f.dom.nonbase():
        fi = f(i)
        for j in g.dom.nonbase():
            table[smash_pair(f.dom, g.dom, i, j)] = smash_pair(f.cod, g.cod, fi, g(j))
    return PointedMap(dom, cod, tuple(table))


def smash_swap(X: FinPointedSet, Y: FinPointedSet) -> PointedMap:
    """Symmetry ``X ∧ Y → Y ∧ X``."""
    dom = smash(X, Y)
    table = [0] * dom.total
    for i in X.nonbase():
        for j in Y.nonbase():
            table[smash_pair(X, Y, i, j)] = smash_pair(Y, X, j, i)
    return PointedMap(dom, smash(Y, X), tuple(table))


def smash_assoc(X: FinPointedSet, Y: FinPointedSet, Z: FinPointedSet) -> PointedMap:
    """Associator ``(X ∧ Y) ∧ Z → X ∧ (Y ∧ Z)``.

    With the global lexicographic pairing both bracketings index triples the
    same way, so this is numerically the identity — but we keep it explicit
    so coherence never has to be taken on faith.
    """
    XY = smash(X, Y)
    YZ = smash(Y, Z)
    dom = smash(XY, Z)
    cod = smash(X, YZ)
    table = [0] * dom.total
    for i in X.nonbase():
        for j in Y.nonbase():
            ij = smash_pair(X, Y, i, j)
            for k in Z.nonbase():
                table[smash_pair(XY, Z, ij, k)] = smash_pair(X, YZ, i, smash_pair(Y, Z, j, k))
    return PointedMap(dom, cod, tuple(table))


def unit_left(X: FinPointedSet) -> PointedMap:
    """``UNIT ∧ X → X``, the pair ``(1, x) ↦ x``."""
    dom = smash(UNIT, X)
    table = [0] * dom.total
    for x in X.nonbase():
        table[smash_pair(UNIT, X, 1, x)] = x
    return PointedMap(dom, X, tuple(table))


def unit_right(X: FinPointedSet) -> PointedMap:
    dom = smash(X, UNIT)
    table = [0] * dom.total
    for x in X.nonbase():
        table[smash_pair(X, UNIT, x, 1)] = x
    return PointedMap(dom, X, tuple(table))


# ---------------------------------------------------------------------------
# wedge


@dataclass(frozen=True)
class Wedge:
    space: FinPointedSet
    inl: PointedMap
    inr: PointedMap

    def case(self, f: PointedMap, g: PointedMap) -> PointedMap:
        """Copairing: the unique map restricting to ``f`` and ``g`` on the legs."""
        if f.cod != g.cod:
            raise DegreeMismatch("copairing legs must share a codomain")
        table = [0] * self.space.total
        for i in self.inl.dom.nonbase():
            table[self.inl(i)] = f(i)
        for j in self.inr.dom.nonbase():
            table[self.inr(j)] = g(j)
        return PointedMap(self.space, f.cod, tuple(table))


def wedge(X: FinPointedSet, Y: FinPointedSet) -> Wedge:
    """One-point union: copies of X and Y glued at the basepoint.

    Left summand keeps its indices, right summand is shifted by ``X.size``.
    """
    W = FinPointedSet(X.size + Y.size)
    inl = PointedMap(X, W, tuple(X.elements()))
    inr = PointedMap(Y, W, (0,) + tuple(X.size + j for j in Y.nonbase()))
    return Wedge(W, inl, inr)


# ---------------------------------------------------------------------------
# internal hom


@dataclass(frozen=True)
class MapSpace:
    """All pointed maps ``dom → cod`` as a pointed set.

    Index scheme: the tuple ``(f(1), .., f(size))`` read as a base-``cod.total``
    number, most significant digit first.  Index 0 is the zero map and is the
    basepoint of :attr:`space`.
    """

    dom: FinPointedSet
    cod: FinPointedSet
    space: FinPointedSet = field(init=False)

    def __post_init__(self):
        n = self.cod.total ** self.dom.size
        guard(n, f"map space {self.dom.size}->{self.cod.size}")
        object.__setattr__(self, "space", FinPointedSet(n - 1))

    def index_of(self, f: PointedMap) -> int:
        if f.dom.size != self.dom.size or f.cod.size != self.cod.size:
            raise DegreeMismatch("map does not belong to this hom space")
        idx = 0
        t = self.cod.total
        for i in self.dom.nonbase():
            idx = idx * t + f.table[i]
        return idx

    def map_at(self, idx: int) -> PointedMap:
        t = self.cod.total
        vals = []
        rem = idx
        for _ in range(self.dom.size):
            vals.append(rem % t)
            rem //= t
        if rem:
            raise IndexError(f"{idx} out of range for this hom space")
        return PointedMap(self.dom, self.cod, (0,) + tuple(reversed(vals)))

    def maps(self) -> Iterator[PointedMap]:
        t = self.cod.total
        for vals in itertools.product(range(t), repeat=self.dom.size):
            yield PointedMap(self.dom, self.cod, (0,) + vals)


@lru_cache(maxsize=None)
def map_space(X: FinPointedSet, Y: FinPointedSet) -> MapSpace:
    return MapSpace(X, Y)


def ev(X: FinPointedSet, Y: FinPointedSet) -> PointedMap:
    """Evaluation ``Hom(X, Y) ∧ X → Y``."""
    H = map_space(X, Y)
    E = H.space
    dom = smash(E, X)
    table = [0] * dom.total
    for e in E.nonbase():
        f = H.map_at(e)
        for x in X.nonbase():
            table[smash_pair(E, X, e, x)] = f(x)
    return PointedMap(dom, Y, tuple(table))


def gamma_coev(X: FinPointedSet, Y: FinPointedSet) -> PointedMap:
    """Coevaluation ``X → Hom(Y, X ∧ Y)``, sending x to ``y ↦ x ∧ y``."""
    H = map_space(Y, smash(X, Y))
    table = [0] * X.total
    for x in X.nonbase():
        fx = PointedMap(
            Y, smash(X, Y), tuple(smash_pair(X, Y, x, y) for y in Y.elements())
        )
        table[x] = H.index_of(fx)
    return PointedMap(X, H.space, tuple(table))


def compose_hom(X: FinPointedSet, Y: FinPointedSet, Z: FinPointedSet) -> PointedMap:
    """Internal composition ``Hom(Y, Z) ∧ Hom(X, Y) → Hom(X, Z)``."""
    GH = map_space(Y, Z)
    FH = map_space(X, Y)
    OH = map_space(X, Z)
    dom = smash(GH.space, FH.space)
    table = [0] * dom.total
    for gi in GH.space.nonbase():
        g = GH.map_at(gi)
        for fi in FH.space.nonbase():
            f = FH.map_at(fi)
            table[smash_pair(GH.space, FH.space, gi, fi)] = OH.index_of(f.then(g))
    return PointedMap(dom, OH.space, tuple(table))


def postcompose(H_from: MapSpace, H_to: MapSpace, g: PointedMap) -> PointedMap:
    """``g ∘ -`` as a pointed map between hom objects (same domain object)."""
    if H_from.dom.size != H_to.dom.size:
        raise DegreeMismatch("hom spaces must share their source object")
    table = [0] * H_from.space.total
    for e in H_from.space.nonbase():
        table[e] = H_to.index_of(H_from.map_at(e).then(g))
    return PointedMap(H_from.space, H_to.space, tuple(table))


def factor_epi_mono(f: PointedMap) -> tuple[PointedMap, PointedMap]:
    """Factor ``f`` through its image: a surjection followed by an injection.

    The image is renumbered ascending so the middle object is skeletal; the
    two returned maps compose back to ``f``.
    """
    img = sorted(set(f.table) - {0})
    K = FinPointedSet(len(img))
    rank = {v: r for r, v in enumerate(img, start=1)}
    epi = PointedMap(f.dom, K, tuple(rank.get(v, 0) for v in f.table))
    mono = PointedMap(K, f.cod, (0,) + tuple(img))
    return epi, mono


# ---------------------------------------------------------------------------
# quotients


class _UnionFind:
    # plain weighted union-find; parents start as self-loops
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


@dataclass(frozen=True)
class Quotient:
    space: FinPointedSet
    proj: PointedMap
    classes: tuple[tuple[int, ...], ...]  # classes[c] = sorted members, classes[0] ∋ 0


def quotient_by_relations(
    X: FinPointedSet, pairs: Iterable[tuple[int, int]]
) -> Quotient:
    """Quotient of ``X`` by the equivalence closure of ``pairs``.

    Class numbering is deterministic: the class of the basepoint becomes 0,
    the rest are numbered by first occurrence scanning ``1..size`` upward.
    """
    uf = _UnionFind(X.total)
    for a, b in pairs:
        uf.union(a, b)
    root_to_class: dict[int, int] = {uf.find(0): 0}
    proj_table = [0] * X.total
    for i in X.nonbase():
        r = uf.find(i)
        if r not in root_to_class:
            root_to_class[r] = len(root_to_class)
        proj_table[i] = root_to_class[r]
    Q = FinPointedSet(len(root_to_class) - 1)
    proj = PointedMap(X, Q, tuple(proj_table))
    members: list[list[int]] = [[] for _ in range(Q.total)]
    for i in X.elements():
        members[proj_table[i]].append(i)
    return Quotient(Q, proj, tuple(tuple(m) for m in members))


def collapse_subset(X: FinPointedSet, subset: Iterable[int]) -> Quotient:
    """Crush ``subset`` (plus the basepoint) to the basepoint."""
    return quotient_by_relations(X, [(0, s) for s in subset])


def class_reps(proj: PointedMap) -> list[int]:
    """First preimage of each codomain element under a surjection."""
    reps: list[int | None] = [None] * proj.cod.total
    for i in proj.dom.elements():
        c = proj(i)
        if reps[c] is None:
            reps[c] = i
    if any(r is None for r in reps):
        raise ValueError("projection is not surjective")
    return reps  # type: ignore[return-value]


def induced_on_quotients(
    f: PointedMap, proj_dom: PointedMap, proj_cod: PointedMap
) -> PointedMap:
    """Descend ``f`` along surjections on both sides, verifying single-valuedness."""
    from .errors import StructureNotInduced  # local import to avoid a cycle at module load

    if proj_dom.dom != f.dom or proj_cod.dom != f.cod:
        raise DegreeMismatch("projections do not match the map being descended")
    table: list[int | None] = [None] * proj_dom.cod.total
    for x in f.dom.elements():
        c = proj_dom(x)
        v = proj_cod(f(x))
        if table[c] is None:
            table[c] = v
        elif table[c] != v:
            raise StructureNotInduced(f"not constant on the class of {x}")
    if any(v is None for v in table):
        raise ValueError("domain projection is not surjective")
    return PointedMap(proj_dom.cod, proj_cod.cod, tuple(table))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# symmetric group actions

Perm = tuple[int, ...]  # p[i-1] = image of i, a bijection of {1..n}


def perm_identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_compose(s: Perm, t: Perm) -> Perm:
    """``s ∘ t``: apply t first."""
    return tuple(s[t[i - 1] - 1] for i in range(1, len(t) + 1))


def symmetric_group(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def perm_as_pointed_map(p: Perm) -> PointedMap:
    n = len(p)
    X = FinPointedSet(n)
    return PointedMap(X, X, (0,) + p)


@dataclass(frozen=True)
class GroupAction:
    """Action of the permutations of ``{1..n}`` on a pointed set.

    ``maps`` must cover the whole group and be a homomorphism; both facts are
    checked at construction time.
    """

    space: FinPointedSet
    maps: "frozenset[tuple[Perm, PointedMap]]"  # stored as frozenset for hashability

    def __post_init__(self):
        d = dict(self.maps)
        perms = list(d)
        if not perms:
            raise ValueError("empty action")
        n = len(perms[0])
        expected = symmetric_group(n)
        if sorted(d) != sorted(expected):
            raise ValueError("maps must be indexed by the full symmetric group")
        for p, m in d.items():
            if m.dom != self.space or m.cod != self.space:
                raise DegreeMismatch("action maps must be endomaps of the space")
        ident = perm_identity(n)
        if not d[ident].is_identity():
            raise ValueError("identity permutation must act as the identity")
        for s in expected:
            for t in expected:
                if d[perm_compose(s, t)].table != d[t].then(d[s]).table:
                    raise ValueError(f"action is not a homomorphism at {s}, {t}")

    @property
    def degree(self) -> int:
        return len(next(iter(self.maps))[0])

    def act(self, p: Perm) -> PointedMap:
        return dict(self.maps)[p]


def group_action(space: FinPointedSet, assignment) -> GroupAction:
    """Build a validated :class:`GroupAction` from ``perm ↦ PointedMap``."""
    return GroupAction(space, frozenset(assignment.items()))


def sigma_is_free(action: GroupAction, subset: Sequence[int]) -> bool:
    """Is the action free on ``subset``?

    ``subset`` must exclude the basepoint and be closed under the action
    (otherwise :class:`SubsetNotInvariant`).  Free means: no non-identity
    permutation fixes any member.
    """
    sub = set(subset)
    if 0 in sub:
        raise SubsetNotInvariant("subset must not contain the basepoint")
    n = action.degree
    ident = perm_identity(n)
    lookup = dict(action.maps)
    for p, m in lookup.items():
        for x in sub:
            if m(x) not in sub:
                raise SubsetNotInvariant(f"{x} leaves the subset under {p}")
    for p, m in lookup.items():
        if p == ident:
            continue
        for x in sub:
            if m(x) == x:
                return False
    return True
