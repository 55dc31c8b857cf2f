"""Combinatorics of representable functors and their boundary quotients.

Everything here is about the degree-n representable ("the n-sphere" once its
degenerate part is collapsed): the lattice of subobjects generated by a
single element, the two boundary subobjects (all degenerate elements, and the
value-missing ones), the cofiber sequence relating their quotients, and the
skeletal filtration comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import StructureNotInduced
from .gammaset import (
    GammaMap,
    GammaSet,
    LevelSets,
    boundary_levelsets,
    build_gamma_set,
    gamma_wedge,
    latching_levelset,
    outer_levelsets,
    quotient_by_level_relations,
    quotient_levelwise,
    representable,
    skeleton_levelsets,
    sub_gamma_set,
    subobject_generated,
    symmetric_action,
)
from .pointed import (
    FinPointedSet,
    PointedMap,
    class_reps,
    collapse_subset,
    identity,
    induced_on_quotients,
    map_space,
    perm_as_pointed_map,
    smash,
    smash_map,
    smash_pair,
    smash_unpair,
    symmetric_group,
)

# ---------------------------------------------------------------------------
# set partitions and monogenic subobjects

Partition = tuple[tuple[int, ...], ...]


def set_partitions(n: int) -> list[Partition]:
    """All partitions of ``{1..n}``; blocks ordered by least element."""
    parts: list[list[list[int]]] = [[]]
    for i in range(1, n + 1):
        grown: list[list[list[int]]] = []
        for p in parts:
            for j in range(len(p)):
                grown.append([blk + [i] if idx == j else list(blk) for idx, blk in enumerate(p)])
            grown.append([list(b) for b in p] + [[i]])
        parts = grown
    return [tuple(tuple(b) for b in p) for p in parts]


def refines(p: Partition, q: Partition) -> bool:
    """Every block of p sits inside a block of q."""
    where = {}
    for bi, blk in enumerate(q):
        for v in blk:
            where[v] = bi
    for blk in p:
        if len({where[v] for v in blk}) != 1:
            return False
    return True


def partition_element(pi: Partition, n: int) -> tuple[int, int]:
    """The canonical level-k element of the degree-n representable for a partition.

    k is the number of blocks; the element is the map sending each ``i`` to the
    index of its block.  Returns ``(k, element index)``.
    """
    k = len(pi)
    table = [0] * (n + 1)
    for bi, blk in enumerate(pi, start=1):
        for v in blk:
            table[v] = bi
    f = PointedMap(FinPointedSet(n), FinPointedSet(k), tuple(table))
    return k, map_space(FinPointedSet(n), FinPointedSet(k)).index_of(f)


@dataclass(frozen=True)
class PartitionLattice:
    degree: int
    bound: int
    partitions: tuple[Partition, ...]
    generators: tuple[tuple[int, int], ...]  # (level, element) per partition
    subobjects: tuple[LevelSets, ...]
    distinct: bool  # the correspondence is injective
    order_reversing: bool  # inclusion of subobjects ⟺ reverse refinement


def partition_correspondence(n: int, bound: int) -> PartitionLattice:
    """Partitions of ``{1..n}`` versus singly generated subobjects of the representable.

    Verifies that the assignment is injective and exchanges refinement with
    reverse inclusion: sub(p) ⊆ sub(q) exactly when q refines p.
    """
    A = representable(n, bound)
    partitions = set_partitions(n)
    gens = [partition_element(pi, n) for pi in partitions]
    subs = [subobject_generated(A, [g]) for g in gens]
    distinct = len({s for s in subs}) == len(subs)

    def contained(a: LevelSets, b: LevelSets) -> bool:
        return all(set(x) <= set(y) for x, y in zip(a, b))

    order_reversing = True
    for i, p in enumerate(partitions):
        for j, q in enumerate(partitions):
            if contained(subs[i], subs[j]) != refines(q, p):
                order_reversing = False
    return PartitionLattice(
        n, bound, tuple(partitions), tuple(gens), tuple(subs), distinct, order_reversing
    )


# ---------------------------------------------------------------------------
# boundary quotients and the cofiber sequence


@dataclass(frozen=True)
class SphereLevelRow:
    level: int
    total: int
    boundary_total: int
    outer_total: int
    mod_boundary_total: int
    mod_outer_total: int
    boundary_mod_outer_total: int


def sphere_table(n: int, bound: int) -> list[SphereLevelRow]:
    """Levelwise cardinalities of the representable and its boundary quotients."""
    A = representable(n, bound)
    bd = boundary_levelsets(n, bound, A)
    out = outer_levelsets(n, bound, A)
    rows = []
    for k in range(bound + 1):
        t = A.level(k).total
        b, o = len(bd[k]), len(out[k])
        rows.append(
            SphereLevelRow(
                level=k,
                total=t,
                boundary_total=b,
                outer_total=o,
                mod_boundary_total=t - b + 1,
                mod_outer_total=t - o + 1,
                boundary_mod_outer_total=b - o + 1,
            )
        )
    return rows


@dataclass(frozen=True)
class CofiberSpheres:
    degree: int
    bound: int
    first: GammaSet  # boundary with its value-missing part collapsed
    mid: GammaSet  # representable with the value-missing part collapsed
    last: GammaSet  # representable with the whole boundary collapsed
    map_in: GammaMap  # first → mid
    map_out: GammaMap  # mid → last
    injective: bool
    exact: bool  # image of map_in = fiber of map_out over the basepoint, levelwise


def cofiber_sequence_spheres(n: int, bound: int) -> CofiberSpheres:
    A = representable(n, bound)
    bd = boundary_levelsets(n, bound, A)
    out = outer_levelsets(n, bound, A)

    B, incl = sub_gamma_set(A, bd)
    # the value-missing part lies inside the boundary; renumber it there
    out_in_B = tuple(
        tuple(sorted(bd[k].index(x) for x in out[k])) for k in range(bound + 1)
    )
    first, p_first = quotient_levelwise(B, out_in_B)
    mid, p_mid = quotient_levelwise(A, out)
    last, p_last = quotient_levelwise(A, bd)

    map_in = GammaMap(
        first,
        mid,
        tuple(
            induced_on_quotients(incl.level(k), p_first.level(k), p_mid.level(k))
            for k in range(bound + 1)
        ),
    )
    map_in.validate()
    map_out = GammaMap(
        mid,
        last,
        tuple(
            induced_on_quotients(identity(A.level(k)), p_mid.level(k), p_last.level(k))
            for k in range(bound + 1)
        ),
    )
    map_out.validate()

    injective = map_in.is_levelwise_injective()
    exact = True
    for k in range(bound + 1):
        image = {map_in.level(k)(x) for x in first.level(k).elements()}
        kernel = {x for x in mid.level(k).elements() if map_out.level(k)(x) == 0}
        if image != kernel:
            exact = False
    return CofiberSpheres(n, bound, first, mid, last, map_in, map_out, injective, exact)


def collapsed_sphere(n: int, bound: int) -> tuple[GammaSet, GammaMap]:
    """Representable modulo its degenerate part."""
    A = representable(n, bound)
    return quotient_levelwise(A, boundary_levelsets(n, bound, A))


def mod_outer(n: int, bound: int) -> tuple[GammaSet, GammaMap]:
    """Representable modulo its value-missing part."""
    A = representable(n, bound)
    return quotient_levelwise(A, outer_levelsets(n, bound, A))


def boundary_mod_outer_iso(bound: int) -> GammaMap | None:
    """For degree 2: boundary / value-missing-part against the degree-1 representable."""
    from .gammaset import find_gamma_iso

    A = representable(2, bound)
    bd = boundary_levelsets(2, bound, A)
    out = outer_levelsets(2, bound, A)
    B, _ = sub_gamma_set(A, bd)
    out_in_B = tuple(
        tuple(sorted(bd[k].index(x) for x in out[k])) for k in range(bound + 1)
    )
    Q, _ = quotient_levelwise(B, out_in_B)
    return find_gamma_iso(Q, representable(1, bound))


@dataclass(frozen=True)
class MonogenicImageReport:
    degree: int
    bound: int
    rows: tuple[tuple[Partition, int, bool], ...]  # (partition, #blocks, image iso to smaller collapsed sphere)
    union_is_boundary_image: bool


def proper_partition_images(n: int, bound: int) -> MonogenicImageReport:
    """Inside the mod-outer quotient, images of monogenic subobjects for
    non-discrete partitions look like smaller mod-outer spheres, and together
    they exhaust the image of the boundary."""
    from .gammaset import find_gamma_iso

    A = representable(n, bound)
    bd = boundary_levelsets(n, bound, A)
    mid, p_mid = quotient_levelwise(A, outer_levelsets(n, bound, A))

    rows = []
    union: list[set[int]] = [{0} for _ in range(bound + 1)]
    for pi in set_partitions(n):
        k = len(pi)
        if k == n:  # discrete partition generates everything; skip
            continue
        gen = partition_element(pi, n)
        sub_ls = subobject_generated(A, [gen])
        img_ls = tuple(
            tuple(sorted({p_mid.level(lev)(x) for x in sub_ls[lev]}))
            for lev in range(bound + 1)
        )
        for lev in range(bound + 1):
            union[lev] |= set(img_ls[lev])
        img_gs, _ = sub_gamma_set(mid, img_ls)
        target, _ = mod_outer(k, bound)
        iso = find_gamma_iso(img_gs, target)
        rows.append((pi, k, iso is not None))

    boundary_image = [
        {p_mid.level(lev)(x) for x in bd[lev]} for lev in range(bound + 1)
    ]
    union_ok = all(union[lev] == boundary_image[lev] for lev in range(bound + 1))
    return MonogenicImageReport(n, bound, tuple(rows), union_ok)


# ---------------------------------------------------------------------------
# orbit quotients and the filtration comparison


def swap_orbit_quotient(bound: int) -> GammaSet:
    """Degree-2 representable with each element glued to its argument swap."""
    A = representable(2, bound)
    two = FinPointedSet(2)
    sw = PointedMap(two, two, (0, 2, 1))
    pairs_per_level = []
    for k in range(bound + 1):
        H = map_space(two, FinPointedSet(k))
        pairs = [
            (e, H.index_of(sw.then(H.map_at(e)))) for e in H.space.elements()
        ]
        pairs_per_level.append(pairs)
    Q, _ = quotient_by_level_relations(A, pairs_per_level)
    return Q


@dataclass(frozen=True)
class FiltrationReport:
    degree: int
    comparison: GammaMap  # (cell ∧ sphere) / permutation diagonal → skeletal layer
    iso_ok: bool
    plain_bijective: bool
    plain_witness: tuple | None  # (level, (cell, sphere-class), (cell, sphere-class), image)


def filtration_comparison(A: GammaSet, n: int) -> FiltrationReport:
    """Compare the n-th skeletal layer of A with cells smashed with the sphere.

    The comparison only becomes an isomorphism after dividing the smash by the
    simultaneous permutation action; the report also records whether the
    undivided ("plain") map happens to be bijective, with a witness when not.
    """
    bound = A.bound
    skn = skeleton_levelsets(A, n)
    skn1 = skeleton_levelsets(A, n - 1)
    S, incl = sub_gamma_set(A, skn)
    low_in_S = tuple(
        tuple(sorted(skn[k].index(x) for x in skn1[k])) for k in range(bound + 1)
    )
    layer, p_layer = quotient_levelwise(S, low_in_S)

    latch = latching_levelset(A, n)
    cell_q = collapse_subset(A.level(n), latch)
    C = cell_q.space
    cell_rep = class_reps(cell_q.proj)

    R = representable(n, bound)
    sphere, p_sph = quotient_levelwise(R, boundary_levelsets(n, bound, R))
    sphere_rep = [class_reps(p_sph.level(k)) for k in range(bound + 1)]
    homs = [map_space(FinPointedSet(n), FinPointedSet(k)) for k in range(bound + 1)]

    plain = build_gamma_set(
        bound,
        lambda k: smash(C, sphere.level(k)),
        lambda f: smash_map(identity(C), sphere.act(f)),
    )

    # position of an A-element inside the skeleton sub-level
    pos = [{x: i for i, x in enumerate(skn[k])} for k in range(bound + 1)]

    def plain_component(k: int) -> PointedMap:
        Rk = plain.level(k)
        table = [0] * Rk.total
        for c in C.nonbase():
            a = cell_rep[c]
            for s in sphere.level(k).nonbase():
                f = homs[k].map_at(sphere_rep[k][s])
                val = A.act(f)(a)
                table[smash_pair(C, sphere.level(k), c, s)] = p_layer.level(k)(pos[k][val])
        return PointedMap(Rk, layer.level(k), tuple(table))

    plain_comps = [plain_component(k) for k in range(bound + 1)]

    plain_bijective = True
    plain_witness = None
    for k in range(bound + 1):
        comp = plain_comps[k]
        seen: dict[int, int] = {}
        for e in comp.dom.nonbase():
            v = comp(e)
            if v == 0:
                continue
            if v in seen and plain_witness is None:
                plain_bijective = False
                plain_witness = (
                    k,
                    smash_unpair(C, sphere.level(k), seen[v]),
                    smash_unpair(C, sphere.level(k), e),
                    v,
                )
            seen.setdefault(v, e)
        if comp.cod.size and len(seen) < comp.cod.size:
            plain_bijective = False

    # divide by the simultaneous permutation action on cell and sphere factors
    pairs_per_level: list[list[tuple[int, int]]] = []
    sym = symmetric_group(n)
    for k in range(bound + 1):
        H = homs[k]
        Sk = sphere.level(k)
        pairs: list[tuple[int, int]] = []
        for p in sym:
            phat = perm_as_pointed_map(p)
            act_p = A.act(phat)
            for a in A.level(n).nonbase():
                c1 = cell_q.proj(act_p(a))
                c2 = cell_q.proj(a)
                for e in H.space.nonbase():
                    s1 = p_sph.level(k)(e)
                    s2 = p_sph.level(k)(H.index_of(phat.then(H.map_at(e))))
                    pairs.append(
                        (smash_pair(C, Sk, c1, s1), smash_pair(C, Sk, c2, s2))
                    )
        pairs_per_level.append(pairs)
    divided, p_div = quotient_by_level_relations(plain, pairs_per_level)

    comps = tuple(
        induced_on_quotients(
            plain_comps[k], p_div.level(k), identity(layer.level(k))
        )
        for k in range(bound + 1)
    )
    comparison = GammaMap(divided, layer, comps)
    comparison.validate()
    return FiltrationReport(
        n, comparison, comparison.is_levelwise_iso(), plain_bijective, plain_witness
    )
