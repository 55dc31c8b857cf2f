"""Algebras over the induced monads: structure maps, morphism objects,
reflexive coequalizers, tensors and cotensors, the bar construction, and
restriction to modules over the endomorphism monoid.

Everything is a finite table; "the coequalizer computes the right thing"
always means an explicit independence scan, never an appeal to theory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraInvalid, NotReflexive, StructureNotInduced
from .pointed import (
    UNIT,
    FinPointedSet,
    PointedMap,
    identity,
    map_space,
    quotient_by_relations,
    smash,
    smash_map,
    smash_pair,
)
from .theories import (
    LawReport,
    MonoidModule,
    endomorphism_monoid,
    lambda_component,
    monad_name,
)


@dataclass(frozen=True)
class Algebra:
    carrier: FinPointedSet
    structure: PointedMap  # monad value at the carrier -> carrier

    def __post_init__(self):
        if self.structure.cod != self.carrier:
            raise AlgebraInvalid("structure map must land in the carrier")


def validate_algebra(monad, alg: Algebra) -> None:
    """Unit and flattening compatibility; raises on the first failure."""
    X = alg.carrier
    xi = alg.structure
    if xi.dom != monad.space(X):
        raise AlgebraInvalid("structure map domain is not the monad value")
    if not monad.eta(X).then(xi).is_identity():
        raise AlgebraInvalid("unit condition fails")
    if monad.mu(X).then(xi).table != monad.fmap(xi).then(xi).table:
        raise AlgebraInvalid("flattening condition fails")


def free_algebra(monad, X: FinPointedSet) -> Algebra:
    return Algebra(monad.space(X), monad.mu(X))


def enumerate_algebras(monad, X: FinPointedSet) -> list[Algebra]:
    """Every lawful structure map on X, by brute force over the map space."""
    TX = monad.space(X)
    out = []
    for xi in map_space(TX, X).maps():
        try:
            alg = Algebra(X, xi)
            validate_algebra(monad, alg)
        except AlgebraInvalid:
            continue
        out.append(alg)
    return out


def is_algebra_map(monad, src: Algebra, dst: Algebra, f: PointedMap) -> bool:
    return monad.fmap(f).then(dst.structure).table == src.structure.then(f).table


def split_coequalizer_check(monad, alg: Algebra) -> bool:
    """The canonical presentation is split: the structure map coequalizes
    flattening against its own functor image, with unit maps as splittings."""
    X = alg.carrier
    xi = alg.structure
    TX = monad.space(X)
    fork = monad.mu(X).then(xi).table == monad.fmap(xi).then(xi).table
    retraction = monad.eta(X).then(xi).is_identity()
    top_split = monad.eta(TX).then(monad.mu(X)).is_identity()
    swap_leg = monad.eta(TX).then(monad.fmap(xi)).table == xi.then(monad.eta(X)).table
    return fork and retraction and top_split and swap_leg


# ---------------------------------------------------------------------------
# morphism objects


def enriched_hom_algebras(monad, src: Algebra, dst: Algebra
                          ) -> tuple[FinPointedSet, list[PointedMap]]:
    """The subspace of the map space on which the two transposed-structure
    composites agree, together with the maps it contains.

    Pointed by the zero morphism; compared in tests against the brute-force
    morphism scan (they must coincide literally).
    """
    X, Y = src.carrier, dst.carrier
    H = map_space(X, Y)
    TH = map_space(monad.space(X), Y)
    members = [0]
    maps = [H.map_at(0)]
    for idx in range(1, H.space.total):
        f = H.map_at(idx)
        # precompose with the structure of the source...
        lhs = TH.index_of(src.structure.then(f))
        # ...against push forward, then postcompose the target structure
        rhs = TH.index_of(monad.fmap(f).then(dst.structure))
        if lhs == rhs:
            members.append(idx)
            maps.append(f)
    space = FinPointedSet(len(members) - 1,
                          labels=tuple(str(i) for i in members))
    return space, maps


# ---------------------------------------------------------------------------
# reflexive coequalizers


def algebra_coequalizer(monad, src: Algebra, dst: Algebra,
                        f: PointedMap, g: PointedMap,
                        section: PointedMap) -> tuple[Algebra, PointedMap]:
    """Coequalize a reflexive pair of algebra maps.

    The carrier is the plain quotient; the structure map is transported
    through witnesses and then re-checked against every element of the
    monad value upstairs (StructureNotInduced when transport disagrees).
    Returns the algebra and the projection.
    """
    X = dst.carrier
    if f.dom != src.carrier or g.dom != src.carrier or f.cod != X or g.cod != X:
        raise NotReflexive("pair must be parallel maps into one algebra")
    if not (section.then(f).is_identity() and section.then(g).is_identity()):
        raise NotReflexive("no common section supplied")
    if not is_algebra_map(monad, src, dst, f) or not is_algebra_map(monad, src, dst, g):
        raise NotReflexive("legs are not algebra maps")
    quot = quotient_by_relations(
        X, [(f(y), g(y)) for y in src.carrier.elements()]
    )
    q = quot.proj
    Q = q.cod
    tq = monad.fmap(q)
    TQ = monad.space(Q)
    TX = monad.space(X)
    table = [0] * TQ.total
    seen = [False] * TQ.total
    for u in TX.elements():
        v = tq(u)
        value = q(dst.structure(u))
        if not seen[v]:
            seen[v] = True
            table[v] = value
        elif table[v] != value:
            raise StructureNotInduced(
                f"transported structure disagrees on class {v}")
    if not all(seen):
        # the functor image of a surjection stays surjective for these monads;
        # a miss would mean the quotient has phantom classes
        raise StructureNotInduced("monad value of the quotient is not covered")
    alg = Algebra(Q, PointedMap(TQ, Q, tuple(table)))
    validate_algebra(monad, alg)
    return alg, q


def canonical_presentation(monad, alg: Algebra) -> tuple[Algebra, PointedMap]:
    """Coequalize the canonical pair (flattening vs. pushed structure) on the
    free algebra over the underlying object; lands back on the algebra."""
    X = alg.carrier
    TX = monad.space(X)
    upstairs = free_algebra(monad, TX)
    downstairs = free_algebra(monad, X)
    return algebra_coequalizer(
        monad, upstairs, downstairs,
        monad.mu(X), monad.fmap(alg.structure),
        monad.fmap(monad.eta(X)),
    )


# ---------------------------------------------------------------------------
# tensors and cotensors


def tensor_algebra(monad, Z: FinPointedSet, alg: Algebra) -> tuple[Algebra, PointedMap]:
    """Tensor by a pointed set: coequalize acting-before against
    strengthening-and-flattening on the free algebra over Z∧(monad value).

    Returns the algebra and the projection from the free algebra on Z∧X.
    """
    X = alg.carrier
    TX = monad.space(X)
    ZTX = smash(Z, TX)
    ZX = smash(Z, X)
    upstairs = free_algebra(monad, ZTX)
    downstairs = free_algebra(monad, ZX)
    act_leg = monad.fmap(smash_map(identity(Z), alg.structure))
    str_leg = monad.fmap(monad.sigma(Z, X)).then(monad.mu(ZX))
    section = monad.fmap(smash_map(identity(Z), monad.eta(X)))
    tens, q = algebra_coequalizer(monad, upstairs, downstairs, act_leg, str_leg, section)
    return tens, q


def tensor_insertion(monad, Z: FinPointedSet, alg: Algebra,
                     tens: Algebra, q: PointedMap) -> PointedMap:
    """The universal map Z∧X → Z⊗X (unit of the tensor adjunction)."""
    ZX = smash(Z, alg.carrier)
    return monad.eta(ZX).then(q)


def cotensor_algebra(monad, alg: Algebra, Z: FinPointedSet) -> Algebra:
    """Cotensor: carrier the map space Z → X, structure computed pointwise
    by evaluating, pushing forward, and applying the structure of X."""
    X = alg.carrier
    H = map_space(Z, X)
    C = H.space
    TC = monad.space(C)
    evs = {}
    for z in Z.nonbase():
        ez = PointedMap(C, X, tuple(H.map_at(c)(z) for c in C.elements()))
        evs[z] = monad.fmap(ez)
    table = [0] * TC.total
    for c in TC.nonbase():
        vals = tuple(alg.structure(evs[z](c)) for z in Z.nonbase())
        table[c] = H.index_of(PointedMap(Z, X, (0,) + vals))
    out = Algebra(C, PointedMap(TC, C, tuple(table)))
    validate_algebra(monad, out)
    return out


def tensor_hom_adjunction(monad, Z: FinPointedSet, x_alg: Algebra, y_alg: Algebra
                          ) -> LawReport:
    """|morphisms(Z⊗X, Y)| = |Map(Z, morphisms(X,Y))| with explicit
    mutually-inverse maps, checked pointwise on both sides."""
    rep = LawReport(f"adjunction:{monad_name(monad)}")
    tens, q = tensor_algebra(monad, Z, x_alg)
    ins = tensor_insertion(monad, Z, x_alg, tens, q)
    hom_tens_space, hom_tens = enriched_hom_algebras(monad, tens, y_alg)
    hom_xy_space, hom_xy = enriched_hom_algebras(monad, x_alg, y_alg)
    right = map_space(Z, hom_xy_space)
    rep.tick()
    if hom_tens_space.total != right.space.total:
        rep.note("adjunction-cardinality",
                 {"tensor-side": hom_tens_space.total, "map-side": right.space.total})
        return rep

    X = x_alg.carrier
    ZX = smash(Z, X)
    hom_xy_index = {m.table: i for i, m in enumerate(hom_xy)}

    def transpose(h: PointedMap):
        # h: tensor -> Y restricted along the insertion, curried
        vals = []
        for z in Z.nonbase():
            comp = tuple(h(ins(smash_pair(Z, X, z, x))) if x else 0 for x in X.elements())
            f = PointedMap(X, y_alg.carrier, comp)
            idx = hom_xy_index.get(f.table)
            if idx is None:
                return None
            vals.append(idx)
        return right.index_of(PointedMap(Z, hom_xy_space, (0,) + tuple(vals)))

    def untranspose(kidx: int) -> PointedMap | None:
        k = right.map_at(kidx)
        # value on a tensor class: lift through the projection, read slots
        zx_to_y = [0] * ZX.total
        for z in Z.nonbase():
            fz = hom_xy[k(z)]
            for x in X.nonbase():
                zx_to_y[smash_pair(Z, X, z, x)] = fz(x)
        pushed = monad.fmap(PointedMap(ZX, y_alg.carrier, tuple(zx_to_y)))
        down = pushed.then(y_alg.structure)
        # well-definedness across the coequalizer: factor through q
        table = [0] * tens.carrier.total
        seen = [False] * tens.carrier.total
        for u in monad.space(ZX).elements():
            c = q(u)
            v = down(u)
            if not seen[c]:
                seen[c] = True
                table[c] = v
            elif table[c] != v:
                return None
        return PointedMap(tens.carrier, y_alg.carrier, tuple(table))

    fwd = {}
    for i, h in enumerate(hom_tens):
        rep.tick()
        t = transpose(h)
        if t is None:
            rep.note("transpose-not-morphism", {"index": i})
            return rep
        fwd[i] = t
        back = untranspose(t)
        if back is None or back.table != h.table:
            rep.note("adjunction-round-trip", {"index": i})
    if len(set(fwd.values())) != len(fwd):
        rep.note("transpose-not-injective", {})
    for kidx in range(right.space.total):
        rep.tick()
        back = untranspose(kidx)
        if back is None:
            rep.note("untranspose-not-defined", {"index": kidx})
            return rep
        if not is_algebra_map(monad, tens, y_alg, back):
            rep.note("untranspose-not-morphism", {"index": kidx})
        if transpose(back) != kidx:
            rep.note("adjunction-round-trip-back", {"index": kidx})
    return rep


# ---------------------------------------------------------------------------
# the bar construction


@dataclass
class BarResolution:
    carriers: list[FinPointedSet]          # levels 0..k
    faces: dict                            # (n, i) -> PointedMap level n -> n-1
    degeneracies: dict                     # (n, i) -> PointedMap level n -> n+1
    extra: list                            # n -> PointedMap level n -> n+1
    augmentation: PointedMap               # level 0 -> the algebra carrier


def bar_resolution(monad, alg: Algebra, k: int = 2) -> BarResolution:
    """Iterated free-forgetful resolution, with faces by structure collapse,
    degeneracies by unit insertion, and the contracting extra degeneracy
    inserting at the outermost slot."""
    stages = [alg.carrier]
    for _ in range(k + 2):
        stages.append(monad.space(stages[-1]))
    # collapse at slot j: the algebra structure for j = 0, flattening above
    structures = [alg.structure]
    for j in range(1, k + 1):
        structures.append(monad.mu(stages[j - 1]))

    def iterate_fmap(h: PointedMap, times: int) -> PointedMap:
        for _ in range(times):
            h = monad.fmap(h)
        return h

    faces = {}
    degeneracies = {}
    # the contraction inserts at the OUTERMOST slot: the top face kills it by
    # the left unit law, lower faces slide past it by naturality of the unit
    extra = [monad.eta(stages[n + 1]) for n in range(k + 1)]
    for n in range(k + 1):
        for i in range(n + 1):
            faces[(n, i)] = iterate_fmap(structures[i], n - i)
            degeneracies[(n, i)] = iterate_fmap(monad.eta(stages[i]), n + 1 - i)
    return BarResolution(stages[1 : k + 2], faces, degeneracies, extra, alg.structure)


def check_bar_identities(monad, alg: Algebra, k: int = 2) -> LawReport:
    """Simplicial identities, the extra-degeneracy contraction equations,
    and the augmentation triangle, all as table equalities through level k."""
    rep = LawReport(f"bar:{monad_name(monad)}")
    bar = bar_resolution(monad, alg, k)
    d, s, h = bar.faces, bar.degeneracies, bar.extra

    # augmentation: collapsing after inserting the unit is the identity
    rep.tick()
    if not monad.eta(alg.carrier).then(bar.augmentation).is_identity():
        rep.note("augmentation-unit", {})
    # the augmentation coequalizes the two bottom faces
    rep.tick()
    if d[(1, 0)].then(bar.augmentation).table != d[(1, 1)].then(bar.augmentation).table:
        rep.note("augmentation-fork", {})

    for n in range(1, k + 1):
        for j in range(n + 1):
            for i in range(j):
                rep.tick()
                lhs = d[(n, j)].then(d[(n - 1, i)])
                rhs = d[(n, i)].then(d[(n - 1, j - 1)])
                if lhs.table != rhs.table:
                    rep.note("face-face", {"level": n, "pair": (i, j)})
    for n in range(k):
        for j in range(n + 1):
            for i in range(j + 1):
                rep.tick()
                lhs = s[(n, j)].then(s[(n + 1, i)])
                rhs = s[(n, i)].then(s[(n + 1, j + 1)])
                if lhs.table != rhs.table:
                    rep.note("degeneracy-degeneracy", {"level": n, "pair": (i, j)})
    for n in range(k):
        for j in range(n + 1):
            for i in range(n + 2):
                rep.tick()
                lhs = s[(n, j)].then(d[(n + 1, i)])
                if i < j:
                    rhs = d[(n, i)].then(s[(n - 1, j - 1)]) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = "identity"
                else:
                    rhs = d[(n, i - 1)].then(s[(n - 1, j)]) if n >= 1 else None
                if rhs == "identity":
                    if not lhs.is_identity():
                        rep.note("face-degeneracy-identity", {"level": n, "pair": (i, j)})
                elif rhs is not None and lhs.table != rhs.table:
                    rep.note("face-degeneracy", {"level": n, "pair": (i, j)})

    # extra degeneracy: the top face retracts it, lower faces slide past it
    base = monad.eta(alg.carrier)
    for n in range(k):
        rep.tick()
        if not h[n].then(d[(n + 1, n + 1)]).is_identity():
            rep.note("extra-degeneracy-retract", {"level": n})
        for i in range(n + 1):
            rep.tick()
            lhs = h[n].then(d[(n + 1, i)])
            below = h[n - 1] if n >= 1 else base
            rhs = d[(n, i)].then(below)
            if lhs.table != rhs.table:
                rep.note("extra-degeneracy-face", {"level": n, "i": i})
    return rep


# ---------------------------------------------------------------------------
# restriction to modules


def restrict_along_lambda(monad, alg: Algebra) -> MonoidModule:
    """Any algebra becomes a module over the endomorphism monoid, acting
    through the canonical comparison then the structure map."""
    mon = endomorphism_monoid(monad)
    comp = lambda_component(monad, alg.carrier)
    action = comp.then(alg.structure)
    mod = MonoidModule(mon, alg.carrier, action)
    mod.validate()
    return mod


def free_module_comparison(monad, X: FinPointedSet) -> LawReport:
    """On a free algebra the restricted action agrees with applying the
    operation directly: push it along the point map at the element, then
    flatten.  The second route never touches the strength, so agreement is
    a real cross-check, not a definitional identity."""
    rep = LawReport(f"free-module:{monad_name(monad)}")
    free = free_algebra(monad, X)
    mod = restrict_along_lambda(monad, free)
    TX = free.carrier
    TI = monad.space(UNIT)
    flatten = monad.mu(X)
    for u in TX.nonbase():
        point = monad.fmap(PointedMap(UNIT, TX, (0, u)))
        for t in TI.nonbase():
            rep.tick()
            via_module = mod.action(smash_pair(TX, TI, u, t))
            via_point = flatten(point(t))
            if via_module != via_point:
                rep.note("free-module-action",
                         {"object": X.size, "element": u, "operation": t})
    return rep
