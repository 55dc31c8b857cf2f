"""Finitary monads from tabulated theories: laws, strength, comparisons."""

import pytest

from gammacalc.errors import TheoryInvalid
from gammacalc.pointed import (
    UNIT,
    FinPointedSet,
    PointedMap,
    map_space,
    smash,
    smash_pair,
)
from gammacalc.theories import (
    FiniteMonoid,
    GammaRing,
    MonoidModule,
    SmashMonad,
    TheoryMonad,
    endomorphism_gamma_ring,
    endomorphism_monoid,
    enrichment_round_trip,
    free_semilattice_theory,
    lambda_component,
    lambda_monad_morphism,
    module_category_check,
    monoid_c2_with_zero,
    monoid_to_monad,
    reader_theory,
    ring_matches_assembly,
    ring_matches_strength,
    trivial_theory,
    unit_monoid,
    validate_ring,
    validate_theory,
)

from oracles.naive import image_set, subsets_semantics


def test_theory_laws():
    for th in (trivial_theory(), reader_theory(), free_semilattice_theory()):
        rep = validate_theory(th)
        assert rep.ok, rep.violations


def test_subsets_monad_agrees_with_frozensets(monads):
    """η is singleton, functor is direct image, flattening is union — checked
    through the label-agnostic support probe."""
    P = monads["finite-subsets"]
    for sz in (1, 2):
        X = FinPointedSet(sz)
        sem = subsets_semantics(P, X)
        # bijective onto all subsets of the nonbase points
        assert len(set(sem.values())) == 2 ** sz == P.space(X).total
        eta = P.eta(X)
        for x in X.nonbase():
            assert sem[eta(x)] == frozenset({x})
        Y = FinPointedSet(2)
        sem_y = subsets_semantics(P, Y)
        for f in map_space(X, Y).maps():
            push = P.fmap(f)
            for cls in range(P.space(X).total):
                assert sem_y[push(cls)] == image_set(f, sem[cls])
        semsem = subsets_semantics(P, P.space(X))
        mu = P.mu(X)
        for cls in range(P.space(P.space(X)).total):
            flat = frozenset().union(*(sem[c] for c in semsem[cls])) if semsem[cls] else frozenset()
            assert sem[mu(cls)] == flat


def test_one_slot_monad_is_identity(monads):
    T = monads["one-slot"]
    for sz in (0, 1, 2, 3):
        X = FinPointedSet(sz)
        assert T.space(X).size == X.size
        assert T.eta(X).is_iso()
        assert T.mu(X).is_iso()


def test_reader_monad_counts(monads):
    # two read slots: the value object is a square
    T = monads["pair-reader"]
    for sz in (0, 1, 2):
        X = FinPointedSet(sz)
        assert T.space(X).total == X.total ** 2
    # eta duplicates: both probes of eta(x) read back x
    X = FinPointedSet(2)
    eta = T.eta(X)
    assert len({eta(x) for x in X.elements()}) == X.total


def test_smash_monad_is_the_monoid(monads):
    M = monoid_c2_with_zero()
    T = monads["smash-monoid"]
    X = FinPointedSet(2)
    assert T.space(X).size == X.size * M.space.size
    # mu realizes the monoid multiplication in the second slot
    mu = T.mu(X)
    TX = T.space(X)
    for x in X.nonbase():
        for s in M.space.nonbase():
            for t in M.space.nonbase():
                inner = smash_pair(X, M.space, x, s)
                outer = smash_pair(TX, M.space, inner, t)
                got = mu(outer)
                st = M(s, t)
                assert got == (smash_pair(X, M.space, x, st) if st else 0)


def test_monoid_validation_catches_bad_unit():
    X = FinPointedSet(2)
    with pytest.raises(TheoryInvalid):
        # claimed unit sends 2 to 1 on the left
        FiniteMonoid(X, 1, ((0, 0, 0), (0, 1, 1), (0, 2, 2))).validate()


def test_unit_monoid_monad_is_identity_like():
    T = monoid_to_monad(unit_monoid())
    X = FinPointedSet(3)
    assert T.space(X).size == X.size
    assert T.eta(X).is_iso()


def test_enrichment_round_trip_shallow_and_deep(monads):
    # deep rebuilds a class table over hom∧X, so keep that smash small for
    # the value-table monads
    sizes_by_monad = {
        "one-slot": (2, 2),
        "pair-reader": (2, 1),
        "finite-subsets": (1, 1),
        "smash-monoid": (2, 2),
    }
    from gammacalc.theories import LawReport

    for name, T in monads.items():
        a, b = sizes_by_monad[name]
        rep = LawReport(f"round-trip:{name}")
        enrichment_round_trip(T, FinPointedSet(a), FinPointedSet(b), rep, deep=True)
        assert rep.ok, (name, rep.violations)


def test_endomorphism_monoid_of_subsets(monads):
    P = monads["finite-subsets"]
    mon = endomorphism_monoid(P)
    # T(1⁺) has exactly one nonbase class (the singleton), so the monoid is trivial
    assert mon.space.size == 1
    assert mon.unit == 1
    T = monads["pair-reader"]
    mon_r = endomorphism_monoid(T)
    assert mon_r.space.size == 3
    mon_r.validate()


def test_lambda_component_shapes(monads):
    for name, T in monads.items():
        X = FinPointedSet(2)
        lam = lambda_component(T, X)
        assert lam.dom == smash(X, T.space(UNIT))
        assert lam.cod == T.space(X)


def test_lambda_bijectivity_pattern(monads):
    expected = {
        "one-slot": {0: True, 1: True, 2: True},
        "pair-reader": {0: True, 1: True, 2: False},
        "finite-subsets": {0: True, 1: True, 2: False},
        "smash-monoid": {0: True, 1: True, 2: True},
    }
    for name, T in monads.items():
        _comps, rep, bij = lambda_monad_morphism(T)
        assert rep.ok, (name, rep.violations)
        assert bij == expected[name], name


def test_monoid_module_validation(monads):
    # T(X) is a module over the endomorphism monoid via compare-then-flatten
    T = monads["pair-reader"]
    mon = endomorphism_monoid(T)
    X = FinPointedSet(2)
    TX = T.space(X)
    lam_tx = lambda_component(T, TX).then(T.mu(X))
    mod = MonoidModule(mon, TX, lam_tx)
    mod.validate()
    rep = module_category_check(mon, mod)
    assert rep.ok


def test_endomorphism_ring_of_subsets():
    th = free_semilattice_theory()
    ring = endomorphism_gamma_ring(th)
    assert isinstance(ring, GammaRing)
    assert validate_ring(ring).ok
    assert ring_matches_assembly(th, ring).ok
    assert ring_matches_strength(th, ring).ok
