"""Pointed sets, smash pairing, hom spaces, quotients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacalc.errors import DegreeMismatch, SubsetNotInvariant
from gammacalc.pointed import (
    FinPointedSet,
    PointedMap,
    UNIT,
    class_reps,
    collapse_subset,
    compose_hom,
    ev,
    factor_epi_mono,
    gamma_coev,
    group_action,
    identity,
    induced_on_quotients,
    map_space,
    perm_as_pointed_map,
    perm_compose,
    pt,
    quotient_by_relations,
    sigma_is_free,
    smash,
    smash_assoc,
    smash_map,
    smash_pair,
    smash_swap,
    smash_unpair,
    symmetric_group,
    unit_left,
    unit_right,
    wedge,
    zero_map,
)

sizes = st.integers(min_value=1, max_value=5)


def test_basics():
    X = FinPointedSet(3)
    assert X.total == 4
    assert list(X.elements()) == [0, 1, 2, 3]
    assert list(X.nonbase()) == [1, 2, 3]
    assert pt().size == 0 and UNIT.size == 1


def test_map_composition_and_identity():
    X, Y = FinPointedSet(2), FinPointedSet(3)
    f = PointedMap(X, Y, (0, 3, 1))
    assert f.then(identity(Y)).table == f.table
    assert identity(X).then(f).table == f.table
    assert zero_map(X, Y).then(zero_map(Y, X)).table == zero_map(X, X).table


def test_map_must_fix_basepoint():
    with pytest.raises(Exception):
        PointedMap(UNIT, UNIT, (1, 1))


@given(sizes, sizes, st.data())
@settings(max_examples=60, deadline=None)
def test_smash_pairing_round_trip(a, b, data):
    X, Y = FinPointedSet(a), FinPointedSet(b)
    i = data.draw(st.integers(min_value=0, max_value=a))
    j = data.draw(st.integers(min_value=0, max_value=b))
    k = smash_pair(X, Y, i, j)
    if i == 0 or j == 0:
        assert k == 0
    else:
        assert smash_unpair(X, Y, k) == (i, j)
    assert smash(X, Y).size == a * b


def test_smash_swap_involution():
    X, Y = FinPointedSet(2), FinPointedSet(3)
    sw = smash_swap(X, Y)
    back = smash_swap(Y, X)
    assert sw.then(back).is_identity()
    for i in X.nonbase():
        for j in Y.nonbase():
            assert sw(smash_pair(X, Y, i, j)) == smash_pair(Y, X, j, i)


def test_smash_assoc_reindexes_triples():
    X, Y, Z = FinPointedSet(2), FinPointedSet(2), FinPointedSet(3)
    al = smash_assoc(X, Y, Z)
    XY, YZ = smash(X, Y), smash(Y, Z)
    for i in X.nonbase():
        for j in Y.nonbase():
            for k in Z.nonbase():
                lhs = smash_pair(smash(X, Y), Z, smash_pair(X, Y, i, j), k)
                rhs = smash_pair(X, YZ, i, smash_pair(Y, Z, j, k))
                assert al(lhs) == rhs
    assert al.is_iso()
    assert XY.size * Z.size == X.size * YZ.size


def test_unit_isos():
    X = FinPointedSet(4)
    assert unit_left(X).is_iso()
    assert unit_right(X).is_iso()
    for x in X.nonbase():
        assert unit_left(X)(smash_pair(UNIT, X, 1, x)) == x
        assert unit_right(X)(smash_pair(X, UNIT, x, 1)) == x


def test_smash_map_is_functorial():
    X, Y = FinPointedSet(2), FinPointedSet(2)
    f = PointedMap(X, Y, (0, 2, 0))
    g = PointedMap(Y, Y, (0, 1, 1))
    lhs = smash_map(f, g).then(smash_map(g, f))
    rhs = smash_map(f.then(g), g.then(f))
    assert lhs.table == rhs.table


@given(sizes, sizes)
@settings(max_examples=40, deadline=None)
def test_map_space_indexing(a, b):
    H = map_space(FinPointedSet(a), FinPointedSet(b))
    assert H.space.total == (b + 1) ** a
    for idx in range(H.space.total):
        assert H.index_of(H.map_at(idx)) == idx
    # index 0 is the zero map
    assert H.map_at(0).table == (0,) * (a + 1)


def test_evaluation_and_coevaluation():
    X, Y = FinPointedSet(2), FinPointedSet(2)
    H = map_space(X, Y)
    e = ev(X, Y)
    for idx in range(1, H.space.total):
        f = H.map_at(idx)
        for x in X.nonbase():
            assert e(smash_pair(H.space, X, idx, x)) == f(x)
    # coevaluation then evaluation is the identity on X (up to the unit iso)
    c = gamma_coev(X, Y)
    assert c.dom == X


def test_compose_hom_agrees_with_composition():
    # first smash slot holds the outer map, second the inner one
    X = FinPointedSet(2)
    H = map_space(X, X)
    comp = compose_hom(X, X, X)
    for i in range(1, H.space.total):
        for j in range(1, H.space.total):
            got = comp(smash_pair(H.space, H.space, i, j))
            assert got == H.index_of(H.map_at(j).then(H.map_at(i)))


@given(sizes, sizes, st.data())
@settings(max_examples=60, deadline=None)
def test_epi_mono_factorization(a, b, data):
    X, Y = FinPointedSet(a), FinPointedSet(b)
    table = (0,) + tuple(
        data.draw(st.integers(min_value=0, max_value=b)) for _ in range(a)
    )
    f = PointedMap(X, Y, table)
    e, m = factor_epi_mono(f)
    assert e.then(m).table == f.table
    # mono part: injective away from the basepoint
    hit = [m(x) for x in m.dom.nonbase()]
    assert len(set(hit)) == len(hit) and 0 not in hit
    # epi part: surjective onto its codomain
    assert {e(x) for x in X.elements()} == set(e.cod.elements())


def test_quotient_by_relations():
    X = FinPointedSet(4)
    q = quotient_by_relations(X, [(1, 2), (3, 0)])
    assert q.space.size == 2
    assert q.proj(1) == q.proj(2) != 0
    assert q.proj(3) == 0
    assert q.proj(4) not in (0, q.proj(1))
    reps = class_reps(q.proj)
    assert len(reps) == q.space.total and reps[0] == 0


def test_collapse_subset():
    X = FinPointedSet(3)
    q = collapse_subset(X, [2, 3])
    assert q.space.size == 1
    assert q.proj(2) == q.proj(3) == 0 and q.proj(1) == 1


def test_induced_on_quotients_requires_well_defined():
    X = FinPointedSet(3)
    qx = quotient_by_relations(X, [(1, 2)])
    f_ok = PointedMap(X, X, (0, 3, 3, 1))
    g = induced_on_quotients(f_ok, qx.proj, qx.proj)
    assert g(qx.proj(1)) == qx.proj(3)
    f_bad = PointedMap(X, X, (0, 1, 3, 2))  # separates the glued pair
    with pytest.raises(Exception):
        induced_on_quotients(f_bad, qx.proj, qx.proj)


def test_wedge_inclusions():
    X, Y = FinPointedSet(2), FinPointedSet(3)
    w = wedge(X, Y)
    assert w.space.size == 5
    img = {w.inl(x) for x in X.elements()} | {w.inr(y) for y in Y.elements()}
    assert img == set(w.space.elements())
    # copairing restricts to the given legs
    f = PointedMap(X, Y, (0, 2, 2))
    h = w.case(f, identity(Y))
    assert w.inl.then(h).table == f.table
    assert w.inr.then(h).table == identity(Y).table


def test_symmetric_group_and_actions():
    assert len(symmetric_group(3)) == 6
    assert perm_compose((2, 1, 3), (2, 1, 3)) == (1, 2, 3)
    X = FinPointedSet(3)
    act = group_action(
        X, {p: perm_as_pointed_map(p) for p in symmetric_group(3)}
    )
    assert sigma_is_free(act, [1, 2, 3]) is False  # stabilizers are nontrivial
    Y = FinPointedSet(2)
    swap_act = group_action(
        Y, {(1, 2): identity(Y), (2, 1): PointedMap(Y, Y, (0, 2, 1))}
    )
    assert sigma_is_free(swap_act, [1, 2])


def test_group_action_rejects_non_invariant_subset():
    Y = FinPointedSet(2)
    act = group_action(
        Y, {(1, 2): identity(Y), (2, 1): PointedMap(Y, Y, (0, 2, 1))}
    )
    with pytest.raises(SubsetNotInvariant):
        sigma_is_free(act, [1])
