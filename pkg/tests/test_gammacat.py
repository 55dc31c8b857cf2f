import pytest

from gammacalc.gammacat import (
    GammaOperator,
    compose_operators,
    enumerate_operators,
    operator_at,
    operator_from_map,
    operator_index,
    smash_operators,
)
from gammacalc.pointed import FinPointedSet, PointedMap


def test_operator_encoding_round_trip():
    for k in range(4):
        for n in range(4):
            ops = enumerate_operators(k, n)
            assert len(ops) == (k + 1) ** n
            for op in ops:
                assert operator_from_map(op.underlying()) == op
                assert operator_at(k, n, operator_index(op)) == op


def test_piece_validation():
    with pytest.raises(Exception):
        GammaOperator(2, 3, ((1, 2), (2,)))  # overlapping pieces
    with pytest.raises(Exception):
        GammaOperator(1, 2, ((2, 1),))  # unsorted piece
    with pytest.raises(Exception):
        GammaOperator(1, 2, ((3,),))  # entry out of range


def test_composition_matches_underlying_maps():
    # l -> k -> n composes to l -> n; underlying maps compose backwards
    for psi in enumerate_operators(1, 2):
        for phi in enumerate_operators(2, 3):
            comp = compose_operators(psi, phi)
            assert comp.dom == 1 and comp.cod == 3
            expect = phi.underlying().then(psi.underlying())
            assert comp.underlying().table == expect.table


def test_composition_shape_mismatch():
    psi = GammaOperator(1, 2, ((1,),))
    phi = GammaOperator(1, 3, ((2,),))
    with pytest.raises(Exception):
        compose_operators(psi, phi)


def test_predicates():
    cover = GammaOperator(2, 3, ((1, 3), (2,)))
    assert cover.is_covering() and cover.has_fat_piece()
    assert not cover.is_invertible()
    perm = GammaOperator(3, 3, ((2,), (3,), (1,)))
    assert perm.is_invertible()
    skip = GammaOperator(2, 3, ((1,), (2,)))
    assert not skip.is_covering() and not skip.has_fat_piece()


def test_smash_operators_on_underlying():
    a = GammaOperator(1, 2, ((1, 2),))
    b = GammaOperator(2, 2, ((2,), (1,)))
    s = smash_operators(a, b)
    assert s.dom == a.dom * b.dom and s.cod == a.cod * b.cod
    # spot-check one entry through the lexicographic pairing
    fa, fb = a.underlying(), b.underlying()
    X, Y = fa.dom, fb.dom
    from gammacalc.pointed import smash_pair

    k = smash_pair(X, Y, 1, 2)
    got = s.underlying()(k)
    expect_i, expect_j = fa(1), fb(2)
    if expect_i and expect_j:
        assert got == (expect_i - 1) * b.dom + expect_j
    else:
        assert got == 0
