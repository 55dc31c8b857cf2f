"""Partition combinatorics and the boundary filtration of representables."""

from gammacalc.gammaset import gamma_wedge, is_cofibrant, representable
from gammacalc.spheres import (
    boundary_mod_outer_iso,
    cofiber_sequence_spheres,
    collapsed_sphere,
    filtration_comparison,
    mod_outer,
    partition_correspondence,
    partition_element,
    proper_partition_images,
    refines,
    set_partitions,
    sphere_table,
    swap_orbit_quotient,
)

from oracles.naive import bell_numbers, rep_level_counts

BELL = bell_numbers(5)  # 1, 1, 2, 5, 15, 52


def test_partition_counts_are_bell_numbers():
    for n in range(1, 6):
        assert len(set_partitions(n)) == BELL[n]


def test_partition_blocks_are_canonical():
    for pi in set_partitions(4):
        flat = sorted(x for blk in pi for x in blk)
        assert flat == [1, 2, 3, 4]
        # blocks ordered by least element, entries ascending inside each block
        leads = [blk[0] for blk in pi]
        assert leads == sorted(leads)
        assert all(list(blk) == sorted(blk) for blk in pi)


def test_refines():
    fine = ((1,), (2,), (3,))
    coarse = ((1, 2, 3),)
    mixed = ((1, 2), (3,))
    assert refines(fine, coarse) and refines(mixed, coarse) and refines(fine, mixed)
    assert not refines(coarse, fine)
    assert not refines(((1, 3), (2,)), mixed)


def test_partition_element_degree():
    # number of blocks is the level the canonical element lives at
    for pi in set_partitions(3):
        level, elem = partition_element(pi, 3)
        assert level == len(pi)
        assert elem != 0


def test_partition_correspondence_small_degrees():
    for n in (1, 2, 3):
        lat = partition_correspondence(n, n)
        assert len(lat.partitions) == BELL[n]
        assert lat.distinct and lat.order_reversing


def test_sphere_table_matches_direct_counts():
    for n in (1, 2, 3):
        rows = sphere_table(n, 3)
        for row in rows:
            total, bd, out = rep_level_counts(n, row.level)
            assert row.total == total
            assert row.boundary_total == bd
            assert row.outer_total == out
            assert row.mod_boundary_total == total - bd + 1
            assert row.mod_outer_total == total - out + 1
            assert row.boundary_mod_outer_total == bd - out + 1


def test_degree_two_table_frozen_numbers():
    rows = sphere_table(2, 3)
    assert [r.total for r in rows] == [1, 4, 9, 16]
    assert [r.boundary_total for r in rows] == [1, 4, 7, 10]
    assert [r.outer_total for r in rows] == [1, 3, 5, 7]
    assert [r.mod_boundary_total for r in rows] == [1, 1, 3, 7]
    assert [r.mod_outer_total for r in rows] == [1, 2, 5, 10]
    assert [r.boundary_mod_outer_total for r in rows] == [1, 2, 3, 4]


def test_collapsed_sphere_and_mod_outer():
    Q, proj = collapsed_sphere(2, 3)
    assert [lv.total for lv in Q.levels] == [1, 1, 3, 7]
    proj.validate()
    M, mproj = mod_outer(2, 3)
    assert [lv.total for lv in M.levels] == [1, 2, 5, 10]
    mproj.validate()


def test_boundary_mod_outer_is_degree_one_sphere():
    gm = boundary_mod_outer_iso(3)
    assert gm is not None
    gm.validate()
    assert gm.is_levelwise_iso()
    assert [lv.total for lv in gm.dom.levels] == [1, 2, 3, 4]


def test_cofiber_sequences_exact():
    for n in (1, 2, 3):
        for bound in range(1, 4):
            cof = cofiber_sequence_spheres(n, bound)
            assert cof.injective, (n, bound)
            assert cof.exact, (n, bound)


def test_proper_partition_images():
    rep = proper_partition_images(2, 3)
    assert all(row[2] for row in rep.rows)
    # only non-discrete partitions contribute
    assert all(blocks < rep.degree for _, blocks, _ in rep.rows)


def test_swap_orbit_quotient_levels():
    Q = swap_orbit_quotient(3)
    Q.validate()
    # unordered pairs with repetition: (k+1)(k+2)/2 totals
    assert [lv.total for lv in Q.levels] == [1, 3, 6, 10]
    assert not is_cofibrant(Q)


def test_filtration_comparison():
    for A in (representable(1, 2), representable(2, 2)):
        for n in (1, 2):
            rep = filtration_comparison(A, n)
            assert rep.iso_ok, (A, n)
    W, _, _ = gamma_wedge(representable(1, 2), representable(2, 2))
    for n in (1, 2):
        assert filtration_comparison(W, n).iso_ok
    # without dividing by the permutation diagonal the comparison glues
    bad = filtration_comparison(representable(2, 2), 2)
    assert not bad.plain_bijective
    assert bad.plain_witness is not None
