"""Smoke tests for the compiled module: a few exact values per surface."""

import pytest

import simcores as sc


def test_partition_basics():
    assert sc.conjugate([5, 4, 2]) == [3, 3, 2, 2, 1]
    assert sc.conjugate([]) == []
    assert sc.hook_length([5, 4, 2], 1, 1) == 7
    assert sc.is_self_conjugate([6, 3, 3, 1, 1, 1])
    assert sc.is_simultaneous_core([6, 3, 3, 1, 1, 1], [8, 9, 10])
    assert sc.main_diagonal_hooks([6, 3, 3, 1, 1, 1]) == [11, 3, 1]
    assert sc.sc_partition_from_md([11, 3, 1]) == [6, 3, 3, 1, 1, 1]
    assert sc.first_column_hooks([5, 4, 2]) == [7, 5, 2]
    assert sc.partition_from_first_column_hooks([7, 5, 2]) == [5, 4, 2]


def test_errors_translate():
    with pytest.raises(ValueError):
        sc.hook_length([5, 4, 2], 3, 3)
    with pytest.raises(ValueError):
        sc.is_t_core([1], 0)
    with pytest.raises(ValueError):
        sc.semigroup_gaps([2, 4])


def test_counts():
    assert sc.anderson_size_cap(8, 9) == 210
    assert sc.count_sc_cores(8) == 35
    assert sc.motzkin_number(8) == 323
    assert sc.symmetric_motzkin_count(4) == 5
    assert sc.symmetric_motzkin_by_recurrence(8) == 35
    assert sc.count_lower_ideals([8, 9, 10]) == 323
    assert sc.brute_force_core_count([3, 4], 5, False) == 5
    assert sc.symmetric_gen_dyck_count(4, 1) == 6


def test_poset_and_ideals():
    gaps = sc.semigroup_gaps([8, 9, 10])
    assert len(gaps) == 16 and gaps[-1] == 31
    poset = sc.build_poset([8, 9, 10])
    assert len(poset["cover_edges"]) == 27
    ideals = sc.lower_ideals([3, 4])
    assert len(ideals) == 5
    cores = sc.cores_from_ideals([2, 3])
    assert sorted(cores) == [[], [1]]


def test_sc_machinery():
    assert sc.tilde_ground(8) == [1, 3, 5, 7, 11, 13, 15, 21, 23, 31]
    assert len(sc.forbidden_pairs(8)) == 8
    assert sc.is_valid_md([11, 3, 1], 8)
    assert not sc.fms_conditions([3, 13], 8)
    witnesses = sc.enumerate_sc_cores(8)
    assert len(witnesses) == 35
    assert {"md": [11, 3, 1], "partition": [6, 3, 3, 1, 1, 1]} in [
        {"md": w["md"], "partition": w["partition"]} for w in witnesses
    ]
    assert sc.phi([7, 15], 8) == [1, 3, 5, 15]
    assert len(sc.phi_domain(8)) == 13


def test_paths():
    assert sc.enumerate_motzkin(2) == ["FF", "UD"]
    assert sc.is_symmetric_motzkin("FUDF")
    assert not sc.is_symmetric_motzkin("UDFF")
    assert sc.enumerate_gen_dyck(1, 2) == ["D1"]
    assert sc.is_symmetric_gen_dyck("N E", 2)


def test_verification_reports():
    assert "anderson" in sc.claim_registry()
    report = sc.verify_main(8)
    assert report["passed"]
    assert report["left"][0] == "35"
    assert sc.verify_phi(8)["passed"]
    assert sc.test_conjecture(4, 2)["passed"]
