"""Acceptance suite: one or more tests per criterion, summarized at the end of the run.

Run with `pytest tests/test_acceptance.py -v`; the summary section lists one
PASS/FAIL line per criterion.
"""

import subprocess
import sys
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoproj import fkmproj
from isoproj.census import all_homogeneous, enumerate_foliations, export, homogeneity
from isoproj.fkmproj import (admissible_points_fkm, closed_form_N, count_classes_fkm,
                             diagram_automorphisms_lwd, exceptional_pairs, families,
                             lowest_weight_diagram, lowest_weights, outpm_group,
                             realizable_automorphisms)
from isoproj.golden import (is_prime, literal_admissible, literal_admissible_fkm,
                            literal_lowest_weights, pair_table_N)
from isoproj.perm import mat_vec
from isoproj.rootsys import TorusPoint, basis_point
from isoproj.symcat import catalog, make_record, symmetric_rank
from isoproj.voganproj import (admissible_points, admissible_points_oracle, automorphism_group,
                               count_classes)

CATALOG = catalog(8)
SWEEP = families(18, max_rank_sum=9)
SMALL_FAMILIES = [f for f in families(10, max_k=23) if f.p <= 5 and all(x <= 5 for x in f.q)]


@pytest.mark.criterion(1, "N per row of the symmetric-pair table, p <= 8, under 10 s")
def test_criterion_1_pair_table_counts():
    t0 = time.perf_counter()
    mismatches = []
    for rec in catalog(8):
        want = pair_table_N(rec)
        if want is None:
            continue
        got, _ = count_classes(rec)
        if got != want:
            mismatches.append((rec.name, got, want))
    elapsed = time.perf_counter() - t0
    assert mismatches == []
    assert elapsed < 10, f"took {elapsed:.1f}s"


@pytest.mark.criterion(2, "pair admissible sets: closed form = search (bound 2) = listed sets")
def test_criterion_2_pair_admissible_sets():
    for rec in CATALOG:
        closed = admissible_points(rec)
        assert admissible_points_oracle(rec, 2) == closed, rec.name
        listed = literal_admissible(rec)
        if listed is not None:
            assert closed == listed, rec.name


@pytest.mark.criterion(2, "pair admissible sets: closed form = search (bound 2) = listed sets")
def test_criterion_2_e_ii_example():
    rec = make_record("E II")
    assert [str(t) for t in admissible_points(rec)] == ["-h2", "-h2+2h6", "2h1-h2"]


@pytest.mark.criterion(3, "Clifford families m <= 18, p+q <= 9: N = closed form, under 60 s")
def test_criterion_3_clifford_counts():
    fkmproj._admissible_points_fkm.cache_clear()
    t0 = time.perf_counter()
    residues = set()
    for f in SWEEP:
        got, _ = count_classes_fkm(f)
        assert got == closed_form_N(f), f.label()
        residues.add(f.m % 8)
    elapsed = time.perf_counter() - t0
    assert residues == set(range(8))
    assert elapsed < 60, f"took {elapsed:.1f}s"


@pytest.mark.criterion(4, "Clifford admissible sets and lowest weights equal the listed ones")
def test_criterion_4_clifford_admissible_sets():
    for f in SWEEP:
        assert admissible_points_fkm(f) == literal_admissible_fkm(f), f.label()
        assert sorted(lowest_weights(f)) == literal_lowest_weights(f), f.label()


@pytest.mark.criterion(4, "Clifford admissible sets and lowest weights equal the listed ones")
def test_criterion_4_m1_extra_point():
    f = fkmproj.clifford_family(1, 3)
    names = [f.point_str(t) for t in admissible_points_fkm(f)]
    assert names == ["-2s1", "2s1"]


@pytest.mark.criterion(5, "generated group order = lowest-weight-diagram automorphism count, p,q <= 5")
def test_criterion_5_group_order_equals_diagram_count():
    mismatches = []
    for f in SMALL_FAMILIES:
        literal = len(diagram_automorphisms_lwd(lowest_weight_diagram(f)))
        generated = len(outpm_group(f))
        if literal != generated:
            mismatches.append((f.label(), literal, generated))
    assert mismatches == []


@pytest.mark.criterion("5 (realizable)", "generated group order = count of diagram automorphisms "
                       "realized by orthogonal torus maps")
def test_criterion_5_group_order_equals_realizable_count():
    for f in SMALL_FAMILIES:
        realized = realizable_automorphisms(lowest_weight_diagram(f))
        group = outpm_group(f)
        assert sorted(realized) == sorted(group), f.label()


@pytest.mark.criterion(6, "all foliations on CP^n homogeneous iff n+1 prime, n <= 200, under 5 s")
def test_criterion_6_prime_criterion():
    t0 = time.perf_counter()
    for n in range(1, 201):
        assert all_homogeneous(n) == is_prime(n + 1), n
    assert time.perf_counter() - t0 < 5


@pytest.mark.criterion(7, "Hermitian: one homogeneous orbit; non-Hermitian: none")
def test_criterion_7_homogeneity_ledger():
    for rec in CATALOG:
        if symmetric_rank(rec) < 2:
            continue
        _, orbs = count_classes(rec)
        flags = [homogeneity(rec, orb[0]) for orb in orbs]
        homog = sum(flags)
        if rec.hermitian:
            assert homog == 1, rec.name
            # +h_nu and -h_nu share the homogeneous orbit
            orb = orbs[flags.index(True)]
            assert basis_point(rec.p, rec.nu, 1) in orb and basis_point(rec.p, rec.nu, -1) in orb
        else:
            assert homog == 0, rec.name


@pytest.mark.criterion(8, "exceptional multiplicity pairs for m <= 10")
def test_criterion_8_exceptional_pairs():
    _, pairs = exceptional_pairs(max_m=10, max_k=4)
    assert pairs == [(2, 1), (4, 3), (5, 2), (6, 1), (8, 7), (9, 6)]


@pytest.mark.criterion(9, "property suite: bound 3 finds no extra points, maps permute, census deterministic")
@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CATALOG))
def test_criterion_9_pair_oracle_bound_3(rec):
    assert admissible_points_oracle(rec, 3) == admissible_points(rec)


@pytest.mark.criterion(9, "property suite: bound 3 finds no extra points, maps permute, census deterministic")
@settings(max_examples=30, deadline=None)
@given(st.sampled_from([f for f in SWEEP if f.dim <= 7]))
def test_criterion_9_clifford_search_bound_3(f):
    assert admissible_points_fkm(f, 3) == admissible_points_fkm(f, 2)


@pytest.mark.criterion(9, "property suite: bound 3 finds no extra points, maps permute, census deterministic")
def test_criterion_9_maps_permute_admissible_sets():
    for rec in CATALOG:
        pts = set(admissible_points(rec))
        for g in automorphism_group(rec):
            assert {g(t) for t in pts} == pts, rec.name
    for f in SWEEP:
        pts = set(admissible_points_fkm(f))
        for g in outpm_group(f):
            assert {TorusPoint(t.basis, mat_vec(g, t.coords)) for t in pts} == pts, f.label()


@pytest.mark.criterion(9, "property suite: bound 3 finds no extra points, maps permute, census deterministic")
def test_criterion_9_census_is_byte_identical():
    for n in (7, 15, 31):
        assert export(enumerate_foliations(n), "json") == export(enumerate_foliations(n), "json")
        assert export(enumerate_foliations(n), "csv") == export(enumerate_foliations(n), "csv")
    cmd = [sys.executable, "-m", "isoproj", "census", "--n", "15", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
