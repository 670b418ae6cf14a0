import pytest

from isoproj.census import (FIELDS, GAP_SOURCE, all_homogeneous, codim_bound, enumerate_foliations,
                            export, homogeneity, inhomog_exists, pair_records_of_dim, parse,
                            witness_record)
from isoproj.rootsys import TorusPoint
from isoproj.symcat import dims, make_record
from isoproj.voganproj import count_classes


def test_inhomog_exists_examples():
    assert inhomog_exists(3, 1)
    assert not inhomog_exists(2, 1)
    assert not inhomog_exists(1, 1)
    assert inhomog_exists(15, 3)
    assert not inhomog_exists(15, 5)
    assert inhomog_exists(8, 2)
    with pytest.raises(ValueError):
        inhomog_exists(0, 1)


def test_codim_bound():
    assert codim_bound(1) == 1
    assert codim_bound(7) == 3
    assert codim_bound(15) == 4


def test_all_homogeneous_small_n():
    assert [n for n in range(1, 13) if all_homogeneous(n)] == [1, 2, 4, 6, 10, 12]


@pytest.mark.parametrize("n", range(1, 31))
def test_inhomogeneous_rows_match_existence_predicate(n):
    rows = enumerate_foliations(n)
    got = {r.codim for r in rows if r.source_kind == "pair" and r.homogeneous == "no"}
    want = {q for q in range(1, codim_bound(n) + 1) if inhomog_exists(n, q)}
    assert got == want


@pytest.mark.parametrize("n,q", [(3, 1), (7, 1), (8, 2), (7, 3), (15, 3), (11, 2), (24, 4)])
def test_witness_has_an_inhomogeneous_orbit(n, q):
    rec = witness_record(n, q)
    dim_p, _, n_rec, codim = dims(rec)
    assert (n_rec, codim) == (n, q)
    assert any(not homogeneity(rec, orb[0]) for orb in count_classes(rec)[1])


def test_no_witness_when_predicate_false():
    assert witness_record(2, 1) is None


def test_homogeneity_rejects_non_admissible_point():
    with pytest.raises(ValueError):
        homogeneity(make_record("E II"), TorusPoint.h(0, 1, 0, 0, 0, 0))


def test_pair_records_of_dim():
    names = sorted(r.name for r in pair_records_of_dim(32))
    assert "D I (p=6, nu=2)" in names
    assert "E III" in names
    assert all(dims(r)[0] == 32 and dims(r)[1] >= 2 for r in pair_records_of_dim(32))


def test_census_n15_rows():
    rows = enumerate_foliations(15)
    kinds = [r.source_kind for r in rows]
    # codimension >= 2 rows precede codimension-one rows; the gap row closes the list
    codims = [r.codim for r in rows]
    assert codims == sorted(codims, reverse=True)
    assert kinds[-1] == "gap" and rows[-1].source == GAP_SOURCE
    fkm = [r for r in rows if r.source_kind == "fkm"]
    assert fkm and all(r.homogeneous == "unknown" for r in fkm)
    assert all(r.overlap_candidate for r in fkm)
    g_rows = [r for r in rows if r.source == "G"]
    assert not any(r.overlap_candidate for r in g_rows)


def test_census_n3_has_g_and_a_iii():
    rows = enumerate_foliations(3)
    assert {r.source for r in rows} == {"A III", "G", "FKM"}
    assert not any(r.source == "G" and r.overlap_candidate for r in rows)


def test_census_rejects_bad_n():
    with pytest.raises(ValueError):
        enumerate_foliations(0)


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_export_round_trip(fmt):
    rows = enumerate_foliations(15)
    data = export(rows, fmt)
    assert parse(data, fmt) == rows
    assert export(parse(data, fmt), fmt) == data


def test_export_fields_and_rationals():
    rows = enumerate_foliations(7)
    header = export(rows, "csv").decode().splitlines()[0]
    assert header.split(",") == FIELDS
    assert "h:0 -1 0" in export(rows, "csv").decode()


def test_export_unknown_format():
    with pytest.raises(ValueError):
        export([], "xml")
    with pytest.raises(ValueError):
        parse(b"[]", "xml")
