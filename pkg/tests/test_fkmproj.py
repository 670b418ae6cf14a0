from fractions import Fraction

import pytest

from isoproj.fkmproj import (ScopeError, admissible_points_fkm, clifford_family, closed_form_N,
                             congruence_classes, count_classes_fkm, delta,
                             diagram_automorphisms_lwd, families, is_admissible_fkm,
                             lowest_weight_diagram, lowest_weights, outpm_generators,
                             outpm_group, realizable_automorphisms, simple_roots,
                             weight_blocks, weight_system)
from isoproj.rootsys import TorusPoint


def _names(f):
    return [f.point_str(t) for t in admissible_points_fkm(f)]


def test_periodicity_of_module_dimension():
    assert [delta(m) for m in range(1, 10)] == [2, 4, 8, 8, 16, 16, 16, 16, 32]
    for m in range(1, 9):
        assert delta(m + 8) == 16 * delta(m)


def test_family_bookkeeping():
    f = clifford_family(3, 2)
    assert (f.dimV, f.n, f.mult, f.p, f.q, f.dim) == (16, 7, (3, 4), 2, (2,), 4)
    g = clifford_family(8, (2, 1))
    assert g.is_split and g.k == 3 and g.mult == (8, 15)


def test_not_a_foliation_rejected():
    with pytest.raises(ValueError):
        clifford_family(1, 1)
    assert clifford_family(1, 1, require_foliation=False).mult == (1, -1)


def test_two_weights_for_smallest_module():
    f = clifford_family(1, 1, require_foliation=False)
    assert sum(len(b) for b in weight_blocks(f)) == 2


def test_weight_count_matches_module_dimension():
    for f in families(12, max_rank_sum=7):
        assert len(weight_system(f)) == f.dimV


def test_out_of_scope_raises():
    f = clifford_family(5, 1, require_foliation=False)
    assert f.mult == (5, 2) and not f.in_scope
    with pytest.raises(ScopeError):
        admissible_points_fkm(f)


@pytest.mark.parametrize("m,split,points,gens,N", [
    (3, 2, ["e1+e2", "2s1"], ["sigma"], 2),
    (2, 3, ["-e1-e2-e3", "e1-e2-e3", "e1+e2-e3", "e1+e2+e3", "2s1"], ["sigma_u"], 3),
    (1, 3, ["-2s1", "2s1"], ["sigma"], 1),
    (1, 4, ["-2s1", "e1-e2", "e1+e2", "2s1"], ["sigma", "phi"], 2),
    (7, 2, ["-e1", "e1", "2s1"], ["sigma", "phi"], 2),
    (5, 2, ["e1+e2", "2s1"], ["sigma"], 2),
    (8, (2, 2), ["-e+1-e-1", "-e+1+e-1", "e+1-e-1", "e+1+e-1", "2s1"], ["phi+", "phi-", "tau"], 2),
    (4, (2, 1), ["e+1+e+2+e-1", "2s1"], [], 2),
])
def test_frozen_examples(m, split, points, gens, N):
    f = clifford_family(m, split)
    assert _names(f) == points
    assert [g.name for g in outpm_generators(f)] == gens
    assert count_classes_fkm(f)[0] == closed_form_N(f) == N


def test_zero_summand_is_extrapolated():
    f = clifford_family(8, (4, 0))
    assert f.extrapolated
    assert count_classes_fkm(f)[0] == 2
    assert not clifford_family(8, (2, 1)).extrapolated


def test_admissible_points_satisfy_predicate():
    for f in families(10, max_rank_sum=6):
        for t in admissible_points_fkm(f):
            assert is_admissible_fkm(f, t)
        assert not is_admissible_fkm(f, TorusPoint.eps(*([0] * f.dim)))


def test_simple_roots_pair_integrally_with_weights():
    for f in families(10, max_rank_sum=6):
        for _, a in simple_roots(f):
            aa = sum(x * x for x in a)
            for w in weight_system(f):
                v = 2 * sum(x * y for x, y in zip(w, a)) / aa
                assert Fraction(v).denominator == 1


def test_lowest_weights_m3():
    f = clifford_family(3, 2)
    half = Fraction(1, 2)
    assert sorted(lowest_weights(f)) == sorted([(-half, -half, -1, 0), (-half, half, -1, 0)])


def test_lowest_weight_diagram_shape():
    f = clifford_family(3, 2)
    d = lowest_weight_diagram(f)
    assert len(d.white) == f.dim and len(d.black) == 2
    assert d.colors().count(True) == 2


def test_realizable_maps_form_the_generated_group():
    for f in families(9, max_rank_sum=6):
        d = lowest_weight_diagram(f)
        assert sorted(realizable_automorphisms(d)) == sorted(outpm_group(f)), f.label()
        assert len(diagram_automorphisms_lwd(d)) >= len(outpm_group(f))


def test_literal_count_exceeds_group_for_m7_k2():
    f = clifford_family(7, 2)
    assert len(diagram_automorphisms_lwd(lowest_weight_diagram(f))) == 8
    assert len(outpm_group(f)) == 4


def test_congruence_classes_identify_swapped_splits():
    fams = [clifford_family(8, (2, 1)), clifford_family(8, (1, 2)), clifford_family(8, (2, 2))]
    assert len(congruence_classes(fams)) == 2
