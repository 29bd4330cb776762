import cmath
import time

import pytest

from k3a5.cases import (ALL_CONFIGS, CaseConfig, ScalarAssignment, ShapeMismatch,
                        admissible_tuples, all_admissible_tuples, assignment_grid,
                        conjugation_symmetric, evaluate_traces, fixed_locus_genus_candidates,
                        self_intersection_from_genus, surviving_assignments)

EXPECTED = {(1, 6, 8, 2, 6, 0), (0, 4, 4, 4, 6, 0), (-1, 2, 0, 6, 6, 0)}


def _t(t):
    return (t.n_g, t.m_g, t.chi_g, t.chi_gtau, t.chi_g2tau, t.chi_g2)


def test_union_of_tuples():
    start = time.perf_counter()
    union = all_admissible_tuples()
    assert time.perf_counter() - start < 1.0
    assert {_t(t) for t in union} == EXPECTED
    assert all(t.chi_g2 == 0 for t in union)
    assert str(max(union, key=lambda t: t.n_g)) == "(1, 6; 8, 2, 6, 0)"


def test_per_configuration():
    got = {(c.stab4, c.stab5): {_t(t) for t in admissible_tuples(c)} for c in ALL_CONFIGS}
    assert got[(False, False)] == {(0, 4, 4, 4, 6, 0)}
    assert got[(False, True)] == {(0, 4, 4, 4, 6, 0)}
    assert got[(True, True)] == EXPECTED
    assert got[(True, False)] == EXPECTED


def test_grid_sizes():
    sizes = {(c.stab4, c.stab5): len(list(assignment_grid(c))) for c in ALL_CONFIGS}
    assert sizes == {(True, True): 2048, (True, False): 256, (False, True): 64, (False, False): 8}


def _numeric_traces(c, a):
    # independent oracle: the same formulas over complex floats
    z = lambda e: 1j ** (e % 4)
    base = 2 + a.tr1
    if c.stab4:
        d = [a.d1, a.d1p, a.d3, a.d3p]
        g4 = z(d[0]) + z(d[1]) + z(d[2]) + z(d[3])
        t4 = z(d[0]) + z(d[1]) - 2 * z(d[2]) - 2 * z(d[3])
        sq4, sqt4 = 4 * (z(2 * d[0]) + z(2 * d[1])), z(2 * d[0]) + z(2 * d[1])
    else:
        g4 = t4 = 0
        sq4, sqt4 = 8 * a.d1d5, 2 * a.d1d5
    if c.stab5:
        g5 = z(a.e1) + z(a.e1p)
        sq5, sqt5 = 5 * (z(2 * a.e1) + z(2 * a.e1p)), -(z(2 * a.e1) + z(2 * a.e1p))
    else:
        g5 = 0
        sq5, sqt5 = 10 * a.e1e6, -2 * a.e1e6
    return (base + g4 + g5, base + t4 + g5, 2 + sqt4 + sqt5, 2 + sq4 + sq5)


def _as_int(w):
    r = round(w.real)
    return r if abs(w - r) < 1e-9 else None


def test_grid_against_float_oracle():
    for c in ALL_CONFIGS:
        for a in assignment_grid(c):
            exact = evaluate_traces(c, a).integers
            approx = tuple(_as_int(complex(w)) for w in _numeric_traces(c, a))
            assert exact == (None if None in approx else approx)


def test_survivors_are_conjugation_symmetric():
    for c in ALL_CONFIGS:
        for a, _ in surviving_assignments(c):
            if c.stab4:
                assert conjugation_symmetric([a.d1, a.d1p, a.d3, a.d3p])
            if c.stab5:
                assert conjugation_symmetric([a.e1, a.e1p])


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        evaluate_traces(CaseConfig(False, False), ScalarAssignment(tr1=0, d1=0))


def test_genus_candidates():
    allowed = {1, 5, 6, 10, 12, 15, 20, 30, 60}
    cands = fixed_locus_genus_candidates(0, 10, allowed)
    assert cands == {(2, 1), (6, 5), (7, 6)}
    assert {c for c in cands if c[1] not in (1, 5)} == {(7, 6)}
    assert self_intersection_from_genus(7) == 12
    assert conjugation_symmetric([1, 3]) and not conjugation_symmetric([1, 1])
