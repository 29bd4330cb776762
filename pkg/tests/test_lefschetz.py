from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from k3a5.lefschetz import (NIKULIN_TABLE, InvalidParameters, build_mixed_order_system,
                            build_pure_order_system, enumerate_nonnegative_solutions,
                            euler_number, nikulin_total, point_type_index_set,
                            pure_order_relation, relation_strings)


def _indices(I, k):
    return [t.index for t in point_type_index_set(I, k)]


def test_index_sets():
    assert _indices(3, 5) == [1, 2, 3, 4, 11, 12]
    assert _indices(4, 5) == [1, 2, 3, 4, 6, 7, 16, 17]
    assert _indices(4, 3) == [1, 2, 4, 10]


def test_index_set_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        point_type_index_set(3, 3)
    with pytest.raises(InvalidParameters):
        point_type_index_set(3, 1)


def test_no_eigenvalue_one():
    for I, k in [(3, 5), (4, 5), (4, 3), (2, 3), (5, 2)]:
        for t in point_type_index_set(I, k):
            a, b = t.exponents
            assert a % t.conductor and b % t.conductor


@pytest.mark.parametrize("I,k,expected", [
    (3, 5, [[1, 0, 1, 1, 0, 1]]),
    (4, 5, [[1, 1, 0, 0, 1, 0, 0, 1]]),
    (4, 3, [[0, 1, 3, 0], [1, 0, 1, 0], [2, 1, 2, 1], [3, 0, 0, 1]]),
])
def test_mixed_solutions(I, k, expected):
    system = build_mixed_order_system(I, k)
    sols = enumerate_nonnegative_solutions(system, NIKULIN_TABLE[k])
    assert sorted(s.values for s in sols) == expected
    for s in sols:
        assert system.residual(s.values).is_zero()


def test_m_g_values():
    sols = enumerate_nonnegative_solutions(build_mixed_order_system(4, 3), 6)
    assert sorted(s.total for s in sols) == [2, 4, 4, 6]


def test_relations_with_chosen_free_unknowns():
    assert relation_strings(build_mixed_order_system(3, 5), ["m3", "m4"]) == [
        "m1 = m4", "m2 = -1 + m3", "m11 = -1 + m4", "m12 = m3"]
    assert relation_strings(build_mixed_order_system(4, 3), ["m2", "m4"]) == [
        "m1 = 3 + 3m2 - 2m4", "m10 = 1 + 2m2 - m4"]


def test_free_choice_does_not_change_solutions():
    system = build_mixed_order_system(4, 5)
    a = enumerate_nonnegative_solutions(system, 4)
    b = enumerate_nonnegative_solutions(system, 4, free=["m3", "m4", "m6", "m7"])
    assert sorted(s.values for s in a) == sorted(s.values for s in b)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_residual_vanishes_iff_system_holds(vals):
    # the residual uses field inverses, the system a cleared denominator
    system = build_mixed_order_system(4, 3)
    holds = all(sum(Fraction(a) * v for a, v in zip(row, vals)) == rhs
                for row, rhs in zip(system.matrix, system.rhs))
    assert system.residual(vals).is_zero() == holds


def test_pure_relations():
    r3, r4 = pure_order_relation(3), pure_order_relation(4)
    assert (r3.constant, r3.slope, r3.n_min, r3.n_max) == (3, 1, -3, 6)
    assert str(r4) == "m = 4 + 2n, n in [-2, 4]"
    for I, r in ((3, r3), (4, r4)):
        system = build_pure_order_system(I)
        for n in range(r.n_min, r.n_max + 1):
            assert system.residual([r.m(n), n]).is_zero()
        assert not system.residual([r.m(0) + 1, 0]).is_zero()


def test_pure_order_only_for_3_and_4():
    with pytest.raises(InvalidParameters):
        build_pure_order_system(5)


def test_nikulin_total_and_euler():
    assert nikulin_total() == 360
    assert euler_number(4, 2) == 8
    with pytest.raises(ValueError):
        euler_number(-1, 0)
