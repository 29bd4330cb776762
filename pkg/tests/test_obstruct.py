import pytest

from k3a5.lattices import TorsionForm
from k3a5.obstruct import (DetCase, GroupMismatch, condition_profile, congruence_solution_count,
                           derive_congruence, determinant_case_enumeration,
                           exhaustive_isometry_search, is_group, overlattice_generator_form,
                           obstruction_verdict, quadratic_congruence_solutions,
                           reference_form)

A, B = reference_form(), overlattice_generator_form()


def test_determinant_cases():
    cases = determinant_case_enumeration()
    assert cases == {DetCase(5, 2, 2), DetCase(10, 2, 4), DetCase(5, 1, 4)}
    assert determinant_case_enumeration(det_pool=[300]) == set()


def test_determinant_cases_exhaustive():
    # 576 m^2 <= 16 * 4800 forces m <= 11, so a larger window adds nothing
    assert determinant_case_enumeration(m_max=200) == determinant_case_enumeration()


def test_forms_normalized():
    assert A.gram_str() == "(37/30, 4/5; 4/5, 5/6)"
    assert B.gram_str() == "(23/30, 1/3; 1/3, 1/10)"


def test_congruence():
    assert congruence_solution_count() == (0, None)
    count, w = congruence_solution_count(target=46)
    assert count == 32 and (w.a, w.b) == (1, 1)
    # the reduction mod 4: a^2 + b^2 = 3 has no solution
    assert quadratic_congruence_solutions((23, 3, 20), -23, 4) == []


def test_congruence_is_derived_not_copied():
    coeffs, rhs, modulus = derive_congruence(A, B)
    assert (coeffs, modulus) == ((23, 3, 20), 60)
    assert rhs % 60 == -23 % 60
    assert congruence_solution_count(modulus, coeffs, rhs)[0] == 0


def test_no_isometry():
    assert exhaustive_isometry_search(A, B) == []


def test_self_isometries_form_groups():
    for form, size in ((A, 128), (B, 64)):
        mats = exhaustive_isometry_search(form, form)
        assert ((1, 0), (0, 1)) in mats
        assert len(mats) == size and is_group(mats, 30)


def test_isometry_search_matches_naive_on_small_group():
    from fractions import Fraction
    from itertools import product
    f = TorsionForm((5, 5), ((Fraction(2, 5), 0), (0, Fraction(2, 5))))
    g = TorsionForm((5, 5), ((Fraction(4, 5), 0), (0, Fraction(4, 5))))
    naive = []
    for a, b, c, d in product(range(5), repeat=4):
        if (a * d - b * c) % 5 == 0:
            continue
        if g.q((a, b)) == f.q((1, 0)) and g.q((c, d)) == f.q((0, 1)) \
                and g.b((a, b), (c, d)) == f.b((1, 0), (0, 1)):
            naive.append(((a, c), (b, d)))
    assert exhaustive_isometry_search(f, g) == sorted(naive)


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        exhaustive_isometry_search(A, TorsionForm((10, 10), B.gram))


def test_verdict_and_profile():
    v = obstruction_verdict()
    assert v.as_dict() == {"case": "(5, 2, 2)", "isometry_count": 0,
                           "congruence_count": 0, "verdict": "excluded"}
    profile = condition_profile(A, B)
    assert profile["q1"] == 0
    assert obstruction_verdict(glue_form=A).verdict == "not excluded"
