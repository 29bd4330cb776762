import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, given, settings, strategies as st

from k3a5.lattices import (DegenerateLattice, DualVector, GramLattice, InvalidGlue, GlueGroup,
                           build_overlattice, discriminant_group, dumps_fixture,
                           even_overlattice_candidates, form_on_generators, glue_feasibility,
                           glue_obstructions, loads_fixture, mod1, mod2,
                           order4_rotation_fixed_part, overlattice_form, render_dual,
                           sublattice_index)

FIXTURE = Path(__file__).parent / "fixtures" / "lattices.json"
LATS, VECS = loads_fixture(FIXTURE.read_text())
half = Fraction(1, 2)


def test_fixture_round_trip():
    assert LATS["u6"] == GramLattice.hyperbolic(6)
    assert loads_fixture(dumps_fixture(LATS, VECS)) == (LATS, VECS)
    assert json.loads(FIXTURE.read_text())["vectors"]["delta2"][1] == [1, 6]


def test_discriminant_groups():
    assert discriminant_group(LATS["diag12"]).orders == (12, 12)
    assert discriminant_group(LATS["u6"]).orders == (6, 6)
    assert discriminant_group(LATS["t10"]).gram_str() == "(1/10, 0; 0, 1/10)"
    with pytest.raises(DegenerateLattice):
        discriminant_group(GramLattice(("a", "b"), ((2, 2), (2, 2))))


even_lattices = st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n),
    st.lists(st.integers(-4, 4), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)))


def _lattice(spec):
    n, diag, off = spec
    g = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        g[i][i] = 2 * diag[i]
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = off[k]
            k += 1
    return GramLattice(tuple(f"e{i}" for i in range(n)), g)


@settings(max_examples=60, deadline=None)
@given(even_lattices, st.data())
def test_discriminant_order_and_polarization(spec, data):
    L = _lattice(spec)
    assume(L.det != 0 and abs(L.det) < 5000)
    A = discriminant_group(L)
    assert A.order == abs(L.det)
    vec = st.tuples(*(st.integers(0, o - 1) for o in A.orders))
    for _ in range(5):
        x, y = data.draw(vec), data.draw(vec)
        s = tuple(a + b for a, b in zip(x, y))
        assert A.b(x, y) == mod1((A.q(s) - A.q(x) - A.q(y)) / 2)
        assert A.q(x) == mod2(A.q(x) + 2)


def test_diag12_overlattice_is_u6():
    L = LATS["diag12"]
    cands = even_overlattice_candidates(L)
    assert [c.coords for c in cands] == [(half, half)]
    over = build_overlattice(L, cands)
    assert over.det == -36 and discriminant_group(GramLattice(("a", "b"), over.gram)).orders == (6, 6)
    u1, u2 = (half, half), (half, -half)
    assert [[L.dot(a, b) for b in (u1, u2)] for a in (u1, u2)] == [[0, 6], [6, 0]]
    assert sublattice_index(L, GramLattice.hyperbolic(6), [(1, 1), (1, -1)]) == 2


def test_case2_has_no_index4_glue():
    S, T = LATS["u6"], LATS["t20"]
    assert len(even_overlattice_candidates(S + T, split=2)) == 4
    assert glue_feasibility(S, T, 4) == []
    values = sorted(o.value for o in glue_obstructions(S, T) if o.value is not None)
    assert values == [Fraction(13, 2)] * 4 + [Fraction(23, 2)]


def test_case3_has_no_index4_glue():
    S = GramLattice.diagonal(("u1", "u2"), (12, -12))
    T = LATS["t10"]
    assert len(even_overlattice_candidates(S + T, split=2)) == 2
    assert glue_feasibility(S, T, 4) == []
    reasons = [o.reason for o in glue_obstructions(S, T)]
    assert reasons == ["difference: projection to A_T not injective"]


def test_case1_glue_and_form():
    S, T = LATS["u6"], LATS["t10"]
    glues = glue_feasibility(S, T, 2)
    assert len(glues) == 1 and glues[0].generators[0] == VECS["glue_u6_t10"]
    form = overlattice_form(S, T, glues[0])
    assert form.orders == (30, 30) and form.order == 900
    over = build_overlattice(S + T, glues[0].generators)
    # |det| drops by the square of the index: 3600 / 2^2
    assert abs((S + T).det) == 3600 and abs(over.det) == 900
    d1, d2 = VECS["delta1"], VECS["delta2"]
    assert render_dual(S + T, d1) == "u1* + 2u2* + t2*"
    assert render_dual(S + T, d2) == "u1* + t1*"
    gens, generated, full = form_on_generators(S, T, glues[0], [d1, d2])
    assert gens.gram_str() == "(23/30, 1/3; 1/3, 1/10)"
    assert (gens.orders, generated, full) == ((30, 30), 900, 900)


def test_invalid_glue_rejected():
    S, T = LATS["u6"], LATS["t10"]
    bad = DualVector.of(half, 0, 0, 0)
    with pytest.raises(InvalidGlue):
        overlattice_form(S, T, GlueGroup((bad,), (bad,)))


def test_no_glue_discriminant():
    assert discriminant_group(LATS["u6"] + LATS["t10"]).orders == (2, 2, 30, 30)


def test_rotation_fixed_part():
    assert order4_rotation_fixed_part(5) == [(0, 0), (5, 5)]
    assert order4_rotation_fixed_part(1) == [(0, 0), (1, 1)]
    with pytest.raises(ValueError):
        order4_rotation_fixed_part(0)
