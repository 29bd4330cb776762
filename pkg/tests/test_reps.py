from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from k3a5.exact import CycloNumber, sqrt5
from k3a5.reps import (NoSolution, a5_character_table, alternating_group_a5, class_of, compose,
                       decompose_neron_severi, enumerate_subgroups, from_cycles, parity,
                       subgroup_orders, transitive_orbit_sizes)

A5 = alternating_group_a5()
TABLE = a5_character_table()
from oracles import PAIRS as _PAIRS, brute_force  # noqa: E402

NIKULIN = {"2A": 8, "3A": 6, "5A": 4, "5B": 4}


def test_classes():
    assert A5.order == 60
    assert [A5.class_sizes[c] for c in ("1A", "2A", "3A", "5A", "5B")] == [1, 15, 20, 12, 12]
    assert class_of(tuple(range(5))) == "1A"
    assert class_of(from_cycles((1, 2), (3, 4))) == "2A"
    assert class_of(from_cycles((3, 4, 5))) == "3A"
    assert class_of(from_cycles((1, 2, 3, 4, 5))) == "5A"
    assert class_of(from_cycles((1, 3, 5, 2, 4))) == "5B"
    with pytest.raises(ValueError):
        class_of(from_cycles((1, 2)))


perms = st.permutations(range(5)).map(tuple)


@given(perms, perms, perms)
def test_compose_associative_and_parity(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)
    assert parity(compose(p, q)) == (parity(p) + parity(q)) % 2


def test_character_table_orthogonality():
    one = CycloNumber.from_rational(5, 1)
    zero = CycloNumber.from_rational(5, 0)
    for i, f in enumerate(TABLE.rows):
        for j, g in enumerate(TABLE.rows):
            assert TABLE.inner(f, g) == (one if i == j else zero)
    for a in range(5):
        for b in range(5):
            s = sum((TABLE.rows[i][a] * TABLE.rows[i][b].conjugate() for i in range(5)), zero)
            expected = Fraction(60, TABLE.class_sizes[a]) if a == b else 0
            assert s == CycloNumber.from_rational(5, expected)
    assert TABLE.dimensions == (1, 3, 3, 4, 5)
    assert TABLE.value(2, "5A") == (1 - sqrt5()) * Fraction(1, 2)


def test_decomposition():
    m = decompose_neron_severi(NIKULIN)
    assert m.a == (2, 0, 0, 2, 2)
    assert m.rank() == 20


def _euler_from(mult):
    out = {}
    for c, vals in _PAIRS.items():
        r = sum(m * v[0] for m, v in zip(mult, vals))
        s = sum(m * v[1] for m, v in zip(mult, vals))
        out[c] = (r, s)
    return out


def test_decomposition_round_trip_and_5A_5B_swap():
    # every rank-20 multiplicity vector whose traces are rational integers
    seen = 0
    for a in product(range(7), repeat=4):
        mult = (2,) + a
        if sum(m * d for m, d in zip(mult, (1, 3, 3, 4, 5))) != 20:
            continue
        tr = _euler_from(mult)
        if any(s for _, s in tr.values()) or any(Fraction(r).denominator != 1 for r, _ in tr.values()):
            continue
        euler = {c: int(tr[c][0]) + 4 for c in ("2A", "3A", "5A", "5B")}
        assert decompose_neron_severi(euler).a == mult
        swapped = dict(euler, **{"5A": euler["5B"], "5B": euler["5A"]})
        got = decompose_neron_severi(swapped).a
        assert got == (mult[0], mult[2], mult[1]) + mult[3:]
        seen += 1
    assert seen > 1


def test_decomposition_perturbed():
    with pytest.raises(NoSolution):
        decompose_neron_severi(dict(NIKULIN, **{"2A": 4}))
    with pytest.raises(ValueError):
        decompose_neron_severi({"2A": 8})


def test_decomposition_matches_brute_force():
    assert brute_force(NIKULIN) == [(2, 0, 0, 2, 2)]
    assert brute_force(dict(NIKULIN, **{"2A": 4})) == []


def test_subgroups_closed():
    subs = enumerate_subgroups(A5)
    for h in subs:
        for a in h:
            for b in h:
                assert compose(a, b) in h
    assert subgroup_orders(A5) == {1, 2, 3, 4, 5, 6, 10, 12, 60}


def test_orbit_sizes():
    sizes = transitive_orbit_sizes(A5)
    assert sizes == {5, 6, 10, 12, 15, 20, 30, 60}
    assert all(60 % r == 0 and 60 // r in subgroup_orders(A5) for r in sizes)
    assert {r for r in sizes if r <= 10} == {5, 6, 10}
