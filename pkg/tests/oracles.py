"""Independent reference computations shared by the tests."""

from fractions import Fraction
from itertools import product

# characters as (rational part, sqrt5 part) pairs, typed in by hand
PAIRS = {
    "1A": [(1, 0), (3, 0), (3, 0), (4, 0), (5, 0)],
    "2A": [(1, 0), (-1, 0), (-1, 0), (0, 0), (1, 0)],
    "3A": [(1, 0), (0, 0), (0, 0), (1, 0), (-1, 0)],
    "5A": [(1, 0), (Fraction(1, 2), Fraction(-1, 2)), (Fraction(1, 2), Fraction(1, 2)),
           (-1, 0), (0, 0)],
    "5B": [(1, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2)),
           (-1, 0), (0, 0)],
}


def brute_force(euler, limit=20):
    traces = {"1A": 20, **{c: euler[c] - 4 for c in ("2A", "3A", "5A", "5B")}}
    out = []
    for a in product(range(limit + 1), repeat=4):
        mult = (2,) + a
        if sum(m * d for m, d in zip(mult, (1, 3, 3, 4, 5))) != 20:
            continue
        ok = True
        for c, vals in PAIRS.items():
            r = sum(m * v[0] for m, v in zip(mult, vals))
            s = sum(m * v[1] for m, v in zip(mult, vals))
            if (r, s) != (traces[c], 0):
                ok = False
                break
        if ok:
            out.append(mult)
    return out


