"""A5 as a permutation group: classes, character table, subgroups, orbit sizes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Mapping, Optional

from .exact import CycloNumber, solve_linear_rational, sqrt5

CLASS_LABELS = ("1A", "2A", "3A", "5A", "5B")


def compose(p: tuple, q: tuple) -> tuple:
    """(p*q)(i) = p(q(i)): apply q first."""
    return tuple(p[i] for i in q)


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def parity(p: tuple) -> int:
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign += length - 1
    return sign % 2


def element_order(p: tuple) -> int:
    ident = tuple(range(len(p)))
    k, q = 1, p
    while q != ident:
        q = compose(p, q)
        k += 1
    return k


def from_cycles(*cycles, degree: int = 5) -> tuple:
    """Permutation from 1-based cycles, e.g. from_cycles((1, 2), (3, 4))."""
    p = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b - 1
    return tuple(p)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: tuple
    classes: tuple          # ((label, representative, frozenset of members), ...)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def class_sizes(self) -> dict:
        return {label: len(members) for label, _, members in self.classes}

    def class_of(self, element: tuple) -> str:
        for label, _, members in self.classes:
            if element in members:
                return label
        raise ValueError(f"{element} is not a member of the group")


def _closure(gens, degree: int) -> frozenset:
    ident = tuple(range(degree))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


def alternating_group_a5() -> PermGroup:
    elems = tuple(sorted(p for p in permutations(range(5)) if parity(p) == 0))
    five_a = from_cycles((1, 2, 3, 4, 5))
    remaining = set(elems)
    found = {}
    while remaining:
        rep = min(remaining)
        members = frozenset(compose(compose(g, rep), inverse(g)) for g in elems)
        remaining -= members
        o = element_order(rep)
        if o == 5:
            label = "5A" if five_a in members else "5B"
        else:
            label = f"{o}A"
        found[label] = (label, rep if label != "5A" else five_a, members)
    return PermGroup(5, elems, tuple(found[lbl] for lbl in CLASS_LABELS))


def class_of(element: tuple, group: Optional[PermGroup] = None) -> str:
    return (group or alternating_group_a5()).class_of(element)


# ---------------------------------------------------------------------------
# Character table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    class_labels: tuple
    class_sizes: tuple
    rows: tuple             # rows[i][j] = chi_{i+1}(class j), CycloNumber of conductor 5

    @property
    def dimensions(self) -> tuple:
        return tuple(row[0].integer_value() for row in self.rows)

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    def value(self, i: int, label: str) -> CycloNumber:
        """chi_i at a class, 1-based character index."""
        return self.rows[i - 1][self.class_labels.index(label)]

    def inner(self, f, g) -> CycloNumber:
        total = CycloNumber.from_rational(5, 0)
        for size, a, b in zip(self.class_sizes, f, g):
            total += size * a * b.conjugate()
        return total * Fraction(1, self.group_order)


def a5_character_table() -> CharacterTable:
    r5 = sqrt5()
    minus = (1 - r5) * Fraction(1, 2)
    plus = (1 + r5) * Fraction(1, 2)

    def c(v):
        return CycloNumber.from_rational(5, v)

    rows = (
        (c(1), c(1), c(1), c(1), c(1)),
        (c(3), c(-1), c(0), minus, plus),
        (c(3), c(-1), c(0), plus, minus),
        (c(4), c(0), c(1), c(-1), c(-1)),
        (c(5), c(1), c(-1), c(0), c(0)),
    )
    sizes = tuple(alternating_group_a5().class_sizes[lbl] for lbl in CLASS_LABELS)
    return CharacterTable(CLASS_LABELS, sizes, rows)


# ---------------------------------------------------------------------------
# Neron-Severi decomposition
# ---------------------------------------------------------------------------

class DecompositionError(ValueError):
    pass


class NoSolution(DecompositionError):
    pass


class NonUniqueSolution(DecompositionError):
    def __init__(self, solutions):
        super().__init__(f"{len(solutions)} nonnegative integer solutions")
        self.solutions = solutions


@dataclass(frozen=True)
class Multiplicities:
    a: tuple                # (a1, ..., a5)

    def rank(self, dims=(1, 3, 3, 4, 5)) -> int:
        return sum(x * d for x, d in zip(self.a, dims))


def decompose_neron_severi(euler_by_class: Mapping[str, int], rank_S: int = 20,
                           invariant_rank: int = 2, table: Optional[CharacterTable] = None
                           ) -> Multiplicities:
    """Multiplicities a2..a5 of S_X (x) C from fixed-locus Euler numbers.

    For a in A5 with rank T_X = 2, chi_top(X^a) = 4 + Tr(a* | S_X); the
    identity contributes Tr = rank_S.  Each equation lives in Q(sqrt 5) and
    splits into rational equations coefficient by coefficient.
    """
    table = table or a5_character_table()
    missing = {"2A", "3A", "5A", "5B"} - set(euler_by_class)
    if missing:
        raise ValueError(f"missing classes: {sorted(missing)}")
    traces = {"1A": rank_S}
    for lbl in ("2A", "3A", "5A", "5B"):
        traces[lbl] = euler_by_class[lbl] - 4

    A, b = [], []
    for lbl in CLASS_LABELS:
        lhs = CycloNumber.from_rational(5, traces[lbl]) - invariant_rank * table.value(1, lbl)
        cols = [table.value(i, lbl).coeffs for i in range(2, 6)]
        for r in range(len(lhs.coeffs)):
            A.append([col[r] for col in cols])
            b.append(lhs.coeffs[r])
    sol = solve_linear_rational(A, b)
    if sol is None:
        raise NoSolution("character system is inconsistent over Q")

    dims = table.dimensions[1:]
    bound = rank_S
    candidates = []
    if sol.dimension == 0:
        pts = [sol.particular]
    else:
        pts = (sol.point(t) for t in product(range(bound + 1), repeat=sol.dimension))
    for x in pts:
        if all(v.denominator == 1 and v >= 0 for v in x):
            a = tuple(int(v) for v in x)
            if sum(ai * d for ai, d in zip(a, dims)) <= bound and a not in candidates:
                candidates.append(a)
    if not candidates:
        raise NoSolution("no nonnegative integer multiplicities")
    if len(candidates) > 1:
        raise NonUniqueSolution(candidates)
    return Multiplicities((invariant_rank,) + candidates[0])


# ---------------------------------------------------------------------------
# Subgroups and transitive actions
# ---------------------------------------------------------------------------

def enumerate_subgroups(group: PermGroup) -> set:
    """All subgroups generated by at most two elements (all of them, for A5)."""
    found = set()
    for g in group.elements:
        found.add(_closure([g], group.degree))
    elems = group.elements
    for i, g in enumerate(elems):
        for h in elems[i + 1:]:
            found.add(_closure([g, h], group.degree))
    return found


def subgroup_orders(group: PermGroup) -> set:
    return {len(h) for h in enumerate_subgroups(group)}


def transitive_orbit_sizes(group: PermGroup, minimum: int = 5) -> set:
    """Degrees |G|/|H| of transitive actions, dropping those below ``minimum``.

    Homomorphisms A5 -> S_r with r <= 4 are trivial, hence the default cut.
    """
    return {group.order // d for d in subgroup_orders(group) if group.order // d >= minimum}
