"""Holomorphic Lefschetz fixed-point equations for K3 automorphisms.

An automorphism g of order k*I acting on the 2-form by eta^k (eta a primitive
k*I-th root of unity) has, at an isolated fixed point of type i, tangent
eigenvalues (eta^-i, eta^(k+i)).  Equating the two expressions for the
holomorphic Lefschetz number,

    0 = -(1 + x^-k) + sum_i m_i / ((1 - x^-i)(1 - x^(k+i)))
        [+ n * (1 + x) / (1 - x)^2   when fixed curves are allowed],

and reducing modulo the cyclotomic polynomial of x = eta gives one linear
equation in the counts m_i per coefficient of the residue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .exact import (AffineSolution, CycloNumber, IntPolynomial, cyclo_invert,
                    cyclo_reduce, cyclotomic_polynomial, solve_linear_rational)

#: Fixed-point counts of a symplectic automorphism of order 2..8 (Nikulin).
NIKULIN_TABLE = {2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}

#: Conjugacy class sizes and element orders of A5, used for the 360 total.
A5_ORDER_PROFILE = ((1, 1), (2, 15), (3, 20), (5, 24))

K3_EULER_NUMBER = 24

# Upper bounds on chi_top(X^h) for a purely non-symplectic h of order I.
# They come from the trace of h on T_X and rank S_X <= 20, i.e. geometric
# input recorded here rather than derived.
PURE_EULER_CEILING = {3: 21, 4: 22}


class InvalidParameters(ValueError):
    pass


def nikulin_total(table=NIKULIN_TABLE, profile=A5_ORDER_PROFILE) -> int:
    """Sum of chi_top(X^delta) over all elements of A5."""
    total = 0
    for order, count in profile:
        total += count * (K3_EULER_NUMBER if order == 1 else table[order])
    return total


@dataclass(frozen=True)
class PointType:
    index: int
    conductor: int
    k: int

    @property
    def exponents(self) -> tuple:
        """Exponents (a, b) with tangent eigenvalues (eta^a, eta^b)."""
        n = self.conductor
        return ((-self.index) % n, (self.k + self.index) % n)

    def eigenvalues(self) -> tuple:
        a, b = self.exponents
        return CycloNumber.zeta(self.conductor, a), CycloNumber.zeta(self.conductor, b)


def _point_types(I: int, k: int) -> list:
    n = k * I
    reps = set()
    for i in range(n):
        if (-i) % n == 0 or (k + i) % n == 0:
            continue  # an eigenvalue equal to 1: the point would not be isolated
        if k >= 2 and i % k == 0:
            continue  # g^I (symplectic, order k) would have eigenvalue 1 there
        partner = (-(k + i)) % n
        reps.add(min(i, partner))
    return [PointType(i, n, k) for i in sorted(reps)]


def point_type_index_set(I: int, k: int) -> list:
    """Canonical tangent types of isolated fixed points of g, ord(g) = k*I."""
    if k < 2 or I < 1 or gcd(I, k) != 1:
        raise InvalidParameters(f"need gcd(I, k) = 1 and k >= 2, got I={I}, k={k}")
    return _point_types(I, k)


def _one_minus_x_power(e: int) -> IntPolynomial:
    p = [0] * (e + 1)
    p[0] += 1
    p[e] -= 1
    return IntPolynomial(tuple(p))


@dataclass(frozen=True)
class FixedPointSystem:
    """Linear system (one row per residue coefficient) in the fixed-point counts."""

    I: int
    k: int
    labels: tuple          # e.g. ("m1", "m2", ..., "n")
    types: tuple           # PointType per point unknown
    has_curves: bool
    matrix: tuple          # rows over Fraction
    rhs: tuple
    denominator: CycloNumber = field(compare=False)

    @property
    def conductor(self) -> int:
        return self.k * self.I

    @property
    def point_labels(self) -> tuple:
        return tuple(f"m{t.index}" for t in self.types)

    def solve(self, free: Optional[Sequence[str]] = None) -> AffineSolution:
        """Affine solution set over Q; ``free`` names the preferred free unknowns."""
        order = list(range(len(self.labels)))
        if free:
            fidx = [self.labels.index(f) for f in free]
            order = [c for c in order if c not in fidx] + fidx
        sol = solve_linear_rational(self.matrix, self.rhs, column_order=order)
        if sol is None:
            raise ValueError(f"Lefschetz system for (I, k) = ({self.I}, {self.k}) is inconsistent")
        return sol

    def residual(self, values: Sequence) -> CycloNumber:
        """Right-hand side of the uncleared equation at the given counts.

        Computed with field inverses, independently of the cleared system.
        """
        n = self.conductor
        total = -(1 + CycloNumber.zeta(n, -self.k))
        x = CycloNumber.zeta(n)
        for t, v in zip(self.types, values):
            a, b = t.exponents
            total += v * cyclo_invert((1 - CycloNumber.zeta(n, a)) * (1 - CycloNumber.zeta(n, b)))
        if self.has_curves:
            total += values[-1] * (1 + x) * cyclo_invert((1 - x) * (1 - x))
        return total


def _build(I: int, k: int, types: list, curves: bool) -> FixedPointSystem:
    n = k * I
    dens = []
    for t in types:
        a, b = t.exponents
        dens.append(_one_minus_x_power(a) * _one_minus_x_power(b))
    if curves:
        dens.append(_one_minus_x_power(1) * _one_minus_x_power(1))

    common = IntPolynomial((1,))
    for d in dens:
        common = common * d
    common_res = cyclo_reduce(n, common.coeffs)
    if common_res.is_zero():
        raise ArithmeticError("common denominator vanishes at a primitive root")

    columns = []
    for j in range(len(dens)):
        num = IntPolynomial((1,))
        for jj, d in enumerate(dens):
            if jj != j:
                num = num * d
        if curves and j == len(dens) - 1:
            num = num * IntPolynomial((1, 1))
        columns.append(cyclo_reduce(n, num.coeffs).coeffs)
    # constant: (1 + x^-k) * common moves to the right-hand side
    const = IntPolynomial((1,) + (0,) * ((-k) % n - 1) + (1,)) if (-k) % n else IntPolynomial((2,))
    rhs = cyclo_reduce(n, (const * common).coeffs).coeffs

    rows = len(rhs)
    matrix = tuple(tuple(col[r] for col in columns) for r in range(rows))
    labels = tuple(f"m{t.index}" for t in types) + (("n",) if curves else ())
    return FixedPointSystem(I, k, labels, tuple(types), curves, matrix, tuple(rhs), common_res)


def build_mixed_order_system(I: int, k: int) -> FixedPointSystem:
    """The cleared and reduced system for g = h*delta, ord h = I, ord delta = k."""
    types = point_type_index_set(I, k)
    sys_ = _build(I, k, types, curves=False)
    assert len(sys_.rhs) == cyclotomic_polynomial(k * I).degree
    return sys_


def build_pure_order_system(I: int) -> FixedPointSystem:
    """System for a purely non-symplectic h of order I, with a curve unknown n."""
    if I not in PURE_EULER_CEILING:
        raise InvalidParameters(f"pure-order relation implemented for I in (3, 4), got {I}")
    return _build(I, 1, _point_types(I, 1), curves=True)


@dataclass(frozen=True)
class FixedPointSolution:
    counts: tuple          # ((label, value), ...)
    curves: Optional[int] = None

    @property
    def values(self) -> list:
        return [v for _, v in self.counts]

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def euler(self) -> int:
        return euler_number(self.total, self.curves or 0)


def euler_number(m: int, n: int) -> int:
    if m < 0:
        raise ValueError("isolated point count must be nonnegative")
    return m + 2 * n


def enumerate_nonnegative_solutions(system: FixedPointSystem, bound: int,
                                    free: Optional[Sequence[str]] = None) -> list:
    """All nonnegative integer count vectors with total <= bound.

    Free parameters run lexicographically; each is itself a count, so it
    lies in [0, bound].
    """
    if system.has_curves:
        raise ValueError("enumeration applies to finite fixed loci only")
    sol = system.solve(free)
    out = []
    for params in product(range(bound + 1), repeat=sol.dimension):
        if sum(params) > bound:
            continue
        x = sol.point(params)
        if any(v.denominator != 1 or v < 0 for v in x):
            continue
        ints = [int(v) for v in x]
        if sum(ints) > bound:
            continue
        out.append(FixedPointSolution(tuple(zip(system.labels, ints))))
    return out


@dataclass(frozen=True)
class PureRelation:
    I: int
    constant: Fraction
    slope: Fraction
    n_min: int
    n_max: int

    def m(self, n: int) -> Fraction:
        return self.constant + self.slope * n

    def euler(self, n: int) -> Fraction:
        return self.m(n) + 2 * n

    def __str__(self):
        s = "" if self.slope == 1 else str(self.slope)
        return f"m = {self.constant} + {s}n, n in [{self.n_min}, {self.n_max}]"


def pure_order_relation(I: int) -> PureRelation:
    """m_h as an affine function of n_h from the single-automorphism identity."""
    system = build_pure_order_system(I)
    sol = system.solve(free=["n"])
    if sol.dimension != 1:
        raise ArithmeticError(f"expected a one-parameter family, got dimension {sol.dimension}")
    (pivot, const, coeffs), = sol.relations()
    slope = coeffs.get(system.labels.index("n"), Fraction(0))
    # m >= 0 gives the lower end; the Euler ceiling gives the upper one
    n_min = -(const // slope) if slope > 0 else None
    ceiling = PURE_EULER_CEILING[I]
    n_max = (ceiling - const) // (slope + 2)
    return PureRelation(I, const, slope, int(n_min), int(n_max))


def relation_strings(system: FixedPointSystem, free: Optional[Sequence[str]] = None) -> list:
    """Human-readable pivot relations, e.g. ``m2 = -1 + m3``."""
    sol = system.solve(free)
    out = []
    for p, const, coeffs in sol.relations():
        terms = []
        if const:
            terms.append(str(const))
        for f, c in coeffs.items():
            name = system.labels[f]
            if c == 1:
                t = name
            elif c == -1:
                t = f"-{name}"
            else:
                t = f"{c}{name}"
            terms.append(t)
        rhs = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        out.append(f"{system.labels[p]} = {rhs}")
    return out
