"""Euler numbers of fixed loci for G = A5 : mu4, case by case.

The order-4 generator g either stabilizes or switches each of the pairs
(chi4, chi4') and (chi5, chi5') in S_X (x) C.  On stable pairs it acts by
4th roots of unity (d-scalars on chi4, e-scalars on chi5); on switched pairs
only the products d1*d5, e1*e6 in {+-1} enter.  Topological Lefschetz turns
these scalars into chi_top(X^g), chi_top(X^{g tau}), chi_top(X^{g^2 tau}) and
chi_top(X^{g^2}).  Roots of unity are stored as exponents of zeta_4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .exact import CycloNumber, cyclo_reduce

#: Admissible values of Tr(g* | chi1 + chi1'): g = id on chi1, +-id on chi1'.
TR1_VALUES = (0, 2)

INVOLUTION_EULER_CEILING = 18
PURE_ORDER4_N_RANGE = (-2, 4)
MIXED_ORDER3_COUNTS = (2, 4, 6)   # |X^{g delta}| for delta symplectic of order 3


@dataclass(frozen=True)
class CaseConfig:
    stab4: bool
    stab5: bool

    def __str__(self):
        a = "stable" if self.stab4 else "switch"
        b = "stable" if self.stab5 else "switch"
        return f"chi4 {a} / chi5 {b}"


ALL_CONFIGS = tuple(CaseConfig(a, b) for a in (True, False) for b in (True, False))


@dataclass(frozen=True)
class ScalarAssignment:
    """Scalar data; unit roots as zeta_4 exponents, products as +-1.

    Stable chi4: d1, d1p (exponents), s3, s3p (signs with d3 = s3*d1).
    Stable chi5: e1, e1p (exponents).
    Switched chi4: d1d5 in {1, -1}.  Switched chi5: e1e6 in {1, -1}.
    """

    tr1: int
    d1: Optional[int] = None
    d1p: Optional[int] = None
    s3: Optional[int] = None
    s3p: Optional[int] = None
    e1: Optional[int] = None
    e1p: Optional[int] = None
    d1d5: Optional[int] = None
    e1e6: Optional[int] = None

    def matches(self, config: CaseConfig) -> bool:
        stable4 = None not in (self.d1, self.d1p, self.s3, self.s3p) and self.d1d5 is None
        switch4 = self.d1d5 is not None and (self.d1, self.d1p, self.s3, self.s3p) == (None,) * 4
        stable5 = None not in (self.e1, self.e1p) and self.e1e6 is None
        switch5 = self.e1e6 is not None and (self.e1, self.e1p) == (None, None)
        return ((stable4 if config.stab4 else switch4)
                and (stable5 if config.stab5 else switch5))

    @property
    def d3(self) -> int:
        return (self.d1 + (0 if self.s3 == 1 else 2)) % 4

    @property
    def d3p(self) -> int:
        return (self.d1p + (0 if self.s3p == 1 else 2)) % 4


@dataclass(frozen=True)
class EulerTuple:
    n_g: int
    m_g: int
    chi_g: int
    chi_gtau: int
    chi_g2tau: int
    chi_g2: int

    def __str__(self):
        return (f"({self.n_g}, {self.m_g}; {self.chi_g}, {self.chi_gtau}, "
                f"{self.chi_g2tau}, {self.chi_g2})")


@dataclass(frozen=True)
class TraceValues:
    """The four Euler numbers as elements of Q(zeta_4); ``valid`` iff all integers."""

    chi_g: CycloNumber
    chi_gtau: CycloNumber
    chi_g2tau: CycloNumber
    chi_g2: CycloNumber

    @property
    def integers(self) -> Optional[tuple]:
        vals = tuple(v.integer_value() for v in
                     (self.chi_g, self.chi_gtau, self.chi_g2tau, self.chi_g2))
        return None if None in vals else vals

    @property
    def valid(self) -> bool:
        return self.integers is not None

    def to_tuple(self) -> Optional[EulerTuple]:
        vals = self.integers
        if vals is None or vals[0] % 4:
            return None
        chi_g, chi_gtau, chi_g2tau, chi_g2 = vals
        n_g = chi_g // 4 - 1
        return EulerTuple(n_g, 4 + 2 * n_g, chi_g, chi_gtau, chi_g2tau, chi_g2)


def _z4(terms: dict) -> CycloNumber:
    """sum_e c_e * zeta_4^e from {exponent: coefficient}."""
    p = [0, 0, 0, 0]
    for e, c in terms.items():
        p[e % 4] += c
    return cyclo_reduce(4, p)


def _acc(*pairs) -> dict:
    out = {}
    for c, e in pairs:
        out[e % 4] = out.get(e % 4, 0) + c
    return out


class ShapeMismatch(ValueError):
    pass


def evaluate_traces(config: CaseConfig, a: ScalarAssignment) -> TraceValues:
    if not a.matches(config):
        raise ShapeMismatch(f"assignment {a} does not fit {config}")
    base = 2 + a.tr1
    if config.stab4 and config.stab5:
        chi_g = _z4(_acc((base, 0), (1, a.d1), (1, a.d1p), (1, a.d3), (1, a.d3p),
                         (1, a.e1), (1, a.e1p)))
        chi_gtau = _z4(_acc((base, 0), (1, a.d1), (1, a.d1p), (-2, a.d3), (-2, a.d3p),
                            (1, a.e1), (1, a.e1p)))
        chi_g2 = _z4(_acc((2, 0), (4, 2 * a.d1), (4, 2 * a.d1p), (5, 2 * a.e1), (5, 2 * a.e1p)))
        chi_g2tau = _z4(_acc((2, 0), (1, 2 * a.d1), (1, 2 * a.d1p),
                             (-1, 2 * a.e1), (-1, 2 * a.e1p)))
    elif not config.stab4 and config.stab5:
        chi_g = _z4(_acc((base, 0), (1, a.e1), (1, a.e1p)))
        chi_gtau = chi_g
        chi_g2 = _z4(_acc((2, 0), (8 * a.d1d5, 0), (5, 2 * a.e1), (5, 2 * a.e1p)))
        chi_g2tau = _z4(_acc((2, 0), (2 * a.d1d5, 0), (-1, 2 * a.e1), (-1, 2 * a.e1p)))
    elif config.stab4 and not config.stab5:
        chi_g = _z4(_acc((base, 0), (1, a.d1), (1, a.d1p), (1, a.d3), (1, a.d3p)))
        chi_gtau = _z4(_acc((base, 0), (1, a.d1), (1, a.d1p), (-2, a.d3), (-2, a.d3p)))
        chi_g2 = _z4(_acc((2, 0), (4, 2 * a.d1), (4, 2 * a.d1p), (10 * a.e1e6, 0)))
        chi_g2tau = _z4(_acc((2, 0), (1, 2 * a.d1), (1, 2 * a.d1p), (-2 * a.e1e6, 0)))
    else:
        chi_g = _z4({0: base})
        chi_gtau = chi_g
        chi_g2 = _z4({0: 2 + 8 * a.d1d5 + 10 * a.e1e6})
        chi_g2tau = _z4({0: 2 + 2 * a.d1d5 - 2 * a.e1e6})
    return TraceValues(chi_g, chi_gtau, chi_g2tau, chi_g2)


def assignment_grid(config: CaseConfig) -> Iterable[ScalarAssignment]:
    units, signs = range(4), (1, -1)
    fours = (list(product(units, units, signs, signs)) if config.stab4
             else [(d,) for d in signs])
    fives = list(product(units, units)) if config.stab5 else [(e,) for e in signs]
    names4 = ("d1", "d1p", "s3", "s3p") if config.stab4 else ("d1d5",)
    names5 = ("e1", "e1p") if config.stab5 else ("e1e6",)
    for tr1 in TR1_VALUES:
        for d in fours:
            for e in fives:
                yield ScalarAssignment(tr1=tr1, **dict(zip(names4, d)), **dict(zip(names5, e)))


def admissible(t: EulerTuple) -> bool:
    """The constraints every fixed-locus tuple must satisfy."""
    lo, hi = PURE_ORDER4_N_RANGE
    return (lo <= t.n_g <= hi
            and t.m_g >= 0
            and t.chi_gtau in MIXED_ORDER3_COUNTS
            and t.chi_g2tau in MIXED_ORDER3_COUNTS
            and t.chi_g2tau >= t.chi_gtau
            and t.chi_g2 <= INVOLUTION_EULER_CEILING)


def surviving_assignments(config: CaseConfig) -> list:
    """(assignment, tuple) pairs passing every filter, in grid order."""
    out = []
    for a in assignment_grid(config):
        t = evaluate_traces(config, a).to_tuple()
        if t is not None and admissible(t):
            out.append((a, t))
    return out


def admissible_tuples(config: CaseConfig) -> set:
    return {t for _, t in surviving_assignments(config)}


def all_admissible_tuples() -> set:
    out = set()
    for config in ALL_CONFIGS:
        out |= admissible_tuples(config)
    return out


def conjugation_symmetric(exponents) -> bool:
    """Whether a multiset of zeta_4 powers is closed under complex conjugation."""
    exps = sorted(e % 4 for e in exponents)
    return exps == sorted((-e) % 4 for e in exps)


def fixed_locus_genus_candidates(chi_g2: int, s_max: int, allowed_s) -> set:
    """(genus, s) with X^{g^2} = C + s rational curves, genus(C) >= 2.

    Euler number (2 - 2g) + 2s = chi_g2 and 1 <= s <= s_max - 1.
    """
    out = set()
    for s in range(1, s_max):
        if s not in allowed_s:
            continue
        twice_genus = 2 + 2 * s - chi_g2
        if twice_genus % 2 == 0 and twice_genus // 2 >= 2:
            out.add((twice_genus // 2, s))
    return out


def self_intersection_from_genus(genus: int) -> int:
    """C^2 = 2g - 2 for a smooth curve on a K3 surface (adjunction)."""
    return 2 * genus - 2
