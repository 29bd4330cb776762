"""Determinant cases and the final discriminant-form obstruction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional

import numpy as np

from .lattices import TorsionForm, mod2

#: |det L^{A5}| candidates, quoted from an external classification.
CITED_DETERMINANTS = (30 ** 2, 3 * 10 ** 2, 20 ** 2, 3 * 20 ** 2, 3 * 40 ** 2)
D1_POOL = (1, 2)
D_POOL = (1, 2, 4)

# |det L0| * |det T_X| / m^2 = 12^2 * 4
DET_COEFFICIENT = 12 ** 2 * 4


@dataclass(frozen=True, order=True)
class DetCase:
    m: int
    d1: int
    d: int

    def __str__(self):
        return f"({self.m}, {self.d1}, {self.d})"


def determinant_case_enumeration(det_pool: Iterable[int] = CITED_DETERMINANTS,
                                 d1_pool: Iterable[int] = D1_POOL,
                                 d_pool: Iterable[int] = D_POOL,
                                 m_max: int = 30) -> set:
    """(m, d1, d) with 576 m^2 = d1^2 d^2 |det L^{A5}| for some pooled det."""
    out = set()
    for m in range(1, m_max + 1):
        for det in det_pool:
            for d1 in d1_pool:
                for d in d_pool:
                    if DET_COEFFICIENT * m * m == d1 * d1 * d * d * det:
                        out.add(DetCase(m, d1, d))
    return out


def reference_form() -> TorsionForm:
    """The (Z/30)^2 form on eps1 = e1*, eps2 = e2* + e3* + e4* (cited data)."""
    gram = ((Fraction(-23, 30), Fraction(-1, 5)), (Fraction(-1, 5), Fraction(-35, 30)))
    return TorsionForm((30, 30), gram, None, ("eps1", "eps2"))


def overlattice_generator_form() -> TorsionForm:
    """The (Z/30)^2 form on delta1, delta2; lattices.form_on_generators recomputes it."""
    gram = ((Fraction(23, 30), Fraction(1, 3)), (Fraction(1, 3), Fraction(1, 10)))
    return TorsionForm((30, 30), gram, None, ("delta1", "delta2"))


# ---------------------------------------------------------------------------
# Congruence route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceWitness:
    a: int
    b: int
    value: int


def quadratic_congruence_solutions(coeffs, target: int, modulus: int) -> list:
    """(a, b) mod ``modulus`` with A a^2 + B b^2 + C ab == target."""
    A, B, C = coeffs
    t = target % modulus
    return [(a, b) for a in range(modulus) for b in range(modulus)
            if (A * a * a + B * b * b + C * a * b) % modulus == t]


def congruence_solution_count(modulus: int = 60, coeffs=(23, 3, 20), target: int = -23):
    """Number of solutions and the first one (or None)."""
    sols = quadratic_congruence_solutions(coeffs, target, modulus)
    witness = None
    if sols:
        a, b = sols[0]
        A, B, C = coeffs
        witness = CongruenceWitness(a, b, (A * a * a + B * b * b + C * a * b) % modulus)
    return len(sols), witness


def derive_congruence(source: TorsionForm, target: TorsionForm):
    """The condition q_target(a d1 + b d2) = q_source(e1) cleared of denominators.

    Returns ((A, B, C), rhs, modulus) with A a^2 + B b^2 + C ab == rhs mod modulus.
    """
    N = lcm(*(v.denominator for row in target.gram for v in row),
            source.gram[0][0].denominator)
    g = target.gram
    A, B, C = N * g[0][0], N * g[1][1], 2 * N * g[0][1]
    rhs = N * mod2(source.gram[0][0])
    assert all(v.denominator == 1 for v in (A, B, C, rhs))
    return (int(A), int(B), int(C)), int(rhs), 2 * N


# ---------------------------------------------------------------------------
# Exhaustive isometry search
# ---------------------------------------------------------------------------

class GroupMismatch(ValueError):
    pass


def _scaled(form: TorsionForm, N: int) -> np.ndarray:
    g = np.array([[int(v * N) for v in row] for row in form.gram], dtype=np.int64)
    return g


def exhaustive_isometry_search(source: TorsionForm, target: TorsionForm) -> list:
    """Every bijective hom phi: source -> target preserving q (mod 2) and b (mod 1).

    phi is the matrix ((a, c), (b, d)) mod n: phi(e1) = a f1 + b f2 and
    phi(e2) = c f1 + d f2.  All n^4 matrices are tested.
    """
    if len(source.orders) != 2 or source.orders != target.orders or \
            source.orders[0] != source.orders[1]:
        raise GroupMismatch(f"need (Z/n)^2 on both sides, got {source.orders}, {target.orders}")
    n = source.orders[0]
    N = lcm(*(v.denominator for f in (source, target) for row in f.gram for v in row))
    S, T = _scaled(source, N), _scaled(target, N)

    r = np.arange(n, dtype=np.int64)
    a, b = (x.ravel() for x in np.meshgrid(r, r, indexing="ij"))   # column vectors (a, b)
    # N * q_target(a f1 + b f2) mod 2N for every vector
    qv = (a * a * T[0, 0] + 2 * a * b * T[0, 1] + b * b * T[1, 1]) % (2 * N)
    # N * b_target((a, b), (c, d)) mod N for every pair
    bil = (np.outer(a, a) * T[0, 0] + (np.outer(a, b) + np.outer(b, a)) * T[0, 1]
           + np.outer(b, b) * T[1, 1]) % N
    det = (np.outer(a, b) - np.outer(b, a)) % n
    units = np.array([gcd(int(k), n) == 1 for k in range(n)])

    ok = ((qv[:, None] == S[0, 0] % (2 * N))
          & (qv[None, :] == S[1, 1] % (2 * N))
          & (bil == S[0, 1] % N)
          & units[det])
    i, j = np.nonzero(ok)
    mats = [((int(a[x]), int(a[y])), (int(b[x]), int(b[y]))) for x, y in zip(i, j)]
    return sorted(mats)


def compose_matrices(m1, m2, n: int):
    (a, c), (b, d) = m1
    (e, g), (f, h) = m2
    return (((a * e + c * f) % n, (a * g + c * h) % n),
            ((b * e + d * f) % n, (b * g + d * h) % n))


def is_group(mats: list, n: int) -> bool:
    """Closure, identity and inverses for a finite set of matrices mod n."""
    s = set(mats)
    ident = ((1, 0), (0, 1))
    if ident not in s:
        return False
    for x in s:
        if not any(compose_matrices(x, y, n) == ident for y in s):
            return False
        for y in s:
            if compose_matrices(x, y, n) not in s:
                return False
    return True


@dataclass(frozen=True)
class Verdict:
    case: DetCase
    isometry_count: int
    congruence_count: int
    verdict: str

    def as_dict(self) -> dict:
        return {"case": str(self.case), "isometry_count": self.isometry_count,
                "congruence_count": self.congruence_count, "verdict": self.verdict}


def obstruction_verdict(case: DetCase = DetCase(5, 2, 2),
                        glue_form: Optional[TorsionForm] = None) -> Verdict:
    """Both routes for the surviving determinant case; they must agree."""
    source = reference_form()
    target = glue_form or overlattice_generator_form()
    isos = exhaustive_isometry_search(source, target)
    coeffs, rhs, modulus = derive_congruence(source, target)
    count, _ = congruence_solution_count(modulus, coeffs, rhs)
    if isos and not count:
        # the first column of any isometry solves the congruence
        verdict = "inconsistent"
    elif isos:
        verdict = "not excluded"
    elif count:
        verdict = "excluded (isometry search only)"
    else:
        verdict = "excluded"
    return Verdict(case, len(isos), count, verdict)


def condition_profile(source: TorsionForm, target: TorsionForm) -> dict:
    """How many images satisfy each isometry condition on its own.

    Keys: ``q1`` vectors v with q(v) = q(e1); ``q2`` likewise for e2; ``b12``
    pairs (v, w) with b(v, w) = b(e1, e2), bijectivity ignored.
    """
    n = target.orders[0]
    out = {"q1": 0, "q2": 0, "b12": 0}
    vecs = [(a, b) for a in range(n) for b in range(n)]
    qs = {v: target.q(v) for v in vecs}
    out["q1"] = sum(1 for v in vecs if qs[v] == source.gram[0][0])
    out["q2"] = sum(1 for v in vecs if qs[v] == source.gram[1][1])
    N = lcm(*(v.denominator for f in (source, target) for row in f.gram for v in row))
    T = _scaled(target, N)
    r = np.arange(n, dtype=np.int64)
    a, b = (x.ravel() for x in np.meshgrid(r, r, indexing="ij"))
    bil = (np.outer(a, a) * T[0, 0] + (np.outer(a, b) + np.outer(b, a)) * T[0, 1]
           + np.outer(b, b) * T[1, 1]) % N
    out["b12"] = int(np.count_nonzero(bil == int(source.gram[0][1] * N) % N))
    return out
