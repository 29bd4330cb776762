"""Exact arithmetic: integer polynomials, cyclotomic fields, integer matrices.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

IntMatrix = tuple  # tuple of row tuples of int


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _monomial_str(c, e: int, var: str = "x") -> str:
    mag = abs(c)
    if e == 0:
        return str(mag)
    mono = var if e == 1 else f"{var}^{e}"
    return mono if mag == 1 else f"{mag}*{mono}"


def poly_str(coeffs: Sequence, var: str = "x") -> str:
    """Render coefficients (index = degree) highest degree first."""
    terms = [(c, e) for e, c in enumerate(coeffs) if c != 0]
    if not terms:
        return "0"
    out = []
    for c, e in reversed(terms):
        m = _monomial_str(c, e, var)
        if not out:
            out.append(m if c > 0 else f"-{m}")
        else:
            out.append(f"+ {m}" if c > 0 else f"- {m}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in _strip(self.coeffs)))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPolynomial":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Quotient by a monic-up-to-sign divisor; raises if not exact."""
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        q = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] * lead
            q[k] = c
            if c:
                for j, dc in enumerate(divisor.coeffs):
                    rem[k + j] -= c * dc
        if any(rem):
            raise ValueError("polynomial division is not exact")
        return IntPolynomial(tuple(q))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return poly_str(self.coeffs)


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, from x^n - 1 = prod_{d | n} Phi_d."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    p = IntPolynomial.x_power_minus_one(n)
    for d in divisors(n)[:-1]:
        p = p.exact_div(cyclotomic_polynomial(d))
    return p


# ---------------------------------------------------------------------------
# Cyclotomic fields
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _power_residues(n: int) -> tuple:
    """Residues of x^j mod Phi_n for 0 <= j < n, as integer tuples."""
    phi = cyclotomic_polynomial(n).coeffs
    deg = len(phi) - 1
    out = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        out.append(tuple(cur))
        # multiply by x
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(out)


def cyclo_reduce(n: int, p: Sequence) -> "CycloNumber":
    """Residue of the polynomial ``p`` (index = degree) modulo Phi_n.

    Exponents are first folded modulo n, which is harmless since Phi_n
    divides x^n - 1.
    """
    table = _power_residues(n)
    deg = len(table[0])
    acc = [Fraction(0)] * deg
    for e, c in enumerate(p):
        if c == 0:
            continue
        c = _to_fraction(c)
        row = table[e % n]
        for j in range(deg):
            if row[j]:
                acc[j] += c * row[j]
    return CycloNumber(n, tuple(acc))


class CycloNumber:
    """An element of Q(zeta_n), stored as its residue modulo Phi_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence):
        deg = cyclotomic_polynomial(n).degree
        coeffs = tuple(_to_fraction(c) for c in coeffs)
        if len(coeffs) > deg:
            raise ValueError(f"residue has more than phi({n}) = {deg} coefficients")
        self.n = n
        self.coeffs = coeffs + (Fraction(0),) * (deg - len(coeffs))

    # constructors -------------------------------------------------------
    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNumber":
        """zeta_n ** k for any integer k (negative allowed)."""
        p = [0] * (k % n + 1)
        p[k % n] = 1
        return cyclo_reduce(n, p)

    @classmethod
    def from_rational(cls, n: int, value) -> "CycloNumber":
        return cls(n, (_to_fraction(value),))

    def embed(self, m: int) -> "CycloNumber":
        """Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n)."""
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        step = m // self.n
        p = [Fraction(0)] * (step * len(self.coeffs))
        for j, c in enumerate(self.coeffs):
            p[j * step] = c
        return cyclo_reduce(m, p)

    def galois(self, a: int) -> "CycloNumber":
        """The automorphism zeta -> zeta^a (a coprime to n)."""
        if gcd(a, self.n) != 1:
            raise ValueError("a must be coprime to the conductor")
        p = [Fraction(0)] * self.n
        for j, c in enumerate(self.coeffs):
            p[(j * a) % self.n] += c
        return cyclo_reduce(self.n, p)

    def conjugate(self) -> "CycloNumber":
        return self.galois(-1 % self.n if self.n > 1 else 1)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.n != self.n:
                raise ValueError(
                    f"conductor mismatch ({self.n} vs {other.n}); embed explicitly")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return cyclo_reduce(self.n, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclo_invert(other)

    def __rtruediv__(self, other):
        return cyclo_invert(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return cyclo_invert(self) ** (-k)
        result = CycloNumber.from_rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Optional[Fraction]:
        """The value as a Fraction if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def integer_value(self) -> Optional[int]:
        r = self.rational_value()
        if r is None or r.denominator != 1:
            return None
        return r.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.rational_value() == other
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CycloNumber({self.n}, {poly_str(self.coeffs, f'z{self.n}')})"

    def __str__(self):
        return poly_str(self.coeffs, f"z{self.n}")


def multiplication_matrix(z: CycloNumber) -> list:
    """Matrix of w -> z*w on the power basis (column j = z * x^j)."""
    cols = [(z * CycloNumber.zeta(z.n, j)).coeffs for j in range(len(z.coeffs))]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


def cyclo_invert(z: CycloNumber) -> CycloNumber:
    if z.is_zero():
        raise ZeroDivisionError("zero has no inverse in Q(zeta_n)")
    m = multiplication_matrix(z)
    rhs = [Fraction(1)] + [Fraction(0)] * (len(z.coeffs) - 1)
    sol = solve_linear_rational(m, rhs)
    # Q(zeta_n) is a field, so the system is square and nonsingular
    assert sol is not None and not sol.kernel
    return CycloNumber(z.n, sol.particular)


def sqrt5() -> CycloNumber:
    """sqrt(5) = 1 + 2*zeta_5 + 2*zeta_5^4 inside Q(zeta_5)."""
    return cyclo_reduce(5, [1, 2, 0, 0, 2])


# ---------------------------------------------------------------------------
# Rational linear systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineSolution:
    """{particular + sum_f t_f * kernel[f]} with kernel vectors indexed by free column."""

    particular: tuple
    kernel: tuple
    pivots: tuple
    free: tuple

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def point(self, params: Sequence) -> tuple:
        x = list(self.particular)
        for t, v in zip(params, self.kernel):
            if t:
                for i, vi in enumerate(v):
                    x[i] += t * vi
        return tuple(x)

    def relations(self) -> list:
        """Each pivot variable as (pivot, constant, {free: coefficient})."""
        out = []
        for p in self.pivots:
            coeffs = {}
            for f, v in zip(self.free, self.kernel):
                if v[p]:
                    coeffs[f] = v[p]
            out.append((p, self.particular[p], coeffs))
        return out


def solve_linear_rational(A: Sequence[Sequence], b: Sequence,
                          column_order: Optional[Sequence[int]] = None
                          ) -> Optional[AffineSolution]:
    """Exact solution set of A x = b over Q, or None when inconsistent.

    Columns are eliminated in ``column_order`` (default: natural order), so
    pivot variables are the earliest independent columns of that order.
    """
    rows = len(A)
    ncols = len(A[0]) if rows else len(column_order or ())
    order = list(column_order) if column_order is not None else list(range(ncols))
    if sorted(order) != list(range(ncols)):
        raise ValueError("column_order must be a permutation of the columns")
    M = [[_to_fraction(A[r][c]) for c in order] + [_to_fraction(b[r])] for r in range(rows)]

    pivot_cols = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    if any(M[i][ncols] != 0 for i in range(r, rows)):
        return None

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    particular = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        particular[order[c]] = M[i][ncols]
    kernel = []
    for f in free_cols:
        v = [Fraction(0)] * ncols
        v[order[f]] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            v[order[c]] = -M[i][f]
        kernel.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(kernel),
                          tuple(order[c] for c in pivot_cols),
                          tuple(order[f] for f in free_cols))


# ---------------------------------------------------------------------------
# Integer matrices
# ---------------------------------------------------------------------------

def as_int_matrix(rows) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M):
    return tuple(zip(*M))


def mat_mul(A, B):
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def determinant(M) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rational_determinant(M) -> Fraction:
    n = len(M)
    A = [[_to_fraction(v) for v in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


def rational_inverse(M) -> tuple:
    n = len(M)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        sol = solve_linear_rational(M, e)
        if sol is None or sol.kernel:
            raise ZeroDivisionError("matrix is singular")
        cols.append(sol.particular)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class SnfResult:
    """U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> tuple:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return tuple(self.D[i][i] for i in range(k))


def smith_normal_form(M) -> SnfResult:
    """Smith normal form with smallest-absolute-value pivoting."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        if not any(A[i][j] for i in range(t, m) for j in range(t, n)):
            break
    return SnfResult(as_int_matrix(A), as_int_matrix(U), as_int_matrix(V))


def hermite_row_basis(rows) -> IntMatrix:
    """A basis (row echelon, positive pivots) of the Z-span of integer rows."""
    A = [list(map(int, r)) for r in rows]
    ncols = len(A[0]) if A else 0
    basis = []
    for c in range(ncols):
        live = [r for r in A if r[c] != 0]
        rest = [r for r in A if r[c] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            new_live = [piv]
            for r in live[1:]:
                q = r[c] // piv[c]
                r = [a - q * b for a, b in zip(r, piv)]
                (new_live if r[c] else rest).append(r)
            live = new_live
        if live:
            piv = live[0]
            if piv[c] < 0:
                piv = [-a for a in piv]
            basis.append(piv)
        A = rest
    return as_int_matrix(basis)
