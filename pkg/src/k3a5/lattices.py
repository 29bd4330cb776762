"""Integral lattices, discriminant forms and 2-elementary glue.

Vectors are coordinate tuples of Fractions over the lattice basis; the
lattice itself is Z^n in these coordinates, so reduction modulo the lattice
is reduction of coordinates modulo 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm, prod
from typing import Optional, Sequence

from .exact import (as_int_matrix, determinant, hermite_row_basis, mat_mul,
                    rational_inverse, smith_normal_form, transpose)


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def mod2(x: Fraction) -> Fraction:
    return x - 2 * (x.numerator // (2 * x.denominator))


def frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Lattices and vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GramLattice:
    labels: tuple
    gram: tuple

    def __post_init__(self):
        g = as_int_matrix(self.gram)
        if len(g) != len(self.labels) or any(len(r) != len(g) for r in g):
            raise ValueError("Gram matrix shape does not match labels")
        if g != transpose(g):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def diagonal(cls, labels, entries) -> "GramLattice":
        n = len(entries)
        return cls(labels, tuple(tuple(entries[i] if i == j else 0 for j in range(n))
                                 for i in range(n)))

    @classmethod
    def hyperbolic(cls, scale: int, labels=("u1", "u2")) -> "GramLattice":
        """U(scale): two isotropic vectors pairing to ``scale``."""
        return cls(labels, ((0, scale), (scale, 0)))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def det(self) -> int:
        return determinant(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def __add__(self, other: "GramLattice") -> "GramLattice":
        """Orthogonal direct sum."""
        n, m = self.rank, other.rank
        g = [list(r) + [0] * m for r in self.gram] + [[0] * n + list(r) for r in other.gram]
        return GramLattice(self.labels + other.labels, g)

    def dot(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((Fraction(x[i]) * self.gram[i][j] * y[j]
                    for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
                   Fraction(0))

    def norm(self, x: Sequence) -> Fraction:
        return self.dot(x, x)

    def pairings(self, x: Sequence) -> tuple:
        """(x . e_j)_j: the coordinates of x in the dual basis e_j*."""
        return tuple(sum((Fraction(x[i]) * self.gram[i][j] for i in range(self.rank)),
                         Fraction(0)) for j in range(self.rank))

    def in_dual(self, x: Sequence) -> bool:
        return all(p.denominator == 1 for p in self.pairings(x))

    def dual_basis_vector(self, j: int) -> "DualVector":
        """e_j* with e_j* . e_i = delta_ij."""
        inv = rational_inverse(self.gram)
        return DualVector(tuple(inv[i][j] for i in range(self.rank)))


@dataclass(frozen=True)
class DualVector:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords) -> "DualVector":
        return cls(coords)

    def __add__(self, other):
        return DualVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return DualVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DualVector(tuple(-a for a in self.coords))

    def __rmul__(self, k):
        return DualVector(tuple(k * a for a in self.coords))

    __mul__ = __rmul__

    def reduced(self) -> "DualVector":
        """Canonical coset representative modulo the lattice."""
        return DualVector(tuple(mod1(a) for a in self.coords))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def render(self, labels: Sequence[str]) -> str:
        terms = []
        for c, lbl in zip(self.coords, labels):
            if c == 0:
                continue
            mag = abs(c)
            t = lbl if mag == 1 else f"{frac_str(mag)}{lbl}"
            terms.append(("- " if c < 0 else "+ ") + t)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def render_dual(L: GramLattice, x: DualVector) -> str:
    """x written in the dual basis, e.g. ``t2* + u1* + 2u2*``."""
    return DualVector(L.pairings(x.coords)).render([f"{lbl}*" for lbl in L.labels])


# ---------------------------------------------------------------------------
# Discriminant forms
# ---------------------------------------------------------------------------

def normalize_form_gram(gram) -> tuple:
    """Diagonal modulo 2, off-diagonal modulo 1, representatives in [0, 2) / [0, 1)."""
    n = len(gram)
    return tuple(tuple(mod2(Fraction(gram[i][j])) if i == j else mod1(Fraction(gram[i][j]))
                       for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class TorsionForm:
    """Finite quadratic form on a group with the given generators.

    ``orders[i]`` is the order of generator i; when the generators are
    independent the group is the direct sum of the cyclic groups Z/orders[i].
    """

    orders: tuple
    gram: tuple
    generators: Optional[tuple] = None
    labels: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "gram", normalize_form_gram(self.gram))
        object.__setattr__(self, "orders", tuple(self.orders))

    @property
    def order(self) -> int:
        return prod(self.orders)

    def q(self, coeffs: Sequence[int]) -> Fraction:
        n = len(self.orders)
        total = Fraction(0)
        for i in range(n):
            total += coeffs[i] * coeffs[i] * self.gram[i][i]
            for j in range(i + 1, n):
                total += 2 * coeffs[i] * coeffs[j] * self.gram[i][j]
        return mod2(total)

    def b(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        n = len(self.orders)
        return mod1(sum((x[i] * y[j] * self.gram[i][j] for i in range(n) for j in range(n)),
                        Fraction(0)))

    def elements(self):
        return product(*(range(o) for o in self.orders))

    def gram_str(self) -> str:
        rows = ["(" + ", ".join(frac_str(v) for v in r) + ")" for r in self.gram]
        return "(" + "; ".join(r[1:-1] for r in rows) + ")"


class DegenerateLattice(ValueError):
    pass


def _discriminant_data(gram):
    """SNF data: (invariant factors > 1, generator coordinate vectors)."""
    snf = smith_normal_form(gram)
    factors = snf.invariant_factors
    if 0 in factors or len(factors) < len(gram):
        raise DegenerateLattice("Gram matrix is singular")
    gens, orders = [], []
    for i, d in enumerate(factors):
        if d > 1:
            gens.append(DualVector(tuple(Fraction(snf.V[r][i], d) for r in range(len(gram)))))
            orders.append(d)
    return snf, tuple(orders), tuple(gens)


def _form_gram(L_gram, gens) -> tuple:
    n = len(L_gram)

    def dot(x, y):
        return sum((x.coords[i] * L_gram[i][j] * y.coords[j]
                    for i in range(n) for j in range(n)), Fraction(0))
    return tuple(tuple(dot(a, b) for b in gens) for a in gens)


def discriminant_group(L: GramLattice) -> TorsionForm:
    """A_L = L^v / L with its discriminant quadratic form."""
    _, orders, gens = _discriminant_data(L.gram)
    return TorsionForm(orders, _form_gram(L.gram, gens), gens, L.labels)


def sublattice_index(L_sub: GramLattice, L_sup: GramLattice, embedding) -> int:
    """Index of L_sub in L_sup; ``embedding`` rows express L_sub's basis in L_sup."""
    E = as_int_matrix(embedding)
    if len(E) != L_sub.rank or any(len(r) != L_sup.rank for r in E):
        raise ValueError("rank mismatch between sublattice, superlattice and embedding")
    if L_sub.rank != L_sup.rank:
        raise ValueError("finite index needs equal ranks")
    if mat_mul(mat_mul(E, L_sup.gram), transpose(E)) != L_sub.gram:
        raise ValueError("embedding does not preserve the Gram matrix")
    index = abs(determinant(E))
    if index == 0:
        raise ValueError("embedding is degenerate")
    assert abs(L_sub.det) == index * index * abs(L_sup.det)
    return index


# ---------------------------------------------------------------------------
# Half-integral glue
# ---------------------------------------------------------------------------

def _half_grid(rank: int, denominator: int):
    for c in product(range(denominator), repeat=rank):
        if any(c):
            yield DualVector(tuple(Fraction(ci, denominator) for ci in c))


def _block_nonzero(v: DualVector, split: Optional[int]) -> bool:
    if split is None:
        return True
    return any(v.coords[:split]) and any(v.coords[split:])


def classify_candidates(L: GramLattice, denominator: int = 2, split: Optional[int] = None):
    """Split the nonzero (1/den)-grid into accepted vectors and (vector, reason) rejects."""
    accepted, rejected = [], []
    for v in _half_grid(L.rank, denominator):
        if not L.in_dual(v.coords):
            rejected.append((v, "not in dual"))
        elif not _block_nonzero(v, split):
            rejected.append((v, "zero component"))
        elif L.norm(v.coords).denominator != 1 or L.norm(v.coords) % 2:
            rejected.append((v, "odd norm"))
        else:
            accepted.append(v)
    return accepted, rejected


def even_overlattice_candidates(L: GramLattice, denominator: int = 2,
                                split: Optional[int] = None) -> list:
    """Coset representatives theta in (1/den)L, theta not in L, that may glue evenly.

    theta must pair integrally with L and have theta^2 in 2Z.  With ``split``
    (rank of the first summand of L = S + T) both components must be nonzero,
    which is what keeps S and T primitive in the overlattice.
    """
    if not L.is_even:
        raise ValueError("lattice must be even")
    return classify_candidates(L, denominator, split)[0]


@dataclass(frozen=True)
class GlueGroup:
    generators: tuple
    elements: tuple        # all nonzero elements, reduced mod the lattice, sorted

    @property
    def order(self) -> int:
        return len(self.elements) + 1


def _span2(gens) -> tuple:
    """Nonzero elements of the F2-span of 2-torsion cosets."""
    out = set()
    for bits in product((0, 1), repeat=len(gens)):
        if any(bits):
            v = DualVector((0,) * len(gens[0].coords))
            for b, g in zip(bits, gens):
                if b:
                    v = v + g
            v = v.reduced()
            if any(v.coords):
                out.add(v)
    return tuple(sorted(out, key=lambda v: v.coords))


@dataclass(frozen=True)
class GlueObstruction:
    first: DualVector
    second: DualVector
    reason: str
    value: Optional[Fraction] = None


def _glue_problem(L: GramLattice, split: int, elements) -> Optional[str]:
    for v in elements:
        if not L.in_dual(v.coords):
            return "not in dual"
        if not any(v.coords[:split]):
            return "projection to A_S not injective"
        if not any(v.coords[split:]):
            return "projection to A_T not injective"
        n = L.norm(v.coords)
        if n.denominator != 1 or n % 2:
            return "odd norm"
    for v, w in combinations(elements, 2):
        if L.dot(v.coords, w.coords).denominator != 1:
            return "non-integral pairing"
    return None


def glue_feasibility(S: GramLattice, T: GramLattice, required_d: int) -> list:
    """All 2-elementary glue groups of order ``required_d`` for S + T.

    Only subgroups generated by at most two elements of order 2 are searched,
    which covers orders 1, 2 and 4.
    """
    if required_d not in (1, 2, 4):
        raise ValueError("required_d must be 1, 2 or 4")
    L = S + T
    if required_d == 1:
        return [GlueGroup((), ())]
    torsion = [v for v in _half_grid(L.rank, 2) if L.in_dual(v.coords)]
    gen_sets = ([(v,) for v in torsion] if required_d == 2
                else list(combinations(torsion, 2)))
    seen, out = set(), []
    for gens in gen_sets:
        elems = _span2(gens)
        if len(elems) + 1 != required_d or elems in seen:
            continue
        seen.add(elems)
        if _glue_problem(L, S.rank, elems) is None:
            out.append(GlueGroup(tuple(gens), elems))
    return out


def glue_obstructions(S: GramLattice, T: GramLattice) -> list:
    """Why each pair of individually admissible glue vectors cannot coexist."""
    L = S + T
    cands = even_overlattice_candidates(L, 2, split=S.rank)
    out = []
    for a, b in combinations(cands, 2):
        p = L.dot(a.coords, b.coords)
        if p.denominator != 1:
            out.append(GlueObstruction(a, b, "non-integral pairing", p))
            continue
        diff = (a - b).reduced()
        problem = _glue_problem(L, S.rank, [diff])
        if problem:
            out.append(GlueObstruction(a, b, f"difference: {problem}", None))
    return out


# ---------------------------------------------------------------------------
# Overlattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Overlattice:
    ambient: GramLattice
    basis: tuple           # rows over Fraction, in ambient coordinates
    gram: tuple            # integer Gram of ``basis``

    @property
    def det(self) -> int:
        return determinant(self.gram)

    def to_local(self, x: DualVector) -> tuple:
        inv = rational_inverse(self.basis)
        return tuple(sum((x.coords[i] * inv[i][j] for i in range(len(inv))), Fraction(0))
                     for j in range(len(inv)))

    def in_dual(self, x: DualVector) -> bool:
        return all(self.ambient.dot(row, x.coords).denominator == 1 for row in self.basis)


def build_overlattice(L: GramLattice, glue: Sequence[DualVector]) -> Overlattice:
    den = lcm(*(c.denominator for v in glue for c in v.coords)) if glue else 1
    rows = [[den * int(i == j) for j in range(L.rank)] for i in range(L.rank)]
    rows += [[int(den * c) for c in v.coords] for v in glue]
    basis = tuple(tuple(Fraction(c, den) for c in r) for r in hermite_row_basis(rows))
    gram = tuple(tuple(L.dot(a, b) for b in basis) for a in basis)
    if any(g.denominator != 1 for r in gram for g in r):
        raise ValueError("glue does not give an integral overlattice")
    return Overlattice(L, basis, as_int_matrix(gram))


class InvalidGlue(ValueError):
    pass


def overlattice_form(S: GramLattice, T: GramLattice, glue: GlueGroup) -> TorsionForm:
    """Discriminant form of S + T + glue; generators in ambient coordinates."""
    L = S + T
    if glue.elements and _glue_problem(L, S.rank, glue.elements):
        raise InvalidGlue(_glue_problem(L, S.rank, glue.elements))
    over = build_overlattice(L, glue.generators)
    _, orders, local_gens = _discriminant_data(over.gram)
    gens = []
    for g in local_gens:
        amb = [sum((g.coords[r] * over.basis[r][i] for r in range(len(over.basis))), Fraction(0))
               for i in range(L.rank)]
        gens.append(DualVector(tuple(amb)))
    return TorsionForm(orders, _form_gram(L.gram, gens), tuple(gens), L.labels)


def subgroup_order(invariants: Sequence[int], vectors: Sequence[Sequence[int]]) -> int:
    """Order of the subgroup of (+) Z/invariants generated by ``vectors``."""
    n = len(invariants)
    rows = [list(v) for v in vectors] + [[d if i == j else 0 for j in range(n)]
                                         for i, d in enumerate(invariants)]
    quotient = prod(f for f in smith_normal_form(rows).invariant_factors)
    return prod(invariants) // quotient


def form_on_generators(S: GramLattice, T: GramLattice, glue: GlueGroup,
                       generators: Sequence[DualVector]) -> tuple:
    """(TorsionForm, generated order, full order) for proposed dual generators.

    Each generator must lie in the dual of the overlattice; the form records
    their individual orders and Gram matrix.
    """
    L = S + T
    over = build_overlattice(L, glue.generators)
    for g in generators:
        if not over.in_dual(g):
            raise ValueError(f"{g.render(L.labels)} is not in the dual overlattice")
    snf, invariants, _ = _discriminant_data(over.gram)
    factors = snf.invariant_factors
    Vinv = rational_inverse(snf.V)
    images, orders = [], []
    for g in generators:
        y = over.to_local(g)
        z = [sum((Vinv[i][j] * y[j] for j in range(len(y))), Fraction(0)) for i in range(len(y))]
        img = []
        for zi, d in zip(z, factors):
            if d > 1:
                v = zi * d
                assert v.denominator == 1
                img.append(int(v) % d)
        images.append(img)
        orders.append(subgroup_order(invariants, [img]))
    generated = subgroup_order(invariants, images)
    form = TorsionForm(tuple(orders), _form_gram(L.gram, generators), tuple(generators), L.labels)
    return form, generated, prod(invariants)


def order4_rotation_fixed_part(m: int) -> list:
    """Elements (a, b) of A_T, T = diag(2m, 2m), fixed by t1 -> t2, t2 -> -t1.

    (a, b) stands for (a t1 + b t2)/2m; the rotation acts on dual vectors
    through its matrix, and fixed means fixed modulo T.
    """
    if m < 1:
        raise ValueError("m must be positive")
    T = GramLattice.diagonal(("t1", "t2"), (2 * m, 2 * m))
    rot = ((0, 1), (-1, 0))            # rows: images of t1, t2
    assert mat_mul(mat_mul(rot, T.gram), transpose(rot)) == T.gram
    out = []
    for a, b in product(range(2 * m), repeat=2):
        x = (Fraction(a, 2 * m), Fraction(b, 2 * m))
        gx = tuple(sum((x[i] * rot[i][j] for i in range(2)), Fraction(0)) for j in range(2))
        if DualVector(tuple(u - v for u, v in zip(gx, x))).is_integral():
            out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def _enc_vec(v: DualVector) -> list:
    return [[c.numerator, c.denominator] for c in v.coords]


def _dec_vec(raw) -> DualVector:
    return DualVector(tuple(Fraction(n, d) for n, d in raw))


def dumps_fixture(lattices: dict, vectors: Optional[dict] = None) -> str:
    """Structured text: integer Gram matrices plus rational vectors as [num, den]."""
    data = {
        "lattices": {k: {"labels": list(L.labels), "gram": [list(r) for r in L.gram]}
                     for k, L in lattices.items()},
        "vectors": {k: _enc_vec(v) for k, v in (vectors or {}).items()},
    }
    return json.dumps(data, indent=2, sort_keys=True)


def loads_fixture(text: str) -> tuple:
    data = json.loads(text)
    lats = {k: GramLattice(tuple(v["labels"]), v["gram"]) for k, v in data["lattices"].items()}
    vecs = {k: _dec_vec(v) for k, v in data.get("vectors", {}).items()}
    return lats, vecs
