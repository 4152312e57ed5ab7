"""Truncated q-expansions and the duality with Hecke algebras.

A Hecke algebra of dimension d acting on cusp forms pairs perfectly
with the forms themselves through a_1(T_n f) = a_n(f): the dual basis
of the algebra's vector-space basis, written out coefficient by
coefficient, is a basis of q-expansions.  Everything here works at an
explicit precision (number of coefficients a_1..a_B) and refuses to
fabricate coefficients beyond it.
"""

from __future__ import annotations

from math import gcd

from .algebra import MatrixAlgebra
from .dirichlet import DirichletCharacter
from .errors import WeightOneError
from .field import FiniteField
from .matrix import Echelon, Matrix


class MissingOperatorError(WeightOneError):
    def __init__(self, n):
        super().__init__(f"no labelled operator for T_{n} and no way to build it")
        self.n = n


class QExpansion:
    """Coefficients a_1..a_B of a cusp form over a finite field."""

    __slots__ = ("field", "coeffs", "precision", "weight", "level")

    def __init__(self, field: FiniteField, coeffs, weight=None, level=None):
        self.field = field
        self.coeffs = list(coeffs)
        self.precision = len(self.coeffs)
        self.weight = weight
        self.level = level

    def a(self, n: int) -> int:
        if not 1 <= n <= self.precision:
            raise IndexError(f"coefficient a_{n} beyond precision {self.precision}")
        return self.coeffs[n - 1]

    def __add__(self, other):
        assert self.field == other.field and self.precision == other.precision
        F = self.field
        return QExpansion(F, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
                          self.weight, self.level)

    def scale(self, c):
        F = self.field
        return QExpansion(F, [F.mul(c, a) for a in self.coeffs], self.weight, self.level)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, QExpansion)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = [f"{'' if c == 1 else str(c) + '*'}q^{n+1}"
                 for n, c in enumerate(self.coeffs[:8]) if c]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.precision + 1})"

    def describe(self) -> dict:
        return {
            "field": self.field.describe(),
            "coefficients": list(self.coeffs),
            "precision": self.precision,
            "weight": self.weight,
            "level": self.level,
        }


def frobenius_twist(f: QExpansion) -> QExpansion:
    """The p-power map on forms: a_n goes to the coefficient of q^(np).

    Output precision is p times the input precision, and only multiples
    of p carry nonzero coefficients.
    """
    p = f.field.p
    out = [0] * (f.precision * p)
    for n, c in enumerate(f.coeffs, start=1):
        out[n * p - 1] = c
    return QExpansion(f.field, out, f.weight, f.level)


def hecke_element(alg: MatrixAlgebra, n: int, weight: int, level: int,
                  character: DirichletCharacter | None) -> Matrix:
    """T_n inside the algebra, from the labelled prime operators.

    Composite indices come from multiplicativity and the prime-power
    recursion T_{l^(r+1)} = T_l T_{l^r} - l^(k-1) <l> T_{l^(r-1)}, with
    the diamond acting as the character value on a character component.
    In weight 1 the twist l^(k-1) is 1, so the recursion keeps its
    diamond term even at l = p.
    """
    F = alg.field
    if n == 1:
        return alg.unit
    out = alg.unit
    for ell, e in _factor_int(n):
        out = out * _prime_power_element(alg, ell, e, weight, level, character)
    return out


def _prime_power_element(alg, ell, e, weight, level, character):
    label = f"T_{ell}"
    if not alg.has_label(label):
        raise MissingOperatorError(ell)
    t = alg.generator(label)
    if e == 1:
        return t
    F = alg.field
    if level % ell == 0:
        out = t
        for _ in range(e - 1):
            out = out * t
        return out
    eps = character(ell) if character is not None else 1
    twist = F.mul(F.pow(F.scalar(ell), weight - 1), eps)
    prev, cur = alg.unit, t
    for _ in range(e - 1):
        nxt = t * cur - prev.scale(twist)
        prev, cur = cur, nxt
    return cur


def _factor_int(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def dual_qexpansions(alg: MatrixAlgebra, precision: int, weight: int, level: int,
                     character: DirichletCharacter | None) -> list[QExpansion]:
    """Basis of Hom(algebra, GF(p)) written as q-expansions.

    Entry i of the list is the functional dual to the i-th basis
    element; its n-th coefficient is that coordinate of T_n.  The count
    equals the algebra dimension by duality.
    """
    F = alg.prime_field
    coords = []
    for n in range(1, precision + 1):
        coords.append(alg.coords(hecke_element(alg, n, weight, level, character)))
    out = []
    for i in range(alg.dim):
        out.append(QExpansion(F, [coords[n][i] for n in range(precision)], weight, level))
    return out


def theta_kernel(qexps: list[QExpansion]):
    """Basis of the subspace with a_n = 0 whenever p does not divide n.

    Returns (combinations, expansions): each combination is a
    coefficient vector against the input list.
    """
    if not qexps:
        return [], []
    F = qexps[0].field
    p = F.p
    B = qexps[0].precision
    rows = []
    for n in range(1, B + 1):
        if n % p != 0:
            rows.append([f.a(n) for f in qexps])
    m = Matrix.from_rows(F, rows, ncols=len(qexps))
    ker = m.kernel()
    combos = [ker.row(i) for i in range(ker.nrows)]
    out = []
    for combo in combos:
        f = QExpansion(F, [0] * B, qexps[0].weight, qexps[0].level)
        for c, g in zip(combo, qexps):
            if c:
                f = f + g.scale(c)
        out.append(f)
    return combos, out


def prime_to_p_rank(qexps: list[QExpansion]) -> int:
    """Rank of the projection onto coefficients a_n with p not dividing n."""
    if not qexps:
        return 0
    F = qexps[0].field
    p = F.p
    rows = []
    for f in qexps:
        rows.append([f.a(n) for n in range(1, f.precision + 1) if n % p != 0])
    return Matrix.from_rows(F, rows, ncols=len(rows[0]) if rows else 0).rank()
