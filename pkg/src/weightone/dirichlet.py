"""Dirichlet characters with values in a finite field.

The unit group (Z/N)^x is presented by canonical generators (one per
odd prime power factor, the usual pair for powers of two); a character
is pinned by its values on those generators.  Values live in GF(p^m),
so every character here automatically has order coprime to p - the
unit group of a characteristic-p field has no p-torsion - which is
exactly the semisimplicity condition the symbol spaces need.
"""

from __future__ import annotations

from math import gcd

from .errors import ConfigError
from .field import FiniteField


class CharacterOrderError(ConfigError):
    """Requested character order shares a factor with the characteristic."""


def _factorize(n: int) -> list[tuple[int, int]]:
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


def _primitive_root(q: int, e: int) -> int:
    """Primitive root modulo q^e for an odd prime q."""
    m = q**e
    phi = (q - 1) * q ** (e - 1)
    fac = [f for f, _ in _factorize(phi)]
    for g in range(2, m):
        if gcd(g, m) != 1:
            continue
        if all(pow(g, phi // f, m) != 1 for f in fac):
            return g
    raise AssertionError("no primitive root found")  # unreachable for odd q


def _crt_lift(residue: int, modulus: int, n: int) -> int:
    """x mod n with x = residue (mod modulus) and x = 1 (mod n/modulus)."""
    other = n // modulus
    if other == 1:
        return residue % n
    inv = pow(modulus, -1, other)
    return (residue + modulus * ((1 - residue) * inv % other)) % n


def unit_group(n: int) -> list[tuple[int, int]]:
    """Canonical generators of (Z/N)^x as (generator, order) pairs."""
    if n <= 2:
        return []
    gens = []
    for q, e in _factorize(n):
        m = q**e
        if q == 2:
            if e == 2:
                gens.append((_crt_lift(3, 4, n), 2))
            elif e >= 3:
                gens.append((_crt_lift(m - 1, m, n), 2))
                gens.append((_crt_lift(5, m, n), 2 ** (e - 2)))
        else:
            g = _primitive_root(q, e)
            gens.append((_crt_lift(g, m, n), (q - 1) * q ** (e - 1)))
    return gens


class DirichletCharacter:
    """A character of (Z/N)^x with values in a finite field.

    `values_on_gens` lists one field element per canonical generator;
    the full value table is materialized once (N is always desk-scale
    here).  Non-units map to 0.
    """

    def __init__(self, modulus: int, field: FiniteField, values_on_gens):
        self.modulus = modulus
        self.field = field
        self.gens = unit_group(modulus)
        self.values_on_gens = list(values_on_gens)
        if len(self.values_on_gens) != len(self.gens):
            raise ValueError("need one value per unit-group generator")
        for (g, order), v in zip(self.gens, self.values_on_gens):
            if v == 0 or field.pow(v, order) != 1:
                raise ValueError(f"value at generator {g} is not an order-{order} root of unity")
        self._table = self._build_table()

    def _build_table(self):
        n = self.modulus
        table = [0] * n
        if n == 1:
            return table
        table[1 % n] = 1
        frontier = [1 % n]
        vals = {1 % n: 1}
        F = self.field
        while frontier:
            new = []
            for a in frontier:
                for (g, _), v in zip(self.gens, self.values_on_gens):
                    b = a * g % n
                    if b not in vals:
                        vals[b] = F.mul(vals[a], v)
                        new.append(b)
            frontier = new
        for a, v in vals.items():
            table[a] = v
        return table

    def __call__(self, a: int) -> int:
        return self._table[a % self.modulus]

    @property
    def order(self) -> int:
        out = 1
        for v in self.values_on_gens:
            if v != 1:
                o = self.field.multiplicative_order(v)
                out = out * o // gcd(out, o)
        return out

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values_on_gens)

    def parity_value(self) -> int:
        """The value at -1."""
        return self((-1) % self.modulus)

    def conductor(self) -> int:
        n = self.modulus
        for c in sorted(d for d in range(1, n + 1) if n % d == 0):
            if all(self(a) == 1 for a in range(1, n) if gcd(a, n) == 1 and a % c == 1 % c):
                return c
        return n

    def describe(self) -> dict:
        return {
            "modulus": self.modulus,
            "field": self.field.describe(),
            "generators": [g for g, _ in self.gens],
            "values_on_generators": self.values_on_gens,
            "order": self.order,
        }

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.field == other.field
            and self.values_on_gens == other.values_on_gens
        )

    def __hash__(self):
        return hash((self.modulus, self.field, tuple(self.values_on_gens)))

    def __repr__(self):
        tag = "trivial" if self.is_trivial() else str(self.values_on_gens)
        return f"DirichletCharacter({self.modulus}, {self.field}, {tag})"

    @staticmethod
    def trivial(modulus: int, field: FiniteField) -> "DirichletCharacter":
        return DirichletCharacter(modulus, field, [1] * len(unit_group(modulus)))

    @staticmethod
    def from_description(d: dict) -> "DirichletCharacter":
        F = FiniteField.from_description(d["field"])
        return DirichletCharacter(d["modulus"], F, d["values_on_generators"])


def minimal_field_for_order(p: int, d: int) -> FiniteField:
    """Smallest GF(p^m) containing d-th roots of unity (d coprime to p)."""
    if gcd(d, p) != 1:
        raise CharacterOrderError(f"order {d} is divisible by the characteristic {p}")
    if d == 1:
        return FiniteField(p)
    m = 1
    acc = p % d
    while acc != 1:
        acc = acc * p % d
        m += 1
    return FiniteField(p, m)


def characters(modulus: int, field: FiniteField, order: int | None = None):
    """All characters mod N into the field, in a canonical order.

    With `order` given, only characters of exactly that order; an order
    sharing a factor with the characteristic raises CharacterOrderError
    since no such character can exist in characteristic p.
    """
    if order is not None and gcd(order, field.p) != 1:
        raise CharacterOrderError(
            f"order {order} is divisible by the characteristic {field.p}"
        )
    gens = unit_group(modulus)
    w = field.generator() if field.q > 2 else 1
    choices = []
    for _, gorder in gens:
        d = gcd(gorder, field.q - 1)
        vals = sorted(field.pow(w, (field.q - 1) // d * j) for j in range(d))
        choices.append(vals)
    out = []

    def rec(i, acc):
        if i == len(choices):
            out.append(DirichletCharacter(modulus, field, list(acc)))
            return
        for v in choices[i]:
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    if order is not None:
        out = [chi for chi in out if chi.order == order]
    return out
