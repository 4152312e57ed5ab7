"""Independent dimension bookkeeping: genus, cusp counts, Sturm bounds,
and the Cohen-Oesterle dimension formula for cusp forms with character.

These formulas are the build-time oracle against which the symbol
spaces are validated: the Hecke algebra computed on a mod-p space must
have prime-field dimension equal to the characteristic-zero dimension
of the corresponding space of cusp forms, and a mismatch aborts the
pipeline rather than silently proceeding.

Character values in the Cohen-Oesterle terms are evaluated as complex
roots of unity; the final expression is a rational integer, which is
asserted numerically before rounding.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from .dirichlet import DirichletCharacter, unit_group, _factorize
from .errors import InvariantViolation


def index_gamma0(n: int) -> int:
    """Index of the level-n Hecke congruence subgroup in the full modular group."""
    mu = n
    for q, _ in _factorize(n):
        mu = mu // q * (q + 1)
    return mu


def nu2(n: int) -> int:
    """Number of order-2 elliptic points for the level-n Hecke subgroup."""
    if n % 4 == 0:
        return 0
    out = 1
    for q, _ in _factorize(n):
        if q == 2:
            continue
        out *= 1 + (1 if q % 4 == 1 else -1)
    return out


def nu3(n: int) -> int:
    """Number of order-3 elliptic points."""
    if n % 9 == 0:
        return 0
    out = 1
    for q, _ in _factorize(n):
        if q == 3:
            continue
        out *= 1 + (1 if q % 3 == 1 else -1)
    return out


def nu_inf(n: int) -> int:
    """Number of cusps."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _phi(gcd(d, n // d))
    return total


def _phi(n: int) -> int:
    out = n
    for q, _ in _factorize(n):
        out = out // q * (q - 1)
    return out


def genus_x0(n: int) -> int:
    g = Fraction(1) + Fraction(index_gamma0(n), 12) - Fraction(nu2(n), 4) \
        - Fraction(nu3(n), 3) - Fraction(nu_inf(n), 2)
    assert g.denominator == 1
    return int(g)


def sturm_bound(n: int, k: int, group_index: int | None = None) -> int:
    """Hecke operators T_m for m up to this bound span the full algebra."""
    mu = index_gamma0(n) if group_index is None else group_index
    return -((-k * mu) // 12)  # ceil(k*mu/12)


def _lambda_factor(r: int, s: int, q: int) -> int:
    # local factor of the Cohen-Oesterle cusp-count term at q^r || N,
    # with s the q-valuation of the character conductor
    if 2 * s <= r:
        if r % 2 == 0:
            return q ** (r // 2) + q ** (r // 2 - 1)
        return 2 * q ** ((r - 1) // 2)
    return 2 * q ** (r - s)


class RationalCharacter:
    """A Dirichlet character valued in complex roots of unity.

    Used only by the dimension formula; specified by exponents against
    the canonical unit-group generators.
    """

    def __init__(self, modulus: int, exponents):
        self.modulus = modulus
        self.gens = unit_group(modulus)
        self.exponents = list(exponents)
        self._dlog = self._build_dlog()

    def _build_dlog(self):
        n = self.modulus
        table = {1 % n: [0] * len(self.gens)}
        frontier = [1 % n]
        while frontier:
            new = []
            for a in frontier:
                for i, (g, order) in enumerate(self.gens):
                    b = a * g % n
                    if b not in table:
                        exps = list(table[a])
                        exps[i] = (exps[i] + 1) % order
                        table[b] = exps
                        new.append(b)
            frontier = new
        return table

    def __call__(self, a: int) -> complex:
        a %= self.modulus
        if a not in self._dlog:
            return 0j
        exps = self._dlog[a]
        angle = 0.0
        for e, k, (_, order) in zip(exps, self.exponents, self.gens):
            angle += e * k / order
        return cmath.exp(2j * cmath.pi * angle)

    @property
    def order(self) -> int:
        out = 1
        for k, (_, o) in zip(self.exponents, self.gens):
            d = o // gcd(k, o)
            out = out * d // gcd(out, d)
        return out

    def is_trivial(self) -> bool:
        return all(k % o == 0 for k, (_, o) in zip(self.exponents, self.gens))

    def conductor(self) -> int:
        n = self.modulus
        for c in sorted(d for d in range(1, n + 1) if n % d == 0):
            if all(
                abs(self(a) - 1) < 1e-9
                for a in range(1, n)
                if gcd(a, n) == 1 and a % c == 1 % c
            ):
                return c
        return n

    @staticmethod
    def from_mod_p(chi: DirichletCharacter) -> "RationalCharacter":
        """A characteristic-zero avatar with the same kernel data.

        The identification of roots of unity is one fixed choice out of
        the Galois orbit; dimensions are constant on that orbit, which
        is all the formula consumers need.
        """
        F = chi.field
        w = F.generator() if F.q > 2 else 1
        exps = []
        for (g, order), v in zip(chi.gens, chi.values_on_gens):
            if v == 1:
                exps.append(0)
                continue
            d = F.multiplicative_order(v)
            base = F.pow(w, (F.q - 1) // d)
            j = next(j for j in range(d) if F.pow(base, j) == v)
            exps.append(j * (order // d))
        return RationalCharacter(chi.modulus, exps)


def dim_cusp_forms(n: int, k: int, chi: RationalCharacter | None = None) -> int:
    """dim of the weight-k level-n cusp forms with character (Cohen-Oesterle).

    chi = None means the trivial character.  Requires k >= 2 and the
    parity condition chi(-1) = (-1)^k; the wrong parity gives 0.
    """
    if k < 2:
        raise ValueError("formula implemented for weight >= 2 only")
    if chi is None:
        chi = RationalCharacter(n, [0] * len(unit_group(n)))
    if abs(chi((-1) % n) - (-1) ** k) > 1e-9:
        return 0
    cond = chi.conductor()
    mu = index_gamma0(n)
    lam = 1
    for q, r in _factorize(n):
        s = 0
        c = cond
        while c % q == 0:
            c //= q
            s += 1
        lam *= _lambda_factor(r, s, q)
    if k % 2 == 0:
        gamma4 = Fraction(-1, 4) if k % 4 == 2 else Fraction(1, 4)
    else:
        gamma4 = Fraction(0)
    if k % 3 == 2:
        gamma3 = Fraction(-1, 3)
    elif k % 3 == 0:
        gamma3 = Fraction(1, 3)
    else:
        gamma3 = Fraction(0)
    eps4 = sum(chi(x) for x in range(n) if (x * x + 1) % n == 0)
    eps3 = sum(chi(x) for x in range(n) if (x * x + x + 1) % n == 0)
    total = (
        complex(Fraction(k - 1, 12) * mu - Fraction(lam, 2))
        + complex(gamma4) * eps4
        + complex(gamma3) * eps3
    )
    if abs(total.imag) > 1e-6 or abs(total.real - round(total.real)) > 1e-6:
        raise InvariantViolation(f"dimension formula did not produce an integer: {total}")
    dim = int(round(total.real))
    # the weight-2 trivial-character case picks up the constants from
    # the weight-0 forms on the other side of the functional pairing
    if k == 2 and chi.is_trivial():
        dim += 1
    return dim


def classical_cusp_dim(n: int, k: int, chi_mod_p: DirichletCharacter | None) -> int:
    """Characteristic-zero cusp dimension for a mod-p character input."""
    if chi_mod_p is None or chi_mod_p.is_trivial():
        return dim_cusp_forms(n, k, None)
    return dim_cusp_forms(n, k, RationalCharacter.from_mod_p(chi_mod_p))
