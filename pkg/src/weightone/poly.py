"""Univariate polynomials over finite fields and their factorization.

Coefficients are stored ascending as field-element ints (see field.py);
the zero polynomial has an empty coefficient tuple.  Factorization runs
squarefree decomposition, then distinct-degree splitting, then an
equal-degree split driven by a deterministic sweep of test elements, so
repeated runs produce identical factor lists.
"""

from __future__ import annotations

from .field import FiniteField


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field):
        return Poly(field, ())

    @staticmethod
    def one(field):
        return Poly(field, (1,))

    @staticmethod
    def x(field):
        return Poly(field, (0, 1))

    @staticmethod
    def constant(field, c):
        return Poly(field, (c,))

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{c}*{xs}")
        return " + ".join(reversed(terms))

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, (F.add(self[i], other[i]) for i in range(n)))

    def __sub__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, (F.sub(self[i], other[i]) for i in range(n)))

    def __neg__(self):
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        return Poly(F, (F.mul(c, a) for a in self.coeffs))

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.leading()))

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.leading())
        quo = [0] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = F.mul(c, inv_lead)
            quo[i - db] = f
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, b))
        return Poly(F, quo), Poly(F, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def pow_mod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def derivative(self):
        F = self.field
        return Poly(F, (F.mul(F.scalar(i), c) for i, c in enumerate(self.coeffs) if i >= 1))

    def eval(self, a):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    # -- factorization -----------------------------------------------------------

    def pth_root(self):
        """For f with f' = 0, the g with g(x)^p = f(x)."""
        F = self.field
        p = F.p
        root_pow = F.q // p  # c -> c^(q/p) inverts the Frobenius
        cs = []
        for i in range(0, len(self.coeffs), p):
            cs.append(F.pow(self.coeffs[i], root_pow))
        return Poly(F, cs)

    def squarefree_decomposition(self):
        """List of (monic squarefree g_i, multiplicity e_i), product g_i^e_i = monic(f)."""
        f = self.monic()
        if f.degree <= 0:
            return []
        out = []
        p = self.field.p
        multiplier = 1
        while f.degree > 0:
            d = f.derivative()
            if d.is_zero():
                f = f.pth_root()
                multiplier *= p
                continue
            w = f.gcd(d)
            v = f // w  # product of factors of multiplicity not divisible by p
            e = 1
            while v.degree > 0:
                y = v.gcd(w)
                piece = v // y
                if piece.degree > 0:
                    out.append((piece.monic(), e * multiplier))
                w = w // y
                v = y
                e += 1
            f = w  # what is left has all multiplicities divisible by p
        combined = {}
        for g, e in out:
            combined[g.coeffs] = (g, combined.get(g.coeffs, (g, 0))[1] + e)
        return sorted(combined.values(), key=lambda t: (t[0].degree, t[0].coeffs))

    def _distinct_degree(self):
        """For monic squarefree f: list of (product of degree-d factors, d)."""
        F = self.field
        f = self
        out = []
        h = Poly.x(F)
        x = Poly.x(F)
        d = 0
        while f.degree > 2 * (d + 1) - 1 and f.degree > 0:
            d += 1
            h = h.pow_mod(F.q, f)
            g = (h - x).gcd(f)
            if g.degree > 0:
                out.append((g, d))
                f = f // g
                h = h % f
        if f.degree > 0:
            out.append((f, f.degree))
        return out

    def _equal_degree_split(self, d):
        """Split monic squarefree f, all of whose factors have degree d."""
        F = self.field
        f = self
        if f.degree == d:
            return [f]
        n_parts = f.degree // d
        # deterministic sweep of test polynomials of growing degree
        for u in _candidate_polys(F, f.degree):
            if F.p == 2:
                # absolute trace to GF(2) of u, landing in {0,1} per factor
                m = F.k * d
                t = u % f
                acc = t
                for _ in range(m - 1):
                    t = (t * t) % f
                    acc = acc + t
                g = acc.gcd(f)
            else:
                e = (F.q**d - 1) // 2
                w = u.pow_mod(e, f)
                g = (w - Poly.one(F)).gcd(f)
            if 0 < g.degree < f.degree:
                return sorted(
                    g._equal_degree_split(d) + (f // g)._equal_degree_split(d),
                    key=lambda h: h.coeffs,
                )
        raise AssertionError(f"equal-degree split failed for {f} (d={d}, parts={n_parts})")

    def factor(self):
        """Monic irreducible factors with multiplicity, canonically ordered.

        The product of the factors to their multiplicities equals f up to
        the leading coefficient.
        """
        if self.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        out = []
        for g, e in self.squarefree_decomposition():
            for h, d in g._distinct_degree():
                for irr in h._equal_degree_split(d):
                    out.append((irr, e))
        return sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))

    def is_irreducible(self):
        if self.degree <= 0:
            return False
        fs = self.factor()
        return len(fs) == 1 and fs[0][1] == 1

    def roots(self):
        """Roots in the coefficient field, with multiplicity, sorted."""
        out = []
        for g, e in self.factor():
            if g.degree == 1:
                out.extend([self.field.neg(g.coeffs[0])] * e)
        return sorted(out)


def _candidate_polys(F, max_degree):
    """Deterministic enumeration x, x+1, ..., then higher degrees."""
    for deg in range(1, max_degree + 1):
        for low in range(F.q**deg):
            cs = []
            v = low
            for _ in range(deg):
                cs.append(v % F.q)
                v //= F.q
            yield Poly(F, cs + [1])
