"""Arithmetic in finite fields GF(p^k).

Field elements are plain Python ints.  For GF(p) an element is its
representative in [0, p); for GF(p^k) it is the base-p packed encoding
c0 + c1*p + ... + c_{k-1}*p^{k-1} of the canonical polynomial
representative of degree < k.  Working on bare ints keeps the dense
linear algebra elsewhere free of per-entry object overhead, and for
p = 2 it makes the packed encoding coincide with the bit pattern of the
coefficient vector.

The defining modulus of an extension is chosen deterministically: the
monic irreducible of degree k over GF(p) whose base-p integer encoding
is smallest.  This pins a canonical model of GF(p^k) across runs with
no external tables.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the levels used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# -- minimal GF(p)[x] helpers for the modulus search -------------------------
# Polynomials here are tuples of ints in [0, p), ascending degree, no
# trailing zeros.  Only what the irreducibility test needs.


def _trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return tuple(c)


def _pmulmod(a, b, m, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo monic m
    dm = len(m) - 1
    for i in range(len(out) - 1, dm - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(dm):
                out[i - dm + j] = (out[i - dm + j] - c * m[j]) % p
    return _trim(out)


def _pmod(a, b, p):
    inv = pow(b[-1], p - 2, p)
    bb = tuple(c * inv % p for c in b)
    r = list(a)
    while len(r) >= len(bb):
        c = r[-1]
        shift = len(r) - len(bb)
        for j, bj in enumerate(bb):
            r[shift + j] = (r[shift + j] - c * bj) % p
        r = list(_trim(r))
        if not r:
            break
    return _trim(r)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible_modp(coeffs, p):
    """Rabin's test for a monic polynomial over GF(p)."""
    n = len(coeffs) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    h = x
    for _ in range(n):
        h = _ppowp(h, coeffs, p)
    if h != x:
        return False
    for r in set(_prime_factors(n)):
        h = x
        for _ in range(n // r):
            h = _ppowp(h, coeffs, p)
        d = _pgcd(_psub(h, x, p), coeffs, p)
        if len(d) != 1:
            return False
    return True


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _trim(out)


def _ppowp(h, m, p):
    """h^p modulo the monic polynomial m, by square and multiply."""
    result = (1,)
    base = h
    e = p
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_MAX_TABLE = 1 << 16


class FiniteField:
    """GF(p^k) with canonical modulus and int-encoded elements.

    All element-level operations take and return ints.  Instances are
    immutable and safe to share between threads.
    """

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.modulus = (0, 1) if modulus is None else tuple(m % p for m in modulus)
        else:
            if modulus is None:
                modulus = self._least_irreducible(p, k)
            modulus = tuple(m % p for m in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not _is_irreducible_modp(modulus, p):
                raise ValueError("modulus is reducible")
            self.modulus = modulus
        self._log = None
        self._exp = None
        if k > 1 and self.q <= _MAX_TABLE:
            self._build_tables()

    @staticmethod
    def _least_irreducible(p, k):
        top = p**k
        for low in range(top):
            coeffs = []
            v = low
            for _ in range(k):
                coeffs.append(v % p)
                v //= p
            coeffs.append(1)
            if _is_irreducible_modp(tuple(coeffs), p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- encoding ------------------------------------------------------------

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, cs) -> int:
        a = 0
        for c in reversed(list(cs)):
            a = a * self.p + c % self.p
        return a

    def elements(self):
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return self.from_coeffs((-c) % self.p for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def _mul_slow(self, a, b):
        p = self.p
        ac = self.coeffs(a)
        bc = self.coeffs(b)
        out = [0] * (2 * self.k - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    out[i + j] = (out[i + j] + ai * bj) % p
        m = self.modulus
        for i in range(len(out) - 1, self.k - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(self.k):
                    out[i - self.k + j] = (out[i - self.k + j] - c * m[j]) % p
        return self.from_coeffs(out[: self.k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1) - self._log[a]] if self._log[a] else 1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        e = e % (self.q - 1) if a != 0 and e >= self.q - 1 else e
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def scalar(self, n: int) -> int:
        """Image of the rational integer n in the field."""
        return n % self.p

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.q - 1
        for r in set(_prime_factors(self.q - 1)):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def generator(self) -> int:
        """Smallest int encoding of a generator of the unit group."""
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise AssertionError("unit group has no generator")  # unreachable

    def _build_tables(self):
        g = None
        for a in range(2, self.q):
            # order check without tables
            ok = True
            for r in set(_prime_factors(self.q - 1)):
                if self._pow_slow(a, (self.q - 1) // r) == 1:
                    ok = False
                    break
            if ok:
                g = a
                break
        exp = [1] * (2 * (self.q - 1))
        log = [0] * self.q
        acc = 1
        for i in range(self.q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, g)
        for i in range(self.q - 1, 2 * (self.q - 1)):
            exp[i] = exp[i - (self.q - 1)]
        self._exp = exp
        self._log = log

    def _pow_slow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    # -- identity ------------------------------------------------------------

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def describe(self) -> dict:
        """JSON-ready field descriptor."""
        d = {"p": self.p, "k": self.k}
        if self.k > 1:
            d["modulus"] = list(self.modulus)
        return d

    @staticmethod
    def from_description(d: dict) -> "FiniteField":
        mod = tuple(d["modulus"]) if "modulus" in d else None
        return FiniteField(d["p"], d.get("k", 1), mod)


GF2 = FiniteField(2)
