"""Dense exact linear algebra over finite fields.

Matrices over the strict prime field GF(2) keep each row as a Python
int bitmask, so a row operation is a single xor on an arbitrary-width
integer; other fields store rows as lists of element ints.  Both
representations sit behind the same interface, and the `Echelon`
accumulator (a reduced row echelon basis that supports incremental
inserts, membership tests and coordinates) is the workhorse shared by
the relation quotients, algebra spans and subspace computations
elsewhere.

Vectors are lists of element ints, or bare int bitmasks in GF(2)
contexts where noted.
"""

from __future__ import annotations

from .field import FiniteField
from .poly import Poly


def _bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "_rows", "_bit")

    def __init__(self, field: FiniteField, nrows: int, ncols: int, rows, bitmode=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self._bit = field.p == 2 and field.k == 1 if bitmode is None else bitmode
        self._rows = rows

    # -- construction ----------------------------------------------------------

    @staticmethod
    def zero(field, nrows, ncols):
        if field.p == 2 and field.k == 1:
            return Matrix(field, nrows, ncols, [0] * nrows)
        return Matrix(field, nrows, ncols, [[0] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(field, n):
        m = Matrix.zero(field, n, n)
        for i in range(n):
            m.set(i, i, 1)
        return m

    @staticmethod
    def from_rows(field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        m = Matrix.zero(field, len(rows), ncols)
        for i, r in enumerate(rows):
            for j, c in enumerate(r):
                if c:
                    m.set(i, j, c)
        return m

    @staticmethod
    def from_int_rows(field, rows, ncols=None):
        """Rows of rational integers, reduced into a prime field."""
        return Matrix.from_rows(field, [[c % field.p for c in r] for r in rows], ncols)

    @staticmethod
    def from_bitrows(field, bitrows, ncols):
        assert field.p == 2 and field.k == 1
        return Matrix(field, len(bitrows), ncols, list(bitrows))

    def copy(self):
        rows = list(self._rows) if self._bit else [list(r) for r in self._rows]
        return Matrix(self.field, self.nrows, self.ncols, rows, self._bit)

    # -- entry access ------------------------------------------------------------

    def get(self, i, j):
        if self._bit:
            return (self._rows[i] >> j) & 1
        return self._rows[i][j]

    def set(self, i, j, v):
        if self._bit:
            if v:
                self._rows[i] |= 1 << j
            else:
                self._rows[i] &= ~(1 << j)
        else:
            self._rows[i][j] = v

    def row(self, i) -> list[int]:
        if self._bit:
            r = self._rows[i]
            return [(r >> j) & 1 for j in range(self.ncols)]
        return list(self._rows[i])

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def bitrows(self):
        assert self._bit
        return list(self._rows)

    def col(self, j):
        return [self.get(i, j) for i in range(self.nrows)]

    def is_zero(self):
        if self._bit:
            return all(r == 0 for r in self._rows)
        return all(all(c == 0 for c in r) for r in self._rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.field, self.nrows, self.ncols) != (other.field, other.nrows, other.ncols):
            return False
        if self._bit == other._bit:
            return self._rows == other._rows
        return self.rows() == other.rows()

    def __hash__(self):
        if self._bit:
            return hash((self.field, self.nrows, self.ncols, tuple(self._rows)))
        return hash((self.field, self.nrows, self.ncols, tuple(tuple(r) for r in self._rows)))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        if self._bit and other._bit:
            return Matrix(self.field, self.nrows, self.ncols,
                          [a ^ b for a, b in zip(self._rows, other._rows)])
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows(), other.rows())], False)

    def __sub__(self, other):
        if self._bit and other._bit:
            return self + other
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.sub(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows(), other.rows())], False)

    def __neg__(self):
        if self._bit:
            return self.copy()
        F = self.field
        return Matrix(F, self.nrows, self.ncols,
                      [[F.neg(a) for a in r] for r in self._rows], False)

    def scale(self, c):
        F = self.field
        if self._bit:
            if c % 2 == 0:
                return Matrix.zero(F, self.nrows, self.ncols)
            return self.copy()
        return Matrix(F, self.nrows, self.ncols,
                      [[F.mul(c, a) for a in r] for r in self._rows], False)

    def __mul__(self, other):
        assert self.ncols == other.nrows, "inner dimensions must agree"
        F = self.field
        if self._bit and other._bit:
            out = []
            brows = other._rows
            for r in self._rows:
                acc = 0
                for j in _bits_of(r):
                    acc ^= brows[j]
                out.append(acc)
            return Matrix(F, self.nrows, other.ncols, out)
        a = self.rows()
        bt = other.transpose().rows()
        out = []
        for ra in a:
            orow = []
            for cb in bt:
                s = 0
                for x, y in zip(ra, cb):
                    if x and y:
                        s = F.add(s, F.mul(x, y))
                orow.append(s)
            out.append(orow)
        return Matrix(F, self.nrows, other.ncols, out, False)

    def mat_vec(self, v: list[int]) -> list[int]:
        """Matrix times column vector."""
        F = self.field
        out = []
        for i in range(self.nrows):
            s = 0
            if self._bit:
                r = self._rows[i]
                for j in _bits_of(r):
                    if v[j]:
                        s ^= v[j]
            else:
                for x, y in zip(self._rows[i], v):
                    if x and y:
                        s = F.add(s, F.mul(x, y))
            out.append(s)
        return out

    def transpose(self):
        out = Matrix.zero(self.field, self.ncols, self.nrows)
        for i in range(self.nrows):
            if self._bit:
                for j in _bits_of(self._rows[i]):
                    out.set(j, i, 1)
            else:
                for j, c in enumerate(self._rows[i]):
                    if c:
                        out.set(j, i, c)
        return out

    def stack(self, other):
        """Rows of self above rows of other."""
        assert self.ncols == other.ncols and self.field == other.field
        if self._bit and other._bit:
            return Matrix(self.field, self.nrows + other.nrows, self.ncols,
                          self._rows + other._rows)
        return Matrix(self.field, self.nrows + other.nrows, self.ncols,
                      [list(r) for r in self.rows() + other.rows()], False)

    def trace(self):
        F = self.field
        s = 0
        for i in range(min(self.nrows, self.ncols)):
            s = F.add(s, self.get(i, i))
        return s

    def inverse(self):
        assert self.nrows == self.ncols
        n = self.nrows
        F = self.field
        ech = Echelon(F, 2 * n)
        for i in range(n):
            if self._bit:
                ech.insert(self._rows[i] | (1 << (n + i)))
            else:
                ech.insert(list(self._rows[i]) + [1 if j == i else 0 for j in range(n)])
        if ech.pivots[:n] != list(range(n)) or len(ech.pivots) != n:
            raise ValueError("matrix is not invertible")
        out = Matrix.zero(F, n, n)
        for i, r in enumerate(ech.rows):
            if self._bit:
                out._rows[i] = r >> n
            else:
                out._rows[i] = list(r[n:])
        return out

    def commutes_with(self, other) -> bool:
        return self * other == other * self

    def pow(self, e: int):
        assert self.nrows == self.ncols
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- echelon-based operations -----------------------------------------------

    def rref(self):
        """Reduced row echelon form and its pivot columns."""
        ech = Echelon(self.field, self.ncols)
        for i in range(self.nrows):
            ech.insert(self._row_as_vec(i))
        rows = ech.row_vectors()
        out = Matrix.zero(self.field, self.nrows, self.ncols)
        for i, r in enumerate(rows):
            if self._bit:
                out._rows[i] = r
            else:
                out._rows[i] = list(r)
        return out, tuple(ech.pivots)

    def _row_as_vec(self, i):
        return self._rows[i] if self._bit else list(self._rows[i])

    def rank(self):
        ech = Echelon(self.field, self.ncols)
        for i in range(self.nrows):
            ech.insert(self._row_as_vec(i))
        return len(ech.pivots)

    def kernel(self):
        """Matrix whose rows are a basis of the right null space."""
        ech = Echelon(self.field, self.ncols)
        for i in range(self.nrows):
            ech.insert(self._row_as_vec(i))
        return ech.kernel_matrix()

    def row_space(self):
        ech = Echelon(self.field, self.ncols)
        for i in range(self.nrows):
            ech.insert(self._row_as_vec(i))
        return ech

    # -- characteristic and minimal polynomials ----------------------------------

    def charpoly(self) -> Poly:
        """Characteristic polynomial det(X - M) via the Hessenberg method."""
        assert self.nrows == self.ncols
        F = self.field
        n = self.nrows
        if n == 0:
            return Poly.one(F)
        h = [self.row(i) for i in range(n)]
        # reduce to upper Hessenberg form by similarity transforms
        for m in range(1, n - 1):
            pivot = None
            for i in range(m, n):
                if h[i][m - 1]:
                    pivot = i
                    break
            if pivot is None:
                continue
            if pivot != m:
                h[pivot], h[m] = h[m], h[pivot]
                for i in range(n):
                    h[i][pivot], h[i][m] = h[i][m], h[i][pivot]
            inv = F.inv(h[m][m - 1])
            for i in range(m + 1, n):
                if h[i][m - 1]:
                    u = F.mul(h[i][m - 1], inv)
                    for j in range(m - 1, n):
                        h[i][j] = F.sub(h[i][j], F.mul(u, h[m][j]))
                    for j in range(n):
                        h[j][m] = F.add(h[j][m], F.mul(u, h[j][i]))
        # charpoly recurrence on the Hessenberg matrix
        polys = [Poly.one(F)]
        x = Poly.x(F)
        for m in range(1, n + 1):
            p = (x - Poly.constant(F, h[m - 1][m - 1])) * polys[m - 1]
            t = 1
            for i in range(1, m):
                t = F.mul(t, h[m - i][m - i - 1])
                coef = F.mul(t, h[m - i - 1][m - 1])
                if coef:
                    p = p - Poly.constant(F, coef) * polys[m - i - 1]
            polys.append(p)
        return polys[n]

    def min_poly(self) -> Poly:
        """Monic polynomial of least degree annihilating the matrix.

        Least common multiple of the minimal polynomials of the standard
        basis vectors, each found by spinning its cyclic subspace.
        """
        assert self.nrows == self.ncols
        F = self.field
        n = self.nrows
        if n == 0:
            return Poly.one(F)
        seen = Echelon(F, n)
        result = Poly.one(F)
        for seed in range(n):
            e = [0] * n
            e[seed] = 1
            if seen.contains(self._vec_for_ech(e)):
                continue
            local = self._cyclic_min_poly(e, seen)
            g = result.gcd(local)
            result = (result * local).divmod(g)[0]
            if result.degree == n:
                break
        return result.monic()

    def _cyclic_min_poly(self, v, seen: "Echelon") -> Poly:
        # forward (non-reduced) elimination so every stored row keeps an
        # exact expression as a combination of the powers M^d v
        F = self.field
        rows: list = []
        pivs: list[int] = []
        pivvals: list[int] = []
        combos: list[list[int]] = []
        k = 0
        while True:
            res = self._vec_for_ech(v)
            combo = [0] * (k + 1)
            combo[k] = 1
            for r, p, pv, rc in zip(rows, pivs, pivvals, combos):
                c = ((res >> p) & 1) if self._bit else res[p]
                if c:
                    if self._bit:
                        res ^= r
                    else:
                        f = F.div(c, pv)
                        res = [F.sub(a, F.mul(f, b)) for a, b in zip(res, r)]
                        c = f
                    for d, cd in enumerate(rc):
                        combo[d] = F.sub(combo[d], F.mul(c, cd))
            if (res == 0) if self._bit else all(a == 0 for a in res):
                return Poly(F, combo)
            p = (res & -res).bit_length() - 1 if self._bit else next(
                j for j, a in enumerate(res) if a
            )
            rows.append(res)
            pivs.append(p)
            pivvals.append(1 if self._bit else res[p])
            combos.append(combo)
            seen.insert(self._vec_for_ech(v))
            v = self.mat_vec(v)
            k += 1

    def _vec_for_ech(self, v):
        if self._bit:
            if isinstance(v, int):
                return v
            acc = 0
            for j, c in enumerate(v):
                if c:
                    acc |= 1 << j
            return acc
        return list(v)


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Rows are int bitmasks over strict GF(2) and lists of element ints
    otherwise.  Insertion keeps the basis fully reduced, so coordinates
    of a vector in the span are read off at the pivot columns.
    """

    def __init__(self, field: FiniteField, width: int):
        self.field = field
        self.width = width
        self.bit = field.p == 2 and field.k == 1
        self.rows: list = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def iszero(self, vec):
        return vec == 0 if self.bit else all(c == 0 for c in vec)

    def _pivot_of(self, vec):
        if self.bit:
            return (vec & -vec).bit_length() - 1
        for j, c in enumerate(vec):
            if c:
                return j
        return -1

    def reduce(self, vec):
        """Reduce against the basis; return (residue, coords)."""
        F = self.field
        coords = [0] * len(self.rows)
        if self.bit:
            v = vec
            for i, (r, p) in enumerate(zip(self.rows, self.pivots)):
                if (v >> p) & 1:
                    v ^= r
                    coords[i] = 1
            return v, coords
        v = list(vec)
        for i, (r, p) in enumerate(zip(self.rows, self.pivots)):
            c = v[p]
            if c:
                coords[i] = c
                for j, rj in enumerate(r):
                    if rj:
                        v[j] = F.sub(v[j], F.mul(c, rj))
        return v, coords

    def insert(self, vec) -> int | None:
        """Insert a vector; return its new row index, or None if dependent."""
        res, _ = self.reduce(vec)
        if self.iszero(res):
            return None
        return self.insert_reduced(res)

    def insert_reduced(self, res) -> int:
        F = self.field
        p = self._pivot_of(res)
        if self.bit:
            row = res
        else:
            inv = F.inv(res[p])
            row = [F.mul(inv, c) for c in res]
        # back-eliminate the new pivot from existing rows
        for i, r in enumerate(self.rows):
            if self.bit:
                if (r >> p) & 1:
                    self.rows[i] = r ^ row
            else:
                c = r[p]
                if c:
                    self.rows[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(r, row)]
        # keep rows sorted by pivot
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < p:
            idx += 1
        self.rows.insert(idx, row)
        self.pivots.insert(idx, p)
        return idx

    def contains(self, vec) -> bool:
        res, _ = self.reduce(vec)
        return self.iszero(res)

    def coords(self, vec) -> list[int]:
        """Coordinates against the echelon rows; raises if not in the span."""
        res, coords = self.reduce(vec)
        if not self.iszero(res):
            raise ValueError("vector not in span")
        return coords

    def row_vectors(self):
        return list(self.rows)

    def contains_echelon(self, other: "Echelon") -> bool:
        return all(self.contains(r) for r in other.rows)

    def copy(self):
        e = Echelon(self.field, self.width)
        e.rows = list(self.rows) if self.bit else [list(r) for r in self.rows]
        e.pivots = list(self.pivots)
        return e

    def kernel_matrix(self) -> Matrix:
        """Basis of {v : row·v = 0 entrywise in pivot form}, as matrix rows.

        This is the right null space of the matrix whose rows are the
        echelon rows (hence of whatever was inserted).
        """
        F = self.field
        pivset = set(self.pivots)
        free = [j for j in range(self.width) if j not in pivset]
        out = Matrix.zero(F, len(free), self.width)
        for r, j in enumerate(free):
            out.set(r, j, 1)
            for i, p in enumerate(self.pivots):
                c = ((self.rows[i] >> j) & 1) if self.bit else self.rows[i][j]
                if c:
                    out.set(r, p, F.neg(c))
        return out

    def as_matrix(self) -> Matrix:
        m = Matrix.zero(self.field, len(self.rows), self.width)
        for i, r in enumerate(self.rows):
            if self.bit:
                m._rows[i] = r
            else:
                m._rows[i] = list(r)
        return m


def intersect_rowspaces(a: Matrix, b: Matrix) -> Matrix:
    """Basis of the intersection of two row spaces (Zassenhaus)."""
    assert a.ncols == b.ncols and a.field == b.field
    F = a.field
    w = a.ncols
    ech = Echelon(F, 2 * w)
    if a._bit:
        for r in a._rows:
            ech.insert(r | (r << w))
        for r in b._rows:
            ech.insert(r)
    else:
        for r in a.rows():
            ech.insert(r + r)
        for r in b.rows():
            ech.insert(r + [0] * w)
    out_rows = []
    for r, p in zip(ech.rows, ech.pivots):
        if p >= w:
            if a._bit:
                out_rows.append(r >> w)
            else:
                out_rows.append(r[w:])
    m = Matrix.zero(F, len(out_rows), w)
    for i, r in enumerate(out_rows):
        if a._bit:
            m._rows[i] = r
        else:
            m._rows[i] = list(r)
    return m


def flatten_matrix(m: Matrix) -> "int | list[int]":
    """Flatten to a vector over the prime subfield.

    Entries in GF(p^k) contribute k prime-field coordinates each; over
    characteristic 2 the result is a single bitmask, which is what the
    algebra layer's echelon bases consume.
    """
    F = m.field
    k = F.k
    if F.p == 2:
        if m._bit:
            acc = 0
            for i, r in enumerate(m._rows):
                acc |= r << (i * m.ncols)
            return acc
        acc = 0
        pos = 0
        for i in range(m.nrows):
            for j in range(m.ncols):
                acc |= m.get(i, j) << pos
                pos += k
        return acc
    out = []
    for i in range(m.nrows):
        for j in range(m.ncols):
            out.extend(F.coeffs(m.get(i, j)) if k > 1 else [m.get(i, j)])
    return out


def unflatten_matrix(field: FiniteField, nrows: int, ncols: int, vec) -> Matrix:
    """Inverse of flatten_matrix."""
    k = field.k
    m = Matrix.zero(field, nrows, ncols)
    if field.p == 2:
        mask = (1 << k) - 1
        pos = 0
        for i in range(nrows):
            if m._bit:
                m._rows[i] = (vec >> pos) & ((1 << ncols) - 1)
                pos += ncols
            else:
                for j in range(ncols):
                    m.set(i, j, (vec >> pos) & mask)
                    pos += k
        return m
    idx = 0
    for i in range(nrows):
        for j in range(ncols):
            if k > 1:
                m.set(i, j, field.from_coeffs(vec[idx : idx + k]))
                idx += k
            else:
                m.set(i, j, vec[idx])
                idx += 1
    return m
