"""Finite-dimensional commutative algebras of commuting matrices.

An algebra is presented by labelled generating matrices over GF(p^m)
and stored through its canonical vector-space basis over the prime
field GF(p): matrices are flattened to prime-field vectors and the
basis is the reduced row echelon form of the span, so equal algebras
have equal bases no matter how they were built.  On top of that sit
the structural operations: localization at idempotents, primary
(local) decomposition, ideals, quotients, duality tests.

Local decomposition first splits along coprime factors of generator
minimal polynomials, which is usually enough; a factor on which every
generator has primary minimal polynomial can still be a product (two
factors glued along conjugate eigenvalue systems), so each remaining
piece is certified local - and split further if needed - with the
Berlekamp-style fixed space of x -> x^p, whose prime-field dimension
equals the number of local factors.
"""

from __future__ import annotations

from .errors import InvariantViolation, WeightOneError
from .field import FiniteField
from .matrix import Echelon, Matrix, flatten_matrix, intersect_rowspaces, unflatten_matrix
from .poly import Poly


class NonCommutingError(WeightOneError):
    def __init__(self, label_a, label_b):
        super().__init__(f"generators {label_a} and {label_b} do not commute")
        self.labels = (label_a, label_b)


class MembershipError(WeightOneError):
    pass


class NotAnIdealError(WeightOneError):
    pass


class IdealClosureError(InvariantViolation):
    pass


class NoSolutionError(InvariantViolation):
    pass


class MatrixAlgebra:
    """Unital commutative algebra of n x n matrices, as a GF(p)-space.

    `unit` need not be the ambient identity: localizations at an
    idempotent e are algebras with unit e inside the same ambient
    matrix space.  All element-level structure (minimal polynomials,
    residues, nilpotency) is read off the regular representation, which
    is faithful because the algebra is unital.
    """

    def __init__(self, field, n, unit, basis, generators, ech):
        self.field = field
        self.prime_field = FiniteField(field.p)
        self.n = n
        self.unit = unit
        self.basis = basis
        self.generators = list(generators)
        self._ech = ech
        self._labels = dict(self.generators)
        self._width = field.k * n * n

    # -- construction --------------------------------------------------------

    @staticmethod
    def close(generators, unit=None, verify=True) -> "MatrixAlgebra":
        """Smallest unital algebra containing the pairwise commuting generators."""
        gens = list(generators)
        if unit is None:
            if not gens:
                raise ValueError("need at least one generator or an explicit unit")
            first = gens[0][1]
            unit = Matrix.identity(first.field, first.nrows)
        field = unit.field
        n = unit.nrows
        for i, (la, a) in enumerate(gens):
            for lb, b in gens[i + 1 :]:
                if not a.commutes_with(b):
                    raise NonCommutingError(la, lb)
        prime = FiniteField(field.p)
        ech = Echelon(prime, field.k * n * n)
        ech.insert(flatten_matrix(unit))
        frontier = [unit]
        while frontier:
            new = []
            for m in frontier:
                for _, g in gens:
                    prod = g * m
                    if ech.insert(flatten_matrix(prod)) is not None:
                        new.append(prod)
            frontier = new
        alg = MatrixAlgebra._from_echelon(field, n, unit, gens, ech)
        if verify:
            alg._verify_closed()
        return alg

    @staticmethod
    def _from_echelon(field, n, unit, gens, ech):
        basis = [unflatten_matrix(field, n, n, r) for r in ech.row_vectors()]
        return MatrixAlgebra(field, n, unit, basis, gens, ech)

    @staticmethod
    def span(field, n, unit, generators, mats, verify=True) -> "MatrixAlgebra":
        """Algebra whose underlying space is the GF(p)-span of `mats`.

        The span must already be closed under multiplication; `verify`
        rechecks that, and internal callers whose spans are closed by
        construction (localizations, quotients) skip the quadratic scan.
        """
        prime = FiniteField(field.p)
        ech = Echelon(prime, field.k * n * n)
        for m in mats:
            ech.insert(flatten_matrix(m))
        alg = MatrixAlgebra._from_echelon(field, n, unit, generators, ech)
        if verify:
            alg._verify_closed()
        return alg

    def _verify_closed(self):
        if not self._ech.contains(flatten_matrix(self.unit)):
            raise InvariantViolation("unit not in algebra span")
        for _, g in self.generators:
            if not self._ech.contains(flatten_matrix(g)):
                raise InvariantViolation("generator escapes algebra span")
        for i, a in enumerate(self.basis):
            for b in self.basis[i:]:
                if not self._ech.contains(flatten_matrix(a * b)):
                    raise InvariantViolation("basis product escapes algebra span")

    # -- vector-space structure -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        return self._ech.contains(flatten_matrix(m))

    def coords(self, m: Matrix) -> list[int]:
        try:
            return self._ech.coords(flatten_matrix(m))
        except ValueError:
            raise MembershipError("matrix not in the algebra span") from None

    def element(self, coords) -> Matrix:
        out = Matrix.zero(self.field, self.n, self.n)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def generator(self, label: str) -> Matrix:
        if label not in self._labels:
            raise KeyError(f"no generator labelled {label}")
        return self._labels[label]

    def has_label(self, label: str) -> bool:
        return label in self._labels

    def adjoin_label(self, label: str, mat: Matrix):
        """Attach a name to an element already inside the algebra."""
        if not self.contains(mat):
            raise MembershipError(f"element for label {label} is outside the span")
        self.generators.append((label, mat))
        self._labels[label] = mat

    @property
    def labels(self):
        return [la for la, _ in self.generators]

    def span_echelon(self) -> Echelon:
        return self._ech.copy()

    # -- elementwise structure ----------------------------------------------------

    def regular_rep(self, x: Matrix) -> Matrix:
        """Matrix of multiplication by x on the algebra's own basis."""
        prime = self.prime_field
        cols = [self.coords(x * b) for b in self.basis]
        out = Matrix.zero(prime, self.dim, self.dim)
        for j, col in enumerate(cols):
            for i, c in enumerate(col):
                if c:
                    out.set(i, j, c)
        return out

    def min_poly(self, x: Matrix) -> Poly:
        """Minimal polynomial of x as an element of the algebra (X^0 = unit)."""
        if self.dim == 0:
            return Poly.one(self.prime_field)
        return self.regular_rep(x).min_poly()

    def eval_poly(self, f: Poly, x: Matrix) -> Matrix:
        """f(x) inside the algebra, constant term against the unit."""
        out = Matrix.zero(self.field, self.n, self.n)
        power = self.unit
        for i, c in enumerate(f.coeffs):
            if c:
                out = out + power.scale(c)
            if i + 1 < len(f.coeffs):
                power = power * x
        return out

    def is_idempotent(self, x: Matrix) -> bool:
        return x * x == x

    # -- localization ---------------------------------------------------------------

    def localize(self, e: Matrix) -> "MatrixAlgebra":
        """The factor algebra e*A with unit e, inside the same ambient space."""
        if not self.is_idempotent(e) or not self.contains(e):
            raise ValueError("localization requires an idempotent of the algebra")
        gens = [(la, e * g) for la, g in self.generators]
        return MatrixAlgebra.span(
            self.field, self.n, e, gens, [e * b for b in self.basis], verify=False
        )

    # -- quotients --------------------------------------------------------------------

    def quotient(self, ideal: "AlgebraIdeal"):
        """Quotient algebra by an ideal, as matrices on the quotient space.

        Returns (Q, qmap): Q is the quotient as a matrix algebra on the
        coordinate space of classes, qmap(x) is the class of a parent
        element as a Q-space matrix, qmap.coords(x) its coordinate
        vector, and qmap.reps lifts Q's coordinate basis to the parent.
        """
        if ideal.parent is not self and not self._ech.contains_echelon(ideal._ech):
            raise NotAnIdealError("ideal does not live inside this algebra")
        ideal.verify_closed_under(self)
        prime = self.prime_field
        icoords = Echelon(prime, self.dim)
        for m in ideal.basis:
            icoords.insert(self._as_coordvec(self.coords(m)))
        pivset = set(icoords.pivots)
        free = [j for j in range(self.dim) if j not in pivset]
        t = len(free)

        def project_coords(x: Matrix):
            vec = self._as_coordvec(self.coords(x))
            res, _ = icoords.reduce(vec)
            if icoords.bit:
                return [(res >> j) & 1 for j in free]
            return [res[j] for j in free]

        # class representatives: basis elements at the free coordinates
        reps = [self.basis[j] for j in free]

        def class_matrix(x: Matrix) -> Matrix:
            cols = [project_coords(x * r) for r in reps]
            out = Matrix.zero(prime, t, t)
            for j, col in enumerate(cols):
                for i, c in enumerate(col):
                    if c:
                        out.set(i, j, c)
            return out

        qmap = QuotientMap(class_matrix, project_coords, reps)
        gens = [(la, class_matrix(g)) for la, g in self.generators]
        qunit = class_matrix(self.unit)
        q = MatrixAlgebra.span(
            prime, t, qunit, gens, [class_matrix(b) for b in self.basis], verify=False
        )
        if not (qunit * qunit == qunit and q.dim == t):
            raise InvariantViolation("quotient algebra is not unital of the right size")
        return q, qmap

    def _as_coordvec(self, coords):
        if self.prime_field.p == 2:
            acc = 0
            for j, c in enumerate(coords):
                if c:
                    acc |= 1 << j
            return acc
        return list(coords)

    # -- local decomposition --------------------------------------------------------

    def decompose_local(self) -> list["LocalFactor"]:
        """Orthogonal idempotent decomposition into local factors.

        The returned idempotents are orthogonal, sum to the unit, and
        each cut is certified local via the fixed space of Frobenius.
        """
        if self.dim == 0:
            return []
        work = [_Cut(self, self.unit)]
        done = []
        while work:
            cut = work.pop()
            split = cut.find_split()
            if split is None:
                done.append(cut)
            else:
                work.extend(split)
        factors = [LocalFactor(self, cut.idempotent, cut.algebra) for cut in done]
        # canonical order: residue degree, then residues of the labelled
        # generators, then the idempotent itself
        def key(f):
            ev = tuple(f.residue(g) for _, g in self.generators)
            flat = flatten_matrix(f.idempotent)
            return (f.residue_degree, ev, flat if isinstance(flat, int) else tuple(flat))

        factors.sort(key=key)
        total = Matrix.zero(self.field, self.n, self.n)
        for i, f in enumerate(factors):
            for g in factors[i + 1 :]:
                if not (f.idempotent * g.idempotent).is_zero():
                    raise InvariantViolation("idempotents are not orthogonal")
            total = total + f.idempotent
        if total != self.unit:
            raise InvariantViolation("idempotents do not sum to the unit")
        return factors


class QuotientMap:
    """Projection onto a quotient algebra: callable for the class matrix,
    `.coords` for class coordinates, `.reps` for coordinate-basis lifts."""

    def __init__(self, class_matrix, coords, reps):
        self._cm = class_matrix
        self.coords = coords
        self.reps = reps

    def __call__(self, x: Matrix) -> Matrix:
        return self._cm(x)


class _Cut:
    """A pending idempotent cut during local decomposition."""

    def __init__(self, parent: MatrixAlgebra, idempotent: Matrix):
        self.parent = parent
        self.idempotent = idempotent
        self.algebra = parent.localize(idempotent)

    def find_split(self):
        alg = self.algebra
        # pass 1: labelled generators, then basis elements
        for x in [g for _, g in alg.generators] + alg.basis:
            split = self._split_along(x)
            if split is not None:
                return split
        # pass 2: certify with the Frobenius fixed space x -> x^p
        fixed = self._frobenius_fixed_space()
        if len(fixed) <= 1:
            return None
        for x in fixed:
            split = self._split_along(x)
            if split is not None:
                return split
        raise InvariantViolation("Frobenius fixed space claims a split that no element realizes")

    def _split_along(self, x: Matrix):
        alg = self.algebra
        m = alg.min_poly(x)
        factors = m.factor()
        if len(factors) < 2:
            return None
        # pairwise coprime primary parts give the idempotents by CRT
        parts = [_poly_power(g, e) for g, e in factors]
        cuts = []
        for part in parts:
            rest = Poly.one(alg.prime_field)
            for other in parts:
                if other is not part:
                    rest = rest * other
            inv = _poly_inverse_mod(rest, part)
            idem_poly = (inv * rest) % m
            e_new = alg.eval_poly(idem_poly, x)
            if not alg.is_idempotent(e_new):
                raise InvariantViolation("CRT element is not idempotent")
            cuts.append(_Cut(self.parent, e_new))
        return cuts

    def _frobenius_fixed_space(self) -> list[Matrix]:
        alg = self.algebra
        prime = alg.prime_field
        d = alg.dim
        frob = Matrix.zero(prime, d, d)
        for j, b in enumerate(alg.basis):
            col = alg.coords(b.pow(prime.p))
            for i, c in enumerate(col):
                if c:
                    frob.set(i, j, c)
        delta = frob - Matrix.identity(prime, d)
        ker = delta.kernel()
        return [alg.element(ker.row(i)) for i in range(ker.nrows)]


def _poly_power(g: Poly, e: int) -> Poly:
    out = Poly.one(g.field)
    for _ in range(e):
        out = out * g
    return out


def _poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m for coprime a, m (extended Euclid)."""
    F = a.field
    r0, r1 = m, a % m
    s0, s1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ValueError("arguments are not coprime")
    return s0.scale(F.inv(r0.coeffs[0])) % m


class LocalFactor:
    """A local factor of a commutative algebra: idempotent, maximal ideal,
    residue field and the projection onto the factor."""

    def __init__(self, parent: MatrixAlgebra, idempotent: Matrix, algebra: MatrixAlgebra):
        self.parent = parent
        self.idempotent = idempotent
        self.algebra = algebra
        self._max_ideal = None
        self._residue = None

    def project(self, x: Matrix) -> Matrix:
        """Projection parent -> factor, x -> e*x."""
        return self.idempotent * x

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def max_ideal(self) -> list[Matrix]:
        """Basis of the maximal ideal: the nilradical, the kernel of a
        high enough Frobenius iterate."""
        if self._max_ideal is None:
            alg = self.algebra
            prime = alg.prime_field
            d = alg.dim
            if d == 0:
                self._max_ideal = []
                return self._max_ideal
            power = 1
            while prime.p**power < max(d, 2):
                power += 1
            frob = Matrix.zero(prime, d, d)
            for j, b in enumerate(alg.basis):
                col = alg.coords(b.pow(prime.p**power))
                for i, c in enumerate(col):
                    if c:
                        frob.set(i, j, c)
            ker = frob.kernel()
            self._max_ideal = [alg.element(ker.row(i)) for i in range(ker.nrows)]
            for x in self._max_ideal:
                if not x.pow(max(1, d)).is_zero():
                    raise InvariantViolation("maximal ideal contains a non-nilpotent")
        return self._max_ideal

    @property
    def residue_degree(self) -> int:
        return self.dim - len(self.max_ideal)

    @property
    def residue_field(self) -> FiniteField:
        return self._residue_data()[0]

    def residue(self, x: Matrix) -> int:
        """Image of e*x in the residue field, canonically embedded in GF(p^e)."""
        _, to_res = self._residue_data()
        return to_res(self.project(x))

    def _residue_data(self):
        if self._residue is None:
            self._residue = _build_residue_map(self)
        return self._residue

    def is_gorenstein(self) -> bool:
        """True iff the socle is one-dimensional over the residue field.

        Equivalently the linear dual is free of rank one, so this is the
        duality criterion for the factor.
        """
        alg = self.algebra
        if alg.dim == 0:
            raise ValueError("the zero algebra has no local structure")
        mbasis = self.max_ideal
        if not mbasis:
            return True  # a field
        prime = alg.prime_field
        stacked = None
        for m in mbasis:
            rep = alg.regular_rep(m)
            stacked = rep if stacked is None else stacked.stack(rep)
        socle_dim = stacked.kernel().nrows
        return socle_dim == self.residue_degree

    def max_ideal_nilpotency(self) -> int:
        """Least d with (max ideal)^d = 0."""
        alg = self.algebra
        if not self.max_ideal:
            return 1
        d = 1
        current = list(self.max_ideal)  # spans m^d
        while True:
            nxt_ech = Echelon(alg.prime_field, alg._width)
            nxt = []
            for x in current:
                for m in self.max_ideal:
                    prod = x * m
                    if not prod.is_zero() and nxt_ech.insert(flatten_matrix(prod)) is not None:
                        nxt.append(prod)
            if not nxt:
                return d + 1
            current = nxt
            d += 1
            if d > alg.dim:
                raise InvariantViolation("maximal ideal fails to be nilpotent")

    def structure_descriptor(self) -> str:
        """Readable shape tag, e.g. 'GF(2)[x]/(x^2)' for the dual numbers."""
        p = self.algebra.prime_field.p
        e = self.residue_degree
        base = f"GF({p})" if e == 1 else f"GF({p}^{e})"
        mdim = len(self.max_ideal)
        if mdim == 0:
            return base
        if self.max_ideal_nilpotency() == 2 and mdim == e:
            return f"{base}[x]/(x^2)"
        return f"local(dim={self.dim}, residue={base}, m_dim={mdim})"


def _build_residue_map(factor: LocalFactor):
    alg = factor.algebra
    prime = alg.prime_field
    ideal = AlgebraIdeal(alg, factor.max_ideal, check=False)
    quot, project = alg.quotient(ideal)
    e = quot.dim
    K = FiniteField(prime.p, e) if e > 1 else prime
    if e == 1:
        unit_q = project(alg.unit)

        def to_res(x: Matrix) -> int:
            cls = project(x)
            # scalar multiple of the unit class
            for i in range(quot.n):
                for j in range(quot.n):
                    u = unit_q.get(i, j)
                    if u:
                        return prime.div(cls.get(i, j), u)
            raise InvariantViolation("unit class vanishes in residue field")

        return K, to_res
    # primitive element: first quotient element whose minimal polynomial
    # has full degree
    t = None
    for cand in quot.basis:
        if quot.min_poly(cand).degree == e:
            t = cand
            break
    if t is None:
        for coords in _coord_sweep(prime, quot.dim):
            cand = quot.element(coords)
            if quot.min_poly(cand).degree == e:
                t = cand
                break
    if t is None:
        raise InvariantViolation("residue algebra has no primitive element; not a field?")
    mt = quot.min_poly(t)
    root = min(Poly(K, mt.coeffs).roots())
    # express residue classes against the power basis of t
    powers = []
    acc = quot.unit
    for _ in range(e):
        powers.append(acc)
        acc = acc * t

    def to_res(x: Matrix) -> int:
        return _solve_power_coords(prime, K, powers, project(x), root)

    return K, to_res


def _solve_power_coords(prime, K, powers, cls, root):
    rows = [flatten_matrix(p) for p in powers]
    target = flatten_matrix(cls)
    coeffs = _solve_row_combination(prime, rows, target)
    if coeffs is None:
        raise InvariantViolation("residue class escapes the power basis")
    val = 0
    rpow = 1
    for c in coeffs:
        if c:
            val = K.add(val, K.mul(c, rpow))
        rpow = K.mul(rpow, root)
    return val


def _solve_row_combination(prime, rows, target):
    """Coefficients expressing target as a combination of rows, or None.

    Forward elimination with multiplier tracking; free coefficients stay
    zero, so the answer is the first solution of the echelonized system.
    """
    bit = prime.p == 2
    stored = []
    pivs = []
    pivvals = []
    combos = []
    for idx, r in enumerate(rows):
        res = r
        combo = [0] * len(rows)
        combo[idx] = 1
        res, combo = _reduce_with_combos(prime, bit, res, combo, stored, pivs, pivvals, combos)
        if (res == 0) if bit else all(c == 0 for c in res):
            continue
        p = (res & -res).bit_length() - 1 if bit else next(j for j, c in enumerate(res) if c)
        stored.append(res)
        pivs.append(p)
        pivvals.append(1 if bit else res[p])
        combos.append(combo)
    res = target
    combo = [0] * len(rows)
    res, combo = _reduce_with_combos(prime, bit, res, combo, stored, pivs, pivvals, combos)
    if (res == 0) if bit else all(c == 0 for c in res):
        return [prime.neg(c) for c in combo]
    return None


def _reduce_with_combos(prime, bit, res, combo, stored, pivs, pivvals, combos):
    combo = list(combo)
    if bit:
        for r, p, rc in zip(stored, pivs, combos):
            if (res >> p) & 1:
                res ^= r
                for d, cd in enumerate(rc):
                    if cd:
                        combo[d] ^= cd
    else:
        res = list(res)
        for r, p, pv, rc in zip(stored, pivs, pivvals, combos):
            c = res[p]
            if c:
                f = prime.div(c, pv)
                res = [prime.sub(a, prime.mul(f, b)) for a, b in zip(res, r)]
                for d, cd in enumerate(rc):
                    if cd:
                        combo[d] = prime.sub(combo[d], prime.mul(f, cd))
    return res, combo


def _coord_sweep(prime, dim):
    """Deterministic sweep of coordinate vectors beyond the basis ones."""
    total = prime.p**dim
    for v in range(total):
        coords = []
        x = v
        for _ in range(dim):
            coords.append(x % prime.p)
            x //= prime.p
        yield coords


class AlgebraIdeal:
    """A subspace of an algebra closed under multiplication by it."""

    def __init__(self, parent: MatrixAlgebra, basis_mats, check=True):
        self.parent = parent
        prime = parent.prime_field
        self._ech = Echelon(prime, parent._width)
        self.basis = []
        for m in basis_mats:
            if self._ech.insert(flatten_matrix(m)) is not None:
                self.basis.append(m)
        self.basis = [
            unflatten_matrix(parent.field, parent.n, parent.n, r)
            for r in self._ech.row_vectors()
        ]
        if check:
            self.verify_closed_under(parent)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        return self._ech.contains(flatten_matrix(m))

    def verify_closed_under(self, algebra: MatrixAlgebra, extra=()):
        mults = [g for _, g in algebra.generators] + list(extra)
        for v in self.basis:
            for g in mults:
                if not self.contains(g * v):
                    raise NotAnIdealError("subspace is not stable under the algebra")


def ideal_from_intersection(a_prime: MatrixAlgebra, u: Matrix) -> AlgebraIdeal:
    """The ideal span(A') n u*span(A'), verified stable under A' and u.

    Stability under u with u*x landing back in the intersection is the
    computational content of the ideal property; failure signals an
    upstream inconsistency rather than user error.
    """
    for la, g in a_prime.generators:
        if not u.commutes_with(g):
            raise NonCommutingError("u", la)
    left = a_prime._ech.as_matrix()
    right_rows = [flatten_matrix(u * b) for b in a_prime.basis]
    prime = a_prime.prime_field
    right = Matrix.zero(prime, len(right_rows), a_prime._width)
    for i, r in enumerate(right_rows):
        if prime.p == 2:
            right._rows[i] = r
        else:
            right._rows[i] = list(r)
    inter = intersect_rowspaces(left, right)
    mats = [
        unflatten_matrix(a_prime.field, a_prime.n, a_prime.n, inter._rows[i])
        for i in range(inter.nrows)
    ]
    ideal = AlgebraIdeal(a_prime, mats, check=False)
    try:
        ideal.verify_closed_under(a_prime, extra=[u])
    except NotAnIdealError as exc:
        raise IdealClosureError(str(exc)) from None
    return ideal


def solve_up_relation(a_prime: MatrixAlgebra, u: Matrix):
    """Elements T, D of the algebra with u^2 - T*u + D = 0, exactly.

    Requires u^2 to lie in span + u*span (checked implicitly: the linear
    system is otherwise inconsistent and NoSolutionError is raised).
    When underdetermined, the first solution of the echelonized system
    is returned; only its image modulo the doubling ideal is canonical.
    """
    prime = a_prime.prime_field
    rows = [flatten_matrix(b * u) for b in a_prime.basis]
    rows += [flatten_matrix(-b) for b in a_prime.basis]
    target = flatten_matrix(u * u)
    sol = _solve_row_combination(prime, rows, target)
    if sol is None:
        raise NoSolutionError("u^2 does not lie in span + u*span")
    d = a_prime.dim
    t_elt = a_prime.element(sol[:d])
    d_elt = a_prime.element(sol[d:])
    lhs = u * u - t_elt * u + d_elt
    if not lhs.is_zero():
        raise NoSolutionError("solved relation fails to annihilate")
    return t_elt, d_elt


def is_gorenstein(factor: LocalFactor) -> bool:
    return factor.is_gorenstein()
