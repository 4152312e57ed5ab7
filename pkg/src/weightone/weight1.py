"""Weight-one Hecke algebras inside weight p, and their verification.

Weight-1 cusp forms over GF(p^m) embed twice into weight p (once with
unchanged q-expansion, once through the p-power map), so the weight-p
cuspidal Hecke algebra T, its prime-to-p subalgebra T', and the p-th
operator U determine the weight-1 algebra: with I = T' n U*T',

* the quotient T'/I localized at a maximal ideal coming from weight 1
  is the weight-1 local algebra;
* T/I at such an ideal is free of rank two over it, with U acting in
  block form [[T_p, -<p>], [1, 0]];
* U satisfies U^2 - T*U + D = 0 with T, D in T', and (T mod m', D mod
  m') = (a_p, eps(p)) for the weight-1 eigensystem.

This module builds those objects from a weight-p Manin symbol space,
classifies the maximal ideals (comes-from-weight-1, ordinary,
p-distinguished, Eisenstein-suspect), constructs the explicit doubling
isomorphism as exact matrix identities, and packages a report.  The
algebra-theoretic route (quotient by I) is primary; the q-expansion
route (kernel of coefficient-killing, dimension comparisons) runs as an
independent cross-check.

Everything is generated by Hecke operators at primes up to the weight-p
Sturm bound; weight 1 has no Sturm bound of its own in this setup, and
that inheritance is recorded in every report.
"""

from __future__ import annotations

from .algebra import (
    AlgebraIdeal,
    LocalFactor,
    MatrixAlgebra,
    QuotientMap,
    ideal_from_intersection,
    solve_up_relation,
)
from .dims import classical_cusp_dim, sturm_bound
from .dirichlet import DirichletCharacter
from .errors import ConfigError, InvariantViolation, WeightOneError
from .field import FiniteField, is_prime
from .matrix import Echelon, Matrix, flatten_matrix
from .modsym import ManinSymbolSpace
from .poly import Poly
from .qexp import (
    MissingOperatorError,
    QExpansion,
    dual_qexpansions,
    frobenius_twist,
    hecke_element,
    prime_to_p_rank,
    theta_kernel,
)


class RamifiedPrimeError(WeightOneError):
    pass


class DoublingFailure(InvariantViolation):
    def __init__(self, witness, detail=""):
        super().__init__(f"doubling isomorphism failed at {witness}: {detail}")
        self.witness = witness


def primes_up_to(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]


class AssertionLog:
    """Named invariant checks executed during a run, with outcomes."""

    def __init__(self):
        self.entries: list[tuple[str, bool]] = []

    def check(self, name: str, ok: bool, detail: str = ""):
        self.entries.append((name, bool(ok)))
        if not ok:
            raise InvariantViolation(f"invariant {name} failed: {detail}")

    def as_list(self):
        return [{"name": n, "ok": ok} for n, ok in self.entries]


class EigenSystem:
    """Residues of the Hecke operators at one maximal ideal."""

    def __init__(self, level, weight, residue_field, values, character=None):
        self.level = level
        self.weight = weight
        self.residue_field = residue_field
        self.values = dict(values)  # prime -> canonical residue int
        self.character = character

    def a(self, ell: int) -> int:
        return self.values[ell]

    def describe(self):
        return {
            "level": self.level,
            "weight": self.weight,
            "residue_field": self.residue_field.describe(),
            "a": {str(ell): v for ell, v in sorted(self.values.items())},
        }


def weight1_hecke_algebra(tp_prime: MatrixAlgebra, up: Matrix, *, weight: int,
                          level: int, character: DirichletCharacter | None):
    """The weight-one quotient (T1, I, projection) of a prime-to-p algebra.

    T1 = tp_prime / (tp_prime n up*tp_prime), with labels carried over
    and the weight-1 T_p adjoined as the image of the solved T from the
    quadratic relation for up.  Adjoining is checked not to enlarge the
    algebra, and the image of T is checked to be independent of the
    choice of solution when the relation is underdetermined.
    """
    ideal = ideal_from_intersection(tp_prime, up)
    t1, qmap = tp_prime.quotient(ideal)
    t_el, d_el = solve_up_relation(tp_prime, up)
    t_img = qmap(t_el)
    before = t1.dim
    if not t1.contains(t_img):
        raise InvariantViolation("weight-1 T_p image escapes the quotient algebra")
    t1.adjoin_label(f"T_{tp_prime.field.p}", t_img)
    if t1.dim != before:
        raise InvariantViolation("adjoining the weight-1 T_p enlarged the algebra")
    other = _second_solution(tp_prime, up, t_el, d_el)
    if other is not None and qmap(other[0]) != t_img:
        raise InvariantViolation("weight-1 T_p depends on the choice of solution")
    return t1, ideal, qmap, (t_el, d_el)


def _second_solution(tp_prime, up, t_el, d_el):
    """A different (T, D) solving the quadratic relation, if one exists.

    Homogeneous solutions are pairs (h, h*up) with h and h*up both in
    the algebra span; any nonzero h gives one.
    """
    ech = tp_prime.span_echelon()
    prime = tp_prime.prime_field
    rows = []
    for b in tp_prime.basis:
        res, _ = ech.reduce(flatten_matrix(b * up))
        rows.append(res)
    width = tp_prime._width
    m = Matrix.zero(prime, len(rows), width)
    for i, r in enumerate(rows):
        if prime.p == 2:
            m._rows[i] = r
        else:
            m._rows[i] = list(r)
    ker = m.transpose().kernel()  # left kernel: row combinations vanishing
    if ker.nrows == 0:
        return None
    h = tp_prime.element(ker.row(0))
    if h.is_zero():
        return None
    return t_el + h, d_el + h * up


def charpoly_mod_max(t1_local: LocalFactor, t_p_el: Matrix, dp_el: Matrix) -> Poly:
    """X^2 - a_p X + eps(p) over the residue field of the local algebra."""
    K = t1_local.residue_field
    a = t1_local.residue(t_p_el)
    e = t1_local.residue(dp_el)
    return Poly(K, [e, K.neg(a), 1])


class MaximalIdealRecord:
    """Everything the run learns about one maximal ideal of T'."""

    def __init__(self, index, factor: LocalFactor):
        self.index = index
        self.factor = factor
        self.eigen: EigenSystem | None = None
        self.eisenstein_suspect = False
        self.comes_from_weight1 = False
        self.ordinary = None
        self.p_distinguished = None
        self.ideals_above = None
        self.ideals_above_geometric = None
        self.dim_tp_local = None
        self.weight1 = None  # Weight1Data


class Weight1Data:
    def __init__(self):
        self.t1 = None
        self.t1_local = None
        self.ideal_dim = None
        self.dim = None
        self.residue_field = None
        self.descriptor = None
        self.a_p = None
        self.charpoly_p = None
        self.doubling = None
        self.qmap = None
        self.tp_solution = None


class WeightOneRun:
    """One full computation for a level, prime and character component."""

    def __init__(self, level: int, p: int, character: DirichletCharacter | None = None,
                 precision: int | None = None, space: ManinSymbolSpace | None = None,
                 log=None):
        if not is_prime(p):
            raise ConfigError(f"{p} is not prime")
        if level % p == 0 or level < 5:
            raise ConfigError(f"level {level} invalid for p = {p}")
        self.level = level
        self.p = p
        field = character.field if character is not None else FiniteField(p)
        self.field = field
        if character is None:
            character = DirichletCharacter.trivial(level, field)
        self.character = character
        self.weight = p
        self.bound = precision if precision is not None else sturm_bound(level, self.weight)
        if precision is not None and precision < sturm_bound(level, self.weight):
            raise ConfigError("precision below the weight-p Sturm bound")
        self.space = space
        self.log = log if log is not None else (lambda **kw: None)
        self.assertions = AssertionLog()
        self.records: list[MaximalIdealRecord] = []
        self.t_full = None
        self.t_prime = None
        self.up = None
        self.ideal_global = None
        self.theta_dim = None

    # -- pipeline ------------------------------------------------------------

    def run(self):
        self._build_space()
        self._build_algebras()
        if self.t_full.dim == 0:
            self.log(step="empty", detail="no cusp forms at this level/character")
            return self
        self._global_checks()
        self._decompose()
        self._weight1_processing()
        self._qexp_cross_checks()
        return self

    def _build_space(self):
        if self.space is None:
            self.log(step="space", level=self.level, weight=self.weight)
            self.space = ManinSymbolSpace(self.level, self.weight, self.field,
                                          character=self.character)
        sp = self.space
        self.log(step="space_built", dim=sp.dim, cuspidal=sp.cuspidal_dimension,
                 torsion=sp.torsion_rank)

    def _build_algebras(self):
        sp = self.space
        self.gen_primes = primes_up_to(self.bound)
        mats = {ell: sp.hecke_matrix(ell) for ell in self.gen_primes}
        self.log(step="hecke_ops", count=len(mats), bound=self.bound)
        labelled = [(f"T_{ell}", mats[ell]) for ell in self.gen_primes]
        if sp.cuspidal_dimension == 0:
            unit = Matrix.identity(self.field, 0)
            self.t_full = MatrixAlgebra.span(self.field, 0, unit, [], [unit], verify=False)
            self.t_prime = self.t_full
            self.up = unit
            self.assertions.check("dimension_vs_classical",
                                  classical_cusp_dim(self.level, self.weight, self.character) == 0,
                                  "empty space but classical dimension nonzero")
            return
        unit = Matrix.identity(self.field, self.space.cuspidal_dimension)
        self.t_full = MatrixAlgebra.close(labelled, unit=unit)
        self.t_prime = MatrixAlgebra.close(
            [(la, m) for la, m in labelled if la != f"T_{self.p}"], unit=unit
        )
        self.up = mats[self.p]
        classical = classical_cusp_dim(self.level, self.weight, self.character)
        self.assertions.check(
            "dimension_vs_classical",
            self.t_full.dim == classical,
            f"computed Hecke algebra has dimension {self.t_full.dim}, "
            f"classical dimension is {classical}; the mod-p symbol space "
            f"does not faithfully present the Hecke module",
        )
        self.log(step="algebras", dim_t=self.t_full.dim, dim_t_prime=self.t_prime.dim)

    def _global_checks(self):
        prime = self.t_prime.prime_field
        ech = Echelon(prime, self.t_prime._width)
        for b in self.t_prime.basis:
            ech.insert(flatten_matrix(b))
        for b in self.t_prime.basis:
            ech.insert(flatten_matrix(self.up * b))
        self.assertions.check(
            "span_t_prime_plus_up_t_prime_is_t",
            ech.dim == self.t_full.dim,
            f"{ech.dim} != {self.t_full.dim}",
        )
        self.ideal_global = ideal_from_intersection(self.t_prime, self.up)
        self.t_el, self.d_el = solve_up_relation(self.t_prime, self.up)
        self.assertions.check(
            "up_quadratic_relation",
            (self.up * self.up - self.t_el * self.up + self.d_el).is_zero(),
            "solved relation does not annihilate",
        )
        self.log(step="ideal", dim=self.ideal_global.dim)

    def _decompose(self):
        factors = self.t_prime.decompose_local()
        self.log(step="decompose", factors=len(factors))
        for idx, f in enumerate(factors):
            rec = MaximalIdealRecord(idx, f)
            rec.eigen = self._eigen_system(f, self.gen_primes)
            rec.eisenstein_suspect = self._is_eisenstein(f)
            e = f.idempotent
            loc_full = self.t_full.localize(e)
            rec.dim_tp_local = loc_full.dim
            rec.comes_from_weight1 = loc_full.dim > f.dim
            min_u = loc_full.min_poly(e * self.up)
            rec.ordinary = bool(min_u.coeffs) and min_u.coeffs[0] != 0
            above = loc_full.decompose_local()
            rec.ideals_above = len(above)
            rec.ideals_above_geometric = sum(
                g.residue_degree // f.residue_degree for g in above
            )
            if rec.comes_from_weight1:
                self.assertions.check(
                    f"weight1_implies_ordinary_m{idx}", rec.ordinary,
                    "a weight-one ideal must be ordinary",
                )
                self.assertions.check(
                    f"ideals_above_in_one_two_m{idx}",
                    rec.ideals_above_geometric in (1, 2),
                    f"got {rec.ideals_above_geometric}",
                )
            self.records.append(rec)

    def _eigen_system(self, f: LocalFactor, primes) -> EigenSystem:
        # residues of the prime-to-p operators; a_p belongs to the
        # weight-1 side and is attached there
        vals = {}
        for ell in primes:
            if ell == self.p:
                continue
            vals[ell] = f.residue(self.t_prime.generator(f"T_{ell}"))
        return EigenSystem(self.level, self.weight, f.residue_field, vals,
                           self.character)

    def _is_eisenstein(self, f: LocalFactor) -> bool:
        F = self.field
        for ell in self.gen_primes:
            if ell == self.p or self.level % ell == 0:
                continue
            val = F.mul(F.pow(F.scalar(ell), self.weight - 1), self.character(ell))
            shifted = self.t_prime.generator(f"T_{ell}") - self.t_prime.unit.scale(
                F.add(1, val)
            )
            if f.residue(shifted) != 0:
                return False
        return True

    def _weight1_processing(self):
        for rec in self.records:
            if not rec.comes_from_weight1 or rec.eisenstein_suspect:
                continue
            self._process_weight1_ideal(rec)

    def _process_weight1_ideal(self, rec: MaximalIdealRecord):
        idx = rec.index
        f = rec.factor
        e = f.idempotent
        loc_full = self.t_full.localize(e)
        loc_prime = self.t_prime.localize(e)
        u_loc = e * self.up
        ideal_loc = ideal_from_intersection(loc_prime, u_loc)
        # localizing the global intersection ideal gives the same span
        local_from_global = Echelon(loc_prime.prime_field, loc_prime._width)
        for b in self.ideal_global.basis:
            local_from_global.insert(flatten_matrix(e * b))
        self.assertions.check(
            f"ideal_localizes_m{idx}",
            local_from_global.dim == ideal_loc.dim
            and all(ideal_loc.contains(e * b) for b in self.ideal_global.basis),
            "e*I != (eT') n (eU)(eT')",
        )
        self.assertions.check(
            f"doubling_dimension_m{idx}",
            loc_full.dim - ideal_loc.dim == 2 * (loc_prime.dim - ideal_loc.dim),
            f"dim T/I = {loc_full.dim - ideal_loc.dim}, "
            f"dim T1 = {loc_prime.dim - ideal_loc.dim}",
        )
        t1, ideal1, qmap1, (t_sol, d_sol) = weight1_hecke_algebra(
            loc_prime, u_loc, weight=self.weight, level=self.level,
            character=self.character,
        )
        data = Weight1Data()
        data.t1 = t1
        data.qmap = qmap1
        data.tp_solution = (t_sol, d_sol)
        data.ideal_dim = ideal1.dim
        data.dim = t1.dim
        t1_factors = t1.decompose_local()
        self.assertions.check(
            f"t1_local_m{idx}", len(t1_factors) == 1,
            f"weight-1 algebra at one maximal ideal splits into {len(t1_factors)}",
        )
        data.t1_local = t1_factors[0]
        data.residue_field = data.t1_local.residue_field
        data.descriptor = data.t1_local.structure_descriptor()
        # a_p and the characteristic polynomial at p
        dp_el = qmap1(loc_prime.unit.scale(self.character(self.p)))
        tp_gen = t1.generator(f"T_{self.p}")
        data.a_p = data.t1_local.residue(tp_gen)
        data.charpoly_p = charpoly_mod_max(data.t1_local, tp_gen, dp_el)
        a_p_alt = f.residue(t_sol)
        self.assertions.check(
            f"a_p_consistent_m{idx}",
            data.a_p == a_p_alt,
            f"{data.a_p} != {a_p_alt}",
        )
        d_res = f.residue(d_sol)
        eps_p_res = f.residue(self.t_prime.unit.scale(self.character(self.p)))
        self.assertions.check(
            f"relation_residues_m{idx}",
            d_res == eps_p_res,
            f"D mod m' = {d_res} is not eps(p) = {eps_p_res}",
        )
        # p-distinguished: a_p^2 != 4 eps(p), evaluated in the residue field
        K = f.residue_field
        four_eps = K.mul(K.scalar(4), eps_p_res)
        rec.p_distinguished = K.mul(a_p_alt, a_p_alt) != four_eps
        self.assertions.check(
            f"p_distinguished_vs_ideals_above_m{idx}",
            rec.p_distinguished == (rec.ideals_above_geometric == 2),
            f"distinguished={rec.p_distinguished}, "
            f"geometric count={rec.ideals_above_geometric}",
        )
        data.doubling = self.verify_doubling(rec, loc_full, loc_prime, u_loc,
                                             ideal_loc, t1, qmap1)
        rec.weight1 = data
        self.log(step="weight1_ideal", index=idx, dim_t1=t1.dim,
                 descriptor=data.descriptor)

    # -- the doubling isomorphism --------------------------------------------------

    def verify_doubling(self, rec, loc_full, loc_prime, u_loc, ideal_loc,
                        t1, qmap1):
        """Explicit isomorphism T/I = T1 + T1 with the exact U block.

        The map sends (v1, v2) to the class of U*v1 - <p>*v2; in the
        resulting coordinates U must be exactly [[T_p, -<p>], [1, 0]]
        and every prime-to-p operator exactly diagonal.
        """
        idx = rec.index
        e = rec.factor.idempotent
        ideal_in_full = AlgebraIdeal(loc_full, ideal_loc.basis)
        quot, qmap_full = loc_full.quotient(ideal_in_full)
        t1_dim = t1.dim
        if quot.n != 2 * t1_dim:
            raise DoublingFailure("dimension", f"dim T/I = {quot.n} != 2*{t1_dim}")
        eps_p = self.character(self.p)
        reps = qmap1.reps
        prime = loc_full.prime_field
        cols = []
        for r in reps:
            cols.append(qmap_full.coords(u_loc * r))
        for r in reps:
            cols.append(qmap_full.coords(r.scale(self.field.neg(eps_p))))
        X = Matrix.zero(prime, quot.n, 2 * t1_dim)
        for j, col in enumerate(cols):
            for i, c in enumerate(col):
                if c:
                    X.set(i, j, c)
        try:
            Xinv = X.inverse()
        except ValueError:
            raise DoublingFailure("basis", "doubled images are dependent") from None
        m_tp = t1.generator(f"T_{self.p}")
        m_dp = qmap1(loc_prime.unit.scale(eps_p))
        expected_u = _block2(prime, t1_dim, m_tp, -m_dp, Matrix.identity(prime, t1_dim),
                             Matrix.zero(prime, t1_dim, t1_dim))
        a_u = Xinv * qmap_full(u_loc) * X
        if a_u != expected_u:
            raise DoublingFailure("U_p", "block form is not [[T_p, -<p>], [1, 0]]")
        blocks_checked = []
        for ell in self.gen_primes:
            if ell == self.p:
                continue
            op = e * self.t_prime.generator(f"T_{ell}")
            m1 = qmap1(op)
            expected = _block2(prime, t1_dim, m1, Matrix.zero(prime, t1_dim, t1_dim),
                               Matrix.zero(prime, t1_dim, t1_dim), m1)
            got = Xinv * qmap_full(op) * X
            if got != expected:
                raise DoublingFailure(f"T_{ell}", "fails to act diagonally")
            blocks_checked.append(f"T_{ell}")
        self.assertions.check(f"doubling_blocks_m{idx}", True)
        return {
            "dim_t1": t1_dim,
            "dim_quotient": quot.n,
            "iso_columns": [_vec_ints(c) for c in cols],
            "u_block": expected_u.rows(),
            "diagonal_blocks_checked": blocks_checked,
        }

    # -- q-expansion cross checks ----------------------------------------------------

    def _qexp_cross_checks(self):
        total_w1 = sum(r.weight1.dim for r in self.records if r.weight1)
        qexps = dual_qexpansions(self.t_full, self.bound, self.weight, self.level,
                                 self.character)
        self.assertions.check(
            "dual_count_equals_dim", len(qexps) == self.t_full.dim, ""
        )
        combos, _ = theta_kernel(qexps)
        self.theta_dim = len(combos)
        self.assertions.check(
            "theta_kernel_dim_equals_dim_t1",
            self.theta_dim == total_w1,
            f"theta kernel has dimension {self.theta_dim}, "
            f"weight-1 algebras total {total_w1}",
        )
        # exact U action on the dual: no precision loss
        prime = self.t_full.prime_field
        lu = self.t_full.regular_rep(self.up).transpose()
        img = Echelon(prime, self.t_full.dim)
        for c in combos:
            image = lu.mat_vec(list(c))
            if prime.p == 2:
                vec = 0
                for j, v in enumerate(image):
                    if v:
                        vec |= 1 << j
                img.insert(vec)
            else:
                img.insert(image)
        self.assertions.check(
            "up_theta_kernel_dim",
            img.dim == total_w1,
            f"U*theta kernel has dimension {img.dim}",
        )
        # injectivity of prime-to-p coefficients on weight-1 expansions
        for rec in self.records:
            if not rec.weight1:
                continue
            t1 = rec.weight1.t1
            w1_qexps = dual_qexpansions(t1, self.bound, 1, self.level, self.character)
            self.assertions.check(
                f"prime_to_p_injectivity_m{rec.index}",
                prime_to_p_rank(w1_qexps) == t1.dim,
                "prime-to-p coefficient projection is not injective",
            )

    # -- eigenvalues beyond the generator bound ---------------------------------------

    def eigenvalue(self, rec: MaximalIdealRecord, ell: int) -> int:
        """a_ell at this maximal ideal, any prime ell not dividing pN."""
        if ell in rec.eigen.values:
            return rec.eigen.values[ell]
        if ell == self.p:
            if rec.weight1 is None:
                raise WeightOneError("a_p is only defined at weight-1 ideals here")
            return rec.weight1.a_p
        mat = self.space.hecke_matrix(ell)
        val = rec.factor.residue(mat)
        rec.eigen.values[ell] = val
        return val

    def charpoly_frobenius(self, rec: MaximalIdealRecord, ell: int):
        """X^2 - T_ell X + <ell> with coefficients in the weight-1 algebra.

        Returned as (linear coefficient element, constant element, reduced
        polynomial over the residue field); works at ell = p through the
        adjoined weight-1 T_p.
        """
        if self.level % ell == 0:
            raise RamifiedPrimeError(f"{ell} divides the level")
        if rec.weight1 is None:
            raise WeightOneError("characteristic polynomials live at weight-1 ideals")
        t1 = rec.weight1.t1
        f = rec.weight1.t1_local
        if t1.has_label(f"T_{ell}"):
            t_coeff = t1.generator(f"T_{ell}")
        else:
            e = rec.factor.idempotent
            t_coeff = rec.weight1.qmap(e * self.space.hecke_matrix(ell))
        e = rec.factor.idempotent
        d_coeff = rec.weight1.qmap(e.scale(self.character(ell)))
        K = f.residue_field
        reduced = Poly(K, [f.residue(d_coeff), K.neg(f.residue(t_coeff)), 1])
        return t_coeff, d_coeff, reduced

    # -- report ------------------------------------------------------------------------

    def weight1_records(self):
        return [r for r in self.records if r.weight1 is not None]

    def report(self) -> dict:
        sp = self.space
        ideals = []
        for rec in self.records:
            entry = {
                "index": rec.index,
                "residue_field": rec.factor.residue_field.describe(),
                "eigenvalues": {str(l): v for l, v in sorted(rec.eigen.values.items())},
                "eisenstein_suspect": rec.eisenstein_suspect,
                "comes_from_weight1": rec.comes_from_weight1,
                "ordinary": rec.ordinary,
                "dim_t_prime_local": rec.factor.dim,
                "dim_t_local": rec.dim_tp_local,
                "ideals_above": rec.ideals_above,
                "ideals_above_geometric": rec.ideals_above_geometric,
            }
            if rec.weight1 is not None:
                w = rec.weight1
                entry["weight1"] = {
                    "dim_t1": w.dim,
                    "dim_ideal": w.ideal_dim,
                    "residue_field": w.residue_field.describe(),
                    "local_structure": w.descriptor,
                    "a_p": w.a_p,
                    "p_distinguished": rec.p_distinguished,
                    "char_poly_at_p": list(w.charpoly_p.coeffs),
                    "doubling": {
                        "dim_t1": w.doubling["dim_t1"],
                        "dim_quotient": w.doubling["dim_quotient"],
                        "u_block": w.doubling["u_block"],
                        "diagonal_blocks_checked": w.doubling["diagonal_blocks_checked"],
                    },
                }
            ideals.append(entry)
        return {
            "schema_version": 1,
            "level": self.level,
            "prime": self.p,
            "weight_embedded": self.weight,
            "character": self.character.describe(),
            "precision": self.bound,
            "generator_bound": self.bound,
            "generator_bound_note": (
                "weight-1 data inherits the weight-p Sturm bound through the quotient"
            ),
            "space": {
                "dim": sp.dim,
                "cuspidal_dim": sp.cuspidal_dimension,
                "torsion_rank": sp.torsion_rank,
                "cusps": sp.cusp_count,
            },
            "algebra": {
                "dim_t": self.t_full.dim,
                "dim_t_prime": self.t_prime.dim,
                "dim_ideal": self.ideal_global.dim if self.ideal_global else 0,
                "theta_kernel_dim": self.theta_dim,
            },
            "maximal_ideals": ideals,
            "weight1_count": len(self.weight1_records()),
            "assertions": self.assertions.as_list(),
        }


def _block2(field, t, a, b, c, d):
    out = Matrix.zero(field, 2 * t, 2 * t)
    for (bi, bj), m in (((0, 0), a), ((0, 1), b), ((1, 0), c), ((1, 1), d)):
        for i in range(t):
            for j in range(t):
                v = m.get(i, j)
                if v:
                    out.set(bi * t + i, bj * t + j, v)
    return out


def _vec_ints(v):
    return [int(c) for c in v]
