"""Manin-symbol presentation of modular symbols over finite fields.

A space is generated by symbols (c:d) x X^i Y^(k-2-i) indexed by scaling
orbits of primitive vectors mod N, with the two- and three-term Manin
relations imposed directly over the coefficient field.  Two collapse
modes cover everything downstream:

* character mode: scaling by all of (Z/N)^x is identified with
  multiplier given by the character (the standard weight-k level-N
  space with nebentypus);
* diamond mode: only -1 (with multiplier (-1)^k) and an optional
  subgroup are collapsed, so the residual diamond action stays visible
  and simultaneous eigencomponents can be split off afterwards.

Hecke operators act through Merel's determinant-n matrix family
{[a,b;c,d] : ad-bc = n, a>b>=0, d>c>=0}, which acts directly on Manin
symbols with no reduction to a fundamental domain; terms whose bottom
row fails primitivity mod N are dropped.  Boundary symbols follow the
usual endpoint evaluation, with cusp classes tracked together with the
scaling multipliers so that classes forced to vanish are recognized.

In characteristic 2 the relations are imposed with no sign quotient;
the complex-conjugation involution is unipotent there (trivial on the
semisimplification, so no sign decomposition exists), which
`star_involution` makes checkable.  Scaling orbits whose two-term
relation degenerates mod 2 are integral torsion classes, not cusp
forms; the cuspidal module is the boundary kernel taken modulo them.
"""

from __future__ import annotations

from math import gcd

from .dirichlet import DirichletCharacter, unit_group
from .dims import index_gamma0, sturm_bound
from .errors import ConfigError, InvariantViolation, WeightOneError
from .field import FiniteField, is_prime
from .matrix import Echelon, Matrix


class BadLevelError(ConfigError):
    pass


class CharacterParityError(ConfigError):
    pass


class BadUnitError(WeightOneError):
    pass


def merel_matrices(n: int):
    """Merel's matrices of determinant n: a > b >= 0, d > c >= 0."""
    for a in range(1, n + 1):
        lo = (n + a - 1) // a
        for d in range(lo, n + 2 - a):
            bc = a * d - n
            if bc == 0:
                for b in range(a):
                    yield (a, b, 0, d)
                for c in range(1, d):
                    yield (a, 0, c, d)
            else:
                for b in range((bc - 1) // (d - 1) + 1, a):
                    if bc % b == 0:
                        yield (a, b, bc // b, d)


def lift_to_sl2(c: int, d: int, n: int):
    """A matrix [[a, b], [c0, d0]] in SL2(Z) with (c0, d0) = (c, d) mod n."""
    c %= n
    d %= n
    if gcd(gcd(c, d), n) != 1:
        raise ValueError("vector is not primitive mod n")
    c0 = c if c else n
    d0 = d
    t = 0
    while gcd(c0, d0) != 1:
        d0 = d + t * n
        t += 1
        if t > 4 * n:
            raise AssertionError("lift search failed")  # unreachable
    # a*d0 - b*c0 = 1
    x, y = _gcdex(d0, c0)
    return x, -y, c0, d0


def _gcdex(a, b):
    """(x, y) with a*x + b*y = gcd; gcd must be 1 here."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


# -- scaling-orbit indices ------------------------------------------------------


class _PrimeP1Index:
    """Projective line over Z/N for prime N with character multipliers."""

    def __init__(self, n: int, character: DirichletCharacter):
        self.n = n
        self.character = character
        self.reps = [(0, 1)] + [(1, x) for x in range(n)]
        self._inv = [0] * n
        for a in range(1, n):
            self._inv[a] = pow(a, n - 2, n)

    @property
    def n_orbits(self):
        return len(self.reps)

    def live(self, oid):
        return True

    def normalize(self, c: int, d: int):
        n = self.n
        c %= n
        d %= n
        if c == 0:
            if d == 0:
                return None
            return 0, self.character(d)
        return 1 + d * self._inv[c] % n, self.character(c)


def close_multiplier_group(n: int, field: FiniteField, gen_multipliers: dict[int, int]):
    """Close a unit->multiplier assignment under multiplication mod n.

    An element reachable with two different multipliers means the
    requested collapse is inconsistent as a character of the subgroup.
    """
    elems = {1 % n: 1}
    frontier = [1 % n]
    while frontier:
        new = []
        for a in frontier:
            for g, m in gen_multipliers.items():
                b = a * g % n
                v = field.mul(elems[a], m)
                if b not in elems:
                    elems[b] = v
                    new.append(b)
                elif elems[b] != v:
                    raise ConfigError(
                        "inconsistent scaling multipliers on the collapse subgroup"
                    )
        frontier = new
    return elems


class _TableIndex:
    """Scaling orbits of primitive pairs mod N under a multiplier group.

    The group is a subgroup of (Z/N)^x given with a multiplier for each
    element; orbits whose internal identifications force the symbol to
    vanish are kept in the rep list but marked dead.
    """

    def __init__(self, n: int, field: FiniteField, gen_multipliers: dict[int, int]):
        self.n = n
        self.field = field
        self.group = close_multiplier_group(n, field, gen_multipliers)
        self.reps = []
        self._dead = []
        self._where: dict[tuple[int, int], tuple[int, int]] = {}
        self._build()

    def _build(self):
        n = self.n
        F = self.field
        seen = self._where
        for c in range(n):
            for d in range(n):
                if (c, d) in seen:
                    continue
                if gcd(gcd(c, d), n) != 1:
                    continue
                oid = len(self.reps)
                orbit = {}
                dead = False
                for lam, mult in self.group.items():
                    w = (lam * c % n, lam * d % n)
                    if w in orbit and orbit[w] != mult:
                        dead = True
                    orbit[w] = mult
                rep = min(orbit)
                # re-express multipliers relative to the chosen rep:
                # w = lam*(c,d) and rep = lam0*(c,d) give w = (lam/lam0)*rep
                base = orbit[rep]
                for w, mult in orbit.items():
                    seen[w] = (oid, F.div(mult, base))
                self.reps.append(rep)
                self._dead.append(dead)

    @property
    def n_orbits(self):
        return len(self.reps)

    def live(self, oid):
        return not self._dead[oid]

    def normalize(self, c: int, d: int):
        n = self.n
        w = (c % n, d % n)
        if w not in self._where:
            return None
        oid, mult = self._where[w]
        if self._dead[oid]:
            return None
        return oid, mult


# -- cusp classes ----------------------------------------------------------------


class _CuspClasses:
    """Boundary classes: primitive vectors modulo translations, the
    scaling subgroup and sign, with multipliers tracked.

    A class whose own orbit carries two different multipliers to the
    same normal form is zero in the boundary space.
    """

    def __init__(self, n, k, field, gen_multipliers: dict[int, int]):
        self.n = n
        self.k = k
        self.field = field
        self.group = close_multiplier_group(n, field, gen_multipliers)
        self.sign_mult = field.scalar((-1) ** k)
        self._classes: dict = {}
        self._cache: dict = {}

    def resolve(self, x: int, y: int):
        """(class index, coefficient) for the vector, or None if dead."""
        n = self.n
        key0 = (x % n, y % n)
        if key0 in self._cache:
            return self._cache[key0]
        F = self.field
        found: dict = {}
        for lam, mult in self.group.items():
            lam_inv = pow(lam, -1, n)
            for s, smult in ((1, 1), (-1, self.sign_mult)):
                c2 = s * lam * y % n
                g2 = gcd(c2, n) if c2 else n
                a2 = (s * lam_inv * x) % g2
                key = (c2, a2)
                m = F.mul(mult, smult)
                if key in found and found[key] != m:
                    self._cache[key0] = None
                    return None
                found[key] = m
        canon = min(found)
        base = found[canon]  # [canon] = base * [v]
        if canon not in self._classes:
            self._classes[canon] = len(self._classes)
        out = (self._classes[canon], F.inv(base))
        self._cache[key0] = out
        return out

    @property
    def count(self):
        return len(self._classes)


# -- the space itself ---------------------------------------------------------------


class ManinSymbolSpace:
    """Weight-k level-N Manin symbols over a finite field.

    Built either on a character (full scaling collapse) or with the
    diamond action kept alive; see the module docstring.  Exposes the
    relation quotient, the boundary map, the cuspidal subspace, and
    cached Hecke/diamond operators restricted to the cuspidal subspace.
    """

    def __init__(self, level, weight, field, character=None, diamond_subgroup=None):
        if level < 5:
            raise BadLevelError(f"level {level} < 5")
        if level % field.p == 0:
            raise BadLevelError(f"characteristic {field.p} divides the level {level}")
        if weight < 2:
            raise ValueError("weight must be at least 2")
        if character is not None:
            if character.modulus != level:
                if level % character.modulus == 0:
                    character = _induce(character, level)
                else:
                    raise ConfigError("character modulus must divide the level")
            if character.field != field:
                raise ConfigError("character values must live in the coefficient field")
            want = field.scalar((-1) ** weight)
            if character.parity_value() != want:
                raise CharacterParityError(
                    f"character parity {character.parity_value()} != (-1)^{weight}"
                )
        self.level = level
        self.weight = weight
        self.field = field
        self.character = character
        self.diamond_subgroup = list(diamond_subgroup or []) if character is None else None
        self._operators: dict[str, Matrix] = {}
        self._operators_full: dict[str, Matrix] = {}
        self._build()

    # -- presentation ------------------------------------------------------------

    def _scaling_group(self) -> dict[int, int]:
        n = self.level
        F = self.field
        if self.character is not None:
            return {g: self.character(g) for g, _ in unit_group(n)}
        sign = F.scalar((-1) ** self.weight)
        group = {(-1) % n: sign}
        for h in self.diamond_subgroup:
            if gcd(h, n) != 1:
                raise BadUnitError(f"{h} is not a unit mod {n}")
            group[h % n] = 1
        return group

    def _build(self):
        n, k, F = self.level, self.weight, self.field
        if self.character is not None and is_prime(n):
            self.index = _PrimeP1Index(n, self.character)
        else:
            self.index = _TableIndex(n, F, self._scaling_group())
        self._bit = F.p == 2 and F.k == 1
        nmono = k - 1
        live = [oid for oid in range(self.index.n_orbits) if self.index.live(oid)]
        self._col = {}
        self.gens = []
        for i in range(nmono):
            for oid in live:
                self._col[(i, oid)] = len(self.gens)
                self.gens.append((i, oid))
        ngens = len(self.gens)

        sigma = (0, -1, 1, 0)
        tau = (0, -1, 1, -1)
        tau2 = (-1, 1, -1, 0)
        pa_sigma = self._poly_action(sigma)
        pa_tau = self._poly_action(tau)
        pa_tau2 = self._poly_action(tau2)

        ech = Echelon(FiniteField(F.p) if self._bit else F, ngens)
        rel_rows = []
        for oid in range(self.index.n_orbits):
            c, d = self.index.reps[oid]
            for i in range(nmono):
                row = self._new_vec(ngens)
                row = self._add_term(row, i, c, d, 1)
                row = self._act_into(row, i, c, d, sigma, pa_sigma, 1)
                rel_rows.append(row)
                row = self._new_vec(ngens)
                row = self._add_term(row, i, c, d, 1)
                row = self._act_into(row, i, c, d, tau, pa_tau, 1)
                row = self._act_into(row, i, c, d, tau2, pa_tau2, 1)
                rel_rows.append(row)
        for row in rel_rows:
            ech.insert(row)
        self.relation_matrix = _vec_rows_to_matrix(F, rel_rows, ngens, self._bit)

        pivset = set(ech.pivots)
        self.free = [j for j in range(ngens) if j not in pivset]
        self.dim = len(self.free)
        free_pos = {j: t for t, j in enumerate(self.free)}
        # expression of every generator in quotient coordinates
        self.gen_to_free = [self._new_vec(self.dim) for _ in range(ngens)]
        for j, t in free_pos.items():
            self.gen_to_free[j] = self._unit_vec(self.dim, t, 1)
        for row, p in zip(ech.rows, ech.pivots):
            vec = self._new_vec(self.dim)
            for j, t in free_pos.items():
                c = ((row >> j) & 1) if self._bit else row[j]
                if c:
                    vec = self._vec_add_scaled(vec, self._unit_vec(self.dim, t, 1), F.neg(c))
            self.gen_to_free[p] = vec

        self._build_boundary()
        self._build_cuspidal()

    def _build_boundary(self):
        n, k, F = self.level, self.weight, self.field
        cusps = _CuspClasses(n, k, F, self._scaling_group())
        cols = []
        for j in self.free:
            i, oid = self.gens[j]
            c, d = self.index.reps[oid]
            a, b, c0, d0 = lift_to_sl2(c, d, n)
            terms = []
            if i == 0:  # P(0,1) = 1
                terms.append(((b, d0), 1))
            if i == k - 2:  # P(1,0) = 1
                terms.append(((a, c0), F.neg(1)))
            cols.append(terms)
        resolved = [
            [(cusps.resolve(x, y), coef) for (x, y), coef in terms] for terms in cols
        ]
        self.cusp_count = cusps.count
        delta = Matrix.zero(F, cusps.count, self.dim)
        for col, terms in enumerate(resolved):
            for hit, coef in terms:
                if hit is None:
                    continue
                idx, mult = hit
                delta.set(idx, col, F.add(delta.get(idx, col), F.mul(mult, coef)))
        self.boundary_matrix = delta

    def _torsion_classes(self):
        """Images of generators that are integrally torsion.

        In characteristic 2 at weight 2, a scaling orbit fixed by the
        two-term relation with multiplier 1 carries the relation 2x = 0:
        invisible over the field, but x is a torsion class of the
        integral presentation, not a cusp form.  Higher even weights in
        characteristic 2 never occur downstream (the embedded weight is
        p = 2 itself), and odd characteristic only loses three-term
        relation content at p = 3 on levels with order-3 elliptic
        fixed points, which the dimension validation catches.
        """
        F = self.field
        k = self.weight
        if F.p != 2 or k != 2:
            return []
        out = []
        n = self.level
        for oid in range(self.index.n_orbits):
            if not self.index.live(oid):
                continue
            c, d = self.index.reps[oid]
            hit = self.index.normalize(d % n, (-c) % n)
            if hit is None:
                continue
            oid2, mult = hit
            if oid2 == oid and mult == 1:
                out.append(self.gen_to_free[self._col[(0, oid)]])
        return out

    def _build_cuspidal(self):
        torsion = self._torsion_classes()
        vech = Echelon(self.field, self.dim)
        for v in torsion:
            vech.insert(v)
        self._torsion = vech
        ker = self.boundary_matrix.kernel()
        kech = Echelon(self.field, self.dim)
        for i in range(ker.nrows):
            kech.insert(ker._rows[i] if self._bit else ker.row(i))
        for v in vech.rows:
            if not kech.contains(v):
                raise InvariantViolation("torsion class has nonzero boundary")
        # cuspidal classes: the boundary kernel modulo the torsion span;
        # representatives are reduced mod the torsion echelon first so
        # coordinates are canonical
        basis = Echelon(self.field, self.dim)
        for row in kech.rows:
            res, _ = vech.reduce(row)
            if not vech.iszero(res):
                basis.insert(res)
        self._cuspidal = basis
        self.torsion_rank = vech.dim
        self.cuspidal_rank = basis.dim

    @property
    def cuspidal_dimension(self):
        return self.cuspidal_rank

    def cuspidal_basis(self) -> Matrix:
        return self._cuspidal.as_matrix()

    # -- vector helpers (bit masks over GF(2), lists otherwise) --------------------

    def _new_vec(self, width):
        return 0 if self._bit else [0] * width

    def _unit_vec(self, width, pos, val):
        if self._bit:
            return 1 << pos
        v = [0] * width
        v[pos] = val
        return v

    def _vec_add_scaled(self, v, w, coef):
        if self._bit:
            return v ^ w if coef else v
        F = self.field
        return [F.add(a, F.mul(coef, b)) for a, b in zip(v, w)]

    def _add_term(self, row, i, c, d, coef):
        hit = self.index.normalize(c, d)
        if hit is None:
            return row
        oid, mult = hit
        F = self.field
        total = F.mul(coef, mult)
        if not total:
            return row
        j = self._col.get((i, oid))
        if j is None:
            return row
        return self._vec_add_scaled(row, self._unit_vec(self._width_gens(), j, 1), total)

    def _width_gens(self):
        return len(self.gens)

    def _act_into(self, row, i, c, d, h, pa, coef):
        """row += coef * (symbol (i,(c,d)) acted by the integer matrix h)."""
        a, b, c2, d2 = h
        n = self.level
        F = self.field
        cc = (c * a + d * c2) % n
        dd = (c * b + d * d2) % n
        if gcd(gcd(cc, dd), n) != 1:
            return row
        hit = self.index.normalize(cc, dd)
        if hit is None:
            return row
        oid, mult = hit
        base = F.mul(coef, mult)
        if not base:
            return row
        for j in range(self.weight - 1):
            pc = pa[i][j]
            if not pc:
                continue
            col = self._col.get((j, oid))
            if col is None:
                continue
            row = self._vec_add_scaled(row, self._unit_vec(self._width_gens(), col, 1), F.mul(base, pc))
        return row

    def _poly_action(self, h):
        """Coefficient table of X^i Y^(k-2-i) -> (aX+bY)^i (cX+dY)^(k-2-i)."""
        a, b, c, d = h
        F = self.field
        k = self.weight
        deg = k - 2
        a, b, c, d = (F.scalar(a), F.scalar(b), F.scalar(c), F.scalar(d))
        # rows of Pascal-style expansions for (aX+bY)^i and (cX+dY)^i
        top = [[1]]
        bot = [[1]]
        for i in range(deg):
            pt = [0] * (i + 2)
            pb = [0] * (i + 2)
            for j, v in enumerate(top[i]):
                pt[j] = F.add(pt[j], F.mul(b, v))
                pt[j + 1] = F.add(pt[j + 1], F.mul(a, v))
            for j, v in enumerate(bot[i]):
                pb[j] = F.add(pb[j], F.mul(d, v))
                pb[j + 1] = F.add(pb[j + 1], F.mul(c, v))
            top.append(pt)
            bot.append(pb)
        pa = [[0] * (k - 1) for _ in range(k - 1)]
        for i in range(k - 1):
            t = top[i]
            u = bot[deg - i]
            for j1, v1 in enumerate(t):
                if not v1:
                    continue
                for j2, v2 in enumerate(u):
                    if v2:
                        j = j1 + j2
                        pa[i][j] = F.add(pa[i][j], F.mul(v1, v2))
        return pa

    # -- operators -------------------------------------------------------------------

    def _apply_on_quotient(self, mats) -> Matrix:
        """Operator sum over integer matrices, on quotient coordinates."""
        F = self.field
        pa_cache = {}
        cols = []
        for t in range(self.dim):
            j = self.free[t]
            i, oid = self.gens[j]
            c, d = self.index.reps[oid]
            acc = self._new_vec(self.dim)
            for h in mats:
                if h not in pa_cache:
                    pa_cache[h] = self._poly_action(h)
                acc = self._act_quotient(acc, i, c, d, h, pa_cache[h])
            cols.append(acc)
        out = Matrix.zero(F, self.dim, self.dim)
        for t, col in enumerate(cols):
            if self._bit:
                for r in _bit_positions(col):
                    out.set(r, t, 1)
            else:
                for r, v in enumerate(col):
                    if v:
                        out.set(r, t, v)
        return out

    def _act_quotient(self, acc, i, c, d, h, pa):
        a, b, c2, d2 = h
        n = self.level
        F = self.field
        cc = (c * a + d * c2) % n
        dd = (c * b + d * d2) % n
        if gcd(gcd(cc, dd), n) != 1:
            return acc
        hit = self.index.normalize(cc, dd)
        if hit is None:
            return acc
        oid, mult = hit
        for j in range(self.weight - 1):
            pc = pa[i][j]
            if not pc:
                continue
            col = self._col.get((j, oid))
            if col is None:
                continue
            coef = F.mul(mult, pc)
            if coef:
                acc = self._vec_add_scaled(acc, self.gen_to_free[col], coef)
        return acc

    def _apply_full_to_vec(self, full: Matrix, v):
        image = full.mat_vec(
            [(v >> j) & 1 for j in range(self.dim)] if self._bit else list(v)
        )
        if not self._bit:
            return image
        vec = 0
        for r, c in enumerate(image):
            if c:
                vec |= 1 << r
        return vec

    def _restrict_cuspidal(self, full: Matrix, what: str) -> Matrix:
        ech = self._cuspidal
        for trow in self._torsion.rows:
            img = self._apply_full_to_vec(full, trow)
            if not self._torsion.contains(img):
                raise InvariantViolation(f"{what} does not preserve the torsion classes")
        s = ech.dim
        out = Matrix.zero(self.field, s, s)
        for idx in range(s):
            vec = self._apply_full_to_vec(full, ech.rows[idx])
            vec, _ = self._torsion.reduce(vec)
            try:
                coords = ech.coords(vec)
            except ValueError:
                raise InvariantViolation(
                    f"{what} does not preserve the cuspidal subspace"
                ) from None
            for r, c in enumerate(coords):
                if c:
                    out.set(r, idx, c)
        return out

    def hecke_full(self, n: int) -> Matrix:
        label = f"T_{n}"
        if label not in self._operators_full:
            self._operators_full[label] = self._apply_on_quotient(list(merel_matrices(n)))
        return self._operators_full[label]

    def hecke_matrix(self, n: int) -> Matrix:
        """T_n on the cuspidal subspace; commutes with everything cached."""
        if n < 1:
            raise ValueError("Hecke index must be positive")
        label = f"T_{n}"
        if label not in self._operators:
            mat = self._restrict_cuspidal(self.hecke_full(n), label)
            self._check_commutes(label, mat)
            self._operators[label] = mat
        return self._operators[label]

    def diamond_full(self, a: int) -> Matrix:
        """<a> on the quotient: the scaling permutation (c:d) -> (ac:ad)."""
        n = self.level
        if gcd(a, n) != 1:
            raise BadUnitError(f"{a} is not a unit mod {n}")
        F = self.field
        cols = []
        for t in range(self.dim):
            j = self.free[t]
            i, oid = self.gens[j]
            c, d = self.index.reps[oid]
            acc = self._new_vec(self.dim)
            hit = self.index.normalize(a * c % n, a * d % n)
            if hit is not None:
                oid2, mult = hit
                col = self._col.get((i, oid2))
                if col is not None and mult:
                    acc = self._vec_add_scaled(acc, self.gen_to_free[col], mult)
            cols.append(acc)
        out = Matrix.zero(F, self.dim, self.dim)
        for t, col in enumerate(cols):
            if self._bit:
                for r in _bit_positions(col):
                    out.set(r, t, 1)
            else:
                for r, v in enumerate(col):
                    if v:
                        out.set(r, t, v)
        return out

    def diamond_matrix(self, a: int) -> Matrix:
        """The diamond operator on the cuspidal subspace."""
        n = self.level
        if gcd(a, n) != 1:
            raise BadUnitError(f"{a} is not a unit mod {n}")
        label = f"diamond_{a % n}"
        if label not in self._operators:
            mat = self._restrict_cuspidal(self.diamond_full(a), label)
            self._check_commutes(label, mat)
            self._operators[label] = mat
        return self._operators[label]

    def star_involution(self) -> Matrix:
        """Complex conjugation, acting on symbols by (c:d) -> (-c:d), X -> -X.

        In characteristic 2 this squares to the identity with no sign
        eigenspaces to split: it is unipotent (possibly nontrivial), so
        the space is kept whole rather than passing to a quotient.
        """
        full = self._apply_on_quotient([(-1, 0, 0, 1)])
        return self._restrict_cuspidal(full, "star")

    def _check_commutes(self, label, mat):
        for other_label, other in self._operators.items():
            if not mat.commutes_with(other):
                raise InvariantViolation(f"{label} does not commute with {other_label}")

    def operator_labels(self):
        return sorted(self._operators)

    def sturm_bound(self) -> int:
        idx = index_gamma0(self.level)
        if self.character is None:
            units = 1
            for _, o in unit_group(self.level):
                units *= o
            # index of the collapsed subgroup with -1 included
            collapsed = _group_size(self.level, self._scaling_group())
            idx *= units // collapsed
        return sturm_bound(self.level, self.weight, group_index=idx)

    def describe(self) -> dict:
        return {
            "level": self.level,
            "weight": self.weight,
            "field": self.field.describe(),
            "character": None if self.character is None else self.character.describe(),
            "dim": self.dim,
            "cuspidal_dim": self.cuspidal_rank,
            "cusps": self.cusp_count,
        }


def _group_size(n, gen_multipliers) -> int:
    elems = {1 % n}
    frontier = [1 % n]
    while frontier:
        new = []
        for a in frontier:
            for g in gen_multipliers:
                b = a * g % n
                if b not in elems:
                    elems.add(b)
                    new.append(b)
        frontier = new
    return len(elems)


def _bit_positions(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _vec_rows_to_matrix(field, rows, width, bit):
    m = Matrix.zero(FiniteField(field.p) if bit else field, len(rows), width)
    for i, r in enumerate(rows):
        if bit:
            m._rows[i] = r
        else:
            m._rows[i] = list(r)
    return m


def _induce(chi: DirichletCharacter, level: int) -> DirichletCharacter:
    gens = unit_group(level)
    return DirichletCharacter(level, chi.field, [chi(g) for g, _ in gens])


# -- spec-facing wrappers ------------------------------------------------------------


def build_space(level, weight, character, field) -> ManinSymbolSpace:
    return ManinSymbolSpace(level, weight, field, character=character)


def hecke_matrix(space: ManinSymbolSpace, n: int) -> Matrix:
    return space.hecke_matrix(n)


def diamond_matrix(space: ManinSymbolSpace, a: int) -> Matrix:
    return space.diamond_matrix(a)


class ComponentSpace:
    """A simultaneous diamond eigencomponent of a diamond-mode space."""

    def __init__(self, parent: ManinSymbolSpace, character: DirichletCharacter):
        self.parent = parent
        self.character = character
        F = parent.field
        if character.field != F:
            raise ConfigError("component character must live in the space's field")
        # the collapsed scalings must already act as the character says
        for lam, mult in parent._scaling_group().items():
            if character(lam) != mult:
                raise ConfigError(
                    "character disagrees with the multipliers already collapsed"
                )
        if parent.torsion_rank:
            raise InvariantViolation(
                "component splitting on a space with torsion classes is not supported"
            )
        stacked = None
        for g, _ in unit_group(parent.level):
            dm = parent.diamond_full(g)
            shift = dm - Matrix.identity(dm.field, dm.nrows).scale(character(g))
            stacked = shift if stacked is None else stacked.stack(shift)
        if stacked is None:  # trivial unit group cannot happen for N >= 5
            raise InvariantViolation("empty diamond generator list")
        ker = stacked.kernel()
        self.basis = ker
        self.dim = ker.nrows
        cusp = parent.cuspidal_basis()
        from .matrix import intersect_rowspaces

        self.cuspidal = intersect_rowspaces(ker, cusp)
        self.cuspidal_dim = self.cuspidal.rank()
        self._ech = Echelon(ker.field, parent.dim)
        for i in range(self.cuspidal.nrows):
            self._ech.insert(self.cuspidal._rows[i] if parent._bit else self.cuspidal.row(i))

    def hecke_matrix(self, n: int) -> Matrix:
        """T_n restricted to the cuspidal part of the component."""
        full = self.parent.hecke_full(n)
        ech = self._ech
        s = ech.dim
        out = Matrix.zero(ech.field, s, s)
        for idx in range(s):
            v = ech.rows[idx]
            vlist = [(v >> j) & 1 for j in range(self.parent.dim)] if self.parent._bit else list(v)
            image = full.mat_vec(vlist)
            if self.parent._bit:
                vec = 0
                for r, c in enumerate(image):
                    if c:
                        vec |= 1 << r
            else:
                vec = image
            try:
                coords = ech.coords(vec)
            except ValueError:
                raise InvariantViolation("component is not Hecke-stable") from None
            for r, c in enumerate(coords):
                if c:
                    out.set(r, idx, c)
        return out


def character_component(space: ManinSymbolSpace, character: DirichletCharacter):
    """Subspace where every diamond operator acts by the character.

    On a space already collapsed along the full unit group this is the
    whole space (for the matching character); on a diamond-mode space it
    cuts the simultaneous eigencomponent.
    """
    if space.character is not None:
        if character.values_on_gens != space.character.values_on_gens:
            raise ConfigError("space was built with a different character")
        return space
    return ComponentSpace(space, character)
