"""Structure-constant packages: algebras, coalgebras, bialgebras, Hopf algebras.

Everything is finite data in a fixed basis: a multiplication is the table
mult[i][j] = e_i e_j (a dict vector), a comultiplication the list of dict
vectors over pair indices j*dim + k.  Checkers return Reports; constructors
return packages that pass their advertised level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidGroupTable, NoSolution
from .fields import QQ
from .linalg import Mat, solve_linear, tensor_vec, vadd, vaxpy, vscale
from .reports import Report, Witness, render_vec


@dataclass(frozen=True)
class AlgebraSC:
    dim: int
    mult: tuple  # mult[i][j]: Vec
    unit: dict  # Vec
    names: tuple = None

    def mul(self, u, v):
        out = {}
        for i, cu in u.items():
            row = self.mult[i]
            for j, cv in v.items():
                vaxpy(out, cu * cv, row[j])
        return out

    def mul_many(self, *vs):
        out = vs[0]
        for v in vs[1:]:
            out = self.mul(out, v)
        return out

    def unit_vec(self):
        return dict(self.unit)

    def basis_vec(self, i):
        one = _one_of(self)
        return {i: one}

    def name(self, i):
        if self.names and i < len(self.names):
            return self.names[i]
        return "e%d" % i

    def render(self, v):
        return render_vec(v, self.names)


@dataclass(frozen=True)
class CoalgebraSC:
    dim: int
    comult: tuple  # comult[i]: Vec over pair index j*dim + k
    counit: dict  # functional Vec
    names: tuple = None

    def delta(self, v):
        out = {}
        for i, c in v.items():
            vaxpy(out, c, self.comult[i])
        return out

    def delta_pairs(self, i):
        d = self.dim
        for jk, c in self.comult[i].items():
            yield jk // d, jk % d, c

    def eps(self, v):
        s = None
        for i, c in v.items():
            t = self.counit.get(i)
            if t:
                s = c * t if s is None else s + c * t
        return s if s is not None else 0

    def name(self, i):
        if self.names and i < len(self.names):
            return self.names[i]
        return "e%d" % i

    def render(self, v):
        return render_vec(v, self.names)


@dataclass(frozen=True)
class HopfPackage:
    algebra: AlgebraSC
    coalgebra: CoalgebraSC
    antipode: Mat = None

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("algebra dim %d != coalgebra dim %d" % (self.algebra.dim, self.coalgebra.dim))

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def names(self):
        return self.algebra.names

    def s(self, v):
        if self.antipode is None:
            raise DimensionMismatch("package has no antipode")
        return self.antipode.apply(v)

    def name(self, i):
        return self.algebra.name(i)

    def render(self, v):
        return render_vec(v, self.names)


@dataclass(frozen=True)
class Pairing:
    """Bilinear form <e_i, f_j> between a left and a right structure."""

    form: Mat  # nrows = left dim, ncols = right dim; entry(i, j) = <e_i, f_j>

    @property
    def left_dim(self):
        return self.form.nrows

    @property
    def right_dim(self):
        return self.form.ncols

    def value(self, i, j):
        c = self.form.entry(i, j)
        return c if c is not None else 0

    def eval(self, u, v):
        s = None
        for i, cu in u.items():
            for j, cv in v.items():
                c = self.form.entry(i, j)
                if c:
                    s = cu * cv * c if s is None else s + cu * cv * c
        return s if s is not None else 0


def _one_of(obj):
    src = obj.unit if isinstance(obj, AlgebraSC) else None
    if src:
        for c in src.values():
            return c / c
    return QQ.one()


def _one_of_coalg(c):
    for x in c.counit.values():
        if x:
            return x / x
    for row in c.comult:
        for x in row.values():
            if x:
                return x / x
    return QQ.one()


def _vec_of_index(i, one):
    return {i: one}


# ---------------------------------------------------------------------------
# predicates


def is_commutative(a):
    return all(a.mult[i][j] == a.mult[j][i] for i in range(a.dim) for j in range(a.dim))


def is_cocommutative(c):
    d = c.dim
    for i in range(d):
        flipped = {}
        for j, k, x in c.delta_pairs(i):
            flipped[k * d + j] = x
        if flipped != c.comult[i]:
            return False
    return True


def tensor_of_algebras(a, b, names=None):
    """Componentwise algebra structure on a (x) b."""
    db = b.dim
    dim = a.dim * db
    mult = []
    for i in range(dim):
        ia, ib = divmod(i, db)
        row = []
        for j in range(dim):
            ja, jb = divmod(j, db)
            row.append(tensor_vec(a.mult[ia][ja], b.mult[ib][jb], db))
        mult.append(tuple(row))
    unit = tensor_vec(a.unit, b.unit, db)
    if names is None and a.names and b.names:
        names = tuple("%s⊗%s" % (a.names[ia], b.names[ib]) for ia in range(a.dim) for ib in range(db))
    return AlgebraSC(dim, tuple(mult), unit, names)


# ---------------------------------------------------------------------------
# checkers


def check_algebra(a, report=None):
    rep = report or Report("algebra")
    one = _one_of(a)
    wit = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                lhs = a.mul(a.mult[i][j], {k: one})
                rhs = a.mul({i: one}, a.mult[j][k])
                if lhs != rhs:
                    wit.append(Witness((a.name(i), a.name(j), a.name(k)), a.render(lhs), a.render(rhs)))
    rep.add("algebra.associativity", wit)
    wit = []
    for i in range(a.dim):
        e = {i: one}
        left = a.mul(a.unit, e)
        right = a.mul(e, a.unit)
        if left != e or right != e:
            wit.append(Witness((a.name(i),), a.render(left), a.render(right)))
    rep.add("algebra.unit", wit)
    rep.flags["commutative"] = is_commutative(a)
    rep.dims.setdefault("algebra", a.dim)
    return rep


def check_coalgebra(c, report=None):
    rep = report or Report("coalgebra")
    d = c.dim
    one = _one_of_coalg(c)
    wit = []
    for i in range(d):
        out = {}
        for j, k, x in c.delta_pairs(i):
            e = c.counit.get(j)
            if e:
                vaxpy(out, x * e, {k: one})
        expected = {i: one}
        if out != expected:
            wit.append(Witness((c.name(i),), c.render(out), c.render(expected)))
    rep.add("coalgebra.counit_left", wit)
    wit = []
    for i in range(d):
        out = {}
        for j, k, x in c.delta_pairs(i):
            e = c.counit.get(k)
            if e:
                vaxpy(out, x * e, {j: one})
        expected = {i: one}
        if out != expected:
            wit.append(Witness((c.name(i),), c.render(out), c.render(expected)))
    rep.add("coalgebra.counit_right", wit)
    wit = []
    for i in range(d):
        lhs, rhs = {}, {}
        for j, k, x in c.delta_pairs(i):
            for a, b, y in c.delta_pairs(j):
                key = (a * d + b) * d + k
                s = lhs.get(key)
                s = x * y if s is None else s + x * y
                if s:
                    lhs[key] = s
                else:
                    lhs.pop(key, None)
            for a, b, y in c.delta_pairs(k):
                key = (j * d + a) * d + b
                s = rhs.get(key)
                s = x * y if s is None else s + x * y
                if s:
                    rhs[key] = s
                else:
                    rhs.pop(key, None)
        if lhs != rhs:
            wit.append(Witness((c.name(i),), "(Δ⊗I)Δ", "(I⊗Δ)Δ"))
    rep.add("coalgebra.coassociativity", wit)
    rep.flags["cocommutative"] = is_cocommutative(c)
    rep.dims.setdefault("coalgebra", d)
    return rep


def _delta_tensor_mul(p, u2, v2):
    """Product in H (x) H of two dict vectors over pair indices."""
    d = p.dim
    a = p.algebra
    out = {}
    for ij, cu in u2.items():
        i, j = divmod(ij, d)
        for kl, cv in v2.items():
            k, l = divmod(kl, d)
            vaxpy(out, cu * cv, tensor_vec(a.mult[i][k], a.mult[j][l], d))
    return out


def check_package(p, level="hopf"):
    """Check a package at one of the levels algebra|coalgebra|bialgebra|hopf."""
    if level not in ("algebra", "coalgebra", "bialgebra", "hopf"):
        raise ValueError("unknown level %r" % level)
    rep = Report("package:%s" % level)
    a, c = p.algebra, p.coalgebra
    one = _one_of(a)
    if level in ("algebra", "bialgebra", "hopf"):
        check_algebra(a, rep)
    if level in ("coalgebra", "bialgebra", "hopf"):
        check_coalgebra(c, rep)
    if level in ("bialgebra", "hopf"):
        wit = []
        for i in range(p.dim):
            for j in range(p.dim):
                prod = a.mult[i][j]
                lhs = c.delta(prod)
                rhs = _delta_tensor_mul(p, c.comult[i], c.comult[j])
                if lhs != rhs:
                    wit.append(Witness((p.name(i), p.name(j)), "Δ(xy)", "Δ(x)Δ(y)"))
        rep.add("bialgebra.comult_multiplicative", wit)
        wit = []
        if c.delta(a.unit) != tensor_vec(a.unit, a.unit, p.dim):
            wit.append(Witness(("1",), p.render(c.delta(a.unit)), "1⊗1"))
        rep.add("bialgebra.comult_unit", wit)
        wit = []
        for i in range(p.dim):
            for j in range(p.dim):
                lhs = c.eps(a.mult[i][j])
                rhs = c.eps({i: one}) * c.eps({j: one})
                if lhs != rhs:
                    wit.append(Witness((p.name(i), p.name(j)), str(lhs), str(rhs)))
        rep.add("bialgebra.counit_multiplicative", wit)
        wit = []
        if c.eps(a.unit) != one:
            wit.append(Witness(("1",), str(c.eps(a.unit)), "1"))
        rep.add("bialgebra.counit_unit", wit)
    if level == "hopf":
        if p.antipode is None:
            rep.add("hopf.antipode_present", [Witness((), "none", "antipode matrix")])
        else:
            wit = []
            for i in range(p.dim):
                out = {}
                for j, k, x in c.delta_pairs(i):
                    vaxpy(out, x, a.mul(p.antipode.col(j), {k: one}))
                expected = vscale(c.eps({i: one}), a.unit)
                if out != expected:
                    wit.append(Witness((p.name(i),), p.render(out), p.render(expected)))
            rep.add("hopf.antipode_left", wit)
            wit = []
            for i in range(p.dim):
                out = {}
                for j, k, x in c.delta_pairs(i):
                    vaxpy(out, x, a.mul({j: one}, p.antipode.col(k)))
                expected = vscale(c.eps({i: one}), a.unit)
                if out != expected:
                    wit.append(Witness((p.name(i),), p.render(out), p.render(expected)))
            rep.add("hopf.antipode_right", wit)
    rep.dims["dim"] = p.dim
    return rep


# ---------------------------------------------------------------------------
# constructors


def group_algebra(g, field=QQ):
    """kG: basis δ_u, δ_u δ_v = δ_uv, Δδ_u = δ_u⊗δ_u, S δ_u = δ_{u⁻¹}."""
    one = field.one()
    n = g.order
    names = tuple("δ_%s" % g.name(i) for i in range(n))
    mult = tuple(tuple({g.mul(i, j): one} for j in range(n)) for i in range(n))
    unit = {g.unit: one}
    comult = tuple({i * n + i: one} for i in range(n))
    counit = {i: one for i in range(n)}
    alg = AlgebraSC(n, mult, unit, names)
    coalg = CoalgebraSC(n, comult, counit, names)
    antipode = Mat.from_cols(n, [{g.inv[i]: one} for i in range(n)])
    return HopfPackage(alg, coalg, antipode)


def dual_group_hopf(g, field=QQ):
    """(kG)*: basis p_u, p_u p_v = δ_{u,v} p_u, Δp_u = Σ_{vw=u} p_v⊗p_w."""
    one = field.one()
    n = g.order
    names = tuple("p_%s" % g.name(i) for i in range(n))
    mult = tuple(tuple(({i: one} if i == j else {}) for j in range(n)) for i in range(n))
    unit = {i: one for i in range(n)}
    comult = []
    for u in range(n):
        pairs = {}
        for v in range(n):
            for w in range(n):
                if g.mul(v, w) == u:
                    pairs[v * n + w] = one
        comult.append(pairs)
    counit = {g.unit: one}
    alg = AlgebraSC(n, mult, unit, names)
    coalg = CoalgebraSC(n, tuple(comult), counit, names)
    antipode = Mat.from_cols(n, [{g.inv[i]: one} for i in range(n)])
    return HopfPackage(alg, coalg, antipode)


def canonical_group_pairing(g, field=QQ):
    """⟨δ_u, p_v⟩ = δ_{u,v} between kG and (kG)*."""
    return Pairing(Mat.identity(g.order, field.one()))


def function_algebra(n, field=QQ, names=None):
    """Fun(X, k) for |X| = n: orthogonal idempotents χ_x, unit Σ χ_x."""
    if n < 0:
        raise InvalidGroupTable("set size must be >= 0")
    one = field.one()
    if names is None:
        names = tuple("χ_%d" % (x + 1) for x in range(n))
    mult = tuple(tuple(({i: one} if i == j else {}) for j in range(n)) for i in range(n))
    unit = {i: one for i in range(n)}
    return AlgebraSC(n, mult, unit, tuple(names))


def grouplike_coalgebra(n, field=QQ, prefix="x"):
    """Coalgebra spanned by n grouplikes: Δx = x⊗x, ε(x) = 1."""
    one = field.one()
    names = tuple("%s%d" % (prefix, i + 1) for i in range(n))
    comult = tuple({i * n + i: one} for i in range(n))
    counit = {i: one for i in range(n)}
    return CoalgebraSC(n, comult, counit, names)


def matrix_algebra(n, field=QQ):
    """Full matrix algebra M_n(k) with basis e_{ij}; noncommutative for n >= 2."""
    one = field.one()
    dim = n * n
    names = tuple("E%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n))
    mult = []
    for a in range(dim):
        i, j = divmod(a, n)
        row = []
        for b in range(dim):
            k, l = divmod(b, n)
            row.append({i * n + l: one} if j == k else {})
        mult.append(tuple(row))
    unit = {i * n + i: one for i in range(n)}
    return AlgebraSC(dim, tuple(mult), unit, names)


# ---------------------------------------------------------------------------
# convolution and antipode solving


def convolution(f, g, c, a):
    """(f*g)(x) = f(x_(1)) g(x_(2)) for linear maps f, g: C -> A as matrices."""
    if f.ncols != c.dim or g.ncols != c.dim or f.nrows != a.dim or g.nrows != a.dim:
        raise DimensionMismatch("convolution shapes inconsistent")
    cols = []
    for i in range(c.dim):
        out = {}
        for j, k, x in c.delta_pairs(i):
            vaxpy(out, x, a.mul(f.col(j), g.col(k)))
        cols.append(out)
    return Mat.from_cols(a.dim, cols)


def convolution_unit(c, a):
    """η∘ε as a matrix C -> A."""
    cols = [vscale(c.counit.get(i, 0), a.unit) if c.counit.get(i) else {} for i in range(c.dim)]
    return Mat.from_cols(a.dim, cols)


def solve_antipode(p):
    """Solve the two convolution equations for S; raises NoSolution if none."""
    n = p.dim
    a, c = p.algebra, p.coalgebra
    one = _one_of(a)
    # unknowns S[i][j] indexed by i*n + j (S e_j = sum_i S[i][j] e_i)
    rows = []
    rhs = {}
    eqno = 0
    for which in ("left", "right"):
        for i in range(n):
            coeffs = [dict() for _ in range(n)]  # per target coordinate t
            for j, k, x in c.delta_pairs(i):
                if which == "left":
                    # S(e_j) e_k: coefficient of unknown S[m][j] is x * (e_m e_k)
                    for m in range(n):
                        for t, y in a.mult[m][k].items():
                            key = m * n + j
                            s = coeffs[t].get(key)
                            s = x * y if s is None else s + x * y
                            if s:
                                coeffs[t][key] = s
                            else:
                                coeffs[t].pop(key, None)
                else:
                    for m in range(n):
                        for t, y in a.mult[j][m].items():
                            key = m * n + k
                            s = coeffs[t].get(key)
                            s = x * y if s is None else s + x * y
                            if s:
                                coeffs[t][key] = s
                            else:
                                coeffs[t].pop(key, None)
            target = vscale(c.eps({i: one}), a.unit)
            for t in range(n):
                rows.append(coeffs[t])
                val = target.get(t)
                if val:
                    rhs[eqno] = val
                eqno += 1
    m = Mat.from_rows(rows, n * n)
    sol = solve_linear(m, rhs)
    if sol is None:
        raise NoSolution("no antipode satisfies the convolution equations")
    cols = [{} for _ in range(n)]
    for key, val in sol.items():
        i, j = divmod(key, n)
        cols[j][i] = val
    return Mat.from_cols(n, cols)


# ---------------------------------------------------------------------------
# pairings


def check_pairing(pairing, left, right, kind="alg-coalg", nondegenerate=False):
    """Dual-pairing laws between an algebra(-side) and a coalgebra(-side).

    kind alg-coalg: left is an AlgebraSC, right a CoalgebraSC.
    kind bialgebra/hopf: both HopfPackages; the mirrored laws (and for hopf
    the antipode law) are checked too.
    """
    rep = Report("pairing:%s" % kind)
    if kind == "alg-coalg":
        la, rc = left, right
        lnames = la.names
        rnames = rc.names
        lhopf = rhopf = None
    else:
        lhopf, rhopf = left, right
        la, rc = lhopf.algebra, rhopf.coalgebra
        lnames, rnames = lhopf.names, rhopf.names
    if pairing.left_dim != la.dim or pairing.right_dim != rc.dim:
        raise DimensionMismatch("pairing is %dx%d, participants %dx%d" % (pairing.left_dim, pairing.right_dim, la.dim, rc.dim))
    one = _one_of(la)

    def lname(i):
        return lnames[i] if lnames else "e%d" % i

    def rname(j):
        return rnames[j] if rnames else "f%d" % j

    wit = []
    for i in range(la.dim):
        for j in range(la.dim):
            prod = la.mult[i][j]
            for cidx in range(rc.dim):
                lhs = pairing.eval(prod, {cidx: one})
                rhs = 0
                for x, y, w in rc.delta_pairs(cidx):
                    rhs = rhs + w * pairing.value(i, x) * pairing.value(j, y)
                if lhs != rhs:
                    wit.append(Witness((lname(i), lname(j), rname(cidx)), str(lhs), str(rhs)))
    rep.add("pairing.product_left", wit)
    wit = []
    for cidx in range(rc.dim):
        lhs = pairing.eval(la.unit, {cidx: one})
        rhs = rc.eps({cidx: one})
        if lhs != rhs:
            wit.append(Witness((rname(cidx),), str(lhs), str(rhs)))
    rep.add("pairing.unit_left", wit)
    if kind in ("bialgebra", "hopf"):
        lc = lhopf.coalgebra
        ra = rhopf.algebra
        wit = []
        for h in range(lc.dim):
            for x in range(ra.dim):
                for y in range(ra.dim):
                    lhs = pairing.eval({h: one}, ra.mult[x][y])
                    rhs = 0
                    for a, b, w in lc.delta_pairs(h):
                        rhs = rhs + w * pairing.value(a, x) * pairing.value(b, y)
                    if lhs != rhs:
                        wit.append(Witness((lname(h), rname(x), rname(y)), str(lhs), str(rhs)))
        rep.add("pairing.product_right", wit)
        wit = []
        for h in range(lc.dim):
            lhs = pairing.eval({h: one}, ra.unit)
            rhs = lc.eps({h: one})
            if lhs != rhs:
                wit.append(Witness((lname(h),), str(lhs), str(rhs)))
        rep.add("pairing.unit_right", wit)
    if kind == "hopf":
        wit = []
        for h in range(lhopf.dim):
            for x in range(rhopf.dim):
                lhs = pairing.eval(lhopf.antipode.col(h), {x: one})
                rhs = pairing.eval({h: one}, rhopf.antipode.col(x))
                if lhs != rhs:
                    wit.append(Witness((lname(h), rname(x)), str(lhs), str(rhs)))
        rep.add("pairing.antipode", wit)
    if nondegenerate:
        rank = pairing.form.rank()
        wit = []
        if rank != pairing.left_dim or rank != pairing.right_dim:
            wit.append(Witness(("rank",), str(rank), "%d and %d" % (pairing.left_dim, pairing.right_dim)))
        rep.add("pairing.nondegenerate", wit)
        rep.flags["nondegenerate"] = not wit
    rep.dims["left"] = pairing.left_dim
    rep.dims["right"] = pairing.right_dim
    return rep


# ---------------------------------------------------------------------------
# partial representations (PR1-PR5)


def check_partial_representation(pi, h, b):
    """PR1-PR5 for a linear map pi: H -> B against a Hopf package H."""
    if pi.ncols != h.dim or pi.nrows != b.dim:
        raise DimensionMismatch("pi must be %dx%d" % (b.dim, h.dim))
    rep = Report("partial-representation")
    check_algebra(b, rep)
    one = _one_of(b)
    c = h.coalgebra
    s = h.antipode

    def pim(v):
        return pi.apply(v)

    wit = []
    lhs = pim(h.algebra.unit)
    if lhs != b.unit:
        wit.append(Witness(("1_H",), b.render(lhs), b.render(dict(b.unit))))
    rep.add("PR1", wit)

    def triple(u, v, w):
        return b.mul(b.mul(u, v), w)

    labels_and_rules = [
        ("PR2", lambda hv, k1, k2: (triple(pim(hv), pim(k1), pim(s.apply(k2))),
                                    b.mul(pim(h.algebra.mul(hv, k1)), pim(s.apply(k2))))),
        ("PR3", lambda kv, h1, h2: (triple(pim(h1), pim(s.apply(h2)), pim(kv)),
                                    b.mul(pim(h1), pim(h.algebra.mul(s.apply(h2), kv))))),
        ("PR4", lambda hv, k1, k2: (triple(pim(hv), pim(s.apply(k1)), pim(k2)),
                                    b.mul(pim(h.algebra.mul(hv, s.apply(k1))), pim(k2)))),
        ("PR5", lambda kv, h1, h2: (triple(pim(s.apply(h1)), pim(h2), pim(kv)),
                                    b.mul(pim(s.apply(h1)), pim(h.algebra.mul(h2, kv))))),
    ]
    for label, rule in labels_and_rules:
        wit = []
        for i in range(h.dim):
            for j in range(h.dim):
                lhs_total, rhs_total = {}, {}
                if label in ("PR2", "PR4"):
                    # sweep Delta of the second argument k = e_j
                    for k1, k2, x in c.delta_pairs(j):
                        l, r = rule({i: one}, {k1: one}, {k2: one})
                        vaxpy(lhs_total, x, l)
                        vaxpy(rhs_total, x, r)
                else:
                    # sweep Delta of the first argument h = e_i
                    for h1, h2, x in c.delta_pairs(i):
                        l, r = rule({j: one}, {h1: one}, {h2: one})
                        vaxpy(lhs_total, x, l)
                        vaxpy(rhs_total, x, r)
                if lhs_total != rhs_total:
                    wit.append(Witness((h.name(i), h.name(j)), b.render(lhs_total), b.render(rhs_total)))
        rep.add(label, wit)
    rep.dims["H"] = h.dim
    rep.dims["B"] = b.dim
    return rep


# ---------------------------------------------------------------------------
# op / cop transformers


def op_algebra(a):
    mult = tuple(tuple(a.mult[j][i] for j in range(a.dim)) for i in range(a.dim))
    return AlgebraSC(a.dim, mult, dict(a.unit), a.names)


def cop_coalgebra(c):
    d = c.dim
    comult = []
    for i in range(d):
        flipped = {}
        for j, k, x in c.delta_pairs(i):
            flipped[k * d + j] = x
        comult.append(flipped)
    return CoalgebraSC(d, tuple(comult), dict(c.counit), c.names)


def op_cop_transformers(p, which):
    """Flip multiplication and/or comultiplication of a package.

    For `op` or `cop` alone the antipode becomes S^{-1}; for `op-cop` it
    stays S.  Raises NoSolution if S is not invertible.
    """
    if which not in ("op", "cop", "op-cop"):
        raise ValueError("which must be op|cop|op-cop")
    alg = op_algebra(p.algebra) if which in ("op", "op-cop") else p.algebra
    coalg = cop_coalgebra(p.coalgebra) if which in ("cop", "op-cop") else p.coalgebra
    antipode = p.antipode
    if antipode is not None and which in ("op", "cop"):
        inv = antipode.inverse()
        if inv is None:
            raise NoSolution("antipode not invertible; %s has no Hopf structure" % which)
        antipode = inv
    return HopfPackage(alg, coalg, antipode)
