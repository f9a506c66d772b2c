"""A-corings, left/right bialgebroids, Hopf algebroids, Takeuchi products,
and skew pairings, all with exhaustive basis-level axiom checkers.

Comultiplications are stored as raw matrices into the plain tensor square of
the total algebra; every comparison happens after projecting into the
appropriate ⊗_A quotient, built canonically from the source/target maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BialgebroidFailure,
    CompatibilityFailure,
    DimensionMismatch,
    PreconditionFailure,
    WellDefinednessFailure,
)
from .linalg import Mat, QuotientSpace, Subspace, tensor_vec, vaxpy, vsub
from .reports import Report, Witness
from .structures import AlgebraSC, _one_of, is_commutative


def _map_fac1(tvec, fcol, d2, d1_out):
    """Apply a column function to the first tensor factor."""
    out = {}
    for idx, c in tvec.items():
        i, j = divmod(idx, d2)
        for i2, x in fcol(i).items():
            k = i2 * d2 + j
            s = out.get(k)
            s = c * x if s is None else s + c * x
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _map_fac2(tvec, gcol, d2_in, d2_out):
    """Apply a column function to the second tensor factor."""
    out = {}
    for idx, c in tvec.items():
        i, j = divmod(idx, d2_in)
        base = i * d2_out
        for j2, x in gcol(j).items():
            k = base + j2
            s = out.get(k)
            s = c * x if s is None else s + c * x
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _pair_mul(total, u2, v2):
    """Componentwise product on total ⊗ total."""
    m = total.dim
    out = {}
    for ij, cu in u2.items():
        i, j = divmod(ij, m)
        for kl, cv in v2.items():
            k, l = divmod(kl, m)
            vaxpy(out, cu * cv, tensor_vec(total.mult[i][k], total.mult[j][l], m))
    return out


def _lmul_col(total, w):
    return lambda i: total.mul(w, total.basis_vec(i))


def _rmul_col(total, w):
    return lambda i: total.mul(total.basis_vec(i), w)


def balanced_tensor_relations(total, lfun, rfun, base):
    """Spanning relations rfun(x, a) ⊗ y - x ⊗ lfun(a, y) of carrier ⊗ carrier."""
    m = total.dim
    one = _one_of(base)
    rels = []
    for ai in range(base.dim):
        avec = {ai: one}
        moved_r = [rfun(total.basis_vec(x), avec) for x in range(m)]
        moved_l = [lfun(avec, total.basis_vec(y)) for y in range(m)]
        for x in range(m):
            for y in range(m):
                rel = vsub(tensor_vec(moved_r[x], {y: _one_of(total)}, m),
                           tensor_vec({x: _one_of(total)}, moved_l[y], m))
                if rel:
                    rels.append(rel)
    return rels


def balanced_quotient(total, lfun, rfun, base):
    rels = balanced_tensor_relations(total, lfun, rfun, base)
    m = total.dim
    return QuotientSpace(m * m, Subspace.from_spanning(rels, m * m))


def triple_quotient(total, glue12, glue23, base):
    """Quotient of total⊗³ by position-(1,2) and position-(2,3) relations.

    Each glue is an (lfun, rfun) pair in the sense of balanced_quotient.
    """
    m = total.dim
    one = _one_of(total)
    rels = []
    for lfun, rfun, pos in ((glue12[0], glue12[1], 0), (glue23[0], glue23[1], 1)):
        pair_rels = balanced_tensor_relations(total, lfun, rfun, base)
        for r in pair_rels:
            if pos == 0:
                for z in range(m):
                    rels.append(tensor_vec(r, {z: one}, m))
            else:
                for x in range(m):
                    rels.append(tensor_vec({x: one}, r, m * m))
    return QuotientSpace(m * m * m, Subspace.from_spanning(rels, m * m * m))


# ---------------------------------------------------------------------------
# A-corings


@dataclass
class ACoring:
    """Coalgebra object in A-bimodules, in fixed carrier coordinates."""

    base: AlgebraSC
    dim: int
    lact: Mat  # column index a_i*dim + x_j  ->  a_i . x_j
    ract: Mat  # column index x_i*dimA + a_j ->  x_i . a_j
    comult_raw: Mat  # dim -> dim*dim, a chosen representative of Delta
    counit: Mat  # dim -> dimA
    names: tuple = None
    provenance: dict = field(default=None, compare=False)
    _aten: QuotientSpace = field(default=None, repr=False, compare=False)

    def l(self, avec, xvec):
        out = {}
        for ai, ca in avec.items():
            for xj, cx in xvec.items():
                vaxpy(out, ca * cx, self.lact.col(ai * self.dim + xj))
        return out

    def r(self, xvec, avec):
        out = {}
        for xi, cx in xvec.items():
            for aj, ca in avec.items():
                vaxpy(out, cx * ca, self.ract.col(xi * self.base.dim + aj))
        return out

    def carrier_algebra_like(self):
        """A fake AlgebraSC used only for basis bookkeeping in quotients."""
        one = _one_of(self.base)
        mult = tuple(tuple({} for _ in range(self.dim)) for _ in range(self.dim))
        return AlgebraSC(self.dim, mult, {0: one} if self.dim else {}, self.names)

    def aten(self):
        if self._aten is None:
            carrier = self.carrier_algebra_like()
            self._aten = balanced_quotient(carrier, self.l, self.r, self.base)
        return self._aten

    def name(self, i):
        if self.names and i < len(self.names):
            return self.names[i]
        return "c%d" % i


def _coring_axioms(rep, prefix, base, m, lfun, rfun, delta_raw, counit, names=None):
    """The coring axiom block shared by ACoring and both bialgebroid sides."""
    one = _one_of(base)

    def nm(i):
        if names and i < len(names):
            return names[i]
        return "c%d" % i

    def basis(i):
        return {i: one}

    fake = AlgebraSC(m, tuple(tuple({} for _ in range(m)) for _ in range(m)), {0: one} if m else {}, names)
    quotient = balanced_quotient(fake, lfun, rfun, base)

    def proj(v2):
        return quotient.project(v2)

    def eps(xvec):
        return counit.apply(xvec)

    wit = []
    for ai in range(base.dim):
        for bi in range(base.dim):
            ab = base.mult[ai][bi]
            for x in range(m):
                lhs = lfun(ab, basis(x))
                rhs = lfun({ai: one}, lfun({bi: one}, basis(x)))
                if lhs != rhs:
                    wit.append(Witness((base.name(ai), base.name(bi), nm(x)), "a(b.x)", "(ab).x"))
                lhs = rfun(basis(x), ab)
                rhs = rfun(rfun(basis(x), {ai: one}), {bi: one})
                if lhs != rhs:
                    wit.append(Witness((nm(x), base.name(ai), base.name(bi)), "(x.a).b", "x.(ab)"))
    for x in range(m):
        if lfun(base.unit_vec(), basis(x)) != basis(x) or rfun(basis(x), base.unit_vec()) != basis(x):
            wit.append(Witness((nm(x),), "1.x or x.1", nm(x)))
    for ai in range(base.dim):
        for bi in range(base.dim):
            for x in range(m):
                lhs = lfun({ai: one}, rfun(basis(x), {bi: one}))
                rhs = rfun(lfun({ai: one}, basis(x)), {bi: one})
                if lhs != rhs:
                    wit.append(Witness((base.name(ai), nm(x), base.name(bi)), "a.(x.b)", "(a.x).b"))
    rep.add(prefix + ".bimodule", wit)

    wit = []
    for ai in range(base.dim):
        for x in range(m):
            lhs = proj(delta_raw.apply(lfun({ai: one}, basis(x))))
            rhs = proj(_map_fac1(delta_raw.col(x), lambda i: lfun({ai: one}, basis(i)), m, m))
            if lhs != rhs:
                wit.append(Witness((base.name(ai), nm(x)), "Δ(a.x)", "a.Δ(x)"))
            lhs = proj(delta_raw.apply(rfun(basis(x), {ai: one})))
            rhs = proj(_map_fac2(delta_raw.col(x), lambda j: rfun(basis(j), {ai: one}), m, m))
            if lhs != rhs:
                wit.append(Witness((nm(x), base.name(ai)), "Δ(x.a)", "Δ(x).a"))
    rep.add(prefix + ".comult_bimodule_map", wit)

    wit = []
    for ai in range(base.dim):
        for x in range(m):
            lhs = eps(lfun({ai: one}, basis(x)))
            rhs = base.mul({ai: one}, eps(basis(x)))
            if lhs != rhs:
                wit.append(Witness((base.name(ai), nm(x)), "ε(a.x)", "a·ε(x)"))
            lhs = eps(rfun(basis(x), {ai: one}))
            rhs = base.mul(eps(basis(x)), {ai: one})
            if lhs != rhs:
                wit.append(Witness((nm(x), base.name(ai)), "ε(x.a)", "ε(x)·a"))
    rep.add(prefix + ".counit_bimodule_map", wit)

    tq = triple_quotient(fake, (lfun, rfun), (lfun, rfun), base)
    wit = []
    for x in range(m):
        dx = delta_raw.col(x)
        lhs = tq.project(_map_fac1(dx, lambda i: delta_raw.col(i), m, m * m))
        rhs = tq.project(_map_fac2(dx, lambda j: delta_raw.col(j), m, m * m))
        if lhs != rhs:
            wit.append(Witness((nm(x),), "(Δ⊗I)Δ", "(I⊗Δ)Δ"))
    rep.add(prefix + ".coassociativity", wit)

    wit = []
    for x in range(m):
        left_total, right_total = {}, {}
        for idx, c in delta_raw.col(x).items():
            u, v = divmod(idx, m)
            vaxpy(left_total, c, lfun(eps(basis(u)), basis(v)))
            vaxpy(right_total, c, rfun(basis(u), eps(basis(v))))
        if left_total != basis(x):
            wit.append(Witness((nm(x),), "(ε⊗I)Δ(x)", nm(x)))
        if right_total != basis(x):
            wit.append(Witness((nm(x),), "(I⊗ε)Δ(x)", nm(x)))
    rep.add(prefix + ".counit_laws", wit)
    return quotient


def check_coring(c):
    """Full A-coring check in canonical quotient coordinates."""
    rep = Report("coring")
    from .structures import check_algebra

    check_algebra(c.base, rep)
    _coring_axioms(rep, "coring", c.base, c.dim, c.l, c.r, c.comult_raw, c.counit, c.names)
    rep.dims["carrier"] = c.dim
    rep.dims["base"] = c.base.dim
    return rep


# ---------------------------------------------------------------------------
# Hopf algebroids


@dataclass
class HopfAlgebroid:
    total: AlgebraSC
    base: AlgebraSC
    s_l: Mat
    t_l: Mat
    s_r: Mat
    t_r: Mat
    delta_l_raw: Mat
    delta_r_raw: Mat
    eps_l: Mat
    eps_r: Mat
    antipode: Mat
    provenance: dict = field(default=None, compare=False)
    _lten: QuotientSpace = field(default=None, repr=False, compare=False)
    _rten: QuotientSpace = field(default=None, repr=False, compare=False)
    _tq: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self):
        return self.total.dim

    def name(self, i):
        return self.total.name(i)

    # bimodule actions: left-handed pair (s_l, t_l), right-handed pair (s_r, t_r)
    def lact_l(self, avec, xvec):
        return self.total.mul(self.s_l.apply(avec), xvec)

    def ract_l(self, xvec, avec):
        return self.total.mul(self.t_l.apply(avec), xvec)

    def lact_r(self, avec, xvec):
        return self.total.mul(xvec, self.t_r.apply(avec))

    def ract_r(self, xvec, avec):
        return self.total.mul(xvec, self.s_r.apply(avec))

    def glue(self, side):
        if side == "l":
            return (self.lact_l, self.ract_l)
        return (self.lact_r, self.ract_r)

    def lten(self):
        if self._lten is None:
            self._lten = balanced_quotient(self.total, self.lact_l, self.ract_l, self.base)
        return self._lten

    def rten(self):
        if self._rten is None:
            self._rten = balanced_quotient(self.total, self.lact_r, self.ract_r, self.base)
        return self._rten

    def tq(self, t12, t23):
        key = (t12, t23)
        if key not in self._tq:
            self._tq[key] = triple_quotient(self.total, self.glue(t12), self.glue(t23), self.base)
        return self._tq[key]

    def delta_l(self):
        q = self.lten()
        return Mat.from_function(q.dim, self.dim, lambda x: q.project(self.delta_l_raw.col(x)))

    def delta_r(self):
        q = self.rten()
        return Mat.from_function(q.dim, self.dim, lambda x: q.project(self.delta_r_raw.col(x)))


def takeuchi_defect(total, s_map, t_map, base, x2, side, quotient=None):
    """First witness a in the base violating the Takeuchi condition, else None."""
    one = _one_of(base)
    m = total.dim
    if quotient is None:
        if side == "left":
            lfun = lambda av, xv: total.mul(s_map.apply(av), xv)
            rfun = lambda xv, av: total.mul(t_map.apply(av), xv)
        else:
            lfun = lambda av, xv: total.mul(xv, t_map.apply(av))
            rfun = lambda xv, av: total.mul(xv, s_map.apply(av))
        quotient = balanced_quotient(total, lfun, rfun, base)
    for ai in range(base.dim):
        if side == "left":
            ta = t_map.col(ai)
            sa = s_map.col(ai)
            lhs = _map_fac1(x2, _rmul_col(total, ta), m, m)
            rhs = _map_fac2(x2, _rmul_col(total, sa), m, m)
        else:
            sa = s_map.col(ai)
            ta = t_map.col(ai)
            lhs = _map_fac1(x2, _lmul_col(total, sa), m, m)
            rhs = _map_fac2(x2, _lmul_col(total, ta), m, m)
        if quotient.project(vsub(lhs, rhs)):
            return ai
    return None


def takeuchi_membership(h, x2, side="left", in_quotient=False):
    """Does x2 (a vector in total⊗total, or quotient coordinates) lie in the
    Takeuchi product?"""
    q = h.lten() if side == "left" else h.rten()
    amb = q.section(x2) if in_quotient else x2
    if side == "left":
        return takeuchi_defect(h.total, h.s_l, h.t_l, h.base, amb, "left", q) is None
    return takeuchi_defect(h.total, h.s_r, h.t_r, h.base, amb, "right", q) is None


def _check_side(h, side):
    rep = Report("%s-bialgebroid" % ("left" if side == "l" else "right"))
    from .structures import check_algebra

    check_algebra(h.total, rep)
    base = h.base
    one = _one_of(base)
    total = h.total
    s_map = h.s_l if side == "l" else h.s_r
    t_map = h.t_l if side == "l" else h.t_r
    eps = h.eps_l if side == "l" else h.eps_r
    delta_raw = h.delta_l_raw if side == "l" else h.delta_r_raw
    suffix = "_" + side

    wit = []
    for ai in range(base.dim):
        for bi in range(base.dim):
            lhs = s_map.apply(base.mult[ai][bi])
            rhs = total.mul(s_map.col(ai), s_map.col(bi))
            if lhs != rhs:
                wit.append(Witness((base.name(ai), base.name(bi)), "s(ab)", "s(a)s(b)"))
    if s_map.apply(base.unit_vec()) != total.unit_vec():
        wit.append(Witness(("1",), "s(1)", "1"))
    rep.add("s%s.algebra_morphism" % suffix, wit)

    wit = []
    for ai in range(base.dim):
        for bi in range(base.dim):
            lhs = t_map.apply(base.mult[ai][bi])
            rhs = total.mul(t_map.col(bi), t_map.col(ai))
            if lhs != rhs:
                wit.append(Witness((base.name(ai), base.name(bi)), "t(ab)", "t(b)t(a)"))
    if t_map.apply(base.unit_vec()) != total.unit_vec():
        wit.append(Witness(("1",), "t(1)", "1"))
    rep.add("t%s.anti_morphism" % suffix, wit)

    wit = []
    for ai in range(base.dim):
        for bi in range(base.dim):
            lhs = total.mul(s_map.col(ai), t_map.col(bi))
            rhs = total.mul(t_map.col(bi), s_map.col(ai))
            if lhs != rhs:
                wit.append(Witness((base.name(ai), base.name(bi)), "s(a)t(b)", "t(b)s(a)"))
    rep.add("images_commute%s" % suffix, wit)

    lfun, rfun = h.glue(side)
    quotient = _coring_axioms(rep, "coring%s" % suffix, base, h.dim, lfun, rfun, delta_raw, eps, total.names)

    wit = []
    for x in range(h.dim):
        bad = takeuchi_defect(total, s_map, t_map, base, delta_raw.col(x), "left" if side == "l" else "right", quotient)
        if bad is not None:
            wit.append(Witness((total.name(x), base.name(bad)), "Δ(x)", "Takeuchi condition at a=%s" % base.name(bad)))
    rep.add("takeuchi%s.membership" % suffix, wit)

    wit = []
    for x in range(h.dim):
        for y in range(h.dim):
            lhs = quotient.project(delta_raw.apply(total.mult[x][y]))
            rhs = quotient.project(_pair_mul(total, delta_raw.col(x), delta_raw.col(y)))
            if lhs != rhs:
                wit.append(Witness((total.name(x), total.name(y)), "Δ(xy)", "Δ(x)Δ(y)"))
    rep.add("delta%s.multiplicative" % suffix, wit)

    wit = []
    unit2 = tensor_vec(total.unit_vec(), total.unit_vec(), h.dim)
    if quotient.project(delta_raw.apply(total.unit_vec())) != quotient.project(unit2):
        wit.append(Witness(("1",), "Δ(1)", "1⊗1"))
    rep.add("delta%s.unit" % suffix, wit)

    wit = []
    for x in range(h.dim):
        for y in range(h.dim):
            exy = eps.apply(total.mult[x][y])
            if side == "l":
                via_s = eps.apply(total.mul(total.basis_vec(x), s_map.apply(eps.col(y))))
                via_t = eps.apply(total.mul(total.basis_vec(x), t_map.apply(eps.col(y))))
            else:
                via_s = eps.apply(total.mul(s_map.apply(eps.col(x)), total.basis_vec(y)))
                via_t = eps.apply(total.mul(t_map.apply(eps.col(x)), total.basis_vec(y)))
            if exy != via_s or exy != via_t:
                wit.append(Witness((total.name(x), total.name(y)), "ε(xy)", "ε(x s(ε(y))) / ε(x t(ε(y)))"))
    rep.add("eps%s.product_law" % suffix, wit)

    wit = []
    if eps.apply(total.unit_vec()) != base.unit_vec():
        wit.append(Witness(("1",), "ε(1)", "1_A"))
    rep.add("eps%s.unit" % suffix, wit)
    rep.dims["total"] = h.dim
    rep.dims["base"] = base.dim
    return rep


def check_left_bialgebroid(h):
    return _check_side(h, "l")


def check_right_bialgebroid(h):
    return _check_side(h, "r")


def check_hopf_algebroid(h, require_bialgebroids=True):
    """Bialgebroid axioms on both sides plus Hopf algebroid axioms (i)-(iv)."""
    left = check_left_bialgebroid(h)
    right = check_right_bialgebroid(h)
    if require_bialgebroids and not (left.ok and right.ok):
        raise BialgebroidFailure("bialgebroid prerequisites fail", left if not left.ok else right)
    rep = Report("hopf-algebroid")
    rep.merge(left)
    rep.merge(right)
    total, base = h.total, h.base
    one = _one_of(base)

    wit = []
    for tag, outer_s, mid_eps, inner_t, target in (
        ("s_l∘ε_l∘t_r=t_r", h.s_l, h.eps_l, h.t_r, h.t_r),
        ("t_l∘ε_l∘s_r=s_r", h.t_l, h.eps_l, h.s_r, h.s_r),
        ("s_r∘ε_r∘t_l=t_l", h.s_r, h.eps_r, h.t_l, h.t_l),
        ("t_r∘ε_r∘s_l=s_l", h.t_r, h.eps_r, h.s_l, h.s_l),
    ):
        for ai in range(base.dim):
            lhs = outer_s.apply(mid_eps.apply(inner_t.col(ai)))
            rhs = target.col(ai)
            if lhs != rhs:
                wit.append(Witness((tag, base.name(ai)), "composite", "map"))
    rep.add("hopf.i", wit)

    m = h.dim
    wit = []
    tq_lr = h.tq("l", "r")
    for x in range(m):
        lhs = tq_lr.project(_map_fac1(h.delta_r_raw.col(x), lambda i: h.delta_l_raw.col(i), m, m * m))
        rhs = tq_lr.project(_map_fac2(h.delta_l_raw.col(x), lambda j: h.delta_r_raw.col(j), m, m * m))
        if lhs != rhs:
            wit.append(Witness((total.name(x),), "(Δ_l⊗I)Δ_r", "(I⊗Δ_r)Δ_l"))
    rep.add("hopf.ii.left", wit)
    wit = []
    tq_rl = h.tq("r", "l")
    for x in range(m):
        lhs = tq_rl.project(_map_fac2(h.delta_r_raw.col(x), lambda j: h.delta_l_raw.col(j), m, m * m))
        rhs = tq_rl.project(_map_fac1(h.delta_l_raw.col(x), lambda i: h.delta_r_raw.col(i), m, m * m))
        if lhs != rhs:
            wit.append(Witness((total.name(x),), "(I⊗Δ_l)Δ_r", "(Δ_r⊗I)Δ_l"))
    rep.add("hopf.ii.right", wit)

    wit = []
    for ai in range(base.dim):
        for x in range(m):
            for bi in range(base.dim):
                inner = total.mul(total.mul(h.t_l.col(ai), total.basis_vec(x)), h.t_r.col(bi))
                lhs = h.antipode.apply(inner)
                rhs = total.mul(total.mul(h.s_r.col(bi), h.antipode.col(x)), h.s_l.col(ai))
                if lhs != rhs:
                    wit.append(Witness((base.name(ai), total.name(x), base.name(bi)), "S(t_l(a)xt_r(b))", "s_r(b)S(x)s_l(a)"))
    rep.add("hopf.iii", wit)

    wit = []
    for x in range(m):
        out = {}
        for idx, c in h.delta_l_raw.col(x).items():
            u, v = divmod(idx, m)
            vaxpy(out, c, total.mul(h.antipode.col(u), total.basis_vec(v)))
        rhs = h.s_r.apply(h.eps_r.col(x))
        if out != rhs:
            wit.append(Witness((total.name(x),), total.render(out), total.render(rhs)))
    rep.add("hopf.iv.left", wit)
    wit = []
    for x in range(m):
        out = {}
        for idx, c in h.delta_r_raw.col(x).items():
            u, v = divmod(idx, m)
            vaxpy(out, c, total.mul(total.basis_vec(u), h.antipode.col(v)))
        rhs = h.s_l.apply(h.eps_l.col(x))
        if out != rhs:
            wit.append(Witness((total.name(x),), total.render(out), total.render(rhs)))
    rep.add("hopf.iv.right", wit)

    wit = []
    for x in range(m):
        for y in range(m):
            lhs = h.antipode.apply(total.mult[x][y])
            rhs = total.mul(h.antipode.col(y), h.antipode.col(x))
            if lhs != rhs:
                wit.append(Witness((total.name(x), total.name(y)), "S(xy)", "S(y)S(x)"))
    rep.add("hopf.antipode_antimultiplicative", wit)
    wit = []
    if h.antipode.apply(total.unit_vec()) != total.unit_vec():
        wit.append(Witness(("1",), "S(1)", "1"))
    rep.add("hopf.antipode_unit", wit)
    rep.dims["total"] = m
    rep.dims["base"] = base.dim
    return rep


# ---------------------------------------------------------------------------
# split Hopf algebroid (global comodule algebras)


def split_hopf_algebroid(k, a, rho):
    """The split Hopf algebroid A⊗K of a global coaction of a commutative K.

    Checked hypotheses: K commutative Hopf, A commutative, rho a global
    coaction (comodule-algebra axioms with ρ(1)=1⊗1).
    """
    from .partial_coactions import PartialCoaction, check_partial_coaction, is_global_coaction
    from .structures import tensor_of_algebras

    if not is_commutative(k.algebra):
        raise PreconditionFailure("K not commutative")
    if not is_commutative(a):
        raise PreconditionFailure("base algebra not commutative")
    pc = PartialCoaction(k, a, rho)
    report = check_partial_coaction(pc)
    if not report.ok:
        raise PreconditionFailure("rho is not a coaction", report.first_failure().axiom)
    if not is_global_coaction(pc):
        raise PreconditionFailure("coaction not global (ρ(1) ≠ 1⊗1)")

    dk = k.dim
    total = tensor_of_algebras(a, k.algebra)
    one = _one_of(a)
    s = Mat.from_function(total.dim, a.dim, lambda ai: tensor_vec({ai: one}, k.algebra.unit, dk))
    t = Mat.from_function(total.dim, a.dim, lambda ai: rho.col(ai))

    def delta_col(idx):
        ai, hi = divmod(idx, dk)
        out = {}
        for h1, h2, c in k.coalgebra.delta_pairs(hi):
            left = tensor_vec({ai: one}, {h1: one}, dk)
            right = tensor_vec(a.unit_vec(), {h2: one}, dk)
            vaxpy(out, c, tensor_vec(left, right, total.dim))
        return out

    delta_raw = Mat.from_function(total.dim ** 2, total.dim, delta_col)
    eps = Mat.from_function(a.dim, total.dim, lambda idx: vscale_eps(k, idx, dk, one))

    def antipode_col(idx):
        ai, hi = divmod(idx, dk)
        out = {}
        for jdx, c in rho.col(ai).items():
            aj, hj = divmod(jdx, dk)
            vaxpy(out, c, tensor_vec({aj: one}, k.algebra.mul({hj: one}, k.antipode.col(hi)), dk))
        return out

    antipode = Mat.from_function(total.dim, total.dim, antipode_col)
    return HopfAlgebroid(
        total=total,
        base=a,
        s_l=s,
        t_l=t,
        s_r=t,
        t_r=s,
        delta_l_raw=delta_raw,
        delta_r_raw=delta_raw,
        eps_l=eps,
        eps_r=eps,
        antipode=antipode,
        provenance={"kind": "split-global"},
    )


def vscale_eps(k, idx, dk, one):
    ai, hi = divmod(idx, dk)
    e = k.coalgebra.counit.get(hi)
    return {ai: e} if e else {}


# ---------------------------------------------------------------------------
# skew pairings


@dataclass
class SkewPairing:
    lam: HopfAlgebroid  # Λ
    l: HopfAlgebroid  # L (shared base)
    form: list  # form[i][j]: Vec in the base algebra

    def eval(self, u, v):
        out = {}
        for i, cu in u.items():
            row = self.form[i]
            for j, cv in v.items():
                vaxpy(out, cu * cv, row[j])
        return out


def check_skew_pairing(sp):
    """SP1-SP5 for a skew pairing of two left bialgebroids over the same base."""
    lam, lb = sp.lam, sp.l
    if lam.base is not lb.base and lam.base != lb.base:
        raise DimensionMismatch("skew pairing requires a shared base algebra")
    base = lam.base
    one = _one_of(base) if base.dim else None
    rep = Report("skew-pairing")
    mL = lam.dim
    mR = lb.dim

    wit = []
    for ai in range(base.dim):
        for bi in range(base.dim):
            for ci in range(base.dim):
                for di in range(base.dim):
                    pre = lam.total.mul(lam.s_l.col(ai), lam.t_l.col(bi))
                    post = lam.total.mul(lam.s_l.col(ci), lam.t_l.col(di))
                    for ei in range(base.dim):
                        for x in range(mL):
                            decorated = lam.total.mul(lam.total.mul(pre, lam.total.basis_vec(x)), post)
                            for y in range(mR):
                                lhs = base.mul(sp.eval(decorated, lb.total.basis_vec(y)), {ei: one})
                                rdec = lb.total.mul(
                                    lb.total.mul(
                                        lb.total.mul(lb.s_l.col(ci), lb.t_l.col(ei)),
                                        lb.total.basis_vec(y),
                                    ),
                                    lb.total.mul(lb.s_l.col(di), lb.t_l.col(bi)),
                                )
                                rhs = base.mul({ai: one}, sp.eval(lam.total.basis_vec(x), rdec))
                                if lhs != rhs:
                                    wit.append(Witness(
                                        (base.name(ai), base.name(bi), base.name(ci), base.name(di), base.name(ei),
                                         lam.name(x), lb.name(y)),
                                        base.render(lhs), base.render(rhs)))
    rep.add("SP1", wit)

    wit = []
    for x in range(mL):
        dx = lam.delta_l_raw.col(x)
        for y in range(mR):
            for z in range(mR):
                lhs = sp.eval(lam.total.basis_vec(x), lb.total.mult[y][z])
                rhs = {}
                for idx, c in dx.items():
                    u, v = divmod(idx, mL)
                    inner = sp.eval(lam.total.basis_vec(v), lb.total.basis_vec(z))
                    dec = lb.total.mul(lb.total.basis_vec(y), lb.t_l.apply(inner))
                    vaxpy(rhs, c, sp.eval(lam.total.basis_vec(u), dec))
                if lhs != rhs:
                    wit.append(Witness((lam.name(x), lb.name(y), lb.name(z)), base.render(lhs), base.render(rhs)))
    rep.add("SP2", wit)

    wit = []
    for x in range(mL):
        for w in range(mL):
            prod = lam.total.mult[x][w]
            for y in range(mR):
                lhs = sp.eval(prod, lb.total.basis_vec(y))
                rhs = {}
                for idx, c in lb.delta_l_raw.col(y).items():
                    l1, l2 = divmod(idx, mR)
                    inner = sp.eval(lam.total.basis_vec(w), lb.total.basis_vec(l1))
                    dec = lam.total.mul(lam.total.basis_vec(x), lam.s_l.apply(inner))
                    vaxpy(rhs, c, sp.eval(dec, lb.total.basis_vec(l2)))
                if lhs != rhs:
                    wit.append(Witness((lam.name(x), lam.name(w), lb.name(y)), base.render(lhs), base.render(rhs)))
    rep.add("SP3", wit)

    wit = []
    for x in range(mL):
        lhs = sp.eval(lam.total.basis_vec(x), lb.total.unit_vec())
        rhs = lam.eps_l.col(x)
        if lhs != rhs:
            wit.append(Witness((lam.name(x),), base.render(lhs), base.render(rhs)))
    rep.add("SP4", wit)
    wit = []
    for y in range(mR):
        lhs = sp.eval(lam.total.unit_vec(), lb.total.basis_vec(y))
        rhs = lb.eps_l.col(y)
        if lhs != rhs:
            wit.append(Witness((lb.name(y),), base.render(lhs), base.render(rhs)))
    rep.add("SP5", wit)
    rep.dims["lambda"] = mL
    rep.dims["l"] = mR
    return rep


def canonical_skew_pairing(pc, pa, pairing):
    """⟨⟨a1⁰⊗ξ1¹ | b#h⟩⟩ = ab(h₍₁₎·1)⟨h₍₂₎,ξ⟩ between A⊗̲K and A#H.

    Verifies the compatibility h·a = a⁰⟨h,a¹⟩ and well-definedness on both
    carriers before assembling the SkewPairing.
    """
    from .partial_actions import smash_hopf_algebroid, smash_projector
    from .partial_coactions import partial_split_hopf_algebroid

    a = pa.a
    h = pa.h
    k = pc.k
    one = _one_of(a)
    if pc.a != a:
        raise DimensionMismatch("action and coaction must share the base algebra")
    for hi in range(h.dim):
        for ai in range(a.dim):
            lhs = pa.act_elem(hi, ai)
            rhs = {}
            for idx, c in pc.rho.col(ai).items():
                aj, kj = divmod(idx, k.dim)
                val = c * pairing.value(hi, kj)
                if val:
                    vaxpy(rhs, val, {aj: one})
            if lhs != rhs:
                raise CompatibilityFailure(
                    "h·a = a⁰⟨h,a¹⟩ fails at (%s, %s)" % (h.name(hi), a.name(ai)))

    lam = partial_split_hopf_algebroid(pc)
    lb = smash_hopf_algebroid(pa)
    rt = lam.provenance["reduced"]
    sp_smash = lb.provenance["smash"]
    dk, dh = k.dim, h.dim

    def f_elem(ak_idx, bh_idx):
        ai, ki = divmod(ak_idx, dk)
        bi, hi = divmod(bh_idx, dh)
        out = {}
        for h1, h2, c in h.coalgebra.delta_pairs(hi):
            val = c * pairing.value(h2, ki)
            if val:
                prod = a.mul(a.mult[ai][bi], pa.apply({h1: one}, a.unit_vec()))
                vaxpy(out, val, prod)
        return out

    def f_eval(u, v):
        out = {}
        for i, cu in u.items():
            for j, cv in v.items():
                vaxpy(out, cu * cv, f_elem(i, j))
        return out

    # absorption on the coaction side
    rho_one = pc.rho.apply(a.unit_vec())
    for i in range(a.dim * dk):
        absorbed = rt.ambient_mul({i: one}, rho_one)
        for y in range(sp_smash.dim):
            if f_eval(absorbed, sp_smash.carrier.rows[y]) != f_eval({i: one}, sp_smash.carrier.rows[y]):
                raise WellDefinednessFailure("form not invariant under ⊗ρ(1) absorption at index %d" % i)
    # rewriting on the action side
    phi = smash_projector(pa)
    for j in range(a.dim * dh):
        rewritten = phi.col(j)
        for x in range(rt.dim):
            if f_eval(rt.carrier.rows[x], rewritten) != f_eval(rt.carrier.rows[x], {j: one}):
                raise WellDefinednessFailure("form not invariant under a#h rewriting at index %d" % j)

    form = [[f_eval(rt.carrier.rows[x], sp_smash.carrier.rows[y]) for y in range(sp_smash.dim)]
            for x in range(rt.dim)]
    return SkewPairing(lam, lb, form)
