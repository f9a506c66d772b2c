"""Partial module algebras, the partial smash product, and its Hopf algebroid.

The smash carrier is the image of a⊗h ↦ a(h₍₁₎·1)⊗h₍₂₎ inside A⊗H; all
smash arithmetic happens in the canonical RREF coordinates of that image,
which makes equality decidable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ActionAxiomFailure,
    DimensionMismatch,
    NotCentral,
    NotGlobal,
    NotIdempotent,
    PreconditionFailure,
)
from .linalg import Mat, Subspace, image, tensor_vec, vaxpy, vscale
from .reports import Report, Witness
from .structures import (
    AlgebraSC,
    check_package,
    is_commutative,
    is_cocommutative,
    _one_of,
)


@dataclass
class PartialAction:
    """h⊗a ↦ h·a for a Hopf package H on an algebra A.

    `act` has one column per (h_i, a_j) pair, index i*dimA + j.
    """

    h: object
    a: AlgebraSC
    act: Mat
    _report: Report = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.act.nrows != self.a.dim or self.act.ncols != self.h.dim * self.a.dim:
            raise DimensionMismatch("act must be %dx%d" % (self.a.dim, self.h.dim * self.a.dim))

    def act_elem(self, hi, aj):
        return self.act.col(hi * self.a.dim + aj)

    def apply(self, hvec, avec):
        out = {}
        for hi, ch in hvec.items():
            for aj, ca in avec.items():
                vaxpy(out, ch * ca, self.act_elem(hi, aj))
        return out

    def ensure_checked(self):
        if self._report is None:
            self._report = check_partial_action(self)
        if not self._report.ok:
            raise ActionAxiomFailure("partial action fails its axioms", self._report)
        return self._report


def check_partial_action(pa):
    """PLA1-PLA3 plus the symmetry axiom PLA3'; flags symmetric and global."""
    rep = Report("partial-action")
    upstream = check_package(pa.h, "hopf" if pa.h.antipode is not None else "bialgebra")
    rep.merge(upstream)
    h, a = pa.h, pa.a
    one = _one_of(a)
    wit = []
    for j in range(a.dim):
        out = pa.apply(h.algebra.unit, {j: one})
        if out != {j: one}:
            wit.append(Witness((a.name(j),), a.render(out), a.name(j)))
    rep.add("PLA1", wit)
    wit = []
    for i in range(h.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                lhs = pa.apply({i: one}, a.mult[j][k])
                rhs = {}
                for h1, h2, x in h.coalgebra.delta_pairs(i):
                    vaxpy(rhs, x, a.mul(pa.act_elem(h1, j), pa.act_elem(h2, k)))
                if lhs != rhs:
                    wit.append(Witness((h.name(i), a.name(j), a.name(k)), a.render(lhs), a.render(rhs)))
    rep.add("PLA2", wit)
    unit_acts = [pa.apply({i: one}, a.unit_vec()) for i in range(h.dim)]
    for axiom, left_factor in (("PLA3", True), ("PLA3'", False)):
        wit = []
        for i in range(h.dim):
            for k in range(h.dim):
                for j in range(a.dim):
                    lhs = pa.apply({i: one}, pa.act_elem(k, j))
                    rhs = {}
                    for h1, h2, x in pa.h.coalgebra.delta_pairs(i):
                        if left_factor:
                            inner = pa.apply(h.algebra.mul({h2: one}, {k: one}), {j: one})
                            vaxpy(rhs, x, a.mul(unit_acts[h1], inner))
                        else:
                            inner = pa.apply(h.algebra.mul({h1: one}, {k: one}), {j: one})
                            vaxpy(rhs, x, a.mul(inner, unit_acts[h2]))
                    if lhs != rhs:
                        wit.append(Witness((h.name(i), h.name(k), a.name(j)), a.render(lhs), a.render(rhs)))
        rep.add(axiom, wit)
    rep.flags["symmetric"] = rep.check("PLA3'").ok
    rep.flags["global"] = is_global(pa)
    rep.dims["H"] = h.dim
    rep.dims["A"] = a.dim
    return rep


def is_global(pa):
    """True iff h·1_A = ε(h)·1_A on the basis of H."""
    one = _one_of(pa.a)
    unit = pa.a.unit_vec()
    for i in range(pa.h.dim):
        expected = vscale(pa.h.coalgebra.eps({i: one}), unit)
        if pa.apply({i: one}, unit) != expected:
            return False
    return True


def induced_partial_action(pa, e):
    """Restrict a global action to the unital ideal eB of a central idempotent."""
    a = pa.a
    if a.mul(e, e) != e:
        raise NotIdempotent("e is not idempotent")
    one = _one_of(a)
    for j in range(a.dim):
        if a.mul(e, {j: one}) != a.mul({j: one}, e):
            raise NotCentral("e is not central", a.name(j))
    if not is_global(pa):
        raise NotGlobal("action is not global")
    lm = Mat.from_function(a.dim, a.dim, lambda j: a.mul(e, {j: one}))
    carrier = image(lm)
    m = carrier.dim
    names = _carrier_names(carrier, a.names, None)
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = a.mul(carrier.rows[i], carrier.rows[j])
            row.append(carrier.coords(prod))
        mult.append(tuple(row))
    unit = carrier.coords(e)
    sub = AlgebraSC(m, tuple(mult), unit, names)
    act_cols = []
    for hi in range(pa.h.dim):
        for j in range(m):
            moved = pa.apply({hi: one}, carrier.rows[j])
            act_cols.append(carrier.coords(a.mul(e, moved)))
    act = Mat.from_cols(m, act_cols)
    return PartialAction(pa.h, sub, act)


def _carrier_names(carrier, left_names, right_names, sep="#", right_dim=None):
    """Name carrier basis rows: elementary rows get their tensor name."""
    names = []
    for row in carrier.rows:
        if len(row) == 1:
            ((idx, c),) = row.items()
            if c == c / c:
                if right_names is not None and right_dim:
                    i, j = divmod(idx, right_dim)
                    lname = left_names[i] if left_names else "e%d" % i
                    rname = right_names[j] if right_names else "f%d" % j
                    names.append("%s%s%s" % (lname, sep, rname))
                    continue
                if right_names is None and left_names:
                    names.append(left_names[idx])
                    continue
        names.append("b%d" % len(names))
    return tuple(names)


def smash_projector(pa):
    """The idempotent a⊗h ↦ a(h₍₁₎·1)⊗h₍₂₎ on A⊗H."""
    a, h = pa.a, pa.h
    dh = h.dim
    one = _one_of(a)
    unit = a.unit_vec()

    def phi_col(col_index):
        ai, hi = divmod(col_index, dh)
        out = {}
        for h1, h2, x in h.coalgebra.delta_pairs(hi):
            coeff_vec = a.mul({ai: one}, pa.apply({h1: one}, unit))
            vaxpy(out, x, tensor_vec(coeff_vec, {h2: one}, dh))
        return out

    return Mat.from_function(a.dim * dh, a.dim * dh, phi_col)


def smash_ambient_mul(pa, u, v):
    """(a⊗h)(b⊗k) = a(h₍₁₎·b) ⊗ h₍₂₎k on A⊗H."""
    a, h = pa.a, pa.h
    dh = h.dim
    one = _one_of(a)
    out = {}
    for iu, cu in u.items():
        ai, hi = divmod(iu, dh)
        for iv, cv in v.items():
            bj, kj = divmod(iv, dh)
            c = cu * cv
            for h1, h2, x in h.coalgebra.delta_pairs(hi):
                avec = a.mul({ai: one}, pa.act_elem(h1, bj))
                hvec = h.algebra.mul({h2: one}, {kj: one})
                vaxpy(out, c * x, tensor_vec(avec, hvec, dh))
    return out


@dataclass
class SmashProduct:
    pa: PartialAction
    carrier: Subspace
    algebra: AlgebraSC
    embed: Mat
    project: Mat

    @property
    def dim(self):
        return self.carrier.dim


def smash_product(pa):
    """The partial smash product in canonical carrier coordinates."""
    pa.ensure_checked()
    a, h = pa.a, pa.h
    phi = smash_projector(pa)
    carrier = image(phi)
    m = carrier.dim
    names = _carrier_names(carrier, a.names, h.names, sep="#", right_dim=h.dim)
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = smash_ambient_mul(pa, carrier.rows[i], carrier.rows[j])
            coords = carrier.coords(prod)
            if coords is None:
                raise ActionAxiomFailure("smash product left its own carrier", None)
            row.append(coords)
        mult.append(tuple(row))
    unit_ambient = tensor_vec(a.unit_vec(), h.algebra.unit, h.dim)
    unit = carrier.coords(unit_ambient)
    alg = AlgebraSC(m, tuple(mult), unit, names)
    embed = carrier.embed_matrix()
    project = Mat.from_function(m, a.dim * h.dim, lambda j: carrier.coords(phi.col(j)))
    return SmashProduct(pa, carrier, alg, embed, project)


def smash_hopf_algebroid(pa):
    """Theorem-level construction: the smash-product Hopf algebroid over A.

    Requires a symmetric partial action of a cocommutative H on a
    commutative A; all three hypotheses are machine-checked.
    """
    from .hopf_algebroid import HopfAlgebroid

    report = check_partial_action(pa)
    if not report.ok:
        raise ActionAxiomFailure("partial action fails its axioms", report)
    if not report.flags["symmetric"]:
        raise PreconditionFailure("partial action not symmetric (PLA3' fails)")
    if not is_cocommutative(pa.h.coalgebra):
        raise PreconditionFailure("H not cocommutative")
    if not is_commutative(pa.a):
        raise PreconditionFailure("base algebra not commutative")
    sp = smash_product(pa)
    a, h = pa.a, pa.h
    m = sp.dim
    one = _one_of(a)
    dh = h.dim

    def s_col(ai):
        vec = tensor_vec({ai: one}, h.algebra.unit, dh)
        return sp.carrier.coords(vec)

    s = Mat.from_function(m, a.dim, s_col)
    unit_a = a.unit_vec()
    phi = smash_projector(pa)

    def phi_coords(avec, hvec):
        amb = {}
        for ai, ca in avec.items():
            for hi, ch in hvec.items():
                vaxpy(amb, ca * ch, phi.col(ai * dh + hi))
        return sp.carrier.coords(amb)

    def delta_col(x):
        out = {}
        amb = sp.carrier.rows[x]
        for idx, c in amb.items():
            ai, hi = divmod(idx, dh)
            for h1, h2, w in h.coalgebra.delta_pairs(hi):
                left = phi_coords({ai: one}, {h1: one})
                right = phi_coords(unit_a, {h2: one})
                vaxpy(out, c * w, tensor_vec(left, right, m))
        return out

    delta_raw = Mat.from_function(m * m, m, delta_col)

    def eps_l_col(x):
        out = {}
        for idx, c in sp.carrier.rows[x].items():
            ai, hi = divmod(idx, dh)
            vaxpy(out, c, a.mul({ai: one}, pa.apply({hi: one}, unit_a)))
        return out

    def eps_r_col(x):
        out = {}
        for idx, c in sp.carrier.rows[x].items():
            ai, hi = divmod(idx, dh)
            vaxpy(out, c, pa.apply(h.antipode.col(hi), {ai: one}))
        return out

    eps_l = Mat.from_function(a.dim, m, eps_l_col)
    eps_r = Mat.from_function(a.dim, m, eps_r_col)

    def antipode_col(x):
        out = {}
        for idx, c in sp.carrier.rows[x].items():
            ai, hi = divmod(idx, dh)
            for h1, h2, w in h.coalgebra.delta_pairs(hi):
                moved = pa.apply(h.antipode.col(h2), {ai: one})
                vaxpy(out, c * w, phi_coords(moved, h.antipode.col(h1)))
        return out

    antipode = Mat.from_function(m, m, antipode_col)

    return HopfAlgebroid(
        total=sp.algebra,
        base=a,
        s_l=s,
        t_l=s,
        s_r=s,
        t_r=s,
        delta_l_raw=delta_raw,
        delta_r_raw=delta_raw,
        eps_l=eps_l,
        eps_r=eps_r,
        antipode=antipode,
        provenance={"kind": "smash", "smash": sp},
    )
