"""Partial comodule algebras, the reduced tensor A⊗̲K, its A-coring, the
partial split Hopf algebroid, and the left-dual-ring comparison."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CoactionAxiomFailure,
    DimensionMismatch,
    NotCentral,
    NotGlobal,
    NotIdempotent,
    PreconditionFailure,
)
from .linalg import Mat, Subspace, image, kernel, tensor_vec, vaxpy
from .reports import Report, Witness
from .structures import AlgebraSC, _one_of, check_package, is_commutative
from .partial_actions import _carrier_names


@dataclass
class PartialCoaction:
    """ρ: A → A⊗K, a ↦ a⁰⊗a¹, stored as a matrix with target index a_i*dimK + k_j."""

    k: object
    a: AlgebraSC
    rho: Mat
    _report: Report = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.rho.nrows != self.a.dim * self.k.dim or self.rho.ncols != self.a.dim:
            raise DimensionMismatch("rho must be %dx%d" % (self.a.dim * self.k.dim, self.a.dim))

    def apply(self, avec):
        return self.rho.apply(avec)

    def rho_one(self):
        return self.rho.apply(self.a.unit_vec())

    def ensure_checked(self):
        if self._report is None:
            self._report = check_partial_coaction(self)
        if not self._report.ok:
            raise CoactionAxiomFailure("partial coaction fails its axioms", self._report)
        return self._report


def tensor_mul_ak(pc, u, v):
    """Componentwise product on A⊗K."""
    dk = pc.k.dim
    a = pc.a
    out = {}
    for iu, cu in u.items():
        ai, ki = divmod(iu, dk)
        for iv, cv in v.items():
            bj, lj = divmod(iv, dk)
            vaxpy(out, cu * cv, tensor_vec(a.mult[ai][bj], pc.k.algebra.mult[ki][lj], dk))
    return out


def _tensor3_mul(pc, u, v):
    """Componentwise product on A⊗K⊗K (index ((a*dk)+k1)*dk + k2)."""
    dk = pc.k.dim
    a = pc.a
    kalg = pc.k.algebra
    out = {}
    for iu, cu in u.items():
        au, r = divmod(iu, dk * dk)
        k1u, k2u = divmod(r, dk)
        for iv, cv in v.items():
            av, rv = divmod(iv, dk * dk)
            k1v, k2v = divmod(rv, dk)
            part = tensor_vec(a.mult[au][av], tensor_vec(kalg.mult[k1u][k1v], kalg.mult[k2u][k2v], dk), dk * dk)
            vaxpy(out, cu * cv, part)
    return out


def check_partial_coaction(pc):
    """PRHCA1-3 plus the symmetry axiom PRHCA4; flags symmetric and global."""
    rep = Report("partial-coaction")
    rep.merge(check_package(pc.k, "hopf" if pc.k.antipode is not None else "bialgebra"))
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)

    def names2(idx):
        ai, ki = divmod(idx, dk)
        return "%s⊗%s" % (a.name(ai), k.name(ki))

    wit = []
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = pc.apply(a.mult[i][j])
            rhs = tensor_mul_ak(pc, pc.rho.col(i), pc.rho.col(j))
            if lhs != rhs:
                wit.append(Witness((a.name(i), a.name(j)), "ρ(ab)", "ρ(a)ρ(b)"))
    rep.add("PRHCA1", wit)

    wit = []
    for i in range(a.dim):
        out = {}
        for idx, c in pc.rho.col(i).items():
            ai, ki = divmod(idx, dk)
            e = k.coalgebra.counit.get(ki)
            if e:
                vaxpy(out, c * e, {ai: one})
        if out != {i: one}:
            wit.append(Witness((a.name(i),), a.render(out), a.name(i)))
    rep.add("PRHCA2", wit)

    rho_one = pc.rho_one()
    rho_one_t = {}
    for idx, c in rho_one.items():
        ai, ki = divmod(idx, dk)
        vaxpy(rho_one_t, c, tensor_vec({ai: one}, tensor_vec({ki: one}, k.algebra.unit, dk), dk * dk))

    def lhs_rho_rho(i):
        out = {}
        for idx, c in pc.rho.col(i).items():
            ai, ki = divmod(idx, dk)
            vaxpy(out, c, tensor_vec(pc.rho.col(ai), {ki: one}, dk))
        return out

    def delta_side(i):
        out = {}
        for idx, c in pc.rho.col(i).items():
            ai, ki = divmod(idx, dk)
            vaxpy(out, c, tensor_vec({ai: one}, k.coalgebra.comult[ki], dk * dk))
        return out

    for axiom, on_right in (("PRHCA3", True), ("PRHCA4", False)):
        wit = []
        for i in range(a.dim):
            lhs = lhs_rho_rho(i)
            mid = delta_side(i)
            rhs = _tensor3_mul(pc, mid, rho_one_t) if on_right else _tensor3_mul(pc, rho_one_t, mid)
            if lhs != rhs:
                wit.append(Witness((a.name(i),), "(ρ⊗I)ρ", "(I⊗Δ)ρ · (ρ(1)⊗1)" if on_right else "(ρ(1)⊗1) · (I⊗Δ)ρ"))
        rep.add(axiom, wit)

    wit = []
    sq = tensor_mul_ak(pc, rho_one, rho_one)
    if sq != rho_one:
        wit.append(Witness(("1",), "ρ(1)²", "ρ(1)"))
    for i in range(a.dim):
        r = pc.rho.col(i)
        if tensor_mul_ak(pc, r, rho_one) != r or tensor_mul_ak(pc, rho_one, r) != r:
            wit.append(Witness((a.name(i),), "ρ(a)ρ(1) / ρ(1)ρ(a)", "ρ(a)"))
    rep.add("PRHCA.idempotent", wit)

    rep.flags["symmetric"] = rep.check("PRHCA4").ok
    rep.flags["global"] = is_global_coaction(pc)
    rep.dims["K"] = dk
    rep.dims["A"] = a.dim
    return rep


def is_global_coaction(pc):
    one = _one_of(pc.a)
    return pc.rho_one() == tensor_vec(pc.a.unit_vec(), pc.k.algebra.unit, pc.k.dim)


def restricted_coaction(pc, e):
    """Restrict a global coaction on B to the unital ideal eB, ρ̲(a) = (e⊗1)ρ(a)."""
    b = pc.a
    if b.mul(e, e) != e:
        raise NotIdempotent("e is not idempotent")
    one = _one_of(b)
    for j in range(b.dim):
        if b.mul(e, {j: one}) != b.mul({j: one}, e):
            raise NotCentral("e is not central", b.name(j))
    if not is_global_coaction(pc):
        raise NotGlobal("coaction not global")
    lm = Mat.from_function(b.dim, b.dim, lambda j: b.mul(e, {j: one}))
    carrier = image(lm)
    m = carrier.dim
    names = _carrier_names(carrier, b.names, None)
    mult = tuple(
        tuple(carrier.coords(b.mul(carrier.rows[i], carrier.rows[j])) for j in range(m)) for i in range(m)
    )
    sub = AlgebraSC(m, mult, carrier.coords(e), names)
    dk = pc.k.dim
    e_tensor = tensor_vec(e, pc.k.algebra.unit, dk)

    def rho_col(j):
        moved = tensor_mul_ak(pc, e_tensor, pc.rho.apply(carrier.rows[j]))
        out = {}
        for idx, c in moved.items():
            ai, ki = divmod(idx, dk)
            coords = carrier.coords({ai: one})
            for x, cx in coords.items():
                s = out.get(x * dk + ki)
                s = c * cx if s is None else s + c * cx
                if s:
                    out[x * dk + ki] = s
                else:
                    out.pop(x * dk + ki, None)
        return out

    rho = Mat.from_function(m * dk, m, rho_col)
    return PartialCoaction(pc.k, sub, rho)


@dataclass
class ReducedTensor:
    """The unital ideal A⊗̲K = (A⊗K)ρ(1) in canonical carrier coordinates."""

    pc: PartialCoaction
    carrier: Subspace
    algebra: AlgebraSC
    embed: Mat
    project: Mat

    @property
    def dim(self):
        return self.carrier.dim

    def ambient_mul(self, u, v):
        return tensor_mul_ak(self.pc, u, v)


def reduced_tensor(pc):
    pc.ensure_checked()
    a, k = pc.a, pc.k
    dk = k.dim
    rho_one = pc.rho_one()
    n = a.dim * dk
    one = _one_of(a)
    rmul = Mat.from_function(n, n, lambda j: tensor_mul_ak(pc, {j: one}, rho_one))
    carrier = image(rmul)
    m = carrier.dim
    names = _carrier_names(carrier, a.names, k.names, sep="⊗", right_dim=dk)
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = tensor_mul_ak(pc, carrier.rows[i], carrier.rows[j])
            coords = carrier.coords(prod)
            if coords is None:
                raise CoactionAxiomFailure("reduced tensor left its own carrier", None)
            row.append(coords)
        mult.append(tuple(row))
    unit = carrier.coords(rho_one)
    if unit is None:
        raise CoactionAxiomFailure("ρ(1) is not in the carrier", None)
    alg = AlgebraSC(m, tuple(mult), unit, names)
    embed = carrier.embed_matrix()
    project = Mat.from_function(m, n, lambda j: carrier.coords(rmul.col(j)))
    return ReducedTensor(pc, carrier, alg, embed, project)


def _delta_raw_cols(pc, rt):
    """Δ̃(a1⁰⊗h1¹) = a1⁰⊗h₍₁₎1¹ ⊗ 1⁰'⊗h₍₂₎1¹' on carrier coordinates."""
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)
    rho_one = pc.rho_one()
    m = rt.dim

    def delta_col(x):
        out = {}
        for idx, c in rt.carrier.rows[x].items():
            ai, ki = divmod(idx, dk)
            for k1, k2, w in k.coalgebra.delta_pairs(ki):
                left = rt.carrier.coords(tensor_mul_ak(pc, tensor_vec({ai: one}, {k1: one}, dk), rho_one))
                right = rt.carrier.coords(tensor_mul_ak(pc, tensor_vec(a.unit_vec(), {k2: one}, dk), rho_one))
                vaxpy(out, c * w, tensor_vec(left, right, m))
        return out

    return Mat.from_function(m * m, m, delta_col)


def _eps_cols(pc, rt):
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)

    def eps_col(x):
        out = {}
        for idx, c in rt.carrier.rows[x].items():
            ai, ki = divmod(idx, dk)
            e = k.coalgebra.counit.get(ki)
            if e:
                vaxpy(out, c * e, {ai: one})
        return out

    return Mat.from_function(a.dim, rt.dim, eps_col)


def split_coring(pc):
    """Lemma-level A-coring on A⊗̲K with b·(a1⁰⊗x1¹)·b′ = bab′⁰⊗xb′¹."""
    from .hopf_algebroid import ACoring

    rt = reduced_tensor(pc)
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)
    m = rt.dim

    def lact_col(idx):
        ai, xj = divmod(idx, m)
        moved = tensor_mul_ak(pc, tensor_vec({ai: one}, k.algebra.unit, dk), rt.carrier.rows[xj])
        return rt.carrier.coords(moved)

    def ract_col(idx):
        xi, aj = divmod(idx, a.dim)
        moved = tensor_mul_ak(pc, rt.carrier.rows[xi], pc.rho.col(aj))
        return rt.carrier.coords(moved)

    lact = Mat.from_function(m, a.dim * m, lact_col)
    ract = Mat.from_function(m, m * a.dim, ract_col)
    return ACoring(
        base=a,
        dim=m,
        lact=lact,
        ract=ract,
        comult_raw=_delta_raw_cols(pc, rt),
        counit=_eps_cols(pc, rt),
        names=rt.algebra.names,
        provenance={"kind": "split-coring", "reduced": rt},
    )


def partial_split_hopf_algebroid(pc):
    """Theorem-level construction: the partial split Hopf algebroid A⊗̲K.

    Requires K and A commutative and the coaction symmetric; all
    machine-checked.  For a global coaction the result coincides with the
    split Hopf algebroid on A⊗K.
    """
    from .hopf_algebroid import HopfAlgebroid

    report = check_partial_coaction(pc)
    if not report.ok:
        raise CoactionAxiomFailure("partial coaction fails its axioms", report)
    if not is_commutative(pc.k.algebra):
        raise PreconditionFailure("K not commutative")
    if not is_commutative(pc.a):
        raise PreconditionFailure("base algebra not commutative")
    if not report.flags["symmetric"]:
        raise PreconditionFailure("coaction not symmetric (PRHCA4 fails)")
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)
    rt = reduced_tensor(pc)
    m = rt.dim
    rho_one = pc.rho_one()

    def s_col(ai):
        return rt.carrier.coords(tensor_mul_ak(pc, tensor_vec({ai: one}, k.algebra.unit, dk), rho_one))

    def t_col(ai):
        return rt.carrier.coords(pc.rho.col(ai))

    s = Mat.from_function(m, a.dim, s_col)
    t = Mat.from_function(m, a.dim, t_col)
    delta_raw = _delta_raw_cols(pc, rt)
    eps = _eps_cols(pc, rt)

    def antipode_col(x):
        out = {}
        for idx, c in rt.carrier.rows[x].items():
            ai, ki = divmod(idx, dk)
            s_of_k = k.antipode.col(ki)
            part = tensor_mul_ak(pc, pc.rho.col(ai), tensor_vec(a.unit_vec(), s_of_k, dk))
            part = tensor_mul_ak(pc, part, rho_one)
            vaxpy(out, c, rt.carrier.coords(part))
        return out

    antipode = Mat.from_function(m, m, antipode_col)
    return HopfAlgebroid(
        total=rt.algebra,
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
        provenance={"kind": "partial-split", "reduced": rt},
    )


def left_dual_ring_compare(pc, h, pairing):
    """Compare the left dual ring of the split coring with (A^op # H^cop)^op.

    `h` is the Hopf package paired against pc.k by `pairing`.  The candidate
    map Θ(a#h)(x) = a·((I⊗⟨h,−⟩)(x)) is evaluated law by law; its failures
    are findings, not crashes.
    """
    from .partial_actions import PartialAction, smash_product
    from .structures import check_pairing, op_algebra, op_cop_transformers

    rep = Report("left-dual-ring-compare")
    pc.ensure_checked()
    pairing_report = check_pairing(pairing, h, pc.k, kind="hopf")
    rep.add("pairing.valid", [] if pairing_report.ok else
            [Witness((pairing_report.first_failure().axiom,), "fails", "passes")])
    coring = split_coring(pc)
    rt = coring.provenance["reduced"]
    a, k = pc.a, pc.k
    dk = k.dim
    one = _one_of(a)
    m = coring.dim

    # left dual: all left-A-linear maps f: carrier -> A, f(a.x) = a f(x)
    # unknowns f[t][x] (value coordinate t, carrier coordinate x)
    n_unknown = a.dim * m
    rows = []
    for ai in range(a.dim):
        for x in range(m):
            moved = coring.l({ai: one}, {x: one})
            # f(moved) - a_i * f(e_x) = 0, coordinatewise in t
            for t in range(a.dim):
                row = {}
                for xj, c in moved.items():
                    row[t * m + xj] = row.get(t * m + xj, 0) + c
                # subtract coefficient of a_i * f(e_x): a_i * e_u has coords
                for u in range(a.dim):
                    prod = a.mult[ai][u]
                    c = prod.get(t)
                    if c:
                        key = u * m + x
                        s = row.get(key, 0) - c
                        if s:
                            row[key] = s
                        else:
                            row.pop(key, None)
                row = {kk: vv for kk, vv in row.items() if vv}
                if row:
                    rows.append(row)
    dual_basis = kernel(Mat.from_rows(rows, n_unknown))
    rep.dims["left_dual"] = dual_basis.dim

    def f_apply(fvec, xvec):
        out = {}
        for key, cf in fvec.items():
            t, xj = divmod(key, m)
            cx = xvec.get(xj)
            if cx:
                vaxpy(out, cf * cx, {t: one})
        return out

    def convolve(f, g):
        # (f*g)(x) = g(x_(1) . f(x_(2)))
        cols = []
        for x in range(m):
            out = {}
            for idx, c in coring.comult_raw.col(x).items():
                u, v = divmod(idx, m)
                moved = coring.r({u: one}, f_apply(f, {v: one}))
                vaxpy(out, c, f_apply(g, moved))
            cols.append(out)
        return cols

    def dual_vec_of_fn(cols):
        out = {}
        for x, col in enumerate(cols):
            for t, c in col.items():
                out[t * m + x] = c
        return out

    # smash side: (A^op # H^cop)^op via the pairing-induced action
    h_cop = op_cop_transformers(h, "cop")
    a_op = op_algebra(a)
    act = Mat.from_function(a.dim, h_cop.dim * a.dim, lambda idx: _induced_act_col(pc, pairing, idx))
    pa = PartialAction(h_cop, a_op, act)
    act_report = check_partial_action(pa)
    rep.add("smash-side.partial_action", [] if act_report.ok else [Witness((act_report.first_failure().axiom,), "fails", "passes")])
    if not act_report.ok:
        return rep
    sp = smash_product(pa)
    b_alg = op_algebra(sp.algebra)
    rep.dims["smash_op"] = b_alg.dim

    dh = h_cop.dim

    def theta_of_elem(idx):
        ai, hi = divmod(idx, dh)
        cols = []
        for x in range(m):
            out = {}
            for jdx, c in rt.carrier.rows[x].items():
                aj, kj = divmod(jdx, dk)
                val = c * pairing.value(hi, kj)
                if val:
                    vaxpy(out, val, a.mult[ai][aj])
            cols.append(out)
        return cols

    def theta(vec):
        cols = [dict() for _ in range(m)]
        for idx, c in vec.items():
            for x, col in enumerate(theta_of_elem(idx)):
                vaxpy(cols[x], c, col)
        return cols

    theta_mat_cols = []
    linear_ok = True
    for i in range(b_alg.dim):
        fv = dual_vec_of_fn(theta(sp.carrier.rows[i]))
        coords = dual_basis.coords(fv)
        if coords is None:
            linear_ok = False
            theta_mat_cols.append({})
        else:
            theta_mat_cols.append(fv)
    rep.add("theta.lands_in_left_dual", [] if linear_ok else [Witness((), "Θ image", "left-A-linear maps")])
    theta_mat = Mat.from_cols(n_unknown, theta_mat_cols)
    bij = linear_ok and theta_mat.rank() == dual_basis.dim == b_alg.dim
    rep.add("theta.bijective", [] if bij else [Witness(("rank",), str(theta_mat.rank()), str(dual_basis.dim))])
    rep.flags["theta_bijective"] = bij

    wit = []
    if linear_ok:
        for i in range(b_alg.dim):
            for j in range(b_alg.dim):
                prod = b_alg.mult[i][j]
                lhs_cols = [dict() for _ in range(m)]
                for idx, c in prod.items():
                    for x, col in enumerate(theta(sp.carrier.rows[idx])):
                        vaxpy(lhs_cols[x], c, col)
                rhs_cols = convolve(dual_vec_of_fn(theta(sp.carrier.rows[i])),
                                    dual_vec_of_fn(theta(sp.carrier.rows[j])))
                if lhs_cols != rhs_cols:
                    wit.append(Witness((b_alg.name(i), b_alg.name(j)), "Θ(uv)", "Θ(u)*Θ(v)"))
    rep.add("theta.multiplicative", wit)
    wit = []
    unit_cols = [dict() for _ in range(m)]
    for idx, c in b_alg.unit.items():
        for x, col in enumerate(theta(sp.carrier.rows[idx])):
            vaxpy(unit_cols[x], c, col)
    eps_cols = [coring.counit.col(x) for x in range(m)]
    if unit_cols != eps_cols:
        wit.append(Witness(("1",), "Θ(1)", "ε̃"))
    rep.add("theta.unit", wit)
    rep.flags["theta_multiplicative"] = rep.check("theta.multiplicative").ok and rep.check("theta.unit").ok
    return rep


def _induced_act_col(pc, pairing, idx):
    """h·a = a⁰⟨h,a¹⟩ as columns of an action matrix (H^cop convention shares it)."""
    a = pc.a
    dk = pc.k.dim
    dh = pairing.form.nrows
    hi, ai = divmod(idx, a.dim)
    out = {}
    one = _one_of(a)
    for jdx, c in pc.rho.col(ai).items():
        aj, kj = divmod(jdx, dk)
        val = c * pairing.value(hi, kj)
        if val:
            vaxpy(out, val, {aj: one})
    return out
