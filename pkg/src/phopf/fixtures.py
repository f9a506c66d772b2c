"""Desk-scale fixtures used across the test suite and the CLI examples.

E1: G=Z2 acting partially on X={1,2} with X_g={1}, α_g=id, as a kZ2-action
    on Fun(X) with δ_g·f = f(1)χ₁.
E2: the matching (kZ2)*-coaction ρ̄(f) = f⊗p_e + f(1)χ₁⊗p_g.
E3: the two-grouplike partial kZ2-module coalgebra (δ_g·x₁=x₁, δ_g·x₂=0).
E3*: the matching (kZ2)*-comodule coalgebra (λx₁=1⊗x₁, λx₂=p_e⊗x₂).
"""

from __future__ import annotations

from .fields import QQ
from .groups import cyclic, symmetric, trivial_group
from .linalg import Mat, tensor_vec
from .structures import (
    HopfPackage,
    Pairing,
    dual_group_hopf,
    function_algebra,
    group_algebra,
    grouplike_coalgebra,
)
from .partial_actions import PartialAction
from .partial_coactions import PartialCoaction
from .coalgebra_partial import PartialComoduleCoalgebra, PartialModuleCoalgebra
from .groups_groupoids import SetPartialAction, restrict_global_action, to_dual_partial_coaction, to_kg_partial_action


def e1_set(field=QQ):
    """G=Z2 on X={1,2}: X_g={1}, α_g = id."""
    g = cyclic(2)
    return SetPartialAction(g, 2, ((0, 1), (0,)), ({0: 0, 1: 1}, {0: 0}))


def global_swap_set(field=QQ):
    g = cyclic(2)
    return SetPartialAction(g, 2, ((0, 1), (0, 1)), ({0: 0, 1: 1}, {0: 1, 1: 0}))


def z3_idem_set():
    """Z3 on {1,2,3} with X_g = X_g2 = {1}, α = id."""
    g = cyclic(3)
    return SetPartialAction(g, 3, ((0, 1, 2), (0,), (0,)), ({0: 0, 1: 1, 2: 2}, {0: 0}, {0: 0}))


def z3_cycle_global_set():
    """Z3 acting globally on {1,2,3} by the 3-cycle."""
    g = cyclic(3)
    cyc = {0: 1, 1: 2, 2: 0}
    cyc2 = {0: 2, 1: 0, 2: 1}
    return SetPartialAction(g, 3, ((0, 1, 2), (0, 1, 2), (0, 1, 2)), ({0: 0, 1: 1, 2: 2}, cyc, cyc2))


def z3_restricted_set():
    """The 3-cycle on {1,2,3} restricted to Y={1,2}: moving partial bijections."""
    return restrict_global_action(z3_cycle_global_set(), (0, 1))


def e1(field=QQ):
    return to_kg_partial_action(e1_set(), field)


def e2(field=QQ):
    return to_dual_partial_coaction(e1_set(), field)


def global_swap_action(field=QQ):
    return to_kg_partial_action(global_swap_set(), field)


def global_swap_coaction(field=QQ):
    return to_dual_partial_coaction(global_swap_set(), field)


def kz2(field=QQ):
    return group_algebra(cyclic(2), field)


def kz2_dual(field=QQ):
    return dual_group_hopf(cyclic(2), field)


def canonical_z2_pairing(field=QQ):
    return Pairing(Mat.identity(2, field.one()))


def e3(field=QQ):
    """Partial kZ2-module coalgebra on two grouplikes."""
    h = group_algebra(cyclic(2), field)
    c = grouplike_coalgebra(2, field)
    one = field.one()
    # columns indexed h_i*dimC + c_j
    cols = [{0: one}, {1: one}, {0: one}, {}]
    act = Mat.from_cols(2, cols)
    return PartialModuleCoalgebra(h, c, act)


def e3_star(field=QQ):
    """Partial (kZ2)*-comodule coalgebra on the same two grouplikes."""
    k = dual_group_hopf(cyclic(2), field)
    c = grouplike_coalgebra(2, field)
    one = field.one()
    # lam columns over index k_i*dimC + c_j; λ(x1) = (p_e+p_g)⊗x1, λ(x2) = p_e⊗x2
    lam = Mat.from_cols(4, [{0: one, 2: one}, {1: one}])
    return PartialComoduleCoalgebra(k, c, lam)


def z3_grouplike_coalgebra_action(field=QQ):
    """Z3 grouplike fixture with one invariant grouplike (δ_g·x1=x1, others 0)."""
    h = group_algebra(cyclic(3), field)
    c = grouplike_coalgebra(3, field)
    one = field.one()
    cols = []
    for hi in range(3):
        for cj in range(3):
            if hi == 0:
                cols.append({cj: one})
            else:
                cols.append({0: one} if cj == 0 else {})
    act = Mat.from_cols(3, cols)
    return PartialModuleCoalgebra(h, c, act)


def evaluation_pairing_fun_grouplike(n=2, field=QQ):
    """(χ_i, x_j) = δ_ij between Fun({1..n}) and the n-grouplike coalgebra."""
    return Pairing(Mat.identity(n, field.one()))


def trivial_action_on_fun(n=2, field=QQ):
    """Trivial group acting on Fun({1..n})."""
    h = group_algebra(trivial_group(), field)
    a = function_algebra(n, field)
    one = field.one()
    act = Mat.from_cols(n, [{j: one} for j in range(n)])
    return PartialAction(h, a, act)


def matrix_algebra_trivial_action(field=QQ):
    """Trivial group on the 2x2 matrix algebra: a noncommutative-base refusal fixture."""
    from .structures import matrix_algebra

    h = group_algebra(trivial_group(), field)
    a = matrix_algebra(2, field)
    one = field.one()
    act = Mat.from_cols(4, [{j: one} for j in range(4)])
    return PartialAction(h, a, act)


# ---------------------------------------------------------------------------
# broken-by-construction fixtures (negative suite)


def broken_kz2_antipode(field=QQ):
    """kZ2 with S zeroed on δ_g: fails hopf.antipode_left with witness δ_g."""
    p = kz2(field)
    s = Mat.from_cols(2, [{0: field.one()}, {}])
    return HopfPackage(p.algebra, p.coalgebra, s)


def broken_e1(field=QQ):
    """E1 twisted to δ_g·χ₁=χ₂, δ_g·χ₂=0: fails PLA3 exactly at (δ_g, δ_g, χ₂)."""
    pa = e1(field)
    one = field.one()
    cols = [dict(pa.act.col(0)), dict(pa.act.col(1)), {1: one}, {}]
    return PartialAction(pa.h, pa.a, Mat.from_cols(2, cols))


def broken_e2(field=QQ):
    """E2 with ρ̄(χ₂) += ½·χ₂⊗p_g: fails PRHCA1 exactly at (χ₂, χ₂)."""
    pc = e2(field)
    half = field.one() / (field.one() + field.one())
    col1 = dict(pc.rho.col(1))
    col1[1 * 2 + 1] = col1.get(3, field.zero()) + half
    return PartialCoaction(pc.k, pc.a, Mat.from_cols(4, [dict(pc.rho.col(0)), col1]))


def broken_set_action():
    """Z3 with global domains but α_g = α_g² = a transposition: fails (c) at (g,g,1)."""
    g = cyclic(3)
    tau = {0: 1, 1: 0, 2: 2}
    return SetPartialAction(g, 3, ((0, 1, 2), (0, 1, 2), (0, 1, 2)), ({0: 0, 1: 1, 2: 2}, dict(tau), dict(tau)))


def broken_e3_coalgebra(field=QQ):
    """E3 with Δx₂ := x₂⊗x₁: the upstream coalgebra counit check fails at x₂."""
    pmc = e3(field)
    one = field.one()
    c = pmc.c
    comult = (dict(c.comult[0]), {1 * 2 + 0: one})
    from .structures import CoalgebraSC

    broken_c = CoalgebraSC(2, comult, dict(c.counit), c.names)
    return PartialModuleCoalgebra(pmc.h, broken_c, pmc.act)


def broken_theta_group_action(field=QQ):
    """E3's coalgebra group action with θ_g(x₁) := -x₁: θ fails the counit-morphism check."""
    from .coalgebra_partial import CoalgebraGroupAction

    c = grouplike_coalgebra(2, field)
    one = field.one()
    p_e = Mat.identity(2, one)
    p_g = Mat.from_cols(2, [{0: one}, {}])
    theta_e = Mat.identity(2, one)
    theta_g = Mat.from_cols(2, [{0: -one}, {}])
    return CoalgebraGroupAction(cyclic(2), c, (p_e, p_g), (theta_e, theta_g))


def e3_group_action(field=QQ):
    """E3 presented as a partial group action on the coalgebra."""
    from .coalgebra_partial import CoalgebraGroupAction

    c = grouplike_coalgebra(2, field)
    one = field.one()
    p_e = Mat.identity(2, one)
    p_g = Mat.from_cols(2, [{0: one}, {}])
    theta_e = Mat.identity(2, one)
    theta_g = Mat.from_cols(2, [{0: one}, {}])
    return CoalgebraGroupAction(cyclic(2), c, (p_e, p_g), (theta_e, theta_g))


# ---------------------------------------------------------------------------
# randomized fixtures (restrictions of global actions per the idempotent recipe)


def random_set_partial_actions(count, rng, max_group=6, max_set=5, max_carrier=18):
    """Restrictions of random global actions to random subsets.

    Every output passes check_set_partial_action; the carrier bound keeps
    the downstream algebroid checks at desk scale.
    """
    from .groups import coset_action, klein_four, subgroups

    pool = [cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), klein_four(), symmetric(3)]
    pool = [g for g in pool if g.order <= max_group]
    out = []
    while len(out) < count:
        g = pool[rng.randrange(len(pool))]
        subs = subgroups(g)
        # build a global action on at most max_set points from coset actions
        points = 0
        maps = None
        for _ in range(20):
            h = subs[rng.randrange(len(subs))]
            n, act = coset_action(g, h)
            if n <= max_set:
                points, maps = n, act
                break
        if maps is None:
            continue
        # pad with fixed points now and then
        if points < max_set and rng.random() < 0.3:
            extra = rng.randrange(1, max_set - points + 1)
            maps = [row + [points + i for i in range(extra)] for row in maps]
            points += extra
        full = tuple(tuple(range(points)) for _ in range(g.order))
        alphas = tuple({x: maps[gi][x] for x in range(points)} for gi in range(g.order))
        spa = SetPartialAction(g, points, full, alphas)
        size = rng.randrange(1, points + 1)
        subset = tuple(sorted(rng.sample(range(points), size)))
        restricted = restrict_global_action(spa, subset)
        if sum(len(d) for d in restricted.domains) > max_carrier:
            continue
        out.append(restricted)
    return out
