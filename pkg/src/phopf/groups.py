"""Finite groups as multiplication tables with named elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .errors import InvalidGroupTable


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # table[i][j] = index of g_i g_j
    unit: int
    inv: tuple
    names: tuple

    def mul(self, i, j):
        return self.table[i][j]

    def name(self, i):
        return self.names[i]

    def elements(self):
        return range(self.order)

    def is_abelian(self):
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(self.order))


def _validate(table):
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise InvalidGroupTable("table is not an n x n array of indices")
    unit = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            unit = e
            break
    if unit is None:
        raise InvalidGroupTable("no two-sided unit")
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == unit and table[j][i] == unit:
                inv[i] = j
                break
        if inv[i] is None:
            raise InvalidGroupTable("element %d has no inverse" % i)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InvalidGroupTable("associativity fails at (%d, %d, %d)" % (i, j, k))
    return unit, tuple(inv)


def from_table(table, names=None):
    unit, inv = _validate(table)
    n = len(table)
    if names is None:
        names = tuple("g%d" % i for i in range(n))
    return FiniteGroup(n, tuple(tuple(r) for r in table), unit, inv, tuple(names))


def trivial_group():
    return from_table([[0]], names=("e",))


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + ["g" if i == 1 else "g^%d" % i for i in range(1, n)]
    return from_table(table, names=names[:n] if n > 1 else ("e",))


def klein_four():
    # Z2 x Z2 with elements e, a, b, ab
    def mul(x, y):
        return (x[0] ^ y[0], x[1] ^ y[1])

    els = [(0, 0), (1, 0), (0, 1), (1, 1)]
    table = [[els.index(mul(x, y)) for y in els] for x in els]
    return from_table(table, names=("e", "a", "b", "ab"))


def symmetric(n):
    """S_n with elements the permutations of range(n) in lexicographic order."""
    els = list(permutations(range(n)))
    idx = {p: i for i, p in enumerate(els)}
    # (p*q)(x) = p(q(x))
    table = [[idx[tuple(p[q[x]] for x in range(n))] for q in els] for p in els]

    def pname(p):
        if all(p[i] == i for i in range(n)):
            return "e"
        seen, cycles = set(), []
        for s in range(n):
            if s in seen or p[s] == s:
                continue
            cyc, x = [], s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = p[x]
            cycles.append("(" + " ".join(str(y) for y in cyc) + ")")
        return "".join(cycles)

    return from_table(table, names=[pname(p) for p in els])


def direct_product(g, h):
    n, m = g.order, h.order

    def mul(a, b):
        return (g.mul(a // m, b // m) * m) + h.mul(a % m, b % m)

    table = [[mul(a, b) for b in range(n * m)] for a in range(n * m)]
    names = ["%s|%s" % (g.name(a // m), h.name(a % m)) for a in range(n * m)]
    return from_table(table, names=names)


def subgroups(g):
    """All subgroups as sorted element tuples (brute force; fine for order <= 12)."""
    found = set()
    n = g.order
    # grow subgroups by closing generator sets
    def close(gens):
        els = {g.unit}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in els:
                continue
            els.add(x)
            for y in list(els):
                for z in (g.mul(x, y), g.mul(y, x), g.inv[x]):
                    if z not in els:
                        frontier.append(z)
        return tuple(sorted(els))

    found.add(close(()))
    frontier = [close(())]
    while frontier:
        h = frontier.pop()
        for x in range(n):
            if x in h:
                continue
            h2 = close(h + (x,))
            if h2 not in found:
                found.add(h2)
                frontier.append(h2)
    return sorted(found, key=lambda t: (len(t), t))


def coset_action(g, subgroup):
    """Left multiplication action of g on left cosets of `subgroup`.

    Returns (n_points, act) with act[gi][point] the image point.
    """
    sub = set(subgroup)
    cosets = []
    seen = set()
    for x in range(g.order):
        if x in seen:
            continue
        cos = tuple(sorted(g.mul(x, s) for s in sub))
        seen.update(cos)
        cosets.append(cos)
    index_of = {}
    for i, cos in enumerate(cosets):
        for x in cos:
            index_of[x] = i
    act = [[index_of[g.mul(a, cos[0])] for cos in cosets] for a in range(g.order)]
    return len(cosets), act
