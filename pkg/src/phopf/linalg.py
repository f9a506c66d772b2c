"""Exact sparse linear algebra: dict vectors, RREF, subspaces, quotient spaces.

Vectors are dicts {index: scalar} with zero entries never stored, so dict
equality is vector equality.  Matrices are column-sparse linear maps.  All
derived bases are canonical: RREF rows sorted by pivot column, quotient
bases by ascending free column.
"""

from __future__ import annotations

from .errors import DimensionMismatch


def vadd(u, v):
    out = dict(u)
    for k, x in v.items():
        s = out.get(k)
        s = x if s is None else s + x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vsub(u, v):
    out = dict(u)
    for k, x in v.items():
        s = out.get(k)
        s = -x if s is None else s - x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(c, v):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vaxpy(out, c, v):
    """out += c*v in place."""
    if not c:
        return out
    for k, x in v.items():
        s = out.get(k)
        s = c * x if s is None else s + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def tensor_vec(u, v, dim2):
    """u tensor v with index i*dim2 + j."""
    out = {}
    for i, cu in u.items():
        base = i * dim2
        for j, cv in v.items():
            c = cu * cv
            if c:
                out[base + j] = c
    return out


class Mat:
    """Column-sparse matrix, read as a linear map k^ncols -> k^nrows."""

    __slots__ = ("nrows", "ncols", "_cols")

    def __init__(self, nrows, ncols, cols):
        if len(cols) != ncols:
            raise DimensionMismatch("expected %d columns, got %d" % (ncols, len(cols)))
        self.nrows = nrows
        self.ncols = ncols
        self._cols = cols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, [{} for _ in range(ncols)])

    @classmethod
    def identity(cls, n, one):
        return cls(n, n, [{j: one} for j in range(n)])

    @classmethod
    def from_cols(cls, nrows, cols):
        return cls(nrows, len(cols), [dict(c) for c in cols])

    @classmethod
    def from_rows(cls, rows, ncols):
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, c in row.items():
                if c:
                    cols[j][i] = c
        return cls(len(rows), ncols, cols)

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        cols = [{} for _ in range(ncols)]
        for i, j, c in entries:
            if c:
                cols[j][i] = c
        return cls(nrows, ncols, cols)

    @classmethod
    def from_function(cls, nrows, ncols, f):
        """Column j is f(j), a Vec."""
        return cls(nrows, ncols, [dict(f(j)) for j in range(ncols)])

    def col(self, j):
        return self._cols[j]

    def entry(self, i, j):
        return self._cols[j].get(i)

    def apply(self, v):
        out = {}
        for j, c in v.items():
            vaxpy(out, c, self._cols[j])
        return out

    def __matmul__(self, other):
        if other.nrows != self.ncols:
            raise DimensionMismatch("matmul %dx%d @ %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols))
        return Mat(self.nrows, other.ncols, [self.apply(c) for c in other._cols])

    def __add__(self, other):
        self._same_shape(other)
        return Mat(self.nrows, self.ncols, [vadd(a, b) for a, b in zip(self._cols, other._cols)])

    def __sub__(self, other):
        self._same_shape(other)
        return Mat(self.nrows, self.ncols, [vsub(a, b) for a, b in zip(self._cols, other._cols)])

    def scaled(self, c):
        return Mat(self.nrows, self.ncols, [vscale(c, col) for col in self._cols])

    def _same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch %s vs %s" % ((self.nrows, self.ncols), (other.nrows, other.ncols)))

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self._cols == other._cols

    def transpose(self):
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self._cols):
            for i, c in col.items():
                cols[i][j] = c
        return Mat(self.ncols, self.nrows, cols)

    def rows(self):
        rows = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self._cols):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def entries(self):
        """Sorted (i, j, c) triples of nonzero entries."""
        out = []
        for j, col in enumerate(self._cols):
            for i, c in col.items():
                out.append((i, j, c))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def is_zero(self):
        return all(not c for c in self._cols)

    def rank(self):
        red = RowReducer()
        for col in self._cols:
            red.insert(col)
        return len(red.rows)

    def inverse(self):
        """Exact inverse, or None if singular (square matrices only)."""
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        one = None
        for col in self._cols:
            for c in col.values():
                one = c / c
                break
            if one is not None:
                break
        if one is None:
            return None
        aug = []
        for i, row in enumerate(self.rows()):
            r = dict(row)
            r[n + i] = one
            aug.append(r)
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            return None
        inv_rows = [{j - n: c for j, c in red[i].items() if j >= n} for i in range(n)]
        return Mat.from_rows(inv_rows, n)


class RowReducer:
    """Online fully inter-reduced row set keyed by pivot column.

    Inserted rows are reduced against the current rows and back-substituted,
    so at any moment the rows are the RREF of everything inserted so far.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    def residue(self, v):
        v = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = v.pop(p)
            for k, x in self.rows[p].items():
                if k == p:
                    continue
                s = v.get(k)
                s = -(c * x) if s is None else s - c * x
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        return v

    def insert(self, v):
        r = self.residue(v)
        if not r:
            return False
        lead = min(r)
        inv = r[lead] ** -1
        r = {k: inv * x for k, x in r.items()}
        for row in self.rows.values():
            c = row.get(lead)
            if c:
                for k, x in r.items():
                    s = row.get(k)
                    s = -(c * x) if s is None else s - c * x
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        self.rows[lead] = r
        return True

    def canonical(self):
        pivots = sorted(self.rows)
        return [dict(self.rows[p]) for p in pivots], pivots


def rref(rows, ncols=None):
    """Canonical reduced row-echelon form of a spanning list of dict rows.

    Returns (rows, pivots); rows are sorted by pivot column, each with
    leading coefficient 1 and zeros in every other pivot column.
    """
    red = RowReducer()
    for v in rows:
        red.insert(v)
    return red.canonical()


class Subspace:
    """A subspace given by its canonical RREF basis; equality is basis equality."""

    __slots__ = ("ambient", "rows", "pivots", "_by_pivot")

    def __init__(self, ambient, rows, pivots):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        self._by_pivot = dict(zip(pivots, rows))

    @classmethod
    def from_spanning(cls, vectors, ambient):
        rows, pivots = rref(vectors)
        if pivots and pivots[-1] >= ambient:
            raise DimensionMismatch("vector index %d outside ambient %d" % (pivots[-1], ambient))
        return cls(ambient, rows, pivots)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return self.rows

    def coords(self, v):
        """Coordinates of v in the RREF basis, or None if v is outside."""
        coords = {}
        residual = dict(v)
        for p in [k for k in residual if k in self._by_pivot]:
            c = residual.pop(p)
            coords[self.pivots.index(p)] = c
            for k, x in self._by_pivot[p].items():
                if k == p:
                    continue
                s = residual.get(k)
                s = -(c * x) if s is None else s - c * x
                if s:
                    residual[k] = s
                else:
                    residual.pop(k, None)
        if residual:
            return None
        return coords

    def contains(self, v):
        return self.coords(v) is not None

    def embed(self, coords):
        out = {}
        for i, c in coords.items():
            vaxpy(out, c, self.rows[i])
        return out

    def embed_matrix(self):
        return Mat.from_cols(self.ambient, self.rows)

    def coords_matrix_of(self, mat):
        """Express each column of `mat` (ambient coords) in this basis."""
        cols = []
        for j in range(mat.ncols):
            c = self.coords(mat.col(j))
            if c is None:
                return None
            cols.append(c)
        return Mat.from_cols(self.dim, cols)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.pivots == other.pivots and self.rows == other.rows


class QuotientSpace:
    """Ambient space modulo a relation subspace.

    The quotient basis is the classes of the ambient basis vectors at the
    non-pivot (free) columns of the relation RREF, in ascending order;
    projection(section) = identity and projection kills exactly the relations.
    """

    __slots__ = ("ambient", "relations", "free", "_pos")

    def __init__(self, ambient, relations):
        if relations.ambient != ambient:
            raise DimensionMismatch("relations live in dim %d, not %d" % (relations.ambient, ambient))
        self.ambient = ambient
        self.relations = relations
        pivotset = set(relations.pivots)
        self.free = [c for c in range(ambient) if c not in pivotset]
        self._pos = {c: i for i, c in enumerate(self.free)}

    @property
    def dim(self):
        return len(self.free)

    def project(self, v):
        out = {}
        pos = self._pos
        by_pivot = self.relations._by_pivot
        for idx, c in v.items():
            row = by_pivot.get(idx)
            if row is None:
                i = pos[idx]
                s = out.get(i)
                s = c if s is None else s + c
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
            else:
                # e_idx = -(tail of its relation row) modulo relations
                for k, x in row.items():
                    if k == idx:
                        continue
                    i = pos[k]
                    s = out.get(i)
                    s = -(c * x) if s is None else s - c * x
                    if s:
                        out[i] = s
                    else:
                        out.pop(i, None)
        return out

    def section(self, qv):
        return {self.free[i]: c for i, c in qv.items()}

    def projection_matrix(self):
        return Mat.from_function(self.dim, self.ambient, lambda j: self.project({j: _one_like(self)}))

    def section_matrix(self):
        return Mat.from_function(self.ambient, self.dim, lambda i: {self.free[i]: _one_like(self)})


def _one_like(q):
    for row in q.relations.rows:
        for c in row.values():
            return c / c
    from fractions import Fraction

    return Fraction(1)


def quotient_by(ambient, rels):
    return QuotientSpace(ambient, rels)


def image(m):
    return Subspace.from_spanning(m._cols, m.nrows)


def kernel(m):
    """Kernel of the map m: k^ncols -> k^nrows, as a canonical Subspace."""
    rows, pivots = rref(m.rows())
    by_pivot = dict(zip(pivots, rows))
    pivotset = set(pivots)
    one = None
    for row in rows:
        for c in row.values():
            one = c / c
            break
        break
    basis = []
    for c in range(m.ncols):
        if c in pivotset:
            continue
        v = {}
        if one is not None:
            v[c] = one
        else:
            v[c] = 1
        for p in pivots:
            x = by_pivot[p].get(c)
            if x:
                v[p] = -x
        basis.append(v)
    return Subspace.from_spanning(basis, m.ncols)


def solve_linear(m, b):
    """One exact solution x of m x = b, or None (free variables set to 0)."""
    n = m.ncols
    rows = m.rows()
    aug = []
    for i, row in enumerate(rows):
        r = dict(row)
        c = b.get(i)
        if c:
            r[n] = c
        aug.append(r)
    red, pivots = rref(aug)
    x = {}
    for row, p in zip(red, pivots):
        if p == n:
            return None
        c = row.get(n)
        if c:
            x[p] = c
    return x


def kron(a, b):
    """Kronecker product as a map on tensor indices i*b.ncols + j."""
    cols = []
    for ja in range(a.ncols):
        ca = a.col(ja)
        for jb in range(b.ncols):
            cols.append(tensor_vec(ca, b.col(jb), b.nrows))
    return Mat(a.nrows * b.nrows, a.ncols * b.ncols, cols)
