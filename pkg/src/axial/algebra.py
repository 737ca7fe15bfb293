"""Commutative algebras given by structure constants, with the exact
invariants needed downstream: annihilator, generated subalgebras and ideals,
the space of invariant (Frobenius) bilinear forms, and a Jordan-identity
checker based on full linearization.

Elements are tuples of Scalars in the fixed basis of the algebra.
"""

from __future__ import annotations

from .errors import DimensionMismatchError, FieldMismatchError
from .linalg import (Matrix, RowReducer, Subspace, unit_vector, vec_add,
                     vec_is_zero, vec_scale, vec_zero)
from .scalars import Scalar


class Algebra:
    """Commutative algebra over QQ or QI with product given by structure
    constants: basis_i * basis_j = sum_k c[i][j][k] basis_k.

    products: dict mapping (i, j) with i <= j to a sparse dict {k: Scalar};
    missing pairs multiply to zero.
    """

    def __init__(self, dim, products, tag, labels=None):
        self.dim = dim
        self.tag = tag
        self.labels = tuple(labels) if labels else tuple(f"b{k+1}" for k in range(dim))
        if len(self.labels) != dim:
            raise DimensionMismatchError("label count differs from dimension")
        rows = [[None] * dim for _ in range(dim)]
        for (i, j), entry in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError(f"basis index out of range in pair {(i, j)}")
            entry = {k: c for k, c in entry.items() if c}
            for k, c in entry.items():
                if not (0 <= k < dim):
                    raise DimensionMismatchError(f"target index {k} out of range")
                if c.tag is not tag:
                    raise FieldMismatchError("structure constant from a different field")
            lo, hi = min(i, j), max(i, j)
            if rows[lo][hi] is not None and rows[lo][hi] != entry:
                raise DimensionMismatchError(
                    f"conflicting products for basis pair ({lo}, {hi})")
            rows[lo][hi] = entry
            rows[hi][lo] = entry
        empty = {}
        for i in range(dim):
            for j in range(dim):
                if rows[i][j] is None:
                    rows[i][j] = empty
        self._rows = rows

    # -- products -----------------------------------------------------------

    def basis_product(self, i, j):
        """Sparse product of two basis elements: dict {k: Scalar}."""
        return self._rows[i][j]

    def basis_element(self, k):
        return unit_vector(self.dim, k, self.tag)

    def zero(self):
        return vec_zero(self.dim, self.tag)

    def element(self, coeffs):
        """Build an element from {index: Scalar} or a full sequence."""
        if isinstance(coeffs, dict):
            z = Scalar.zero(self.tag)
            return tuple(coeffs.get(k, z) for k in range(self.dim))
        out = tuple(coeffs)
        if len(out) != self.dim:
            raise DimensionMismatchError("element length differs from dimension")
        return out

    def product_sparse(self, x, y):
        """Product of sparse elements (dicts {index: Scalar}) as a sparse dict."""
        acc = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                ab = a * b
                for k, c in self._rows[i][j].items():
                    v = acc.get(k)
                    v = v + ab * c if v is not None else ab * c
                    if v:
                        acc[k] = v
                    elif k in acc:
                        del acc[k]
        return acc

    def product(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("element length differs from dimension")
        sx = {i: a for i, a in enumerate(x) if a}
        sy = {j: b for j, b in enumerate(y) if b}
        return self.element(self.product_sparse(sx, sy))

    def left_mult_matrix(self, x):
        """Matrix of y -> x*y in the algebra basis (columns are x*basis_j)."""
        cols = [self.product(x, self.basis_element(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.tag, nrows=self.dim)

    def is_idempotent(self, x):
        return self.product(x, x) == tuple(x)

    # -- invariants ----------------------------------------------------------

    def annihilator(self):
        """{x : x*A = 0} as a Subspace."""
        # x in Ann iff for all j, k: sum_i x_i c[i][j][k] = 0
        constraints = RowReducer(self.dim, self.tag)
        for j in range(self.dim):
            for k in range(self.dim):
                row = {}
                for i in range(self.dim):
                    c = self._rows[i][j].get(k)
                    if c:
                        row[i] = c
                if row:
                    constraints.add_row(row)
        return Subspace(constraints.kernel_basis(), self.dim, self.tag)

    def _span_is_closed(self, red):
        basis = red.dense_rows()
        for s, x in enumerate(basis):
            for y in basis[s:]:
                p = self.product(x, y)
                if red.reduce_row({j: a for j, a in enumerate(p) if a}):
                    return False
        return True

    def subalgebra_closure(self, generators):
        """Smallest product-closed subspace containing the generators.

        Returns (subspace, m): m is the smallest word length such that the
        closure is spanned by products of generators of length <= m (m = 1
        when the generators' span is already product-closed).

        Word layers keep only words that enlarged the span; a dropped word is
        a combination of kept words of the same or shorter length, so spans of
        each word length are unaffected.
        """
        layers = [[tuple(g) for g in generators]]
        red = RowReducer(self.dim, self.tag)
        for g in generators:
            red.add_row({j: a for j, a in enumerate(g) if a})
        m = 1
        while not (red.rank() == self.dim or self._span_is_closed(red)):
            d = len(layers) + 1  # build words of length d
            new_layer = []
            for split in range(1, d // 2 + 1):
                for x in layers[split - 1]:
                    for y in layers[d - split - 1]:
                        p = self.product(x, y)
                        if red.add_row({j: a for j, a in enumerate(p) if a}):
                            new_layer.append(p)
            layers.append(new_layer)
            if new_layer:
                m = d
        return Subspace(red.dense_rows(), self.dim, self.tag), m

    def ideal_closure(self, generators):
        """Smallest ideal containing the generators."""
        red = RowReducer(self.dim, self.tag)
        queue = [tuple(g) for g in generators]
        for g in queue:
            red.add_row({j: a for j, a in enumerate(g) if a})
        while queue:
            x = queue.pop()
            for j in range(self.dim):
                p = self.product(x, self.basis_element(j))
                if not vec_is_zero(p) and red.add_row({k: a for k, a in enumerate(p) if a}):
                    queue.append(p)
        return Subspace(red.dense_rows(), self.dim, self.tag)

    def frobenius_space(self):
        """All symmetric bilinear forms with (xy, z) = (x, yz), as a list of
        BilinearForm, from the RREF basis of the solution space."""
        n = self.dim
        idx = _sym_index(n)
        red = RowReducer(len(idx), self.tag)
        # (b_i b_j, b_k) = (b_i, b_j b_k) for all i, j, k
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    row = {}
                    for l, c in self._rows[j][k].items():
                        col = idx[(min(i, l), max(i, l))]
                        v = row.get(col)
                        v = v + c if v is not None else c
                        if v:
                            row[col] = v
                        elif col in row:
                            del row[col]
                    for l, c in self._rows[i][j].items():
                        col = idx[(min(l, k), max(l, k))]
                        v = row.get(col)
                        v = v - c if v is not None else -c
                        if v:
                            row[col] = v
                        elif col in row:
                            del row[col]
                    if row:
                        red.add_row(row)
        basis = Subspace(red.kernel_basis(), len(idx), self.tag).basis
        return [BilinearForm(_unflatten_sym(v, n, self.tag), self.tag) for v in basis]

    def jordan_check(self):
        """Check the Jordan identity (xy)x^2 = x(yx^2) by full linearization.

        Returns None when the identity holds, else a witness (i, j, k, l) of
        basis indices where the linearized identity fails.
        """
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    pij, pik, pjk = self._rows[i][j], self._rows[i][k], self._rows[j][k]
                    for l in range(n):
                        acc = {}
                        for (a, pbc) in ((i, pjk), (j, pik), (k, pij)):
                            pal = self._rows[a][l]
                            # (b_a b_l)(b_b b_c)
                            _acc_add(acc, self.product_sparse(pal, pbc), 1)
                            # b_a (b_l (b_b b_c))
                            inner = self.product_sparse({l: Scalar.one(self.tag)}, pbc)
                            _acc_add(acc, self.product_sparse({a: Scalar.one(self.tag)}, inner), -1)
                        if acc:
                            return (i, j, k, l)
        return None

    def direct_sum(self, other):
        """Orthogonal direct sum; labels of the second summand are suffixed."""
        if self.tag is not other.tag:
            raise FieldMismatchError("direct sum over different fields")
        n = self.dim
        products = {}
        for i in range(n):
            for j in range(i, n):
                entry = self._rows[i][j]
                if entry:
                    products[(i, j)] = dict(entry)
        for i in range(other.dim):
            for j in range(i, other.dim):
                entry = other._rows[i][j]
                if entry:
                    products[(n + i, n + j)] = {n + k: c for k, c in entry.items()}
        labels = self.labels + tuple(f"{lab}'" for lab in other.labels)
        return Algebra(n + other.dim, products, self.tag, labels)

    def embed_first(self, x, total):
        z = Scalar.zero(self.tag)
        return tuple(x) + (z,) * (total - self.dim)

    def render_element(self, x):
        parts = []
        for a, lab in zip(x, self.labels):
            if not a:
                continue
            s = str(a)
            if s == "1":
                parts.append(lab)
            elif s == "-1":
                parts.append(f"-{lab}")
            else:
                parts.append(f"({s}){lab}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.tag.value})"


def _acc_add(acc, sparse, sign):
    for k, c in sparse.items():
        v = acc.get(k)
        d = c if sign > 0 else -c
        v = v + d if v is not None else d
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]


def _sym_index(n):
    """Column index for the upper triangle (i <= j), row-major."""
    idx = {}
    t = 0
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = t
            t += 1
    return idx


def _unflatten_sym(v, n, tag):
    idx = _sym_index(n)
    rows = [[None] * n for _ in range(n)]
    for (i, j), t in idx.items():
        rows[i][j] = v[t]
        rows[j][i] = v[t]
    return Matrix(tuple(tuple(r) for r in rows), tag)


class BilinearForm:
    """Symmetric bilinear form stored by its Gram matrix."""

    def __init__(self, gram, tag):
        if gram.nrows != gram.ncols:
            raise DimensionMismatchError("Gram matrix must be square")
        if gram != gram.transpose():
            raise DimensionMismatchError("Gram matrix must be symmetric")
        self.gram = gram
        self.tag = tag

    def evaluate(self, x, y):
        s = Scalar.zero(self.tag)
        for a, row in zip(x, self.gram.rows):
            if not a:
                continue
            for b, g in zip(y, row):
                if b and g:
                    s = s + a * b * g
        return s

    def radical(self):
        """{x : (x, A) = 0}."""
        return self.gram.kernel()

    def scale(self, c):
        return BilinearForm(self.gram.scale(c), self.tag)

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.gram == other.gram

    def __repr__(self):
        return f"BilinearForm({self.gram!r})"


def radical_axial(algebra, axes):
    """Radical with respect to an axis set: the radical of the unique
    invariant form normalized to (a, a) = 1 on every axis.

    Returns (subspace, form).  Raises ValueError when no invariant form is
    nonzero on every axis or the normalized form is not unique.
    """
    forms = algebra.frobenius_space()
    if not forms:
        raise ValueError("no nonzero invariant bilinear form exists")
    axes = [tuple(a) for a in axes]
    # solve for a combination with (a, a) = 1 on each axis
    rows = [tuple(f.evaluate(a, a) for f in forms) for a in axes]
    m = Matrix(tuple(rows), algebra.tag, ncols=len(forms))
    one = Scalar.one(algebra.tag)
    sol, extra = m.solve(tuple(one for _ in axes))
    if sol is None:
        raise ValueError("no invariant form takes value 1 on every axis")
    gram = Matrix.zero(algebra.dim, algebra.dim, algebra.tag)
    for c, f in zip(sol, forms):
        if c:
            gram = gram + f.gram.scale(c)
    form = BilinearForm(gram, algebra.tag)
    rad = form.radical()
    if not extra.is_zero():
        # projectively unique normalization required: combinations in the
        # kernel must not change the radical
        for v in extra.basis:
            g2 = gram
            for c, f in zip(v, forms):
                if c:
                    g2 = g2 + f.gram.scale(c)
            if BilinearForm(g2, algebra.tag).radical() != rad:
                raise ValueError("axis-normalized invariant form is not unique")
    for a in axes:
        if rad.contains_vector(a):
            raise ValueError("an axis lies in the radical of its own form")
    return rad, form
