"""Central extensions of commutative algebras by symmetric bilinear maps:
coboundaries, the two cocycle conditions relative to an axis set, the
relative cocycle space, extension construction, split detection, the induced
fusion law of an extension, and the inverse decomposition of an algebra with
nonzero annihilator.

Symmetric forms on an n-dimensional algebra are vectorized by the n(n+1)/2
upper-triangle entries in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, _sym_index, _unflatten_sym
from .errors import DimensionMismatchError, ExtensionError, NotSemisimpleError
from .linalg import Matrix, RowReducer, Subspace, vec_zero
from .scalars import Scalar
from .spectral import Eigenbasis, check_axis, eigen_decompose, minimal_law


class Cocycle:
    """Symmetric bilinear map A x A -> F^s given by s symmetric matrices."""

    def __init__(self, mats, tag):
        if not mats:
            raise ExtensionError("a cocycle needs at least one coordinate")
        n = mats[0].nrows
        for m in mats:
            if m.nrows != n or m.ncols != n:
                raise DimensionMismatchError("cocycle coordinate matrices must share size")
            if m != m.transpose():
                raise ExtensionError("cocycle coordinate matrix is not symmetric")
        self.mats = tuple(mats)
        self.dim = n
        self.s = len(mats)
        self.tag = tag

    @classmethod
    def from_entries(cls, n, entries, tag, s=1):
        """entries: {(i, j): Scalar} or {(i, j): tuple of s Scalars}."""
        zero = Scalar.zero(tag)
        grids = [[[zero] * n for _ in range(n)] for _ in range(s)]
        for (i, j), val in entries.items():
            vals = (val,) if isinstance(val, Scalar) else tuple(val)
            if len(vals) != s:
                raise DimensionMismatchError("entry arity differs from coordinate count")
            for g, v in zip(grids, vals):
                g[i][j] = v
                g[j][i] = v
        return cls([Matrix(tuple(tuple(r) for r in g), tag) for g in grids], tag)

    def evaluate(self, x, y):
        """theta(x, y) as a tuple of s Scalars."""
        out = []
        for m in self.mats:
            acc = Scalar.zero(self.tag)
            for a, row in zip(x, m.rows):
                if not a:
                    continue
                for b, g in zip(y, row):
                    if b and g:
                        acc = acc + a * b * g
            out.append(acc)
        return tuple(out)

    def vectorize(self):
        """Each coordinate as an upper-triangle row vector."""
        idx = _sym_index(self.dim)
        out = []
        for m in self.mats:
            v = [None] * len(idx)
            for (i, j), t in idx.items():
                v[t] = m.rows[i][j]
            out.append(tuple(v))
        return out

    @classmethod
    def from_vectors(cls, vectors, n, tag):
        return cls([_unflatten_sym(v, n, tag) for v in vectors], tag)

    def is_zero(self):
        return all(m.is_zero() for m in self.mats)

    def __eq__(self, other):
        if not isinstance(other, Cocycle):
            return NotImplemented
        return self.mats == other.mats

    def __repr__(self):
        return f"Cocycle(dim={self.dim}, s={self.s})"


def coboundary(algebra, f):
    """delta f for a linear map f: A -> F^s given as an n x s matrix
    (rows = values on basis elements): delta f(x, y) = f(xy)."""
    n = algebra.dim
    s = f.ncols
    zero = Scalar.zero(algebra.tag)
    grids = [[[zero] * n for _ in range(n)] for _ in range(s)]
    for i in range(n):
        for j in range(i, n):
            for k, c in algebra.basis_product(i, j).items():
                for g in range(s):
                    fv = f.rows[k][g]
                    if fv:
                        v = grids[g][i][j] + c * fv
                        grids[g][i][j] = v
                        if i != j:
                            grids[g][j][i] = v
    return Cocycle([Matrix(tuple(tuple(r) for r in g), algebra.tag) for g in grids],
                   algebra.tag)


def coboundary_space(algebra):
    """Span of all coboundaries, vectorized: spanned by the n(n+1)/2-vectors
    of delta(dual basis functionals)."""
    n = algebra.dim
    idx = _sym_index(n)
    zero = Scalar.zero(algebra.tag)
    vecs = []
    for k in range(n):
        v = [zero] * len(idx)
        nonzero = False
        for i in range(n):
            for j in range(i, n):
                c = algebra.basis_product(i, j).get(k)
                if c:
                    v[idx[(i, j)]] = c
                    nonzero = True
        if nonzero:
            vecs.append(tuple(v))
    return Subspace(vecs, len(idx), algebra.tag)


def build_extension(algebra, theta, axes=()):
    """The extension A + F^s with product xy + theta(x,y); returns
    (extension, Y) where Y lifts the given axes to a + theta(a,a)."""
    if theta.dim != algebra.dim:
        raise DimensionMismatchError("cocycle size differs from algebra dimension")
    n, s = algebra.dim, theta.s
    products = {}
    for i in range(n):
        for j in range(i, n):
            entry = {k: c for k, c in algebra.basis_product(i, j).items()}
            for g in range(s):
                v = theta.mats[g].rows[i][j]
                if v:
                    entry[n + g] = v
            if entry:
                products[(i, j)] = entry
    labels = algebra.labels + tuple(f"v{g+1}" for g in range(s))
    ext = Algebra(n + s, products, algebra.tag, labels)
    lifted = []
    for a in axes:
        a = tuple(a)
        w = theta.evaluate(a, a)
        lifted.append(a + w)
    return ext, lifted


# ---------------------------------------------------------------------------
# constraint rows (one coordinate: unknowns are upper-triangle entries)

def _sym_row_add(row, idx, p, q, coeff):
    if not coeff:
        return
    col = idx[(p, q)] if p <= q else idx[(q, p)]
    v = row.get(col)
    v = v + coeff if v is not None else coeff
    if v:
        row[col] = v
    elif col in row:
        del row[col]


def _pair_row(idx, x, y):
    """Row of theta(x, y) in the symmetric-form unknowns."""
    row = {}
    for p, a in enumerate(x):
        if not a:
            continue
        for q, b in enumerate(y):
            if b:
                _sym_row_add(row, idx, p, q, a * b)
    return row


def condition1_rows(algebra, a):
    """Sparse rows enforcing theta(a, k) = 0 for kernel vectors k of L_a."""
    a = tuple(a)
    ker = algebra.left_mult_matrix(a).kernel()
    idx = _sym_index(algebra.dim)
    return [_pair_row(idx, a, k) for k in ker.basis]


def condition1_constraints(algebra, a):
    """Same as condition1_rows, as a dense Matrix (possibly 0 rows)."""
    idx_len = len(_sym_index(algebra.dim))
    rows = condition1_rows(algebra, a)
    zero = Scalar.zero(algebra.tag)
    dense = [tuple(r.get(c, zero) for c in range(idx_len)) for r in rows]
    return Matrix(tuple(dense), algebra.tag, ncols=idx_len)


def condition2_rows(algebra, a, law):
    """Sparse rows of the eigenspace compatibility condition for axis a:
    for (lam, mu) in Spec(a)^2 with 0 not in lam*mu, and eigenbasis pairs
    (x, y) with xy = sum z_nu: theta(x,y) - sum nu^-1 theta(a, z_nu) = 0."""
    a = tuple(a)
    eigen = eigen_decompose(algebra, a, hints=law.values)
    if not eigen.semisimple:
        raise NotSemisimpleError(
            f"axis candidate {algebra.render_element(a)} is not semisimple")
    basis = Eigenbasis(algebra, eigen)
    idx = _sym_index(algebra.dim)
    zero = Scalar.zero(algebra.tag)
    rows = []
    pairs = eigen.pairs
    for s in range(len(pairs)):
        lam, vspace = pairs[s]
        for t in range(s, len(pairs)):
            mu, wspace = pairs[t]
            cell = law.star(lam, mu)
            if zero in cell:
                continue
            for xv in vspace.basis:
                for yv in wspace.basis:
                    comps = basis.components(algebra.product(xv, yv))
                    bad = [nu for nu in comps if nu not in cell]
                    if bad:
                        raise ExtensionError(
                            f"eigenspace product escapes the law cell "
                            f"({lam}, {mu}): components at {bad}")
                    row = _pair_row(idx, xv, yv)
                    for nu, z in comps.items():
                        inv = nu.inverse()
                        neg_row = _pair_row(idx, a, z)
                        for col, c in neg_row.items():
                            _sym_row_add_col(row, col, -(inv * c))
                    if row:
                        rows.append(row)
    return rows


def _sym_row_add_col(row, col, coeff):
    if not coeff:
        return
    v = row.get(col)
    v = v + coeff if v is not None else coeff
    if v:
        row[col] = v
    elif col in row:
        del row[col]


def condition2_constraints(algebra, a, law):
    idx_len = len(_sym_index(algebra.dim))
    rows = condition2_rows(algebra, a, law)
    zero = Scalar.zero(algebra.tag)
    dense = [tuple(r.get(c, zero) for c in range(idx_len)) for r in rows]
    return Matrix(tuple(dense), algebra.tag, ncols=idx_len)


@dataclass
class CocycleSpace:
    algebra: Algebra
    axes: list
    law: object
    space: Subspace          # Z: relative cocycles (one coordinate)
    coboundaries: Subspace   # B
    intersection: Subspace   # Z cap B
    quotient_dim: int
    class_reps: list         # vectors of Z spanning a complement of Z cap B in Z

    def contains(self, theta):
        """Is every coordinate of theta a relative cocycle?"""
        return all(self.space.contains_vector(v) for v in theta.vectorize())

    def class_is_zero(self, theta):
        return all(self.coboundaries.contains_vector(v) for v in theta.vectorize())


def cocycle_space(algebra, axes, law, verify_axes=True):
    """Z(A, F; axes) for one output coordinate, with coboundary comparison."""
    if verify_axes:
        for a in axes:
            rep = check_axis(algebra, a, law)
            if not rep.is_axis:
                raise ExtensionError(
                    f"{algebra.render_element(a)} fails the axis check: {rep.violations}")
    idx_len = len(_sym_index(algebra.dim))
    red = RowReducer(idx_len, algebra.tag)
    for a in axes:
        for row in condition1_rows(algebra, a):
            red.add_row(dict(row))
        for row in condition2_rows(algebra, a, law):
            red.add_row(dict(row))
    space = Subspace(red.kernel_basis(), idx_len, algebra.tag)
    cob = coboundary_space(algebra)
    inter = space.intersect(cob)
    reps = []
    rep_red = RowReducer(idx_len, algebra.tag)
    for b in inter.basis:
        rep_red.add_row({j: a for j, a in enumerate(b) if a})
    for b in space.basis:
        if rep_red.add_row({j: a for j, a in enumerate(b) if a}):
            reps.append(b)
    return CocycleSpace(algebra, [tuple(a) for a in axes], law, space, cob,
                        inter, space.dim - inter.dim, reps)


def normalize_on_axes(algebra, theta, axes):
    """Subtract a coboundary so the result vanishes on (a, a) for each given
    axis; the class is unchanged.  Requires the axes to be independent."""
    axes = [tuple(a) for a in axes]
    n = algebra.dim
    if not axes:
        return theta
    # complete axes to a basis with standard vectors on non-pivot coordinates
    red = RowReducer(n, algebra.tag)
    for a in axes:
        if not red.add_row({j: c for j, c in enumerate(a) if c}):
            raise ExtensionError("normalize_on_axes requires independent axes")
    basis_rows = list(axes)
    for j in range(n):
        if red.add_row({j: Scalar.one(algebra.tag)}):
            basis_rows.append(tuple(algebra.basis_element(j)))
    bmat = Matrix(tuple(basis_rows), algebra.tag, ncols=n).transpose()
    binv = bmat.inverse()
    # f(a_k) = theta(a_k, a_k), f = 0 on the completion
    fvals = []
    for k, a in enumerate(basis_rows):
        if k < len(axes):
            fvals.append(theta.evaluate(a, a))
        else:
            fvals.append((Scalar.zero(algebra.tag),) * theta.s)
    # f on the standard basis: f(e_j) = sum_k coords(e_j)_k * f(basis_k)
    frows = []
    for j in range(n):
        coords = binv.apply(algebra.basis_element(j))
        row = [Scalar.zero(algebra.tag)] * theta.s
        for c, fv in zip(coords, fvals):
            if c:
                for g in range(theta.s):
                    row[g] = row[g] + c * fv[g]
        frows.append(tuple(row))
    f = Matrix(tuple(frows), algebra.tag, ncols=theta.s)
    delta = coboundary(algebra, f)
    mats = [m - d for m, d in zip(theta.mats, delta.mats)]
    out = Cocycle(mats, algebra.tag)
    for a in axes:
        if any(v for v in out.evaluate(a, a)):
            raise ExtensionError("normalization failed to vanish on an axis")
    return out


def is_split(algebra, theta):
    """'split', 'non_split', or 'indeterminate'.

    Dependent classes [theta_1..theta_s] modulo coboundaries give a split
    extension.  With independent classes, the extension is non-split when the
    annihilator of A_theta is exactly the adjoined space; when the base
    algebra has annihilator of its own the criterion is silent and
    'indeterminate' is returned.
    """
    n = algebra.dim
    idx_len = len(_sym_index(n))
    cob = coboundary_space(algebra)
    red = RowReducer(idx_len, algebra.tag)
    for b in cob.basis:
        red.add_row({j: a for j, a in enumerate(b) if a})
    independent = True
    for v in theta.vectorize():
        if not red.add_row({j: a for j, a in enumerate(v) if a}):
            independent = False
            break
    if not independent:
        return "split"
    ext, _ = build_extension(algebra, theta)
    ann = ext.annihilator()
    adjoined = Subspace(
        [tuple(vec_zero(n, algebra.tag)) + tuple(
            Scalar.one(algebra.tag) if g == h else Scalar.zero(algebra.tag)
            for h in range(theta.s))
         for g in range(theta.s)],
        n + theta.s, algebra.tag)
    if ann == adjoined:
        return "non_split"
    return "indeterminate"


@dataclass
class ExtensionReport:
    extension: Algebra
    lifted_axes: list
    condition1: dict        # rendered axis -> bool (kernel of L_a inside theta_a-perp)
    axial: bool
    induced_law: object     # minimal law of (A_theta, Y), or None
    split_verdict: str
    theta_in_z: bool


def extension_axiality(algebra, theta, axes, law):
    """Summary report: the extension is axial for the zero-augmented
    law iff condition (1) holds on every axis; the induced law is the minimal
    law of (A_theta, Y) and equals the base law exactly when theta is a
    relative cocycle."""
    axes = [tuple(a) for a in axes]
    cond1 = {}
    all_ok = True
    for a in axes:
        ok = True
        ker = algebra.left_mult_matrix(a).kernel()
        for k in ker.basis:
            if any(v for v in theta.evaluate(a, k)):
                ok = False
                break
        cond1[algebra.render_element(a)] = ok
        all_ok = all_ok and ok
    ext, lifted = build_extension(algebra, theta, axes)
    induced = None
    if all_ok:
        induced = minimal_law(ext, lifted)
    zspace = cocycle_space(algebra, axes, law, verify_axes=False)
    return ExtensionReport(ext, lifted, cond1, all_ok, induced,
                           is_split(algebra, theta), zspace.contains(theta))


def decompose_by_annihilator(bigebra, axes=()):
    """Invert build_extension: split off the annihilator.

    Returns (A, theta, X): A is the product algebra on the RREF-pivot
    complement of Ann(B), theta the component of the product falling in
    Ann(B) (coordinates in its RREF basis), X the projections of the given
    axes.  Raises when the annihilator is zero.
    """
    ann = bigebra.annihilator()
    if ann.is_zero():
        raise ExtensionError("annihilator is zero; nothing to split off")
    n = bigebra.dim
    tag = bigebra.tag
    comp_idx = [j for j in range(n) if j not in ann.pivots]
    # change of basis: complement standard vectors first, then Ann basis
    basis_rows = [tuple(bigebra.basis_element(j)) for j in comp_idx] + list(ann.basis)
    bmat = Matrix(tuple(basis_rows), tag, ncols=n).transpose()
    binv = bmat.inverse()
    m = len(comp_idx)
    s = ann.dim

    def split_coords(x):
        coords = binv.apply(x)
        return coords[:m], coords[m:]

    products = {}
    theta_entries = {}
    for a in range(m):
        for b in range(a, m):
            p = bigebra.product(bigebra.basis_element(comp_idx[a]),
                                bigebra.basis_element(comp_idx[b]))
            comp, annc = split_coords(p)
            entry = {k: c for k, c in enumerate(comp) if c}
            if entry:
                products[(a, b)] = entry
            if any(annc):
                theta_entries[(a, b)] = tuple(annc)
    labels = tuple(bigebra.labels[j] for j in comp_idx)
    small = Algebra(m, products, tag, labels)
    theta = Cocycle.from_entries(m, theta_entries, tag, s=s) if theta_entries else \
        Cocycle([Matrix.zero(m, m, tag)] * s, tag)
    projected = []
    for y in axes:
        comp, _annc = split_coords(tuple(y))
        projected.append(tuple(comp))
    return small, theta, projected


def aut_action(theta, phi):
    """Pullback of theta along an invertible matrix: (phi.theta)(x,y) =
    theta(phi x, phi y), i.e. each Gram matrix becomes phi^T G phi."""
    phi.inverse()  # raises when singular
    pt = phi.transpose()
    return Cocycle([pt * m * phi for m in theta.mats], theta.tag)
