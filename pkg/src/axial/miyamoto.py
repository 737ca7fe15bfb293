"""Miyamoto involutions from C2-graded fusion laws, verified automorphism
matrices, bounded group and axis-set closures, and flip detection for
two-generated algebras."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AxialError, NotSemisimpleError
from .linalg import Matrix, RowReducer
from .scalars import Scalar
from .spectral import eigen_decompose


@dataclass(frozen=True)
class AutMatrix:
    matrix: Matrix
    kind: str           # "tau" | "flip" | "external"
    source: tuple = ()  # axis or axis pair the map came from

    def key(self):
        return self.matrix.rows

    def apply(self, x):
        return self.matrix.apply(x)


def is_automorphism(algebra, m):
    """Exact check of multiplicativity on all basis pairs plus invertibility."""
    if m.nrows != algebra.dim or m.ncols != algebra.dim:
        return False
    try:
        m.inverse()
    except Exception:
        return False
    images = [m.apply(algebra.basis_element(j)) for j in range(algebra.dim)]
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            lhs = m.apply(algebra.element(algebra.basis_product(i, j)))
            rhs = algebra.product(images[i], images[j])
            if lhs != rhs:
                return False
    return True


def tau_automorphism(algebra, a, law, grading):
    """The involution acting as +1 on plus-graded and -1 on minus-graded
    eigenspaces of the axis; verified multiplicative before returning."""
    a = tuple(a)
    eigen = eigen_decompose(algebra, a, hints=law.values)
    if not eigen.semisimple:
        raise NotSemisimpleError(
            f"{algebra.render_element(a)} is not semisimple; no eigenspace involution")
    cols = []
    signs = []
    for lam, space in eigen.pairs:
        sgn = grading.sign(lam)
        for b in space.basis:
            cols.append(b)
            signs.append(sgn)
    vmat = Matrix.from_columns(cols, algebra.tag, nrows=algebra.dim)
    vinv = vmat.inverse()
    one = Scalar.one(algebra.tag)
    signed = Matrix.from_columns(
        [tuple(c if s > 0 else -c for c in col) for col, s in zip(cols, signs)],
        algebra.tag, nrows=algebra.dim)
    m = signed * vinv
    if not is_automorphism(algebra, m):
        raise AxialError(
            "eigenspace sign map is not an automorphism (grading incompatible "
            "with the observed products)")
    del one
    return AutMatrix(m, "tau", (a,))


@dataclass
class GroupClosure:
    elements: list      # AutMatrix, BFS order, identity first
    generators: list
    completed: bool
    cap: int

    @property
    def order(self):
        return len(self.elements)


def group_closure(generators, cap=200):
    """Breadth-first closure of the generated matrix group, up to cap
    elements; completed=False when the cap is hit."""
    if not generators:
        raise AxialError("group closure needs at least one generator")
    tag = generators[0].matrix.tag
    n = generators[0].matrix.nrows
    ident = Matrix.identity(n, tag)
    gens = []
    for g in generators:
        gens.append(g.matrix)
        gens.append(g.matrix.inverse())
    seen = {ident.rows: AutMatrix(ident, "external")}
    order_list = [seen[ident.rows]]
    frontier = [ident]
    completed = True
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if prod.rows in seen:
                    continue
                if len(seen) >= cap:
                    completed = False
                    nxt = []
                    frontier = []
                    break
                am = AutMatrix(prod, "external")
                seen[prod.rows] = am
                order_list.append(am)
                nxt.append(prod)
            else:
                continue
            break
        frontier = nxt
        if not completed:
            break
    return GroupClosure(order_list, list(generators), completed, cap)


@dataclass
class AxisClosure:
    axes: list
    completed: bool
    cap: int


def axis_closure(algebra, axes, law, grading, cap=200):
    """Repeatedly apply the Miyamoto maps of the current axes to the current
    axes until stable, or report cap_exceeded with the partial set."""
    current = []
    seen = set()
    for a in axes:
        a = tuple(a)
        if a not in seen:
            seen.add(a)
            current.append(a)
    taus = {}
    frontier = list(current)
    while frontier:
        for a in list(current):
            if a not in taus:
                taus[a] = tau_automorphism(algebra, a, law, grading)
        new = []
        for a in current:
            for t in taus.values():
                img = t.apply(a)
                if img not in seen:
                    if len(seen) >= cap:
                        return AxisClosure(current, False, cap)
                    seen.add(img)
                    current.append(img)
                    new.append(img)
        frontier = new
    return AxisClosure(current, True, cap)


def find_flip(algebra, a1, a2):
    """Automorphism swapping two generating axes, or None.

    Builds a basis of words in {a1, a2}; the mirror word (a1 and a2 swapped)
    prescribes the image.  The resulting linear map is returned only when it
    verifies as an automorphism.
    """
    a1, a2 = tuple(a1), tuple(a2)
    if a1 == a2:
        return AutMatrix(Matrix.identity(algebra.dim, algebra.tag), "flip", (a1, a2))
    red = RowReducer(algebra.dim, algebra.tag)
    kept = []  # (word vector, mirrored vector)
    layers = [[(a1, a2), (a2, a1)]]
    for w, mw in layers[0]:
        if red.add_row({j: c for j, c in enumerate(w) if c}):
            kept.append((w, mw))
    while red.rank() < algebra.dim:
        d = len(layers) + 1
        new_layer = []
        for split in range(1, d // 2 + 1):
            for x, mx in layers[split - 1]:
                for y, my in layers[d - split - 1]:
                    p = algebra.product(x, y)
                    mp = algebra.product(mx, my)
                    if red.add_row({j: c for j, c in enumerate(p) if c}):
                        new_layer.append((p, mp))
                        kept.append((p, mp))
        layers.append(new_layer)
        if not new_layer and algebra._span_is_closed(red):
            raise AxialError("the two elements do not generate the algebra")
    vmat = Matrix.from_columns([w for w, _ in kept], algebra.tag, nrows=algebra.dim)
    wmat = Matrix.from_columns([mw for _, mw in kept], algebra.tag, nrows=algebra.dim)
    m = wmat * vmat.inverse()
    if not is_automorphism(algebra, m):
        return None
    if m.apply(a1) != a2 or m.apply(a2) != a1:
        return None
    return AutMatrix(m, "flip", (a1, a2))
