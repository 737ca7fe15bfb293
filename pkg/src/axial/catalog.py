"""Named, parameterized constructors for the benchmark algebras used by the
test suites and the CLI: the nine two-dimensional families A..I, the
four-dimensional Monster-type algebra, the diagonal / half-action / nilpotent
series S / J / T, three four-dimensional Jordan algebras (J25, J53, J59), and
the simple Jordan matrix algebras (full, symmetric, and J-symmetric matrices,
a bilinear-form algebra over the Gaussian rationals, and the 27-dimensional
octonion-hermitian algebra).

Each entry bundles the algebra with named axis sets, the fusion laws the axis
sets obey (materialized at the chosen parameters), the expected fusion laws of
the canonical one-dimensional central extension where one exists, an invariant
bilinear form, gradings, and idempotent families used by the cocycle suites.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, BilinearForm
from .errors import CatalogError
from .extension import Cocycle
from .fusion import C2Grading, FusionLaw, jordan_half_law, monster_law
from .linalg import Matrix
from .scalars import FieldTag, Scalar

QQ = FieldTag.QQ
QI = FieldTag.QI


def _q(a, b=1, tag=QQ):
    return Scalar.rational(a, b, tag)


@dataclass
class CatalogEntry:
    name: str
    params: dict
    algebra: Algebra
    axis_sets: dict = field(default_factory=dict)        # key -> tuple of elements
    laws: dict = field(default_factory=dict)             # law name -> FusionLaw
    axis_laws: dict = field(default_factory=dict)        # axis-set key -> law name
    extension_laws: dict = field(default_factory=dict)   # axis-set key -> FusionLaw
    cocycle: Cocycle | None = None                       # canonical 1-dim cocycle
    frobenius: BilinearForm | None = None
    gradings: dict = field(default_factory=dict)         # law name -> C2Grading
    idempotent_families: tuple = ()
    expected: dict = field(default_factory=dict)

    def law_for(self, axis_key):
        return self.laws[self.axis_laws[axis_key]]


# ---------------------------------------------------------------------------
# helpers

def _mk_law(values, cells, tag=QQ):
    """Law with the convention: full unit row (1*v = {v} for v not in {0, 1},
    1*1 = {1}, 1*0 empty) plus the supplied nonunit cells."""
    one, zero = Scalar.one(tag), Scalar.zero(tag)
    if len(set(values)) != len(values):
        raise CatalogError("fusion-law values collide at these parameters")
    table = {(one, one): {one}}
    for v in values:
        if v != one and v != zero:
            table[(one, v)] = {v}
    table.update(cells)
    return FusionLaw(values, table, tag)


def _two_dim(c1, c2, tag=QQ):
    """Two-dimensional commutative algebra: e1*e1 = e1, e2*e2 = e2,
    e1*e2 = c1*e1 + c2*e2."""
    one = Scalar.one(tag)
    prods = {(0, 0): {0: one}, (1, 1): {1: one}}
    entry = {}
    if c1:
        entry[0] = c1
    if c2:
        entry[1] = c2
    if entry:
        prods[(0, 1)] = entry
    return Algebra(2, prods, tag, ("e1", "e2"))


def _gram(entries, tag=QQ):
    ((a, b), (c, d)) = entries
    return BilinearForm(Matrix(((a, b), (c, d)), tag), tag)


def _theta_e1e2(tag=QQ):
    """The canonical cocycle with value 1 on (e1, e2) and 0 on the diagonal."""
    return Cocycle.from_entries(2, {(0, 1): Scalar.one(tag)}, tag)


def _as_scalar(v, tag=QQ):
    if isinstance(v, Scalar):
        if v.tag is not tag:
            raise CatalogError("parameter from the wrong field")
        return v
    return Scalar.rational(v, 1, tag)


# ---------------------------------------------------------------------------
# two-dimensional families

def _build_A():
    one, zero, half = _q(1), _q(0), _q(1, 2)
    del half
    alg = _two_dim(zero, zero)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    a3 = (one, one)
    law = _mk_law([one, zero], {(zero, zero): {zero}})
    return CatalogEntry(
        "A", {}, alg,
        axis_sets={"X12": (e1, e2), "X13": (e1, a3), "X23": (e2, a3)},
        laws={"FA": law},
        axis_laws={"X12": "FA", "X13": "FA", "X23": "FA"},
        frobenius=_gram(((one, zero), (zero, one))),
        expected={
            "symmetric": {"X12": True, "X13": False, "X23": False},
            "primitive": {"X12": True, "X13": False, "X23": False},
            "admits_extension": False,
        })


def _build_B():
    one, zero = _q(1), _q(0)
    mone = -one
    alg = _two_dim(mone, mone)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    a4 = (mone, mone)
    law = _mk_law([one, mone], {(mone, mone): {one}})
    ext = _mk_law([one, mone, zero], {(mone, mone): {one, zero}})
    grad = C2Grading(frozenset({one}), frozenset({mone}), None)
    return CatalogEntry(
        "B", {}, alg,
        axis_sets={"X12": (e1, e2), "X14": (e1, a4), "X24": (e2, a4)},
        laws={"FB": law},
        axis_laws={"X12": "FB", "X14": "FB", "X24": "FB"},
        extension_laws={"X12": ext, "X14": ext, "X24": ext},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((_q(-2), one), (one, _q(-2)))),
        gradings={"FB": grad},
        expected={
            "symmetric": {"X12": True, "X14": True, "X24": True},
            "primitive": {"X12": True, "X14": True, "X24": True},
            "radical": {"X12": "zero", "X14": "zero", "X24": "zero"},
            "admits_extension": True,
            "miyamoto_order": 6,
            "axis_closure": (e1, e2, a4),
        })


def _build_C(alpha):
    one, zero = _q(1), _q(0)
    if alpha in (zero, one, -one, _q(1, 2), _q(-1, 2)):
        raise CatalogError("parameter alpha of family C must avoid 0, 1, -1, 1/2, -1/2")
    alg = _two_dim(alpha, alpha)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    lam = (one + alpha + alpha).inverse()
    a5 = (lam, lam)
    law1 = _mk_law([one, alpha], {(alpha, alpha): {one, alpha}})
    law2 = _mk_law([one, alpha, lam],
                   {(alpha, alpha): {one, alpha}, (lam, lam): {one}})
    ext1 = _mk_law([one, alpha, zero], {(alpha, alpha): {one, alpha, zero}})
    ext2 = _mk_law([one, alpha, lam, zero],
                   {(alpha, alpha): {one, alpha, zero}, (lam, lam): {one, zero}})
    gram_d = (one - alpha) / alpha
    grad = C2Grading(frozenset({one, alpha}), frozenset({lam}), None)
    return CatalogEntry(
        "C", {"alpha": alpha}, alg,
        axis_sets={"X12": (e1, e2), "X15": (e1, a5), "X25": (e2, a5)},
        laws={"FC1": law1, "FC2": law2},
        axis_laws={"X12": "FC1", "X15": "FC2", "X25": "FC2"},
        extension_laws={"X12": ext1, "X15": ext2, "X25": ext2},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((gram_d, one), (one, gram_d))),
        gradings={"FC2": grad},
        expected={
            "symmetric": {"X12": True, "X15": False, "X25": False},
            "primitive": {"X12": True, "X15": True, "X25": True},
            "radical": {"X12": "zero", "X15": "zero", "X25": "zero"},
            "admits_extension": True,
            "miyamoto_order": 2,
            "axis_closure": (e1, e2, a5),
        })


def _build_D(beta):
    one, zero, two = _q(1), _q(0), _q(2)
    if beta in (zero, one, _q(1, 2)):
        raise CatalogError("parameter beta of family D must avoid 0, 1/2, 1")
    alg = _two_dim(zero, beta)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    comp = one - beta
    a6 = (one, one - two * beta)
    law1 = _mk_law([one, beta, zero],
                   {(beta, beta): {beta}, (zero, zero): {one, zero}})
    law2 = _mk_law([one, beta, comp],
                   {(beta, beta): {beta}, (comp, comp): {comp}})
    law3 = _mk_law([one, comp, zero],
                   {(comp, comp): {comp}, (zero, zero): {one, zero}})
    ext2 = _mk_law([one, beta, comp, zero],
                   {(beta, beta): {beta, zero}, (comp, comp): {comp, zero}})
    return CatalogEntry(
        "D", {"beta": beta}, alg,
        axis_sets={"X12": (e1, e2), "X16": (e1, a6), "X26": (e2, a6)},
        laws={"FD1": law1, "FD2": law2, "FD3": law3},
        axis_laws={"X12": "FD1", "X16": "FD2", "X26": "FD3"},
        extension_laws={"X16": ext2},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((one, zero), (zero, zero))),
        expected={
            "symmetric": {"X12": False, "X16": False, "X26": False},
            "primitive": {"X12": True, "X16": True, "X26": True},
            "radical": {"X16": (zero, one)},
            "admits_extension": True,   # only with respect to X16
            "extension_axes": ("X16",),
        })


def _build_E(alpha, beta):
    one, zero = _q(1), _q(0)
    four = _q(4)
    if alpha in (zero, one) or beta in (zero, one) or alpha == beta:
        raise CatalogError("parameters of family E must be distinct and avoid 0, 1")
    if alpha + beta == one or four * alpha * beta == one:
        raise CatalogError("parameters of family E must satisfy a+b != 1 and 4ab != 1")
    denom = one - four * alpha * beta
    lam = (one - alpha - beta) / denom
    if lam in (one, alpha, beta):
        raise CatalogError("derived eigenvalue of family E collides with 1, alpha, beta")
    alg = _two_dim(alpha, beta)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    two = _q(2)
    a7 = ((one - two * alpha) / denom, (one - two * beta) / denom)
    law12 = _mk_law([one, alpha, beta],
                    {(alpha, alpha): {one, alpha}, (beta, beta): {one, beta}})
    law17 = _mk_law([one, beta, lam],
                    {(beta, beta): {one, beta}, (lam, lam): {one, lam}})
    law27 = _mk_law([one, alpha, lam],
                    {(alpha, alpha): {one, alpha}, (lam, lam): {one, lam}})
    ext12 = _mk_law([one, alpha, beta, zero],
                    {(alpha, alpha): {one, alpha, zero}, (beta, beta): {one, beta, zero}})
    ext17 = _mk_law([one, beta, lam, zero],
                    {(beta, beta): {one, beta, zero}, (lam, lam): {one, lam, zero}})
    ext27 = _mk_law([one, alpha, lam, zero],
                    {(alpha, alpha): {one, alpha, zero}, (lam, lam): {one, lam, zero}})
    return CatalogEntry(
        "E", {"alpha": alpha, "beta": beta}, alg,
        axis_sets={"X12": (e1, e2), "X17": (e1, a7), "X27": (e2, a7)},
        laws={"FE12": law12, "FE17": law17, "FE27": law27},
        axis_laws={"X12": "FE12", "X17": "FE17", "X27": "FE27"},
        extension_laws={"X12": ext12, "X17": ext17, "X27": ext27},
        cocycle=_theta_e1e2(),
        frobenius=_gram((((one - beta) / alpha, one), (one, (one - alpha) / beta))),
        expected={
            "symmetric": {"X12": False, "X17": False, "X27": False},
            "primitive": {"X12": True, "X17": True, "X27": True},
            "radical": {"X12": "zero", "X17": "zero", "X27": "zero"},
            "admits_extension": True,
        })


def _build_F():
    one, zero, half = _q(1), _q(0), _q(1, 2)
    alg = _two_dim(half, zero)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    law = _mk_law([one, half, zero],
                  {(half, half): {half}, (zero, zero): {one, zero}})
    return CatalogEntry(
        "F", {}, alg,
        axis_sets={"X12": (e1, e2)},
        laws={"FF": law},
        axis_laws={"X12": "FF"},
        frobenius=_gram(((zero, zero), (zero, one))),
        expected={
            "symmetric": {"X12": False},
            "primitive": {"X12": True},
            "radical": {"X12": "unavailable"},
            "admits_extension": False,
        })


def _build_G(beta):
    one, zero, half = _q(1), _q(0), _q(1, 2)
    if beta in (zero, half, one):
        raise CatalogError("parameter beta of family G must avoid 0, 1/2, 1")
    alg = _two_dim(half, beta)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    law = _mk_law([one, beta, half],
                  {(beta, beta): {one, beta}, (half, half): {one, half}})
    ext = _mk_law([one, beta, half, zero],
                  {(beta, beta): {one, beta, zero}, (half, half): {one, half, zero}})
    two = _q(2)
    return CatalogEntry(
        "G", {"beta": beta}, alg,
        axis_sets={"X12": (e1, e2)},
        laws={"FG": law},
        axis_laws={"X12": "FG"},
        extension_laws={"X12": ext},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((two * (one - beta), one), (one, (two * beta).inverse()))),
        expected={
            "symmetric": {"X12": False},
            "primitive": {"X12": True},
            "radical": {"X12": "zero"},
            "admits_extension": True,
        })


def _build_H(gamma):
    one, zero, two = _q(1), _q(0), _q(2)
    if gamma in (zero, one, two):
        raise CatalogError("parameter gamma of family H must avoid 0, 1, 2")
    v1 = (two * gamma).inverse()   # 1/(2*gamma)
    v2 = gamma / two
    alg = _two_dim(v2, v1)
    e1, e2 = alg.basis_element(0), alg.basis_element(1)
    if v1 == v2:
        # gamma = -1: the two nonunit eigenvalues coincide at -1/2
        law = _mk_law([one, v1], {(v1, v1): {one, v1}})
        ext = _mk_law([one, v1, zero], {(v1, v1): {one, v1, zero}})
    else:
        law = _mk_law([one, v1, v2],
                      {(v1, v1): {one, v1}, (v2, v2): {one, v2}})
        ext = _mk_law([one, v1, v2, zero],
                      {(v1, v1): {one, v1, zero}, (v2, v2): {one, v2, zero}})
    g11 = (two * gamma - one) / (gamma * gamma)
    g22 = (two - gamma) * gamma
    return CatalogEntry(
        "H", {"gamma": gamma}, alg,
        axis_sets={"X12": (e1, e2)},
        laws={"FH": law},
        axis_laws={"X12": "FH"},
        extension_laws={"X12": ext},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((g11, one), (one, g22))),
        expected={
            "symmetric": {"X12": gamma == -one},
            "primitive": {"X12": True},
            "radical": {"X12": "zero"},
            "admits_extension": True,
        })


def _i_axis(alpha):
    """The idempotent alpha*e1 + (1-alpha)*e2 of the half-sum algebra."""
    one = _q(1)
    alpha = _as_scalar(alpha)
    return (alpha, one - alpha)


def _build_I(alpha, beta):
    one, zero, half = _q(1), _q(0), _q(1, 2)
    if alpha == beta:
        raise CatalogError("the two axis parameters of family I must differ")
    alg = _two_dim(half, half)
    a1, a2 = _i_axis(alpha), _i_axis(beta)
    law = _mk_law([one, half], {})
    ext = _mk_law([one, half, zero], {(half, half): {zero}})
    grad = C2Grading(frozenset({one}), frozenset({half}), None)
    return CatalogEntry(
        "I", {"alpha": alpha, "beta": beta}, alg,
        axis_sets={"Xab": (a1, a2)},
        laws={"FI": law},
        axis_laws={"Xab": "FI"},
        extension_laws={"Xab": ext},
        cocycle=_theta_e1e2(),
        frobenius=_gram(((one, one), (one, one))),
        gradings={"FI": grad},
        expected={
            "symmetric": {"Xab": alpha != -beta},
            "primitive": {"Xab": True},
            "radical": {"Xab": (one, -one)},
            "admits_extension": True,
        })


# ---------------------------------------------------------------------------
# the four-dimensional Monster-type algebra

def _build_monster4():
    one = _q(1)
    h = _q(1, 2)
    alg = Algebra(4, {
        (0, 0): {0: one}, (1, 1): {1: one}, (2, 2): {2: one}, (3, 3): {3: one},
        (0, 1): {0: _q(3, 2), 1: one, 2: -one, 3: -h},
        (1, 2): {0: -h, 1: one, 2: one, 3: -h},
        (2, 3): {0: -h, 1: -one, 2: one, 3: _q(3, 2)},
        (0, 3): {0: h, 3: h},
        (0, 2): {1: -one, 2: one, 3: one},
        (1, 3): {0: one, 1: one, 2: -one},
    }, QQ, ("am1", "a0", "a1", "a2"))
    a0, a1 = alg.basis_element(1), alg.basis_element(2)
    law = monster_law(QQ)
    # the normalized class generator: zero on the diagonal, zero on the two
    # "long" pairs, one on the four "short" pairs
    theta = Cocycle.from_entries(4, {
        (0, 1): one, (0, 3): one, (1, 2): one, (2, 3): one,
    }, QQ)
    u = (one, _q(2), -one, _q(-2))
    v = (one, _q(0), -one, _q(0))
    w = (one, _q(0), _q(0), -one)
    u2 = (_q(2), one, _q(-2), -one)
    v2 = (_q(0), one, _q(0), -one)
    return CatalogEntry(
        "Monster4", {}, alg,
        axis_sets={"X01": (a0, a1),
                   "all": tuple(alg.basis_element(k) for k in range(4))},
        laws={"M2half": law},
        axis_laws={"X01": "M2half"},
        extension_laws={"X01": law},  # the canonical cocycle preserves the law
        cocycle=theta,
        expected={
            "eigenvectors": {"a0": {"0": u, "2": v, "1/2": w},
                             "a1": {"0": u2, "2": v2, "1/2": w}},
            "admits_extension": True,
        })


# ---------------------------------------------------------------------------
# diagonal / half-action / nilpotent series

def _build_S(n):
    if n < 1:
        raise CatalogError("the diagonal series needs n >= 1")
    one = _q(1)
    alg = Algebra(n, {(i, i): {i: one} for i in range(n)}, QQ,
                  tuple(f"e{i+1}" for i in range(n)))
    standard = tuple(alg.basis_element(i) for i in range(n))
    stair = tuple(tuple(one if j <= i else _q(0) for j in range(n)) for i in range(n))
    return CatalogEntry(
        "S", {"n": _q(n)}, alg,
        axis_sets={"standard": standard, "staircase": stair},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"standard": "J12", "staircase": "J12"},
        expected={"jordan": True})


def _build_J(n):
    if n < 1:
        raise CatalogError("the half-action series needs n >= 1")
    one, half = _q(1), _q(1, 2)
    prods = {(0, 0): {0: one}}
    for i in range(1, n):
        prods[(0, i)] = {i: half}
    alg = Algebra(n, prods, QQ, ("e",) + tuple(f"n{i}" for i in range(1, n)))
    e = alg.basis_element(0)
    axes = [e]
    for i in range(1, n):
        axes.append(tuple(one if j in (0, i) else _q(0) for j in range(n)))
    return CatalogEntry(
        "J", {"n": _q(n)}, alg,
        axis_sets={"standard": tuple(axes)},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"standard": "J12"},
        expected={"jordan": True})


def _build_T(n):
    if n < 2:
        raise CatalogError("the nilpotent series needs n >= 2")
    one, half = _q(1), _q(1, 2)
    prods = {(0, 0): {0: one}, (0, 1): {1: one}}
    if n >= 3:
        prods[(2, 2)] = {1: one}
    for i in range(2, n):
        prods[(0, i)] = {i: half}
    alg = Algebra(n, prods, QQ, ("e",) + tuple(f"n{i}" for i in range(1, n)))
    e = alg.basis_element(0)
    if n == 2:
        axes = (e,)
        generates = False
    else:
        a = list(alg.zero())
        a[0], a[1], a[2] = one, -one, one      # e - n1 + n2
        axes = [e, tuple(a)]
        for i in range(3, n):
            axes.append(tuple(one if j in (0, i) else _q(0) for j in range(n)))
        axes = tuple(axes)
        generates = True
    return CatalogEntry(
        "T", {"n": _q(n)}, alg,
        axis_sets={"standard": axes},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"standard": "J12"},
        expected={"jordan": True, "axes_generate": generates})


# ---------------------------------------------------------------------------
# the three four-dimensional Jordan algebras studied individually

def _build_J25():
    one, half = _q(1), _q(1, 2)
    alg = Algebra(4, {
        (0, 0): {0: one}, (1, 1): {1: one},
        (0, 2): {2: half}, (1, 2): {2: half},
        (0, 3): {3: one}, (2, 2): {3: one},
    }, QQ, ("e1", "e2", "n1", "n2"))

    def a_of(t):
        t = _as_scalar(t)
        return (one, _q(0), t, -(t * t))

    def b_of(t):
        t = _as_scalar(t)
        return (_q(0), one, t, t * t)

    unity = (one, one, _q(0), _q(0))
    return CatalogEntry(
        "J25", {}, alg,
        axis_sets={"with_unity": (unity, a_of(1), a_of(2)),
                   "no_unity": (a_of(1), b_of(1))},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"with_unity": "J12", "no_unity": "J12"},
        expected={"jordan": True})


def _build_J53():
    one, half = _q(1), _q(1, 2)
    alg = Algebra(4, {
        (0, 0): {0: one}, (0, 1): {1: half}, (0, 2): {2: one},
        (1, 1): {2: one, 3: one},
    }, QQ, ("e", "n1", "n2", "n3"))
    e = alg.basis_element(0)
    a1 = (one, one, -one, one)  # e + n1 - n2 + n3
    return CatalogEntry(
        "J53", {}, alg,
        axis_sets={"standard": (e, a1)},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"standard": "J12"},
        expected={"jordan": True, "quotient_dim": 0})


def _build_J59():
    one, half = _q(1), _q(1, 2)
    alg = Algebra(4, {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: half}, (0, 3): {3: half},
        (2, 3): {1: one}, (3, 3): {1: one},
    }, QQ, ("e", "n1", "n2", "n3"))
    e = alg.basis_element(0)
    ax2 = (one, _q(0), one, _q(0))     # e + n2       (alpha=1, beta=0)
    ax3 = (one, -one, _q(0), one)      # e - n1 + n3  (alpha=0, beta=1)
    return CatalogEntry(
        "J59", {}, alg,
        axis_sets={"standard": (e, ax2, ax3)},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"standard": "J12"},
        expected={"jordan": True})


# ---------------------------------------------------------------------------
# Jordan matrix algebras

def _flatten(mat):
    return tuple(a for row in mat.rows for a in row)


def algebra_from_matrix_basis(mats, tag, labels=None):
    """Commutative algebra on a basis of square matrices closed under the
    symmetrized product (XY + YX)/2; raises when the basis is not closed or
    not independent."""
    if not mats:
        raise CatalogError("matrix basis must be nonempty")
    size = mats[0].nrows
    dim = len(mats)
    cols = [_flatten(m) for m in mats]
    vmat = Matrix.from_columns(cols, tag, nrows=size * size)
    if vmat.rank() != dim:
        raise CatalogError("matrix basis is linearly dependent")
    half = Scalar.rational(1, 2, tag)
    products = {}
    for i in range(dim):
        for j in range(i, dim):
            prod = (mats[i] * mats[j] + mats[j] * mats[i]).scale(half)
            sol, _ker = vmat.solve(_flatten(prod))
            if sol is None:
                raise CatalogError("matrix basis is not closed under the product")
            entry = {k: c for k, c in enumerate(sol) if c}
            if entry:
                products[(i, j)] = entry
    return Algebra(dim, products, tag, labels)


def _unit_matrix(size, i, j, tag):
    one = Scalar.one(tag)
    zero = Scalar.zero(tag)
    return Matrix(tuple(tuple(one if (r, c) == (i, j) else zero for c in range(size))
                        for r in range(size)), tag)


def _build_jordan_full(n):
    """All n x n matrices with the symmetrized product."""
    if n < 1:
        raise CatalogError("matrix algebras need n >= 1")
    tag = QQ
    mats = []
    labels = []
    index = {}
    for i in range(n):
        for j in range(n):
            index[(i, j)] = len(mats)
            mats.append(_unit_matrix(n, i, j, tag))
            labels.append(f"E{i+1}{j+1}")
    alg = algebra_from_matrix_basis(mats, tag, tuple(labels))
    one = Scalar.one(tag)
    fam = []
    for i in range(n):
        fam.append(alg.element({index[(i, i)]: one}))
    for i in range(n):
        for j in range(n):
            if i != j:
                fam.append(alg.element({index[(i, i)]: one, index[(i, j)]: one}))
    return CatalogEntry(
        "JordanA", {"n": _q(n)}, alg,
        axis_sets={"family": tuple(fam)},
        laws={"J12": jordan_half_law(tag)},
        axis_laws={"family": "J12"},
        idempotent_families=tuple(fam),
        expected={"jordan": True, "quotient_dim": 0})


def _build_jordan_sym(n):
    """Symmetric n x n matrices with the symmetrized product."""
    if n < 1:
        raise CatalogError("matrix algebras need n >= 1")
    tag = QQ
    mats = []
    labels = []
    index = {}
    for i in range(n):
        index[(i, i)] = len(mats)
        mats.append(_unit_matrix(n, i, i, tag))
        labels.append(f"E{i+1}{i+1}")
    for i in range(n):
        for j in range(i + 1, n):
            index[(i, j)] = len(mats)
            mats.append(_unit_matrix(n, i, j, tag) + _unit_matrix(n, j, i, tag))
            labels.append(f"F{i+1}{j+1}")
    alg = algebra_from_matrix_basis(mats, tag, tuple(labels))
    one, half = Scalar.one(tag), Scalar.rational(1, 2, tag)
    fam = [alg.element({index[(i, i)]: one}) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            fam.append(alg.element({index[(i, i)]: half, index[(j, j)]: half,
                                    index[(i, j)]: half}))
    return CatalogEntry(
        "JordanB", {"n": _q(n)}, alg,
        axis_sets={"family": tuple(fam)},
        laws={"J12": jordan_half_law(tag)},
        axis_laws={"family": "J12"},
        idempotent_families=tuple(fam),
        expected={"jordan": True, "quotient_dim": 0})


def _build_jordan_skew(n):
    """2n x 2n matrices fixed by X -> J^-1 X^T J for the standard skew form,
    with the symmetrized product."""
    if n < 1:
        raise CatalogError("matrix algebras need n >= 1")
    tag = QQ
    size = 2 * n
    mats = []
    labels = []
    idx_d = {}
    idx_u = {}
    for i in range(n):
        for j in range(n):
            idx_d[(i, j)] = len(mats)
            mats.append(_unit_matrix(size, i, j, tag)
                        + _unit_matrix(size, n + j, n + i, tag))
            labels.append(f"D{i+1}{j+1}")
    for i in range(n):
        for j in range(i + 1, n):
            idx_u[(i, j)] = len(mats)
            mats.append(_unit_matrix(size, i, n + j, tag)
                        - _unit_matrix(size, j, n + i, tag))
            labels.append(f"U{i+1}{j+1}")
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_unit_matrix(size, n + i, j, tag)
                        - _unit_matrix(size, n + j, i, tag))
            labels.append(f"L{i+1}{j+1}")
    # defining identity check: J^-1 X^T J = X for every basis matrix
    zero = Scalar.zero(tag)
    one = Scalar.one(tag)
    jmat = Matrix(tuple(
        tuple(one if c == r + n else (-one if r == c + n else zero)
              for c in range(size))
        for r in range(size)), tag)
    jinv = jmat.inverse()
    for m in mats:
        if jinv * m.transpose() * jmat != m:
            raise CatalogError("skew-fixed basis matrix fails the defining identity")
    alg = algebra_from_matrix_basis(mats, tag, tuple(labels))
    # Diagonal idempotents a_i, then for each ordered pair (i, j) the
    # idempotents a_i + D_ij +/- (upper or lower skew unit); both the upper
    # and the mirrored lower variant are needed to pin the cocycle space down
    # to coboundaries.  The sign making each variant idempotent is selected
    # exactly.
    fam = [alg.element({idx_d[(i, i)]: one}) for i in range(n)]
    nu = n * (n - 1) // 2
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lo, hi = min(i, j), max(i, j)
            base = {idx_d[(i, i)]: one, idx_d[(i, j)]: one}
            for off in (idx_u[(lo, hi)], idx_u[(lo, hi)] + nu):
                for sgn in (one, -one):
                    cand = dict(base)
                    cand[off] = sgn
                    el = alg.element(cand)
                    if alg.is_idempotent(el):
                        fam.append(el)
    return CatalogEntry(
        "JordanC", {"n": _q(n)}, alg,
        axis_sets={"family": tuple(fam)},
        laws={"J12": jordan_half_law(tag)},
        axis_laws={"family": "J12"},
        idempotent_families=tuple(fam),
        expected={"jordan": True, "quotient_dim": 0})


def _build_jordan_form(n):
    """The rank-n algebra over the Gaussian rationals with product
    xy = (x^T e_n) y + (y^T e_n) x - (x^T y) e_n."""
    if n < 2:
        raise CatalogError("the bilinear-form algebra needs n >= 2")
    tag = QI
    one = Scalar.one(tag)
    last = n - 1
    prods = {}
    for i in range(n):
        for j in range(i, n):
            entry = {}
            if i == last:
                entry[j] = entry.get(j, Scalar.zero(tag)) + one
            if j == last:
                entry[i] = entry.get(i, Scalar.zero(tag)) + one
            if i == j:
                entry[last] = entry.get(last, Scalar.zero(tag)) - one
            entry = {k: c for k, c in entry.items() if c}
            if entry:
                prods[(i, j)] = entry
    alg = Algebra(n, prods, tag, tuple(f"e{i+1}" for i in range(n)))
    half = Scalar.rational(1, 2, tag)
    imag = Scalar.i(tag)
    fam = [alg.element({i: half * imag, last: half}) for i in range(n - 1)]
    return CatalogEntry(
        "JordanD", {"n": Scalar.rational(n, 1, tag)}, alg,
        axis_sets={"family": tuple(fam)},
        laws={"J12": jordan_half_law(tag)},
        axis_laws={"family": "J12"},
        idempotent_families=tuple(fam),
        expected={"jordan": True, "quotient_dim": 0})


# ---------------------------------------------------------------------------
# the 27-dimensional octonion-hermitian algebra

_OCT_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6),
                (2, 5, 7), (3, 4, 7), (3, 6, 5))


def _oct_table():
    t = {}
    for (a, b, c) in _OCT_TRIPLES:
        for (q, r, s) in ((a, b, c), (b, c, a), (c, a, b)):
            t[(q, r)] = (s, 1)
            t[(r, q)] = (s, -1)
    if len(t) != 42:
        raise CatalogError("inconsistent octonion sign table")
    return t


_OCT_MUL = _oct_table()


def oct_mul(x, y):
    """Product of two octonions given as 8-tuples of rational Scalars."""
    zero = Scalar.zero(QQ)
    out = [zero] * 8
    for q in range(8):
        a = x[q]
        if not a:
            continue
        for r in range(8):
            b = y[r]
            if not b:
                continue
            ab = a * b
            if q == 0:
                out[r] = out[r] + ab
            elif r == 0:
                out[q] = out[q] + ab
            elif q == r:
                out[0] = out[0] - ab
            else:
                s, sgn = _OCT_MUL[(q, r)]
                out[s] = out[s] + ab if sgn > 0 else out[s] - ab
    return tuple(out)


def oct_conj(x):
    return (x[0],) + tuple(-a for a in x[1:])


def _oct_zero():
    return (Scalar.zero(QQ),) * 8


def _oct_unit(q):
    zero = Scalar.zero(QQ)
    one = Scalar.one(QQ)
    return tuple(one if r == q else zero for r in range(8))


def _herm_mul(x, y):
    """Product of 3x3 octonion matrices (3x3 nested tuples of octonions)."""
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = list(_oct_zero())
            for k in range(3):
                p = oct_mul(x[i][k], y[k][j])
                acc = [a + b for a, b in zip(acc, p)]
            row.append(tuple(acc))
        out.append(tuple(row))
    return tuple(out)


def _herm_basis():
    """The 27 canonical hermitian matrices: three diagonal units, then for
    each index pair (i < j) the eight elements with octonion unit q at (i, j)
    and its conjugate at (j, i)."""
    basis = []
    labels = []
    pairs = ((0, 1), (0, 2), (1, 2))
    zero_mat = tuple(tuple(_oct_zero() for _ in range(3)) for _ in range(3))
    for i in range(3):
        m = [list(r) for r in zero_mat]
        m[i][i] = _oct_unit(0)
        basis.append(tuple(tuple(r) for r in m))
        labels.append(f"D{i+1}")
    for (i, j) in pairs:
        for q in range(8):
            m = [list(r) for r in zero_mat]
            m[i][j] = _oct_unit(q)
            m[j][i] = oct_conj(_oct_unit(q))
            basis.append(tuple(tuple(r) for r in m))
            labels.append(f"F{q}_{i+1}{j+1}")
    return basis, labels, pairs


def _herm_coords(mat, pairs):
    """Coordinates of a hermitian octonion matrix in the canonical basis;
    verifies hermiticity exactly."""
    zero = Scalar.zero(QQ)
    coords = []
    for i in range(3):
        entry = mat[i][i]
        if any(entry[q] for q in range(1, 8)):
            raise CatalogError("diagonal entry is not real")
        coords.append(entry[0])
    for (i, j) in pairs:
        if mat[j][i] != oct_conj(mat[i][j]):
            raise CatalogError("matrix is not hermitian")
        coords.extend(mat[i][j][q] for q in range(8))
    del zero
    return tuple(coords)


def _build_albert():
    basis, labels, pairs = _herm_basis()
    half = _q(1, 2)
    products = {}
    for i in range(27):
        for j in range(i, 27):
            p = _herm_mul(basis[i], basis[j])
            q = _herm_mul(basis[j], basis[i])
            sym = tuple(tuple(tuple(half * (a + b) for a, b in zip(x, y))
                              for x, y in zip(rx, ry))
                        for rx, ry in zip(p, q))
            coords = _herm_coords(sym, pairs)
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                products[(i, j)] = entry
    alg = Algebra(27, products, QQ, tuple(labels))
    one = Scalar.one(QQ)
    fam = [alg.element({i: one}) for i in range(3)]
    offset = {pair: 3 + 8 * t for t, pair in enumerate(pairs)}
    for pair in pairs:
        i, j = pair
        for q in range(8):
            fam.append(alg.element({i: half, j: half, offset[pair] + q: half}))
    return CatalogEntry(
        "Albert", {}, alg,
        axis_sets={"family": tuple(fam)},
        laws={"J12": jordan_half_law(QQ)},
        axis_laws={"family": "J12"},
        idempotent_families=tuple(fam),
        expected={"jordan": True, "quotient_dim": 0})


# ---------------------------------------------------------------------------
# registry

_DEFAULTS = {
    "C": {"alpha": 3},
    "D": {"beta": 5},
    "E": {"alpha": 3, "beta": 5},
    "G": {"beta": 5},
    "H": {"gamma": 3},
    "I": {"alpha": 1, "beta": 2},
    "S": {"n": 4},
    "J": {"n": 4},
    "T": {"n": 4},
    "J25": {}, "J53": {}, "J59": {},
    "JordanA": {"n": 3},
    "JordanB": {"n": 3},
    "JordanC": {"n": 2},
    "JordanD": {"n": 4},
}

_PARAM_SLOTS = {
    "A": (), "B": (), "F": (), "Monster4": (), "Albert": (),
    "J25": (), "J53": (), "J59": (),
    "C": ("alpha",), "D": ("beta",), "G": ("beta",), "H": ("gamma",),
    "E": ("alpha", "beta"), "I": ("alpha", "beta"),
    "S": ("n",), "J": ("n",), "T": ("n",),
    "JordanA": ("n",), "JordanB": ("n",), "JordanC": ("n",), "JordanD": ("n",),
}

# Entries whose product tables are defined only in the external classification
# these names point to; included so the names resolve, but not buildable.
STUB_ENTRIES = {
    "F1F1": "{e1, e2}",
    "B2": "{e1, e1+n1}",
    "F1F1F1": "{e1, e2, e3}",
    "B2F1": "{e1, e1+n1, e2}",
    "T5": "{e1, (e1+e2+e3)/2}",
    "T7": "{e1, e1+n1, e1+n2}",
    "T8": "{e1, e1+n1+n2}",
    "T10": "{e1+n1, e2+n1}",
    "J1": "{e1, (e1+e2+e3)/2, e4}",
    "J2": "{e1+e3, e1+e4, e2}",
    "J7": "{e1+n1, e2+n1, e3}",
    "J9": "{e1, (e1+e2+e3)/2, e1+n1}",
    "J16": "{e1+n1, e1+n2, e2}",
    "J18": "{e1+n1, e1+n2, e2}",
    "J23": "{e1, e1+n1+n2, e2}",
    "J48": "{e1, e1+n1+n3, e1+n2}",
    "J49": "{e1, e1+n1+n3, e1+n2}",
}


def default_params(name):
    return dict(_DEFAULTS.get(name, {}))


def build(name, params=None):
    """Instantiate a catalog entry by name; missing parameters take the
    documented defaults, integers are coerced to exact scalars."""
    if name in STUB_ENTRIES:
        raise CatalogError(
            f"entry {name!r} is a named stub (products not available); "
            f"published generating axes: {STUB_ENTRIES[name]}")
    if name not in _PARAM_SLOTS:
        raise CatalogError(f"unknown catalog name {name!r}")
    merged = default_params(name)
    if params:
        for k, v in params.items():
            if k not in _PARAM_SLOTS[name]:
                raise CatalogError(f"entry {name!r} takes no parameter {k!r}")
            merged[k] = v
    if name in ("S", "J", "T", "JordanA", "JordanB", "JordanC", "JordanD"):
        nval = merged["n"]
        n = int(nval.re) if isinstance(nval, Scalar) else int(nval)
        builder = {
            "S": _build_S, "J": _build_J, "T": _build_T,
            "JordanA": _build_jordan_full, "JordanB": _build_jordan_sym,
            "JordanC": _build_jordan_skew, "JordanD": _build_jordan_form,
        }[name]
        return builder(n)
    scal = {k: _as_scalar(v) for k, v in merged.items()}
    if name == "A":
        return _build_A()
    if name == "B":
        return _build_B()
    if name == "C":
        return _build_C(scal["alpha"])
    if name == "D":
        return _build_D(scal["beta"])
    if name == "E":
        return _build_E(scal["alpha"], scal["beta"])
    if name == "F":
        return _build_F()
    if name == "G":
        return _build_G(scal["beta"])
    if name == "H":
        return _build_H(scal["gamma"])
    if name == "I":
        return _build_I(scal["alpha"], scal["beta"])
    if name == "Monster4":
        return _build_monster4()
    if name == "J25":
        return _build_J25()
    if name == "J53":
        return _build_J53()
    if name == "J59":
        return _build_J59()
    if name == "Albert":
        return _build_albert()
    raise CatalogError(f"unknown catalog name {name!r}")  # pragma: no cover


def list_catalog():
    """All names with their parameter slots; stubs are flagged."""
    out = []
    for name in sorted(_PARAM_SLOTS):
        out.append({"name": name, "params": list(_PARAM_SLOTS[name]),
                    "stub": False})
    for name in sorted(STUB_ENTRIES):
        out.append({"name": name, "params": [], "stub": True,
                    "note": "products not available; "
                            f"published generating axes {STUB_ENTRIES[name]}"})
    return out


TWO_DIM_FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "H", "I")
