"""Eigen-analysis of multiplication operators and axis verification.

Eigenvalue discovery: candidate values from the fusion law plus a rational
root scan of the characteristic polynomial.  Over the Gaussian rationals the
scan covers rational roots of real-coefficient polynomials and roots of the
linear/quadratic factor left after deflating by already-found eigenvalues;
when the eigenspaces found still do not fill the space, the spectrum is
reported as undetermined (and the element as not semisimple).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatchError
from .fusion import FusionLaw
from .linalg import Matrix, Subspace, vec_add, vec_is_zero, vec_scale, vec_zero
from .scalars import FieldTag, Scalar, scalar_sqrt, sort_key

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat


# ---------------------------------------------------------------------------
# characteristic polynomial and root scans

def char_poly(m):
    """Monic characteristic polynomial of a square matrix via the
    Faddeev-LeVerrier recursion; returns [1, c1, ..., cn] with
    p(t) = t^n + c1 t^(n-1) + ... + cn."""
    if m.nrows != m.ncols:
        raise DimensionMismatchError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    tag = m.tag
    coeffs = [Scalar.one(tag)]
    mk = m
    ident = Matrix.identity(n, tag)
    for k in range(1, n + 1):
        ck = -(mk.trace() * Scalar.rational(1, k, tag))
        coeffs.append(ck)
        if k < n:
            mk = m * (mk + ident.scale(ck))
    return coeffs


def poly_eval(coeffs, x):
    acc = Scalar.zero(x.tag)
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_deflate(coeffs, root):
    """Divide by (t - root); returns (quotient, remainder)."""
    out = []
    acc = Scalar.zero(root.tag)
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def _int_divisors(n):
    n = abs(int(n))
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs):
    """All rational roots of a polynomial with rational coefficients
    (given high degree first).  Roots are returned once each, sorted."""
    tag = coeffs[0].tag
    if any(not c.is_rational() for c in coeffs):
        return []
    # strip trailing zero coefficients: t = 0 is a root
    roots = set()
    work = list(coeffs)
    while len(work) > 1 and work[-1].is_zero():
        work.pop()
        roots.add(Scalar.zero(tag))
    if len(work) <= 1:
        return sorted(roots, key=sort_key)
    denoms = 1
    for c in work:
        denoms = denoms * int(c.re.denominator) // _gcd(denoms, int(c.re.denominator))
    ints = [int(c.re * Rat(denoms)) for c in work]
    lead, const = ints[0], ints[-1]
    for p in _int_divisors(const):
        for q in _int_divisors(lead):
            for sgn in (1, -1):
                cand = Scalar.rational(sgn * p, q, tag)
                if cand not in roots and poly_eval(work, cand).is_zero():
                    roots.add(cand)
    return sorted(roots, key=sort_key)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def quadratic_roots(a, b, c):
    """Roots of a t^2 + b t + c inside the coefficients' own field."""
    disc = b * b - Scalar.rational(4, 1, a.tag) * a * c
    r = scalar_sqrt(disc)
    if r is None:
        return []
    two_a = (a + a).inverse()
    r1 = (-b + r) * two_a
    r2 = (-b - r) * two_a
    return sorted({r1, r2}, key=sort_key)


def field_roots(coeffs, known=()):
    """Best-effort root finding inside the base field.

    Returns (roots, complete): complete means the polynomial certainly has no
    further roots in the field.
    """
    tag = coeffs[0].tag
    roots = set(rational_roots(coeffs))
    complete = tag is FieldTag.QQ
    # deflate by every known root (with multiplicity) to expose small factors
    work = list(coeffs)
    for r in sorted(roots | {k for k in known if poly_eval(coeffs, k).is_zero()},
                    key=sort_key):
        while len(work) > 1:
            quo, rem = poly_deflate(work, r)
            if not rem.is_zero():
                break
            work = quo
            roots.add(r)
    if len(work) == 1:
        complete = True
    elif len(work) == 2:
        roots.add(-work[1] / work[0])
        complete = True
    elif len(work) == 3:
        for r in quadratic_roots(*work):
            roots.add(r)
        complete = True
    return sorted(roots, key=sort_key), complete


# ---------------------------------------------------------------------------

@dataclass
class EigenData:
    element: tuple
    pairs: list          # [(eigenvalue, Subspace)] sorted by eigenvalue
    semisimple: bool
    spectrum_complete: bool  # False when root finding over QI may have missed values

    def spectrum(self):
        return [lam for lam, _ in self.pairs]

    def eigenspace(self, lam):
        for mu, space in self.pairs:
            if mu == lam:
                return space
        return None

    def total_dim(self):
        return sum(space.dim for _, space in self.pairs)


def eigen_decompose(algebra, x, hints=()):
    """Eigenvalues/eigenspaces of the multiplication operator of x.

    Candidates: hints, then (if they do not already fill the space) all roots
    of the characteristic polynomial discoverable in the base field.
    """
    n = algebra.dim
    lmat = algebra.left_mult_matrix(x)
    ident = Matrix.identity(n, algebra.tag)
    pairs = []
    seen = set()
    for lam in sorted(set(hints), key=sort_key):
        ker = (lmat - ident.scale(lam)).kernel()
        seen.add(lam)
        if not ker.is_zero():
            pairs.append((lam, ker))
    total = sum(space.dim for _, space in pairs)
    complete = True
    if total < n:
        roots, complete = field_roots(char_poly(lmat), known=seen)
        for lam in roots:
            if lam in seen:
                continue
            ker = (lmat - ident.scale(lam)).kernel()
            seen.add(lam)
            if not ker.is_zero():
                pairs.append((lam, ker))
        total = sum(space.dim for _, space in pairs)
    pairs.sort(key=lambda p: sort_key(p[0]))
    return EigenData(tuple(x), pairs, total == n, complete or total == n)


class Eigenbasis:
    """Concatenated eigenbasis of a semisimple element with a cached inverse,
    for decomposing arbitrary elements into eigencomponents."""

    def __init__(self, algebra, eigen):
        if not eigen.semisimple:
            raise DimensionMismatchError("eigenbasis of a non-semisimple element")
        self.tag = algebra.tag
        self.dim = algebra.dim
        cols = []
        self.slices = []  # (eigenvalue, start, stop)
        start = 0
        for lam, space in eigen.pairs:
            for b in space.basis:
                cols.append(b)
            self.slices.append((lam, start, start + space.dim))
            start += space.dim
        self._inv = Matrix.from_columns(cols, self.tag, nrows=self.dim).inverse()
        self._cols = cols

    def components(self, y):
        """Decompose y; returns {eigenvalue: component element} with zero
        components omitted."""
        coords = self._inv.apply(y)
        out = {}
        for lam, start, stop in self.slices:
            comp = vec_zero(self.dim, self.tag)
            for t in range(start, stop):
                if coords[t]:
                    comp = vec_add(comp, vec_scale(coords[t], self._cols[t]))
            if not vec_is_zero(comp):
                out[lam] = comp
        return out


@dataclass
class ProductDecomposition:
    x: tuple
    y: tuple
    lam: Scalar
    mu: Scalar
    components: dict  # eigenvalue -> nonzero component (z_nu, z_0 included)


@dataclass
class AxisReport:
    element: tuple
    idempotent: bool
    eigen: EigenData
    spectrum_in_law: bool
    observed: dict = field(default_factory=dict)  # (lam, mu) -> frozenset of nu
    primitive: bool = False
    violations: list = field(default_factory=list)

    @property
    def is_axis(self):
        return not self.violations


def check_axis(algebra, a, law):
    """Verify that a is an axis for the law: idempotent, semisimple,
    Spec inside the law values, and eigenspace products inside star cells."""
    a = tuple(a)
    report_violations = []
    idem = algebra.is_idempotent(a)
    if not idem:
        report_violations.append(("not_idempotent", a))
    eigen = eigen_decompose(algebra, a, hints=law.values)
    if not eigen.semisimple:
        kind = "spectrum_undetermined" if not eigen.spectrum_complete else "not_semisimple"
        report_violations.append((kind, eigen.total_dim()))
    spectrum_ok = all(law.has_value(lam) for lam in eigen.spectrum())
    if not spectrum_ok:
        extra = [lam for lam in eigen.spectrum() if not law.has_value(lam)]
        report_violations.append(("spectrum_outside_law", extra))
    observed = {}
    primitive = False
    if eigen.semisimple:
        one = Scalar.one(algebra.tag)
        a1 = eigen.eigenspace(one)
        primitive = a1 is not None and a1.dim == 1
        basis = Eigenbasis(algebra, eigen)
        pairs = eigen.pairs
        for s in range(len(pairs)):
            lam, vspace = pairs[s]
            for t in range(s, len(pairs)):
                mu, wspace = pairs[t]
                seen = set()
                for xv in vspace.basis:
                    for yv in wspace.basis:
                        comps = basis.components(algebra.product(xv, yv))
                        seen.update(comps)
                        if spectrum_ok:
                            allowed = law.star(lam, mu)
                            for nu in comps:
                                if nu not in allowed:
                                    report_violations.append(
                                        ("fusion_violation", (lam, mu, nu, xv, yv)))
                observed[(lam, mu)] = frozenset(seen)
    return AxisReport(a, idem, eigen, spectrum_ok, observed, primitive,
                      report_violations)


def decompose_product(algebra, a, law, x, y):
    """ProductDecomposition of x*y along the eigenbasis of axis a."""
    eigen = eigen_decompose(algebra, a, hints=law.values)
    basis = Eigenbasis(algebra, eigen)
    comps = basis.components(algebra.product(x, y))
    return ProductDecomposition(tuple(x), tuple(y), None, None, comps)


def minimal_law(algebra, axes):
    """The smallest fusion law making every member of axes an axis:
    values = union of spectra, cells = observed product components."""
    reports = []
    for a in axes:
        eigen = eigen_decompose(algebra, tuple(a))
        if not algebra.is_idempotent(tuple(a)):
            raise ValueError(f"minimal_law requires idempotents; got {algebra.render_element(a)}")
        if not eigen.semisimple:
            raise ValueError(
                f"minimal_law requires semisimple elements; {algebra.render_element(a)} "
                f"has eigenspace dimension sum {eigen.total_dim()} < {algebra.dim}")
        reports.append(eigen)
    values = sorted({lam for e in reports for lam in e.spectrum()}, key=sort_key)
    table = {}
    for eigen in reports:
        basis = Eigenbasis(algebra, eigen)
        pairs = eigen.pairs
        for s in range(len(pairs)):
            lam, vspace = pairs[s]
            for t in range(s, len(pairs)):
                mu, wspace = pairs[t]
                key = _law_key(lam, mu)
                cell = set(table.get(key, ()))
                for xv in vspace.basis:
                    for yv in wspace.basis:
                        cell.update(basis.components(algebra.product(xv, yv)))
                if cell:
                    table[key] = frozenset(cell)
    return FusionLaw(values, table, algebra.tag)


def _law_key(lam, mu):
    return (lam, mu) if sort_key(lam) <= sort_key(mu) else (mu, lam)


@dataclass
class AxialCertificate:
    reports: list
    closure_dim: int
    max_word_length: int
    violations: list

    @property
    def certified(self):
        return not self.violations


def check_axial_algebra(algebra, axes, law):
    """Full certification: every axis passes check_axis and the axes generate
    the whole algebra."""
    reports = [check_axis(algebra, a, law) for a in axes]
    violations = []
    for a, rep in zip(axes, reports):
        for v in rep.violations:
            violations.append((algebra.render_element(a), *v))
    closure, m = algebra.subalgebra_closure(axes)
    if not closure.is_full():
        violations.append(("generation_fails", closure.dim, algebra.dim))
    return AxialCertificate(reports, closure.dim, m, violations)
