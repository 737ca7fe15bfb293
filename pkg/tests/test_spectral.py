"""Eigen-decomposition, axis checks, minimal fusion laws."""

import pytest

from axial import catalog
from axial.fusion import monster_law
from axial.scalars import FieldTag, Scalar
from axial.spectral import (check_axial_algebra, check_axis, eigen_decompose,
                            minimal_law)


def q(n, d=1):
    return Scalar.rational(n, d, FieldTag.QQ)


class TestEigenDecompose:
    def test_b_axis_oracle(self):
        # Hand computation: for e1 in the algebra with e1 e2 = -e1 - e2,
        # L_{e1} has eigenvalue 1 on e1 and eigenvalue -1 on e1/2 + e2.
        alg = catalog.build("B").algebra
        ed = eigen_decompose(alg, alg.basis_element(0))
        assert ed.semisimple and ed.spectrum_complete
        assert ed.spectrum() == [q(-1), q(1)]
        assert ed.eigenspace(q(1)).contains_vector((q(1), q(0)))
        assert ed.eigenspace(q(-1)).contains_vector((q(1, 2), q(1)))

    def test_monster_axis_eigenvectors(self):
        # Frozen hand oracles for the 4-generated Monster-type algebra.
        entry = catalog.build("Monster4")
        alg = entry.algebra
        a0 = entry.axis_sets["all"][1]
        ed = eigen_decompose(alg, a0, hints=monster_law(FieldTag.QQ).values)
        assert ed.semisimple
        assert set(map(str, ed.spectrum())) == {"0", "1/2", "1", "2"}
        assert ed.eigenspace(q(0)).contains_vector((q(1), q(2), q(-1), q(-2)))
        assert ed.eigenspace(q(2)).contains_vector((q(1), q(0), q(-1), q(0)))
        assert ed.eigenspace(q(1, 2)).contains_vector(
            (q(1), q(0), q(0), q(-1)))
        assert ed.eigenspace(q(1)).dim == 1

    def test_non_semisimple_detected(self):
        # In the 2-dim nilpotent-part algebra T2, e n1 = n1 and n1^2 = 0:
        # L_{n1} is nilpotent nonzero, hence not semisimple.
        alg = catalog.build("T", {"n": 2}).algebra
        ed = eigen_decompose(alg, alg.basis_element(1))
        assert not ed.semisimple


class TestCheckAxis:
    def test_violations_for_non_idempotent(self):
        entry = catalog.build("B")
        rep = check_axis(entry.algebra, (q(2), q(0)), entry.laws["FB"])
        assert any(v[0] == "not_idempotent" for v in rep.violations)

    def test_axis_passes(self):
        entry = catalog.build("B")
        rep = check_axis(entry.algebra, entry.algebra.basis_element(0),
                         entry.laws["FB"])
        assert rep.is_axis and rep.primitive

    def test_spectrum_outside_law(self):
        entry = catalog.build("D")  # spectrum {1, 5} on e1
        law = catalog.build("B").laws["FB"]  # values {1, -1}
        rep = check_axis(entry.algebra, entry.algebra.basis_element(0), law)
        assert any(v[0] == "spectrum_outside_law" for v in rep.violations)


class TestMinimalLaw:
    def test_b_hand_oracle(self):
        # v = e1/2 + e2 spans the (-1)-eigenspace of e1; v*v = -3/4 e1 lies
        # in the 1-eigenspace and e1*v = -v, giving cells {1} and {-1}.
        entry = catalog.build("B")
        law = minimal_law(entry.algebra, entry.axis_sets["X12"])
        assert law == entry.laws["FB"]
        assert law.star(q(-1), q(-1)) == frozenset({q(1)})
        assert law.star(q(1), q(-1)) == frozenset({q(-1)})

    def test_a_hand_oracle(self):
        # e1 e2 = 0: the only nonzero off-unit product is e2*e2 = e2 in the
        # 0-eigenspace of e1, so 0*0 = {0} and 1*0 is empty.
        entry = catalog.build("A")
        law = minimal_law(entry.algebra, entry.axis_sets["X12"])
        assert set(law.values) == {q(1), q(0)}
        assert law.star(q(0), q(0)) == frozenset({q(0)})
        assert law.star(q(1), q(0)) == frozenset()

    def test_certificate_generation_failure(self):
        entry = catalog.build("T", {"n": 2})
        cert = check_axial_algebra(entry.algebra, entry.axis_sets["standard"],
                                   entry.laws["J12"])
        assert not cert.certified
        assert any(v[0] == "generation_fails" for v in cert.violations)
