import numpy as np
import pytest

from slabrte import PhaseExpansion, SlabProblem, example1, example2
from slabrte.problems import constant, polynomial


class TestExample1:
    def test_anisotropic_phase(self):
        problem = example1(1.0, 0.7)
        assert problem.albedo == 1.0
        assert problem.phase(1.0, 1.0) == pytest.approx(1.7, abs=1e-15)

    def test_isotropic_limit(self):
        problem = example1(3.0, 0.0)
        assert problem.optical_depth == 3.0
        x = np.linspace(-1, 1, 11)
        np.testing.assert_allclose(problem.phase(x, -x), 1.0)

    def test_negative_anisotropy(self):
        assert example1(0.5, -0.7).phase(1.0, 1.0) == pytest.approx(0.3, abs=1e-15)

    def test_boundary_and_source(self):
        problem = example1(1.0, 0.7)
        assert problem.source(0.3) == 0.0
        assert problem.inflow_top(0.8) == 1.0
        assert problem.inflow_bottom(-0.8) == 0.0


class TestExample2:
    def test_parameters(self):
        problem = example2()
        assert problem.optical_depth == 1.0
        assert problem.albedo == 0.8
        assert problem.phase.coeffs == (1.0, 0.6438, 0.5542, 0.1036, 0.0105)
        assert problem.inflow_top(0.5) == 1.0
        assert problem.inflow_bottom(-0.5) == 0.0


class TestSlabProblem:
    def test_rejects_nonpositive_depth(self):
        with pytest.raises(ValueError, match="positive"):
            SlabProblem(optical_depth=0.0, albedo=0.5, phase=PhaseExpansion((1.0,)))

    def test_rejects_bad_albedo(self):
        for albedo in (-0.1, 1.1):
            with pytest.raises(ValueError, match="albedo"):
                SlabProblem(optical_depth=1.0, albedo=albedo, phase=PhaseExpansion((1.0,)))

    def test_coerces_phase_sequence(self):
        problem = SlabProblem(optical_depth=1.0, albedo=0.5, phase=(1.0, 0.2))
        assert isinstance(problem.phase, PhaseExpansion)

    def test_rejects_unnormalized_phase(self):
        with pytest.raises(ValueError, match="zeroth"):
            SlabProblem(optical_depth=1.0, albedo=0.5, phase=(2.0, 0.2))


def test_constant_helper_broadcasts():
    f = constant(3.5)
    assert f(0.2) == 3.5
    np.testing.assert_array_equal(f(np.zeros(4)), np.full(4, 3.5))


def test_polynomial_helper():
    f = polynomial([1.0, 0.0, 2.0])
    assert f(0.5) == pytest.approx(1.0 + 2.0 * 0.25, abs=1e-15)
    x = np.linspace(0, 1, 5)
    np.testing.assert_allclose(f(x), 1.0 + 2.0 * x**2)
    assert polynomial([])(0.7) == 0.0
