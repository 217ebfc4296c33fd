import numpy as np
import pytest
from scipy import integrate

from sgrpsim import ConstantHazard, DomainError, PowerLawHazard, hazard_from_config

PL = PowerLawHazard(1.3, 40.0)


class TestRate:
    def test_power_law_at_scale(self):
        assert PL.rate(40.0) == pytest.approx(1.3 / 40.0, rel=1e-15)

    def test_constant_ignores_time(self):
        assert ConstantHazard(0.1).rate(17.3) == 0.1

    def test_power_law_origin(self):
        assert PL.rate(0.0) == 0.0

    def test_vector_input(self):
        t = np.array([0.0, 10.0, 40.0])
        out = PL.rate(t)
        assert out.shape == (3,)
        assert out[2] == pytest.approx(0.0325, rel=1e-15)

    def test_negative_time_rejected(self):
        with pytest.raises(DomainError):
            PL.rate(-1.0)
        with pytest.raises(DomainError):
            PL.rate(np.array([1.0, -2.0]))


class TestCumulative:
    def test_power_law_at_scale(self):
        assert PL.cumulative(40.0) == 1.0

    def test_constant(self):
        assert ConstantHazard(0.1).cumulative(10.0) == 1.0

    def test_power_law_doubling(self):
        # frozen via quadrature of the rate over [0, 80]
        assert PL.cumulative(80.0) == pytest.approx(2.4622888266898326, rel=1e-12)
        quad, _ = integrate.quad(PL.rate, 0.0, 80.0, epsrel=1e-10)
        assert PL.cumulative(80.0) == pytest.approx(quad, abs=1e-8)

    def test_negative_time_rejected(self):
        with pytest.raises(DomainError):
            PL.cumulative(-0.5)


class TestInverseCumulative:
    def test_power_law_unit(self):
        assert PL.inverse_cumulative(1.0) == 40.0

    def test_constant(self):
        assert ConstantHazard(0.1).inverse_cumulative(0.5) == 5.0

    def test_zero_maps_to_zero(self):
        assert PL.inverse_cumulative(0.0) == 0.0
        assert ConstantHazard(2.0).inverse_cumulative(0.0) == 0.0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            PL.inverse_cumulative(-1e-9)

    @pytest.mark.parametrize("h", [PL, ConstantHazard(0.37), PowerLawHazard(2.5, 3.0)])
    def test_round_trip(self, h):
        u = np.logspace(-6, 3, 200)
        back = h.cumulative(h.inverse_cumulative(u))
        assert np.all(np.abs(back - u) <= 1e-9 * np.maximum(1.0, u))


class TestMonotonicity:
    @pytest.mark.parametrize("h", [PL, PowerLawHazard(1.0, 5.0), PowerLawHazard(3.0, 12.0)])
    def test_rate_nondecreasing(self, h):
        rng = np.random.default_rng(11)
        t = np.sort(rng.uniform(0.0, 300.0, size=400))
        r = h.rate(t)
        assert np.all(np.diff(r) >= 0.0)

    def test_cumulative_strictly_increasing(self):
        rng = np.random.default_rng(12)
        t = np.unique(rng.uniform(0.0, 300.0, size=400))
        assert np.all(np.diff(PL.cumulative(t)) > 0.0)


def test_quadrature_consistency():
    rng = np.random.default_rng(13)
    for h in (PL, ConstantHazard(0.25), PowerLawHazard(2.0, 17.0)):
        for t in rng.uniform(1e-3, 200.0, size=8):
            quad, _ = integrate.quad(h.rate, 0.0, t, epsrel=1e-9)
            assert h.cumulative(t) == pytest.approx(quad, rel=1e-7)


class TestDecreasingGuard:
    def test_rejected_by_default(self):
        with pytest.raises(DomainError):
            PowerLawHazard(0.8, 10.0)

    def test_flag_allows_construction(self):
        h = PowerLawHazard(0.8, 10.0, allow_decreasing=True)
        assert not h.is_nondecreasing
        assert h.rate(1.0) > h.rate(2.0)

    def test_nondecreasing_flag(self):
        assert PL.is_nondecreasing
        assert ConstantHazard(1.0).is_nondecreasing


class TestScaled:
    def test_power_law_rate_scales(self):
        h = PL.scaled(0.01)
        t = np.array([0.5, 7.0, 40.0, 333.0])
        assert np.allclose(h.rate(t), 0.01 * PL.rate(t), rtol=1e-12)
        assert np.allclose(h.cumulative(t), 0.01 * PL.cumulative(t), rtol=1e-12)

    def test_constant_scales(self):
        assert ConstantHazard(0.4).scaled(0.5).rate0 == 0.2

    def test_zero_factor_rejected(self):
        with pytest.raises(DomainError):
            PL.scaled(0.0)
        with pytest.raises(DomainError):
            ConstantHazard(1.0).scaled(-1.0)


class TestConfig:
    def test_power_law_literal(self):
        h = hazard_from_config({"family": "power_law", "beta": 1.3, "eta": 40.0})
        assert h == PL

    def test_constant_literal(self):
        h = hazard_from_config({"family": "constant", "rate": 0.1})
        assert h == ConstantHazard(0.1)

    def test_round_trip(self):
        for h in (PL, ConstantHazard(0.1)):
            assert hazard_from_config(h.to_config()) == h

    def test_bad_family(self):
        from sgrpsim import ConfigError
        with pytest.raises(ConfigError):
            hazard_from_config({"family": "weibull"})
        with pytest.raises(ConfigError):
            hazard_from_config({"beta": 1.0})
