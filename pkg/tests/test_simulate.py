import heapq

import numpy as np
import pytest
from scipy import stats as sps

from sgrpsim import (ARA, ApproxModel, ConstantHazard, DomainError, Minimal,
                     MaskedHistory, Normalization, PowerLawHazard,
                     approx_intensity, intensity_integral, ks_exp1, nhpp_sample,
                     rescaled_residuals, simulate_algorithm1, simulate_thinning,
                     stream_rng)
from sgrpsim.simulate import _grp_stream, _nhpp_stream

PL = PowerLawHazard(1.3, 40.0)


class TestNhppSample:
    def test_unit_rate_forced_uniforms(self):
        u = np.full(3, np.exp(-1.0))
        got = nhpp_sample(ConstantHazard(1.0), 3, uniforms=u)
        assert np.allclose(got, [1.0, 2.0, 3.0], rtol=1e-12)

    def test_zero_rate_stream_cannot_be_built(self):
        # the Poisson stream scale vanishes at delta=1, which the hazard
        # scaling refuses before any sampling can be requested
        with pytest.raises(DomainError):
            PL.scaled(0.0)

    def test_time_rescaled_increments_are_unit_exponential(self):
        rng = stream_rng(61)
        times = nhpp_sample(PL, 10_000, rng)
        residuals = np.diff(PL.cumulative(times), prepend=0.0)
        assert not ks_exp1(residuals).rejects[0.01]

    def test_strictly_increasing(self):
        times = nhpp_sample(PL, 5000, stream_rng(62))
        assert np.all(np.diff(times) > 0.0)

    def test_count_validation(self):
        with pytest.raises(DomainError):
            nhpp_sample(PL, 0, stream_rng(1))


class TestAlgorithm1:
    def am(self, n=100, delta=0.5, rho=0.3):
        return ApproxModel(n, delta, PL, ARA(1, rho))

    def test_determinism(self):
        a = simulate_algorithm1(self.am(), 2000, seed=7)
        b = simulate_algorithm1(self.am(), 2000, seed=7)
        assert np.array_equal(a.times, b.times)

    def test_output_is_valid_masked_history(self):
        out = simulate_algorithm1(self.am(n=10), 3000, seed=8)
        assert isinstance(out, MaskedHistory)
        assert np.all(np.diff(out.times) > 0.0)
        assert out.n == 10

    def test_delta_zero_drops_component_streams(self):
        # only the Poisson stream and the single-component stream remain
        n, count, seed = 6, 400, 9
        am = ApproxModel(n, 0.0, PL, ARA(1, 0.3))
        got = simulate_algorithm1(am, count, seed=seed)
        base = am.component_hazard()
        nhpp = _nhpp_stream(base.scaled(n - 1.0), stream_rng(seed, n))
        extra = _grp_stream(am.repair, base.scaled(1.0), stream_rng(seed, n + 1))
        expect = []
        heap = [(next(s), i, s) for i, s in enumerate((nhpp, extra))]
        heapq.heapify(heap)
        for _ in range(count):
            t, i, s = heapq.heappop(heap)
            expect.append(t)
            heapq.heappush(heap, (next(s), i, s))
        assert np.allclose(got.times, np.array(expect), rtol=0, atol=0)

    def test_delta_one_uses_only_component_streams(self):
        am = ApproxModel(4, 1.0, PL, ARA(1, 0.3))
        out = simulate_algorithm1(am, 500, seed=10)
        assert np.all(np.diff(out.times) > 0.0)

    def test_degenerate_single_stream_rejected(self):
        with pytest.raises(DomainError):
            simulate_algorithm1(ApproxModel(1, 1.0, PL, ARA(1, 0.3)), 10, seed=1)

    def test_harmful_repair_rejected(self):
        with pytest.raises(DomainError):
            simulate_algorithm1(ApproxModel(2, 0.5, PL, ARA(1, -0.5)), 10, seed=1)

    def test_scale_run(self):
        out = simulate_algorithm1(self.am(), 20_000, seed=11)
        assert len(out) == 20_000
        assert np.all(np.diff(out.times) > 0.0)


class TestThinning:
    def test_determinism(self):
        am = ApproxModel(10, 0.5, PL, ARA(1, 0.3))
        a = simulate_thinning(am, n_events=500, seed=12)
        b = simulate_thinning(am, n_events=500, seed=12)
        assert np.array_equal(a.times, b.times)

    def test_constant_hazard_interevents_are_exponential(self):
        lam0 = 0.25
        am = ApproxModel(7, 0.6, ConstantHazard(lam0), ARA(2, 0.4))
        out = simulate_thinning(am, n_events=4000, seed=13)
        residuals = lam0 * np.diff(out.times, prepend=0.0)
        assert not ks_exp1(residuals).rejects[0.01]

    def test_single_component_matches_direct_sampler(self):
        # n=1 reduces the model to a bare repairable component; compare
        # inter-event distributions against the direct next-failure sampler
        model = ARA(1, 0.4)
        am = ApproxModel(1, 0.3, PL, model, Normalization.COMPONENT)
        thin = simulate_thinning(am, n_events=3000, seed=14)
        rng = stream_rng(15)
        direct = []
        for _ in range(3000):
            direct.append(model.sample_next_failure(PL, direct, rng))
        res = sps.ks_2samp(np.diff(thin.times, prepend=0.0),
                           np.diff(np.asarray(direct), prepend=0.0))
        assert res.pvalue > 0.005

    def test_horizon_stop(self):
        am = ApproxModel(5, 0.5, PL, ARA(1, 0.3))
        out = simulate_thinning(am, horizon=500.0, seed=16)
        assert out.t_obs == 500.0
        assert np.all(out.times < 500.0 + 1e-12)

    def test_decreasing_hazard_rejected(self):
        h = PowerLawHazard(0.8, 10.0, allow_decreasing=True)
        am = ApproxModel(3, 0.5, h, ARA(1, 0.3))
        with pytest.raises(DomainError):
            simulate_thinning(am, n_events=10, seed=17)

    def test_rescaling_residuals_pass(self):
        # quadrature of the pointwise model intensity over each inter-event
        # interval must recover unit exponentials
        am = ApproxModel(4, 0.5, PL, ARA(1, 0.3))
        out = simulate_thinning(am, n_events=600, seed=18)
        times = out.times
        residuals = np.empty(times.size)
        prev = 0.0
        for k in range(times.size):
            hist = MaskedHistory(times[:k], am.n,
                                 times[k - 1] if k else 0.0)
            integral = intensity_integral(lambda u: approx_intensity(am, hist, u))
            residuals[k] = integral(prev, float(times[k]))
            prev = float(times[k])
        assert not ks_exp1(residuals).rejects[0.01]


def test_rescaled_residuals_recover_nhpp_uniforms():
    rng = stream_rng(19)
    u = rng.random(200)
    times = nhpp_sample(PL, 200, uniforms=u)
    res = rescaled_residuals(times, lambda a, b: PL.cumulative(b) - PL.cumulative(a))
    assert np.allclose(res, -np.log(u), rtol=1e-9)
