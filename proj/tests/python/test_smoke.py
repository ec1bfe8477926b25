"""Smoke tests of the compiled extension module."""

import json
import math

import pytest

import gapflow


def test_headway_model_basics():
    m = gapflow.HeadwayModel.gamma(2.0, 1.0)
    assert m.family == gapflow.Family.Gamma
    assert m.params == [2.0, 1.0]
    assert m.mean == pytest.approx(2.0)
    assert m.cdf(0.0) == 0.0
    assert m.pdf(1.0) == pytest.approx(math.exp(-1.0))
    assert m.survival(1.0) == pytest.approx(1.0 - m.cdf(1.0))
    with pytest.raises(ValueError):
        gapflow.HeadwayModel.gamma(-1.0, 1.0)
    with pytest.raises(ValueError):
        gapflow.HeadwayModel.log_logistic(1.0, 0.9)  # infinite mean


def test_superposed_gap_model():
    model = gapflow.SuperposedGapModel(
        [
            gapflow.HeadwayModel.gamma(3.282, 3.343),
            gapflow.HeadwayModel.gamma(0.501, 0.280),
        ]
    )
    assert model.L == 2
    assert model.mean_gap == pytest.approx(0.633927094695, rel=1e-9)
    assert model.gap_cdf(0.0) == 0.0
    assert 0.0 < model.gap_cdf(0.5) < 1.0
    assert model.gap_pdf(0.5) > 0.0
    # exponential special case collapses to the closed form
    expo = gapflow.SuperposedGapModel(
        [gapflow.HeadwayModel.exponential(1.0), gapflow.HeadwayModel.exponential(2.0)]
    )
    assert expo.gap_cdf(1.0) == pytest.approx(1.0 - math.exp(-3.0), rel=1e-12)


def test_simulate_and_fit_round_trip():
    truth = gapflow.SuperposedGapModel([gapflow.HeadwayModel.gamma(0.82, 0.482)])
    sample = gapflow.simulate_superposed(truth, 4000.0, 11)
    assert sample.n_arrivals > 1000
    assert len(sample.gaps) > 1000
    report = gapflow.fit_gaps(sample.gaps, gapflow.Family.Gamma, 1)
    assert report.converged
    k_hat, rate_hat = report.estimates[0]
    assert abs(k_hat - 0.82) < 4.0 * report.std_errors[0][0]
    assert abs(rate_hat - 0.482) < 4.0 * report.std_errors[0][1]
    assert report.aic == pytest.approx(4.0 - 2.0 * report.max_loglik)
    fitted = report.to_model()
    assert fitted.L == 1


def test_seeded_simulation_is_deterministic():
    model = gapflow.SuperposedGapModel([gapflow.HeadwayModel.exponential(1.5)])
    a = gapflow.simulate_superposed(model, 500.0, 7)
    b = gapflow.simulate_superposed(model, 500.0, 7)
    c = gapflow.simulate_superposed(model, 500.0, 8)
    assert a.gaps == b.gaps
    assert a.gaps != c.gaps


def test_diagnostics():
    model = gapflow.SuperposedGapModel([gapflow.HeadwayModel.exponential(1.0)])
    gaps = gapflow.sample_headways(gapflow.HeadwayModel.exponential(1.0), 500, 3)
    gof = gapflow.ks_gof(gaps, model)
    assert gof.n == 500
    assert gof.p_value > 0.001
    rt = gapflow.renewal_test(gaps)
    assert rt.n == 500
    assert 0.0 <= rt.p_value <= 1.0


def test_model_json_round_trip():
    model = gapflow.SuperposedGapModel(
        [gapflow.HeadwayModel.log_logistic(1.7, 2.9)]
    )
    text = gapflow.model_to_json(model)
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    assert doc["family"] == "loglogistic"
    restored = gapflow.model_from_json(text)
    assert restored.components[0].params == model.components[0].params


def test_loglik_matches_density_sum():
    model = gapflow.SuperposedGapModel([gapflow.HeadwayModel.gamma(2.0, 1.5)])
    gaps = [0.2, 0.9, 1.4]
    direct = sum(math.log(model.gap_pdf(g)) for g in gaps)
    assert gapflow.loglik_gaps(model, gaps) == pytest.approx(direct, rel=1e-12)
