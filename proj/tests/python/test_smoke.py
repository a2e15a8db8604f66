import math

import pytest

import overshoot_lab as ol


def test_density_integrates_to_cdf():
    # midpoint rule on [0.5, 2] against the closed-form cdf
    n = 20000
    h = 1.5 / n
    total = sum(ol.up_density(1.2, -1.0, 0.5 + (k + 0.5) * h) for k in range(n)) * h
    expected = ol.up_cdf(1.2, -1.0, 2.0) - ol.up_cdf(1.2, -1.0, 0.5)
    assert total == pytest.approx(expected, rel=1e-8)


def test_cauchy_median_overshoot_equals_distance():
    assert ol.up_quantile(1.0, -1.0, 0.5) == pytest.approx(1.0, rel=1e-9)
    assert ol.up_cdf(1.0, -2.0, 2.0) == pytest.approx(0.5, abs=1e-12)


def test_down_law_mirrors_up_law():
    assert ol.down_cdf(0.7, 1.0, -0.3) == pytest.approx(1.0 - ol.up_cdf(0.7, -1.0, 0.3), abs=1e-14)


def test_moments():
    assert ol.up_moment(1.0, 0.25) == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert ol.quadrature_moment(1.0, 0.25) == pytest.approx(math.sqrt(2.0), rel=1e-9)
    assert math.isinf(ol.up_moment(1.0, 0.5))
    assert ol.critical_moment(1.3, 0.7) == pytest.approx(1.0, abs=1e-12)
    assert ol.log_drift(1.0, 1.0) == pytest.approx(0.0, abs=1e-15)


def test_classification():
    assert ol.classify(0.9, 0.9)["label"] == "Transient"
    assert ol.classify(1.0)["label"] == "HarrisRecurrent"
    assert ol.classify(1.5)["label"] == "PointRecurrent"


def test_invalid_index_raises_value_error():
    with pytest.raises(ValueError):
        ol.up_cdf(2.0, -1.0, 1.0)


def test_sampler_is_seeded():
    assert ol.sample_up(1.0, -1.0, 50, seed=3) == ol.sample_up(1.0, -1.0, 50, seed=3)
    assert ol.sample_up(1.0, -1.0, 50, seed=3) != ol.sample_up(1.0, -1.0, 50, seed=4)
    assert all(y > 0 for y in ol.sample_up(0.4, -1.0, 1000))


def test_chain_log_values_match_values():
    t = ol.simulate_chain(1.2, 0.9, steps=20, seed=11)
    assert len(t["values"]) == 21
    for v, lv in zip(t["values"], t["log_values"]):
        assert v > 0
        assert math.log(v) == pytest.approx(lv, rel=1e-12, abs=1e-12)


def test_counterexample_orbit():
    assert ol.orbit("one", "0", 7) == ["0", "1", "-2", "-1/2", "3", "1/3", "-4", "-1/4"]
    assert ol.overshoot_orbit("two", "3", 2) == "1/6"


def test_run_experiment_is_deterministic_across_threads():
    a = ol.run("phase-diagram", grid="0.6:1.4:0.4", paths=100, steps=30, threads=1, format="csv")
    b = ol.run("phase-diagram", grid="0.6:1.4:0.4", paths=100, steps=30, threads=3, format="csv")
    assert a == b
    report = ol.run("classify", alpha=0.9, beta=0.9)
    assert report["rows"][0]["label"] == "Transient"


def test_unknown_parameter_rejected():
    with pytest.raises(ValueError):
        ol.run("classify", gamma=1.0)
