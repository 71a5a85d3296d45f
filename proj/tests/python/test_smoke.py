"""Smoke tests for the fairsim python module."""

import pytest

import fairsim

TINY = {
    "name": "tiny",
    "n": 50,
    "protected_fraction": 0.5,
    "firms": [
        {"threshold": 0.6, "sophistication": 0.8},
        {"threshold": 0.7, "sophistication": 0.9},
    ],
    "periods": 3,
    "applicants_per_period": 10,
    "replications": 2,
    "base_seed": 7,
}


def test_version():
    assert fairsim.version() == fairsim.__version__
    assert fairsim.version().count(".") == 2


def test_catalog_listing():
    scenarios = fairsim.list_scenarios()
    names = {s["name"] for s in scenarios}
    assert "study1-single-s0.7-t1" in names
    assert {f"study3-sc{i}" for i in range(1, 5)} <= names
    sweeps = [s for s in scenarios if s["is_sweep"]]
    assert {s["name"] for s in sweeps} == {"appendixC-tau-sweep", "appendixC-s-sweep"}


def test_builtin_config_shape():
    cfg = fairsim.builtin("study1-multi-a")
    assert cfg["name"] == "study1-multi-a-t3"
    assert len(cfg["firms"]) == 2
    assert cfg["periods"] == 50
    with pytest.raises(fairsim.ConfigError):
        fairsim.builtin("not-a-scenario")


def test_load_config_validates():
    echoed = fairsim.load_config(TINY)
    assert echoed["n"] == 50
    bad = dict(TINY, firms=[{"threshold": 1.5, "sophistication": 0.7}])
    with pytest.raises(fairsim.ConfigError, match="threshold"):
        fairsim.load_config(bad)
    with pytest.raises(fairsim.ConfigError, match="typo"):
        fairsim.load_config(dict(TINY, typo=1))


def test_derive_seed():
    seeds = {fairsim.derive_seed(20220705, i) for i in range(100)}
    assert len(seeds) == 100
    assert fairsim.derive_seed(1, 0) != fairsim.derive_seed(2, 0)


def test_run_scenario_returns_series():
    result = fairsim.run_scenario(TINY)
    assert result["scenario"] == "tiny"
    series = result["series"]
    assert len(series) == 3 * 8  # two firms + ecosystem
    scopes = {s["scope"] for s in series}
    assert scopes == {"ecosystem", "firm_0", "firm_1"}
    for s in series:
        assert len(s["mean"]) == TINY["periods"]
        for value in s["mean"]:
            assert value is None or 0.0 <= abs(value) <= 1.0


def test_determinism_and_parallelism_invariance():
    csv1 = fairsim.run_scenario_csv(TINY, parallelism=1)
    csv2 = fairsim.run_scenario_csv(TINY, parallelism=2)
    assert csv1 == csv2
    assert csv1 == fairsim.run_scenario_csv(TINY)
    changed = fairsim.run_scenario_csv(dict(TINY, base_seed=8))
    assert changed != csv1


def test_run_by_name_and_json():
    import json

    by_dict = fairsim.run_scenario_csv(TINY)
    by_json = fairsim.run_scenario_csv(json.dumps(TINY))
    assert by_dict == by_json


def test_sweep():
    results = fairsim.sweep(TINY, "threshold", [0.4, 0.6])
    assert len(results) == 2
    assert results[0]["scenario"] == "tiny-threshold-0.4"
    assert results[1]["config"]["firms"][1]["threshold"] == 0.6
    assert fairsim.sweep(TINY, "cost", []) == []
    with pytest.raises(fairsim.ConfigError, match="axis"):
        fairsim.sweep(TINY, "bogus", [0.1])
