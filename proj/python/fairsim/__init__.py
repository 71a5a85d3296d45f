"""Deterministic multi-firm lending fairness simulator."""

from fairsim._core import (
    ConfigError,
    builtin,
    derive_seed,
    list_scenarios,
    load_config,
    run_scenario,
    run_scenario_csv,
    sweep,
    version,
)

__version__ = version()

__all__ = [
    "ConfigError",
    "builtin",
    "derive_seed",
    "list_scenarios",
    "load_config",
    "run_scenario",
    "run_scenario_csv",
    "sweep",
    "version",
]
