"""Minimum-energy vehicle data collection planner."""

from ._ugvplan import (
    Scenario,
    SolveReport,
    baseline,
    dbm_to_watts,
    exhaustive,
    generate_scenario,
    run_sweep,
    solve,
    time_for_saving,
    unit_energy,
    unit_energy_saving,
)

__all__ = [
    "Scenario",
    "SolveReport",
    "baseline",
    "dbm_to_watts",
    "exhaustive",
    "generate_scenario",
    "run_sweep",
    "solve",
    "time_for_saving",
    "unit_energy",
    "unit_energy_saving",
]
