"""Energy-efficiency link adaptation for IEEE 802.15.6 IR-UWB body area networks.

Models the UWB PHY frame structure, coded-frame delivery probabilities and
transceiver energy, and jointly optimizes the PSDU size and pulses-per-burst
for energy efficiency under an aggregate minimum-rate constraint.
"""

from .channel import (
    ChannelParams,
    LinkBudget,
    bit_error_prob,
    link_budget,
    log_q_function,
    path_loss_db,
    q_function,
)
from .energy import (
    EnergyBreakdown,
    EnergyParams,
    energy_breakdown,
    overhead_energy,
    payload_energy_per_bit,
    startup_energy,
)
from .errors import ConfigError, InvalidFrameError
from .frame import (
    FRAME_CONSTANTS,
    MODE_TABLE,
    PHR_CODE,
    PSDU_CODE,
    BchCode,
    FrameConstants,
    PhyMode,
    PsduLayout,
    codeword_count,
    frame_duration,
    mode_for,
    psdu_layout,
)
from .metrics import (
    LinkModel,
    ModeMetrics,
    OperatingPoint,
    QosSpec,
    energy_efficiency,
    throughput,
)
from .optimizer import (
    ModeSolution,
    OptResult,
    SolverConfig,
    cloee,
    dual_inner_max,
    dual_update,
    exhaustive_search,
    nt_ee_closed_form,
    nt_thr_closed_form,
    snap_to_grid,
    solve_mode,
)
from .reliability import (
    FrameReliability,
    bch_block_log_success,
    bch_block_success,
    kasami_success,
    ppdu_success,
    shr_success,
)
from .scenario import DEFAULT_DISTANCES, DEFAULT_STRATEGIES, Scenario, load_scenario, parse_scenario
from .sweep import SweepRow, emit_curves, parse_rows, run_sweep, rows_to_csv

__version__ = "0.1.0"

__all__ = [
    "BchCode", "ChannelParams", "ConfigError", "DEFAULT_DISTANCES",
    "DEFAULT_STRATEGIES", "EnergyBreakdown", "EnergyParams", "FRAME_CONSTANTS",
    "FrameConstants", "FrameReliability", "InvalidFrameError", "LinkBudget",
    "LinkModel", "MODE_TABLE", "ModeMetrics", "ModeSolution", "OperatingPoint",
    "OptResult", "PHR_CODE", "PSDU_CODE", "PhyMode", "PsduLayout", "QosSpec",
    "Scenario", "SolverConfig", "SweepRow", "bch_block_log_success",
    "bch_block_success", "bit_error_prob", "cloee", "codeword_count",
    "dual_inner_max", "dual_update", "emit_curves", "energy_breakdown",
    "energy_efficiency", "exhaustive_search", "frame_duration", "kasami_success",
    "link_budget", "load_scenario", "log_q_function", "mode_for",
    "nt_ee_closed_form", "nt_thr_closed_form", "overhead_energy", "parse_rows",
    "parse_scenario", "path_loss_db", "payload_energy_per_bit", "ppdu_success",
    "psdu_layout", "q_function", "rows_to_csv", "run_sweep", "shr_success",
    "snap_to_grid", "solve_mode", "startup_energy", "throughput",
]
