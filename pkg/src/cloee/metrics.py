"""Objective functions: energy efficiency (bits/Joule) and throughput (bits/s).

Both share the numerator n_t * P_SHR * P_PHR * P_CW^ceil(n_t/63): payload
bits delivered only when every frame section survives.  Efficiency divides by
the energy of one exchange, throughput by its on-air time.

LinkModel composes the channel, reliability and energy pieces for a given
distance.  By default each frame section is evaluated at its own burst order
(SHR at n_cpb=4, PHR at n_cpb=32, payload at the selected mode), matching the
section-specific constants of the energy model; uniform_section_ber=True
evaluates all three sections at the payload's bit error rate instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, DEFAULT_CHANNEL, bit_error_prob, link_budget
from .energy import DEFAULT_ENERGY, EnergyBreakdown, EnergyParams, energy_breakdown
from .frame import (
    FRAME_CONSTANTS,
    MODE_TABLE,
    PHR_CODE,
    PSDU_CODE,
    BchCode,
    FrameConstants,
    PhyMode,
    frame_duration,
    mode_for,
)
from .reliability import (
    FrameReliability,
    bch_block_log_success,
    bch_block_success,
    kasami_success,
    shr_success,
)


@dataclass(frozen=True)
class OperatingPoint:
    """The optimizer's decision variables plus the link distance."""

    n_t: int
    mode: PhyMode
    distance: float

    def __post_init__(self):
        if self.n_t < PSDU_CODE.n:
            raise ValueError(f"n_t must be >= {PSDU_CODE.n}, got {self.n_t}")


@dataclass(frozen=True)
class QosSpec:
    """Minimum-rate requirement: each of n_s nodes needs r0 bits/s."""

    r0: float = 15e3
    n_s: int = 24

    def __post_init__(self):
        if self.r0 <= 0:
            raise ValueError(f"r0 must be > 0, got {self.r0}")
        if not 1 <= self.n_s <= 64:
            raise ValueError(f"a hub serves 1..64 nodes, got n_s={self.n_s}")

    @property
    def aggregate_rate(self) -> float:
        return self.r0 * self.n_s


def energy_efficiency(op: OperatingPoint, rel: FrameReliability, energy: EnergyBreakdown) -> float:
    """Delivered payload bits per Joule for one PPDU exchange."""
    return op.n_t * rel.p_ppdu / energy.total(op.n_t)


def throughput(op: OperatingPoint, rel: FrameReliability,
               consts: FrameConstants = FRAME_CONSTANTS) -> float:
    """Delivered payload bits per second of frame time."""
    return op.n_t * rel.p_ppdu / frame_duration(op.n_t, op.mode, consts)


class ModeMetrics:
    """Everything the optimizer needs about one (distance, mode) pair.

    Link reliabilities and energies are computed once; eta()/rate() then
    evaluate the grid objectives (codeword-count exponent ceil(n_t/n)) for
    scalar or array n_t, while eta_cont()/rate_cont() use the relaxed
    exponent n_t/n that the closed forms differentiate.  The two agree
    exactly at multiples of n.
    """

    def __init__(self, mode: PhyMode, distance: float, chi: float,
                 p_b: float, p_b_shr: float, p_b_phr: float,
                 energy: EnergyBreakdown, consts: FrameConstants,
                 code: BchCode, phr_code: BchCode):
        self.mode = mode
        self.distance = distance
        self.chi = chi
        self.p_b = p_b
        self.p_b_shr = p_b_shr
        self.p_b_phr = p_b_phr
        self.energy = energy
        self.consts = consts
        self.code = code
        self.n = code.n
        self.p_kasami = kasami_success(p_b_shr, consts.rho_sensitivity, consts.kasami_len)
        self.p_shr = shr_success(self.p_kasami)
        self.p_phr = bch_block_success(p_b_phr, (consts.n_phr, phr_code.t))
        self.p_cw = bch_block_success(p_b, (code.n, code.t))
        self.log_p_cw = bch_block_log_success(p_b, (code.n, code.t))
        self.header_success = self.p_shr * self.p_phr
        self.t_sym = mode.t_sym
        self.t_oh = consts.t_shr + consts.t_phr

    # -- grid objectives (integer frame sizes, whole codewords) ----------

    def n_cw(self, n_t):
        return np.ceil(np.asarray(n_t, dtype=float) / self.n)

    def success(self, n_t):
        """P(PPDU delivered) with the codeword-count exponent."""
        out = self.header_success * np.exp(self.n_cw(n_t) * self.log_p_cw)
        return float(out) if np.ndim(n_t) == 0 else out

    def eta(self, n_t):
        """Energy efficiency in bits/Joule at integer frame size(s)."""
        nt = np.asarray(n_t, dtype=float)
        out = nt * self.header_success * np.exp(self.n_cw(n_t) * self.log_p_cw) \
            / self.energy.total(nt)
        return float(out) if np.ndim(n_t) == 0 else out

    def rate(self, n_t):
        """Throughput in bits/s at integer frame size(s)."""
        nt = np.asarray(n_t, dtype=float)
        out = nt * self.header_success * np.exp(self.n_cw(n_t) * self.log_p_cw) \
            / (self.t_oh + nt * self.t_sym)
        return float(out) if np.ndim(n_t) == 0 else out

    def reliability(self, n_t: int) -> FrameReliability:
        n_cw = -(-int(n_t) // self.n)
        p_psdu = math.exp(n_cw * self.log_p_cw)
        return FrameReliability(
            p_kasami=self.p_kasami,
            p_sfd=self.p_kasami,
            p_shr=self.p_shr,
            p_phr=self.p_phr,
            p_cw=self.p_cw,
            p_psdu=p_psdu,
            p_ppdu=self.header_success * p_psdu,
        )

    # -- continuous relaxation (exponent n_t/n) --------------------------

    def success_cont(self, x: float) -> float:
        return self.header_success * math.exp(x * self.log_p_cw / self.n)

    def eta_cont(self, x: float) -> float:
        return x * self.success_cont(x) / self.energy.total(x)

    def rate_cont(self, x: float) -> float:
        return x * self.success_cont(x) / (self.t_oh + x * self.t_sym)

    def _grad(self, x: float, per_unit: float, fixed: float) -> float:
        c = self.log_p_cw / self.n
        denom = per_unit * x + fixed
        beta = c * x * x * per_unit + c * x * fixed + fixed
        return self.success_cont(x) * beta / (denom * denom)

    def eta_cont_grad(self, x: float) -> float:
        """d(eta_cont)/d(n_t); zero exactly at the closed-form optimum."""
        return self._grad(x, self.energy.eps_b, self.energy.eps_fixed)

    def rate_cont_grad(self, x: float) -> float:
        return self._grad(x, self.t_sym, self.t_oh)


@dataclass(frozen=True)
class LinkModel:
    """Channel + reliability + energy composition for the optimizer and CLI."""

    channel: ChannelParams = DEFAULT_CHANNEL
    energy: EnergyParams = DEFAULT_ENERGY
    consts: FrameConstants = FRAME_CONSTANTS
    code: BchCode = PSDU_CODE
    phr_code: BchCode = PHR_CODE
    uniform_section_ber: bool = False
    integration_per_pulse: bool = False

    def bit_error(self, distance: float, mode: PhyMode, chi: float = 0.0) -> float:
        lb = link_budget(distance, mode, self.energy.eps_p, self.channel, chi,
                         self.integration_per_pulse)
        return bit_error_prob(lb, mode)

    def mode_metrics(self, distance: float, mode: PhyMode, chi: float = 0.0) -> ModeMetrics:
        p_b = self.bit_error(distance, mode, chi)
        if self.uniform_section_ber:
            p_b_shr = p_b_phr = p_b
        else:
            p_b_shr = self.bit_error(distance, mode_for(self.consts.n_cpb_shr), chi)
            p_b_phr = self.bit_error(distance, mode_for(self.consts.n_cpb_phr), chi)
        return ModeMetrics(
            mode=mode,
            distance=distance,
            chi=chi,
            p_b=p_b,
            p_b_shr=p_b_shr,
            p_b_phr=p_b_phr,
            energy=energy_breakdown(mode, self.energy, self.consts),
            consts=self.consts,
            code=self.code,
            phr_code=self.phr_code,
        )

    def env(self, distance: float, chi: float = 0.0) -> tuple[ModeMetrics, ...]:
        """Metrics for all six burst modes at one distance, ascending n_cpb."""
        return tuple(self.mode_metrics(distance, m, chi) for m in MODE_TABLE)
