"""Transceiver energy model: per-bit payload energy, overhead and startup.

Transmit cost is pulse energy plus the synthesizer running for the on-air
time; receive cost is the analog front end (RAKE correlators, LNA, VGA, plus
ADC for soft decisions and generator+synthesizer for coherent detection)
integrated over the same time.  rho_r and rho_c switch the coherent /
soft-decision terms; the defaults model a non-coherent hard-decision
energy detector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frame import FRAME_CONSTANTS, FrameConstants, PhyMode


@dataclass(frozen=True)
class EnergyParams:
    """Per-pulse energy and circuit powers (W), startup time (s)."""

    eps_p: float = 20e-12
    p_cor: float = 10.08e-3
    p_adc: float = 2.2e-3
    p_lna: float = 9.4e-3
    p_vga: float = 22e-3
    p_syn: float = 30.6e-3
    p_gen: float = 2.8e-3
    t_st: float = 400e-6
    m_fingers: int = 1      # RAKE fingers; 1 for the energy-detector setup
    rho_r: int = 0          # 1 coherent / 0 non-coherent
    rho_c: int = 0          # 1 soft / 0 hard decision

    def __post_init__(self):
        for name in ("eps_p", "p_cor", "p_adc", "p_lna", "p_vga", "p_syn", "p_gen", "t_st"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.m_fingers < 0:
            raise ValueError(f"m_fingers must be >= 0, got {self.m_fingers}")
        if self.rho_r not in (0, 1) or self.rho_c not in (0, 1):
            raise ValueError("rho_r and rho_c must be 0 or 1")

    @property
    def rx_chain_power(self) -> float:
        """Receive-side power drawn while the radio is on."""
        return (
            self.m_fingers * self.p_cor
            + self.rho_c * self.p_adc
            + self.p_lna
            + self.p_vga
            + self.rho_r * (self.p_gen + self.p_syn)
        )


DEFAULT_ENERGY = EnergyParams()


def payload_energy_per_bit(mode: PhyMode, ep: EnergyParams = DEFAULT_ENERGY) -> float:
    """Joules to transmit and receive one payload bit.

    Both the transmit and receive frame energies are linear in the payload
    size (on-air time is n_t * t_sym), so the per-bit cost is independent of
    the frame length.
    """
    return ep.eps_p * mode.n_cpb + (ep.p_syn + ep.rx_chain_power) * mode.t_sym


def overhead_energy(consts: FrameConstants = FRAME_CONSTANTS,
                    ep: EnergyParams = DEFAULT_ENERGY) -> float:
    """Joules spent on the SHR + PHR by transmitter and receiver together."""
    pulses = consts.n_cpb_shr * consts.n_shr + consts.n_cpb_phr * consts.n_phr
    t_oh = consts.t_shr + consts.t_phr
    return pulses * ep.eps_p + (ep.p_syn + ep.rx_chain_power) * t_oh


def startup_energy(ep: EnergyParams = DEFAULT_ENERGY) -> float:
    """Joules for both radios to start up: 2 * p_syn * t_st."""
    return 2.0 * ep.p_syn * ep.t_st


@dataclass(frozen=True)
class EnergyBreakdown:
    """Energy cost of one PPDU exchange: eps_b per payload bit plus fixed terms."""

    eps_b: float
    eps_oh: float
    eps_st: float

    @property
    def eps_fixed(self) -> float:
        return self.eps_oh + self.eps_st

    def total(self, n_t) -> float:
        """Total Joules for a PPDU carrying n_t payload bits (array-friendly)."""
        return n_t * self.eps_b + self.eps_oh + self.eps_st


def energy_breakdown(mode: PhyMode, ep: EnergyParams = DEFAULT_ENERGY,
                     consts: FrameConstants = FRAME_CONSTANTS) -> EnergyBreakdown:
    return EnergyBreakdown(
        eps_b=payload_energy_per_bit(mode, ep),
        eps_oh=overhead_energy(consts, ep),
        eps_st=startup_energy(ep),
    )
