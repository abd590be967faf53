"""IEEE 802.15.6 UWB PPDU structure: frame sizes, codeword counts and durations.

A PPDU is SHR + PHR + PSDU.  The SHR is five 63-bit Kasami sequences (four
preamble repetitions plus the SFD).  The PHR is one shortened BCH(40,28;2)
codeword.  The PSDU carries the MAC frame (header + body + FCS), bit-stuffed
and BCH(63,51;2)-encoded in the default mode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidFrameError

# Pulses are generated at 499.2 MHz; the symbol holds 32 burst positions so
# the duty cycle stays at 1/32 regardless of the burst length.
PULSE_DURATION = 2.0032e-9
BURSTS_PER_SYMBOL = 32

VALID_N_CPB = (1, 2, 4, 8, 16, 32)


@dataclass(frozen=True)
class BchCode:
    """BCH(n, k; t): k message bits per n-bit codeword, corrects up to t bit errors."""

    n: int
    k: int
    t: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"BCH code needs 1 <= k < n, got n={self.n}, k={self.k}")
        if self.t < 1:
            raise ValueError(f"BCH code needs t >= 1, got t={self.t}")

    @property
    def rate(self) -> float:
        return self.k / self.n


# Default-mode codes; the high-QoS pair is carried for reference only.
PSDU_CODE = BchCode(n=63, k=51, t=2)
PHR_CODE = BchCode(n=40, k=28, t=2)
PSDU_CODE_HIGH_QOS = BchCode(n=126, k=63, t=7)
PHR_CODE_HIGH_QOS = BchCode(n=91, k=28, t=10)


@dataclass(frozen=True)
class PhyMode:
    """One row of the standard's rate table for on-off modulation.

    rate_coded stores the rate printed in the standard's table; it differs
    from rate_uncoded * 51/63 by less than 0.1% (the table rounds the code
    rate to 0.81).
    """

    n_cpb: int
    t_w: float
    t_sym: float
    rate_uncoded: float
    rate_coded: float

    def __post_init__(self):
        if self.n_cpb not in VALID_N_CPB:
            raise ValueError(f"n_cpb must be one of {VALID_N_CPB}, got {self.n_cpb}")


def _mode(n_cpb: int, rate_coded_mbps: float) -> PhyMode:
    t_w = n_cpb * PULSE_DURATION
    t_sym = BURSTS_PER_SYMBOL * t_w
    return PhyMode(
        n_cpb=n_cpb,
        t_w=t_w,
        t_sym=t_sym,
        rate_uncoded=1.0 / t_sym,
        rate_coded=rate_coded_mbps * 1e6,
    )


MODE_TABLE: tuple[PhyMode, ...] = (
    _mode(1, 12.636),
    _mode(2, 6.318),
    _mode(4, 3.159),
    _mode(8, 1.580),
    _mode(16, 0.790),
    _mode(32, 0.395),
)

_MODE_BY_NCPB = {m.n_cpb: m for m in MODE_TABLE}


def mode_for(n_cpb: int) -> PhyMode:
    try:
        return _MODE_BY_NCPB[n_cpb]
    except KeyError:
        raise ValueError(f"no PHY mode with n_cpb={n_cpb}; valid: {VALID_N_CPB}") from None


@dataclass(frozen=True)
class FrameConstants:
    """Fixed header/preamble parameters of the UWB PPDU.

    The MAC header and FCS sizes only ever enter the math through their sum,
    so they are stored as one 72-bit constant (the 56/16 split printed in
    some sources is inconsistent; the sum is not).  t_phr uses the rounded
    2051.3 ns PHR chip time so that t_phr = 82.052 us exactly.
    """

    t_shr: float = 5 * 63 * 128e-9          # 40.32 us
    t_phr: float = 40 * 2051.3e-9           # 82.052 us
    n_shr: int = 5 * 63                     # bits, five Kasami sequences
    n_phr: int = 40
    n_mh_plus_fcs: int = 72                 # MAC header + FCS bits
    kasami_len: int = 63
    kasami_count: int = 4                   # preamble repetitions (SFD excluded)
    rho_sensitivity: int = 6                # tolerated bit errors in Kasami detection
    n_cpb_shr: int = 4
    n_cpb_phr: int = 32
    t_p: float = PULSE_DURATION

    @property
    def t_overhead(self) -> float:
        return self.t_shr + self.t_phr


FRAME_CONSTANTS = FrameConstants()


@dataclass(frozen=True)
class PsduLayout:
    """PSDU composition for a given MAC frame body size.

    n_mpdu is the MPDU bit count before stuffing (frame body + 72).
    """

    n_mpdu: int
    n_bs: int
    n_cw: int
    n_t: int


def codeword_count(n_t: int, code: BchCode = PSDU_CODE) -> int:
    """Number of codewords in a PSDU of n_t total bits, ceil(n_t / n).

    This is the standard approximation used throughout the optimizer; frames
    assembled by psdu_layout satisfy it exactly (n_t is a multiple of n).
    """
    if n_t < code.n:
        raise InvalidFrameError(f"PSDU of {n_t} bits is shorter than one {code.n}-bit codeword")
    return -(-n_t // code.n)


def psdu_layout(n_fb_prime: int, code: BchCode = PSDU_CODE) -> PsduLayout:
    """PSDU sizes for a MAC frame body of n_fb_prime bits.

    The MPDU (body + header + FCS) is split into k-bit blocks, the last block
    is padded with n_bs stuffing bits, and every block gains n - k parity bits.
    """
    if n_fb_prime < 0:
        raise ValueError(f"frame body size must be >= 0, got {n_fb_prime}")
    n_mpdu = n_fb_prime + FRAME_CONSTANTS.n_mh_plus_fcs
    n_cw = -(-n_mpdu // code.k)
    n_bs = n_cw * code.k - n_mpdu
    n_t = n_mpdu + n_bs + (code.n - code.k) * n_cw
    return PsduLayout(n_mpdu=n_mpdu, n_bs=n_bs, n_cw=n_cw, n_t=n_t)


def frame_duration(n_t: int, mode: PhyMode, consts: FrameConstants = FRAME_CONSTANTS) -> float:
    """PPDU on-air time in seconds: t_shr + t_phr + n_t * t_sym."""
    if n_t < 0:
        raise ValueError(f"n_t must be >= 0, got {n_t}")
    return consts.t_shr + consts.t_phr + n_t * mode.t_sym


def exact_codeword_count(n_fb_prime: int, code: BchCode = PSDU_CODE) -> int:
    """Codeword count from the MAC frame body size, ceil((n_fb' + 72) / k)."""
    return psdu_layout(n_fb_prime, code).n_cw
