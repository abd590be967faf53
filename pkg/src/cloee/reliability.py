"""Success probabilities of SHR, PHR, codewords, PSDU and the whole PPDU.

Everything reduces to binomial tails: a block of N bits survives when at most
t bit errors occur.  The SHR succeeds when the SFD Kasami sequence is detected
and at least one of the four preamble repetitions is,

    P_SHR = P_SFD * (1 - (1 - P_Kasami)^4),    P_SFD = P_Kasami.

(The stricter all-four-repetitions reading, P_Kasami^4, is deliberately not
used; the any-of-four form is what the detection model states.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .frame import FRAME_CONSTANTS, PHR_CODE, PSDU_CODE, BchCode, FrameConstants

_CodeLike = BchCode | tuple[int, int]


def _block_params(code: _CodeLike) -> tuple[int, int]:
    if isinstance(code, BchCode):
        return code.n, code.t
    n_bits, t = code
    return int(n_bits), int(t)


def _check_p(p_b: float) -> None:
    if not 0.0 <= p_b <= 1.0:
        raise ValueError(f"bit error probability must be in [0, 1], got {p_b}")


def _binom_pmf_log(i: int, n_bits: int, p_b: float) -> float:
    # Exact integer binomial coefficient, probabilities combined in log space
    # so the tail stays accurate from p_b ~ 1e-300 up to 0.5.
    if p_b == 0.0:
        return 1.0 if i == 0 else 0.0
    if p_b == 1.0:
        return 1.0 if i == n_bits else 0.0
    log_term = i * math.log(p_b) + (n_bits - i) * math.log1p(-p_b)
    return math.comb(n_bits, i) * math.exp(log_term)


def bch_block_success(p_b: float, code: _CodeLike) -> float:
    """P(block of N bits decodes) = sum_{i<=t} C(N,i) p^i (1-p)^(N-i)."""
    n_bits, t = _block_params(code)
    if t >= n_bits:
        raise ValueError(f"correctable errors t={t} must be < block size {n_bits}")
    _check_p(p_b)
    return min(1.0, sum(_binom_pmf_log(i, n_bits, p_b) for i in range(t + 1)))


def bch_block_log_success(p_b: float, code: _CodeLike) -> float:
    """log of bch_block_success, accurate when the success probability is ~1.

    For small p_b the direct sum rounds to 1.0 and its log to 0; here the
    failure tail U = P(more than t errors) is summed instead and the result
    is log1p(-U), which keeps the tiny -U resolution the frame-size optimum
    depends on.
    """
    n_bits, t = _block_params(code)
    _check_p(p_b)
    if p_b == 0.0:
        return 0.0
    if p_b == 1.0:
        return math.log(bch_block_success(p_b, (n_bits, t))) if t >= n_bits else -math.inf
    upper = sum(_binom_pmf_log(i, n_bits, p_b) for i in range(t + 1, n_bits + 1))
    if upper < 0.5:
        return math.log1p(-upper)
    direct = bch_block_success(p_b, (n_bits, t))
    return math.log(direct) if direct > 0.0 else -math.inf


def kasami_success(p_b: float, rho: int = FRAME_CONSTANTS.rho_sensitivity,
                   length: int = FRAME_CONSTANTS.kasami_len) -> float:
    """P(63-bit Kasami sequence detected): at most rho bit errors tolerated."""
    return bch_block_success(p_b, (length, rho))


def shr_success(p_kasami: float) -> float:
    """SHR success from the Kasami detection probability (any-of-4 preamble + SFD)."""
    _check_p(p_kasami)
    return p_kasami * (1.0 - (1.0 - p_kasami) ** 4)


@dataclass(frozen=True)
class FrameReliability:
    """Per-section and end-to-end delivery probabilities for one PPDU."""

    p_kasami: float
    p_sfd: float
    p_shr: float
    p_phr: float
    p_cw: float
    p_psdu: float
    p_ppdu: float


def ppdu_success(
    p_b: float,
    n_t: int,
    consts: FrameConstants = FRAME_CONSTANTS,
    code: BchCode = PSDU_CODE,
    phr_code: BchCode = PHR_CODE,
) -> FrameReliability:
    """Compose section successes at a single bit error probability.

    The PSDU carries ceil(n_t / n) codewords and succeeds only if all of them
    decode.  Callers that model section-specific burst orders evaluate the
    sections at their own p_b instead (see metrics.LinkModel).
    """
    _check_p(p_b)
    if n_t < code.n:
        raise ValueError(f"n_t must be >= {code.n}, got {n_t}")
    p_kasami = kasami_success(p_b, consts.rho_sensitivity, consts.kasami_len)
    p_shr = shr_success(p_kasami)
    p_phr = bch_block_success(p_b, (consts.n_phr, phr_code.t))
    p_cw = bch_block_success(p_b, (code.n, code.t))
    n_cw = -(-n_t // code.n)
    log_p_cw = bch_block_log_success(p_b, (code.n, code.t))
    p_psdu = math.exp(n_cw * log_p_cw)
    return FrameReliability(
        p_kasami=p_kasami,
        p_sfd=p_kasami,
        p_shr=p_shr,
        p_phr=p_phr,
        p_cw=p_cw,
        p_psdu=p_psdu,
        p_ppdu=p_shr * p_phr * p_psdu,
    )
