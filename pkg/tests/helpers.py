"""Shared test utilities, kept independent of the package internals."""

import numpy as np


def sign_changes(values, rel_tol: float = 1e-12) -> int:
    """Sign changes in the first differences of a sequence.

    Differences below rel_tol of the largest magnitude count as zero so a
    flat floating-point plateau is not read as oscillation.
    """
    diffs = np.diff(np.asarray(values, dtype=float))
    if diffs.size == 0:
        return 0
    scale = float(np.max(np.abs(diffs)))
    if scale == 0.0:
        return 0
    signs = [int(np.sign(d)) for d in diffs if abs(d) > rel_tol * scale]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def is_unimodal_max(values, rel_tol: float = 1e-12) -> bool:
    """True when first differences go + to - at most once and never - to +."""
    diffs = np.diff(np.asarray(values, dtype=float))
    if diffs.size == 0:
        return True
    scale = float(np.max(np.abs(diffs)))
    if scale == 0.0:
        return True
    falling = False
    for d in diffs:
        if abs(d) <= rel_tol * scale:
            continue
        if d < 0:
            falling = True
        elif falling:
            return False
    return True


def grid_argmax(values, nts) -> int:
    """First-occurrence argmax over a frame-size grid."""
    values = np.asarray(values, dtype=float)
    return int(np.asarray(nts)[int(np.argmax(values))])
