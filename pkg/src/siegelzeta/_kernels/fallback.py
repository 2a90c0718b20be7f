"""Pure-numpy implementation of the hot quadrature kernel."""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

# chunk the z axis so the broadcast matrix stays cache- and memory-friendly
_CHUNK = 256


def weighted_exp_sum(
    pref: np.ndarray,
    c1: np.ndarray,
    c2: np.ndarray,
    am: complex,
    w: np.ndarray,
    lw: np.ndarray,
    wt: np.ndarray,
) -> np.ndarray:
    """out[i] = sum_j wt[j] * exp(pref[i] - c2[i] w[j]^2/2 - c1[i] w[j] + am lw[j]).

    This is the inner loop of every parabolic-cylinder evaluation: a batch of
    weighted nodes against a batch of exponent parameters.
    """
    n = pref.shape[0]
    out = np.empty(n, dtype=complex)
    half_w2 = 0.5 * w * w
    am_lw = am * lw
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        ex = np.exp(
            pref[lo:hi, None]
            - c2[lo:hi, None] * half_w2[None, :]
            - c1[lo:hi, None] * w[None, :]
            + am_lw[None, :]
        )
        out[lo:hi] = ex @ wt
    return out
