"""Pure-Python (numpy) implementations of the hot chain kernels.

These mirror the compiled versions in ``_ckernels.pyx`` operation for
operation: the lattice sum accumulates in lexicographic outcome order and
the Monte Carlo walker consumes the same pre-drawn uniforms with the same
comparison logic, so both backends agree to machine precision (the sampler
bit-exactly).
"""

from __future__ import annotations

import itertools
import math

import numpy as np

_SUFFIX_CAP = 1 << 18  # vectorized tail block: at most 2 MiB per array
_MC_BLOCK = 1 << 17


def lattice_min_sum(a: np.ndarray, b: np.ndarray) -> float:
    """Sum over all M-tuples (j_1..j_M) of min(prod_k a[k,j_k], prod_k b[k,j_k]).

    ``a`` and ``b`` are (hops, outcomes-per-hop) weight matrices.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 2:
        raise ValueError(f"weight shapes differ: {a.shape} vs {b.shape}")
    hops, n = a.shape
    tail = 1
    while tail < hops and n ** (tail + 1) <= _SUFFIX_CAP:
        tail += 1
    sa, sb = a[hops - tail], b[hops - tail]
    for k in range(hops - tail + 1, hops):
        sa = np.multiply.outer(sa, a[k]).ravel()
        sb = np.multiply.outer(sb, b[k]).ravel()
    head = hops - tail
    if head == 0:
        return float(np.minimum(sa, sb).sum())
    parts = []
    for combo in itertools.product(range(n), repeat=head):
        pa = 1.0
        pb = 1.0
        for k, j in enumerate(combo):
            pa *= a[k, j]
            pb *= b[k, j]
        parts.append(np.minimum(pa * sa, pb * sb).sum())
    return math.fsum(parts)


def chain_mc(
    a: np.ndarray,
    b: np.ndarray,
    alpha2: float,
    beta2: float,
    u: np.ndarray,
    ucorr: np.ndarray,
) -> tuple[int, int, int]:
    """Sample teleportation trajectories and the final correction.

    ``a``/``b`` are (hops, N+2) outcome-weight rows (column t holds
    |c_t|^2 resp. |c_{t-1}|^2, zero-padded at t = N+1 resp. t = 0),
    ``u`` is a (trials, hops) uniform matrix and ``ucorr`` one uniform per
    trial for the correction Bernoulli.  Returns (successes, destroyed,
    correction_failures).
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    trials, hops = u.shape
    t_max = a.shape[1] - 1
    successes = destroyed = corr_failures = 0
    for lo in range(0, trials, _MC_BLOCK):
        hi = min(trials, lo + _MC_BLOCK)
        block = hi - lo
        ra = np.ones(block)
        rb = np.ones(block)
        alive = np.ones(block, dtype=bool)
        for k in range(hops):
            ia = np.nonzero(alive)[0]
            if ia.size == 0:
                break
            wa = alpha2 * ra[ia]
            wb = beta2 * rb[ia]
            w = wa[:, None] * a[k][None, :] + wb[:, None] * b[k][None, :]
            cum = np.cumsum(w, axis=1)
            thr = u[lo + ia, k] * (wa + wb)
            t = (cum <= thr[:, None]).sum(axis=1)
            np.minimum(t, t_max, out=t)
            dead = (t == 0) | (t == t_max)
            destroyed += int(dead.sum())
            alive[ia[dead]] = False
            il = ia[~dead]
            tl = t[~dead]
            ra[il] *= a[k][tl]
            rb[il] *= b[k][tl]
            scale = alpha2 * ra[il] + beta2 * rb[il]
            ra[il] /= scale
            rb[il] /= scale
        ia = np.nonzero(alive)[0]
        if ia.size:
            p_corr = np.minimum(ra[ia], rb[ia]) / (
                alpha2 * ra[ia] + beta2 * rb[ia]
            )
            ok = ucorr[lo + ia] < p_corr
            successes += int(ok.sum())
            corr_failures += int(ia.size - ok.sum())
    return successes, destroyed, corr_failures
