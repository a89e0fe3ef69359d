"""Closed-form single-teleportation engine.

Works in the post-phase-correction picture: for a logical qubit
(alpha, beta) teleported through a resource c_0..c_N, detecting m vertical
photons (m = 0..N+1) happens with probability

    p(m) = |alpha c_m|^2 + |beta c_{m-1}|^2        (c_{-1} = c_{N+1} = 0)

and for 1 <= m <= N leaves the distorted conditional state
(alpha c_m, beta c_{m-1}) / sqrt(p(m)).  A two-outcome generalized
measurement then restores the original qubit with probability
min(|c_{m-1}|^2, |c_m|^2) / p(m); outcomes m = 0 and m = N+1 destroy it.

Passing ``qubit=None`` to the distribution functions averages over input
qubits, replacing |alpha|^2 and |beta|^2 by 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .states import ResourceCoeffs, require_normalized

QUBIT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class QubitState:
    """Logical polarization qubit alpha|H> + beta|V>."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))

    def norm(self) -> float:
        return math.sqrt(abs(self.alpha) ** 2 + abs(self.beta) ** 2)

    def normalized(self) -> "QubitState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero qubit")
        return QubitState(self.alpha / n, self.beta / n)

    def fidelity(self, other: "QubitState") -> float:
        """|<self|other>|, insensitive to global phase."""
        return abs(
            self.alpha.conjugate() * other.alpha
            + self.beta.conjugate() * other.beta
        )


def _weights(qubit: QubitState | None) -> tuple[float, float]:
    """(|alpha|^2, |beta|^2); the average-input convention uses (1/2, 1/2)."""
    if qubit is None:
        return 0.5, 0.5
    n = qubit.norm()
    if abs(n - 1.0) > QUBIT_NORM_TOL:
        raise ValueError(f"qubit not normalized (norm = {n:.9g})")
    return abs(qubit.alpha) ** 2, abs(qubit.beta) ** 2


@dataclass(frozen=True)
class OutcomeRecord:
    """One vertical-count outcome m with its probability and, when the
    qubit survives and a concrete input was given, the conditional state.
    ``phase_exponent`` is populated only by simulator-derived records."""

    m: int
    probability: float
    post_state: QubitState | None
    destroyed: bool
    phase_exponent: int | None = None


@dataclass(frozen=True)
class CorrectionOutcome:
    success_prob: float
    corrected_state: QubitState | None


def outcome_distribution(
    qubit: QubitState | None, coeffs: ResourceCoeffs
) -> list[OutcomeRecord]:
    """Records for every m in 0..N+1; probabilities sum to one."""
    require_normalized(coeffs)
    wa, wb = _weights(qubit)
    n = coeffs.n_photons
    c = coeffs.coeffs
    records = []
    for m in range(n + 2):
        cm = c[m] if m <= n else 0.0
        cm1 = c[m - 1] if m >= 1 else 0.0
        prob = wa * abs(cm) ** 2 + wb * abs(cm1) ** 2
        destroyed = m == 0 or m == n + 1
        post = None
        if not destroyed and qubit is not None and prob > 0.0:
            scale = 1.0 / math.sqrt(prob)
            post = QubitState(qubit.alpha * cm * scale, qubit.beta * cm1 * scale)
        records.append(OutcomeRecord(m, prob, post, destroyed))
    return records


def destruction_probability(
    qubit: QubitState | None, coeffs: ResourceCoeffs
) -> float:
    """Probability that the qubit is irreversibly lost (m = 0 or N+1)."""
    require_normalized(coeffs)
    wa, wb = _weights(qubit)
    c = coeffs.coeffs
    return wa * abs(c[0]) ** 2 + wb * abs(c[-1]) ** 2


def kraus_correct(
    post: QubitState, coeffs: ResourceCoeffs, m: int
) -> CorrectionOutcome:
    """Undo the outcome-m distortion with the two-outcome Kraus pair.

    For |c_{m-1}| <= |c_m| the success operator scales |H> by
    c_{m-1}/c_m; otherwise the mirrored pair scales |V> by c_m/c_{m-1}.
    Applied to the conditional state of outcome m, success returns the
    original qubit exactly (full complex ratio, so relative phase too).
    """
    require_normalized(coeffs)
    if not 1 <= m <= coeffs.n_photons:
        raise ValueError(f"m = {m} outside the correctable range 1..{coeffs.n_photons}")
    cm = coeffs.coeffs[m]
    cm1 = coeffs.coeffs[m - 1]
    if max(abs(cm1), abs(cm)) == 0.0:
        # both coefficients vanish; outcome m can never occur
        return CorrectionOutcome(0.0, None)
    if abs(cm1) <= abs(cm):
        ratio = cm1 / cm
        raw = QubitState(post.alpha * ratio, post.beta)
    else:
        ratio = cm / cm1
        raw = QubitState(post.alpha, post.beta * ratio)
    success = abs(raw.alpha) ** 2 + abs(raw.beta) ** 2
    if success == 0.0:
        return CorrectionOutcome(0.0, None)
    return CorrectionOutcome(success, raw.normalized())


def single_success_prob(coeffs: ResourceCoeffs) -> float:
    """Total probability of teleporting and restoring the qubit,
    sum_m min(|c_{m-1}|^2, |c_m|^2); independent of the input qubit."""
    require_normalized(coeffs)
    p = coeffs.probabilities
    return math.fsum(min(p[m - 1], p[m]) for m in range(1, coeffs.n_photons + 1))
