"""Entangled-resource coefficient vectors for the teleportation protocol.

A resource over N photons is described by N+1 complex coefficients
c_0..c_N with unit total weight.  This module provides the uniform
(maximally entangled) family, the six-photon tent family whose squared
moduli are piecewise linear in the mode index with slope ``x``, plus
validation and JSON (de)serialization.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

NORMALIZATION_TOL = 1e-12

TENT_PHOTONS = 6
TENT_SLOPE_MIN = -1.0 / 12.0  # below: centre weight (1+12x)/7 goes negative
TENT_SLOPE_MAX = 1.0 / 9.0    # above: edge weight (1-9x)/7 goes negative


@dataclass(frozen=True)
class ResourceCoeffs:
    """Coefficients c_0..c_N of an N-photon entangled resource.

    Normalization (sum |c_i|^2 == 1) is *not* enforced at construction so
    that :func:`validate` can report on broken inputs; engines check it at
    their entry points.
    """

    n_photons: int
    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.n_photons < 1:
            raise ValueError(f"n_photons must be >= 1, got {self.n_photons}")
        coeffs = tuple(complex(c) for c in self.coeffs)
        if len(coeffs) != self.n_photons + 1:
            raise ValueError(
                f"need {self.n_photons + 1} coefficients for {self.n_photons} "
                f"photons, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def probabilities(self) -> tuple[float, ...]:
        """Squared moduli |c_i|^2."""
        return tuple(abs(c) ** 2 for c in self.coeffs)

    def normalization_delta(self) -> float:
        """Sum of squared moduli minus one (zero for a valid resource)."""
        return math.fsum(self.probabilities) - 1.0

    def is_normalized(self, tol: float = NORMALIZATION_TOL) -> bool:
        return abs(self.normalization_delta()) <= tol

    def reversed(self) -> "ResourceCoeffs":
        """Resource with the coefficient order flipped (c_i -> c_{N-i})."""
        return ResourceCoeffs(self.n_photons, self.coeffs[::-1])

    def to_dict(self) -> dict:
        return {
            "n_photons": self.n_photons,
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResourceCoeffs":
        try:
            n = int(data["n_photons"])
            coeffs = tuple(complex(re, im) for re, im in data["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coefficient record: {exc}") from exc
        return cls(n, coeffs)


def maximally_entangled(n_photons: int) -> ResourceCoeffs:
    """Uniform coefficients c_i = 1/sqrt(N+1)."""
    if n_photons < 1:
        raise ValueError(f"n_photons must be >= 1, got {n_photons}")
    c = 1.0 / math.sqrt(n_photons + 1)
    return ResourceCoeffs(n_photons, (complex(c),) * (n_photons + 1))


def tent_family(x: float) -> ResourceCoeffs:
    """Six-photon resource with |c_i|^2 = (1-9x)/7 + (3-|i-3|)x.

    The weights rise linearly with slope ``x`` towards the centre index 3
    and are symmetric about it; x=0 recovers the uniform resource.  ``x``
    must lie in [-1/12, 1/9], outside which some weight turns negative.
    """
    if not TENT_SLOPE_MIN <= x <= TENT_SLOPE_MAX:
        raise ValueError(
            f"tent slope {x} outside [{TENT_SLOPE_MIN!r}, {TENT_SLOPE_MAX!r}]"
        )
    base = (1.0 - 9.0 * x) / 7.0
    weights = [base + (3 - abs(i - 3)) * x for i in range(TENT_PHOTONS + 1)]
    # boundary slopes can leave -1e-17 dust on the vanishing weight
    coeffs = tuple(complex(math.sqrt(max(w, 0.0))) for w in weights)
    return ResourceCoeffs(TENT_PHOTONS, coeffs)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`; ``ok`` iff every invariant holds."""

    ok: bool
    normalization_delta: float
    length_delta: int
    messages: tuple[str, ...]


def validate(coeffs: ResourceCoeffs, tol: float = NORMALIZATION_TOL) -> ValidationReport:
    """Check the resource invariants, reporting per-invariant deltas."""
    messages: list[str] = []
    length_delta = len(coeffs.coeffs) - (coeffs.n_photons + 1)
    if length_delta != 0:
        messages.append(
            f"length off by {length_delta} from n_photons+1 = {coeffs.n_photons + 1}"
        )
    norm_delta = coeffs.normalization_delta()
    if abs(norm_delta) > tol:
        messages.append(f"sum |c_i|^2 deviates from 1 by {norm_delta:.6g}")
    return ValidationReport(
        ok=not messages,
        normalization_delta=norm_delta,
        length_delta=length_delta,
        messages=tuple(messages),
    )


def require_normalized(coeffs: ResourceCoeffs, tol: float = 1e-9) -> None:
    """Raise ValueError when the resource is not normalized.

    Engines use a looser gate than the construction-time 1e-12 target so
    that coefficient files with benign rounding still load.
    """
    delta = coeffs.normalization_delta()
    if abs(delta) > tol:
        raise ValueError(f"resource not normalized: sum |c_i|^2 - 1 = {delta:.6g}")


def save_coeffs(coeffs: ResourceCoeffs, path: str | Path) -> None:
    Path(path).write_text(json.dumps(coeffs.to_dict(), indent=2) + "\n")


def load_coeffs(path: str | Path) -> ResourceCoeffs:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid coefficient file {path}: {exc}") from exc
    return ResourceCoeffs.from_dict(data)
