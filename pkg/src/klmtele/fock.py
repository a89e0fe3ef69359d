"""Sparse state-vector algebra over multimode, two-polarization Fock space.

States are maps from occupation patterns to complex amplitudes.  The three
operations exported here are bosonic photon creation, the multi-point
discrete Fourier transform acting homomorphically on creation operators,
and exhaustive photon-counting measurement on a subset of modes.

Everything is pure: operations return new states and never mutate their
inputs, so values are safe to share across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

NORM_TOL = 1e-12
MEASURE_NORM_TOL = 1e-6
DEFAULT_PRUNE = 1e-14  # magnitude below which interference dust is dropped


class Polarization(Enum):
    V = "V"
    H = "H"


class ModeOccupation(NamedTuple):
    """Photon counts in one optical mode, split by polarization."""

    v_count: int
    h_count: int


# An occupation pattern over all modes; plain (v, h) int tuples hash and
# compare equal to ModeOccupation, which keeps the hot loops cheap.
FockVector = tuple[ModeOccupation, ...]

_EMPTY = (0, 0)


def _coerce_key(key: Iterable[tuple[int, int]]) -> FockVector:
    return tuple(ModeOccupation(int(v), int(h)) for v, h in key)


@dataclass
class SparseState:
    """Superposition of occupation-basis kets with complex amplitudes.

    ``terms`` maps a per-mode (v_count, h_count) tuple to the amplitude of
    the corresponding normalized Fock ket.  Treat instances as immutable.
    """

    n_modes: int
    terms: dict[FockVector, complex]

    @classmethod
    def vacuum(cls, n_modes: int) -> "SparseState":
        if n_modes < 1:
            raise ValueError(f"n_modes must be >= 1, got {n_modes}")
        return cls(n_modes, {(_EMPTY,) * n_modes: 1.0 + 0.0j})

    @classmethod
    def from_terms(
        cls, n_modes: int, terms: dict[FockVector, complex]
    ) -> "SparseState":
        canon: dict[FockVector, complex] = {}
        for key, amp in terms.items():
            key = _coerce_key(key)
            if len(key) != n_modes:
                raise ValueError(f"term has {len(key)} modes, expected {n_modes}")
            if any(v < 0 or h < 0 for v, h in key):
                raise ValueError(f"negative occupation in {key}")
            canon[key] = canon.get(key, 0.0 + 0.0j) + complex(amp)
        return cls(n_modes, canon)

    def norm(self) -> float:
        return math.sqrt(math.fsum(abs(a) ** 2 for a in self.terms.values()))

    def is_normalized(self, tol: float = MEASURE_NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def normalized(self) -> "SparseState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero state")
        return SparseState(self.n_modes, {k: a / n for k, a in self.terms.items()})

    def pruned(self, threshold: float = DEFAULT_PRUNE) -> "SparseState":
        return SparseState(
            self.n_modes,
            {k: a for k, a in self.terms.items() if abs(a) > threshold},
        )

    def amplitude(self, key: Iterable[tuple[int, int]]) -> complex:
        return self.terms.get(tuple(tuple(p) for p in key), 0.0 + 0.0j)

    def total_photons(self) -> int:
        """Photon count of the support (must be uniform across terms)."""
        counts = {sum(v + h for v, h in key) for key in self.terms}
        if len(counts) > 1:
            raise ValueError(f"mixed photon numbers in support: {sorted(counts)}")
        return counts.pop() if counts else 0

    def overlap(self, other: "SparseState") -> complex:
        """Inner product <self|other>."""
        if self.n_modes != other.n_modes:
            raise ValueError("mode-count mismatch")
        small, big = (
            (self.terms, other.terms)
            if len(self.terms) <= len(other.terms)
            else (other.terms, self.terms)
        )
        acc = 0.0 + 0.0j
        for key, amp in small.items():
            o = big.get(key)
            if o is not None:
                acc += (
                    amp.conjugate() * o
                    if small is self.terms
                    else o.conjugate() * amp
                )
        return acc


def create_photon(
    state: SparseState, mode: int, polarization: Polarization
) -> SparseState:
    """Apply the creation operator for ``polarization`` in ``mode``.

    Each ket picks up the bosonic sqrt(n+1) factor; the result is not
    renormalized since creation operators are not unitary.
    """
    if not 0 <= mode < state.n_modes:
        raise ValueError(f"mode {mode} out of range [0, {state.n_modes})")
    slot = 0 if polarization is Polarization.V else 1
    out: dict[FockVector, complex] = {}
    for key, amp in state.terms.items():
        pair = key[mode]
        n_prior = pair[slot]
        new_pair = (n_prior + 1, pair[1]) if slot == 0 else (pair[0], n_prior + 1)
        new_key = key[:mode] + (new_pair,) + key[mode + 1 :]
        out[new_key] = out.get(new_key, 0.0 + 0.0j) + amp * math.sqrt(n_prior + 1)
    return SparseState(state.n_modes, out)


@dataclass(frozen=True)
class FourierSpec:
    """A P-point transform over ``target_modes``; position k in the list is
    transform index k, so the single-photon map is mode k -> mode l with
    amplitude omega^{k l} / sqrt(P), omega = exp(i 2 pi / P)."""

    order: int
    target_modes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_modes", tuple(self.target_modes))
        if self.order != len(self.target_modes):
            raise ValueError(
                f"order {self.order} != number of target modes "
                f"{len(self.target_modes)}"
            )
        if len(set(self.target_modes)) != len(self.target_modes):
            raise ValueError(f"duplicate target modes in {self.target_modes}")
        if any(m < 0 for m in self.target_modes):
            raise ValueError(f"negative mode index in {self.target_modes}")


def _fourier_coeffs(order: int) -> list[list[complex]]:
    roots = [cmath.exp(2j * math.pi * r / order) for r in range(order)]
    inv = 1.0 / math.sqrt(order)
    return [[roots[(k * l) % order] * inv for l in range(order)] for k in range(order)]


def apply_fourier(
    state: SparseState, spec: FourierSpec, prune: float = DEFAULT_PRUNE
) -> SparseState:
    """Transform every photon occupying a target mode; other modes are
    untouched spectators.

    The action is the homomorphic substitution of each creation operator by
    its single-photon image, expanded photon by photon with merging so
    duplicate patterns accumulate.  Norm is preserved to ~1e-15.
    """
    if any(m >= state.n_modes for m in spec.target_modes):
        raise ValueError(
            f"target modes {spec.target_modes} exceed register of "
            f"{state.n_modes} modes"
        )
    coeff = _fourier_coeffs(spec.order)
    targets = spec.target_modes
    out: dict[FockVector, complex] = {}
    for key, amp in state.terms.items():
        # seed: the term with its target modes emptied; operator-product
        # normalization of the sources divides out their sqrt(n!) factors
        seed = list(key)
        src: list[tuple[int, int, int]] = []  # (transform index k, slot, count)
        for k, mode in enumerate(targets):
            v, h = key[mode]
            if v:
                src.append((k, 0, v))
            if h:
                src.append((k, 1, h))
            if v or h:
                seed[mode] = _EMPTY
                amp = amp / math.sqrt(math.factorial(v) * math.factorial(h))
        local: dict[FockVector, complex] = {tuple(seed): amp}
        for k, slot, count in src:
            row = coeff[k]
            for _ in range(count):
                nxt: dict[FockVector, complex] = {}
                for lkey, lamp in local.items():
                    for l in range(spec.order):
                        tm = targets[l]
                        pair = lkey[tm]
                        n_prior = pair[slot]
                        new_pair = (
                            (n_prior + 1, pair[1])
                            if slot == 0
                            else (pair[0], n_prior + 1)
                        )
                        nkey = lkey[:tm] + (new_pair,) + lkey[tm + 1 :]
                        nxt[nkey] = nxt.get(nkey, 0.0 + 0.0j) + lamp * row[
                            l
                        ] * math.sqrt(n_prior + 1)
                local = nxt
        for lkey, lamp in local.items():
            out[lkey] = out.get(lkey, 0.0 + 0.0j) + lamp
    if prune > 0.0:
        out = {k: a for k, a in out.items() if abs(a) > prune}
    return SparseState(state.n_modes, out)


@dataclass(frozen=True)
class MeasurementOutcome:
    """One photon-counting result: per-mode counts on the measured modes,
    its probability, and the normalized residual state (same register, the
    measured modes reset to vacuum so mode indices stay stable)."""

    counts: tuple[ModeOccupation, ...]
    probability: float
    residual: SparseState


def measure_counting(
    state: SparseState, measured_modes: list[int]
) -> list[MeasurementOutcome]:
    """Enumerate every count pattern on ``measured_modes`` with nonzero
    probability, exhaustively (no sampling).  Probabilities sum to 1."""
    if not measured_modes:
        raise ValueError("measured_modes must not be empty")
    if len(set(measured_modes)) != len(measured_modes):
        raise ValueError(f"duplicate measured modes in {measured_modes}")
    if any(not 0 <= m < state.n_modes for m in measured_modes):
        raise ValueError(f"measured modes {measured_modes} out of range")
    norm = state.norm()
    if abs(norm - 1.0) > MEASURE_NORM_TOL:
        raise ValueError(f"state not normalized (norm = {norm:.9g})")

    measured = tuple(measured_modes)
    groups: dict[tuple, dict[FockVector, complex]] = {}
    for key, amp in state.terms.items():
        pattern = tuple(key[m] for m in measured)
        residual_key = list(key)
        for m in measured:
            residual_key[m] = _EMPTY
        groups.setdefault(pattern, {})[tuple(residual_key)] = amp

    outcomes = []
    for pattern in sorted(groups):
        residual_terms = groups[pattern]
        prob = math.fsum(abs(a) ** 2 for a in residual_terms.values())
        scale = 1.0 / math.sqrt(prob)
        residual = SparseState(
            state.n_modes, {k: a * scale for k, a in residual_terms.items()}
        )
        outcomes.append(
            MeasurementOutcome(
                counts=_coerce_key(pattern), probability=prob, residual=residual
            )
        )
    return outcomes
