"""Exact spin bookkeeping and SU(2) rotation primitives.

Spins and projections are stored as doubled integers so that half-integer
values never touch floating point until they enter a numeric kernel.  The
``(2s+1)``-dimensional eigenbasis of ``s_z`` is always ordered by ascending
projection m = -s ... +s; every other module relies on this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "HalfInt",
    "SpinState",
    "SpinOperatorTriple",
    "make_spin_operators",
    "rotation_matrix",
    "rotate",
    "sz_eigenstate",
    "aligned_state",
    "random_state",
    "projections",
]

_UNIT_TOL = 1e-12


@dataclass(frozen=True, order=True)
class HalfInt:
    """An integer or half-odd-integer stored exactly as twice its value."""

    twice_value: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice_value, (int, np.integer)):
            raise TypeError(f"twice_value must be an integer, got {self.twice_value!r}")
        object.__setattr__(self, "twice_value", int(self.twice_value))

    @classmethod
    def from_value(cls, value) -> "HalfInt":
        """Build from an int, an exact multiple of 1/2, or a string like '3/2'."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            text = value.strip()
            if "/" in text:
                num, den = text.split("/", 1)
                if int(den) != 2:
                    raise ValueError(f"only halves are representable, got {value!r}")
                return cls(int(num))
            value = float(text)
        doubled = 2 * value
        if doubled != round(doubled):
            raise ValueError(f"{value!r} is not an integer multiple of 1/2")
        return cls(int(round(doubled)))

    @property
    def value(self) -> float:
        return self.twice_value / 2.0

    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice_value)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value + other.twice_value)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice_value - other.twice_value)

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


def _check_spin(s: HalfInt) -> None:
    if s.twice_value < 0:
        raise ValueError(f"total spin must be non-negative, got s={s}")


def _check_projection(s: HalfInt, m: HalfInt) -> None:
    _check_spin(s)
    if abs(m.twice_value) > s.twice_value or (s.twice_value - m.twice_value) % 2 != 0:
        raise ValueError(f"m={m} is not a valid projection for s={s}")


def dimension(s: HalfInt) -> int:
    _check_spin(s)
    return s.twice_value + 1


def projections(s: HalfInt) -> list[HalfInt]:
    """Projections m = -s ... +s in ascending (basis) order."""
    return [HalfInt(t) for t in range(-s.twice_value, s.twice_value + 1, 2)]


def projection_index(s: HalfInt, m: HalfInt) -> int:
    """Index of |s,m> in the ascending-m basis."""
    _check_projection(s, m)
    return (m.twice_value + s.twice_value) // 2


@dataclass(frozen=True)
class SpinState:
    """Normalized complex amplitude vector over the ascending-m eigenbasis."""

    s: HalfInt
    amps: np.ndarray

    def __post_init__(self) -> None:
        _check_spin(self.s)
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (dimension(self.s),):
            raise ValueError(
                f"expected {dimension(self.s)} amplitudes for s={self.s}, got shape {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _UNIT_TOL:
            raise ValueError(f"amplitudes not normalized (norm={norm!r}); use SpinState.normalized")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def normalized(cls, s: HalfInt, amps: Iterable[complex]) -> "SpinState":
        """Construct after rescaling to unit norm (rejects the zero vector)."""
        arr = np.asarray(list(amps), dtype=complex)
        norm = np.linalg.norm(arr)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(s, arr / norm)

    def overlap(self, other: "SpinState") -> complex:
        """<self|other>."""
        if self.s != other.s:
            raise ValueError(f"spin mismatch: {self.s} vs {other.s}")
        return complex(np.vdot(self.amps, other.amps))


@dataclass(frozen=True)
class SpinOperatorTriple:
    """Dense Cartesian spin matrices in the ascending-m basis (hbar = 1)."""

    s: HalfInt
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray


def make_spin_operators(s: HalfInt) -> SpinOperatorTriple:
    """Build (Sx, Sy, Sz) for spin s by the ladder-operator construction.

    Sz is diagonal with entries -s ... +s; the raising operator has matrix
    elements sqrt(s(s+1) - m(m+1)) one step above the diagonal of m.
    """
    _check_spin(s)
    dim = dimension(s)
    ms = np.array([m.value for m in projections(s)])
    sval = s.value
    sz = np.diag(ms).astype(complex)
    raising = np.zeros((dim, dim), dtype=complex)
    for k in range(dim - 1):
        raising[k + 1, k] = np.sqrt(sval * (sval + 1.0) - ms[k] * (ms[k] + 1.0))
    sx = (raising + raising.conj().T) / 2.0
    sy = (raising - raising.conj().T) / 2.0j
    for mat in (sx, sy, sz):
        mat.flags.writeable = False
    return SpinOperatorTriple(s=s, sx=sx, sy=sy, sz=sz)


def _check_axis(axis: Sequence[float]) -> np.ndarray:
    vec = np.asarray(axis, dtype=float)
    if vec.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {vec.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > _UNIT_TOL:
        raise ValueError(f"axis must be unit length (|axis|={norm!r})")
    return vec


def rotation_matrix(s: HalfInt, axis: Sequence[float], angle: float) -> np.ndarray:
    """Unitary exp(-i * angle * axis.S) via spectral decomposition.

    axis.S is Hermitian, so eigh gives the exponential to machine precision
    at these dimensions.
    """
    vec = _check_axis(axis)
    ops = make_spin_operators(s)
    generator = vec[0] * ops.sx + vec[1] * ops.sy + vec[2] * ops.sz
    evals, evecs = np.linalg.eigh(generator)
    return (evecs * np.exp(-1j * angle * evals)) @ evecs.conj().T


def rotate(state: SpinState, axis: Sequence[float], angle: float) -> SpinState:
    """Rotate a spin state by `angle` radians about a unit `axis`."""
    rot = rotation_matrix(state.s, axis, angle)
    return SpinState(state.s, rot @ state.amps)


def sz_eigenstate(s: HalfInt, m: HalfInt) -> SpinState:
    """The basis eigenket |s, m>."""
    idx = projection_index(s, m)
    amps = np.zeros(dimension(s), dtype=complex)
    amps[idx] = 1.0
    return SpinState(s, amps)


def aligned_state(s: HalfInt, axis: Sequence[float]) -> SpinState:
    """Maximal-projection state along a spatial unit vector.

    Rotates |s, m=+s> from +z onto the requested axis; the +/-z axes are
    returned exactly as basis kets.
    """
    vec = _check_axis(axis)
    top = sz_eigenstate(s, s)
    if vec[2] >= 1.0 - 1e-15:
        return top
    if vec[2] <= -1.0 + 1e-15:
        return sz_eigenstate(s, -s)
    # rotate about z x axis, through the polar angle of `axis`
    rot_axis = np.array([-vec[1], vec[0], 0.0])
    rot_axis /= np.linalg.norm(rot_axis)
    return rotate(top, rot_axis, np.arccos(vec[2]))


def random_state(s: HalfInt, seed: int) -> SpinState:
    """Haar-uniform pure state on the (2s+1)-dimensional sphere; seeded."""
    rng = np.random.default_rng(seed)
    return haar_state(s, rng)


def haar_state(s: HalfInt, rng: np.random.Generator) -> SpinState:
    """Draw one Haar-uniform state from an existing generator."""
    dim = dimension(s)
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return SpinState(s, vec / np.linalg.norm(vec))
