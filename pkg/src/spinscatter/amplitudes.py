"""Spatial scattering amplitudes f(phi) at signed in-plane angles.

Angles live on the principal branch (-pi, pi].  All built-in models depend
on phi only through cos(phi), hence are even in phi ("symmetric").  The
partial-wave convention used throughout:

    f(phi) = sum_l (2l+1) * a_l * P_l(cos phi)

i.e. the (2l+1) weight is NOT folded into the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import legendre as npleg

__all__ = [
    "Constant",
    "PartialWave",
    "RutherfordLike",
    "AmplitudeModel",
    "evaluate",
    "exchange_angle",
    "model_from_config",
    "model_to_config",
]


@dataclass(frozen=True)
class Constant:
    """Angle-independent amplitude f(phi) = value."""

    value: complex

    symmetric = True

    def amplitude(self, phi):
        return self.value * np.ones_like(np.asarray(phi, dtype=float), dtype=complex) \
            if np.ndim(phi) else complex(self.value)


@dataclass(frozen=True)
class PartialWave:
    """Legendre sum f(phi) = sum_l (2l+1) a_l P_l(cos phi)."""

    coeffs: tuple[complex, ...]

    symmetric = True

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("partial-wave model needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    def amplitude(self, phi):
        weights = np.array(
            [(2 * ell + 1) * c for ell, c in enumerate(self.coeffs)], dtype=complex
        )
        x = np.cos(phi)
        val = npleg.legval(x, weights.real) + 1j * npleg.legval(x, weights.imag)
        return val if np.ndim(phi) else complex(val)


@dataclass(frozen=True)
class RutherfordLike:
    """Forward-divergent amplitude strength / (sin^2(phi/2) + epsilon).

    The real regulator epsilon > 0 keeps phi -> 0 finite everywhere, so no
    minimum angle is required.
    """

    strength: float
    epsilon: float

    symmetric = True

    def __post_init__(self) -> None:
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon!r}")

    def amplitude(self, phi):
        val = self.strength / (np.sin(np.asarray(phi) / 2.0) ** 2 + self.epsilon)
        return val.astype(complex) if np.ndim(phi) else complex(val)


AmplitudeModel = Constant | PartialWave | RutherfordLike


def _check_principal(phi) -> None:
    arr = np.asarray(phi, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("phi must be finite")
    if np.any(arr <= -np.pi) or np.any(arr > np.pi):
        raise ValueError("phi outside the principal range (-pi, pi]; wrap before calling")


def evaluate(model: AmplitudeModel, phi):
    """f(phi) for a scalar or array of angles on the principal branch."""
    _check_principal(phi)
    return model.amplitude(phi)


def exchange_angle(phi):
    """Angle argument of the exchanged process, -pi + phi wrapped to (-pi, pi].

    phi = 0 maps to +pi (the wrap convention at the branch edge).
    """
    _check_principal(phi)
    if np.ndim(phi):
        arr = np.asarray(phi, dtype=float)
        return np.where(arr <= 0.0, arr + np.pi, arr - np.pi)
    return phi + np.pi if phi <= 0.0 else phi - np.pi


def model_from_config(config: dict) -> AmplitudeModel:
    """Build a model from its JSON-friendly description."""
    kind = config.get("kind")
    if kind == "constant":
        return Constant(_complex_from_json(config["value"]))
    if kind == "partial_wave":
        return PartialWave(tuple(_complex_from_json(c) for c in config["coeffs"]))
    if kind == "rutherford":
        return RutherfordLike(float(config["strength"]), float(config["epsilon"]))
    raise ValueError(f"unknown amplitude model kind: {kind!r}")


def model_to_config(model: AmplitudeModel) -> dict:
    if isinstance(model, Constant):
        return {"kind": "constant", "value": _complex_to_json(model.value)}
    if isinstance(model, PartialWave):
        return {"kind": "partial_wave", "coeffs": [_complex_to_json(c) for c in model.coeffs]}
    if isinstance(model, RutherfordLike):
        return {"kind": "rutherford", "strength": float(model.strength), "epsilon": float(model.epsilon)}
    raise TypeError(f"not an amplitude model: {model!r}")


def _complex_from_json(obj) -> complex:
    if isinstance(obj, dict):
        return complex(float(obj["re"]), float(obj.get("im", 0.0)))
    return complex(obj)


def _complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}
