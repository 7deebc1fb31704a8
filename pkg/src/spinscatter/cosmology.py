"""Rotating-frame form of the flat (critical-density) cosmological metric.

Viewing the scattering plane from a frame rotating at angular velocity omega
about z, the homogeneous metric acquires off-diagonal time-space components.
Read as a weak-field gravito-magnetic vector potential, their curl is a
uniform field B = (0, 0, -omega), which couples to spin with energy
-mu.B = -s_z * omega (the gravito-magnetic moment of a spin-s particle being
-s).  Geometric units, c = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "MetricAtPoint",
    "GravitoVectorPotential",
    "rotating_rw_metric",
    "metric_by_transformation",
    "extract_potential",
    "numerical_curl",
    "interaction_energy",
]

Point4 = tuple[float, float, float, float]
Point3 = tuple[float, float, float]


@dataclass(frozen=True)
class MetricAtPoint:
    """Metric components g_{mu nu} at one event, coordinate order (t,x,y,z)."""

    g: np.ndarray
    coords: Point4

    def __post_init__(self) -> None:
        g = np.asarray(self.g, dtype=float)
        if g.shape != (4, 4):
            raise ValueError(f"metric must be 4x4, got {g.shape}")
        if np.max(np.abs(g - g.T)) > 1e-14:
            raise ValueError("metric must be symmetric")
        g = g.copy()
        g.flags.writeable = False
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    def lorentzian_signature(self) -> bool:
        """One negative and three positive eigenvalues (holds inside omega*r < 1)."""
        evals = np.linalg.eigvalsh(self.g)
        return int(np.sum(evals < 0.0)) == 1 and int(np.sum(evals > 0.0)) == 3


@dataclass(frozen=True)
class GravitoVectorPotential:
    """Gravito-magnetic 3-vector potential at a spatial point (units of c=1)."""

    point: Point3
    components: np.ndarray

    def __post_init__(self) -> None:
        vec = np.asarray(self.components, dtype=float)
        if vec.shape != (3,):
            raise ValueError("potential must be a 3-vector")
        vec = vec.copy()
        vec.flags.writeable = False
        object.__setattr__(self, "components", vec)
        object.__setattr__(self, "point", tuple(float(c) for c in self.point))


def rotating_rw_metric(omega: float, a_now: float, point: Sequence[float]) -> MetricAtPoint:
    """Closed-form metric in the frame rotating at omega about z.

    g_tt = -1 + (x^2+y^2) omega^2 a^2, g_tx = -y omega a^2, g_ty = x omega a^2,
    spatial block a^2 * I, with the scale factor frozen at a_now.
    """
    if not a_now > 0.0:
        raise ValueError(f"scale factor must be positive, got {a_now!r}")
    t, x, y, z = (float(c) for c in point)
    a2 = a_now * a_now
    g = np.zeros((4, 4))
    g[0, 0] = -1.0 + (x * x + y * y) * omega * omega * a2
    g[0, 1] = g[1, 0] = -y * omega * a2
    g[0, 2] = g[2, 0] = x * omega * a2
    g[1, 1] = g[2, 2] = g[3, 3] = a2
    return MetricAtPoint(g=g, coords=(t, x, y, z))


def _comoving_coords(point: Sequence[float], omega: float) -> np.ndarray:
    """Map rotating-frame coordinates to comoving ones."""
    t, x, y, z = point
    c, s = np.cos(omega * t), np.sin(omega * t)
    return np.array([t, x * c - y * s, x * s + y * c, z])


def metric_by_transformation(
    omega: float, a_now: float, point: Sequence[float], step: float = 1e-5
) -> MetricAtPoint:
    """Independent route to the rotating-frame metric: pull the diagonal
    comoving metric back through the rotation map, with the Jacobian taken
    by central finite differences."""
    if not a_now > 0.0:
        raise ValueError(f"scale factor must be positive, got {a_now!r}")
    pt = np.asarray(point, dtype=float)
    jac = np.zeros((4, 4))
    for j in range(4):
        fwd = pt.copy()
        bwd = pt.copy()
        fwd[j] += step
        bwd[j] -= step
        jac[:, j] = (_comoving_coords(fwd, omega) - _comoving_coords(bwd, omega)) / (2.0 * step)
    a2 = a_now * a_now
    g_comoving = np.diag([-1.0, a2, a2, a2])
    g = jac.T @ g_comoving @ jac
    return MetricAtPoint(g=(g + g.T) / 2.0, coords=tuple(pt))


def extract_potential(
    metric_fn: Callable[[Point4], MetricAtPoint],
    point: Sequence[float],
    omega: float,
    a_now: float,
) -> GravitoVectorPotential:
    """Read the gravito-magnetic potential off the time-space metric row.

    Convention fixed so that the rotating flat metric yields exactly
    A = (y*omega/2, -x*omega/2, 0):  A_i = -g_{0i} / (2 a^2).  Only the
    a_now = 1 normalization of the flat case is supported; for curved spatial
    sections that normalization freedom is absent and no formula is provided.
    """
    if a_now != 1.0:
        raise ValueError(
            "potential extraction requires a_now = 1 (flat case); "
            "non-critical spatial curvature is out of scope"
        )
    x, y, z = (float(c) for c in point)
    metric = metric_fn((0.0, x, y, z))
    components = -metric.g[0, 1:4] / 2.0
    return GravitoVectorPotential(point=(x, y, z), components=components)


def numerical_curl(
    field_fn: Callable[[Point3], Sequence[float]],
    point: Sequence[float],
    h: float,
) -> np.ndarray:
    """Central-difference curl of a 3-vector field; exact (to rounding) for
    fields linear in the coordinates."""
    if not h > 0.0:
        raise ValueError(f"step must be positive, got {h!r}")
    pt = np.asarray(point, dtype=float)

    def partial(i: int) -> np.ndarray:
        fwd = pt.copy()
        bwd = pt.copy()
        fwd[i] += h
        bwd[i] -= h
        return (np.asarray(field_fn(tuple(fwd)), dtype=float)
                - np.asarray(field_fn(tuple(bwd)), dtype=float)) / (2.0 * h)

    d_dx, d_dy, d_dz = partial(0), partial(1), partial(2)
    return np.array(
        [
            d_dy[2] - d_dz[1],
            d_dz[0] - d_dx[2],
            d_dx[1] - d_dy[0],
        ]
    )


def interaction_energy(spin_z_expectation: float, omega: float) -> float:
    """Coupling energy -<s_z> * omega of a spin to the field B_z = -omega."""
    return -float(spin_z_expectation) * float(omega)
