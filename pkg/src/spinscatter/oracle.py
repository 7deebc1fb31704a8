"""Brute-force cross-sections in an explicit two-particle Hilbert space.

Ground-truth route for the closed forms in :mod:`spinscatter.scattering`,
sharing none of their algebra: states are dense vectors over
(mode x spin) x (mode x spin), operators are dense matrices, and every
cross-section is a literal bra-operator-ket contraction.

The mode space holds four orthonormal wave-packet surrogates: the two
incoming directions and the two detector ports.  The scattering operator is
a partial isometry defined on the incoming two-particle mode subspace only
(extended exchange-symmetrically so it commutes with the symmetrization
projector); that subspace is all the transition amplitudes ever probe.
"""

from __future__ import annotations

import numpy as np

from .amplitudes import AmplitudeModel, evaluate, exchange_angle
from .scattering import Prescription, ScatterConfig
from .spin import HalfInt, SpinState, dimension, projections

__all__ = [
    "MODE_LABELS",
    "IN_L",
    "IN_R",
    "OUT_T",
    "OUT_B",
    "MAX_ORACLE_TWICE_SPIN",
    "single_particle_dim",
    "two_particle_state",
    "exchange_operator",
    "build_lambda",
    "spin_phase_operator",
    "build_s_operator",
    "oracle_w",
]

MODE_LABELS = ("in_L", "in_R", "out_T", "out_B")
IN_L, IN_R, OUT_T, OUT_B = range(4)

# tensor dimension (4*(2s+1))^2 stays <= 256
MAX_ORACLE_TWICE_SPIN = 3


def single_particle_dim(s: HalfInt) -> int:
    return 4 * dimension(s)


def _mode_ket(mode: int) -> np.ndarray:
    vec = np.zeros(4)
    vec[mode] = 1.0
    return vec


def _particle_vector(mode: int, spin: SpinState) -> np.ndarray:
    return np.kron(_mode_ket(mode), spin.amps)


def two_particle_state(mode1: int, spin1: SpinState, mode2: int, spin2: SpinState) -> np.ndarray:
    """Product vector |mode1, spin1> x |mode2, spin2| over the pair space."""
    return np.kron(_particle_vector(mode1, spin1), _particle_vector(mode2, spin2))


def exchange_operator(s: HalfInt) -> np.ndarray:
    """Permutation P with P(u x v) = v x u on the full pair space."""
    d = single_particle_dim(s)
    p = np.zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            p[a * d + b, b * d + a] = 1.0
    return p


def build_lambda(s: HalfInt) -> np.ndarray:
    """Symmetrization projector (I + (-1)^(2s) P) / 2."""
    sign = -1.0 if s.twice_value % 2 else 1.0
    p = exchange_operator(s)
    return (np.eye(p.shape[0]) + sign * p) / 2.0


def spin_phase_operator(s: HalfInt, theta: float) -> np.ndarray:
    """diag(exp(i*m*theta)) over the ascending-m spin basis."""
    ms = np.array([m.value for m in projections(s)])
    return np.diag(np.exp(1j * ms * theta))


def _mode_hop(out_mode: int, in_mode: int) -> np.ndarray:
    hop = np.zeros((4, 4))
    hop[out_mode, in_mode] = 1.0
    return hop


def _branch_operator(out1: int, in1: int, out2: int, in2: int, spin_op: np.ndarray) -> np.ndarray:
    """Two-particle hop with the same spin operator applied to each particle,
    symmetrized over which particle slot plays which role."""
    p1 = np.kron(_mode_hop(out1, in1), spin_op)
    p2 = np.kron(_mode_hop(out2, in2), spin_op)
    return np.kron(p1, p2) + np.kron(p2, p1)


def build_s_operator(model: AmplitudeModel, phi: float, dynamical: bool, s: HalfInt) -> np.ndarray:
    """Scattering operator on the pair space at in-plane angle phi.

    Maps the incoming pair to f(phi) x (top, bottom) plus f(-pi+phi) x
    (bottom, top) on modes.  When ``dynamical``, each branch also applies the
    per-projection phase exp(i*sz*theta) to both spins, with theta the
    branch's own rotation angle; otherwise the spin part is untouched.
    """
    theta = exchange_angle(phi)
    dim_spin = dimension(s)
    if dynamical:
        g_direct = spin_phase_operator(s, phi)
        g_exch = spin_phase_operator(s, theta)
    else:
        g_direct = np.eye(dim_spin, dtype=complex)
        g_exch = np.eye(dim_spin, dtype=complex)
    direct = evaluate(model, phi) * _branch_operator(OUT_T, IN_L, OUT_B, IN_R, g_direct)
    exch = evaluate(model, theta) * _branch_operator(OUT_B, IN_L, OUT_T, IN_R, g_exch)
    return direct + exch


def _build_s_total_spin_phase(model: AmplitudeModel, phi: float, s: HalfInt) -> np.ndarray:
    """Variant with every spin-phase operator replaced by the scalar exp(i*s*theta)."""
    theta = exchange_angle(phi)
    eye = np.eye(dimension(s), dtype=complex)
    s_val = s.value
    direct = (
        evaluate(model, phi)
        * np.exp(2j * s_val * phi)
        * _branch_operator(OUT_T, IN_L, OUT_B, IN_R, eye)
    )
    exch = (
        evaluate(model, theta)
        * np.exp(2j * s_val * theta)
        * _branch_operator(OUT_B, IN_L, OUT_T, IN_R, eye)
    )
    return direct + exch


def oracle_w(cfg: ScatterConfig, phi: float, prescription: Prescription) -> float:
    """Differential cross-section by explicit matrix-vector algebra."""
    s = cfg.s
    if s.twice_value > MAX_ORACLE_TWICE_SPIN:
        raise ValueError(
            f"oracle capped at s=3/2 (tensor dimension), got s={s}"
        )
    gamma, delta = cfg.detector_states()
    psi_in = two_particle_state(IN_L, cfg.alpha, IN_R, cfg.beta)
    out_direct = two_particle_state(OUT_T, gamma, OUT_B, delta)
    out_exch = two_particle_state(OUT_B, delta, OUT_T, gamma)
    if prescription is Prescription.STANDARD:
        lam = build_lambda(s)
        s_op = build_s_operator(cfg.model, phi, dynamical=False, s=s)
        amp = 2.0 * np.vdot(out_direct, lam @ (s_op @ psi_in))
    else:
        if prescription is Prescription.DYNAMICAL:
            s_op = build_s_operator(cfg.model, phi, dynamical=True, s=s)
        else:
            s_op = _build_s_total_spin_phase(cfg.model, phi, s)
        scattered = s_op @ psi_in
        amp = np.vdot(out_direct, scattered) + np.vdot(out_exch, scattered)
    return float(abs(amp) ** 2)
