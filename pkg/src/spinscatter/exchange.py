"""Physical exchange of two identical spins built from pi rotations.

A label swap of the pair |m_a, m_b> can be realized by rotating both spins
by pi, provided the axis is chosen per eigenket pair: the z axis when the
projections are equal, the y axis when they are opposite.  Every such sector
then picks up one and the same phase (-1)^(2s), which is what forces
symmetric joint states for integer spin and antisymmetric ones for
half-odd-integer spin once exchange-invariance is demanded.  A single fixed
rotation axis for all sectors does not do this, and the module exposes that
contrast.

Mixed pairs with m_b not in {m_a, -m_a} (possible for s >= 1) admit no
single-axis pi rotation that swaps them; they are reported as unassigned
rather than forced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .spin import HalfInt, aligned_state, dimension, projections, rotation_matrix

__all__ = [
    "ExchangePlan",
    "PairCheck",
    "PostulateReport",
    "default_plan",
    "apply_exchange",
    "exchange_postulate_check",
    "swap_pair_vector",
    "fixed_axis_exchange_overlap",
]

Z_AXIS = np.array([0.0, 0.0, 1.0])
Y_AXIS = np.array([0.0, 1.0, 0.0])

_PHASE_TOL = 1e-10


@dataclass(frozen=True)
class ExchangePlan:
    """Per-eigenket-pair axis assignments for the pi rotation (angle fixed)."""

    s: HalfInt
    axes: dict[tuple[HalfInt, HalfInt], np.ndarray]
    unassigned: tuple[tuple[HalfInt, HalfInt], ...] = field(default_factory=tuple)

    angle = np.pi

    def axis_for(self, m_a: HalfInt, m_b: HalfInt) -> np.ndarray | None:
        return self.axes.get((m_a, m_b))


def _pair_index(s: HalfInt, m_a: HalfInt, m_b: HalfInt) -> int:
    d = dimension(s)
    return ((m_a.twice_value + s.twice_value) // 2) * d + (m_b.twice_value + s.twice_value) // 2


def swap_pair_vector(s: HalfInt, joint: np.ndarray) -> np.ndarray:
    """Label-swapped vector: component (a,b) moves to (b,a)."""
    d = dimension(s)
    return np.asarray(joint, dtype=complex).reshape(d, d).T.reshape(d * d)


def _sector_rotation(s: HalfInt, axis: np.ndarray) -> np.ndarray:
    rot = rotation_matrix(s, axis, np.pi)
    return np.kron(rot, rot)


def default_plan(s: HalfInt) -> ExchangePlan:
    """z axis for equal projections, y axis for opposite ones; each assignment
    verified constructively (the rotated ket must be the swapped ket up to a
    phase), everything else left unassigned."""
    axes: dict[tuple[HalfInt, HalfInt], np.ndarray] = {}
    unassigned: list[tuple[HalfInt, HalfInt]] = []
    rot_cache = {
        "z": _sector_rotation(s, Z_AXIS),
        "y": _sector_rotation(s, Y_AXIS),
    }
    d = dimension(s)
    for m_a in projections(s):
        for m_b in projections(s):
            if m_a == m_b:
                key, axis = "z", Z_AXIS
            elif m_a == -m_b:
                key, axis = "y", Y_AXIS
            else:
                unassigned.append((m_a, m_b))
                continue
            ket = np.zeros(d * d, dtype=complex)
            ket[_pair_index(s, m_a, m_b)] = 1.0
            rotated = rot_cache[key] @ ket
            swapped = swap_pair_vector(s, ket)
            if abs(abs(np.vdot(swapped, rotated)) - 1.0) > _PHASE_TOL:
                unassigned.append((m_a, m_b))
                continue
            axes[(m_a, m_b)] = axis
    return ExchangePlan(s=s, axes=axes, unassigned=tuple(unassigned))


def apply_exchange(plan: ExchangePlan, joint: np.ndarray) -> tuple[np.ndarray, complex]:
    """Rotate each eigenket-pair component by pi about its planned axis.

    Returns the exchanged joint state and the global phase extracted against
    the label-swapped input (reference: the largest-magnitude output
    component).  Input must be normalized; components in unassigned sectors
    are rejected.
    """
    s = plan.s
    d = dimension(s)
    vec = np.asarray(joint, dtype=complex)
    if vec.shape != (d * d,):
        raise ValueError(f"joint state must have dimension {d * d}, got {vec.shape}")
    if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
        raise ValueError("joint state must be normalized")
    for pair in plan.unassigned:
        if abs(vec[_pair_index(s, *pair)]) > 1e-12:
            raise ValueError(f"state has weight in unassigned sector {pair}")
    rotations: dict[bytes, np.ndarray] = {}
    out = np.zeros_like(vec)
    for (m_a, m_b), axis in plan.axes.items():
        idx = _pair_index(s, m_a, m_b)
        if vec[idx] == 0.0:
            continue
        key = axis.tobytes()
        if key not in rotations:
            rotations[key] = _sector_rotation(s, axis)
        out += vec[idx] * rotations[key][:, idx]
    swapped = swap_pair_vector(s, vec)
    ref = int(np.argmax(np.abs(out)))
    if abs(swapped[ref]) < 1e-12:
        raise ValueError("output is not a global phase times the label-swapped input")
    phase = complex(out[ref] / swapped[ref])
    return out, phase


@dataclass(frozen=True)
class PairCheck:
    m_a: HalfInt
    m_b: HalfInt
    axis: tuple[float, float, float] | None
    phase: complex | None
    ok: bool


@dataclass(frozen=True)
class PostulateReport:
    s: HalfInt
    expected_sign: int
    pair_checks: tuple[PairCheck, ...]
    superposition_ok: bool
    forced_symmetry: str
    unassigned: tuple[tuple[HalfInt, HalfInt], ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "spin": str(self.s),
            "expected_sign": self.expected_sign,
            "forced_symmetry": self.forced_symmetry,
            "superposition_ok": self.superposition_ok,
            "passed": self.passed,
            "unassigned_pairs": [[str(a), str(b)] for a, b in self.unassigned],
            "pairs": [
                {
                    "m_a": str(c.m_a),
                    "m_b": str(c.m_b),
                    "axis": list(c.axis) if c.axis is not None else None,
                    "phase": {"re": c.phase.real, "im": c.phase.imag} if c.phase is not None else None,
                    "ok": c.ok,
                }
                for c in self.pair_checks
            ],
        }


def exchange_postulate_check(plan: ExchangePlan, s: HalfInt, seed: int = 0) -> PostulateReport:
    """Verify that exchange-invariance under the planned rotations forces the
    (anti)symmetrization matching (-1)^(2s), sector by sector."""
    expected = -1 if s.twice_value % 2 else 1
    d = dimension(s)
    checks: list[PairCheck] = []
    all_ok = True
    for m_a in projections(s):
        for m_b in projections(s):
            axis = plan.axis_for(m_a, m_b)
            if axis is None:
                checks.append(PairCheck(m_a, m_b, None, None, ok=False))
                continue
            ket = np.zeros(d * d, dtype=complex)
            ket[_pair_index(s, m_a, m_b)] = 1.0
            out, phase = apply_exchange(plan, ket)
            swapped = swap_pair_vector(s, ket)
            ok = (
                abs(phase - expected) < _PHASE_TOL
                and np.max(np.abs(out - phase * swapped)) < _PHASE_TOL
            )
            all_ok = all_ok and ok
            checks.append(PairCheck(m_a, m_b, tuple(float(c) for c in axis), phase, ok))
    # random superpositions inside each same-axis sector must behave the same
    rng = np.random.default_rng(seed)
    superposition_ok = True
    by_axis: dict[bytes, list[int]] = {}
    for (m_a, m_b), axis in plan.axes.items():
        by_axis.setdefault(axis.tobytes(), []).append(_pair_index(s, m_a, m_b))
    for indices in by_axis.values():
        for _ in range(4):
            vec = np.zeros(d * d, dtype=complex)
            coeffs = rng.standard_normal(len(indices)) + 1j * rng.standard_normal(len(indices))
            vec[indices] = coeffs / np.linalg.norm(coeffs)
            out, phase = apply_exchange(plan, vec)
            swapped = swap_pair_vector(s, vec)
            if (
                abs(phase - expected) > _PHASE_TOL
                or np.max(np.abs(out - phase * swapped)) > _PHASE_TOL
            ):
                superposition_ok = False
    passed = all_ok and superposition_ok and not plan.unassigned
    return PostulateReport(
        s=s,
        expected_sign=expected,
        pair_checks=tuple(checks),
        superposition_ok=superposition_ok,
        forced_symmetry="antisymmetric" if expected < 0 else "symmetric",
        unassigned=plan.unassigned,
        passed=passed,
    )


def fixed_axis_exchange_overlap(s: HalfInt, axis=(0.0, 0.0, 1.0)) -> float:
    """|<label-swapped state | fixed-axis pi rotation on both spins | state>|
    for the joint state with both spins along +x.

    A value below 1 shows a single fixed axis cannot implement exchange for
    in-plane polarized pairs, unlike the per-sector plan.
    """
    plus = aligned_state(s, (1.0, 0.0, 0.0))
    joint = np.kron(plus.amps, plus.amps)
    rot2 = _sector_rotation(s, np.asarray(axis, dtype=float))
    rotated = rot2 @ joint
    swapped = swap_pair_vector(s, joint)
    return float(abs(np.vdot(swapped, rotated)))
