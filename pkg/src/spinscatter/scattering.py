"""Closed-form differential cross-sections for two identical spin-s particles.

Three prescriptions for combining the direct and exchanged amplitudes:

* ``STANDARD``  — (anti)symmetrize the two-particle state, which attaches the
  sign (-1)^(2s) and the spin-overlap factor to the exchanged branch.
* ``DYNAMICAL`` — add the two amplitudes and let each particle accumulate a
  per-projection phase exp(i*m*theta) from the rotating-frame interaction,
  with theta = phi on the direct branch and theta = -pi+phi on the exchanged
  branch.
* ``WORKING``   — same structure but with the total-spin phase exp(i*s*theta)
  in place of every per-projection phase; algebraically identical to
  ``STANDARD``.

The exchanged-branch spin sums are two independent single sums whose product
multiplies f(-pi+phi); the detection defaults to the final states of direct
scattering, with general detector states available via
``ScatterConfig.detectors``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .amplitudes import AmplitudeModel, evaluate, exchange_angle, model_to_config
from .spin import HalfInt, SpinState, aligned_state, haar_state, projections, sz_eigenstate

__all__ = [
    "Prescription",
    "ScatterConfig",
    "CrossSectionCurve",
    "SweepRow",
    "SweepReport",
    "UndefinedObservable",
    "statistics_sign",
    "relative_exchange_factor",
    "gm_phase",
    "overlap_factor",
    "w_standard",
    "w_dynamical",
    "w_working",
    "cross_section",
    "c_ll",
    "default_phi_grid",
    "classify_pair",
    "agreement_sweep",
]

X_AXIS = (1.0, 0.0, 0.0)


class Prescription(enum.Enum):
    STANDARD = "standard"
    DYNAMICAL = "dynamical"
    WORKING = "working"


class UndefinedObservable(ValueError):
    """An observable whose defining ratio degenerated to 0/0."""


def statistics_sign(s: HalfInt) -> int:
    """(-1)^(2s) in exact integer arithmetic: +1 for integer spin, -1 otherwise."""
    return -1 if s.twice_value % 2 else 1


def relative_exchange_factor(s: HalfInt) -> int:
    """exp(i*2s*(-pi)) reduced exactly: the relative phase factor between the
    exchanged and direct total-spin phases, equal to (-1)^(2s)."""
    return statistics_sign(s)


def gm_phase(m: HalfInt, phi):
    """Accumulated rotating-frame phase exp(i*m*phi) for projection m."""
    if np.ndim(phi):
        return np.exp(1j * m.value * np.asarray(phi, dtype=float))
    return complex(np.exp(1j * m.value * phi))


@dataclass(frozen=True)
class ScatterConfig:
    """Identical-particle scattering setup: spin, the two initial spin states,
    the spatial amplitude model, and optional detector spin states
    (defaulting to the direct-scattering final states alpha, beta)."""

    s: HalfInt
    alpha: SpinState
    beta: SpinState
    model: AmplitudeModel
    detectors: tuple[SpinState, SpinState] | None = None

    def __post_init__(self) -> None:
        if self.alpha.s != self.s or self.beta.s != self.s:
            raise ValueError(
                f"identical particles: alpha.s={self.alpha.s}, beta.s={self.beta.s} must equal s={self.s}"
            )
        if self.detectors is not None:
            gamma, delta = self.detectors
            if gamma.s != self.s or delta.s != self.s:
                raise ValueError("detector states must carry the same spin s")

    @property
    def statistics_sign(self) -> int:
        return statistics_sign(self.s)

    def detector_states(self) -> tuple[SpinState, SpinState]:
        return self.detectors if self.detectors is not None else (self.alpha, self.beta)


@dataclass(frozen=True)
class CrossSectionCurve:
    """A sampled cross-section w(phi) under one prescription."""

    prescription: Prescription
    phis: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        phis = np.asarray(self.phis, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if phis.shape != values.shape or phis.ndim != 1:
            raise ValueError("phis and values must be 1-d arrays of equal length")
        if np.any(np.diff(phis) <= 0.0):
            raise ValueError("phis must be strictly increasing")
        if np.any(phis <= -np.pi) or np.any(phis > np.pi):
            raise ValueError("phis must lie in (-pi, pi]")
        if np.any(values < 0.0):
            raise ValueError("cross-section values must be non-negative")
        phis.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "phis", phis)
        object.__setattr__(self, "values", values)


def overlap_factor(alpha: SpinState, beta: SpinState) -> float:
    """(sum_i beta_i* alpha_i)(sum_j alpha_j* beta_j) = |<beta|alpha>|^2."""
    ov = beta.overlap(alpha)
    return float((ov * ov.conjugate()).real)


def _phase_sum(bra: SpinState, ket: SpinState, theta):
    """sum_l bra_l* ket_l exp(i*l*theta) over projections l; theta scalar or array."""
    ms = np.array([m.value for m in projections(ket.s)])
    weights = bra.amps.conj() * ket.amps
    phases = np.exp(1j * np.multiply.outer(ms, theta))
    out = np.tensordot(weights, phases, axes=(0, 0))
    return out if np.ndim(theta) else complex(out)


def w_standard(cfg: ScatterConfig, phi):
    """|f(phi) + (-1)^(2s) f(-pi+phi) * spin-overlap|^2."""
    f_direct = evaluate(cfg.model, phi)
    f_exch = evaluate(cfg.model, exchange_angle(phi))
    sign = cfg.statistics_sign
    if cfg.detectors is None:
        amp = f_direct + sign * f_exch * overlap_factor(cfg.alpha, cfg.beta)
    else:
        gamma, delta = cfg.detectors
        amp = (
            f_direct * gamma.overlap(cfg.alpha) * delta.overlap(cfg.beta)
            + sign * f_exch * delta.overlap(cfg.alpha) * gamma.overlap(cfg.beta)
        )
    return _abs2(amp, phi)


def w_dynamical(cfg: ScatterConfig, phi):
    """Amplitudes added, each branch dressed with per-projection phases.

    Direct branch: f(phi) * sum_j |alpha_j|^2 e^(ij phi) * sum_k |beta_k|^2 e^(ik phi);
    exchanged branch: f(-pi+phi) * sum_l beta_l* alpha_l e^(il theta)
                                 * sum_m alpha_m* beta_m e^(im theta),
    with theta = -pi+phi.  General detectors replace the bra states.
    """
    gamma, delta = cfg.detector_states()
    theta = exchange_angle(phi)
    direct = evaluate(cfg.model, phi) * _phase_sum(gamma, cfg.alpha, phi) * _phase_sum(
        delta, cfg.beta, phi
    )
    exch = evaluate(cfg.model, theta) * _phase_sum(delta, cfg.alpha, theta) * _phase_sum(
        gamma, cfg.beta, theta
    )
    return _abs2(direct + exch, phi)


def w_working(cfg: ScatterConfig, phi):
    """The total-spin-phase variant: every per-projection phase becomes
    exp(i*s*theta).  Reduces algebraically to ``w_standard``."""
    gamma, delta = cfg.detector_states()
    theta = exchange_angle(phi)
    s_val = cfg.s.value
    direct = (
        evaluate(cfg.model, phi)
        * (np.sum(gamma.amps.conj() * cfg.alpha.amps) * np.exp(1j * s_val * np.asarray(phi)))
        * (np.sum(delta.amps.conj() * cfg.beta.amps) * np.exp(1j * s_val * np.asarray(phi)))
    )
    exch = (
        evaluate(cfg.model, theta)
        * (np.sum(delta.amps.conj() * cfg.alpha.amps) * np.exp(1j * s_val * np.asarray(theta)))
        * (np.sum(gamma.amps.conj() * cfg.beta.amps) * np.exp(1j * s_val * np.asarray(theta)))
    )
    return _abs2(direct + exch, phi)


_W_FUNCS = {
    Prescription.STANDARD: w_standard,
    Prescription.DYNAMICAL: w_dynamical,
    Prescription.WORKING: w_working,
}


def cross_section(cfg: ScatterConfig, phi, prescription: Prescription):
    return _W_FUNCS[prescription](cfg, phi)


def _abs2(amp, phi):
    val = np.abs(amp) ** 2
    return val if np.ndim(phi) else float(val)


def c_ll(model: AmplitudeModel, s: HalfInt, prescription: Prescription, phi) -> float:
    """Longitudinal spin-correlation asymmetry (w(++) - w(+-)) / (w(++) + w(+-)).

    ++ means both spins along +x (the beam axis), +- means one along +x and
    one along -x.  Raises ``UndefinedObservable`` when both rates vanish.
    """
    plus = aligned_state(s, X_AXIS)
    minus = aligned_state(s, (-1.0, 0.0, 0.0))
    w_pp = cross_section(ScatterConfig(s, plus, plus, model), phi, prescription)
    w_pm = cross_section(ScatterConfig(s, plus, minus, model), phi, prescription)
    denom = w_pp + w_pm
    if np.any(np.asarray(denom) == 0.0):
        raise UndefinedObservable("C_LL undefined: both parallel and antiparallel rates vanish")
    return (w_pp - w_pm) / denom


def default_phi_grid(n_phis: int = 360) -> np.ndarray:
    """n_phis uniform angles on (-pi, pi], endpoint included, -pi excluded."""
    if n_phis < 1:
        raise ValueError("n_phis must be >= 1")
    return -np.pi + 2.0 * np.pi * np.arange(1, n_phis + 1) / n_phis


@dataclass(frozen=True)
class SweepRow:
    pair_id: str
    alpha_desc: str
    beta_desc: str
    max_abs_diff: float
    classification: str


@dataclass(frozen=True)
class SweepReport:
    s: HalfInt
    model: AmplitudeModel
    n_phis: int
    seed: int
    tol: float
    rows: tuple[SweepRow, ...] = field(default_factory=tuple)

    def agree_rows(self) -> list[SweepRow]:
        return [r for r in self.rows if r.classification == "AGREE"]

    def to_csv(self) -> str:
        lines = ["pair_id,alpha_desc,beta_desc,max_abs_diff,classification"]
        for r in self.rows:
            lines.append(
                f"{r.pair_id},{r.alpha_desc},{r.beta_desc},{float(r.max_abs_diff)!r},{r.classification}"
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "spin": str(self.s),
            "model": model_to_config(self.model),
            "n_phis": int(self.n_phis),
            "seed": int(self.seed),
            "tol": float(self.tol),
            "rows": [
                {
                    "pair_id": r.pair_id,
                    "alpha_desc": r.alpha_desc,
                    "beta_desc": r.beta_desc,
                    "max_abs_diff": float(r.max_abs_diff),
                    "classification": r.classification,
                }
                for r in self.rows
            ],
        }


def classify_pair(
    s: HalfInt,
    model: AmplitudeModel,
    alpha: SpinState,
    beta: SpinState,
    phis: np.ndarray,
    tol: float,
) -> tuple[float, str]:
    """Max |w_standard - w_dynamical| over the grid, and AGREE/DISAGREE at tol."""
    cfg = ScatterConfig(s, alpha, beta, model)
    diff = np.abs(w_standard(cfg, phis) - w_dynamical(cfg, phis))
    max_diff = float(np.max(diff))
    return max_diff, ("AGREE" if max_diff < tol else "DISAGREE")


def agreement_sweep(
    s: HalfInt,
    model: AmplitudeModel,
    n_states: int,
    n_phis: int,
    seed: int,
    tol: float = 1e-9,
) -> SweepReport:
    """Compare the standard and dynamical cross-sections pair by pair.

    Covers every s_z-eigenstate product pair (2s+1)^2 of them, then
    ``n_states`` Haar-random pairs drawn from one seeded generator.  Rows
    appear in deterministic order regardless of evaluation strategy.
    """
    if n_states < 1 or n_phis < 1:
        raise ValueError("n_states and n_phis must be >= 1")
    phis = default_phi_grid(n_phis)
    rows: list[SweepRow] = []
    for m_a in projections(s):
        for m_b in projections(s):
            alpha = sz_eigenstate(s, m_a)
            beta = sz_eigenstate(s, m_b)
            max_diff, label = classify_pair(s, model, alpha, beta, phis, tol)
            rows.append(
                SweepRow(
                    pair_id=f"eig[{m_a},{m_b}]",
                    alpha_desc=f"sz={m_a}",
                    beta_desc=f"sz={m_b}",
                    max_abs_diff=max_diff,
                    classification=label,
                )
            )
    rng = np.random.default_rng(seed)
    for k in range(n_states):
        alpha = haar_state(s, rng)
        beta = haar_state(s, rng)
        max_diff, label = classify_pair(s, model, alpha, beta, phis, tol)
        rows.append(
            SweepRow(
                pair_id=f"rnd[{k}]",
                alpha_desc=f"haar({seed},{k},a)",
                beta_desc=f"haar({seed},{k},b)",
                max_abs_diff=max_diff,
                classification=label,
            )
        )
    return SweepReport(s=s, model=model, n_phis=n_phis, seed=seed, tol=tol, rows=tuple(rows))
