"""Spin-dependent level shifts for an orbiting particle: the hypothetical
gravito-magnetic shift -s_z*omega against the Thomas-precession correction
-s_z*(1-gamma)*omega.  Only these two formulas are computed; the
nucleus-field part of spin-orbit coupling has no gravitational role here."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spin import HalfInt

__all__ = [
    "OrbitParams",
    "RatioReport",
    "lorentz_gamma",
    "gm_shift",
    "thomas_shift",
    "ratio_report",
]


@dataclass(frozen=True)
class OrbitParams:
    """Orbit speed v (fraction of c), angular velocity, and the spin state."""

    v: float
    omega: float
    s: HalfInt
    sz: HalfInt

    def __post_init__(self) -> None:
        if not 0.0 <= self.v < 1.0:
            raise ValueError(f"speed must satisfy 0 <= v < 1, got {self.v!r}")
        if abs(self.sz.twice_value) > self.s.twice_value or (
            self.s.twice_value - self.sz.twice_value
        ) % 2 != 0:
            raise ValueError(f"sz={self.sz} is not a projection of s={self.s}")


def lorentz_gamma(v: float) -> float:
    if not v < 1.0:
        raise ValueError(f"speed must be below 1, got {v!r}")
    return 1.0 / math.sqrt(1.0 - v * v)


def gm_shift(p: OrbitParams) -> float:
    """Per-projection gravito-magnetic energy shift -s_z * omega (v-independent)."""
    return -p.sz.value * p.omega


def thomas_shift(p: OrbitParams) -> float:
    """Thomas correction -s_z * (1 - gamma) * omega; vanishes as v -> 0."""
    return -p.sz.value * (1.0 - lorentz_gamma(p.v)) * p.omega


@dataclass(frozen=True)
class RatioReport:
    params: OrbitParams
    gm: float
    thomas: float
    ratio: float
    small_v_estimate: float

    note = (
        "shifts would further depend on the orbital quantum number; no such "
        "formula is computed here"
    )

    def to_json_dict(self) -> dict:
        return {
            "v": self.params.v,
            "omega": self.params.omega,
            "spin": str(self.params.s),
            "sz": str(self.params.sz),
            "gm_shift": self.gm,
            "thomas_shift": self.thomas,
            "ratio_thomas_to_gm": self.ratio,
            "small_v_estimate": self.small_v_estimate,
            "note": self.note,
        }


def ratio_report(p: OrbitParams) -> RatioReport:
    """Quantify how far the Thomas term falls short of the gravito-magnetic
    one: |thomas/gm| = |1 - gamma|, about v^2/2 at small v."""
    if not p.v > 0.0:
        raise ValueError("ratio report needs v > 0")
    return RatioReport(
        params=p,
        gm=gm_shift(p),
        thomas=thomas_shift(p),
        ratio=abs(1.0 - lorentz_gamma(p.v)),
        small_v_estimate=p.v * p.v / 2.0,
    )
