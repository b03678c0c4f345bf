"""Physical constants, species data and basic trap quantities.

All values are SI. Constants are compiled in with six significant
figures; nothing downstream needs more than four. Everything in this
module is immutable after construction and safe for concurrent reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping


@dataclass(frozen=True)
class Constants:
    """Fundamental constants (SI units)."""

    hbar: float = 1.05457e-34  # reduced Planck constant (J s)
    h: float = 6.62607e-34     # Planck constant (J s)
    mu_B: float = 9.27401e-24  # Bohr magneton (J/T)
    a0: float = 5.29177e-11    # Bohr radius (m)

    def __post_init__(self) -> None:
        for name in ("hbar", "h", "mu_B", "a0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")

    def as_dict(self) -> dict[str, float]:
        return {"hbar": self.hbar, "h": self.h, "mu_B": self.mu_B, "a0": self.a0}

    @classmethod
    def from_dict(cls, data: Mapping[str, float]) -> "Constants":
        return cls(**dict(data))


CODATA = Constants()

HBAR = CODATA.hbar
PLANCK_H = CODATA.h
MU_B = CODATA.mu_B
BOHR_RADIUS = CODATA.a0


@dataclass(frozen=True)
class Species:
    """An atomic species with signed Lande g-factors per hyperfine level.

    Sign convention follows standard hyperfine theory for the alkali
    ground states: gF(85Rb, F=2) = -1/3 and gF(87Rb, F=1) = -1/2.
    These are external inputs, not derived here.
    """

    label: str
    mass: float  # kg
    g_factors: Mapping[int, float]

    def __post_init__(self) -> None:
        if self.mass <= 0:
            raise ValueError("mass must be strictly positive")
        for level, g in self.g_factors.items():
            if not math.isfinite(g) or g == 0:
                raise ValueError(f"g-factor for F={level} must be finite and nonzero")
        object.__setattr__(self, "g_factors", MappingProxyType(dict(self.g_factors)))

    def g_factor(self, f_level: int) -> float:
        try:
            return self.g_factors[f_level]
        except KeyError:
            raise KeyError(f"{self.label} has no stored g-factor for F={f_level}") from None

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "mass": self.mass,
            "g_factors": {str(f): g for f, g in self.g_factors.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Species":
        return cls(
            label=data["label"],
            mass=data["mass"],
            g_factors={int(f): g for f, g in data["g_factors"].items()},
        )


RB85 = Species("rb85", 1.40999e-25, {2: -1.0 / 3.0, 3: +1.0 / 3.0})
RB87 = Species("rb87", 1.44316e-25, {1: -1.0 / 2.0, 2: +1.0 / 2.0})

SPECIES = {s.label: s for s in (RB85, RB87)}


@dataclass(frozen=True)
class TrapGeometry:
    """Harmonic trap frequencies for a cigar-shaped guide.

    The axial frequency is stored as a signed square so an expulsive
    (inverted) axial potential is an ordinary negative number rather
    than an imaginary frequency.
    """

    omega_r: float      # rad/s, radial, > 0
    omega_z_sq: float   # rad^2/s^2, signed; negative means expulsive

    def __post_init__(self) -> None:
        if self.omega_r <= 0:
            raise ValueError("omega_r must be strictly positive")
        if not math.isfinite(self.omega_z_sq):
            raise ValueError("omega_z_sq must be finite")

    def as_dict(self) -> dict[str, float]:
        return {"omega_r": self.omega_r, "omega_z_sq": self.omega_z_sq}

    @classmethod
    def from_dict(cls, data: Mapping[str, float]) -> "TrapGeometry":
        return cls(**dict(data))


def harmonic_length(mass: float, omega: float) -> float:
    """Harmonic oscillator length sqrt(hbar / (m * omega)) in metres.

    Args:
        mass: particle mass in kg, > 0.
        omega: angular trap frequency in rad/s, > 0.
    """
    if mass <= 0:
        raise ValueError("mass must be strictly positive")
    if omega <= 0:
        raise ValueError("omega must be strictly positive")
    return math.sqrt(HBAR / (mass * omega))


def interaction_parameter(n_atoms: float, a: float, mass: float, omega_r: float) -> float:
    """Dimensionless interaction strength N*a/sigma_r, signed.

    Equals N * a * sqrt(m * omega_r / hbar); negative for attractive
    scattering lengths. Values of magnitude >~ 1 mark the crossover out
    of the quasi-1D soliton regime.
    """
    if n_atoms <= 0:
        raise ValueError("atom number must be strictly positive")
    if omega_r <= 0:
        raise ValueError("omega_r must be strictly positive")
    return n_atoms * a * math.sqrt(mass * omega_r / HBAR)
