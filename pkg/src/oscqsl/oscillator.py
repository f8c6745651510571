"""Charged quartic oscillator: configuration, level formula, truncated Hamiltonian.

The Hamiltonian is H = p^2/(2m) + m omega^2 x^2 / 2 + q E x + lambda x^4 in
natural units (hbar = 1).  Two derived frequency scales drive everything
downstream: omega_e = q E / (2 m) for the field and
omega_lambda = sqrt(lambda / (2 m^3)) for the anharmonicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ladder

#: Keys accepted in a flat key-value configuration file.
CONFIG_KEYS = ("m", "omega", "q", "E_field", "lambda")


class ConfigFileError(ValueError):
    """Malformed or incomplete configuration file."""


@dataclass(frozen=True)
class OscillatorConfig:
    """Physical parameters (mass, frequency, charge, field, anharmonicity)."""

    m: float = 1.0
    omega: float = 1.0
    q: float = 0.0
    e_field: float = 0.0
    lam: float = 0.0

    def __post_init__(self) -> None:
        if not self.m > 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.lam < 0.0:
            raise ValueError(f"lambda must be non-negative, got {self.lam}")

    @property
    def omega_e(self) -> float:
        """Field frequency scale q E / (2 m); signed, consumed only squared."""
        return self.q * self.e_field / (2.0 * self.m)

    @property
    def omega_lambda(self) -> float:
        """Anharmonicity frequency scale sqrt(lambda / (2 m^3))."""
        return math.sqrt(self.lam / (2.0 * self.m**3))

    @classmethod
    def from_mapping(cls, values: dict[str, float]) -> "OscillatorConfig":
        return cls(
            m=values["m"],
            omega=values["omega"],
            q=values["q"],
            e_field=values["E_field"],
            lam=values["lambda"],
        )


@dataclass(frozen=True)
class PerturbativeSpectrum:
    """Sequence of energy levels tagged by how they were obtained.

    provenance is "closed_form" for the perturbative formula and
    "numeric_diagonalization" for eigensolver output (sorted ascending,
    basis_size recorded).
    """

    levels: np.ndarray
    provenance: str = "closed_form"
    basis_size: int | None = None

    def __post_init__(self) -> None:
        levels = np.asarray(self.levels, dtype=float)
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)
        if self.provenance == "numeric_diagonalization":
            if np.any(np.diff(levels) < 0.0):
                raise ValueError("numeric levels must be sorted ascending")
        elif self.provenance != "closed_form":
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def __len__(self) -> int:
        return len(self.levels)

    @classmethod
    def closed_form(cls, config: OscillatorConfig, n_levels: int) -> "PerturbativeSpectrum":
        levels = np.array([energy_level(config, n) for n in range(n_levels)])
        return cls(levels=levels, provenance="closed_form")


def energy_level(config: OscillatorConfig, n: int) -> float:
    """Perturbative level: omega (n + 1/2) + first-order quartic shift
    + second-order field (Stark) shift -2 m omega_e^2 / omega^2.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m, w = config.m, config.omega
    harmonic = w * (n + 0.5)
    quartic = (3.0 * config.lam / (4.0 * m * m * w * w)) * (2.0 * n * n + 2.0 * n + 1.0)
    stark = 2.0 * m * config.omega_e**2 / (w * w)
    return harmonic + quartic - stark


def field_constraint_bound(config: OscillatorConfig, n_states: int) -> float:
    """Largest |omega_e| keeping the uniform-state average energy positive."""
    if n_states < 1:
        raise ValueError(f"n_states must be >= 1, got {n_states}")
    m, w = config.m, config.omega
    inner = config.lam * (0.5 + n_states**2) + m * m * n_states * w**3
    return math.sqrt(inner) / (2.0 * m**1.5)


def check_field_constraint(config: OscillatorConfig, n_states: int) -> bool:
    """True iff the field is weak enough for an N-state bound computation."""
    return abs(config.omega_e) < field_constraint_bound(config, n_states)


def build_hamiltonian_matrix(config: OscillatorConfig, basis_size: int) -> np.ndarray:
    """Truncated Hamiltonian in the unperturbed harmonic eigenbasis.

    Diagonal omega (n + 1/2) plus q E x plus lambda x^4, assembled from exact
    banded x-power blocks and symmetrized to (A + A^T)/2.
    """
    if basis_size < 2:
        raise ValueError(f"basis_size must be >= 2, got {basis_size}")
    h = np.diag(config.omega * (np.arange(basis_size) + 0.5))
    q_e = config.q * config.e_field
    if q_e != 0.0:
        h = h + q_e * ladder.x_power_matrix(1, basis_size, config.m, config.omega).entries
    if config.lam != 0.0:
        h = h + config.lam * ladder.x_power_matrix(4, basis_size, config.m, config.omega).entries
    return 0.5 * (h + h.T)


def displaced_level(config: OscillatorConfig, n: int) -> float:
    """Exact level for lambda = 0: omega (n + 1/2) - (q E)^2 / (2 m omega^2)."""
    qe = config.q * config.e_field
    return config.omega * (n + 0.5) - qe * qe / (2.0 * config.m * config.omega**2)


def read_config_file(path: str) -> dict[str, float]:
    """Parse a flat key-value file with exactly the keys m, omega, q, E_field, lambda.

    Lines are "key = value"; '#' starts a comment.  A missing or unknown key
    raises ConfigFileError naming it.
    """
    values: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigFileError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ConfigFileError(f"{path}:{lineno}: unknown config key '{key}'")
            if key in values:
                raise ConfigFileError(f"{path}:{lineno}: duplicate config key '{key}'")
            try:
                values[key] = float(text.strip())
            except ValueError as exc:
                raise ConfigFileError(f"{path}:{lineno}: bad value for '{key}': {text.strip()!r}") from exc
    for key in CONFIG_KEYS:
        if key not in values:
            raise ConfigFileError(f"{path}: missing config key '{key}'")
    return values
