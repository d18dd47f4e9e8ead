"""Atomic species data: masses, lifetime coefficients, excitation schemes.

Built-in Cs and Rb entries ship with the library; additional or modified
species load from a JSON config file, see :func:`load_species_config`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .constants import ATOMIC_MASS_UNIT
from .errors import DomainError
from .units import TWO_PI, Frequency


@dataclass(frozen=True)
class ExcitationScheme:
    """A Rydberg excitation method, as a list of (wavelength m, propagation sign)."""

    label: str
    wavelengths: tuple[tuple[float, int], ...]

    def __post_init__(self) -> None:
        if not self.wavelengths:
            raise DomainError("excitation scheme needs at least one wavelength")
        norm = []
        for lam, sign in self.wavelengths:
            if not (math.isfinite(lam) and lam > 0):
                raise DomainError(f"wavelength must be positive, got {lam!r}")
            if sign not in (1, -1):
                raise DomainError(f"propagation sign must be +1 or -1, got {sign!r}")
            norm.append((float(lam), int(sign)))
        object.__setattr__(self, "wavelengths", tuple(norm))

    @property
    def effective_k(self) -> float:
        """Net excitation wavevector magnitude |sum_i sign_i 2pi/lambda_i| in 1/m."""
        return abs(sum(sign * TWO_PI / lam for lam, sign in self.wavelengths))


@dataclass(frozen=True)
class Species:
    """Per-species constants used by the lifetime, Doppler, and Stark models."""

    name: str
    mass: float          # kg
    tau0: float          # s, low-l Rydberg lifetime coefficient (tau ~ tau0 n^3)
    qubit_freq: Frequency
    schemes: tuple[ExcitationScheme, ...] = ()
    polarizabilities: tuple[tuple[str, float, float], ...] = ()  # (state, alpha0, alpha2) in GHz/(V/cm)^2

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise DomainError(f"mass must be positive, got {self.mass!r}")
        if not (math.isfinite(self.tau0) and self.tau0 > 0):
            raise DomainError(f"tau0 must be positive, got {self.tau0!r}")

    def scheme(self, label: str) -> ExcitationScheme:
        for s in self.schemes:
            if s.label == label:
                return s
        known = ", ".join(s.label for s in self.schemes) or "none"
        raise DomainError(f"unknown scheme {label!r} for {self.name} (available: {known})")


CESIUM = Species(
    name="Cs",
    mass=132.905451961 * ATOMIC_MASS_UNIT,
    tau0=3.3e-9,
    qubit_freq=Frequency.from_hz(9.192631770e9),
    schemes=(
        ExcitationScheme("one-photon", ((319e-9, 1),)),
        # nominal counterpropagating two-photon route via the first resonance line
        ExcitationScheme("two-photon-counterprop", ((894.6e-9, 1), (494.4e-9, -1))),
    ),
    polarizabilities=(("100p3/2", 205.0, -17.8),),
)

RUBIDIUM = Species(
    name="Rb",
    mass=86.909180531 * ATOMIC_MASS_UNIT,
    tau0=2.80e-9,
    qubit_freq=Frequency.from_hz(6.834682611e9),
    schemes=(
        ExcitationScheme("two-photon-counterprop", ((780e-9, 1), (480e-9, -1))),
    ),
)

BUILTIN_SPECIES = {"cs": CESIUM, "rb": RUBIDIUM}


def species_from_dict(data: dict) -> Species:
    """Build a Species from config keys.

    Required keys: ``name``, ``mass_kg``, ``tau0_ns``, ``qubit_freq_ghz``.
    Optional: ``schemes`` (list of ``{label, wavelengths_nm, signs}``) and
    ``polarizabilities`` (list of ``[state, alpha0, alpha2]`` in GHz/(V/cm)^2).
    """
    try:
        schemes = tuple(
            ExcitationScheme(
                s["label"],
                tuple(zip((lam * 1e-9 for lam in s["wavelengths_nm"]), s["signs"])),
            )
            for s in data.get("schemes", ())
        )
        pols = tuple((p[0], float(p[1]), float(p[2])) for p in data.get("polarizabilities", ()))
        return Species(
            name=data["name"],
            mass=float(data["mass_kg"]),
            tau0=float(data["tau0_ns"]) * 1e-9,
            qubit_freq=Frequency.from_hz(float(data["qubit_freq_ghz"]) * 1e9),
            schemes=schemes,
            polarizabilities=pols,
        )
    except KeyError as exc:
        raise DomainError(f"species config missing key {exc}") from exc


def load_species_config(path: str) -> dict[str, Species]:
    """Load a JSON species config: either a list or ``{"species": [...]}``."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    entries = raw["species"] if isinstance(raw, dict) else raw
    loaded = {}
    for entry in entries:
        sp = species_from_dict(entry)
        loaded[sp.name.lower()] = sp
    return loaded


def get_species(name: str, config: dict[str, Species] | None = None) -> Species:
    """Look a species up by name, config entries taking precedence over built-ins."""
    key = name.lower()
    if config and key in config:
        return config[key]
    if key in BUILTIN_SPECIES:
        return BUILTIN_SPECIES[key]
    raise DomainError(f"unknown species {name!r}")
