"""Physical constants in named profiles, plus derived Planck-scale values.

Two profiles ship compiled in.  "paper" is a legacy set of rounded
values, including c = 2.98e8 m/s; that one looks like a typo for
2.998e8, but the set is preserved exactly because its headline results
are only reproducible with it.  "codata" carries modern reference
values.  Electron mass, proton mass and the Gaussian squared charge e²
(an energy·length, so that ħc/e² is the dimensionless ~137) are modern
in both.

Planck time and length are always derived from ħ, G and c; storing them
would let them drift out of sync with the profile.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .dimq import (
    Dimension,
    DIMENSIONLESS,
    ENERGY,
    LENGTH,
    MASS,
    TIME,
    Quantity,
    dimension_from_mapping,
    make,
)

__all__ = [
    "CODATA",
    "PAPER",
    "ConstantsProfile",
    "builtin_profile",
    "fine_structure_inverse",
    "get",
    "load_profile",
    "mass_ratio",
    "planck_length",
    "planck_time",
    "profile_from_dict",
]

_HALF = Fraction(1, 2)

# dimension each registered constant must carry
REQUIRED_DIMS: dict[str, Dimension] = {
    "hbar": ENERGY * TIME,
    "c": LENGTH / TIME,
    "G": LENGTH**3 / (MASS * TIME**2),
    "k_B": ENERGY / Dimension(temperature=1),
    "m_e": MASS,
    "m_p": MASS,
    "e2": ENERGY * LENGTH,
    "year_seconds": TIME,
    "GeV_joules": ENERGY,
}


@dataclass(frozen=True, eq=False)
class ConstantsProfile:
    name: str
    constants: Mapping[str, Quantity]

    def __post_init__(self) -> None:
        missing = sorted(set(REQUIRED_DIMS) - set(self.constants))
        if missing:
            raise ValueError(f"profile {self.name!r} missing constants: {missing}")
        for cid, q in self.constants.items():
            if q.sign != 1:
                raise ValueError(f"constant {cid!r} must be strictly positive")
            expected = REQUIRED_DIMS.get(cid)
            if expected is not None and q.dimension != expected:
                raise ValueError(
                    f"constant {cid!r} has dimension {q.dimension.compact()}, "
                    f"expected {expected.compact()}"
                )


def _profile(name: str, values: Mapping[str, float]) -> ConstantsProfile:
    return ConstantsProfile(
        name, {cid: make(v, REQUIRED_DIMS[cid]) for cid, v in values.items()}
    )


PAPER = _profile(
    "paper",
    {
        "hbar": 1.0545e-34,
        "c": 2.98e8,
        "G": 6.673e-11,
        "k_B": 1.38e-23,
        "m_e": 9.1093837015e-31,
        "m_p": 1.67262192369e-27,
        "e2": 2.3070775523e-28,
        "year_seconds": 3.156e7,
        "GeV_joules": 1.602e-10,
    },
)

CODATA = _profile(
    "codata",
    {
        "hbar": 1.054571817e-34,
        "c": 2.99792458e8,
        "G": 6.674e-11,
        "k_B": 1.380649e-23,
        "m_e": 9.1093837015e-31,
        "m_p": 1.67262192369e-27,
        "e2": 2.3070775523e-28,
        "year_seconds": 3.156e7,
        "GeV_joules": 1.602176634e-10,
    },
)

_BUILTIN = {"paper": PAPER, "codata": CODATA}


def builtin_profile(name: str) -> ConstantsProfile:
    try:
        return _BUILTIN[name]
    except KeyError:
        raise KeyError(
            f"unknown profile {name!r}; built-ins: {sorted(_BUILTIN)}"
        ) from None


def get(profile: ConstantsProfile, cid: str) -> Quantity:
    try:
        return profile.constants[cid]
    except KeyError:
        raise KeyError(
            f"unknown constant {cid!r} in profile {profile.name!r}; "
            f"registered: {sorted(profile.constants)}"
        ) from None


def planck_time(profile: ConstantsProfile) -> Quantity:
    """sqrt(ħG/c⁵), derived fresh from the profile on every call."""
    hbar, g, c = get(profile, "hbar"), get(profile, "G"), get(profile, "c")
    return (hbar * g / c**5) ** _HALF


def planck_length(profile: ConstantsProfile) -> Quantity:
    """sqrt(ħG/c³)."""
    hbar, g, c = get(profile, "hbar"), get(profile, "G"), get(profile, "c")
    return (hbar * g / c**3) ** _HALF


def fine_structure_inverse(profile: ConstantsProfile) -> Quantity:
    """ħc/e², about 137 for modern values."""
    q = get(profile, "hbar") * get(profile, "c") / get(profile, "e2")
    assert q.dimension == DIMENSIONLESS
    return q


def mass_ratio(profile: ConstantsProfile) -> Quantity:
    """m_p/m_e, about 1836."""
    return get(profile, "m_p") / get(profile, "m_e")


def profile_from_dict(data: Mapping[str, object]) -> ConstantsProfile:
    """Build a profile from fixture data.

    When the name matches a built-in, the file's entries overlay that
    built-in and win on conflicts; a fresh name must supply every
    required constant itself.  Entries beyond the required set are kept
    as-is (no dimension schema to check them against).
    """
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("profile fixture needs a non-empty string 'name'")
    raw = data.get("constants")
    if not isinstance(raw, Mapping):
        raise ValueError("profile fixture needs a 'constants' object")
    unknown = sorted(set(data) - {"name", "constants"})
    if unknown:
        raise ValueError(f"unknown profile fixture keys: {unknown}")

    merged: dict[str, Quantity] = {}
    base = _BUILTIN.get(name)
    if base is not None:
        merged.update(base.constants)
    for cid, entry in raw.items():
        if not isinstance(entry, Mapping):
            raise ValueError(f"constant {cid!r} must be an object")
        extra = sorted(set(entry) - {"value", "dims"})
        if extra:
            raise ValueError(f"constant {cid!r} has unknown keys: {extra}")
        value = entry.get("value")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"constant {cid!r} needs a numeric 'value'")
        dims = entry.get("dims", {})
        if not isinstance(dims, Mapping):
            raise ValueError(f"constant {cid!r} 'dims' must be an object")
        merged[cid] = make(float(value), dimension_from_mapping(dims))
    return ConstantsProfile(name, merged)


def load_profile(path: str) -> ConstantsProfile:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, Mapping):
        raise ValueError("profile fixture must be a JSON object")
    return profile_from_dict(data)
