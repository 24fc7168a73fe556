"""Spectroscopic constants of the modeled diatomic molecules.

Constants are carried exactly as published (dissociation energy in eV,
equilibrium separation in angstroms) and fed into the model with
hbar = mu = 1; no unit conversion is applied anywhere in the package.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

__all__ = [
    "MoleculeParams",
    "MoleculeTable",
    "MoleculeParseError",
    "builtin_molecules",
    "load_molecules",
    "dump_molecules",
]


class MoleculeParseError(ValueError):
    """Malformed molecule definition; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class MoleculeParams:
    """One molecule: name, dissociation energy d_e (eV), equilibrium separation r_e (A)."""

    name: str
    d_e: float
    r_e: float

    def __post_init__(self):
        if not self.name:
            raise ValueError("molecule name must be non-empty")
        if not self.d_e > 0:
            raise ValueError(f"d_e must be > 0, got {self.d_e}")
        if not self.r_e > 0:
            raise ValueError(f"r_e must be > 0, got {self.r_e}")


class MoleculeTable:
    """Ordered, immutable collection of molecules with unique names."""

    def __init__(self, molecules: Iterable[MoleculeParams]):
        items = list(molecules)
        names = [m.name for m in items]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate molecule names: {', '.join(dupes)}")
        self._items = tuple(items)
        self._by_name = {m.name: m for m in items}

    def __iter__(self) -> Iterator[MoleculeParams]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoleculeTable):
            return NotImplemented
        return self._items == other._items

    def __getitem__(self, name: str) -> MoleculeParams:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown molecule {name!r}; known: {', '.join(self.names())}")

    def names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self._items)

    def override(self, other: "MoleculeTable") -> "MoleculeTable":
        """Overlay ``other`` on this table: matching names are replaced, new ones appended."""
        merged = [other._by_name.get(m.name, m) for m in self._items]
        merged.extend(m for m in other._items if m.name not in self._by_name)
        return MoleculeTable(merged)


# Dissociation energies (eV) and equilibrium separations (angstrom).
_BUILTIN = (
    MoleculeParams("Na2", 0.746707167, 3.079),
    MoleculeParams("Cl2", 2.513903386, 1.987),
    MoleculeParams("O2+", 6.780447246, 1.116),
    MoleculeParams("N2+", 8.848131541, 1.116),
    MoleculeParams("NO+", 10.99665353, 1.063),
)


def builtin_molecules() -> MoleculeTable:
    """The five built-in diatomic molecules."""
    return MoleculeTable(_BUILTIN)


def load_molecules(source: TextIO | str) -> MoleculeTable:
    """Parse a molecule table from ``name, d_e, r_e`` lines.

    Blank lines and ``#`` comments are ignored.  Raises MoleculeParseError for
    malformed lines and ValueError for non-positive constants.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    molecules = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise MoleculeParseError(
                f"expected 'name, d_e, r_e', got {line!r}", lineno
            )
        name, d_e_text, r_e_text = parts
        try:
            d_e = float(d_e_text)
            r_e = float(r_e_text)
        except ValueError:
            raise MoleculeParseError(
                f"non-numeric constant in {line!r}", lineno
            ) from None
        molecules.append(MoleculeParams(name, d_e, r_e))
    return MoleculeTable(molecules)


def dump_molecules(table: MoleculeTable) -> str:
    """Serialize a table in the format accepted by load_molecules."""
    lines = ["# name, d_e (eV), r_e (angstrom)"]
    lines.extend(f"{m.name}, {m.d_e!r}, {m.r_e!r}" for m in table)
    return "\n".join(lines) + "\n"
