"""Built-in algebra definitions.

Each entry ships as a YAML definition document in the data directory and is
built on first access through build_structured_algebra. Entries whose object
of interest is a Grassmann envelope store the base superalgebra and set
``envelope: true``; ``catalog_target`` wraps those in an EnvelopeContext so
the computing modules see the right object either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

import yaml

from .algebra import SuperAlgebra, build_structured_algebra
from .grassmann import EnvelopeContext

__all__ = [
    "CatalogEntry", "catalog_names", "catalog_entry", "catalog_algebra",
    "catalog_target", "load_definition_file", "UnknownAlgebraError",
]

# stable presentation order for reports
_ORDER = [
    "A_1", "A_2", "A_3", "A_4", "A_5", "A_6", "A_7", "A_8", "A_9",
    "A_6^1", "A_6^2", "A_6^3", "A_7^1", "A_7^2", "A_7^3",
    "C_1", "C_2", "D", "D_0", "UT_2", "UT_3", "UT_4", "F", "G",
]

_ALIASES = {"M_2": "A_1", "M_1_1": "A_2", "F_plus_cF": "G"}


class UnknownAlgebraError(KeyError):
    pass


@dataclass
class CatalogEntry:
    name: str
    definition: dict
    envelope: bool = False
    expected: dict = field(default_factory=dict)
    subalgebra_of: str | None = None


_entries: dict[str, CatalogEntry] | None = None
_built: dict[str, SuperAlgebra] = {}


def _load_entries() -> dict[str, CatalogEntry]:
    global _entries
    if _entries is None:
        found = {}
        for item in resources.files("picentral.data").iterdir():
            if not item.name.endswith(".yaml"):
                continue
            doc = yaml.safe_load(item.read_text(encoding="utf-8"))
            entry = CatalogEntry(
                name=doc["name"],
                definition=doc["definition"],
                envelope=bool(doc.get("envelope", False)),
                expected=doc.get("expected") or {},
                subalgebra_of=doc.get("subalgebra_of"),
            )
            found[entry.name] = entry
        _entries = found
    return _entries


def catalog_names() -> list[str]:
    entries = _load_entries()
    names = [n for n in _ORDER if n in entries]
    names += sorted(set(entries) - set(names))
    return names


def catalog_entry(name: str) -> CatalogEntry:
    entries = _load_entries()
    key = _ALIASES.get(name, name)
    if key not in entries:
        raise UnknownAlgebraError(
            f"unknown algebra {name!r}; available: {', '.join(catalog_names())}")
    return entries[key]


def catalog_algebra(name: str) -> tuple[SuperAlgebra, CatalogEntry]:
    entry = catalog_entry(name)
    if entry.name not in _built:
        _built[entry.name] = build_structured_algebra(entry.definition)
    return _built[entry.name], entry


def catalog_target(name: str):
    """The algebra the catalog claim tables refer to: G(B) for envelope
    entries (as an EnvelopeContext), the plain algebra otherwise."""
    A, entry = catalog_algebra(name)
    if entry.envelope:
        return EnvelopeContext(A)
    return A


def load_definition_file(path: str) -> tuple[SuperAlgebra, CatalogEntry]:
    """Build a user algebra from a YAML definition document."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    if "definition" not in doc:
        doc = {"name": doc.get("name", "user"), "definition": doc}
    entry = CatalogEntry(
        name=doc.get("name", "user"),
        definition=doc["definition"],
        envelope=bool(doc.get("envelope", False)),
        expected=doc.get("expected") or {},
        subalgebra_of=doc.get("subalgebra_of"),
    )
    return build_structured_algebra(entry.definition), entry
