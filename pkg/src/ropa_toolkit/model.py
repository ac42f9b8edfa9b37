"""Consolidated ROPA domain model: concept definitions, registry, records.

The registry is shipped data (``data/registry.json``), not code. All header
matching is exact-after-normalisation: case-folded and trimmed, never fuzzy,
so that legal fields are never silently mis-mapped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class Cardinality(str, Enum):
    SINGLE = "single"
    MULTI = "multi"


class ValueKind(str, Enum):
    FREE_TEXT = "free_text"
    PARTY = "party"
    DATE_OR_DURATION = "date_or_duration"
    ENUMERATED = "enumerated"
    BOOLEAN = "boolean"
    REFERENCE = "reference"


class PartyRole(str, Enum):
    CONTROLLER = "controller"
    JOINT_CONTROLLER = "joint_controller"
    REPRESENTATIVE = "representative"
    DPO = "dpo"
    PROCESSOR = "processor"
    RECIPIENT = "recipient"


class RegistryError(ValueError):
    """Base error for registry construction problems."""


class DuplicateNameError(RegistryError):
    pass


class SynonymCollisionError(RegistryError):
    pass


class ConstraintViolationError(RegistryError):
    pass


_NAME_TOKEN = re.compile(r"^[a-z][a-z0-9_]*$")


def normalize_key(text: str) -> str:
    """Case-fold and trim a header or vocabulary value for matching."""
    return text.strip().casefold()


@dataclass(frozen=True)
class ConceptDefinition:
    """One of the consolidated ROPA concepts.

    ``name`` is the canonical lower-snake identifier; ``synonyms`` are header
    strings observed across regulator templates and are matched
    case-insensitively after trimming. ``specified_values`` is the controlled
    list of allowed values, present only for enumerated concepts.
    """

    name: str
    display_name: str
    synonyms: tuple[str, ...] = ()
    article30_refs: tuple[str, ...] = ()
    mandatory_art30: bool = False
    cardinality: Cardinality = Cardinality.MULTI
    value_kind: ValueKind = ValueKind.FREE_TEXT
    specified_values: tuple[str, ...] = ()

    def match_keys(self) -> set[str]:
        """All normalised strings under which this concept can be found."""
        keys = {normalize_key(self.name), normalize_key(self.display_name)}
        keys.update(normalize_key(s) for s in self.synonyms)
        return keys


@dataclass(frozen=True)
class ConceptRegistry:
    concepts: tuple[ConceptDefinition, ...]
    version: str
    _index: dict[str, ConceptDefinition] = field(
        default_factory=dict, compare=False, repr=False
    )

    def get(self, name: str) -> ConceptDefinition | None:
        return self._index.get(normalize_key(name))

    def mandatory_concepts(self) -> tuple[ConceptDefinition, ...]:
        return tuple(c for c in self.concepts if c.mandatory_art30)


@dataclass(frozen=True)
class RegistryCensus:
    total: int
    mandatory: int
    with_specified_values: int


@dataclass
class Contact:
    """Free-text contact block; every field optional."""

    address: str | None = None
    email: str | None = None
    phone: str | None = None


@dataclass
class Party:
    role: PartyRole
    name: str
    contact: Contact = field(default_factory=Contact)


@dataclass
class RopaRecord:
    """One processing activity.

    ``values`` maps concept names to value-string lists. Records are mutable
    during ingestion only; downstream modules treat them as read-only.
    """

    record_id: str
    jurisdiction: str
    values: dict[str, list[str]] = field(default_factory=dict)
    parties: list[Party] = field(default_factory=list)

    def present_values(self, concept_name: str) -> list[str]:
        """Non-whitespace values recorded for a concept."""
        return [v for v in self.values.get(concept_name, []) if v.strip()]


def build_registry(
    definitions: list[ConceptDefinition] | tuple[ConceptDefinition, ...],
    version: str,
) -> ConceptRegistry:
    """Assemble and check a registry; rejects any invariant breach.

    Raises DuplicateNameError, SynonymCollisionError or
    ConstraintViolationError naming the offending concept.
    """
    if not definitions:
        raise ConstraintViolationError("registry needs at least one concept definition")

    seen_names: set[str] = set()
    index: dict[str, ConceptDefinition] = {}
    for concept in definitions:
        if not _NAME_TOKEN.match(concept.name):
            raise ConstraintViolationError(
                f"concept name {concept.name!r} is not a lower-snake token"
            )
        if concept.name in seen_names:
            raise DuplicateNameError(f"duplicate concept name {concept.name!r}")
        seen_names.add(concept.name)

        if concept.specified_values and concept.value_kind is not ValueKind.ENUMERATED:
            raise ConstraintViolationError(
                f"concept {concept.name!r} carries specified_values but its "
                f"value_kind is {concept.value_kind.value}"
            )
        if concept.mandatory_art30 and not concept.article30_refs:
            raise ConstraintViolationError(
                f"concept {concept.name!r} is mandatory but cites no Article 30 clause"
            )

        for key in sorted(concept.match_keys()):
            if key in index:
                raise SynonymCollisionError(
                    f"match key {key!r} of concept {concept.name!r} collides "
                    f"with concept {index[key].name!r}"
                )
            index[key] = concept

    return ConceptRegistry(concepts=tuple(definitions), version=version, _index=index)


def lookup_concept(registry: ConceptRegistry, header: str) -> ConceptDefinition | None:
    """Resolve a header against canonical names, display names and synonyms.

    Returns None when the header is unregistered; matching is exact after
    case-folding and trimming.
    """
    return registry.get(header)


def registry_census(registry: ConceptRegistry) -> RegistryCensus:
    return RegistryCensus(
        total=len(registry.concepts),
        mandatory=sum(1 for c in registry.concepts if c.mandatory_art30),
        with_specified_values=sum(1 for c in registry.concepts if c.specified_values),
    )
