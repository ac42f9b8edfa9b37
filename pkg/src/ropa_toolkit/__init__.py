"""Toolkit for GDPR Article 30 Registers of Processing Activities (ROPAs).

Consolidates six EU regulator ROPA templates (BE, CY, DK, FI, LU, UK) into a
single 43-concept model, maps each concept onto the Data Privacy Vocabulary,
emits deterministic RDF, and validates records per jurisdiction.
"""

from ropa_toolkit.model import (
    Cardinality,
    ConceptDefinition,
    ConceptRegistry,
    Contact,
    Party,
    PartyRole,
    RopaRecord,
    ValueKind,
    build_registry,
    lookup_concept,
    registry_census,
)
from ropa_toolkit.ingest import (
    IngestDiagnostics,
    JurisdictionProfile,
    export_template_csv,
    load_profile,
    parse_ropa_csv,
)
from ropa_toolkit.mapping import (
    DpvCatalog,
    MappingCategory,
    MappingEntry,
    classify,
    extension_terms,
    mapping_census,
    value_coverage,
)
from ropa_toolkit.validation import (
    GapReport,
    ValidationReport,
    Violation,
    check_vocabulary,
    gap_analysis,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Cardinality",
    "ConceptDefinition",
    "ConceptRegistry",
    "Contact",
    "DpvCatalog",
    "GapReport",
    "IngestDiagnostics",
    "JurisdictionProfile",
    "MappingCategory",
    "MappingEntry",
    "Party",
    "PartyRole",
    "RopaRecord",
    "ValidationReport",
    "ValueKind",
    "Violation",
    "build_registry",
    "check_vocabulary",
    "classify",
    "export_template_csv",
    "extension_terms",
    "gap_analysis",
    "load_profile",
    "lookup_concept",
    "mapping_census",
    "parse_ropa_csv",
    "registry_census",
    "validate",
    "value_coverage",
]
