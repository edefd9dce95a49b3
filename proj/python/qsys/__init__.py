"""Quandle systems, coloured diagrams and their invariants."""

from ._qsys import (  # noqa: F401
    ParseError,
    PreconditionError,
    associated_quandle,
    count_colourings,
    dihedral_quandle,
    fixture_names,
    fixture_text,
    fuzz,
    good_involutions,
    hom_count,
    kauffman_summary,
    linking_matrix,
    system_names,
    system_text,
    trivial_quandle,
    validate_system,
    validate_table,
    wirtinger,
)

__version__ = "0.1.0"
