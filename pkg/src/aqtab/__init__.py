"""Tableau calculus for cohomologically induced modules of U(p,q).

Construction of the signed tableau and quasitableau attached to a
theta-stable parabolic datum, positivity-range classification,
overlap/singularity computation, the nice-range non-vanishing criterion,
and the Dirac-index decision via multiplicity/window conditions with an
integer feasibility witness.
"""

from .combinatorics import (
    SharedValueTable,
    is_antitableau,
    overlap_by_definition,
    overlap_by_formula,
    shared_value_table,
    singularity,
)
from .core import HalfInt, LambdaParam, ParabolicDatum, Weight, validate_input
from .criteria import (
    FeasibilitySolution,
    Verdict,
    dirac_constructive,
    dirac_feasibility_bruteforce,
    dirac_index_condition,
    dirac_index_nonzero,
    ktype_weight,
    mediocre_necessary_check,
    multiplicity_condition,
    nonvanishing_nice,
)
from .errors import (
    AqtabError,
    BlockOutOfRangeError,
    EmptyDatumError,
    InputError,
    InternalContradictionError,
    LengthMismatchError,
    MissingEntriesError,
    MissingSignsError,
    ModuleVanishesError,
    NotInMediocreRangeError,
    NotInNiceRangeError,
    PreconditionError,
    ZeroPairError,
)
from .oracle import (
    SweepReport,
    enumerate_lambdas,
    enumerate_parabolics,
    nice_grid_audit,
    sweep_dirac_equivalence,
    sweep_overlap,
    sweep_positional_lemma,
)
from .ranges import RangeClass, classify, infinitesimal_character, nice_gap_check, rho
from .tableau import (
    Cell,
    PartitionedTableau,
    build_quasitableau,
    build_signed_tableau,
    canonicalize,
    check_q_consistent,
)

__version__ = "0.1.0"

__all__ = [
    "AqtabError",
    "BlockOutOfRangeError",
    "Cell",
    "EmptyDatumError",
    "FeasibilitySolution",
    "HalfInt",
    "InputError",
    "InternalContradictionError",
    "LambdaParam",
    "LengthMismatchError",
    "MissingEntriesError",
    "MissingSignsError",
    "ModuleVanishesError",
    "NotInMediocreRangeError",
    "NotInNiceRangeError",
    "ParabolicDatum",
    "PartitionedTableau",
    "PreconditionError",
    "RangeClass",
    "SharedValueTable",
    "SweepReport",
    "Verdict",
    "Weight",
    "ZeroPairError",
    "build_quasitableau",
    "build_signed_tableau",
    "canonicalize",
    "check_q_consistent",
    "classify",
    "dirac_constructive",
    "dirac_feasibility_bruteforce",
    "dirac_index_condition",
    "dirac_index_nonzero",
    "enumerate_lambdas",
    "enumerate_parabolics",
    "infinitesimal_character",
    "is_antitableau",
    "ktype_weight",
    "mediocre_necessary_check",
    "multiplicity_condition",
    "nice_gap_check",
    "nice_grid_audit",
    "nonvanishing_nice",
    "overlap_by_definition",
    "overlap_by_formula",
    "rho",
    "shared_value_table",
    "singularity",
    "sweep_dirac_equivalence",
    "sweep_overlap",
    "sweep_positional_lemma",
    "validate_input",
]
