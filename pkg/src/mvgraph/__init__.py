"""Many-valued graph-based semantics for non-distributive modal logic.

Finite residuated truth-value algebras, A-valued sets and relations, formal
A-contexts and their concept lattices, reflexive A-graphs with their induced
polarities, graph-based frames and models, and correspondence checks for the
basic modal axioms.
"""

from .algebra import (
    AlgebraError,
    AlgebraValidationError,
    TruthAlgebra,
    TruthValue,
    big_join,
    big_meet,
    make_goedel_chain,
    make_lukasiewicz_chain,
    make_table_algebra,
    validate_algebra,
)
from .correspondence import (
    AxiomId,
    check_condition,
    check_condition_finite_chain,
    correspondence_equivalence_test,
    r_black,
)
from .formula import ParseError, parse, parse_sequent, print_formula
from .frame_io import FrameFileError, load_frame, save_frame
from .graph import (
    AGraph,
    GraphFrame,
    RelationPair,
    check_compat_equivalences,
    check_E_compatibility,
    check_E_reflexive,
    frame_box,
    frame_dia,
    induced_polarity,
)
from .model import (
    Model,
    evaluate,
    make_valuation,
    refutes,
    sequent_true,
    sequent_valid_on_frame,
    supports,
)
from .mvsets import ARelation, AValuedSet, Index, Situation, singleton, subsethood
from .polarity import APolarity, Concept, EnrichedAPolarity, enumerate_concepts

__version__ = "0.1.0"
