"""Unit propagation as a computation model.

Staged unit resolution with full traces, stage-indexed mirror formulas,
propagators computing filtering/matching functions over partial
assignments, and the constructive translations between propagators and
monotone Boolean circuits, all backed by brute-force verification at small
scale.
"""

from .cnf import (
    CnfFormula,
    PartialAssignment,
    PropagationResult,
    format_dimacs,
    neg,
    parse_dimacs,
    propagate_staged,
    propagate_standard,
    propagation_stage,
    restrict,
)
from .circuit import (
    Circuit,
    Gate,
    compute_table,
    evaluate,
    format_circuit,
    parse_circuit,
    prune_dead_gates,
    validate_monotone,
)
from .propagator import (
    Filtering,
    FunctionTable,
    Matching,
    MatchingProtocolError,
    NuPropagator,
    Propagator,
    ReifiedPropagator,
    boolean_representation,
    eval_filtering,
    eval_matching,
    eval_nu,
    filtering_to_matchings,
    format_propagator,
    matchings_to_filtering,
    nu_to_propagator,
    parse_propagator,
    propagator_to_nu,
    reify_propagator,
    tabulate,
)
from .reify import (
    ReifiedFormula,
    ReifiedIndex,
    ReifiedVariable,
    failed_literal_formula,
    format_reified,
    parse_reified,
    reify,
    reify_injected,
)
from .translate import (
    CircuitExtraction,
    circuit_to_propagator,
    extract_circuit,
    propagator_to_circuit,
)
from .verify import (
    Counterexample,
    check_equiv_propagator_circuit,
    check_monotone,
    enumerate_assignments,
    random_cnf,
    random_monotone_circuit,
    run_suite,
)

__version__ = "0.1.0"
