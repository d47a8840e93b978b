"""Entropy, fractal dimensions and Hausdorff measure of subsets of the unit
box recognized by Buchi automata over base-k digit alphabets, with
brute-force enumeration oracles validating every analytic quantity at desk
scale."""

from .core import (
    DEFAULT_ENUMERATION_CAP,
    AmbiguityReport,
    Automaton,
    DigitVector,
    PropertyFlags,
    SccDecomposition,
    Word,
    accepts,
    automaton_to_dict,
    check_unambiguous,
    classify_properties,
    closure,
    cycle_automaton,
    enumerate_prefixes,
    load_automaton,
    multigraph_to_digraph,
    parse_automaton,
    prefix_count,
    prefix_determinization,
    scc_decompose,
    serialize_automaton,
    states_on_cycles,
    trim,
)
from .dimension import (
    REPORT_TOL,
    DensityReport,
    DimensionReport,
    box_dimension,
    closed_dimension,
    cycle_entropies,
    density_classifier,
    dimension_gap,
    dimension_report,
    hausdorff_dimension,
    mw_alpha,
)
from .errors import (
    AcyclicStateError,
    AmbiguousError,
    ArityError,
    CapExceededError,
    ConfigError,
    EmptyLanguageError,
    FormatError,
    NonCriticalExponentWarning,
    NondeterministicError,
    NotClosedError,
    NotStronglyConnectedError,
    NotTrimError,
    OmegafractError,
    UnreachableStateError,
    ValidationError,
)
from .geometry import (
    Box,
    box_count_oracle,
    box_cover,
    estimate_box_dimension,
    nu_k,
    render,
)
from .measure import (
    ComponentMeasure,
    MeasureReport,
    hausdorff_measure,
    key_prefix_series,
    scc_measure,
)
from .spectral import (
    CountMatrix,
    GrowthSequence,
    counting_matrix,
    entropy,
    entropy_estimate,
    prefix_growth,
    spectral_radius,
    substring_automaton,
    transfer_matrix,
    weighted_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityReport",
    "Automaton",
    "Box",
    "ComponentMeasure",
    "CountMatrix",
    "DEFAULT_ENUMERATION_CAP",
    "DensityReport",
    "DigitVector",
    "DimensionReport",
    "GrowthSequence",
    "MeasureReport",
    "PropertyFlags",
    "REPORT_TOL",
    "SccDecomposition",
    "Word",
    "accepts",
    "automaton_to_dict",
    "box_count_oracle",
    "box_cover",
    "box_dimension",
    "check_unambiguous",
    "classify_properties",
    "closed_dimension",
    "closure",
    "counting_matrix",
    "cycle_automaton",
    "cycle_entropies",
    "density_classifier",
    "dimension_gap",
    "dimension_report",
    "entropy",
    "entropy_estimate",
    "enumerate_prefixes",
    "estimate_box_dimension",
    "hausdorff_dimension",
    "hausdorff_measure",
    "key_prefix_series",
    "load_automaton",
    "multigraph_to_digraph",
    "mw_alpha",
    "nu_k",
    "parse_automaton",
    "prefix_count",
    "prefix_determinization",
    "prefix_growth",
    "render",
    "scc_decompose",
    "scc_measure",
    "serialize_automaton",
    "spectral_radius",
    "states_on_cycles",
    "substring_automaton",
    "transfer_matrix",
    "trim",
    "weighted_matrix",
    # errors
    "OmegafractError",
    "FormatError",
    "ValidationError",
    "EmptyLanguageError",
    "NotTrimError",
    "NotClosedError",
    "AcyclicStateError",
    "NondeterministicError",
    "AmbiguousError",
    "NotStronglyConnectedError",
    "UnreachableStateError",
    "CapExceededError",
    "ArityError",
    "ConfigError",
    "NonCriticalExponentWarning",
]
