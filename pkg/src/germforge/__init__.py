"""germ-forge: exact computer algebra for invertible series germs.

Conjugacy invariants, formal flows, and formal reversibility for germs at
the origin, over cyclotomic-rational scalars with exact equality.
"""

from .classify import (
    FormalCentralizer,
    FormalFlow,
    ParabolicInvariants,
    a_invariant,
    flow,
    formal_centralizer,
    formally_conjugate,
    invariants_of,
    iterative_log,
    model_flow,
    p_invariant,
)
from .errors import GermForgeError
from .expressions import parse_germ, parse_series
from .germs import (
    ConjugacyWitness,
    Germ,
    averaging_linearizer,
    conjugate,
    iterate,
    multiplier,
    order_of,
    random_germ,
    solve_conjugacy,
)
from .powerseries import TruncatedSeries, exact_divide, ring_arith
from .render import format_series, series_to_str
from .reversal import (
    ReversibilityReport,
    SymmetricFormReport,
    example_family,
    find_reverser,
    is_reversible,
    reversal_factorization,
    reverser_check,
    reverser_orders,
    symmetric_form_check,
)
from .scalar import (
    CycloScalar,
    RootOfUnity,
    conductor_cap,
    detect_root_of_unity,
    field_arith,
    lift_conductor,
    nth_root,
    primitive_root,
    set_conductor_cap,
)

__version__ = "0.1.0"

__all__ = [
    "CycloScalar",
    "ConjugacyWitness",
    "FormalCentralizer",
    "FormalFlow",
    "Germ",
    "GermForgeError",
    "ParabolicInvariants",
    "ReversibilityReport",
    "RootOfUnity",
    "SymmetricFormReport",
    "TruncatedSeries",
    "a_invariant",
    "averaging_linearizer",
    "conductor_cap",
    "conjugate",
    "detect_root_of_unity",
    "exact_divide",
    "example_family",
    "field_arith",
    "find_reverser",
    "flow",
    "formal_centralizer",
    "formally_conjugate",
    "format_series",
    "invariants_of",
    "is_reversible",
    "iterate",
    "iterative_log",
    "lift_conductor",
    "model_flow",
    "multiplier",
    "nth_root",
    "order_of",
    "p_invariant",
    "parse_germ",
    "parse_series",
    "primitive_root",
    "random_germ",
    "reversal_factorization",
    "reverser_check",
    "reverser_orders",
    "ring_arith",
    "series_to_str",
    "set_conductor_cap",
    "solve_conjugacy",
    "symmetric_form_check",
]
