"""Exact symbolic powers of ideals over the rationals.

A monomial engine (canonical minimal generators, decompositions, three
mutually checking symbolic-power paths), degree-bound audits, a small
exact Groebner kernel, and a CLI that replays the built-in reference
computations bit-exactly.
"""

from .bounds import (
    BoundReport,
    GrowthSequence,
    degree_sequence,
    huneke_check,
    huneke_value_report,
    lcm_bound,
    lcm_check,
    sum_degree_bound,
    sumdeg_check,
)
from .decomp import (
    Decomposition,
    NotSquarefreeError,
    VariablePrime,
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
    minimal_variable_primes,
    symbolic_power,
    symbolic_power_from_decomposition,
    symbolic_power_saturation,
    symbolic_power_squarefree,
)
from .groebner import (
    DEGREVLEX,
    LEX,
    BlockElimination,
    DegRevLex,
    InternalInvariantError,
    Lex,
    PolyIdeal,
    Polynomial,
    Term,
    buchberger,
    divide_exact,
    ideal_equals,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    member,
    normal_form,
    s_polynomial,
)
from .ideal_files import (
    IdealFile,
    ParseError,
    format_generators,
    format_ideal_file,
    format_polynomial,
    monomial_ideal_from_poly,
    parse_ideal_file,
    parse_polynomial,
)
from .ideals import DegreeStats, MonomialIdeal, minimalize
from .rings import Monomial, Ring, RingMismatchError

__version__ = "0.1.0"
