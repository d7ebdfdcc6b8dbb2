"""Binary sequences with optimal periodic autocorrelation.

Library layout:

* ``core``         cyclic bit vectors and elementary transforms
* ``correlation``  periodic correlation, optimality classification
* ``interleave``   the K x T array form and the zero/one-column pair
* ``generators``   Legendre, m-sequence and twin-prime families
* ``construct_u``  the period-4N construction and its closed-form spectrum
* ``verify``       brute-force verification reports and exhaustive search
* ``cli``          the ``optseq`` command
"""

from .core import BinarySequence, parse_sequence, read_sequence, write_sequence
from .correlation import (
    CorrelationSpectrum,
    OptimalityClass,
    autocorrelation_spectrum,
    autocorrelation_via_support,
    classify,
    cross_correlation,
    cross_correlation_spectrum,
    kernel_cross_correlation,
    symmetry_type,
)
from .interleave import (
    InterleavedSpec,
    ShiftDecomposition,
    build,
    construction_a,
    construction_b,
    is_classical,
    shift_decompose,
    shifted_array,
    to_array,
)
from .generators import (
    legendre,
    m_sequence,
    quadratic_residues,
    twin_prime,
    twin_prime_array,
    twin_prime_parameters,
)
from .construct_u import (
    UParameters,
    UPredictor,
    build_u,
    modular_fraction,
    predict_r_u,
)
from .verify import (
    SearchResult,
    TheoremReport,
    exhaustive_search,
    theorem4_reverse_sample,
    verify_corollaries,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySequence",
    "CorrelationSpectrum",
    "InterleavedSpec",
    "OptimalityClass",
    "SearchResult",
    "ShiftDecomposition",
    "TheoremReport",
    "UParameters",
    "UPredictor",
    "autocorrelation_spectrum",
    "autocorrelation_via_support",
    "build",
    "build_u",
    "classify",
    "construction_a",
    "construction_b",
    "cross_correlation",
    "cross_correlation_spectrum",
    "exhaustive_search",
    "is_classical",
    "kernel_cross_correlation",
    "legendre",
    "m_sequence",
    "modular_fraction",
    "parse_sequence",
    "predict_r_u",
    "quadratic_residues",
    "read_sequence",
    "shift_decompose",
    "shifted_array",
    "symmetry_type",
    "theorem4_reverse_sample",
    "to_array",
    "twin_prime",
    "twin_prime_array",
    "twin_prime_parameters",
    "verify_corollaries",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
    "write_sequence",
]
