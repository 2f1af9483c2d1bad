"""Exact Hilbert series and iterated Hilbert coefficients for strands of bigraded modules."""

from hilbertforge.errors import (
    EnumerationCapExceeded,
    HilbertForgeError,
    InsufficientData,
    ParseError,
)
from hilbertforge.monomial import (
    MonomialIdeal,
    count_ideal_monomials,
    ideal_power,
    lcm_degree,
    membership,
    minimalize,
    parse_ideal,
)
from hilbertforge.hilbert import (
    CoefficientTable,
    HilbertPolynomial,
    HilbertSeries,
    HVector,
    coefficient_table,
    delta,
    dimension,
    e_from_h,
    extract_coefficients,
    flat_coefficient,
    generalized_binomial,
    h_from_e,
    h_vector,
    hilbert_polynomial,
    hilbert_series_ideal,
    hilbert_series_quotient,
    power_sum_polynomial,
)
from hilbertforge.poly import QPoly

__version__ = "0.1.0"
