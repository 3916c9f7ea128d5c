"""Genus theory, class numbers, and Euclidean-ideal verdicts for odd real
biquadratic fields, with a census of the family by discriminant."""

from .arith import (
    FactoredSquarefree,
    factor_squarefree,
    is_prime,
    is_squarefree,
    kronecker_symbol,
    primes_up_to,
)
from .biquadratic import (
    BiquadraticField,
    FormClass,
    MultiquadraticField,
    classify_form,
    discriminant_of,
    field_record,
    from_radicands,
    from_triple,
    genus_field,
    genus_number,
    multiquadratic,
    real_genus_subfield,
)
from .brauer import class_number_biquadratic, unit_index
from .census import (
    CensusReport,
    ConstantEstimate,
    coefficient_experiment,
    count_S,
    count_S_by_genus,
    density_report,
    enumerate_triples,
    euler_constant,
    ordered_factorization_check,
    sathe_selberg_count,
)
from .errors import GenusLabError
from .euclid import Verdict, euclidean_verdict, exceptional_pattern, hilbert_abelian
from .quadratic import (
    ClassNumberCache,
    FundamentalUnit,
    class_number,
    class_number_forms,
    discriminant,
    fundamental_unit,
    genus_generators,
    get_cache,
    hilbert_radicands_if_abelian,
    is_fundamental,
    prime_star,
    set_cache,
)

__version__ = "0.1.0"

__all__ = [
    "BiquadraticField",
    "CensusReport",
    "ClassNumberCache",
    "ConstantEstimate",
    "FactoredSquarefree",
    "FormClass",
    "FundamentalUnit",
    "GenusLabError",
    "MultiquadraticField",
    "Verdict",
    "class_number",
    "class_number_biquadratic",
    "class_number_forms",
    "classify_form",
    "coefficient_experiment",
    "count_S",
    "count_S_by_genus",
    "density_report",
    "discriminant",
    "discriminant_of",
    "enumerate_triples",
    "euclidean_verdict",
    "euler_constant",
    "exceptional_pattern",
    "factor_squarefree",
    "field_record",
    "from_radicands",
    "from_triple",
    "fundamental_unit",
    "genus_field",
    "genus_generators",
    "genus_number",
    "get_cache",
    "hilbert_abelian",
    "hilbert_radicands_if_abelian",
    "is_fundamental",
    "is_prime",
    "is_squarefree",
    "kronecker_symbol",
    "multiquadratic",
    "ordered_factorization_check",
    "prime_star",
    "primes_up_to",
    "real_genus_subfield",
    "sathe_selberg_count",
    "set_cache",
    "unit_index",
]
