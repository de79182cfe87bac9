"""goodint: good integers, cyclotomic factorizations of x^n - 1, and LCD / self-dual cyclic codes."""
from .errors import ConsistencyError, DomainError, GoodIntError, SizeError
from .goodness import Classification, classify, good_table, is_evenly_good, is_good, is_oddly_good, witness_search
from .cyclotomic import CosetPartition, CyclotomicCoset, cosets, euclidean_type, hermitian_type
from .factorizer import FactorRecord, FactorTable, factor_table, min_poly
from .codes import (
    CyclicCode, DualitySpec, brute_verify, count_lcd, count_self_dual, dual_code,
    enumerate_codes, is_lcd, is_self_dual,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DomainError", "GoodIntError", "SizeError",
    "Classification", "classify", "good_table", "is_good", "is_oddly_good", "is_evenly_good", "witness_search",
    "CosetPartition", "CyclotomicCoset", "cosets", "euclidean_type", "hermitian_type",
    "FactorRecord", "FactorTable", "factor_table", "min_poly",
    "CyclicCode", "DualitySpec", "brute_verify", "count_lcd", "count_self_dual", "dual_code",
    "enumerate_codes", "is_lcd", "is_self_dual",
]
