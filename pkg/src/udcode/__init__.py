"""Uniquely decipherable codes, Kraft sums and the extended McMillan inequality."""

from .codes import (
    Code,
    UdVerdict,
    construct_prefix_code,
    is_prefix_code,
    is_uniquely_decipherable,
    kraft_sum,
)
from .errors import (
    AlphabetMismatchError,
    InvalidCodeError,
    KraftViolationError,
    LimitExceededError,
    NotSubcodeError,
    NotUniquelyDecipherableError,
    TraceCheckError,
    UdCodeError,
)
from .factorization import (
    ParseDag,
    all_factorizations,
    depth_m,
    is_subcode_of_star,
    unique_factorization,
)
from .freealg import (
    NCPolynomial,
    code_sum,
    code_sum_power,
    evaluate,
    poly_add,
    poly_mul,
    rewrite_mod_ideal,
)
from .generators import (
    GenConfig,
    SplitMix64,
    random_composed_pair,
    random_non_ud_code,
    random_prefix_code,
)
from .monoid import Alphabet, Word, concat, length
from .theorem import (
    Limits,
    ProofTrace,
    check_classical_mcmillan,
    check_extended_mcmillan,
    check_inequality_7,
    check_inequality_8,
    decode_bijection_check,
    partition_Wl,
    run_proof_trace,
)

__version__ = "0.1.0"
