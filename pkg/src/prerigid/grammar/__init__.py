from .pomonoid import (
    Classification,
    Pomonoid,
    Verdict,
    check_derived_laws,
    classify,
    finite_sentence_check,
    validate_pomonoid,
)
from .pregroup import brute_force_reduce, free_pregroup_reduce, crosscheck_reducers
from .decimals import decimals_counterexample_check

__all__ = [
    "Classification",
    "Pomonoid",
    "Verdict",
    "brute_force_reduce",
    "check_derived_laws",
    "classify",
    "crosscheck_reducers",
    "decimals_counterexample_check",
    "finite_sentence_check",
    "free_pregroup_reduce",
    "validate_pomonoid",
]
