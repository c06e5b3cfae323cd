"""Input validation helpers shared by the estimators and the CLI."""

from __future__ import annotations

from sklearn.utils.validation import check_is_fitted

from .errors import ConfigError, NotApplicable

BUG_TYPES = ("swapped_args", "wrong_binop", "wrong_operands")

REPRESENTATIONS = (
    "WT1", "WT2", "DB1", "DB2", "DB3", "FS1", "FS2", "FS3", "FS4", "TF1", "AST1", "AST2", "AST3", "AST4",
)
SWAPPED_ARGS_ONLY = frozenset({"FS1", "FS2", "FS3", "FS4", "AST2", "AST3"})


def check_bug_type(bug_type) -> str:
    if bug_type not in BUG_TYPES:
        raise ConfigError(f"unknown bug type {bug_type!r}; expected one of {', '.join(BUG_TYPES)}")
    return bug_type


def check_rep(rep) -> str:
    if rep not in REPRESENTATIONS:
        raise ConfigError(f"unknown representation {rep!r}; expected one of {', '.join(REPRESENTATIONS)}")
    return rep


def applicable(rep, bug_type) -> bool:
    check_rep(rep)
    check_bug_type(bug_type)
    return bug_type == "swapped_args" or rep not in SWAPPED_ARGS_ONLY


def check_applicable(rep, bug_type) -> str:
    if not applicable(rep, bug_type):
        raise NotApplicable(rep, bug_type)
    return rep


def check_positive_int(value, name) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0 or seed >= 2**64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return seed


__all__ = [
    "BUG_TYPES", "REPRESENTATIONS", "SWAPPED_ARGS_ONLY", "applicable", "check_applicable",
    "check_bug_type", "check_is_fitted", "check_positive_int", "check_rep", "check_seed",
]
