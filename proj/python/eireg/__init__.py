"""Generalised (e,i)-regularisation of integer partitions."""

from ._core import (
    AbacusDisplay,
    EiregError,
    Partition,
    PhiTrace,
    RegClass,
    RegResult,
    VerificationReport,
    abacus,
    abc_violation,
    beta_set,
    classes,
    conjugate,
    dominates,
    enumerate_partitions,
    find_ei_hooks,
    fingerprint,
    hook_length,
    is_ei_regular,
    ladder_key,
    ladder_labels,
    lex_compare,
    phi_step,
    regularise,
    regularise_then_james,
    remove_skew_hook,
    rim,
    run_cli,
    same_class,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
