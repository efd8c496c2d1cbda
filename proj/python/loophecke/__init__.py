from ._loophecke import (
    alexander,
    idem_ranks,
    lh_dim,
    mixed_parameter_check,
    sp_structure,
    verify,
)

__all__ = [
    "alexander",
    "idem_ranks",
    "lh_dim",
    "mixed_parameter_check",
    "sp_structure",
    "verify",
]
