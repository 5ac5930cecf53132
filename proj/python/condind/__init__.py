"""Conditional indicators, risk measures and density recovery on finite spaces.

Values cross the boundary as strings: rationals "p/q", "inf" and "-inf".
"""

from ._core import (
    CondindError,
    HypothesisFailed,
    apply,
    cond_exp_extended,
    dispatch,
    essinf_cond,
    esssup_cond,
    ext_add,
    ext_mul,
    ext_sub,
    recover_density,
    rho,
)

__all__ = [
    "CondindError",
    "HypothesisFailed",
    "apply",
    "cond_exp_extended",
    "dispatch",
    "essinf_cond",
    "esssup_cond",
    "ext_add",
    "ext_mul",
    "ext_sub",
    "recover_density",
    "rho",
]
