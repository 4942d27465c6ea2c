"""Monogenic potential chain in upper/lower half-space.

Thin Python layer over the C++ core: potentials of the doubly infinite chain,
distributional boundary values, power kernels and the hyperfunction jump
verification machinery.
"""

import json as _json

from ._core import (
    __version__,
    boundary_value_pretty,
    chain_term_count,
    digamma,
    dirac_power_pretty,
    eval_potential,
    evaluable,
    f_profile,
    f_profile_inf,
    fd_dirac_residual,
    fp_gamma,
    hilbert_power_pretty,
    jump_check_json,
    lemma_check,
    pointwise_limit,
    sigma,
    sphere_moment,
    symbolic_cauchy_monogenic,
)


def jump_check(m, n, ladder=(), order=0, tol=5e-3, threads=0):
    """Run the jump check and return the report as a dict (schema 1)."""
    return _json.loads(jump_check_json(m, n, list(ladder), order, tol, threads))


__all__ = [
    "__version__",
    "boundary_value_pretty",
    "chain_term_count",
    "digamma",
    "dirac_power_pretty",
    "eval_potential",
    "evaluable",
    "f_profile",
    "f_profile_inf",
    "fd_dirac_residual",
    "fp_gamma",
    "hilbert_power_pretty",
    "jump_check",
    "jump_check_json",
    "lemma_check",
    "pointwise_limit",
    "sigma",
    "sphere_moment",
    "symbolic_cauchy_monogenic",
]
