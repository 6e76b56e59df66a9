"""Exact Ramanujan-Bernoulli numbers, their Racah moment problems, and the
companion L-function."""

from .bernoulli import bernoulli, eval_psi2_closed, eval_psi_closed, psi, psi_binom_product
from .catalog import CatalogEntry, catalog, get_entry
from .lfunction import L2_SPEC, LSeriesSpec, antidifference, l_direct, l_eval, l_value_neg
from .moments import (
    JacobiData,
    TheoremSpec,
    favard_moments,
    hankel_det,
    jacobi_from_moments,
    moments_from_jacobi,
    psi_moments,
    verify_theorem,
    verify_u_shift,
)
from .poly import Poly, Rat, binom_poly, binom_poly_neg
from .racah import RacahParams, hyp2f1_terminating, monic_racah, pochhammer_poly, pochhammer_rat, racah_poly
from .sequences import RSeqKind, r_sequence, r_value, u_shift_value

__version__ = "0.1.0"
