"""Exact threshold and multiplicity computations for monomial ideals and sparse polynomials."""
from .monomials import MonomialIdeal, max_ideal, max_ideal_power
from .polytope import integral_closure, mu
from .thresholds import lct_monomial, nu_monomial
from .multiplicities import hilbert_samuel, mixed_multiplicities, sigma
from .dp import check_bound, classify_equality, dp_invariant

__all__ = [
    "MonomialIdeal", "max_ideal", "max_ideal_power", "integral_closure", "mu",
    "lct_monomial", "nu_monomial", "hilbert_samuel", "mixed_multiplicities", "sigma",
    "check_bound", "classify_equality", "dp_invariant",
]
