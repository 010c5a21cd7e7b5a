"""Exact QSP phase angles for odd monomials and machinery to verify them."""

from .cyclotomic import CyclotomicNumber, IntPoly, cyclotomic_polynomial
from .dihedral import DihedralElement, SignFunction
from .kernel import BACKEND
from .polymat import BivariatePoly, Mat2, qsp_product_symbolic, verify_theorem
from .qsp import PhaseSchedule, evaluate_qsp_unit_circle, monomial_phases, residual_sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BivariatePoly",
    "CyclotomicNumber",
    "DihedralElement",
    "IntPoly",
    "Mat2",
    "PhaseSchedule",
    "SignFunction",
    "cyclotomic_polynomial",
    "evaluate_qsp_unit_circle",
    "monomial_phases",
    "qsp_product_symbolic",
    "residual_sweep",
    "verify_theorem",
]
