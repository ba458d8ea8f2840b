"""Exact verification of the discrete hypergroups attached to quantum Gelfand pairs on SU_q(2)."""

from .scalars import GaussianRational, QParameter, format_rational, parse_rational
from .unipoly import UniPoly
from .qpolynomials import OrthogonalFamily, askey_wilson, little_q_legendre
from .linearization import LinearizationRow, linearize_moment, linearize_triangular
from .hypergroup import DiscreteHypergroup, FiniteMeasure, from_linearization, verify_axioms
from .suq2 import AlgebraElement, SUq2
from .reports import Report, emit_report

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "DiscreteHypergroup",
    "FiniteMeasure",
    "GaussianRational",
    "LinearizationRow",
    "OrthogonalFamily",
    "QParameter",
    "Report",
    "SUq2",
    "UniPoly",
    "askey_wilson",
    "emit_report",
    "format_rational",
    "from_linearization",
    "linearize_moment",
    "linearize_triangular",
    "little_q_legendre",
    "parse_rational",
    "verify_axioms",
]
