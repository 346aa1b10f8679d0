"""Exact computation with generalized spline modules on edge-labeled graphs."""

from .basis import (
    BasisVerdict,
    ProbeResult,
    Provenance,
    QInvariant,
    SplineMatrix,
    c3_flowup_obstruction,
    check_basis,
    compute_q,
    cramer_membership,
    divides_all_dets_probe,
    even_constant_term,
    exact_determinant,
    label_lcm,
    spline_determinant,
    zero_constant_term,
)
from .errors import GraphError, ParseError, RingMismatchError, SplineAlgebraError
from .graphs import Edge, LabeledGraph, is_connected, load_graph
from .lattice import (
    HnfBasis,
    hermite_normal_form,
    integer_flow_up_basis,
    kernel_basis,
    lattice_membership,
    spline_lattice_generators,
)
from .polynomials import INT, RAT, Polynomial, exact_divide, parse_polynomial, poly_gcd
from .rings import QQ, ZZ, IntegerRing, PolynomialRing, RationalRing, ring_from_document
from .search import SearchOutcome, flow_up_search_bounded, monomials_up_to
from .splines import (
    EdgeViolation,
    SplineCheck,
    flow_up_index,
    flow_up_witness,
    is_spline,
    leading_term,
    spline_combination,
)

__version__ = "0.1.0"

__all__ = [
    "BasisVerdict",
    "Edge",
    "EdgeViolation",
    "GraphError",
    "HnfBasis",
    "INT",
    "IntegerRing",
    "LabeledGraph",
    "ParseError",
    "Polynomial",
    "PolynomialRing",
    "ProbeResult",
    "Provenance",
    "QInvariant",
    "QQ",
    "RAT",
    "RationalRing",
    "RingMismatchError",
    "SearchOutcome",
    "SplineAlgebraError",
    "SplineCheck",
    "SplineMatrix",
    "ZZ",
    "c3_flowup_obstruction",
    "check_basis",
    "compute_q",
    "cramer_membership",
    "divides_all_dets_probe",
    "even_constant_term",
    "exact_determinant",
    "exact_divide",
    "flow_up_index",
    "flow_up_search_bounded",
    "flow_up_witness",
    "hermite_normal_form",
    "integer_flow_up_basis",
    "is_connected",
    "is_spline",
    "kernel_basis",
    "label_lcm",
    "lattice_membership",
    "leading_term",
    "load_graph",
    "monomials_up_to",
    "parse_polynomial",
    "poly_gcd",
    "ring_from_document",
    "spline_combination",
    "spline_determinant",
    "spline_lattice_generators",
    "zero_constant_term",
]
