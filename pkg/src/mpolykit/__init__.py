"""M-polynomials of graphs and the bond incident degree indices derived from them."""

from .bipoly import MPoly, evaluate, from_terms, op_dx, op_dy, op_j, op_q, op_sx, op_sy
from .errors import (
    DivergentIntegral,
    ExponentError,
    GraphError,
    InvalidAlpha,
    InvalidParameter,
    MPolyKitError,
    OutOfRange,
    ParseError,
    UndefinedWeight,
    UnknownIndex,
    UnknownVertex,
    UnsupportedIndex,
)
from .generators import LatticeParams, bethe_c, bethe_d, bethe_e, closed_form_mpoly, face_counts, lattice
from .graph import EdgeTypeCounts, Graph, degree, degree_histogram, edge_type_counts, m_polynomial
from .gutman import GutmanSystem, Solution, build_equations, solve, verify_independence
from .indices import IndexDef, closed_form, compute_direct, compute_via_operators, get_index, registry

__version__ = "0.1.0"
