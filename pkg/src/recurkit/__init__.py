"""Exact linear recurrence sequences over the Gaussian rationals."""

from .closedforms import (
    ClosedFormTerm,
    ExponentialPolynomialSequence,
    PartialFractionBlock,
    find_roots,
    from_closed_form,
    generating_function,
    partial_fractions,
    seq_add,
    seq_mul,
    to_closed_form,
)
from .contour import contour_residual
from .errors import *  # noqa: F401,F403
from .exppoly import (
    ExponentialPolynomialFunction,
    derivative_determinant_check,
    exhaustive_vanishing_orders,
    taylor_coefficient_sequence,
    vanishing_order,
)
from .interpolation import (
    HermiteData,
    NodeSystem,
    build_matrix,
    hermite_interpolate,
    newton_interpolate,
    solve_interpolation,
    vandermonde_determinant,
)
from .kernels import BACKEND
from .nonhomogeneous import NonHomogeneousForm, from_nonhomogeneous, to_nonhomogeneous, transition_matrix
from .polynomials import Polynomial, RationalFunction, expand_root_factors, monic_gcd, taylor_truncate
from .recurrences import (
    LinearRecurrence,
    RecurrentSequence,
    char_poly,
    eval_at,
    minimal_recurrence,
    satisfies,
    terms,
)
from .scalars import ApproxScalar, ExactScalar, approximate, as_scalar
from .twisted import (
    TwistedFamily,
    coefficient_spec,
    duality_check,
    form_coefficients,
    two_block_family,
    uh_sequence,
)

__version__ = "0.1.0"
