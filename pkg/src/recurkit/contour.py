"""Numerical check of the Hermite interpolation formula by a contour integral.

For ``z`` inside a circle ``Gamma`` enclosing the nodes, the interpolant ``f``
of ``F`` satisfies

    f(z) = F(z) + (1 / 2 pi i) * integral over Gamma of Phi(zeta) d zeta,
    Phi(zeta) = F(zeta) / (z - zeta) * prod_j ((z - gamma_j) / (zeta - gamma_j))**t_j.

The integral is approximated with the periodic trapezoid rule, which converges
geometrically for integrands analytic near the circle.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .errors import NodeOnContour, NodeOutsideContour, PoleInsideContour
from .exppoly import ExponentialPolynomialFunction
from .interpolation import HermiteData, NodeSystem, hermite_interpolate, newton_coefficients
from .polynomials import Polynomial, RationalFunction, series_coefficients
from .scalars import ApproxScalar, ExactScalar, as_scalar

__all__ = ["contour_residual", "derivative_data", "MIN_QUAD_POINTS"]

MIN_QUAD_POINTS = 64
GUARD_BITS = 16


def _mpc(s: ExactScalar):
    a, b, d = s.parts
    return mpmath.mpc(mpmath.mpf(a) / d, mpmath.mpf(b) / d)


def _approx_point(z):
    if isinstance(z, ApproxScalar):
        return z.value
    if isinstance(z, (mpmath.mpc, mpmath.mpf, complex, float)):
        return mpmath.mpc(z)
    return _mpc(as_scalar(z))


def derivative_data(F, system: NodeSystem):
    """``F^(i)(gamma_j)`` for each node; exact when possible.

    Returns ``(values, exact)``.  Exponential terms ``exp(gamma z)`` evaluated
    at a node ``g`` with ``gamma * g != 0`` are transcendental, so such data is
    returned as mpmath numbers at the current working precision.
    """
    if isinstance(F, Polynomial):
        return tuple(tuple(F.derivative(i)(g) for i in range(t)) for g, t in system.nodes), True
    if isinstance(F, RationalFunction):
        rows = []
        for g, t in system.nodes:
            s = series_coefficients(F, t, g)
            rows.append(tuple(s[i] * math.factorial(i) for i in range(t)))
        return tuple(rows), True
    if isinstance(F, ExponentialPolynomialFunction):
        exact = all((gamma * g).is_zero() for _, gamma in F.terms for g, _ in system.nodes)
        rows = []
        for g, t in system.nodes:
            row = []
            for i in range(t):
                parts = F.derivative_parts(g, i)
                if exact:
                    acc = as_scalar(0)
                    for _, v in parts:
                        acc = acc + v
                else:
                    acc = mpmath.mpc(0)
                    for gamma, v in parts:
                        acc += _mpc(v) * mpmath.exp(_mpc(gamma * g))
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows), exact
    raise TypeError(f"unsupported function type {type(F).__name__}")


def _check_geometry(F, system: NodeSystem, zv, center: ExactScalar, radius: Fraction):
    r2 = radius * radius
    for g, _ in system.nodes:
        dist2 = (g - center).norm()
        if dist2 == r2:
            raise NodeOnContour(f"node {g} lies on the contour")
        if dist2 > r2:
            raise NodeOutsideContour(f"node {g} lies outside the contour")
    c = _mpc(center)
    if abs(zv - c) >= radius.numerator / mpmath.mpf(radius.denominator):
        raise NodeOutsideContour("evaluation point must lie strictly inside the contour")
    if isinstance(F, RationalFunction) and F.den.degree > 0:
        coeffs = [_mpc(x) for x in reversed(F.den.coeffs)]
        rad = mpmath.mpf(radius.numerator) / radius.denominator
        for rho in mpmath.polyroots(coeffs, maxsteps=200, extraprec=64):
            if abs(rho - c) <= rad * (1 + mpmath.mpf(2) ** -40):
                raise PoleInsideContour(f"pole near {mpmath.nstr(rho, 10)} on or inside the contour")


def contour_residual(
    F,
    system,
    z,
    radius=2,
    quad_points: int = 256,
    bits: int = 128,
) -> ApproxScalar:
    """``|f(z) - F(z) - I|`` with ``I`` the trapezoid value of the contour term.

    ``Gamma`` is the circle of the given radius around the mean of the nodes.
    The sum runs with extra guard bits; a residual below ``2**-bits`` times
    the size of the terms is not resolvable at ``bits`` and is returned as 0.
    ``F`` may be a :class:`Polynomial`, :class:`RationalFunction` or
    :class:`ExponentialPolynomialFunction`.
    """
    if not isinstance(system, NodeSystem):
        system = NodeSystem(tuple(system))
    if quad_points < MIN_QUAD_POINTS:
        raise ValueError(f"quad_points must be at least {MIN_QUAD_POINTS}")
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    nodes = system.nodes
    center = sum((g for g, _ in nodes), as_scalar(0)) / len(nodes)

    with mpmath.workprec(bits + GUARD_BITS):
        zv = _approx_point(z)
        _check_geometry(F, system, zv, center, radius)
        values, exact = derivative_data(F, system)
        if exact:
            f = hermite_interpolate(HermiteData(system, values))
            fz = f.evaluate_approx(zv)
        else:
            zs, cs = newton_coefficients([_mpc(g) for g, _ in nodes], values)
            fz = mpmath.mpc(0)
            for k in range(len(cs) - 1, -1, -1):
                fz = fz * (zv - zs[k]) + cs[k]
        Fz = F.evaluate_approx(zv)

        c = _mpc(center)
        r = mpmath.mpf(radius.numerator) / radius.denominator
        gammas = [(_mpc(g), t) for g, t in nodes]
        total = mpmath.mpc(0)
        for k in range(quad_points):
            w = r * mpmath.expjpi(mpmath.mpf(2 * k) / quad_points)
            zeta = c + w
            phi = F.evaluate_approx(zeta) / (zv - zeta)
            for g, t in gammas:
                phi *= ((zv - g) / (zeta - g)) ** t
            total += phi * w
        integral = total / quad_points
        residual = abs(fz - Fz - integral)
        # guard bits make anything under the working-precision floor pure rounding
        scale = max(mpmath.mpf(1), abs(fz), abs(Fz), abs(integral))
        if residual < scale * mpmath.mpf(2) ** -bits:
            residual = mpmath.mpf(0)
    return ApproxScalar(residual, 0, bits)
