"""Independent reference computations for the test suite.

Everything here works in sympy's Gaussian-rational domain ``QQ_I`` (or with
sympy expressions) and never calls into recurkit arithmetic, so agreement
with the library is a genuine cross-check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import sympy as sp
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from recurkit.scalars import ExactScalar

Z = sp.Symbol("z")


def q(s) -> object:
    """ExactScalar (or int/Fraction) to a QQ_I element."""
    if not isinstance(s, ExactScalar):
        s = ExactScalar(s)
    return QQ_I(QQ(s.re.numerator, s.re.denominator), QQ(s.im.numerator, s.im.denominator))


def unq(g) -> ExactScalar:
    g = QQ_I.convert(g)
    return ExactScalar(
        Fraction(int(g.x.numerator), int(g.x.denominator)),
        Fraction(int(g.y.numerator), int(g.y.denominator)),
    )


def sym(s) -> sp.Expr:
    return QQ_I.to_sympy(q(s))


def qs(xs) -> list:
    return [q(x) for x in xs]


# -- polynomials ----------------------------------------------------------------


def naive_mul(a: list, b: list) -> list:
    """Schoolbook product of ascending coefficient lists."""
    if not a or not b:
        return []
    out = [QQ_I.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def expand_roots(roots) -> list:
    out = [QQ_I.one]
    for g, t in roots:
        for _ in range(t):
            out = naive_mul(out, [-q(g), QQ_I.one])
    return out


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd via sympy over QQ_I (ascending coefficients in and out)."""
    pa = sp.Poly(list(reversed(a)) or [0], Z, domain=QQ_I)
    pb = sp.Poly(list(reversed(b)) or [0], Z, domain=QQ_I)
    g = sp.gcd(pa, pb).monic()
    return list(reversed(g.rep.to_list()))


def det(m) -> object:
    n = len(m)
    if n == 0:
        return QQ_I.one
    return DomainMatrix([qs(row) for row in m], (n, n), QQ_I).det()


def to_expr(coeffs) -> sp.Expr:
    return sum((sym(c) * Z**k for k, c in enumerate(coeffs)), sp.Integer(0))


# -- sequences --------------------------------------------------------------------


def iterate(c, initial, lo: int, hi: int) -> dict:
    """``u(lo..hi)`` by plain stepping in QQ_I, forwards from 0 and backwards from -1."""
    c = qs(c)
    d = len(c)
    u = {k: q(v) for k, v in enumerate(initial)}
    for a in range(d, hi + 1):
        u[a] = sum((c[i - 1] * u[a - i] for i in range(1, d + 1)), QQ_I.zero)
    for a in range(-1, lo - 1, -1):
        # u(a + d) = c_1 u(a + d - 1) + ... + c_d u(a)
        acc = u[a + d]
        for i in range(1, d):
            acc -= c[i - 1] * u[a + d - i]
        u[a] = acc / c[d - 1]
    return {a: u[a] for a in range(lo, hi + 1)}


def berlekamp_massey(values: list) -> list:
    """Shortest ``c`` with ``s(n) = sum_i c_i s(n - i)`` on the given prefix."""
    s = qs(values)
    C, B = [QQ_I.one], [QQ_I.one]
    L, m, b = 0, 1, QQ_I.one
    for n in range(len(s)):
        disc = s[n]
        for i in range(1, L + 1):
            disc += C[i] * s[n - i]
        if not disc:
            m += 1
            continue
        coef = disc / b
        T = list(C)
        C = C + [QQ_I.zero] * (len(B) + m - len(C))
        for i, x in enumerate(B):
            C[i + m] -= coef * x
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, disc, 1
        else:
            m += 1
    C = C + [QQ_I.zero] * (L + 1 - len(C))
    return [-x for x in C[1 : L + 1]]


def closed_form_value(terms, a: int):
    """``sum_j p_j(a) gamma_j**a`` in QQ_I; ``terms`` are ``(gamma, coeff list)``."""
    acc = QQ_I.zero
    for g, p in terms:
        pa = sum((q(c) * QQ_I.convert(a) ** i for i, c in enumerate(p)), QQ_I.zero)
        acc += pa * q(g) ** a if a >= 0 else pa / q(g) ** (-a)
    return acc


# -- functions ----------------------------------------------------------------------


def exppoly_expr(terms) -> sp.Expr:
    """``sum_j a_j(z) exp(gamma_j z)`` as a sympy expression."""
    return sum((to_expr(a) * sp.exp(sym(g) * Z) for a, g in terms), sp.Integer(0))


def derivatives_at(expr: sp.Expr, z0, count: int) -> list:
    """Exact ``expr^(a)(z0)`` in QQ_I; ``z0`` must make every exponential rational."""
    out = []
    e = expr
    for _ in range(count):
        out.append(QQ_I.from_sympy(sp.expand(e.subs(Z, sym(z0)))))
        e = sp.diff(e, Z)
    return out


def elementary_from_product(xs) -> list:
    """``U_1..U_d`` read off the expanded ``prod_i (X - x_i)``."""
    coeffs = [QQ_I.one]
    for x in xs:
        coeffs = naive_mul(coeffs, [-q(x), QQ_I.one]) or [QQ_I.zero]
    d = len(xs)
    # ascending: coeffs[d - h] is (-1)^h U_h
    return [(-1) ** h * coeffs[d - h] if d - h < len(coeffs) else QQ_I.zero for h in range(1, d + 1)]


def subset_products(eps, h: int) -> set:
    out = set()
    for idx in itertools.combinations(range(len(eps)), h):
        p = QQ_I.one
        for i in idx:
            p *= q(eps[i])
        out.add(p)
    return out


def confluent_rows(nodes) -> list:
    """Rows ``(d/dz)^i z^k`` at each node, for the brute-force determinant."""
    d = sum(t for _, t in nodes)
    rows = []
    for g, t in nodes:
        gq = q(g)
        for i in range(t):
            row = []
            for k in range(d):
                if k < i:
                    row.append(QQ_I.zero)
                else:
                    row.append(QQ_I.convert(math.comb(k, i)) * gq ** (k - i))
            rows.append(row)
    return rows


def leibniz_det(rows) -> object:
    """Permutation-expansion determinant (only for small matrices)."""
    n = len(rows)
    total = QQ_I.zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = QQ_I.one
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += -term if inv % 2 else term
    return total
