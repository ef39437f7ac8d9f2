"""Exact dense linear algebra on lists of lists of :class:`ExactScalar`."""

from __future__ import annotations

from . import kernels
from .errors import SingularMatrix
from .polynomials import _to_gauss
from .scalars import ONE, ZERO, ExactScalar, as_scalar

Matrix = list  # list[list[ExactScalar]]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def to_matrix(rows) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(p):
            acc = ZERO
            for k in range(m):
                x = ai[k]
                if not x.is_zero():
                    acc = acc + x * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def matvec(a: Matrix, v) -> list:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if not x.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def matpow(a: Matrix, n: int) -> Matrix:
    """``a**n`` for ``n >= 0`` by binary powering."""
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        n >>= 1
        if n:
            base = matmul(base, base)
    return result


def determinant(a: Matrix) -> ExactScalar:
    """Determinant via row scaling to Z[i] and fraction-free elimination."""
    n = len(a)
    if n == 0:
        return ONE
    mr, mi = [], []
    scale = 1
    for row in a:
        re, im, D = _to_gauss(row)
        mr.append(re)
        mi.append(im)
        scale *= D
    dr, di = kernels.bareiss_det(mr, mi)
    return ExactScalar.from_parts(dr, di, scale)


def determinant_gauss(a: Matrix) -> ExactScalar:
    """Plain Gaussian elimination over the field (no integer kernel)."""
    m = [list(row) for row in a]
    n = len(m)
    det = ONE
    for k in range(n):
        piv = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        p = m[k][k]
        det = det * p
        inv = p.inverse()
        for r in range(k + 1, n):
            f = m[r][k] * inv
            if f.is_zero():
                continue
            row, krow = m[r], m[k]
            for c in range(k + 1, n):
                row[c] = row[c] - f * krow[c]
    return det


def solve_linear(a: Matrix, b) -> list | None:
    """One solution of ``a x = b`` (free variables set to zero), or ``None``.

    ``a`` may be rectangular.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(a[i]) + [as_scalar(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if not m[i][cols].is_zero():
            return None
    x = [ZERO] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return x


def solve(a: Matrix, b) -> list:
    """Unique solution of a square nonsingular system."""
    n = len(a)
    m = [list(a[i]) + [as_scalar(b[i])] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = m[k][k].inverse()
        for r in range(k + 1, n):
            f = m[r][k] * inv
            if f.is_zero():
                continue
            row, krow = m[r], m[k]
            for c in range(k + 1, n + 1):
                row[c] = row[c] - f * krow[c]
    x = [ZERO] * n
    for k in range(n - 1, -1, -1):
        acc = m[k][n]
        for c in range(k + 1, n):
            acc = acc - m[k][c] * x[c]
        x[k] = acc / m[k][k]
    return x


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    out = [list(row) + [ZERO] * nb for row in a]
    out += [[ZERO] * na + list(row) for row in b]
    return out
