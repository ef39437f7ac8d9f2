"""Pure-Python Gaussian-integer kernels.

Gaussian integers are passed as parallel lists of real and imaginary parts
(plain Python ints).  :mod:`recurkit._kernels` is a compiled twin with the
same signatures; :mod:`recurkit.kernels` picks one at import.
"""


def linear_terms(coef_re, coef_im, init_re, init_im, n):
    """First ``n`` terms of ``w(k+d) = sum_i C_i * w(k+d-i)`` over Z[i].

    ``coef_*[i-1]`` holds ``C_i``; ``init_*`` hold ``w(0..d-1)``.
    """
    d = len(coef_re)
    out_re = list(init_re[:n])
    out_im = list(init_im[:n])
    if n <= d:
        return out_re, out_im
    real = not any(coef_im) and not any(init_im)
    for k in range(d, n):
        sr = 0
        si = 0
        if real:
            for i in range(d):
                sr += coef_re[i] * out_re[k - 1 - i]
        else:
            for i in range(d):
                cr = coef_re[i]
                ci = coef_im[i]
                wr = out_re[k - 1 - i]
                wi = out_im[k - 1 - i]
                sr += cr * wr - ci * wi
                si += cr * wi + ci * wr
        out_re.append(sr)
        out_im.append(si)
    return out_re, out_im


def linear_nth(coef_re, coef_im, init_re, init_im, n):
    """Term ``w(n)`` of the recurrence above, keeping only a sliding window."""
    d = len(coef_re)
    if n < d:
        return init_re[n], init_im[n]
    wr = list(init_re)
    wi = list(init_im)
    real = not any(coef_im) and not any(init_im)
    # circular buffer: w(k) lives at slot k % d
    for k in range(d, n + 1):
        sr = 0
        si = 0
        if real:
            for i in range(d):
                sr += coef_re[i] * wr[(k - 1 - i) % d]
        else:
            for i in range(d):
                j = (k - 1 - i) % d
                cr = coef_re[i]
                ci = coef_im[i]
                sr += cr * wr[j] - ci * wi[j]
                si += cr * wi[j] + ci * wr[j]
        wr[k % d] = sr
        wi[k % d] = si
    return wr[n % d], wi[n % d]


def convolve(a_re, a_im, b_re, b_im):
    """Product of two Gaussian-integer coefficient lists."""
    na = len(a_re)
    nb = len(b_re)
    if na == 0 or nb == 0:
        return [], []
    out_re = [0] * (na + nb - 1)
    out_im = [0] * (na + nb - 1)
    real = not any(a_im) and not any(b_im)
    for i in range(na):
        xr = a_re[i]
        xi = a_im[i]
        if xr == 0 and xi == 0:
            continue
        for j in range(nb):
            yr = b_re[j]
            if real:
                out_re[i + j] += xr * yr
            else:
                yi = b_im[j]
                out_re[i + j] += xr * yr - xi * yi
                out_im[i + j] += xr * yi + xi * yr
    return out_re, out_im


def _exact_div(xr, xi, pr, pi):
    # (xr + xi i) / (pr + pi i), known to be exact in Z[i]
    n = pr * pr + pi * pi
    qr = xr * pr + xi * pi
    qi = xi * pr - xr * pi
    return qr // n, qi // n


def bareiss_det(m_re, m_im):
    """Determinant of a square Gaussian-integer matrix (fraction-free)."""
    n = len(m_re)
    if n == 0:
        return 1, 0
    ar = [list(row) for row in m_re]
    ai = [list(row) for row in m_im]
    sign = 1
    prev_r, prev_i = 1, 0
    for k in range(n - 1):
        if ar[k][k] == 0 and ai[k][k] == 0:
            for r in range(k + 1, n):
                if ar[r][k] != 0 or ai[r][k] != 0:
                    ar[k], ar[r] = ar[r], ar[k]
                    ai[k], ai[r] = ai[r], ai[k]
                    sign = -sign
                    break
            else:
                return 0, 0
        pr = ar[k][k]
        pi = ai[k][k]
        for i in range(k + 1, n):
            lr = ar[i][k]
            li = ai[i][k]
            rowr = ar[i]
            rowi = ai[i]
            krowr = ar[k]
            krowi = ai[k]
            for j in range(k + 1, n):
                xr = pr * rowr[j] - pi * rowi[j] - (lr * krowr[j] - li * krowi[j])
                xi = pr * rowi[j] + pi * rowr[j] - (lr * krowi[j] + li * krowr[j])
                if prev_i == 0:
                    rowr[j] = xr // prev_r
                    rowi[j] = xi // prev_r
                else:
                    rowr[j], rowi[j] = _exact_div(xr, xi, prev_r, prev_i)
            rowr[k] = 0
            rowi[k] = 0
        prev_r, prev_i = pr, pi
    return sign * ar[n - 1][n - 1], sign * ai[n - 1][n - 1]
