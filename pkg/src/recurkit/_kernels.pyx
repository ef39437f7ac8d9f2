# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled Gaussian-integer kernels; same contracts as ``_kernels_py``.

Values stay arbitrary-precision Python ints.  Real convolutions whose entries
all fit in 32 bits accumulate on C ``int64_t`` and spill to a Python int only
when a partial sum would overflow.
"""

from libc.stdint cimport int64_t

cdef int64_t _SAFE = 3037000499  # floor(sqrt(2**63 - 1))


cdef inline bint _small_list(list xs):
    cdef object x
    for x in xs:
        if x > _SAFE or x < -_SAFE:
            return False
    return True


def linear_terms(list coef_re, list coef_im, list init_re, list init_im, Py_ssize_t n):
    cdef Py_ssize_t d = len(coef_re)
    cdef list out_re = list(init_re[:n])
    cdef list out_im = list(init_im[:n])
    cdef Py_ssize_t k, i
    cdef object sr, si, cr, ci, wr, wi
    if n <= d:
        return out_re, out_im
    cdef bint real = not any(coef_im) and not any(init_im)
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


def linear_nth(list coef_re, list coef_im, list init_re, list init_im, Py_ssize_t n):
    cdef Py_ssize_t d = len(coef_re)
    if n < d:
        return init_re[n], init_im[n]
    cdef list wr = list(init_re)
    cdef list wi = list(init_im)
    cdef Py_ssize_t k, i, j
    cdef object sr, si, cr, ci
    cdef bint real = not any(coef_im) and not any(init_im)
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


cdef tuple _convolve_small_real(list a_re, list b_re):
    # every entry bounded by _SAFE, so each product fits; sums are guarded
    cdef Py_ssize_t na = len(a_re), nb = len(b_re), i, j
    cdef list out = [0] * (na + nb - 1)
    cdef int64_t x, y, acc, p
    cdef object o
    for i in range(na + nb - 1):
        acc = 0
        o = None
        for j in range(max(0, i - nb + 1), min(i, na - 1) + 1):
            x = a_re[j]
            y = b_re[i - j]
            p = x * y
            if (p > 0 and acc > 9223372036854775807 - p) or (p < 0 and acc < -9223372036854775807 - p):
                if o is None:
                    o = acc
                else:
                    o = o + acc
                acc = 0
            acc += p
        if o is None:
            out[i] = acc
        else:
            out[i] = o + acc
    return out, [0] * (na + nb - 1)


def convolve(list a_re, list a_im, list b_re, list b_im):
    cdef Py_ssize_t na = len(a_re), nb = len(b_re), i, j
    if na == 0 or nb == 0:
        return [], []
    cdef bint real = not any(a_im) and not any(b_im)
    if real and _small_list(a_re) and _small_list(b_re):
        return _convolve_small_real(a_re, b_re)
    cdef list out_re = [0] * (na + nb - 1)
    cdef list out_im = [0] * (na + nb - 1)
    cdef object xr, xi, yr, yi
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


def bareiss_det(list m_re, list m_im):
    cdef Py_ssize_t n = len(m_re), k, r, i, j
    if n == 0:
        return 1, 0
    cdef list ar = [list(row) for row in m_re]
    cdef list ai = [list(row) for row in m_im]
    cdef list rowr, rowi, krowr, krowi
    cdef object pr, pi, lr, li, xr, xi, prev_r = 1, prev_i = 0, nrm, qr, qi
    cdef int sign = 1
    cdef bint found
    for k in range(n - 1):
        if ar[k][k] == 0 and ai[k][k] == 0:
            found = False
            for r in range(k + 1, n):
                if ar[r][k] != 0 or ai[r][k] != 0:
                    ar[k], ar[r] = ar[r], ar[k]
                    ai[k], ai[r] = ai[r], ai[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0, 0
        krowr = ar[k]
        krowi = ai[k]
        pr = krowr[k]
        pi = krowi[k]
        for i in range(k + 1, n):
            rowr = ar[i]
            rowi = ai[i]
            lr = rowr[k]
            li = rowi[k]
            for j in range(k + 1, n):
                xr = pr * rowr[j] - pi * rowi[j] - (lr * krowr[j] - li * krowi[j])
                xi = pr * rowi[j] + pi * rowr[j] - (lr * krowi[j] + li * krowr[j])
                if prev_i == 0:
                    rowr[j] = xr // prev_r
                    rowi[j] = xi // prev_r
                else:
                    nrm = prev_r * prev_r + prev_i * prev_i
                    qr = xr * prev_r + xi * prev_i
                    qi = xi * prev_r - xr * prev_i
                    rowr[j] = qr // nrm
                    rowi[j] = qi // nrm
            rowr[k] = 0
            rowi[k] = 0
        prev_r = pr
        prev_i = pi
    return sign * ar[n - 1][n - 1], sign * ai[n - 1][n - 1]
