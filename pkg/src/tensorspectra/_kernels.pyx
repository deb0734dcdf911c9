# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels (ternary product, spectral residual and its Jacobian)."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def ternary_product(A, B, C):
    cdef const double complex[:, :, ::1] a = np.ascontiguousarray(A, dtype=np.complex128)
    cdef const double complex[:, :, ::1] b = np.ascontiguousarray(B, dtype=np.complex128)
    cdef const double complex[:, :, ::1] c = np.ascontiguousarray(C, dtype=np.complex128)
    cdef Py_ssize_t m = a.shape[0], l = a.shape[1], p = a.shape[2], n = b.shape[1]
    out = np.zeros((m, n, p), dtype=np.complex128)
    cdef double complex[:, :, ::1] d = out
    cdef Py_ssize_t i, j, k, t
    cdef double ar, ai, br, bi, cr, ci, xr, xi, sr, si
    for i in range(m):
        for j in range(n):
            for k in range(p):
                sr = 0.0
                si = 0.0
                for t in range(l):
                    ar = a[i, t, k].real
                    ai = a[i, t, k].imag
                    br = b[i, j, t].real
                    bi = b[i, j, t].imag
                    cr = c[t, j, k].real
                    ci = c[t, j, k].imag
                    xr = ar * br - ai * bi
                    xi = ar * bi + ai * br
                    sr = sr + (xr * cr - xi * ci)
                    si = si + (xr * ci + xi * cr)
                d[i, j, k] = sr + 1j * si
    return out


cdef void _residual(const double* x, const double* a, Py_ssize_t l, double* out) noexcept nogil:
    cdef Py_ssize_t l2 = l * l, l3 = l * l * l
    cdef const double* q = x
    cdef const double* r = x + l3
    cdef const double* s = x + 2 * l3
    cdef const double* mu = x + 3 * l3
    cdef const double* nu = x + 3 * l3 + l2
    cdef const double* xi = x + 3 * l3 + 2 * l2
    cdef Py_ssize_t m, n, p, k, e
    cdef double acc_a, acc_d, qv, rv, sv, qt, rt, st
    for m in range(l):
        for n in range(l):
            for p in range(l):
                acc_a = 0.0
                acc_d = 0.0
                for k in range(l):
                    qv = q[(m * l + k) * l + p]
                    rv = r[(n * l + k) * l + m]
                    sv = s[(p * l + k) * l + n]
                    qt = mu[m * l + k] * qv * mu[k * l + p]
                    rt = nu[n * l + k] * rv * nu[k * l + m]
                    st = xi[p * l + k] * sv * xi[k * l + n]
                    acc_a = acc_a + qt * rt * st
                    acc_d = acc_d + qv * rv * sv
                e = (m * l + n) * l + p
                out[e] = acc_a - a[e]
                if m == n and n == p:
                    out[l3 + e] = acc_d - 1.0
                else:
                    out[l3 + e] = acc_d


def spectral_residual_vec(x, A, Py_ssize_t l):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[::1] av = np.ascontiguousarray(A, dtype=np.float64).reshape(-1)
    out = np.empty(2 * l * l * l, dtype=np.float64)
    cdef double[::1] ov = out
    _residual(&xv[0], &av[0], l, &ov[0])
    return out


def spectral_jacobian_fd(x, A, Py_ssize_t l, double h):
    cdef double[::1] xv = np.array(x, dtype=np.float64, copy=True)
    cdef const double[::1] av = np.ascontiguousarray(A, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t nres = 2 * l * l * l
    cdef Py_ssize_t nparam = xv.shape[0]
    base = np.empty(nres, dtype=np.float64)
    pert = np.empty(nres, dtype=np.float64)
    jac = np.empty((nres, nparam), dtype=np.float64)
    cdef double[::1] bv = base
    cdef double[::1] pv = pert
    cdef double[:, ::1] jv = jac
    cdef Py_ssize_t i, e
    cdef double saved, step
    with nogil:
        _residual(&xv[0], &av[0], l, &bv[0])
        for i in range(nparam):
            saved = xv[i]
            step = h * (saved if saved > 1.0 else (-saved if saved < -1.0 else 1.0))
            xv[i] = saved + step
            _residual(&xv[0], &av[0], l, &pv[0])
            xv[i] = saved
            for e in range(nres):
                jv[e, i] = (pv[e] - bv[e]) / step
    return base, jac
