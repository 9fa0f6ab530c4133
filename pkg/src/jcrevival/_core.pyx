"""Compiled kernels: time-sweep reductions, oscillator eigenfunction tables
and uniform-grid Fourier samples.  Semantics match `_kernels_py`."""
import numpy as np

cimport numpy as cnp
from libc.math cimport cos, exp, sin, sqrt

cnp.import_array()


def sweep_reductions(t, sqrt_h, ratio, weight, parity, herm0, hermk, double k_parity):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef double[::1] sh = np.ascontiguousarray(sqrt_h, dtype=np.float64)
    cdef double[::1] ra = np.ascontiguousarray(ratio, dtype=np.float64)
    cdef double[::1] we = np.ascontiguousarray(weight, dtype=np.float64)
    cdef double[::1] pa = np.ascontiguousarray(parity, dtype=np.float64)
    cdef double[::1] h0 = np.ascontiguousarray(herm0, dtype=np.float64)
    cdef double[::1] hk = np.ascontiguousarray(hermk, dtype=np.float64)

    cdef Py_ssize_t n_t = tv.shape[0]
    cdef Py_ssize_t m = sh.shape[0]
    inv = np.empty(n_t)
    wig = np.empty(n_t)
    hom = np.empty(n_t)
    g1sq0 = np.empty(n_t)
    cdef double[::1] vinv = inv
    cdef double[::1] vwig = wig
    cdef double[::1] vhom = hom
    cdef double[::1] vg0 = g1sq0

    cdef Py_ssize_t i, j
    cdef double tj, s, s2, acc_i, acc_w, acc_h, wpar
    cdef double kfac = 1.0 - k_parity
    with nogil:
        for j in range(n_t):
            tj = tv[j]
            acc_i = 0.0
            acc_w = 0.0
            acc_h = 0.0
            for i in range(m):
                s = sin(tj * sh[i])
                s2 = ra[i] * s * s
                wpar = we[i] * pa[i]
                acc_i += we[i] * (1.0 - 2.0 * s2)
                acc_w += wpar - wpar * kfac * s2
                acc_h += we[i] * (h0[i] + s2 * (hk[i] - h0[i]))
            vinv[j] = acc_i
            vwig[j] = acc_w
            vhom[j] = acc_h
            s = sin(tj * sh[0])
            vg0[j] = 1.0 - ra[0] * s * s
    return inv, wig, hom, g1sq0


def hermite_psi_table(Py_ssize_t n_top, z):
    cdef double[::1] zv = np.ascontiguousarray(z, dtype=np.float64)
    cdef Py_ssize_t n_z = zv.shape[0]
    out = np.empty((n_top + 1, n_z))
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t i, n
    cdef double c0 = 3.141592653589793238 ** -0.25
    cdef double a, b
    with nogil:
        for i in range(n_z):
            ov[0, i] = c0 * exp(-0.5 * zv[i] * zv[i])
        if n_top >= 1:
            for i in range(n_z):
                ov[1, i] = sqrt(2.0) * zv[i] * ov[0, i]
        for n in range(1, n_top):
            a = sqrt(2.0 / (n + 1.0))
            b = sqrt(n / (n + 1.0))
            for i in range(n_z):
                ov[n + 1, i] = a * zv[i] * ov[n, i] - b * ov[n - 1, i]
    return out


def fourier_of_samples(values, double z0, double dz, eta):
    cdef double[::1] va = np.ascontiguousarray(values, dtype=np.float64)
    cdef double[::1] ev = np.ascontiguousarray(eta, dtype=np.float64)
    cdef Py_ssize_t n_v = va.shape[0]
    cdef Py_ssize_t n_e = ev.shape[0]
    re_arr = np.empty(n_e)
    im_arr = np.empty(n_e)
    cdef double[::1] rv = re_arr
    cdef double[::1] iv = im_arr
    cdef Py_ssize_t i, j
    cdef double re, im, ph, vw
    with nogil:
        for j in range(n_e):
            re = 0.0
            im = 0.0
            for i in range(n_v):
                vw = va[i] * (dz if 0 < i < n_v - 1 else 0.5 * dz)
                ph = ev[j] * (z0 + dz * i)
                re += vw * cos(ph)
                im += vw * sin(ph)
            rv[j] = re
            iv[j] = im
    return re_arr + 1j * im_arr
