# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled grid scan for geodesic shooting (hot kernel).

Same contract as _grid_py: per-(phi0, beta) minimum max-componentwise
deviation between the geodesic endpoint and the target, plus the t
achieving it.  The inner (phi0, t) loop is trigonometry-free: per-beta
t-tables hold the A component and the rectangular parts of B at phi0 = 0,
and the phi0 rotation is applied by angle addition.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin, sqrt
from libc.stdlib cimport free, malloc

cnp.import_array()

BACKEND_NAME = "cython"

cdef double TWO_PI = 6.283185307179586476925286766559


cdef inline double _max2(double a, double b) nogil:
    return a if a > b else b


def scan_su2(target, phis, betas, int n_t):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tr = np.ascontiguousarray(target, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ph = np.ascontiguousarray(phis, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] be = np.ascontiguousarray(betas, dtype=np.float64)
    cdef int n_phi = ph.shape[0]
    cdef int n_beta = be.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] dev = np.empty((n_phi, n_beta))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] t_best = np.empty((n_phi, n_beta))

    cdef double tr0 = tr[0], tr1 = tr[1], tr2 = tr[2], tr3 = tr[3]
    cdef double beta, s, dt, t, u, h, su, cu, sh, ch, bmag
    cdef double cphi, sphi, dev_a, d, best, bt, bre, bim
    cdef int ib, ip, it
    cdef double *re_a = <double *> malloc(n_t * sizeof(double))
    cdef double *im_a = <double *> malloc(n_t * sizeof(double))
    cdef double *bc = <double *> malloc(n_t * sizeof(double))
    cdef double *bs = <double *> malloc(n_t * sizeof(double))
    cdef double *deva = <double *> malloc(n_t * sizeof(double))
    if re_a == NULL or im_a == NULL or bc == NULL or bs == NULL or deva == NULL:
        free(re_a); free(im_a); free(bc); free(bs); free(deva)
        raise MemoryError()

    with nogil:
        for ib in range(n_beta):
            beta = be[ib]
            s = sqrt(1.0 + beta * beta)
            dt = TWO_PI / s / n_t
            for it in range(n_t):
                t = (it + 1) * dt
                u = t * s / 2.0
                h = t * beta / 2.0
                su = sin(u); cu = cos(u)
                sh = sin(h); ch = cos(h)
                re_a[it] = (beta / s) * su * sh + cu * ch
                im_a[it] = (beta / s) * su * ch - cu * sh
                bmag = su / s
                bc[it] = bmag * ch
                bs[it] = bmag * sh
                deva[it] = _max2(fabs(re_a[it] - tr0), fabs(im_a[it] - tr1))
            for ip in range(n_phi):
                cphi = cos(ph[ip])
                sphi = sin(ph[ip])
                best = 1e300
                bt = 0.0
                for it in range(n_t):
                    bre = bc[it] * cphi - bs[it] * sphi
                    bim = bc[it] * sphi + bs[it] * cphi
                    d = _max2(deva[it], _max2(fabs(bre - tr2), fabs(bim - tr3)))
                    if d < best:
                        best = d
                        bt = (it + 1) * dt
                dev[ip, ib] = best
                t_best[ip, ib] = bt

    free(re_a); free(im_a); free(bc); free(bs); free(deva)
    return dev, t_best


def scan_so3(target, phis, betas, int n_t):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tr = np.ascontiguousarray(
        np.asarray(target, dtype=np.float64).reshape(9))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ph = np.ascontiguousarray(phis, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] be = np.ascontiguousarray(betas, dtype=np.float64)
    cdef int n_phi = ph.shape[0]
    cdef int n_beta = be.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] dev = np.empty((n_phi, n_beta))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] t_best = np.empty((n_phi, n_beta))

    cdef double beta, s, dt, t, u, h, su, cu, sh, ch, bmag
    cdef double cphi, sphi, d, best, bt
    cdef double a1, a2, b1, b2, a11, a22, a12, b11, b22, b12
    cdef int ib, ip, it
    cdef double *ra = <double *> malloc(n_t * sizeof(double))
    cdef double *ia = <double *> malloc(n_t * sizeof(double))
    cdef double *bc = <double *> malloc(n_t * sizeof(double))
    cdef double *bs = <double *> malloc(n_t * sizeof(double))
    if ra == NULL or ia == NULL or bc == NULL or bs == NULL:
        free(ra); free(ia); free(bc); free(bs)
        raise MemoryError()

    with nogil:
        for ib in range(n_beta):
            beta = be[ib]
            s = sqrt(1.0 + beta * beta)
            dt = TWO_PI / s / n_t
            for it in range(n_t):
                t = (it + 1) * dt
                u = t * s / 2.0
                h = t * beta / 2.0
                su = sin(u); cu = cos(u)
                sh = sin(h); ch = cos(h)
                ra[it] = (beta / s) * su * sh + cu * ch
                ia[it] = (beta / s) * su * ch - cu * sh
                bmag = su / s
                bc[it] = bmag * ch
                bs[it] = bmag * sh
            for ip in range(n_phi):
                cphi = cos(ph[ip])
                sphi = sin(ph[ip])
                best = 1e300
                bt = 0.0
                for it in range(n_t):
                    a1 = ra[it]
                    a2 = ia[it]
                    b1 = bc[it] * cphi - bs[it] * sphi
                    b2 = bc[it] * sphi + bs[it] * cphi
                    a11 = a1 * a1; a22 = a2 * a2; a12 = a1 * a2
                    b11 = b1 * b1; b22 = b2 * b2; b12 = b1 * b2
                    d = fabs(a11 + a22 - b11 - b22 - tr[0])
                    d = _max2(d, fabs(2.0 * (a2 * b1 - a1 * b2) - tr[1]))
                    d = _max2(d, fabs(2.0 * (a2 * b2 + a1 * b1) - tr[2]))
                    d = _max2(d, fabs(2.0 * (a2 * b1 + a1 * b2) - tr[3]))
                    d = _max2(d, fabs(a11 - a22 + b11 - b22 - tr[4]))
                    d = _max2(d, fabs(2.0 * (b12 - a12) - tr[5]))
                    d = _max2(d, fabs(2.0 * (a2 * b2 - a1 * b1) - tr[6]))
                    d = _max2(d, fabs(2.0 * (b12 + a12) - tr[7]))
                    d = _max2(d, fabs(a11 - a22 - b11 + b22 - tr[8]))
                    if d < best:
                        best = d
                        bt = (it + 1) * dt
                dev[ip, ib] = best
                t_best[ip, ib] = bt

    free(ra); free(ia); free(bc); free(bs)
    return dev, t_best
