# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the singular-ratio and time-of-flight quadratures.

Mirrors the pure NumPy module ``_kernels_py``; both lanes must produce
results equal up to floating-point summation order.
"""

from libc.math cimport sin, sqrt


def ratio_pair(double a, const double[::1] s2, const double[::1] ws,
               const double[::1] wss):
    """Return (I_half, I_three_half) evaluated on one fixed node level.

    In the angle variable r = sin(theta)**2 the two moment integrals become
        I_k = 2 * int_0^{pi/2} sin(theta)**(2k+1) / sqrt(sin(theta)**2 - a) dtheta,
    so both share the factor 1/sqrt(s2 - a) with s2 = sin(theta)**2.
    """
    cdef Py_ssize_t i, n = s2.shape[0]
    cdef double i_half = 0.0, i_three_half = 0.0, f
    for i in range(n):
        f = 1.0 / sqrt(s2[i] - a)
        i_half += ws[i] * f
        i_three_half += wss[i] * f
    return i_half, i_three_half


def time_partial(double a, double theta, const double[::1] u, const double[::1] w):
    """Return int_0^theta cos(p)**2 / sqrt(cos(p)**2 - a) dp for theta <= pi/2."""
    cdef Py_ssize_t i, n = u.shape[0]
    cdef double acc = 0.0, s, cc
    for i in range(n):
        s = sin(theta * u[i])
        cc = 1.0 - s * s
        acc += w[i] * cc / sqrt(cc - a)
    return theta * acc
