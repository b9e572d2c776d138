# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: Thomas sweeps, partition-solver block phases, busy work.

All solver kernels release the GIL so disjoint blocks can run on real
threads. Semantics must stay in lockstep with trilevel._kernels.pure.
"""

from libc.math cimport sqrt

NAME = "cython"

cdef extern from "complex.h":
    double cabs(double complex) nogil


DEF TINY = 1e-300


def thomas(double complex[::1] a, double complex[::1] b,
           double complex[::1] c, double complex[::1] d,
           double complex[::1] x, double complex[::1] scratch):
    """Sequential tridiagonal solve; returns 0 or (row index + 1) on zero pivot."""
    cdef Py_ssize_t n = b.shape[0]
    cdef Py_ssize_t i
    cdef double complex w, m
    cdef int bad = 0
    with nogil:
        w = b[0]
        if cabs(w) < TINY:
            bad = 1
        else:
            x[0] = d[0] / w
            for i in range(1, n):
                scratch[i] = c[i - 1] / w
                w = b[i] - a[i] * scratch[i]
                if cabs(w) < TINY:
                    bad = <int> i + 1
                    break
                x[i] = (d[i] - a[i] * x[i - 1]) / w
            if bad == 0:
                for i in range(n - 2, -1, -1):
                    x[i] = x[i] - scratch[i + 1] * x[i + 1]
    return bad


def block_eliminate(double complex[::1] a, double complex[::1] b,
                    double complex[::1] c, double complex[::1] d,
                    double complex[::1] f, double complex[::1] g,
                    Py_ssize_t lo, Py_ssize_t hi):
    """Forward then backward elimination inside one block [lo, hi).

    Afterwards every row i of the block reads
        f[i] * x[lo-1] + b[i] * x[i] + g[i] * x[hi] = d[i].
    Returns 0 or (row index + 1) on zero pivot.
    """
    cdef Py_ssize_t i
    cdef double complex m
    cdef int bad = 0
    with nogil:
        f[lo] = a[lo]
        for i in range(lo + 1, hi):
            if cabs(b[i - 1]) < TINY:
                bad = <int> i
                break
            m = a[i] / b[i - 1]
            b[i] = b[i] - m * c[i - 1]
            f[i] = -m * f[i - 1]
            d[i] = d[i] - m * d[i - 1]
        if bad == 0:
            g[hi - 1] = c[hi - 1]
            for i in range(hi - 2, lo - 1, -1):
                if cabs(b[i + 1]) < TINY:
                    bad = <int> i + 2
                    break
                m = c[i] / b[i + 1]
                g[i] = -m * g[i + 1]
                f[i] = f[i] - m * f[i + 1]
                d[i] = d[i] - m * d[i + 1]
    return bad


def block_backsub(double complex[::1] b, double complex[::1] d,
                  double complex[::1] f, double complex[::1] g,
                  double complex[::1] x, Py_ssize_t lo, Py_ssize_t hi,
                  double complex xl, double complex xr):
    """Fill interior unknowns of one block from the boundary values."""
    cdef Py_ssize_t i
    with nogil:
        for i in range(lo + 1, hi - 1):
            x[i] = (d[i] - f[i] * xl - g[i] * xr) / b[i]


def burn(long units):
    """CPU-bound busy work (~`units` inner iterations) that releases the GIL."""
    cdef double acc = 0.0
    cdef long i
    with nogil:
        for i in range(units):
            acc += sqrt((i % 97) + 1.0)
    return acc
