"""Pure-Python kernel fallback.

Same call signatures and elimination order as the compiled module in
``_core.pyx``; used when the extension is unavailable or when
``TRILEVEL_BACKEND=pure`` is set. Correct but much slower on large systems.
"""

import math

NAME = "pure"

_TINY = 1e-300


def thomas(a, b, c, d, x, scratch):
    n = b.shape[0]
    w = b[0]
    if abs(w) < _TINY:
        return 1
    x[0] = d[0] / w
    for i in range(1, n):
        scratch[i] = c[i - 1] / w
        w = b[i] - a[i] * scratch[i]
        if abs(w) < _TINY:
            return i + 1
        x[i] = (d[i] - a[i] * x[i - 1]) / w
    for i in range(n - 2, -1, -1):
        x[i] = x[i] - scratch[i + 1] * x[i + 1]
    return 0


def block_eliminate(a, b, c, d, f, g, lo, hi):
    f[lo] = a[lo]
    for i in range(lo + 1, hi):
        if abs(b[i - 1]) < _TINY:
            return i
        m = a[i] / b[i - 1]
        b[i] = b[i] - m * c[i - 1]
        f[i] = -m * f[i - 1]
        d[i] = d[i] - m * d[i - 1]
    g[hi - 1] = c[hi - 1]
    for i in range(hi - 2, lo - 1, -1):
        if abs(b[i + 1]) < _TINY:
            return i + 2
        m = c[i] / b[i + 1]
        g[i] = -m * g[i + 1]
        f[i] = f[i] - m * f[i + 1]
        d[i] = d[i] - m * d[i + 1]
    return 0


def block_backsub(b, d, f, g, x, lo, hi, xl, xr):
    # Vectorized over the block interior; elementwise, so the operation
    # order matches the compiled loop.
    x[lo + 1:hi - 1] = (d[lo + 1:hi - 1] - f[lo + 1:hi - 1] * xl
                        - g[lo + 1:hi - 1] * xr) / b[lo + 1:hi - 1]


def burn(units):
    acc = 0.0
    for i in range(units):
        acc += math.sqrt((i % 97) + 1.0)
    return acc
