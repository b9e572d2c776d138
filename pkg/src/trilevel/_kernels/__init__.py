"""Kernel backend selection.

The compiled Cython module is preferred; ``TRILEVEL_BACKEND=pure`` forces the
pure-Python fallback and ``TRILEVEL_BACKEND=cython`` makes a missing extension
a hard error (useful in benchmarks and CI).
"""

import os

_choice = os.environ.get("TRILEVEL_BACKEND", "auto").lower()

if _choice == "pure":
    from trilevel._kernels import pure as backend
elif _choice == "cython":
    from trilevel._kernels import _core as backend
elif _choice == "auto":
    try:
        from trilevel._kernels import _core as backend
    except ImportError:
        from trilevel._kernels import pure as backend
else:
    raise ValueError(f"unknown TRILEVEL_BACKEND={_choice!r} "
                     f"(expected auto, cython or pure)")

BACKEND_NAME = backend.NAME

thomas = backend.thomas
block_eliminate = backend.block_eliminate
block_backsub = backend.block_backsub
burn = backend.burn
