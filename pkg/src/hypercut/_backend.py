"""Select the terminal-cut kernel at import time.

The compiled kernel is used when it was built and ``HYPERCUT_PURE_PYTHON`` is
unset; instances with more vertices than it supports always use the fallback.
"""

import os

from . import _sweep_py

try:
    if os.environ.get("HYPERCUT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _sweep_c
except ImportError:
    _sweep_c = None

BACKEND = "cython" if _sweep_c is not None else "python"


def make_kernel(n, edges, weights, backend=None):
    """Kernel for the given network; ``backend`` forces "python" or "cython"."""
    choice = backend or BACKEND
    if choice == "cython":
        if _sweep_c is None:
            raise ImportError("compiled kernel not available")
        if n <= _sweep_c.MAX_N:
            return _sweep_c.TerminalKernel(n, edges, weights)
        if backend == "cython":
            raise ValueError(f"compiled kernel supports n <= {_sweep_c.MAX_N}")
    return _sweep_py.TerminalKernel(n, edges, weights)


def kernel_for(G, backend=None):
    return make_kernel(G.n, [e.vertices for e in G.edges], list(G.weights), backend)
