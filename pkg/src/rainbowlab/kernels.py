"""Backend selection for the search kernels.

The compiled ``_core`` extension is used when it imports and the graph fits
in 64 vertices; otherwise the pure-Python ``_fallback`` runs.  Setting
``RAINBOWLAB_BACKEND=python`` forces the fallback for the whole process.
"""

import os

from . import _fallback

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

MAX_COMPILED_N = 64

if os.environ.get("RAINBOWLAB_BACKEND", "").lower() == "python":
    _core = None

BACKEND = "compiled" if _core is not None else "python"


def get(backend: str | None = None):
    """Return the kernel module for ``backend`` ('compiled', 'python' or None = default)."""
    if backend is None:
        backend = BACKEND
    if backend == "python":
        return _fallback
    if backend == "compiled":
        if _core is None:
            raise RuntimeError("compiled kernels unavailable (extension not built or disabled)")
        return _core
    raise ValueError(f"unknown backend {backend!r}")


def for_graph(n: int, backend: str | None = None):
    mod = get(backend)
    if mod is not _fallback and n > MAX_COMPILED_N:
        return _fallback
    return mod
