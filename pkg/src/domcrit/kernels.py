"""Backend selection for the search kernels.

The environment variable ``DOMCRIT_BACKEND`` picks the implementation:

* ``auto`` (default) - the jitted backend when numba imports, else pure Python
* ``numba``          - require the jitted backend
* ``python``         - force the pure-Python reference kernels

``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os
from types import ModuleType

_ENV_VAR = "DOMCRIT_BACKEND"


def get_backend(name: str) -> ModuleType:
    """Load a kernel backend by name ('numba' or 'python')."""
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if name in ("python", "numpy"):
        from . import _kernels_py

        return _kernels_py
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> tuple[ModuleType, str]:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice == "auto":
        try:
            return get_backend("numba"), "numba"
        except ImportError:
            return get_backend("python"), "python"
    if choice in ("python", "numpy"):
        return get_backend("python"), "python"
    if choice == "numba":
        return get_backend("numba"), "numba"
    raise ValueError(f"{_ENV_VAR} must be 'auto', 'numba', or 'python', got {choice!r}")


_impl, BACKEND_NAME = _select()

gamma_search = _impl.gamma_search
gamma_brute = _impl.gamma_brute
canon_cols = _impl.canon_cols
extend_canon = _impl.extend_canon
