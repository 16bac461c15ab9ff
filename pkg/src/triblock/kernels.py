"""Backend selection for the hot-loop kernels.

The compiled extension is preferred when importable; otherwise the pure
numpy implementation is used.  Set TRIBLOCK_BACKEND=python (or =cython) to
force one at import time, or call use_backend() at runtime (tests and the
benchmark do this).
"""

from __future__ import annotations

import os

from . import _kernels_py

__all__ = [
    "available_backends",
    "current_backend",
    "use_backend",
    "ordered_triangles",
    "product_filter",
    "consistent_rows",
]

_BACKENDS = {"python": _kernels_py}
try:
    from . import _kernels_cy

    _BACKENDS["cython"] = _kernels_cy
except ImportError:
    pass


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    global _active, _active_name
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active = _BACKENDS[name]
    _active_name = name


def current_backend() -> str:
    return _active_name


_env = os.environ.get("TRIBLOCK_BACKEND", "").strip().lower()
if _env:
    use_backend(_env)
else:
    use_backend("cython" if "cython" in _BACKENDS else "python")


def ordered_triangles(adj):
    return _active.ordered_triangles(adj)


def product_filter(cur, tri, h_adj, cross):
    return _active.product_filter(cur, tri, h_adj, cross)


def consistent_rows(rows, g_pat, h_adj):
    return _active.consistent_rows(rows, g_pat, h_adj)
