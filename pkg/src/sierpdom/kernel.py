"""Backend selection for the set-cover kernel.

The compiled ``_bnb`` extension is used when it imports; otherwise, or when
``SIERPDOM_PURE=1`` is set, the pure-Python kernel runs the same search.
"""

from __future__ import annotations

import os

from . import _bnb_py

_native = None
if os.environ.get("SIERPDOM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _bnb as _native  # type: ignore[attr-defined, no-redef]
    except ImportError:
        _native = None

BACKENDS = {"python": _bnb_py.solve_cover}
if _native is not None:
    BACKENDS["cython"] = _native.solve_cover

BACKEND = "cython" if _native is not None else "python"


def get_solver(name: str | None = None):
    """The ``solve_cover`` callable of backend ``name`` (default: best available)."""
    name = name or BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
