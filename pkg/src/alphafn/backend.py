"""Kernel backend selection.

The compiled extension is preferred when importable; set
``ALPHAFN_BACKEND=python`` to force the pure-Python kernels.  Both
backends expose the same functions with identical semantics.
"""

import os

if os.environ.get("ALPHAFN_BACKEND", "").lower() == "python":
    from . import _kernels_py as kernels

    _BACKEND_NAME = "python"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]

        _BACKEND_NAME = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        _BACKEND_NAME = "python"


def backend_name() -> str:
    """Name of the kernel backend in use: 'cython' or 'python'."""
    return _BACKEND_NAME
