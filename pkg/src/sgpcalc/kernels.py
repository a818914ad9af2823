"""Backend dispatch for the hot loops.

Set ``SGPCALC_BACKEND=numpy`` to force the pure-numpy path; the default is
numba when it imports cleanly. Both backends expose the same functions and
must agree bit for bit (see tests/test_kernels.py).
"""

import os

_requested = os.environ.get("SGPCALC_BACKEND", "numba").strip().lower()

if _requested not in ("numba", "numpy"):
    raise ImportError(f"SGPCALC_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from . import _batch_numba as _batch
        from . import _kernels_numba as _impl
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba missing
        from . import _batch_numpy as _batch
        from . import _kernels_numpy as _impl
        BACKEND = "numpy"
else:
    from . import _batch_numpy as _batch
    from . import _kernels_numpy as _impl
    BACKEND = "numpy"

ord_table = _impl.ord_table
shift_reduce = _impl.shift_reduce
generator_flags = _impl.generator_flags
batch = _batch


def backend_module(name):
    """Return the kernel module for ``name`` regardless of the env flag."""
    if name == "numba":
        from . import _kernels_numba as mod
    elif name == "numpy":
        from . import _kernels_numpy as mod
    else:
        raise ValueError(name)
    return mod


def batch_module(name):
    """Corpus-scan module for ``name`` regardless of the env flag."""
    if name == "numba":
        from . import _batch_numba as mod
    elif name == "numpy":
        from . import _batch_numpy as mod
    else:
        raise ValueError(name)
    return mod
