"""Backend selection for the hot kernels.

The compiled Cython module is preferred. Setting ``POLYHILBERT_PURE=1`` in the
environment (or a failed import) selects the pure-Python twin. Both expose
``pack``, ``min_slack``, ``ray_exit``, ``finsler``, ``distance`` and the
``*_many`` batch variants.
"""
import os

if os.environ.get("POLYHILBERT_PURE", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:  # extension not built
        from . import _pykernels as backend

BACKEND = backend.BACKEND
