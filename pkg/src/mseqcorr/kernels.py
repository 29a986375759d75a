"""Kernel dispatch: compiled ``_ckernels`` when importable, else ``_pykernels``.

Set ``MSEQCORR_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("MSEQCORR_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

census = _impl.census
max_zero_run = _impl.max_zero_run
run_tables = _impl.run_tables
v_sign_sum = _impl.v_sign_sum
u_sign_sum = _impl.u_sign_sum


def backends():
    """Every importable kernel implementation, keyed by name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
