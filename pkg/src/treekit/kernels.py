"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``TREEKIT_PURE_PYTHON=1``
forces the fallback.
"""

import os

if os.environ.get("TREEKIT_PURE_PYTHON", "") not in ("", "0"):
    from treekit._pykernels import dc_count, det_bareiss

    BACKEND = "python"
else:
    try:
        from treekit._ckernels import dc_count, det_bareiss

        BACKEND = "cython"
    except ImportError:
        from treekit._pykernels import dc_count, det_bareiss

        BACKEND = "python"

__all__ = ["BACKEND", "dc_count", "det_bareiss"]
