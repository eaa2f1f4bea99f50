"""Select the series-kernel implementation at import time.

The compiled extension is preferred; the pure-Python module is used when the
extension is missing or when ``NONELEM_PURE_PYTHON=1`` is set.
"""

import os

if os.environ.get("NONELEM_PURE_PYTHON") == "1":
    from nonelem import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from nonelem import _kernels as kernels

        BACKEND = "cython"
    except ImportError:
        from nonelem import _pykernels as kernels

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
