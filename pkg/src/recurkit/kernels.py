"""Backend selection for the Gaussian-integer kernels.

The compiled extension is used when it was built; setting the environment
variable ``RECURKIT_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

if os.environ.get("RECURKIT_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import bareiss_det, convolve, linear_nth, linear_terms

    BACKEND = "python"
else:
    try:
        from ._kernels import bareiss_det, convolve, linear_nth, linear_terms

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import bareiss_det, convolve, linear_nth, linear_terms

        BACKEND = "python"

__all__ = ["BACKEND", "bareiss_det", "convolve", "linear_nth", "linear_terms"]
