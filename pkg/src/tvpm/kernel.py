"""Kernel backend selection.

Imports the compiled fraction-free elimination kernels when the extension
is available, the pure-Python twin otherwise.  Set ``TVPM_PURE_PYTHON=1``
to force the pure twin (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("TVPM_PURE_PYTHON") == "1":
    from tvpm._kernel_py import BACKEND, ff_det, ff_rank, ff_solve
else:
    try:
        from tvpm._kernel import BACKEND, ff_det, ff_rank, ff_solve
    except ImportError:
        from tvpm._kernel_py import BACKEND, ff_det, ff_rank, ff_solve

__all__ = ["BACKEND", "ff_det", "ff_solve", "ff_rank"]
