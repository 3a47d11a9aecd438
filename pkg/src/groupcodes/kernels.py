"""Backend selection for the hot matrix kernels.

The compiled extension (``groupcodes._fastkern``) is preferred when it
was built; otherwise the pure numpy fallback is used.  Set the
environment variable ``GROUPCODES_PURE=1`` to force the fallback, e.g.
for benchmarking.  Both backends implement identical contracts and
return identical results.
"""

from __future__ import annotations

import os

if os.environ.get("GROUPCODES_PURE"):
    from . import _purekern as _impl

    BACKEND = "python"
else:
    try:
        from . import _fastkern as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _purekern as _impl

        BACKEND = "python"

rref_inplace = _impl.rref_inplace
weight_distribution = _impl.weight_distribution
