"""Kernel backend selection.

Prefers the compiled extension (``exunits._kernels``) when it imported
cleanly, falling back to the pure-Python kernels otherwise.  Setting the
environment variable ``EXUNITS_PURE_PYTHON=1`` forces the fallback.

The compiled kernels work in int64; any step whose counts could exceed
that range is routed to the pure-Python kernels, which use Python ints.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

_fast = None
if not os.environ.get("EXUNITS_PURE_PYTHON"):
    try:
        from . import _kernels as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "python"

# one factor of headroom below 2**63 - 1; entries are bounded by the table sum
_INT64_SAFE = 2**62


def sum_counts_step(radices, src, table):
    if _fast is not None and sum(table) * len(src) < _INT64_SAFE:
        return list(_fast.sum_counts_step(array("q", radices), array("q", src), array("q", table)))
    return _kernels_py.sum_counts_step(radices, src, table)


def sum_reach_step(radices, src, reach):
    if _fast is not None:
        return bytes(_fast.sum_reach_step(array("q", radices), array("q", src), reach))
    return _kernels_py.sum_reach_step(radices, src, reach)


def prod_counts_step(perm_flat, n, table):
    n_src = len(perm_flat) // n if n else 0
    if _fast is not None and sum(table) * n_src < _INT64_SAFE:
        return list(_fast.prod_counts_step(perm_flat, n, array("q", table)))
    return _kernels_py.prod_counts_step(perm_flat, n, table)


def prod_reach_step(perm_flat, n, reach):
    if _fast is not None:
        return bytes(_fast.prod_reach_step(perm_flat, n, reach))
    return _kernels_py.prod_reach_step(perm_flat, n, reach)
