"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure
module is always available.  SECDOM_BACKEND=auto|pure|compiled overrides
(compiled errors out if the extension is missing).  Per call, inputs too
large for the compiled kernels fall through to the pure ones, so callers
never have to care.
"""

import os
from typing import Sequence

from . import _core_py

_COMPILED_MAX_N = 63

_choice = os.environ.get("SECDOM_BACKEND", "auto").strip().lower() or "auto"
if _choice not in {"auto", "pure", "compiled"}:
    raise RuntimeError(
        f"SECDOM_BACKEND must be auto, pure or compiled (got {_choice!r})"
    )

_compiled = None
if _choice != "pure":
    try:
        from . import _core as _compiled  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "compiled" if HAVE_COMPILED else "pure"


def _impl(n: int):
    if _compiled is not None and n <= _COMPILED_MAX_N:
        return _compiled
    return _core_py


def alpha_size(adj: Sequence[int], n: int, cand: int) -> int:
    return _impl(n).alpha_size(adj, n, cand)


def alpha_set_mask(adj: Sequence[int], n: int) -> int:
    return _impl(n).alpha_set_mask(adj, n)


def min_dominating_mask(adj: Sequence[int], n: int) -> int:
    return _impl(n).min_dominating_mask(adj, n)


def min_secure_mask(adj: Sequence[int], n: int, k_start: int) -> int:
    return _impl(n).min_secure_mask(adj, n, k_start)


def find_induced(gadj: Sequence[int], n: int, padj: Sequence[int], k: int) -> tuple[int, ...] | None:
    return _impl(n).find_induced(gadj, n, padj, k)
