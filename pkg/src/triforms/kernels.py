"""Backend selection and safety guard for the hot counting kernels.

The compiled extension ``triforms._countcore`` is used when it imported
cleanly; otherwise the NumPy fallback ``triforms._countpy`` takes over.
Set ``TRIFORMS_BACKEND=python`` (or ``c``) to force a choice.  Both
backends implement the same two table functions and must agree exactly.

Before dispatching, every call is checked against conservative worst-case
intermediate magnitudes so the int64 arithmetic inside the kernels can
never overflow; inputs outside that envelope raise RangeError.
"""

from __future__ import annotations

import os
from math import isqrt

from .forms import InvalidFormError, RangeError

_INT64_SAFE = 2**61   # 4x headroom under int64 for the one-step root fixups

_requested = os.environ.get("TRIFORMS_BACKEND", "").strip().lower()
if _requested in ("python", "py", "pure"):
    from . import _countpy as _impl
    BACKEND = "python"
elif _requested in ("c", "ext", "cython", "compiled"):
    from . import _countcore as _impl  # noqa: F401  (ImportError is the answer)
    BACKEND = "c"
elif _requested:
    raise ValueError(f"unknown TRIFORMS_BACKEND={_requested!r}")
else:
    try:
        from . import _countcore as _impl
        BACKEND = "c"
    except ImportError:
        from . import _countpy as _impl
        BACKEND = "python"


def backend_name() -> str:
    return BACKEND


def _guard_ternary(q, limit: int) -> None:
    """Reject inputs whose kernel intermediates could leave int64.

    Mirrors, in exact Python arithmetic and with padded loop bounds, every
    quantity the compiled loops form: the scaled z-bound numerator, the
    factored y-discriminant, root-fixup evaluations, and the x-row values.
    """
    q11, q22, q33, q23, q13, q12 = q
    a2 = 4 * q11 * q22 - q12 * q12
    b2 = 4 * q11 * q23 - 2 * q12 * q13
    c2 = 4 * q11 * q33 - q13 * q13
    e2 = 4 * a2 * c2 - b2 * b2
    if a2 <= 0 or e2 <= 0:
        raise InvalidFormError("table kernel requires a positive definite form")
    l16 = 16 * a2 * q11 * limit
    zb = isqrt(l16 // e2) + 2
    sy = isqrt(l16) + 1
    yb = (abs(b2) * zb + sy) // (2 * a2) + 2
    bb = abs(q12) * yb + abs(q13) * zb
    cc = abs(q22) * yb * yb + abs(q23) * yb * zb + abs(q33) * zb * zb
    dx = bb * bb + 4 * q11 * (cc + limit)
    xb = (bb + isqrt(dx)) // (2 * q11) + 2
    worst = max(
        l16,
        e2 * zb * zb,
        a2 * yb * yb + abs(b2) * zb * yb + abs(c2) * zb * zb + 4 * q11 * limit,
        dx,
        q11 * xb * xb + bb * xb + cc + limit,
    )
    if worst >= _INT64_SAFE:
        raise RangeError("inputs exceed the exact int64 kernel domain")


def _guard_binary(p, limit: int) -> None:
    p11, p22, p12 = p
    a2 = 4 * p11 * p22 - p12 * p12
    if p11 <= 0 or a2 <= 0:
        raise InvalidFormError("table kernel requires a positive definite form")
    l4 = 4 * p11 * limit
    yb = isqrt(l4 // a2) + 2
    bb = abs(p12) * yb
    cc = abs(p22) * yb * yb
    xb = (bb + isqrt(l4) + 1) // (2 * p11) + 2
    worst = max(
        l4,
        a2 * yb * yb,
        p11 * xb * xb + bb * xb + cc + limit,
    )
    if worst >= _INT64_SAFE:
        raise RangeError("inputs exceed the exact int64 kernel domain")


def _parity_flags(parity, rank: int):
    if parity is None:
        return (-1,) * rank
    flags = tuple(parity)
    if len(flags) != rank or any(f not in (0, 1) for f in flags):
        raise ValueError(f"parity must be {rank} residues in {{0,1}}, got {parity!r}")
    return flags


def ternary_table(coeffs, limit: int, parity=None):
    """r[m] for m in [0, limit] for a ternary form, computed by the backend."""
    if limit < 0:
        raise RangeError("limit must be nonnegative")
    _guard_ternary(coeffs, limit)
    px, py, pz = _parity_flags(parity, 3)
    return _impl.ternary_table(*coeffs, limit, px, py, pz)


def binary_table(coeffs, limit: int, parity=None):
    """r[m] for m in [0, limit] for a binary form, computed by the backend."""
    if limit < 0:
        raise RangeError("limit must be nonnegative")
    _guard_binary(coeffs, limit)
    px, py = _parity_flags(parity, 2)
    return _impl.binary_table(*coeffs, limit, px, py)
