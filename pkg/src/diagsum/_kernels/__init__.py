"""Computational kernel selection.

Two interchangeable implementations of the heavy kernels live here: a
numba-jitted one (``numba_impl``) and a pure-numpy one (``numpy_impl``).
The environment variable ``DIAGSUM_BACKEND`` picks between them:

* ``auto`` (default): numba when importable, else numpy;
* ``numba``: require numba, fail loudly if it cannot be imported;
* ``numpy``: always use the pure-numpy fallback.

Both backends expose the same functions with identical contracts and
agree to float rounding; ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os

_choice = os.environ.get("DIAGSUM_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"DIAGSUM_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    from . import numpy_impl as _impl
else:
    try:
        from . import numba_impl as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "numba":
            raise RuntimeError(
                "DIAGSUM_BACKEND=numba but the numba backend failed to import"
            )
        from . import numpy_impl as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.NAME

lattice_diag_sum = _impl.lattice_diag_sum
atomic_diag_sum = _impl.atomic_diag_sum
lattice_pair_nu = _impl.lattice_pair_nu
lattice_pair_zeta = _impl.lattice_pair_zeta
atomic_pair_zeta = _impl.atomic_pair_zeta
gnhaf_raw = _impl.gnhaf_raw
haf_raw = _impl.haf_raw

__all__ = [
    "BACKEND",
    "lattice_diag_sum",
    "atomic_diag_sum",
    "lattice_pair_nu",
    "lattice_pair_zeta",
    "atomic_pair_zeta",
    "gnhaf_raw",
    "haf_raw",
]
