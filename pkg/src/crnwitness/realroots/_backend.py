"""Pick the compiled kernels when importable, else the pure-Python ones.

Set ``CRNWITNESS_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
kernels = _kernels_py

if os.environ.get("CRNWITNESS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

primitive = kernels.primitive
prem_pos = kernels.prem_pos
sign_at = kernels.sign_at
variations = kernels.variations
variations_inf = kernels.variations_inf
