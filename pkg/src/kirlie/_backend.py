"""Select the row-reduction backend at import time.

The compiled extension is used when it was built; otherwise the pure-Python
kernels are used.  Setting ``KIRLIE_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
rref_mod_p = _pykernels.rref_mod_p
rref_generic = _pykernels.rref_generic

if not os.environ.get("KIRLIE_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        rref_mod_p = _ckernels.rref_mod_p
        rref_generic = _ckernels.rref_generic
