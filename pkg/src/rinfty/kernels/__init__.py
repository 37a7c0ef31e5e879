"""Hot loops of the finite-group oracle.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Set ``RINFTY_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as pure

if os.environ.get("RINFTY_PURE_PYTHON"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

backend = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

matmul_mod = backend.matmul_mod
closure = backend.closure
action_perms = backend.action_perms
orbit_labels = backend.orbit_labels

__all__ = ["BACKEND", "pure", "compiled", "matmul_mod", "closure", "action_perms", "orbit_labels"]
