"""Select the compiled kernels when importable, else the pure-Python ones.

Set ``SPACEGRAPH_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("SPACEGRAPH_PURE") == "1":
    _native = None
else:
    try:
        from . import _ckernels as _native
    except ImportError:
        _native = None

if _native is not None:
    kernels = _native
    FindAnySet = _native.FindAnySet
    BACKEND = "cython"
else:
    from . import _pykernels as kernels
    from ._pyfindany import FindAnySet
    BACKEND = "python"


def available_backends():
    """Mapping backend name -> (kernels module, FindAnySet class)."""
    from . import _pykernels
    from ._pyfindany import FindAnySet as PyFindAny

    out = {"python": (_pykernels, PyFindAny)}
    try:
        from . import _ckernels
    except ImportError:
        return out
    out["cython"] = (_ckernels, _ckernels.FindAnySet)
    return out
