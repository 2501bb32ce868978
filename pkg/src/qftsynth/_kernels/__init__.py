"""Kernel backend selection.

The compiled Cython kernels are preferred; the numpy implementations are
the fallback when the extension was not built.  Set ``QFTSYNTH_NO_EXT=1``
in the environment to force the numpy backend (useful for benchmarking
and debugging).
"""

import os

from . import _pykernels

if os.environ.get("QFTSYNTH_NO_EXT"):
    _active = _pykernels
else:
    try:
        from . import _ckernels as _active  # type: ignore[no-redef]
    except ImportError:
        _active = _pykernels

BACKEND = "cython" if _active is not _pykernels else "python"

hadamard = _active.hadamard
controlled_phase = _active.controlled_phase
swap = _active.swap
butterfly_stage = _active.butterfly_stage


def available_backends() -> dict:
    """Name -> kernel module for every backend importable in this build."""
    backends = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        backends["cython"] = _ckernels
    return backends
