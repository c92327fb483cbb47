"""Pick the search kernel at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` takes over. Set ``QUASITRUTH_PURE_PYTHON=1`` to
force the fallback.
"""

import os

from . import _kernel_py

EXHAUSTED, FOUND, DONE = _kernel_py.EXHAUSTED, _kernel_py.FOUND, _kernel_py.DONE

_compiled = None
if not os.environ.get("QUASITRUTH_PURE_PYTHON"):
    try:
        from . import _kernel as _compiled
    except ImportError:
        _compiled = None

BACKENDS = {"python": _kernel_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

BACKEND = "cython" if _compiled is not None else "python"
_impl = BACKENDS[BACKEND]


def get_backend(name=None):
    """The kernel module for ``name`` (default: the active one)."""
    if name is None:
        return _impl
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available "
                         f"(have {sorted(BACKENDS)})") from None


def run(ps, find, budget, collect=False, backend=None):
    """Run a search over a packed :class:`~quasitruth.grounding.ProgramSet`."""
    impl = get_backend(backend)
    return impl.search(ps.k, ps.code, ps.starts, ps.ends, ps.level_ptr,
                       ps.level_progs, ps.min_trigger, find, budget, collect)
