"""Logarithmic-gate-count circuits for uniform and block-uniform superposition
states, backed by a C++ core with a dense statevector oracle."""

try:
    from ._qusp import *  # noqa: F401,F403  (installed package layout)
    from . import _qusp as _impl
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _qusp import *  # noqa: F401,F403
    import _qusp as _impl

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
