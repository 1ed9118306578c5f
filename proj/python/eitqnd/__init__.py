"""EIT cross-Kerr / QND simulator: python surface over the C++ core."""

try:
    from eitqnd._eitqnd import *  # noqa: F401,F403  (installed layout)
    from eitqnd._eitqnd import __doc__ as _core_doc
except ImportError:  # in-tree build: extension sits on PYTHONPATH directly
    from _eitqnd import *  # noqa: F401,F403
    from _eitqnd import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
