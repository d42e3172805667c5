"""Finite-semiring ideal decomposition toolkit.

Thin re-export of the compiled extension. When the package is installed,
the extension lives inside it; in a development tree the module is built
separately and found on PYTHONPATH.
"""

try:
    from ._kdecomp import *  # noqa: F401,F403
    from ._kdecomp import __doc__ as _ext_doc
except ImportError:
    from _kdecomp import *  # noqa: F401,F403
    from _kdecomp import __doc__ as _ext_doc

if _ext_doc:
    __doc__ = __doc__ + "\n\n" + _ext_doc
