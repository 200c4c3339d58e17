"""Steady-state spectroscopy toolkit for a driven four-level N-type atom.

The compiled core lives in ``_neit``; this package re-exports it. When the
package is importable but the extension was built out of tree (the CMake
build directory), the top-level module on ``sys.path`` is used instead.
"""

try:
    from ._neit import *  # noqa: F401,F403
    from ._neit import __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _neit import *  # noqa: F401,F403
    from _neit import __version__  # noqa: F401
