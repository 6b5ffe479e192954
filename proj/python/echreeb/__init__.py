"""Reeb dynamics, nondegenerate orbit catalogs and index calculus for
rotation-invariant contact forms on S1 x S2.

The heavy lifting lives in the compiled extension ``_echreeb``; this package
re-exports its surface.
"""

try:
    from ._echreeb import *  # noqa: F401,F403
    from ._echreeb import __version__  # noqa: F401
except ImportError:  # extension on sys.path rather than inside the package
    from _echreeb import *  # noqa: F401,F403
    from _echreeb import __version__  # noqa: F401
