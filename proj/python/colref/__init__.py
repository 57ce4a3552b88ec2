"""Colour refinement iteration toolkit.

Thin wrapper re-exporting the native module. Works both installed (the
extension lives inside this package) and from a build tree (extension on
sys.path).
"""

try:
    from ._colref import *  # noqa: F401,F403
    from ._colref import __doc__  # noqa: F401
except ImportError:  # build-tree layout
    from _colref import *  # noqa: F401,F403
    from _colref import __doc__  # noqa: F401

__version__ = "0.1.0"
