"""Exact circulant-lattice, braid-linking and two-bridge computations."""

try:
    from covercalc._core import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension next to the package dir
    from _core import *  # noqa: F401,F403
