"""Low-energy planar cluster toolkit.

Circular-arc curve functionals, rigorous scalar-inequality certification,
hexagon shape fitting, spiral honeycomb generation and the immersed-polygon
isoperimetric inequality.  Clusters travel as version-1 JSON text; curves as
(nodes, bulges) pairs.
"""

try:
    from ._hexakit import *  # noqa: F401,F403
    from ._hexakit import __doc__ as _native_doc  # noqa: F401
except ImportError:  # development tree: extension built next to the package
    from _hexakit import *  # noqa: F401,F403

__version__ = "0.1.0"
