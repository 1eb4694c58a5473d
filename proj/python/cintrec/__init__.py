"""Passive-array imaging in random media.

Thin wrapper over the compiled extension: interferometric imaging of
sound sources through a random medium and reconstruction of source
constellations from pairwise offset vectors.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from cintrec_core import *  # noqa: F401,F403  (build-tree layout)
