"""L-away ACM bundles on del Pezzo surfaces: cohomology bookkeeping,
classification of line bundles and quiver dimension counts."""

__version__ = "0.1.0"
