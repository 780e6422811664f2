"""Exact multiplicity computations for nilpotent cone components.

The toolkit works with type (1,...,1) fixed-point chains of Higgs
bundles on a curve of genus g >= 2: stability and very-stability tests,
Hecke-transform rewrites, virtual equivariant multiplicities as exact
integer polynomials, and the parallel multiplicity formulas for simple
Lie groups built on a self-contained root system engine.  All
arithmetic is exact; nothing here touches floating point.
"""

__version__ = "0.1.0"
