"""Exact Schubert calculus, torsion indices and Tate-series splitting checks
for split reductive groups."""

from .rootdata import RootDatum, build_root_datum, load_root_datum
from .weyl import WeylElement, enumerate_weyl, longest_element
from .polynomial import Polynomial
from .intlat import CoeffRing, IntMatrix
from .torsion import TorsionReport, torsion_index, torsion_index_via_chevalley
from .tate import TateSeries

__version__ = "0.1.0"

__all__ = [
    "RootDatum",
    "build_root_datum",
    "load_root_datum",
    "WeylElement",
    "enumerate_weyl",
    "longest_element",
    "Polynomial",
    "CoeffRing",
    "IntMatrix",
    "TorsionReport",
    "torsion_index",
    "torsion_index_via_chevalley",
    "TateSeries",
    "__version__",
]
