"""Exact-arithmetic multi-point Krichever-Novikov algebras at genus zero.

Basis construction with prescribed vanishing orders, residue duality,
function and vector-field algebras with their geometric cocycles, affine
central extensions, induced highest-weight modules, Sugawara operators and
the formal Knizhnik-Zamolodchikov system on the configuration space of
marked points of the rational curve.  All arithmetic is exact over Q.
"""

from ._kernel import BACKEND, Rat
from .basis import (Config, GradedElement, KNIndex, Section, expand_in_basis,
                    homogeneous_dimension, kn_basis_element, kn_basis_record,
                    kn_pairing)
from .ratfield import (INFINITY, Poly, RationalFunction, local_expansion,
                       order_at, residue_at)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Rat", "INFINITY", "Poly", "RationalFunction",
    "order_at", "residue_at", "local_expansion",
    "Config", "KNIndex", "Section", "GradedElement",
    "kn_basis_element", "kn_basis_record", "kn_pairing", "expand_in_basis",
    "homogeneous_dimension", "__version__",
]
