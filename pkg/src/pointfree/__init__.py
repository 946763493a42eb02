"""Frames, filters, sublocales and Raney extensions, computed exactly on finite frames
and symbolically on the cofinite topology of the naturals."""

from .errors import (
    InvalidStructure, NotPrime, NotT0, PointfreeError, SizeCapExceeded, UndecidableMembership,
    UnsupportedFamily, UnsupportedRepresentation,
)
from .frames import CofiniteFrame, FiniteFrame
from .order import FiniteLattice, FinitePoset, boolean_lattice, chain, downset_lattice
from .raney import (
    Check, Explicit, Named, RaneyExt, extend_morphism, property_suite, sobrification, spectrum,
    td_reflection, unique_extension, validate_raney,
)
from .spaces import COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC, FiniteSpace, omega_r
from .sublocales import SublocaleLattice

__all__ = [
    "PointfreeError", "InvalidStructure", "NotPrime", "NotT0", "SizeCapExceeded", "UndecidableMembership",
    "UnsupportedFamily", "UnsupportedRepresentation", "CofiniteFrame", "FiniteFrame", "FiniteLattice",
    "FinitePoset", "boolean_lattice", "chain", "downset_lattice", "Check", "Explicit", "Named", "RaneyExt",
    "extend_morphism", "property_suite", "sobrification", "spectrum", "td_reflection", "unique_extension",
    "validate_raney", "COFINITE_NAT", "COFINITE_NAT_PLUS_GENERIC", "FiniteSpace", "omega_r", "SublocaleLattice",
]
