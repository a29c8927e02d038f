"""Higman-Thompson groups V_n(G) with letterwise permutation tails.

Normal forms, orbit transducers, the isomorphism V_n(HG) -> V_n(G) for
semiregular H, fixed point dynamics and a small-degree classifier.
"""

from .permgrp import Perm, PermGroup, Transversal
from .words import EPPoint, epp, parse_point, format_point
from .elements import TableElement
from .transducers import SyncTransducer, build, build_inverse
from .conjugation import ConjugationContext, phi, phi_inverse

__version__ = "0.1.0"

__all__ = [
    "Perm", "PermGroup", "Transversal", "EPPoint", "epp", "parse_point", "format_point",
    "TableElement", "SyncTransducer", "build", "build_inverse",
    "ConjugationContext", "phi", "phi_inverse",
]
