"""Strongly quasipositive braid closures: Seifert forms, root lattices and L-space obstructions."""

from .baskets import CyclicBasket, cyclic_alexander, cyclic_lk, cyclic_report
from .braid_core import BraidWord, Band, delta, equal, normal_form, parse_braid
from .invariants import (
    alexander,
    conway,
    is_definite_link,
    least_obstructed_n,
    lspace_obstructed,
    nabla_pqr,
    signature,
)
from .lattice import SymmetricForm, classify_root_lattice, congruent, definiteness
from .poly import IntPolynomial
from .seifert import SeifertMatrix, qp_seifert_matrix, seifert_matrix, symmetrize
from .three_braids import b_pqr, classify_definite_3braid, minimal_representative, murasugi_form

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BraidWord",
    "CyclicBasket",
    "IntPolynomial",
    "SeifertMatrix",
    "SymmetricForm",
    "alexander",
    "b_pqr",
    "classify_definite_3braid",
    "classify_root_lattice",
    "congruent",
    "conway",
    "cyclic_alexander",
    "cyclic_lk",
    "cyclic_report",
    "definiteness",
    "delta",
    "equal",
    "is_definite_link",
    "least_obstructed_n",
    "lspace_obstructed",
    "minimal_representative",
    "murasugi_form",
    "nabla_pqr",
    "normal_form",
    "parse_braid",
    "qp_seifert_matrix",
    "seifert_matrix",
    "signature",
    "symmetrize",
]
