"""Kashiwara crystals of type A_n: multisegments for B(infinity), semistandard
tableaux for B(lambda), Lusztig data for one fixed reduced word, the maps
between them, and exhaustive checks of the identities relating them."""

from .core import (
    BudgetError,
    CrystalError,
    IntegrityError,
    ParseError,
    UsageError,
    ValidationError,
    jump,
    pairing,
    phi_from_eps,
)
from .multisegment import EXAMPLE_RANK5, Multisegment, Segment, flip, shift_down, sigma, sigma_chain, sigma_chain_trace
from .pbw import LusztigDatum, block_shift, phi, phi_inv, root_order
from .tableau import Tableau, embed, enumerate_ssyt, highest_weight_tableau

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CrystalError",
    "EXAMPLE_RANK5",
    "IntegrityError",
    "LusztigDatum",
    "Multisegment",
    "ParseError",
    "Segment",
    "Tableau",
    "UsageError",
    "ValidationError",
    "block_shift",
    "embed",
    "enumerate_ssyt",
    "flip",
    "highest_weight_tableau",
    "jump",
    "pairing",
    "phi",
    "phi_from_eps",
    "phi_inv",
    "root_order",
    "shift_down",
    "sigma",
    "sigma_chain",
    "sigma_chain_trace",
]
