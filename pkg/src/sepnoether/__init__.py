"""Zero-sum sequences, group atoms and separating Noether numbers of finite abelian groups."""

from .block_monoid import (
    ElementTuple,
    ZsVector,
    atoms_up_to,
    davenport,
    enumerate_up_to,
    is_atom,
)
from .errors import BudgetExceeded, NotZeroSum, ParseError
from .group_atom import GroupAtomVerdict, is_group_atom, max_group_atom_length
from .group_core import FiniteAbelianGroup, GroupElement, add, enumerate_elements, order_of, scalar_mul
from .noether import SepNoetherResult, beta_sep, verify_main_theorem
from .zlattice import IntLattice, contains, normal_form, witness

__all__ = [
    "BudgetExceeded", "ElementTuple", "FiniteAbelianGroup", "GroupAtomVerdict", "GroupElement",
    "IntLattice", "NotZeroSum", "ParseError", "SepNoetherResult", "ZsVector", "add", "atoms_up_to",
    "beta_sep", "contains", "davenport", "enumerate_elements", "enumerate_up_to", "is_atom",
    "is_group_atom", "max_group_atom_length", "normal_form", "order_of", "scalar_mul",
    "verify_main_theorem", "witness",
]
