"""Exact Burnside-ring power operations, deflations and beta-rings for finite groups."""

from .beta import (OperatorElement, OperatorElement2, Phi, check_additive_axioms, check_beta_axioms,
                   check_morphisms, plethysm, theta, theta2, theta_closed, times2, transfer_product)
from .burnside import BurnsideElement, decompose, from_marks, subgroup_classes
from .config import (BurnsideError, DegreeExceeded, GroupTooLarge, NoPowerStructure, NotIntegral,
                     RingMismatch, SetTooLarge, bounds, override)
from .global_ops import (check_pairing_axioms, check_power_identities, deflate, exp_sequence,
                         external_product, pairing, power, restrict, restricted_power, transfer)
from .group_core import (GroupHom, PermGroup, Subgroup, cyclic_group, direct_product, symmetric_group,
                         wreath_product)
from .gset import GSet, cosets
from .obstructions import check_induced_candidate, obstruction_gaussian, obstruction_zmodn
from .parsing import parse_element, parse_group, parse_operator
from .rings import QI, QQ, ZI, ZZ, Gaussian, ZMod

__all__ = [
    "BurnsideElement", "decompose", "from_marks", "subgroup_classes",
    "GroupHom", "PermGroup", "Subgroup", "cyclic_group", "direct_product", "symmetric_group", "wreath_product",
    "GSet", "cosets",
    "restrict", "transfer", "deflate", "external_product", "power", "restricted_power", "exp_sequence",
    "pairing", "check_pairing_axioms", "check_power_identities",
    "OperatorElement", "OperatorElement2", "Phi", "times2", "transfer_product", "plethysm",
    "theta", "theta_closed", "theta2", "check_beta_axioms", "check_additive_axioms", "check_morphisms",
    "obstruction_zmodn", "obstruction_gaussian", "check_induced_candidate",
    "parse_group", "parse_element", "parse_operator",
    "ZZ", "QQ", "ZI", "QI", "Gaussian", "ZMod",
    "BurnsideError", "GroupTooLarge", "SetTooLarge", "NotIntegral", "RingMismatch", "DegreeExceeded",
    "NoPowerStructure", "bounds", "override",
]

__version__ = "0.1.0"
