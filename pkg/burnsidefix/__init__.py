"""
burnsidefix
===========

Exact Burnside ring arithmetic for equivariant fixed point theory of finite
groups: tables of marks, equivariant degrees of linear maps, equivariant
Lefschetz numbers and equivariant Fuller indices.

Submodules:
  - permutations    : Permutation groups, subgroup classes, Weyl groups, coset actions.
  - named_groups    : Cyclic, dihedral, symmetric and alternating groups by name.
  - burnside        : Burnside ring, table of marks, induction, restriction, η_H.
  - representations : Rational representations and the equivariant degree.
  - lefschetz       : Equivariant Lefschetz numbers from orbits, marks or chains.
  - fuller          : Equivariant Fuller index of periodic orbit data.
  - utils           : Exact fraction and matrix helpers.
  - exceptions      : Error hierarchy.
  - cli             : (Subpackage) Scene documents and the command line tool.

Exposed API:
  - FiniteGroup, Permutation, Subgroup, group_closure, subgroup_classes
  - named_group
  - BurnsideElement, RationalBurnsideElement, MarkVector, table_of_marks,
    marks, from_marks, induce, restrict, eta
  - RationalRepresentation, EquivariantLinearMap, rep_from_generators,
    equivariant_degree
  - FixedOrbitDatum, ChainMapData, lefschetz_from_orbits,
    lefschetz_from_marks, hopf_lefschetz
  - PeriodicOrbitDatum, fuller_single, fuller_sum, fuller_detect
"""

from .permutations import FiniteGroup, Permutation, Subgroup, group_closure, subgroup_classes
from .named_groups import named_group
from .burnside import (
    BurnsideElement,
    MarkVector,
    RationalBurnsideElement,
    eta,
    from_marks,
    induce,
    marks,
    restrict,
    table_of_marks,
)
from .representations import (
    EquivariantLinearMap,
    RationalRepresentation,
    equivariant_degree,
    rep_from_generators,
)
from .lefschetz import (
    ChainMapData,
    FixedOrbitDatum,
    hopf_lefschetz,
    lefschetz_from_marks,
    lefschetz_from_orbits,
)
from .fuller import PeriodicOrbitDatum, fuller_detect, fuller_single, fuller_sum
