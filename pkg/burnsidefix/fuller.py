"""
fuller.py
=========

The equivariant Fuller index of a G-flow, an element of the rationalized
Burnside ring ``A(G) ⊗ Q``, computed from hyperbolic periodic orbit data.

A single periodic orbit of multiplicity ``m`` with equivariant Poincaré map
``P`` contributes ``L_G(P^m) / m``. ``L_G(P^m)`` is the Lefschetz class of the
one fixed orbit of ``P^m``, so it is the induced degree of ``id − P^m`` from
the orbit's spatial isotropy. Contributions of several orbits add up.

``η_H(F) ≠ 0`` forces a periodic orbit of orbit type at least ``(H)``; see
:func:`fuller_detect`.

**Example**::

    from burnsidefix.named_groups import cyclic_group
    from burnsidefix.permutations import trivial_subgroup
    from burnsidefix.representations import EquivariantLinearMap, rep_from_generators
    from burnsidefix.fuller import PeriodicOrbitDatum, fuller_single

    e = cyclic_group(1)
    H = trivial_subgroup(e)
    line = rep_from_generators(H.as_group, 1, [])
    orbit = PeriodicOrbitDatum(H, line, EquivariantLinearMap(line, [["1/2"]]), 3)
    print(fuller_single(e, orbit))   # 1/3·[e/e]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .burnside import (
    RationalBurnsideElement,
    rational_eta,
    rational_from_marks,
    rational_scale,
)
from .exceptions import SubgroupMismatchError
from .lefschetz import FixedOrbitDatum, lefschetz_from_orbits, orbit_marks
from .permutations import FiniteGroup, Subgroup, subgroup_classes
from .representations import EquivariantLinearMap, RationalRepresentation, matrix_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodicOrbitDatum:
    """
    Local data of one hyperbolic periodic orbit.

    :ivar isotropy: Spatial isotropy ``H`` of the orbit.
    :ivar slice: Normal slice representation over ``isotropy.as_group``.
    :ivar poincare: Linearized H-equivariant Poincaré map at multiplicity one.
    :ivar multiplicity: Positive integer ``m``.

    As with :class:`FixedOrbitDatum`, the slice is matched through
    ``isotropy.as_group``.
    """

    isotropy: Subgroup
    slice: RationalRepresentation
    poincare: EquivariantLinearMap
    multiplicity: int = 1

    def __post_init__(self):
        m = self.multiplicity
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"Multiplicity must be a positive integer, got {m!r}.")
        if self.slice.group != self.isotropy.as_group:
            raise SubgroupMismatchError("Slice must be a representation of the isotropy group.")
        if self.poincare.rep != self.slice:
            raise SubgroupMismatchError("Poincaré map must act on the slice.")

    def iterate(self) -> FixedOrbitDatum:
        """The orbit seen as a fixed orbit of ``P^m``."""
        return FixedOrbitDatum(
            self.isotropy, self.slice, matrix_power(self.poincare, self.multiplicity)
        )


def fuller_single(G: FiniteGroup, d: PeriodicOrbitDatum) -> RationalBurnsideElement:
    """
    ``L_G(P^m) ⊗ 1/m`` for one orbit.

    Args:
        G (FiniteGroup): the symmetry group of the flow.
        d (PeriodicOrbitDatum): the orbit, its slice and its Poincaré map.

    Returns:
        RationalBurnsideElement: the contribution of the orbit to the index.

    Raises:
        SingularMapError: if ``id − P^m`` is singular (a resonant orbit).
    """
    lefschetz = lefschetz_from_orbits(G, [d.iterate()])
    return rational_scale(
        Fraction(1, d.multiplicity), RationalBurnsideElement.from_integral(lefschetz)
    )


def fuller_sum(G: FiniteGroup, data: Sequence[PeriodicOrbitDatum]) -> RationalBurnsideElement:
    """
    Sum the contributions of all periodic orbits.

    Args:
        G (FiniteGroup): the symmetry group of the flow.
        data (Sequence[PeriodicOrbitDatum]): one datum per periodic orbit.

    Returns:
        RationalBurnsideElement: the Fuller index, zero for no orbits.
    """
    total = RationalBurnsideElement.zero(G)
    for i, d in enumerate(data):
        contribution = fuller_single(G, d)
        logger.debug("Periodic orbit %d (m=%d) contributes %s", i, d.multiplicity, contribution)
        total = total + contribution
    return total


def fuller_marks(G: FiniteGroup, d: PeriodicOrbitDatum) -> tuple[Fraction, ...]:
    """
    Stratum-wise indices ``L((P^H)^m) / m`` of one orbit, computed by summing
    local fixed point indices rather than through the Burnside ring.
    """
    return tuple(
        Fraction(v, d.multiplicity) for v in orbit_marks(G, [d.iterate()]).values
    )


def fuller_from_marks(G: FiniteGroup, values: Sequence) -> RationalBurnsideElement:
    """The element of ``A(G) ⊗ Q`` with the given rational stratum indices."""
    return rational_from_marks(G, values)


def fuller_detect(G: FiniteGroup, H: Subgroup, F: RationalBurnsideElement) -> bool:
    """
    True iff ``η_H(F) ≠ 0``, in which case the flow has a periodic orbit of
    orbit type at least ``(H)``.
    """
    return not rational_eta(G, H, F).is_zero()


def fuller_detect_all(G: FiniteGroup, F: RationalBurnsideElement) -> tuple[bool, ...]:
    """:func:`fuller_detect` for every subgroup class, in canonical order."""
    return tuple(fuller_detect(G, H, F) for H in subgroup_classes(G))
