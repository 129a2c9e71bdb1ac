"""
lefschetz.py
============

The equivariant Lefschetz number ``L_G(f) ∈ A(G)`` of a G-map, assembled
from data that can actually be written down.

There are two routes, and they agree:

1. **Orbit route** (:func:`lefschetz_from_orbits`): every isolated fixed
   orbit ``G·x`` contributes the induced equivariant degree
   ``t^G_{G_x}(Deg_{G_x}(id − N_x f))``, where ``N_x f`` is the normal part of
   the derivative on the slice at ``x``.

2. **Marks route** (:func:`lefschetz_from_marks`): the ordinary Lefschetz
   numbers ``L(f^H)`` of the fixed point maps, one per subgroup class, are
   exactly the marks of ``L_G(f)``. They can come from any source, including
   cellular chain maps through :func:`hopf_lefschetz` and
   :func:`lefschetz_from_cellular`.

:func:`check_restriction` and :func:`restriction_report` compare a computed
class against its fixed point data and the vanishing of ``η_H`` on maps
without fixed points of orbit type at least ``(H)``.

**Example**::

    from burnsidefix.named_groups import cyclic_group
    from burnsidefix.burnside import MarkVector
    from burnsidefix.lefschetz import lefschetz_from_marks

    c2 = cyclic_group(2)
    print(lefschetz_from_marks(MarkVector(c2, (-1, 1))))   # [G/G] − [G/e]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np
import pandas as pd
from sympy import ImmutableMatrix

from .burnside import (
    BurnsideElement,
    MarkVector,
    class_label,
    eta,
    from_marks,
    induce,
    marks,
)
from .exceptions import ChainMapViolation, SubgroupMismatchError
from .permutations import FiniteGroup, Subgroup, coset_action, subgroup_classes
from .representations import (
    EquivariantLinearMap,
    RationalRepresentation,
    equivariant_degree,
    fixed_subspace,
)
from .utils import integer_array, restricted_det_sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FixedOrbitDatum:
    """
    Local data of one isolated fixed orbit ``G·x``.

    :ivar isotropy: The stabilizer ``G_x`` as a subgroup of ``G``.
    :ivar slice: The normal representation at ``x``, over ``isotropy.as_group``.
    :ivar normal_derivative: The normal part ``N_x f`` of the derivative.

    The slice is matched to the isotropy through its regular realization
    ``isotropy.as_group``, so conjugate isotropy subgroups with the same
    realization accept the same slice.
    """

    isotropy: Subgroup
    slice: RationalRepresentation
    normal_derivative: EquivariantLinearMap

    def __post_init__(self):
        if self.slice.group != self.isotropy.as_group:
            raise SubgroupMismatchError("Slice must be a representation of the isotropy group.")
        if self.normal_derivative.rep != self.slice:
            raise SubgroupMismatchError("Normal derivative must act on the slice.")


def lefschetz_from_orbits(G: FiniteGroup, data: Sequence[FixedOrbitDatum]) -> BurnsideElement:
    """
    Sum the induced local degrees ``t^G_{G_x}(Deg(id − N_x f))`` over the
    fixed orbits.

    :raises SingularMapError: If some ``id − N_x f`` is singular.
    :raises SubgroupMismatchError: If an isotropy group is not a subgroup of ``G``.
    """
    total = BurnsideElement.zero(G)
    for i, d in enumerate(data):
        if d.isotropy.parent != G:
            raise SubgroupMismatchError(f"Isotropy of orbit {i} is not a subgroup of the group.")
        local = equivariant_degree(d.normal_derivative.complement())
        contribution = induce(G, d.isotropy, local)
        logger.debug("Orbit %d (isotropy order %d) contributes %s", i, d.isotropy.order, contribution)
        total = total + contribution
    return total


def lefschetz_from_marks(v: MarkVector) -> BurnsideElement:
    """
    The class whose marks are the given Lefschetz numbers ``L(f^H)``.

    :raises NotInImageError: If no element of ``A(G)`` has these marks.
    """
    return from_marks(v)


def orbit_marks(G: FiniteGroup, data: Sequence[FixedOrbitDatum]) -> MarkVector:
    """
    Brute-force marks of the orbit data, stratum by stratum.

    The mark at ``H`` sums the local indices of ``f^H`` over every fixed point
    ``g·x`` that ``H`` fixes. At such a point ``g^-1 H g`` lies in ``G_x`` and
    the index is ``sign det(id − N_x f)`` on the ``g^-1 H g``-fixed part of the
    slice. No Burnside ring arithmetic is involved.
    """
    classes = subgroup_classes(G)
    values = [0] * len(classes)
    for d in data:
        K = d.isotropy
        if K.parent != G:
            raise SubgroupMismatchError("Isotropy is not a subgroup of the group.")
        complement = d.normal_derivative.complement().matrix
        action = coset_action(G, K)
        for j, H in enumerate(classes):
            for point in action.fixed_points(H.members):
                g = action.points[point]
                conjugate = G.conjugate_set(G.inverses[g], H.members)
                local = Subgroup(K.as_group, tuple(sorted(K.local_index(k) for k in conjugate)))
                values[j] += restricted_det_sign(complement, fixed_subspace(d.slice, local))
    return MarkVector(G, tuple(values))


def _trace(m: np.ndarray) -> int:
    return sum(int(m[i, i]) for i in range(m.shape[0]))


def _product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    return a.dot(b)


def _rank(m: np.ndarray) -> int:
    if 0 in m.shape:
        return 0
    return ImmutableMatrix(m.tolist()).rank()


@dataclass(frozen=True, eq=False)
class ChainMapData:
    """
    A cellular self-map at chain level.

    ``chain_maps[k]`` is the square integer matrix of ``f_k`` on the k-cells.
    ``boundaries``, if given, lists ``∂_1, ..., ∂_top`` with ``∂_k`` of shape
    ``(cells[k-1], cells[k])``.
    """

    chain_maps: tuple[np.ndarray, ...]
    boundaries: tuple[np.ndarray, ...] | None = None

    def __post_init__(self):
        maps = []
        for rows in self.chain_maps:
            rows = rows.tolist() if isinstance(rows, np.ndarray) else list(rows)
            maps.append(integer_array(rows, (len(rows), len(rows))))
        object.__setattr__(self, "chain_maps", tuple(maps))
        if self.boundaries is None:
            return
        cells = self.cells
        if len(self.boundaries) != len(cells) - 1:
            raise ValueError(f"Expected {len(cells) - 1} boundary matrices, got {len(self.boundaries)}.")
        bounds = []
        for k, rows in enumerate(self.boundaries, start=1):
            rows = rows.tolist() if isinstance(rows, np.ndarray) else list(rows)
            bounds.append(integer_array(rows, (cells[k - 1], cells[k])))
        object.__setattr__(self, "boundaries", tuple(bounds))

    @property
    def cells(self) -> tuple[int, ...]:
        return tuple(m.shape[0] for m in self.chain_maps)

    @property
    def top(self) -> int:
        return len(self.chain_maps) - 1

    def boundary(self, k: int) -> np.ndarray:
        """``∂_k``; zero outside ``1..top`` or when no boundaries were given."""
        cells = self.cells
        rows = cells[k - 1] if k >= 1 else 0
        cols = cells[k] if k <= self.top else 0
        if self.boundaries is None or not 1 <= k <= self.top:
            return np.zeros((rows, cols), dtype=object)
        return self.boundaries[k - 1]

    def validate(self) -> None:
        """
        :raises ChainMapViolation: If ``∂∂ ≠ 0`` or ``f ∂ ≠ ∂ f``.
        """
        if self.boundaries is None:
            return
        for k in range(2, self.top + 1):
            if np.any(_product(self.boundary(k - 1), self.boundary(k)) != 0):
                raise ChainMapViolation(f"Boundary composite ∂{k - 1}∂{k} is not zero.")
        for k in range(1, self.top + 1):
            left = _product(self.chain_maps[k - 1], self.boundary(k))
            right = _product(self.boundary(k), self.chain_maps[k])
            if np.any(left != right):
                raise ChainMapViolation(f"Chain map does not commute with ∂{k}.")


def hopf_lefschetz(c: ChainMapData) -> int:
    """
    Alternating sum of chain-level traces ``Σ (−1)^k tr f_k``, which equals
    the trace on rational homology.

    :raises ChainMapViolation: If supplied boundaries fail the chain conditions.
    """
    c.validate()
    return sum((-1) ** k * _trace(m) for k, m in enumerate(c.chain_maps))


def betti_numbers(c: ChainMapData) -> tuple[int, ...]:
    """
    Rational Betti numbers ``cells_k − rank ∂_k − rank ∂_{k+1}``.

    :raises ValueError: If no boundary matrices were given.
    """
    if c.boundaries is None:
        raise ValueError("Betti numbers need boundary matrices.")
    c.validate()
    return tuple(
        n - _rank(c.boundary(k)) - _rank(c.boundary(k + 1)) for k, n in enumerate(c.cells)
    )


def euler_characteristic(c: ChainMapData) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.cells))


def lefschetz_from_cellular(G: FiniteGroup, chains: Sequence[ChainMapData]) -> BurnsideElement:
    """
    Assemble ``L_G(f)`` from one chain map per subgroup class, each describing
    ``f^H`` on the H-fixed subcomplex, in canonical class order.

    :raises ValueError: If the number of chain maps does not match the classes.
    :raises NotInImageError: If the traces are not the marks of any element.
    """
    values = tuple(hopf_lefschetz(c) for c in chains)
    logger.debug("Cellular Lefschetz marks %s", values)
    return lefschetz_from_marks(MarkVector(G, values))


@dataclass(frozen=True)
class RestrictionReport:
    """
    Outcome of comparing a Lefschetz class with fixed point data at one
    subgroup class.

    :ivar vanishing_ok: ``None`` when no fixed point freeness was asserted.
    """

    class_index: int
    label: str
    mark: int
    expected: int
    eta: BurnsideElement
    marks_ok: bool
    eta_ok: bool
    vanishing_ok: bool | None

    @property
    def passed(self) -> bool:
        return self.marks_ok and self.eta_ok and self.vanishing_ok is not False


def check_restriction(
    G: FiniteGroup,
    H: Subgroup,
    L: BurnsideElement,
    fixed_marks: MarkVector,
    fixed_point_free: bool = False,
) -> RestrictionReport:
    """
    Check ``L`` against the fixed point Lefschetz numbers at ``H``.

    - the mark of ``L`` at ``H`` equals ``fixed_marks`` at ``H``;
    - ``η_H(L)`` has that same number as its trivial mark, i.e. its
      underlying non-equivariant Lefschetz number is ``L(f^H)``;
    - with ``fixed_point_free``, ``η_H(L) = 0``.
    """
    if L.group != G or fixed_marks.group != G:
        raise SubgroupMismatchError("Element and marks must live over the given group.")
    classes = subgroup_classes(G)
    j = classes.index_of(H)
    mark = marks(L).values[j]
    expected = fixed_marks.values[j]
    restricted = eta(G, H, L)
    report = RestrictionReport(
        class_index=j,
        label=class_label(classes, j),
        mark=mark,
        expected=expected,
        eta=restricted,
        marks_ok=mark == expected,
        eta_ok=marks(restricted).values[0] == expected,
        vanishing_ok=restricted.is_zero() if fixed_point_free else None,
    )
    if not report.passed:
        logger.info("Restriction check failed at %s: %s", report.label, report)
    return report


def restriction_report(
    G: FiniteGroup,
    L: BurnsideElement,
    fixed_marks: MarkVector,
    fixed_point_free: Collection[int] = (),
) -> pd.DataFrame:
    """
    Run :func:`check_restriction` for every subgroup class.

    :param fixed_point_free: Class indices at which the map is asserted to
        have no fixed points of orbit type at least ``(H)``.
    :return: One row per class with the mark comparison, ``η_H(L)`` and the
        pass/fail columns.
    """
    rows = []
    for j, H in enumerate(subgroup_classes(G)):
        r = check_restriction(G, H, L, fixed_marks, j in fixed_point_free)
        rows.append(
            {
                "class": r.label,
                "order": H.order,
                "mark": r.mark,
                "expected": r.expected,
                "eta": str(r.eta),
                "marks_ok": r.marks_ok,
                "eta_ok": r.eta_ok,
                "vanishing_ok": r.vanishing_ok,
                "passed": r.passed,
            }
        )
    return pd.DataFrame(rows)
