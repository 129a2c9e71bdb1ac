"""
burnside.py
===========

The Burnside ring ``A(G)`` of a finite permutation group and its rational
extension ``A(G) ⊗ Q``.

Elements are coefficient vectors over the canonical subgroup classes of
:func:`~burnsidefix.permutations.subgroup_classes`: coefficient ``j``
multiplies the basis element ``[G/H_j]``. The *table of marks* turns every
element into its vector of fixed point counts, and this marks embedding is the
coordinate system for everything else:

- **Ring product**: :func:`mul` multiplies mark vectors pointwise and solves
  back with :func:`from_marks`.
- **Membership**: :func:`from_marks` solves the triangular marks system
  exactly and rejects non-integral solutions with
  :class:`~burnsidefix.exceptions.NotInImageError`.
- **Change of group**: :func:`induce` (``A(H) → A(G)``), :func:`restrict`
  (``A(G) → A(H)``) and the fixed point homomorphism :func:`eta`
  (``A(G) → A(W(H))``), the latter two computed from explicit G-sets.

Elements over a subgroup ``H`` live over ``H.as_group``, the left-regular
realization of ``H``, so nested rings such as ``A(H)`` and ``A(W(H))`` use the
same data types as ``A(G)``.

**Example**::

    from burnsidefix.named_groups import cyclic_group
    from burnsidefix.burnside import BurnsideElement, marks, from_marks

    c2 = cyclic_group(2)
    x = BurnsideElement.basis(c2, 0)          # [G/e]
    print(marks(x).values)                    # (2, 0)
    print(from_marks(marks(x * x)))           # 2·[G/e]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Sequence

import numpy as np
import pandas as pd
from sympy import ImmutableMatrix

from .exceptions import NotInImageError, SubgroupMismatchError
from .permutations import (
    FiniteGroup,
    GSetAction,
    Permutation,
    Subgroup,
    SubgroupClassList,
    coset_action,
    subgroup_classes,
    weyl_group,
)
from .utils import parse_fraction, to_fraction, to_rational

logger = logging.getLogger(__name__)


def class_label(classes: SubgroupClassList, j: int) -> str:
    """``e`` for the trivial class, ``G`` for the whole group, else ``H<j>(<order>)``."""
    order = classes[j].order
    if order == 1:
        return "e"
    if order == classes.group.order:
        return "G"
    return f"H{j}({order})"


def basis_label(classes: SubgroupClassList, j: int) -> str:
    ambient = "e" if classes.group.order == 1 else "G"
    return f"[{ambient}/{class_label(classes, j)}]"


def _format_terms(group: FiniteGroup, coeffs: Sequence) -> str:
    """Terms from the largest class down, e.g. ``[G/G] − 2·[G/e]``."""
    classes = subgroup_classes(group)
    parts = []
    for j in reversed(range(len(coeffs))):
        c = coeffs[j]
        if c == 0:
            continue
        magnitude = abs(c)
        term = basis_label(classes, j)
        if magnitude != 1:
            term = f"{magnitude}·{term}"
        if not parts:
            parts.append(term if c > 0 else f"−{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"− {term}")
    return " ".join(parts) if parts else "0"


def _check_length(group: FiniteGroup, values: tuple) -> None:
    n = len(subgroup_classes(group))
    if len(values) != n:
        raise ValueError(f"Expected {n} coordinates (one per subgroup class), got {len(values)}.")


def _integers(values) -> tuple[int, ...]:
    out = []
    for v in values:
        f = parse_fraction(v)
        if f.denominator != 1:
            raise ValueError(f"Coordinate {v!r} is not an integer.")
        out.append(f.numerator)
    return tuple(out)


def _same_group(x, y) -> None:
    if x.group != y.group:
        raise SubgroupMismatchError("Elements live over different groups.")


@dataclass(frozen=True, eq=False)
class TableOfMarks:
    """
    The square matrix of fixed coset counts of a finite group.

    ``marks[i, j]`` is the number of cosets in ``G/H_j`` fixed by ``H_i``. The
    matrix is upper triangular in canonical class order, its diagonal holds the
    Weyl group orders and its first row the indices ``|G|/|H_j|``.

    :ivar group: The group.
    :ivar classes: Its canonical subgroup classes.
    :ivar marks: ``numpy`` array of Python integers (``dtype=object``).
    """

    group: FiniteGroup
    classes: SubgroupClassList
    marks: np.ndarray

    @property
    def size(self) -> int:
        return len(self.classes)

    @property
    def weyl_orders(self) -> tuple[int, ...]:
        return tuple(int(self.marks[j, j]) for j in range(self.size))

    def as_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.marks]

    @cached_property
    def exact(self) -> ImmutableMatrix:
        return ImmutableMatrix(self.as_lists())

    def solve(self, values: Sequence) -> list[Fraction]:
        """Exact solution ``c`` of ``marks · c = values``."""
        rhs = ImmutableMatrix([[to_rational(v)] for v in values])
        solution = self.exact.upper_triangular_solve(rhs)
        return [to_fraction(solution[i, 0]) for i in range(self.size)]

    def to_frame(self) -> pd.DataFrame:
        labels = [class_label(self.classes, i) for i in range(self.size)]
        return pd.DataFrame(
            self.as_lists(),
            index=labels,
            columns=[basis_label(self.classes, j) for j in range(self.size)],
        )


@cache
def table_of_marks(G: FiniteGroup) -> TableOfMarks:
    """
    Compute the table of marks of ``G`` by counting fixed cosets directly in
    each coset action. Results are cached per group.
    """
    classes = subgroup_classes(G)
    n = len(classes)
    table = np.zeros((n, n), dtype=object)
    for j, Hj in enumerate(classes):
        action = coset_action(G, Hj)
        for i, Hi in enumerate(classes):
            table[i, j] = len(action.fixed_points(Hi.members))
    logger.debug("Table of marks for group of order %d: %d classes", G.order, n)
    return TableOfMarks(G, classes, table)


@dataclass(frozen=True)
class BurnsideElement:
    """
    An element ``Σ c_j [G/H_j]`` of the Burnside ring ``A(G)``.

    :ivar group: The group ``G``.
    :ivar coeffs: Integer coefficients, one per subgroup class.
    """

    group: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = _integers(self.coeffs)
        _check_length(self.group, coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, G: FiniteGroup) -> "BurnsideElement":
        return cls(G, (0,) * len(subgroup_classes(G)))

    @classmethod
    def basis(cls, G: FiniteGroup, j: int) -> "BurnsideElement":
        n = len(subgroup_classes(G))
        return cls(G, tuple(1 if i == j else 0 for i in range(n)))

    @classmethod
    def one(cls, G: FiniteGroup) -> "BurnsideElement":
        """The unit ``[G/G]``."""
        return cls.basis(G, len(subgroup_classes(G)) - 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        _same_group(self, other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BurnsideElement):
            return mul(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return BurnsideElement(self.group, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        return _format_terms(self.group, self.coeffs)


@dataclass(frozen=True)
class MarkVector:
    """
    A tuple of integers indexed by subgroup classes, read as the fixed point
    counts (marks) of a virtual G-set.
    """

    group: FiniteGroup
    values: tuple[int, ...]

    def __post_init__(self):
        values = _integers(self.values)
        _check_length(self.group, values)
        object.__setattr__(self, "values", values)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v).replace("-", "−") for v in self.values) + ")"


@dataclass(frozen=True)
class RationalBurnsideElement:
    """
    An element of the rationalized Burnside ring ``A(G) ⊗ Q``.

    :ivar group: The group ``G``.
    :ivar coeffs: Exact rational coefficients, one per subgroup class.
    """

    group: FiniteGroup
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(parse_fraction(c) for c in self.coeffs)
        _check_length(self.group, coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, G: FiniteGroup) -> "RationalBurnsideElement":
        return cls(G, (Fraction(0),) * len(subgroup_classes(G)))

    @classmethod
    def from_integral(cls, x: BurnsideElement) -> "RationalBurnsideElement":
        return cls(x.group, tuple(Fraction(c) for c in x.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integral(self) -> BurnsideElement:
        """:raises ValueError: If some coefficient is not an integer."""
        return BurnsideElement(self.group, self.coeffs)

    def __add__(self, other):
        return rational_add(self, other)

    def __neg__(self):
        return rational_scale(Fraction(-1), self)

    def __sub__(self, other):
        return rational_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, RationalBurnsideElement):
            return rational_mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return rational_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return rational_scale(other, self)
        return NotImplemented

    def __str__(self) -> str:
        return _format_terms(self.group, self.coeffs)


def marks(x: BurnsideElement) -> MarkVector:
    """The marks of ``x``: the table of marks applied to its coefficients."""
    tom = table_of_marks(x.group)
    values = tom.marks.dot(np.array(x.coeffs, dtype=object))
    return MarkVector(x.group, tuple(int(v) for v in values))


def from_marks(v: MarkVector) -> BurnsideElement:
    """
    The unique element of ``A(G)`` with the given marks.

    :raises NotInImageError: If the rational solution is not integral, i.e.
        the marks violate the Burnside congruences.
    """
    solution = table_of_marks(v.group).solve(v.values)
    for j, c in enumerate(solution):
        if c.denominator != 1:
            raise NotInImageError(
                f"Marks {tuple(v.values)} are not realized by any element of A(G): "
                f"coefficient {j} would be {c}."
            )
    return BurnsideElement(v.group, tuple(c.numerator for c in solution))


def mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product in ``A(G)``, computed through pointwise multiplication of marks."""
    _same_group(x, y)
    product = tuple(a * b for a, b in zip(marks(x).values, marks(y).values))
    try:
        return from_marks(MarkVector(x.group, product))
    except NotInImageError as err:
        raise AssertionError("Product of Burnside ring elements is not integral.") from err


def is_unit(x: BurnsideElement) -> bool:
    """Units of ``A(G)`` are exactly the elements with all marks ``±1``."""
    return all(abs(v) == 1 for v in marks(x).values)


def gset_to_element(action: GSetAction) -> BurnsideElement:
    """Decompose a finite G-set into orbits and sum their basis elements."""
    classes = subgroup_classes(action.group)
    coeffs = [0] * len(classes)
    for orbit in action.orbits():
        coeffs[classes.index_of(action.stabilizer(orbit[0]))] += 1
    return BurnsideElement(action.group, tuple(coeffs))


def induce(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """
    Induction ``t^G_H : A(H) → A(G)``, sending ``[H/K]`` to ``[G/K]``.

    :param x: An element over ``H.as_group``.
    :raises SubgroupMismatchError: If ``H`` is not a subgroup of ``G`` or ``x``
        does not live over ``H``.
    """
    if H.parent != G:
        raise SubgroupMismatchError("Subgroup does not belong to the given group.")
    if x.group != H.as_group:
        raise SubgroupMismatchError("Element does not live over the given subgroup.")
    local = subgroup_classes(H.as_group)
    classes = subgroup_classes(G)
    coeffs = [0] * len(classes)
    for j, c in enumerate(x.coeffs):
        if c:
            coeffs[classes.index_of(H.lift(local[j]))] += c
    return BurnsideElement(G, tuple(coeffs))


def restrict(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """Restriction ``A(G) → A(H)``: view each ``G/K`` as an H-set."""
    if H.parent != G or x.group != G:
        raise SubgroupMismatchError("Element and subgroup must both live over G.")
    classes = subgroup_classes(G)
    total = BurnsideElement.zero(H.as_group)
    for j, c in enumerate(x.coeffs):
        if c:
            total = total + c * gset_to_element(coset_action(G, classes[j]).restrict_to(H))
    return total


def _fixed_weyl_action(
    action: GSetAction, H: Subgroup, W: FiniteGroup, quotient: dict[int, int]
) -> GSetAction:
    fixed = action.fixed_points(H.members)
    position = {p: i for i, p in enumerate(fixed)}
    lifts: dict[int, int] = {}
    for n, w in quotient.items():
        lifts.setdefault(w, n)
    actions = tuple(
        Permutation(tuple(position[action.actions[lifts[w]](p)] for p in fixed))
        for w in range(W.order)
    )
    return GSetAction(W, tuple(fixed), actions)


def eta(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """
    The fixed point homomorphism ``η_H : A(G) → A(W(H))``.

    Each ``[G/K]`` goes to the H-fixed cosets ``(G/K)^H``, on which ``N(H)``
    acts through ``W(H) = N(H)/H``.
    """
    if H.parent != G or x.group != G:
        raise SubgroupMismatchError("Element and subgroup must both live over G.")
    W, quotient = weyl_group(G, H)
    classes = subgroup_classes(G)
    total = BurnsideElement.zero(W)
    for j, c in enumerate(x.coeffs):
        if c:
            fixed = _fixed_weyl_action(coset_action(G, classes[j]), H, W, quotient)
            total = total + c * gset_to_element(fixed)
    return total


def rational_add(
    x: RationalBurnsideElement, y: RationalBurnsideElement
) -> RationalBurnsideElement:
    _same_group(x, y)
    return RationalBurnsideElement(x.group, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def rational_scale(q, x: RationalBurnsideElement) -> RationalBurnsideElement:
    q = parse_fraction(q)
    return RationalBurnsideElement(x.group, tuple(q * a for a in x.coeffs))


def rational_marks(x: RationalBurnsideElement) -> tuple[Fraction, ...]:
    tom = table_of_marks(x.group)
    values = tom.marks.dot(np.array(x.coeffs, dtype=object))
    return tuple(Fraction(v) for v in values)


def rational_from_marks(G: FiniteGroup, values: Sequence) -> RationalBurnsideElement:
    """Every rational mark vector comes from a unique element of ``A(G) ⊗ Q``."""
    values = tuple(parse_fraction(v) for v in values)
    _check_length(G, values)
    return RationalBurnsideElement(G, tuple(table_of_marks(G).solve(values)))


def rational_mul(
    x: RationalBurnsideElement, y: RationalBurnsideElement
) -> RationalBurnsideElement:
    _same_group(x, y)
    product = [a * b for a, b in zip(rational_marks(x), rational_marks(y))]
    return rational_from_marks(x.group, product)


def rational_eta(
    G: FiniteGroup, H: Subgroup, x: RationalBurnsideElement
) -> RationalBurnsideElement:
    """Linear extension of :func:`eta` to ``A(G) ⊗ Q``."""
    if H.parent != G or x.group != G:
        raise SubgroupMismatchError("Element and subgroup must both live over G.")
    W, _ = weyl_group(G, H)
    total = RationalBurnsideElement.zero(W)
    for j, c in enumerate(x.coeffs):
        if c:
            image = eta(G, H, BurnsideElement.basis(G, j))
            total = total + rational_scale(c, RationalBurnsideElement.from_integral(image))
    return total
