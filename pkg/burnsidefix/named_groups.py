"""
named_groups.py
===============

Permutation generators for the small families used throughout the test
suite and accepted by scene documents as ``{"group": {"name": "S4"}}``:

- ``C<n>``: cyclic group of order n on n points,
- ``D<order>``: dihedral group of the given (even) order,
- ``S<n>``: symmetric group on n points,
- ``A<n>``: alternating group on n points.
"""

import re

from .permutations import DEFAULT_MAX_ORDER, FiniteGroup, Permutation, group_closure

_NAME = re.compile(r"^([CDSA])(\d+)$")


def _cycle(degree, points):
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return Permutation(tuple(images))


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"Cyclic group order must be positive, got {n}.")
    gens = [_cycle(n, list(range(n)))] if n > 1 else []
    return group_closure(n, gens, max_order=max_order)


def dihedral_group(order: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """
    Symmetries of a regular polygon with ``order // 2`` vertices. Order 4
    gives the Klein four-group acting regularly on 4 points.
    """
    if order < 4 or order % 2:
        raise ValueError(f"Dihedral group order must be even and >= 4, got {order}.")
    if order == 4:
        gens = [Permutation((1, 0, 3, 2)), Permutation((2, 3, 0, 1))]
        return group_closure(4, gens, max_order=max_order)
    n = order // 2
    rotation = _cycle(n, list(range(n)))
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return group_closure(n, [rotation, reflection], max_order=max_order)


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"Symmetric group degree must be positive, got {n}.")
    gens = []
    if n > 1:
        gens.append(_cycle(n, [0, 1]))
    if n > 2:
        gens.append(_cycle(n, list(range(n))))
    return group_closure(n, gens, max_order=max_order)


def alternating_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"Alternating group degree must be positive, got {n}.")
    gens = [_cycle(n, [0, 1, i]) for i in range(2, n)]
    return group_closure(n, gens, max_order=max_order)


def named_group(name: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """
    Build a group from a short name such as ``"S3"``, ``"D8"``, ``"C4"``.

    Args:
        name (str): family letter (C, D, S or A) followed by the order, or by
            the degree for S and A.
        max_order (int): cap on the group order passed to the builder.

    Returns:
        FiniteGroup: the named group.

    Raises:
        ValueError: if the name is not recognized.
    """
    match = _NAME.match(name.strip())
    if not match:
        raise ValueError(f"Unknown group name '{name}'.")
    family, n = match.group(1), int(match.group(2))
    builders = {
        "C": cyclic_group,
        "D": dihedral_group,
        "S": symmetric_group,
        "A": alternating_group,
    }
    return builders[family](n, max_order=max_order)
