"""
representations.py
==================

Exact rational representations of finite groups and the equivariant degree
of invertible equivariant linear maps.

1. **`rep_from_generators(G, dimension, generator_images)`**
   - Propagates generator matrices over the whole group along the Cayley
     graph and rejects images that do not define a homomorphism.

2. **`fixed_subspace(rep, K)`**
   - A basis of ``V^K`` from the column space of the averaging projector
     ``(1/|K|) Σ_k ρ(k)``.

3. **`equivariant_degree(L)`**
   - The element ``Deg_G(L)`` of the Burnside ring. Its mark at ``K`` is the
     sign of ``det(L|V^K)``, the Brouwer degree of the compactified linear map
     on the K-fixed sphere; an empty stratum ``V^K = 0`` contributes ``+1``.

All matrices are :class:`sympy.ImmutableMatrix` objects with exact rational
entries; nothing here uses floating point.

**Example**::

    from burnsidefix.named_groups import cyclic_group
    from burnsidefix.representations import (
        EquivariantLinearMap, equivariant_degree, rep_from_generators,
    )

    c2 = cyclic_group(2)
    sign = rep_from_generators(c2, 1, [[["-1"]]])
    print(equivariant_degree(EquivariantLinearMap(sign, [["-1"]])))   # [G/G] − [G/e]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy import ImmutableMatrix, Rational

from .burnside import BurnsideElement, MarkVector, from_marks
from .exceptions import (
    InconsistentImagesError,
    InputError,
    NotInImageError,
    SingularImageError,
    SingularMapError,
    SubgroupMismatchError,
)
from .permutations import FiniteGroup, Permutation, Subgroup, subgroup_classes
from .utils import (
    column_basis,
    determinant,
    exact_matrix,
    identity_matrix,
    restricted_det_sign,
)

logger = logging.getLogger(__name__)


def _as_matrix(m, dimension: int) -> ImmutableMatrix:
    if isinstance(m, ImmutableMatrix):
        if m.shape != (dimension, dimension):
            raise ValueError(f"Expected a {dimension}x{dimension} matrix, got {m.shape}.")
        return m
    return exact_matrix(m, size=dimension)


@dataclass(frozen=True)
class RationalRepresentation:
    """
    A homomorphism from a finite group into invertible rational matrices.

    Construction checks ``images[s·h] = images[s]·images[h]`` for every
    generator ``s`` and every element ``h`` (every element when the listed
    generators do not generate the group), and that generator images are
    invertible.

    :ivar group: The represented group.
    :ivar dimension: The dimension of the representation space.
    :ivar images: One matrix per element, indexed like ``group.elements``.
    :raises InconsistentImagesError: If the images are not multiplicative.
    :raises SingularImageError: If an image is not invertible.
    """

    group: FiniteGroup
    dimension: int
    images: tuple[ImmutableMatrix, ...]

    def __post_init__(self):
        G = self.group
        if len(self.images) != G.order:
            raise ValueError("Need exactly one matrix per group element.")
        images = tuple(_as_matrix(m, self.dimension) for m in self.images)
        if images[0] != identity_matrix(self.dimension):
            raise InconsistentImagesError("The identity element must act as the identity matrix.")

        gens = [G.index_of(g) for g in G.generators]
        if len(G.closure(gens)) != G.order:
            gens = list(range(1, G.order))
        for s in gens:
            if determinant(images[s]) == 0:
                raise SingularImageError(f"Image of {G.elements[s]} is singular.")
        for s in gens:
            for h in range(G.order):
                if images[G.mul(s, h)] != images[s] * images[h]:
                    raise InconsistentImagesError(
                        f"Images of {G.elements[s]} and {G.elements[h]} do not multiply correctly."
                    )
        object.__setattr__(self, "images", images)

    def image(self, p: Permutation) -> ImmutableMatrix:
        return self.images[self.group.index_of(p)]


def rep_from_generators(
    G: FiniteGroup,
    dimension: int,
    generator_images: Sequence,
    generators: Sequence[Permutation] | None = None,
) -> RationalRepresentation:
    """
    Build a representation from the images of a generating set.

    Every element's matrix is derived along a breadth-first word in the
    generators, and every edge of the Cayley graph is re-checked, so a second
    factorization that yields a different matrix is detected.

    :param G: The group.
    :param dimension: Dimension of the representation.
    :param generator_images: One square matrix per generator, as nested rows
        of exact entries or as ``ImmutableMatrix``.
    :param generators: Elements of ``G`` the images belong to; defaults to
        ``G.generators``.
    :raises InconsistentImagesError: If the images do not define a homomorphism.
    :raises SingularImageError: If a generator image is not invertible.
    """
    gens = tuple(G.generators if generators is None else generators)
    if len(generator_images) != len(gens):
        raise InconsistentImagesError(
            f"Got {len(generator_images)} generator images for {len(gens)} generators."
        )
    mats = [_as_matrix(m, dimension) for m in generator_images]
    for k, m in enumerate(mats):
        if determinant(m) == 0:
            raise SingularImageError(f"Image of generator {k} is singular.")
    gen_idx = [G.index_of(g) for g in gens]

    images = {0: identity_matrix(dimension)}
    frontier = [0]
    while frontier:
        nxt = []
        for e in frontier:
            for s, m in zip(gen_idx, mats):
                g = G.mul(s, e)
                candidate = ImmutableMatrix(m * images[e])
                if g in images:
                    if images[g] != candidate:
                        raise InconsistentImagesError(
                            f"Element {G.elements[g]} receives two different matrices."
                        )
                else:
                    images[g] = candidate
                    nxt.append(g)
        frontier = nxt

    if len(images) != G.order:
        raise InconsistentImagesError("The given elements do not generate the group.")
    return RationalRepresentation(G, dimension, tuple(images[g] for g in range(G.order)))


def permutation_representation(G: FiniteGroup) -> RationalRepresentation:
    """The natural action of ``G`` on ``Q^degree`` by permuting coordinates."""
    images = []
    for p in G.elements:
        rows = [[0] * G.degree for _ in range(G.degree)]
        for i, j in enumerate(p.images):
            rows[j][i] = 1
        images.append(exact_matrix(rows, size=G.degree))
    return RationalRepresentation(G, G.degree, tuple(images))


def restrict_rep(rep: RationalRepresentation, H: Subgroup) -> RationalRepresentation:
    """The same matrices, re-indexed over ``H.as_group``."""
    if H.parent != rep.group:
        raise SubgroupMismatchError("Subgroup does not belong to the represented group.")
    local = H.as_group
    images = tuple(rep.images[H.parent_index(i)] for i in range(local.order))
    return RationalRepresentation(local, rep.dimension, images)


def averaging_projector(rep: RationalRepresentation, K: Subgroup) -> ImmutableMatrix:
    """``(1/|K|) Σ_{k ∈ K} ρ(k)``, the projection onto ``V^K``."""
    if K.parent != rep.group:
        raise SubgroupMismatchError("Subgroup does not belong to the represented group.")
    total = ImmutableMatrix.zeros(rep.dimension, rep.dimension)
    for k in K.members:
        total = total + rep.images[k]
    return ImmutableMatrix(total * Rational(1, K.order))


def fixed_subspace(rep: RationalRepresentation, K: Subgroup) -> ImmutableMatrix:
    """A basis of ``V^K`` as the columns of a ``dimension x dim V^K`` matrix."""
    projector = averaging_projector(rep, K)
    if rep.dimension == 0:
        return projector
    return column_basis(projector)


@dataclass(frozen=True)
class EquivariantLinearMap:
    """
    A linear self-map of a representation commuting with the group action.

    :ivar rep: The representation.
    :ivar matrix: Square exact matrix of size ``rep.dimension``.
    """

    rep: RationalRepresentation
    matrix: ImmutableMatrix

    def __post_init__(self):
        matrix = _as_matrix(self.matrix, self.rep.dimension)
        group = self.rep.group
        checked = [group.index_of(g) for g in group.generators] or range(group.order)
        for g in checked:
            image = self.rep.images[g]
            if matrix * image != image * matrix:
                raise InputError(
                    f"Matrix does not commute with the action of {group.elements[g]}."
                )
        object.__setattr__(self, "matrix", matrix)

    def complement(self) -> "EquivariantLinearMap":
        """The map ``id − L``."""
        return EquivariantLinearMap(
            self.rep, ImmutableMatrix(identity_matrix(self.rep.dimension) - self.matrix)
        )

    def __matmul__(self, other: "EquivariantLinearMap") -> "EquivariantLinearMap":
        if other.rep != self.rep:
            raise SubgroupMismatchError("Maps live on different representations.")
        return EquivariantLinearMap(self.rep, ImmutableMatrix(self.matrix * other.matrix))


def matrix_power(L: EquivariantLinearMap, m: int) -> EquivariantLinearMap:
    """
    The ``m``-th iterate of ``L``.

    :raises ValueError: If ``m`` is not a positive integer.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"Power must be a positive integer, got {m!r}.")
    if L.rep.dimension == 0 or m == 1:
        return L
    return EquivariantLinearMap(L.rep, ImmutableMatrix(L.matrix**m))


def equivariant_degree_marks(L: EquivariantLinearMap) -> MarkVector:
    """
    The marks of ``Deg_G(L)``: ``sign det(L|V^K)`` for each subgroup class.

    :raises SingularMapError: If ``L`` is not invertible.
    """
    if determinant(L.matrix) == 0:
        raise SingularMapError("Equivariant degree of a singular map is undefined.")
    group = L.rep.group
    signs = tuple(
        restricted_det_sign(L.matrix, fixed_subspace(L.rep, K))
        for K in subgroup_classes(group)
    )
    return MarkVector(group, signs)


def equivariant_degree(L: EquivariantLinearMap) -> BurnsideElement:
    """
    The equivariant degree ``Deg_G(L)`` of an invertible equivariant map.

    :raises SingularMapError: If ``L`` is not invertible.
    """
    signs = equivariant_degree_marks(L)
    try:
        degree = from_marks(signs)
    except NotInImageError as err:
        raise AssertionError("Degree marks are not realized in the Burnside ring.") from err
    logger.debug("Degree marks %s give %s", signs.values, degree)
    return degree
