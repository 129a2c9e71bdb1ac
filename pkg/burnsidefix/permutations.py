"""
permutations.py
===============

Finite permutation groups and their subgroup lattice, the combinatorial
substrate of ``burnsidefix``.

Every group is a :class:`FiniteGroup` whose elements are stored once, sorted
lexicographically by their image lists. All other objects refer to elements
by their *index* in that canonical list, so subgroups, cosets and actions are
plain integer data and results are reproducible across runs.

**Key Functionalities**:

- **Closure**: :func:`group_closure` enumerates the group generated by a list
  of permutations, refusing to grow beyond a configurable order cap.
- **Subgroup classes**: :func:`subgroup_classes` enumerates all subgroups by
  cyclic extension (cyclic subgroups first, then repeated joins) and groups
  them into conjugacy classes with a canonical representative each.
- **Normalizers and Weyl groups**: :func:`normalizer`, :func:`weyl_group`.
- **Coset actions**: :func:`coset_action` returns the G-set G/H as a
  :class:`GSetAction`.

**Example**::

    from burnsidefix.permutations import Permutation, group_closure, subgroup_classes

    s3 = group_closure(3, [Permutation((1, 2, 0)), Permutation((1, 0, 2))])
    classes = subgroup_classes(s3)
    print(s3.order, classes.orders)   # 6 (1, 2, 3, 6)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cache, cached_property
from typing import Iterable, Sequence

import numpy as np

from .exceptions import GroupOrderError, SubgroupMismatchError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 200
HARD_MAX_ORDER = 2000


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of ``{0, ..., n-1}`` given by its image list.

    :ivar images: ``images[i]`` is the image of point ``i``.
    :type images: tuple[int, ...]
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(
                f"{list(images)} is not a permutation of 0..{len(images) - 1}."
            )
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Return ``p∘q``: apply ``q`` first, then ``p``.

    :raises ValueError: If the degrees differ.
    """
    if p.degree != q.degree:
        raise ValueError(f"Degree mismatch: {p.degree} vs {q.degree}.")
    return Permutation(tuple(p.images[i] for i in q.images))


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite permutation group with its full, canonically ordered element list.

    Two groups are equal when they have the same degree and the same elements;
    the generating list is kept verbatim but does not take part in equality.

    :ivar degree: Number of points acted on.
    :ivar elements: All elements, sorted by image list. Index 0 is the identity.
    :ivar generators: The generators the group was built from.
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)

    @classmethod
    def from_elements(
        cls,
        degree: int,
        elements: Iterable[Permutation],
        generators: Sequence[Permutation] = (),
    ) -> "FiniteGroup":
        """Build a group from an element set already known to be closed."""
        unique = {p.images: p for p in elements}
        ordered = tuple(unique[k] for k in sorted(unique))
        return cls(degree, ordered, tuple(generators))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {p.images: i for i, p in enumerate(self.elements)}

    def index_of(self, p: Permutation) -> int:
        try:
            return self.index[p.images]
        except KeyError:
            raise ValueError(f"{p} is not an element of this group.") from None

    @cached_property
    def multiplication_table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] ∘ elements[j]``."""
        images = np.array([p.images for p in self.elements], dtype=np.int64)
        images = images.reshape(self.order, self.degree)
        table = np.empty((self.order, self.order), dtype=np.int64)
        for i in range(self.order):
            composed = images[i][images]
            table[i] = [self.index[tuple(row)] for row in composed.tolist()]
        return table

    @cached_property
    def _rows(self) -> list[list[int]]:
        return self.multiplication_table.tolist()

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self._rows)

    def mul(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def conjugate_set(self, g: int, members: Iterable[int]) -> frozenset[int]:
        """The index set ``g S g^-1``."""
        rows = self._rows
        g_inv = self.inverses[g]
        return frozenset(rows[rows[g][m]][g_inv] for m in members)

    def closure(self, seeds: Iterable[int]) -> frozenset[int]:
        """Indices of the subgroup generated by the given element indices."""
        gens = sorted(set(seeds) - {0})
        rows = self._rows
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = rows[s][x]
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(found)


def group_closure(
    degree: int,
    gens: Sequence[Permutation],
    max_order: int = DEFAULT_MAX_ORDER,
) -> FiniteGroup:
    """
    Enumerate the group generated by ``gens``.

    :param degree: Number of points; every generator must have this degree.
    :param gens: Generating permutations, retained verbatim on the result.
    :param max_order: Order cap, at most :data:`HARD_MAX_ORDER`.
    :return: The generated group with canonically sorted elements.
    :raises ValueError: On a degree mismatch or a cap above the hard maximum.
    :raises GroupOrderError: If the group has more than ``max_order`` elements.
    """
    if max_order > HARD_MAX_ORDER:
        raise ValueError(f"max_order {max_order} exceeds hard maximum {HARD_MAX_ORDER}.")
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"Generator {g} has degree {g.degree}, expected {degree}.")

    identity = Permutation.identity(degree)
    seen = {identity.images: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q.images not in seen:
                    seen[q.images] = q
                    if len(seen) > max_order:
                        raise GroupOrderError(
                            f"Group order exceeds the cap of {max_order} elements."
                        )
                    nxt.append(q)
        frontier = nxt

    logger.debug("Closed %d generators of degree %d: order %d", len(gens), degree, len(seen))
    return FiniteGroup.from_elements(degree, seen.values(), gens)


@dataclass(frozen=True)
class Subgroup:
    """
    A subgroup of ``parent`` given by the sorted indices of its members.

    :ivar parent: The ambient group.
    :ivar members: Sorted element indices into ``parent.elements``.
    :ivar generators: Optional generating indices, not part of equality.
    """

    parent: FiniteGroup
    members: tuple[int, ...]
    generators: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.member_set

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.members)}

    def _regular_image(self, parent_index: int) -> Permutation:
        position = self._positions
        return Permutation(
            tuple(position[self.parent.mul(parent_index, m)] for m in self.members)
        )

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @cached_property
    def as_group(self) -> FiniteGroup:
        """
        The subgroup as a standalone group, acting on its own members by left
        translation (the left-regular realization). The whole group is its own
        realization.
        """
        if self.is_whole:
            return self.parent
        perms = [self._regular_image(m) for m in self.members]
        gen_source = self.generators if self.generators is not None else self.members[1:]
        gens = [self._regular_image(g) for g in gen_source]
        return FiniteGroup.from_elements(self.order, perms, gens)

    @cached_property
    def _local(self) -> dict[int, int]:
        if self.is_whole:
            return {m: m for m in self.members}
        group = self.as_group
        return {m: group.index_of(self._regular_image(m)) for m in self.members}

    def local_index(self, parent_index: int) -> int:
        """Index in :attr:`as_group` of a member given by its parent index."""
        return self._local[parent_index]

    @cached_property
    def _parent_of_local(self) -> dict[int, int]:
        return {loc: m for m, loc in self._local.items()}

    def parent_index(self, local_index: int) -> int:
        return self._parent_of_local[local_index]

    def embed(self, p: Permutation) -> Permutation:
        """Carry a member of the parent over to :attr:`as_group`."""
        idx = self.parent.index_of(p)
        if idx not in self.member_set:
            raise SubgroupMismatchError(f"{p} is not a member of the subgroup.")
        return self.as_group.elements[self.local_index(idx)]

    def lift(self, sub: "Subgroup") -> "Subgroup":
        """Map a subgroup of :attr:`as_group` back into the parent."""
        if sub.parent != self.as_group:
            raise SubgroupMismatchError("Subgroup does not live over this realization.")
        return Subgroup(self.parent, tuple(sorted(self.parent_index(i) for i in sub.members)))

    def __str__(self) -> str:
        return f"<subgroup of order {self.order} in group of order {self.parent.order}>"


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def subgroup_generated(G: FiniteGroup, gens: Sequence[Permutation]) -> Subgroup:
    """The subgroup of ``G`` generated by the given elements of ``G``."""
    indices = tuple(G.index_of(g) for g in gens)
    return Subgroup(G, tuple(sorted(G.closure(indices))), indices)


def _require_subgroup(G: FiniteGroup, *subgroups: Subgroup) -> None:
    for H in subgroups:
        if H.parent != G:
            raise SubgroupMismatchError("Subgroup does not belong to the given group.")


@dataclass(frozen=True)
class SubgroupClassList:
    """
    Conjugacy classes of subgroups of ``group`` in canonical order.

    Classes are sorted by ``(order, least member list among all conjugates)``
    and each representative is that least conjugate, so the first class is
    the trivial subgroup and the last one the whole group.

    :ivar group: The ambient group.
    :ivar classes: One representative per class.
    :ivar keys: The order key of each class.
    """

    group: FiniteGroup
    classes: tuple[Subgroup, ...]
    keys: tuple[tuple[int, tuple[int, ...]], ...]
    lookup: dict[frozenset[int], int] = field(compare=False, repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> Subgroup:
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(H.order for H in self.classes)

    def index_of(self, K: Subgroup) -> int:
        """Index of the class containing the subgroup ``K``."""
        _require_subgroup(self.group, K)
        return self.lookup[K.member_set]


@cache
def subgroup_classes(G: FiniteGroup) -> SubgroupClassList:
    """
    Enumerate representatives of all conjugacy classes of subgroups of ``G``.

    Cyclic subgroups are generated from every element. Then one subgroup per
    conjugacy class is joined with every cyclic subgroup it does not contain,
    each join being generated from the class's own short generating tuple
    plus one new element, until no new class appears. Every conjugate of a
    new class is recorded, so joins with conjugates need no separate pass.
    Results are cached per group.
    """
    cyclic: dict[frozenset[int], int] = {}
    for g in range(G.order):
        cyclic.setdefault(G.closure([g]), g)

    found: list[set[frozenset[int]]] = []
    lookup: dict[frozenset[int], int] = {}
    frontier: list[tuple[frozenset[int], tuple[int, ...]]] = []

    def record(S: frozenset[int], gens: tuple[int, ...]) -> None:
        if S in lookup:
            return
        conjugates = {G.conjugate_set(g, S) for g in range(G.order)}
        for c in conjugates:
            lookup[c] = len(found)
        found.append(conjugates)
        frontier.append((S, gens))

    for C, c in cyclic.items():
        record(C, (c,) if c else ())
    while frontier:
        S, gens = frontier.pop()
        for c in cyclic.values():
            if c not in S:
                extended = gens + (c,)
                record(G.closure(extended), extended)
    logger.debug("Group of order %d has %d subgroups", G.order, len(lookup))

    entries = []
    for i, conjugates in enumerate(found):
        rep = min(tuple(sorted(c)) for c in conjugates)
        entries.append(((len(rep), rep), i))
    entries.sort()
    renumber = {old: new for new, (_, old) in enumerate(entries)}
    lookup = {S: renumber[i] for S, i in lookup.items()}
    keys = tuple(key for key, _ in entries)
    classes = tuple(Subgroup(G, key[1]) for key in keys)
    logger.debug("Group of order %d has %d subgroup classes", G.order, len(classes))
    return SubgroupClassList(G, classes, keys, lookup)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """``N(H) = {g : g H g^-1 = H}``."""
    _require_subgroup(G, H)
    members = tuple(
        g for g in range(G.order) if G.conjugate_set(g, H.members) == H.member_set
    )
    return Subgroup(G, members)


def is_subconjugate(G: FiniteGroup, K: Subgroup, H: Subgroup) -> bool:
    """True iff some conjugate ``g K g^-1`` is contained in ``H``."""
    _require_subgroup(G, K, H)
    if H.order % K.order:
        return False
    return any(G.conjugate_set(g, K.members) <= H.member_set for g in range(G.order))


def _coset_keys(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Least element index of ``xH`` for every element ``x``."""
    return [min(G.mul(x, h) for h in H.members) for x in range(G.order)]


def weyl_group(G: FiniteGroup, H: Subgroup) -> tuple[FiniteGroup, dict[int, int]]:
    """
    The Weyl group ``W(H) = N(H)/H`` acting on the cosets ``N(H)/H``.

    :return: The group and the quotient map, sending the parent index of each
        element of ``N(H)`` to the index of its coset permutation in ``W(H)``.
    """
    N = normalizer(G, H)
    keys = _coset_keys(G, H)
    cosets = sorted({keys[n] for n in N.members})
    position = {c: i for i, c in enumerate(cosets)}

    images = {}
    for n in N.members:
        images[n] = Permutation(tuple(position[keys[G.mul(n, c)]] for c in cosets))
    W = FiniteGroup.from_elements(len(cosets), images.values())
    W = FiniteGroup(W.degree, W.elements, W.elements[1:])
    quotient = {n: W.index_of(p) for n, p in images.items()}
    return W, quotient


@dataclass(frozen=True)
class GSetAction:
    """
    A finite G-set: ``actions[g]`` permutes the point positions
    ``0..size-1`` for every element index ``g`` of ``group``.

    :ivar group: The acting group.
    :ivar points: Labels of the points (coset keys for coset actions).
    :ivar actions: One permutation of the points per group element.
    """

    group: FiniteGroup
    points: tuple
    actions: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.actions) != self.group.order:
            raise ValueError("Need exactly one action permutation per group element.")
        for p in self.actions:
            if p.degree != len(self.points):
                raise ValueError("Action permutation degree does not match point count.")

    @property
    def size(self) -> int:
        return len(self.points)

    def is_homomorphism(self) -> bool:
        G = self.group
        return all(
            compose(self.actions[a], self.actions[b]) == self.actions[G.mul(a, b)]
            for a in range(G.order)
            for b in range(G.order)
        )

    def fixed_points(self, members: Iterable[int]) -> list[int]:
        """Positions fixed by every listed element index."""
        members = list(members)
        return [
            x for x in range(self.size) if all(self.actions[g](x) == x for g in members)
        ]

    def stabilizer(self, point: int) -> Subgroup:
        members = tuple(g for g in range(self.group.order) if self.actions[g](point) == point)
        return Subgroup(self.group, members)

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted position lists, ordered by least position."""
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            orbit = {p(start) for p in self.actions}
            seen |= orbit
            out.append(sorted(orbit))
        return out

    def restrict_to(self, H: Subgroup) -> "GSetAction":
        """The same set viewed as a G-set over ``H.as_group``."""
        _require_subgroup(self.group, H)
        local = H.as_group
        actions = tuple(
            self.actions[H.parent_index(i)] for i in range(local.order)
        )
        return GSetAction(local, self.points, actions)


def coset_action(G: FiniteGroup, H: Subgroup) -> GSetAction:
    """
    Left translation action of ``G`` on the cosets ``G/H``.

    Each coset is keyed by its least element index and cosets are listed in
    increasing key order, so the coset ``H`` itself is point 0.
    """
    _require_subgroup(G, H)
    keys = _coset_keys(G, H)
    cosets = sorted(set(keys))
    position = {c: i for i, c in enumerate(cosets)}
    actions = tuple(
        Permutation(tuple(position[keys[G.mul(g, c)]] for c in cosets))
        for g in range(G.order)
    )
    return GSetAction(G, tuple(cosets), actions)
