import itertools

import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from burnsidefix.exceptions import GroupOrderError, SubgroupMismatchError
from burnsidefix.named_groups import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from burnsidefix.permutations import (
    HARD_MAX_ORDER,
    Permutation,
    Subgroup,
    compose,
    coset_action,
    group_closure,
    is_subconjugate,
    normalizer,
    subgroup_classes,
    subgroup_generated,
    trivial_subgroup,
    weyl_group,
    whole_group,
)


def _all_subgroups(G):
    """Every subset containing the identity that is closed under the product."""
    table = G.multiplication_table
    found = []
    for size in range(1, G.order + 1):
        if G.order % size:
            continue
        for combo in itertools.combinations(range(1, G.order), size - 1):
            S = {0, *combo}
            if all(int(table[a, b]) in S for a in S for b in S):
                found.append(frozenset(S))
    return found


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_compose_applies_right_factor_first():
    p = Permutation((1, 2, 0))
    q = Permutation((1, 0, 2))
    # (p∘q)(i) = p(q(i)) => (p(1), p(0), p(2))
    assert compose(p, q).images == (2, 1, 0)
    assert (p * q) == compose(p, q)
    with pytest.raises(ValueError):
        compose(p, Permutation((0, 1)))


def test_cycle_notation():
    assert str(Permutation((1, 2, 0, 3))) == "(0 1 2)"
    assert str(Permutation.identity(3)) == "()"


def test_group_closure_is_canonical():
    """
    Elements are sorted by image list, so the identity comes first and the
    result does not depend on the generator order.
    """
    a = Permutation((1, 2, 0))
    b = Permutation((1, 0, 2))
    g1 = group_closure(3, [a, b])
    g2 = group_closure(3, [b, a])
    assert g1 == g2
    assert g1.order == 6
    assert g1.elements[0] == Permutation.identity(3)
    assert list(g1.elements) == sorted(g1.elements, key=lambda p: p.images)


def test_group_closure_order_cap():
    with pytest.raises(GroupOrderError):
        symmetric_group(5, max_order=100)
    with pytest.raises(ValueError):
        group_closure(2, [], max_order=HARD_MAX_ORDER + 1)


def test_group_orders_match_sympy():
    """Independent order check through sympy's permutation groups."""
    for G in [cyclic_group(6), dihedral_group(10), symmetric_group(4), alternating_group(5)]:
        oracle = PermutationGroup([SymPermutation(list(g.images)) for g in G.generators])
        assert oracle.order() == G.order


def test_multiplication_table_and_inverses():
    G = symmetric_group(3)
    for i in range(G.order):
        for j in range(G.order):
            expected = compose(G.elements[i], G.elements[j])
            assert G.elements[G.mul(i, j)] == expected
        assert G.mul(i, G.inverses[i]) == 0


@pytest.mark.parametrize(
    "G, count",
    [
        (cyclic_group(2), 2),
        (symmetric_group(3), 4),
        (dihedral_group(8), 8),
        (alternating_group(4), 5),
        (symmetric_group(4), 11),
    ],
)
def test_subgroup_class_counts(G, count):
    assert len(subgroup_classes(G)) == count


@pytest.mark.parametrize(
    "G, n_classes, n_subgroups",
    [
        (dihedral_group(8), 8, 10),
        (symmetric_group(4), 11, 30),
        (symmetric_group(5), 19, 156),
        (dihedral_group(200), 24, 226),
    ],
)
def test_subgroup_lattice_of_larger_groups(G, n_classes, n_subgroups):
    classes = subgroup_classes(G)
    assert len(classes) == n_classes
    assert len(classes.lookup) == n_subgroups
    assert classes[len(classes) - 1] == whole_group(G)


@pytest.mark.parametrize(
    "G",
    [
        cyclic_group(1),
        cyclic_group(6),
        dihedral_group(4),
        symmetric_group(3),
        dihedral_group(8),
        cyclic_group(9),
        dihedral_group(10),
        alternating_group(4),
        dihedral_group(12),
    ],
)
def test_subgroup_classes_match_subset_oracle(G):
    """
    Brute force over all subsets: the same conjugacy classes with the same
    least-conjugate representatives.
    """
    subgroups = _all_subgroups(G)
    reps = {min(tuple(sorted(G.conjugate_set(g, S))) for g in range(G.order)) for S in subgroups}
    classes = subgroup_classes(G)
    assert sorted(reps, key=lambda r: (len(r), r)) == [H.members for H in classes]
    for S in subgroups:
        K = Subgroup(G, tuple(sorted(S)))
        assert classes[classes.index_of(K)].order == len(S)


def test_class_order_puts_trivial_first_and_whole_last():
    G = symmetric_group(4)
    classes = subgroup_classes(G)
    assert classes[0] == trivial_subgroup(G)
    assert classes[len(classes) - 1] == whole_group(G)
    assert list(classes.keys) == sorted(classes.keys)
    assert classes.orders == tuple(sorted(classes.orders))


def test_normalizer_and_weyl_group_in_s3():
    G = symmetric_group(3)
    rotations = subgroup_generated(G, [Permutation((1, 2, 0))])
    swap = subgroup_generated(G, [Permutation((1, 0, 2))])
    assert normalizer(G, rotations).order == 6
    assert normalizer(G, swap) == swap

    W, quotient = weyl_group(G, rotations)
    assert W.order == 2
    assert set(quotient) == set(range(G.order))
    assert weyl_group(G, swap)[0].order == 1
    assert weyl_group(G, trivial_subgroup(G))[0].order == 6


def test_is_subconjugate():
    G = symmetric_group(3)
    swap = subgroup_generated(G, [Permutation((1, 0, 2))])
    other = subgroup_generated(G, [Permutation((0, 2, 1))])
    rotations = subgroup_generated(G, [Permutation((1, 2, 0))])
    assert is_subconjugate(G, swap, other)
    assert not is_subconjugate(G, swap, rotations)
    assert is_subconjugate(G, trivial_subgroup(G), rotations)


def test_coset_action():
    G = symmetric_group(3)
    swap = subgroup_generated(G, [Permutation((1, 0, 2))])
    action = coset_action(G, swap)
    assert action.size == 3
    assert action.is_homomorphism()
    # point 0 is the coset H itself, stabilized exactly by H
    assert action.stabilizer(0) == swap
    assert len(action.orbits()) == 1
    assert action.fixed_points(swap.members) == [0]


SMALL_GROUPS = [symmetric_group(3), dihedral_group(8), alternating_group(4)]


@pytest.mark.parametrize("G", SMALL_GROUPS)
def test_subconjugacy_is_a_partial_order_on_classes(G):
    classes = list(subgroup_classes(G))
    below = {
        (i, j): is_subconjugate(G, A, B)
        for i, A in enumerate(classes)
        for j, B in enumerate(classes)
    }
    n = len(classes)
    for i in range(n):
        assert below[i, i]
        assert below[0, i]
        assert below[i, n - 1]
        for j in range(n):
            if below[i, j] and below[j, i]:
                assert i == j
            for k in range(n):
                if below[i, j] and below[j, k]:
                    assert below[i, k]


@pytest.mark.parametrize("G", SMALL_GROUPS)
def test_coset_action_is_transitive_with_conjugate_stabilizers(G):
    classes = subgroup_classes(G)
    for j, H in enumerate(classes):
        action = coset_action(G, H)
        assert action.size == G.order // H.order
        assert action.is_homomorphism()
        assert action.orbits() == [list(range(action.size))]
        assert action.stabilizer(0) == H
        for p in range(action.size):
            assert classes.index_of(action.stabilizer(p)) == j


def test_restricted_action_keeps_points():
    G = symmetric_group(3)
    swap = subgroup_generated(G, [Permutation((1, 0, 2))])
    restricted = coset_action(G, trivial_subgroup(G)).restrict_to(swap)
    # six points, the order-2 subgroup acts freely => three orbits
    assert restricted.size == 6
    assert len(restricted.orbits()) == 3
    assert restricted.is_homomorphism()


def test_subgroup_realization():
    G = symmetric_group(3)
    swap = subgroup_generated(G, [Permutation((1, 0, 2))])
    local = swap.as_group
    assert local.order == 2
    assert local.degree == 2
    assert len(local.generators) == 1

    p = Permutation((1, 0, 2))
    image = swap.embed(p)
    assert image != Permutation.identity(2)
    assert swap.parent_index(local.index_of(image)) == G.index_of(p)
    with pytest.raises(SubgroupMismatchError):
        swap.embed(Permutation((1, 2, 0)))

    # lifting the whole realized group recovers the subgroup
    assert swap.lift(whole_group(local)) == swap


def test_whole_group_is_its_own_realization():
    G = symmetric_group(3)
    assert whole_group(G).as_group is G
    assert whole_group(G).local_index(4) == 4
