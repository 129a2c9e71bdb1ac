import pytest

from burnsidefix.named_groups import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    named_group,
    symmetric_group,
)
from burnsidefix.permutations import subgroup_classes


def test_orders():
    assert cyclic_group(1).order == 1
    assert cyclic_group(5).order == 5
    assert dihedral_group(8).order == 8
    assert symmetric_group(4).order == 24
    assert alternating_group(4).order == 12
    assert alternating_group(2).order == 1


def test_klein_four_group():
    """Order 4 gives the Klein group: three subgroups of order 2, all normal."""
    G = dihedral_group(4)
    assert G.order == 4
    assert subgroup_classes(G).orders == (1, 2, 2, 2, 4)


def test_named_group_parsing():
    assert named_group("S3") == symmetric_group(3)
    assert named_group(" D8 ") == dihedral_group(8)
    assert named_group("C4") == cyclic_group(4)
    assert named_group("A4") == alternating_group(4)


def test_invalid_names_and_orders():
    with pytest.raises(ValueError):
        named_group("Q8")
    with pytest.raises(ValueError):
        dihedral_group(5)
    with pytest.raises(ValueError):
        cyclic_group(0)
