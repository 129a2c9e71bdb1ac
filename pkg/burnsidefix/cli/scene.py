"""
scene.py
========

Loading and validating scene documents, the JSON input of the command line
front end.

A scene describes one group and the data the commands consume::

    {
      "group": {"degree": 2, "generators": [[1, 0]]},
      "subgroups": {"H": [[1, 0]]},
      "representations": {
        "sign": {"subgroup": "G", "dimension": 1, "generators": [[["-1"]]]},
        "line": {"subgroup": "e", "dimension": 1, "generators": []}
      },
      "maps": {
        "zero": {"representation": "sign", "matrix": [["0"]]},
        "three": {"representation": "line", "matrix": [["3"]]}
      },
      "fixed_orbits": [
        {"isotropy": "G", "slice": "sign", "normal_derivative": "zero"},
        {"isotropy": "e", "slice": "line", "normal_derivative": "three"}
      ],
      "command": "lefschetz orbits"
    }

The group may instead be given by name, ``{"group": {"name": "S3"}}``. The
subgroup names ``G`` (whole group) and ``e`` (trivial subgroup) are always
defined. A representation's ``generators`` hold one matrix per generator of
its subgroup, in the order the subgroup's generators were listed (for ``G``,
the group's generators); ``"permutation": true`` selects the natural
permutation representation instead. Matrix entries are integers or exact
fraction strings such as ``"-3/4"``.

Optional sections: ``periodic_orbits`` (like ``fixed_orbits`` with
``poincare`` and ``multiplicity``), ``fixed_marks`` (one integer per subgroup
class), ``fixed_point_free`` (subgroup names), ``cellular`` (one
``{"chain_maps", "boundaries"}`` object per subgroup class), ``burnside``
(``x``, ``y`` coefficient lists and a ``subgroup`` name), ``degree``
(``{"map": name}``), ``max_order`` and ``command``.

Every problem is reported as a :class:`~burnsidefix.exceptions.SceneError`
naming the offending field.
"""

from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..burnside import BurnsideElement, MarkVector
from ..exceptions import BurnsideFixError, SceneError
from ..fuller import PeriodicOrbitDatum
from ..lefschetz import ChainMapData, FixedOrbitDatum
from ..named_groups import named_group
from ..permutations import (
    DEFAULT_MAX_ORDER,
    HARD_MAX_ORDER,
    FiniteGroup,
    Permutation,
    Subgroup,
    group_closure,
    subgroup_classes,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from ..representations import (
    EquivariantLinearMap,
    RationalRepresentation,
    permutation_representation,
    rep_from_generators,
)

logger = logging.getLogger(__name__)


@contextmanager
def _field(path: str):
    """Attach ``path`` to plain parse errors raised inside the block."""
    try:
        yield
    except BurnsideFixError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as err:
        raise SceneError(str(err), path) from err


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise SceneError(f"missing required key '{key}'", path)
    return doc[key]


def _mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise SceneError("expected an object", path)
    return value


def _listing(value, path: str) -> list:
    if not isinstance(value, list):
        raise SceneError("expected an array", path)
    return value


@dataclass
class Scene:
    """
    A validated scene with every name resolved.

    :ivar group: The ambient group ``G``.
    :ivar subgroups: Named subgroups, always including ``G`` and ``e``.
    :ivar representations: Named representations, each over the realization
        of the subgroup it was declared on.
    :ivar maps: Named equivariant linear maps.
    """

    group: FiniteGroup
    subgroups: dict[str, Subgroup]
    representations: dict[str, RationalRepresentation] = field(default_factory=dict)
    maps: dict[str, EquivariantLinearMap] = field(default_factory=dict)
    fixed_orbits: list[FixedOrbitDatum] = field(default_factory=list)
    periodic_orbits: list[PeriodicOrbitDatum] = field(default_factory=list)
    fixed_marks: MarkVector | None = None
    fixed_point_free: tuple[int, ...] = ()
    cellular: list[ChainMapData] | None = None
    burnside: dict[str, Any] = field(default_factory=dict)
    degree_map: str | None = None
    command: str | None = None

    def subgroup(self, name: str, path: str) -> Subgroup:
        if name not in self.subgroups:
            raise SceneError(f"unknown subgroup '{name}'", path)
        return self.subgroups[name]

    def representation(self, name: str, path: str) -> RationalRepresentation:
        if name not in self.representations:
            raise SceneError(f"unknown representation '{name}'", path)
        return self.representations[name]

    def map(self, name: str, path: str) -> EquivariantLinearMap:
        if name not in self.maps:
            raise SceneError(f"unknown map '{name}'", path)
        return self.maps[name]

    def element(self, key: str, over: FiniteGroup) -> BurnsideElement:
        """A Burnside ring element from the ``burnside`` section."""
        path = f"burnside.{key}"
        coeffs = _listing(_require(self.burnside, key, "burnside"), path)
        with _field(path):
            return BurnsideElement(over, tuple(coeffs))


def _permutation(images, degree: int, path: str) -> Permutation:
    with _field(path):
        p = Permutation(tuple(_listing(images, path)))
    if p.degree != degree:
        raise SceneError(f"expected a permutation of degree {degree}, got {p.degree}", path)
    return p


def _load_group(doc: dict, max_order: int) -> FiniteGroup:
    entry = _mapping(_require(doc, "group", ""), "group")
    if "name" in entry:
        with _field("group.name"):
            return named_group(str(entry["name"]), max_order=max_order)
    degree = _require(entry, "degree", "group")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise SceneError("degree must be a positive integer", "group.degree")
    gens = [
        _permutation(g, degree, f"group.generators[{i}]")
        for i, g in enumerate(_listing(entry.get("generators", []), "group.generators"))
    ]
    with _field("group.max_order"):
        return group_closure(degree, gens, max_order=max_order)


def _load_subgroups(doc: dict, G: FiniteGroup) -> dict[str, Subgroup]:
    subgroups = {"G": whole_group(G), "e": trivial_subgroup(G)}
    for name, gens in _mapping(doc.get("subgroups", {}), "subgroups").items():
        path = f"subgroups.{name}"
        perms = [
            _permutation(g, G.degree, f"{path}[{i}]")
            for i, g in enumerate(_listing(gens, path))
        ]
        with _field(path):
            subgroups[name] = subgroup_generated(G, perms)
    return subgroups


def _subgroup_generators(H: Subgroup) -> list[Permutation]:
    """Generators of ``H`` carried into ``H.as_group``, in declaration order."""
    if H.generators is not None:
        return [H.as_group.elements[H.local_index(i)] for i in H.generators]
    return list(H.as_group.generators)


def _load_representation(scene: Scene, name: str, entry) -> RationalRepresentation:
    path = f"representations.{name}"
    entry = _mapping(entry, path)
    H = scene.subgroup(entry.get("subgroup", "G"), f"{path}.subgroup")
    if entry.get("permutation"):
        return permutation_representation(H.as_group)
    dimension = _require(entry, "dimension", path)
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 0:
        raise SceneError("dimension must be a non-negative integer", f"{path}.dimension")
    images = _listing(entry.get("generators", []), f"{path}.generators")
    gens = _subgroup_generators(H)
    if len(images) != len(gens):
        raise SceneError(
            f"expected {len(gens)} generator matrices, got {len(images)}", f"{path}.generators"
        )
    for i, m in enumerate(images):
        _listing(m, f"{path}.generators[{i}]")
    with _field(f"{path}.generators"):
        return rep_from_generators(H.as_group, dimension, images, generators=gens)


def _load_map(scene: Scene, name: str, entry) -> EquivariantLinearMap:
    path = f"maps.{name}"
    entry = _mapping(entry, path)
    rep = scene.representation(_require(entry, "representation", path), f"{path}.representation")
    matrix = _listing(_require(entry, "matrix", path), f"{path}.matrix")
    with _field(f"{path}.matrix"):
        return EquivariantLinearMap(rep, matrix)


def _load_orbit(scene: Scene, i: int, entry, periodic: bool):
    section = "periodic_orbits" if periodic else "fixed_orbits"
    path = f"{section}[{i}]"
    entry = _mapping(entry, path)
    isotropy = scene.subgroup(_require(entry, "isotropy", path), f"{path}.isotropy")
    slice_rep = scene.representation(_require(entry, "slice", path), f"{path}.slice")
    map_key = "poincare" if periodic else "normal_derivative"
    linear = scene.map(_require(entry, map_key, path), f"{path}.{map_key}")
    with _field(path):
        if periodic:
            multiplicity = entry.get("multiplicity", 1)
            return PeriodicOrbitDatum(isotropy, slice_rep, linear, multiplicity)
        return FixedOrbitDatum(isotropy, slice_rep, linear)


def _load_cellular(doc: dict, G: FiniteGroup) -> list[ChainMapData]:
    chains = _listing(doc["cellular"], "cellular")
    n = len(subgroup_classes(G))
    if len(chains) != n:
        raise SceneError(f"expected one chain map per subgroup class ({n}), got {len(chains)}", "cellular")
    out = []
    for i, entry in enumerate(chains):
        path = f"cellular[{i}]"
        entry = _mapping(entry, path)
        maps = _listing(_require(entry, "chain_maps", path), f"{path}.chain_maps")
        with _field(path):
            out.append(ChainMapData(tuple(maps), entry.get("boundaries")))
    return out


def parse_scene(doc: dict, max_order: int | None = None) -> Scene:
    """
    Validate a scene document and resolve every name in it.

    :param doc: The decoded JSON document.
    :param max_order: Order cap; overrides the document's ``max_order``.
    :raises SceneError: On any malformed or unresolved field.
    :raises InputError: On mathematically inconsistent input, such as
        generator images that do not define a representation.
    """
    doc = _mapping(doc, "")
    if max_order is None:
        max_order = doc.get("max_order", DEFAULT_MAX_ORDER)
    if not isinstance(max_order, int) or isinstance(max_order, bool) or max_order < 1:
        raise SceneError("max_order must be a positive integer", "max_order")
    if max_order > HARD_MAX_ORDER:
        raise SceneError(f"max_order may not exceed {HARD_MAX_ORDER}", "max_order")

    G = _load_group(doc, max_order)
    scene = Scene(G, _load_subgroups(doc, G))
    for name, entry in _mapping(doc.get("representations", {}), "representations").items():
        scene.representations[name] = _load_representation(scene, name, entry)
    for name, entry in _mapping(doc.get("maps", {}), "maps").items():
        scene.maps[name] = _load_map(scene, name, entry)
    for i, entry in enumerate(_listing(doc.get("fixed_orbits", []), "fixed_orbits")):
        scene.fixed_orbits.append(_load_orbit(scene, i, entry, periodic=False))
    for i, entry in enumerate(_listing(doc.get("periodic_orbits", []), "periodic_orbits")):
        scene.periodic_orbits.append(_load_orbit(scene, i, entry, periodic=True))

    if "fixed_marks" in doc:
        values = _listing(doc["fixed_marks"], "fixed_marks")
        with _field("fixed_marks"):
            scene.fixed_marks = MarkVector(G, tuple(values))
    if "fixed_point_free" in doc:
        classes = subgroup_classes(G)
        names = _listing(doc["fixed_point_free"], "fixed_point_free")
        scene.fixed_point_free = tuple(
            classes.index_of(scene.subgroup(n, f"fixed_point_free[{i}]"))
            for i, n in enumerate(names)
        )
    if "cellular" in doc:
        scene.cellular = _load_cellular(doc, G)

    scene.burnside = _mapping(doc.get("burnside", {}), "burnside")
    if "degree" in doc:
        scene.degree_map = _require(_mapping(doc["degree"], "degree"), "map", "degree")
        scene.map(scene.degree_map, "degree.map")
    command = doc.get("command")
    if command is not None and not isinstance(command, str):
        raise SceneError("expected a string", "command")
    if command is not None and not command.split():
        raise SceneError("must name a subcommand", "command")
    scene.command = command

    logger.info(
        "Scene: group of order %d, %d representations, %d maps, %d fixed and %d periodic orbits",
        G.order,
        len(scene.representations),
        len(scene.maps),
        len(scene.fixed_orbits),
        len(scene.periodic_orbits),
    )
    return scene


def load_scene(path: str | Path, max_order: int | None = None) -> Scene:
    """
    Read and validate a UTF-8 JSON scene file.

    :raises SceneError: If the file is not valid JSON, with the line and column
        of the first syntax error.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SceneError(f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}") from err
    return parse_scene(doc, max_order=max_order)
