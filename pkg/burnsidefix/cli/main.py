"""
main.py
=======

The ``burnsidefix`` command.

Every subcommand reads one scene document (``--scene``) and prints either a
human readable report (``--format text``, the default) or a JSON object
(``--format json``) whose Burnside ring elements can be read back with
:func:`element_from_json`.

Subcommands::

    group-info                          order, subgroup classes, Weyl orders
    marks                               the table of marks
    burnside mul|eta|induce|restrict    ring operations on the burnside section
    degree                              equivariant degree of a named map
    lefschetz orbits|marks|cellular     the equivariant Lefschetz number
    fuller                              the equivariant Fuller index
    run                                 the subcommand named by "command"

Exit statuses: 0 on success, 2 for unreadable or invalid input, 3 when valid
input violates a mathematical precondition (a singular map, marks outside the
Burnside ring, a broken chain map).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

import pandas as pd

from ..burnside import (
    BurnsideElement,
    RationalBurnsideElement,
    basis_label,
    class_label,
    eta,
    induce,
    marks,
    rational_marks,
    restrict,
    table_of_marks,
)
from ..exceptions import InputError, PreconditionError, SceneError
from ..fuller import fuller_detect_all, fuller_sum
from ..lefschetz import (
    lefschetz_from_cellular,
    lefschetz_from_marks,
    lefschetz_from_orbits,
    restriction_report,
)
from ..permutations import FiniteGroup, subgroup_classes, weyl_group
from ..representations import equivariant_degree, equivariant_degree_marks
from ..utils import matrix_to_strings
from .scene import Scene, load_scene

logger = logging.getLogger(__name__)

BURNSIDE_OPS = ("mul", "eta", "induce", "restrict")
LEFSCHETZ_ROUTES = ("orbits", "marks", "cellular")


@dataclass
class Report:
    """A command result: a JSON-ready payload and its text rendering."""

    payload: dict
    text: str


def _minus(value) -> str:
    return str(value).replace("-", "−")


def element_to_json(x: BurnsideElement | RationalBurnsideElement) -> dict:
    """
    Machine readable form of a Burnside ring element. Integral elements keep
    integer coefficients; rational ones use ``"p/q"`` strings.
    """
    classes = subgroup_classes(x.group)
    rational = isinstance(x, RationalBurnsideElement)
    return {
        "kind": "rational" if rational else "integral",
        "group_order": x.group.order,
        "labels": [basis_label(classes, j) for j in range(len(classes))],
        "coeffs": [str(c) for c in x.coeffs] if rational else list(x.coeffs),
        "text": str(x),
    }


def element_from_json(doc: dict, group: FiniteGroup) -> BurnsideElement | RationalBurnsideElement:
    """
    Rebuild an element printed by :func:`element_to_json` over ``group``.

    :raises SceneError: If the document does not fit the group.
    """
    if doc.get("group_order") != group.order:
        raise SceneError("element belongs to a group of a different order", "group_order")
    try:
        if doc.get("kind") == "rational":
            return RationalBurnsideElement(group, tuple(doc["coeffs"]))
        return BurnsideElement(group, tuple(doc["coeffs"]))
    except (KeyError, TypeError, ValueError) as err:
        raise SceneError(str(err), "coeffs") from err


def _class_frame(G: FiniteGroup) -> pd.DataFrame:
    classes = subgroup_classes(G)
    tom = table_of_marks(G)
    return pd.DataFrame(
        {
            "class": [class_label(classes, j) for j in range(len(classes))],
            "order": list(classes.orders),
            "index": [G.order // H.order for H in classes],
            "weyl_order": list(tom.weyl_orders),
        }
    )


def cmd_group_info(scene: Scene) -> Report:
    G = scene.group
    frame = _class_frame(G)
    n = len(frame)
    summary = f"Group of order {G.order}: {n} {'class' if n == 1 else 'classes'}"
    payload = {
        "order": G.order,
        "degree": G.degree,
        "classes": json.loads(frame.to_json(orient="records")),
    }
    return Report(payload, summary + "\n" + frame.to_string(index=False))


def cmd_marks(scene: Scene) -> Report:
    tom = table_of_marks(scene.group)
    frame = tom.to_frame()
    payload = {"labels": list(frame.columns), "marks": tom.as_lists()}
    return Report(payload, frame.to_string())


def _element_report(name: str, x: BurnsideElement, extra: dict | None = None) -> Report:
    v = marks(x)
    payload = {"element": element_to_json(x), "marks": list(v.values)}
    payload.update(extra or {})
    return Report(payload, f"{name} = {x}\nmarks {v}")


def cmd_burnside(scene: Scene, op: str) -> Report:
    G = scene.group
    if op == "mul":
        x = scene.element("x", G)
        y = scene.element("y", G)
        return _element_report("x·y", x * y)
    H = scene.subgroup(scene.burnside.get("subgroup", "G"), "burnside.subgroup")
    if op == "eta":
        W, _ = weyl_group(G, H)
        return _element_report("η_H(x)", eta(G, H, scene.element("x", G)), {"weyl_order": W.order})
    if op == "induce":
        return _element_report("t(x)", induce(G, H, scene.element("x", H.as_group)))
    if op == "restrict":
        return _element_report("res(x)", restrict(G, H, scene.element("x", G)))
    raise SceneError(f"unknown burnside operation '{op}'", "command")


def cmd_degree(scene: Scene) -> Report:
    if scene.degree_map is None:
        raise SceneError("missing required key 'degree'")
    L = scene.maps[scene.degree_map]
    signs = equivariant_degree_marks(L)
    degree = equivariant_degree(L)
    payload = {
        "map": scene.degree_map,
        "matrix": matrix_to_strings(L.matrix),
        "element": element_to_json(degree),
        "marks": list(signs.values),
    }
    return Report(payload, f"Deg = {degree}\nmarks {signs}")


def cmd_lefschetz(scene: Scene, route: str) -> Report:
    G = scene.group
    if route == "orbits":
        L = lefschetz_from_orbits(G, scene.fixed_orbits)
    elif route == "marks":
        if scene.fixed_marks is None:
            raise SceneError("missing required key 'fixed_marks'")
        L = lefschetz_from_marks(scene.fixed_marks)
    elif route == "cellular":
        if scene.cellular is None:
            raise SceneError("missing required key 'cellular'")
        L = lefschetz_from_cellular(G, scene.cellular)
    else:
        raise SceneError(f"unknown lefschetz route '{route}'", "command")

    report = _element_report("L_G(f)", L)
    if scene.fixed_marks is not None and route != "marks":
        frame = restriction_report(G, L, scene.fixed_marks, scene.fixed_point_free)
        report.payload["restriction"] = json.loads(frame.to_json(orient="records"))
        report.payload["restriction_passed"] = bool(frame["passed"].all())
        report.text += "\n" + frame.to_string(index=False)
    return report


def cmd_fuller(scene: Scene) -> Report:
    G = scene.group
    F = fuller_sum(G, scene.periodic_orbits)
    classes = subgroup_classes(G)
    flags = fuller_detect_all(G, F)
    frame = pd.DataFrame(
        {
            "class": [class_label(classes, j) for j in range(len(classes))],
            "order": list(classes.orders),
            "mark": [_minus(v) for v in rational_marks(F)],
            "detected": list(flags),
        }
    )
    payload = {
        "element": element_to_json(F),
        "marks": [str(v) for v in rational_marks(F)],
        "detected": dict(zip(frame["class"], flags)),
    }
    return Report(payload, f"F_G = {F}\n" + frame.to_string(index=False))


def dispatch(scene: Scene, command: str, operand: str | None = None) -> Report:
    """Run one subcommand on a loaded scene."""
    if command == "group-info":
        return cmd_group_info(scene)
    if command == "marks":
        return cmd_marks(scene)
    if command == "burnside":
        return cmd_burnside(scene, operand or "")
    if command == "degree":
        return cmd_degree(scene)
    if command == "lefschetz":
        return cmd_lefschetz(scene, operand or "")
    if command == "fuller":
        return cmd_fuller(scene)
    if command == "run":
        words = (scene.command or "").split()
        if not words:
            raise SceneError("missing required key 'command'")
        if words[0] == "run":
            raise SceneError("a scene cannot run itself", "command")
        return dispatch(scene, words[0], words[1] if len(words) > 1 else None)
    raise SceneError(f"unknown command '{command}'", "command")


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.payload, indent=2, sort_keys=True, ensure_ascii=False)
    return report.text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scene", required=True, help="path to a JSON scene document")
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format (default text)"
    )
    common.add_argument(
        "--max-order", type=int, default=None, help="group order cap, overrides the scene"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr"
    )

    parser = argparse.ArgumentParser(
        prog="burnsidefix",
        description="Burnside ring computations for equivariant fixed point theory",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("group-info", parents=[common], help="subgroup classes and Weyl orders")
    sub.add_parser("marks", parents=[common], help="table of marks")
    p = sub.add_parser("burnside", parents=[common], help="Burnside ring operations")
    p.add_argument("operand", choices=BURNSIDE_OPS)
    sub.add_parser("degree", parents=[common], help="equivariant degree of a linear map")
    p = sub.add_parser("lefschetz", parents=[common], help="equivariant Lefschetz number")
    p.add_argument("operand", choices=LEFSCHETZ_ROUTES)
    sub.add_parser("fuller", parents=[common], help="equivariant Fuller index")
    sub.add_parser("run", parents=[common], help="run the scene's own command")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        scene = load_scene(args.scene, max_order=args.max_order)
        report = dispatch(scene, args.command, getattr(args, "operand", None))
    except (InputError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except PreconditionError as err:
        print(f"precondition failed: {err}", file=sys.stderr)
        return 3

    print(render(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
