import json

import pytest

from burnsidefix.burnside import BurnsideElement
from burnsidefix.cli import element_from_json, element_to_json, main, parse_scene
from burnsidefix.exceptions import SceneError
from burnsidefix.lefschetz import lefschetz_from_orbits

CUBIC = {
    "group": {"degree": 2, "generators": [[1, 0]]},
    "representations": {
        "sign": {"subgroup": "G", "dimension": 1, "generators": [[["-1"]]]},
        "line": {"subgroup": "e", "dimension": 1, "generators": []},
    },
    "maps": {
        "zero": {"representation": "sign", "matrix": [["0"]]},
        "three": {"representation": "line", "matrix": [["3"]]},
    },
    "fixed_orbits": [
        {"isotropy": "G", "slice": "sign", "normal_derivative": "zero"},
        {"isotropy": "e", "slice": "line", "normal_derivative": "three"},
    ],
    "command": "lefschetz orbits",
}

HYPERBOLIC = {
    "group": {"name": "C1"},
    "representations": {"line": {"subgroup": "e", "dimension": 1, "generators": []}},
    "maps": {"contract": {"representation": "line", "matrix": [["1/2"]]}},
    "periodic_orbits": [
        {"isotropy": "e", "slice": "line", "poincare": "contract", "multiplicity": 3}
    ],
}


def _write(tmp_path, doc, name="scene.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_info_trivial(tmp_path, capsys):
    path = _write(tmp_path, {"group": {"degree": 1, "generators": []}})
    code, out, _ = _run(capsys, "group-info", "--scene", path)
    assert code == 0
    assert "1 class" in out


def test_group_info_s3_json(tmp_path, capsys):
    path = _write(tmp_path, {"group": {"name": "S3"}})
    code, out, _ = _run(capsys, "group-info", "--scene", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 6
    assert [c["weyl_order"] for c in payload["classes"]] == [6, 1, 2, 1]


def test_order_cap(tmp_path, capsys):
    path = _write(tmp_path, {"group": {"name": "S5"}, "max_order": 100})
    code, _, err = _run(capsys, "group-info", "--scene", path)
    assert code == 2
    assert "cap" in err
    # the command line flag overrides the document
    code, out, _ = _run(capsys, "group-info", "--scene", path, "--max-order", "120")
    assert code == 0
    assert "19 classes" in out


def test_marks(tmp_path, capsys):
    path = _write(tmp_path, {"group": {"name": "C2"}})
    code, out, _ = _run(capsys, "marks", "--scene", path, "--format", "json")
    assert code == 0
    assert json.loads(out)["marks"] == [[2, 1], [0, 1]]

    path = _write(tmp_path, {"group": {"name": "C1"}}, "trivial.json")
    _, out, _ = _run(capsys, "marks", "--scene", path, "--format", "json")
    assert json.loads(out)["marks"] == [[1]]


def test_lefschetz_orbits_cubic(tmp_path, capsys):
    path = _write(tmp_path, CUBIC)
    code, out, _ = _run(capsys, "lefschetz", "orbits", "--scene", path)
    assert code == 0
    assert "[G/G] − [G/e]" in out
    assert "(−1, 1)" in out


def test_lefschetz_with_restriction_report(tmp_path, capsys):
    doc = dict(CUBIC, fixed_marks=[-1, 1], fixed_point_free=[])
    path = _write(tmp_path, doc)
    code, out, _ = _run(capsys, "lefschetz", "orbits", "--scene", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["restriction_passed"] is True
    assert len(payload["restriction"]) == 2


def test_lefschetz_empty_and_inconsistent(tmp_path, capsys):
    path = _write(tmp_path, {"group": {"name": "C2"}})
    code, out, _ = _run(capsys, "lefschetz", "orbits", "--scene", path)
    assert code == 0
    assert "L_G(f) = 0" in out

    path = _write(tmp_path, {"group": {"name": "C2"}, "fixed_marks": [1, 0]}, "bad.json")
    code, _, _ = _run(capsys, "lefschetz", "marks", "--scene", path)
    assert code == 3


def test_lefschetz_cellular(tmp_path, capsys):
    doc = {
        "group": {"name": "C2"},
        "cellular": [
            {
                "chain_maps": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                "boundaries": [[[-1, -1], [1, 1]]],
            },
            {"chain_maps": [[[1, 0], [0, 1]]]},
        ],
    }
    path = _write(tmp_path, doc)
    code, out, _ = _run(capsys, "lefschetz", "cellular", "--scene", path)
    assert code == 0
    assert "2·[G/G]" in out


def test_fuller(tmp_path, capsys):
    path = _write(tmp_path, HYPERBOLIC)
    code, out, _ = _run(capsys, "fuller", "--scene", path)
    assert code == 0
    assert "1/3·[e/e]" in out

    path = _write(tmp_path, {"group": {"name": "C2"}}, "empty.json")
    code, out, _ = _run(capsys, "fuller", "--scene", path)
    assert code == 0
    assert "F_G = 0" in out

    resonant = json.loads(json.dumps(HYPERBOLIC))
    resonant["maps"]["contract"]["matrix"] = [["-1"]]
    resonant["periodic_orbits"][0]["multiplicity"] = 2
    path = _write(tmp_path, resonant, "resonant.json")
    code, _, _ = _run(capsys, "fuller", "--scene", path)
    assert code == 3


def test_fuller_json_round_trip(tmp_path, capsys):
    path = _write(tmp_path, HYPERBOLIC)
    _, out, _ = _run(capsys, "fuller", "--scene", path, "--format", "json")
    payload = json.loads(out)
    G = parse_scene(HYPERBOLIC).group
    F = element_from_json(payload["element"], G)
    assert F.coeffs[0].numerator == 1 and F.coeffs[0].denominator == 3
    assert element_to_json(F) == payload["element"]


def test_degree_and_burnside(tmp_path, capsys):
    doc = dict(CUBIC, degree={"map": "zero"}, burnside={"x": [1, 0], "y": [1, 0], "subgroup": "G"})
    doc["maps"] = dict(CUBIC["maps"], flip={"representation": "sign", "matrix": [["-1"]]})
    doc["degree"] = {"map": "flip"}
    path = _write(tmp_path, doc)

    code, out, _ = _run(capsys, "degree", "--scene", path)
    assert code == 0
    assert "[G/G] − [G/e]" in out
    _, out, _ = _run(capsys, "degree", "--scene", path, "--format", "json")
    assert json.loads(out)["matrix"] == [["-1"]]

    _, out, _ = _run(capsys, "burnside", "mul", "--scene", path)
    # [G/e]·[G/e] = 2·[G/e]
    assert "2·[G/e]" in out
    _, out, _ = _run(capsys, "burnside", "eta", "--scene", path, "--format", "json")
    assert json.loads(out)["element"]["text"] == "0"
    _, out, _ = _run(capsys, "burnside", "restrict", "--scene", path, "--format", "json")
    assert json.loads(out)["element"]["coeffs"] == [1, 0]


def test_burnside_induce_from_trivial(tmp_path, capsys):
    doc = {"group": {"name": "S3"}, "burnside": {"x": [1], "subgroup": "e"}}
    path = _write(tmp_path, doc)
    code, out, _ = _run(capsys, "burnside", "induce", "--scene", path, "--format", "json")
    assert code == 0
    assert json.loads(out)["element"]["coeffs"] == [1, 0, 0, 0]


def test_run_dispatches_on_command(tmp_path, capsys):
    path = _write(tmp_path, CUBIC)
    _, direct, _ = _run(capsys, "lefschetz", "orbits", "--scene", path)
    code, via_run, _ = _run(capsys, "run", "--scene", path)
    assert code == 0
    assert via_run == direct


def test_output_is_deterministic(tmp_path, capsys):
    path = _write(tmp_path, CUBIC)
    for fmt in ("text", "json"):
        _, first, _ = _run(capsys, "run", "--scene", path, "--format", fmt)
        _, second, _ = _run(capsys, "run", "--scene", path, "--format", fmt)
        assert first == second


def test_json_round_trip_of_lefschetz(tmp_path, capsys):
    path = _write(tmp_path, CUBIC)
    _, out, _ = _run(capsys, "run", "--scene", path, "--format", "json")
    scene = parse_scene(CUBIC)
    expected = lefschetz_from_orbits(scene.group, scene.fixed_orbits)
    assert element_from_json(json.loads(out)["element"], scene.group) == expected
    assert json.loads(out)["marks"] == [-1, 1]


def test_input_errors(tmp_path, capsys):
    bad_json = tmp_path / "broken.json"
    bad_json.write_text('{"group": ', encoding="utf-8")
    code, _, err = _run(capsys, "marks", "--scene", str(bad_json))
    assert code == 2
    assert "line 1" in err

    code, _, _ = _run(capsys, "marks", "--scene", str(tmp_path / "missing.json"))
    assert code == 2

    doc = json.loads(json.dumps(CUBIC))
    doc["fixed_orbits"][0]["isotropy"] = "K"
    code, _, err = _run(capsys, "lefschetz", "orbits", "--scene", _write(tmp_path, doc, "k.json"))
    assert code == 2
    assert "fixed_orbits[0].isotropy" in err

    doc = json.loads(json.dumps(CUBIC))
    doc["representations"]["sign"]["generators"] = [[["2"]]]
    code, _, _ = _run(capsys, "run", "--scene", _write(tmp_path, doc, "rep.json"))
    assert code == 2


def test_scene_field_errors():
    with pytest.raises(SceneError) as info:
        parse_scene({"group": {"degree": 2, "generators": [[0, 0]]}})
    assert info.value.field == "group.generators[0]"

    doc = json.loads(json.dumps(CUBIC))
    doc["maps"]["zero"]["matrix"] = [["1/0"]]
    with pytest.raises(SceneError) as info:
        parse_scene(doc)
    assert info.value.field == "maps.zero.matrix"

    with pytest.raises(SceneError):
        element_from_json({"group_order": 3, "coeffs": [1]}, parse_scene(CUBIC).group)


def test_blank_command_is_an_input_error(tmp_path, capsys):
    doc = {"group": {"name": "C2"}, "command": "   "}
    with pytest.raises(SceneError) as info:
        parse_scene(doc)
    assert info.value.field == "command"

    code, _, err = _run(capsys, "run", "--scene", _write(tmp_path, doc))
    assert code == 2
    assert "command" in err

    path = _write(tmp_path, {"group": {"name": "C2"}}, "none.json")
    code, _, err = _run(capsys, "run", "--scene", path)
    assert code == 2
    assert "command" in err


def test_scene_builds_elements():
    scene = parse_scene(dict(CUBIC, burnside={"x": [0, 1]}))
    assert scene.element("x", scene.group) == BurnsideElement.one(scene.group)
