import io
import json
import os

import pytest

from laxtop import spaces
from laxtop.cli import run_command
from laxtop.serialization import space_to_dict, to_json


def run(argv):
    out = io.StringIO()
    code = run_command(argv, out)
    return code, out.getvalue()


@pytest.fixture
def space_file(tmp_path):
    def write(space, name="space.json"):
        path = tmp_path / name
        path.write_text(to_json(space_to_dict(space)))
        return str(path)

    return write


def test_no_command_is_usage_error():
    code, _ = run([])
    assert code == 2


def test_unknown_command_is_usage_error():
    code, _ = run(["frobnicate"])
    assert code == 2


def test_check_passing(space_file):
    code, out = run(["check", space_file(spaces.chain(3)), "--props", "t0,sober,lattice"])
    assert code == 0
    assert "true" in out.lower()


def test_check_failing_property(space_file):
    code, _ = run(["check", space_file(spaces.antichain(2)), "--props", "lattice"])
    assert code == 1


def test_check_unknown_property(space_file):
    code, _ = run(["check", space_file(spaces.chain(2)), "--props", "zeta"])
    assert code == 2


def test_check_missing_file():
    code, out = run(["check", "/nonexistent/space.json"])
    assert code == 2
    assert "error" in out


def test_check_json_output(space_file):
    code, out = run(["check", space_file(spaces.div12()), "--props", "heyting", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["heyting"]["is_heyting"] is True


def test_construct_product_with_verify(tmp_path):
    data = {
        "base": space_to_dict(spaces.chain(3)),
        "objects": [
            {"space": space_to_dict(spaces.point()), "alpha": {"*": "1"}},
            {"space": space_to_dict(spaces.point()), "alpha": {"*": "2"}},
        ],
    }
    path = tmp_path / "prod.json"
    path.write_text(to_json(data))
    code, out = run(["construct", "product", str(path), "--verify", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["result"]["alpha"] == {"(*,*)": "1"}


def test_construct_respects_cap_env(tmp_path, monkeypatch):
    data = {
        "base": space_to_dict(spaces.chain(3)),
        "objects": [
            {"space": space_to_dict(spaces.point()), "alpha": {"*": "1"}},
        ],
    }
    path = tmp_path / "prod.json"
    path.write_text(to_json(data))
    monkeypatch.setenv("LAXTOP_CAP", "1")
    code, out = run(["construct", "product", str(path), "--verify"])
    assert code == 1
    assert "budget" in out


def test_construct_coequalizer(tmp_path):
    data = {
        "base": space_to_dict(spaces.chain(3)),
        "source": {"space": space_to_dict(spaces.point()), "alpha": {"*": "0"}},
        "target": {
            "space": space_to_dict(spaces.antichain(2)),
            "alpha": {"0": "1", "1": "2"},
        },
        "f": {"*": "0"},
        "g": {"*": "1"},
    }
    path = tmp_path / "pair.json"
    path.write_text(to_json(data))
    code, out = run(["construct", "coequalizer", str(path), "--verify", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert list(payload["result"]["alpha"].values()) == ["2"]


def test_descent_top_category(tmp_path):
    from laxtop.finspace import build_space

    src = build_space(
        ["a0", "a1", "b1", "b2", "c0", "c2"],
        order=[("a0", "a1"), ("b1", "b2"), ("c0", "c2")],
    )
    data = {
        "source": space_to_dict(src),
        "target": space_to_dict(spaces.chain(3)),
        "map": {"a0": "0", "a1": "1", "b1": "1", "b2": "2", "c0": "0", "c2": "2"},
    }
    path = tmp_path / "map.json"
    path.write_text(to_json(data))
    code, out = run(["descent", "--category", "top", str(path), "--json"])
    assert code == 1  # effective descent fails
    payload = json.loads(out)
    assert payload["is_descent"] == "true"
    assert payload["is_effective"] == "false"
    assert ["chain", ["0", "1", "2"]] in payload["witnesses"]


def test_descent_laxcomma_category(tmp_path):
    pt = space_to_dict(spaces.point())
    data = {
        "base": space_to_dict(spaces.chain(3)),
        "source": {"space": pt, "alpha": {"*": "2"}},
        "target": {"space": pt, "alpha": {"*": "2"}},
        "map": {"*": "*"},
    }
    path = tmp_path / "m.json"
    path.write_text(to_json(data))
    code, out = run(["descent", "--category", "laxcomma", str(path), "--json"])
    assert code == 0
    assert json.loads(out)["is_effective"] == "true"


def test_descent_fam_category(tmp_path):
    data = {
        "base": space_to_dict(spaces.sierpinski()),
        "source": {"index": ["i"], "values": {"i": "0"}},
        "target": {"index": ["j"], "values": {"j": "1"}},
        "map": {"i": "j"},
    }
    path = tmp_path / "fam.json"
    path.write_text(to_json(data))
    code, out = run(["descent", "--category", "fam", str(path), "--json"])
    assert code == 1
    assert json.loads(out)["is_descent"] == "false"


def test_expo_refutation(tmp_path):
    data = {
        "base": space_to_dict(spaces.m3()),
        "space": space_to_dict(spaces.point()),
        "alpha": {"*": "a"},
    }
    path = tmp_path / "obj.json"
    path.write_text(to_json(data))
    code, out = run(["expo", str(path), "--json"])
    assert code == 1
    payload = json.loads(out)
    assert payload["exponentiable"] == "false"
    assert payload["mode"] == "definitive"


def test_expo_positive(tmp_path):
    data = {
        "base": space_to_dict(spaces.div12()),
        "space": space_to_dict(spaces.point()),
        "alpha": {"*": "4"},
    }
    path = tmp_path / "obj.json"
    path.write_text(to_json(data))
    code, out = run(["expo", str(path), "--json"])
    assert code == 0
    assert json.loads(out)["exponentiable"] == "true"


def test_vietoris_on_lattice(space_file):
    code, out = run(["vietoris", space_file(spaces.chain(3)), "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"]["ok"] is True
    assert len(payload["members"]) == 4


def test_vietoris_without_meets(space_file):
    code, out = run(["vietoris", space_file(spaces.antichain(2)), "--json"])
    assert code == 1
    payload = json.loads(out)
    assert payload["algebra"]["ok"] is False


def test_paper_check_single_suite_json():
    code, out = run(
        ["paper-check", "--suites", "poset-count-calibration", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == 1
    assert payload["ok"] is True
    assert payload["suites"][0]["name"] == "poset-count-calibration"
    assert payload["suites"][0]["failed"] == 0


def test_paper_check_unknown_suite_fails():
    code, out = run(["paper-check", "--suites", "no-such-suite"])
    assert code == 1
    assert "FAIL" in out


def test_paper_check_json_is_deterministic():
    argv = ["paper-check", "--suites", "finite-sober", "--max-points", "3", "--json"]
    _, first = run(argv)
    _, second = run(argv)
    assert first == second
