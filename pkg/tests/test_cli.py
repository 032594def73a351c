import csv
import io
import json

import jsonschema
import pytest

from eccbounds.cli import main, sniff_format

INT = {"type": "integer"}
STR = {"type": "string"}
BOOL = {"type": "boolean"}
INT_LIST = {"type": "array", "items": INT}
NULLABLE_BOOL = {"type": ["boolean", "null"]}
WITNESSES = {"type": "array", "items": STR}

INVARIANTS = {
    "type": "object",
    "required": [
        "n", "m", "max_degree", "min_degree", "radius", "diameter", "total_eccentricity",
        "m1", "m2", "e1", "e2", "wiener", "harary", "xi_c", "xi_cc",
        "degrees", "neighbor_degree_sums", "eccentricities", "distance_sums",
    ],
    "properties": {
        "harary": {
            "type": "object",
            "required": ["num", "den", "decimal"],
            "properties": {"num": INT, "den": INT, "decimal": STR},
        },
        "xi_c": INT,
        "degrees": INT_LIST,
        "eccentricities": INT_LIST,
    },
}

FAMILY = {
    "type": "object",
    "required": ["family", "graph6", "n", "m", "computed", "predicted", "status", "match", "note"],
    "properties": {
        "computed": INT,
        "predicted": {"type": ["integer", "null"]},
        "status": {"enum": ["CONFIRMED", "KNOWN_DISCREPANCY", "NO_FORMULA"]},
        "match": NULLABLE_BOOL,
    },
}

CHECK = {
    "type": "object",
    "required": ["id", "note"],
    "oneOf": [
        {
            "required": ["lhs", "rhs", "holds", "equality", "predicted_equality", "agreement"],
            "properties": {
                "lhs": STR, "rhs": STR, "holds": BOOL, "equality": BOOL,
                "predicted_equality": NULLABLE_BOOL, "agreement": NULLABLE_BOOL,
            },
        },
        {"required": ["applicable"], "properties": {"applicable": {"const": False}}},
    ],
}
CHECKS = {"type": "array", "items": CHECK}

BOUND_ENTRY = {
    "type": "object",
    "required": [
        "formula", "asserted", "graphs_checked", "holds", "violations", "inapplicable",
        "violation_witnesses", "equality_count", "equality_witnesses", "equality_condition", "named",
    ],
    "properties": {
        "graphs_checked": INT, "holds": INT, "violations": INT, "inapplicable": INT,
        "violation_witnesses": WITNESSES, "equality_witnesses": WITNESSES,
        "census": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["satisfying", "with_equality"],
            },
        },
    },
}

REPORT = {
    "type": "object",
    "required": ["config", "summary", "bounds", "identities", "oracle"],
    "properties": {
        "summary": {
            "type": "object",
            "required": ["total_graphs", "graphs_per_n", "asserted_violations", "ok"],
        },
        "bounds": {"type": "object", "additionalProperties": BOUND_ENTRY},
        "identities": {"type": "object", "required": ["checked", "failures"]},
        "oracle": {"type": "object", "required": ["sampled", "mismatches", "witnesses"]},
    },
    "not": {"required": ["runtime"]},
}


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_stdin_k4(capsys, monkeypatch):
    code, out, err = run(capsys, ["compute", "--format", "graph6", "-"], "C~\n", monkeypatch)
    assert code == 0 and err == ""
    data = json.loads(out)
    jsonschema.validate(data, INVARIANTS)
    assert data["xi_c"] == 36


def test_compute_edge_list_sniffed(capsys, monkeypatch):
    code, out, _ = run(capsys, ["compute", "-"], "4 3\n0 1\n1 2\n2 3\n", monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["xi_c"] == 24 and data["harary"]["num"] == 13


def test_compute_many_graphs_gives_array(capsys, monkeypatch):
    code, out, _ = run(capsys, ["compute", "-"], "C~\nA_\n", monkeypatch)
    data = json.loads(out)
    assert code == 0 and [d["graph6"] for d in data] == ["C~", "A_"]
    for d in data:
        jsonschema.validate(d, INVARIANTS)


def test_compute_csv(capsys, monkeypatch):
    code, out, _ = run(capsys, ["compute", "--csv", "-"], "C~\nA_\n", monkeypatch)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["xi_c"] for r in rows] == ["36", "2"]


def test_file_and_stdin_identical(capsys, monkeypatch, tmp_path):
    text = "Dl{\nC~\n"
    path = tmp_path / "g.g6"
    path.write_text(text)
    for cmd in ("compute", "verify"):
        _, from_file, _ = run(capsys, [cmd, str(path)])
        _, from_stdin, _ = run(capsys, [cmd, "-"], text, monkeypatch)
        assert from_file == from_stdin


def test_sweep_file_and_stdin_identical(capsys, monkeypatch, tmp_path):
    text = "C~\nCh\nD??\nDl{\n"
    path = tmp_path / "g.g6"
    path.write_text(text)
    code1, a, err = run(capsys, ["sweep", "--graph6", str(path)])
    code2, b, _ = run(capsys, ["sweep", "--graph6", "-"], text, monkeypatch)
    assert code1 == code2 == 0 and a == b
    assert "disconnected" in err
    jsonschema.validate(json.loads(a), REPORT)


def test_family_prism(capsys):
    code, out, _ = run(capsys, ["family", "prism:3"])
    data = json.loads(out)
    jsonschema.validate(data, FAMILY)
    assert (code, data["computed"], data["predicted"], data["status"]) == (0, 108, 108, "CONFIRMED")


def test_family_pyramid_is_informational(capsys):
    code, out, _ = run(capsys, ["family", "pyramid:4"])
    data = json.loads(out)
    assert (code, data["computed"], data["predicted"], data["status"]) == (0, 92, 52, "KNOWN_DISCREPANCY")
    assert [r["computed"] for r in data["census"]][:3] == [92, 125, 162]


def test_family_many_and_csv(capsys):
    code, out, _ = run(capsys, ["family", "--csv", "complete:5", "multipartite:2,3,3", "kminusmatching:6,2"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["status"] for r in rows] == ["CONFIRMED", "CONFIRMED", "NO_FORMULA"]


def test_family_bad_spec(capsys):
    code, out, err = run(capsys, ["family", "prism:2"])
    assert code == 2 and out == "" and "prism" in err


def test_verify_k4(capsys, monkeypatch):
    code, out, _ = run(capsys, ["verify", "-"], "C~\n", monkeypatch)
    data = json.loads(out)
    jsonschema.validate(data, CHECKS)
    assert code == 0 and len(data) == 24
    assert data[-1] == {"id": "T12_NG", "applicable": False, "note": "T12_NG requires a connected complement"}
    failing = [c["id"] for c in data if c.get("holds") is False]
    assert failing == ["T1ii_stated_U"]


def test_verify_c5_ng_equality(capsys, monkeypatch):
    code, out, _ = run(capsys, ["verify", "--format", "edgelist", "-"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n", monkeypatch)
    ng = json.loads(out)[-1]
    assert code == 0 and (ng["lhs"], ng["rhs"], ng["agreement"]) == ("80", "80", True)


def test_verify_counterexample_exits_one(capsys, monkeypatch):
    code, out, err = run(capsys, ["verify", "-"], "F?LS_\n", monkeypatch)
    assert code == 1 and "violated" in err
    t13 = [c for c in json.loads(out) if c["id"] == "T13_L"][0]
    assert t13["holds"] is False


def test_sweep_n_max_five(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, err = run(capsys, ["sweep", "--n-max", "5", "--workers", "2", "-o", str(out_path)])
    assert code == 0 and out == ""
    data = json.loads(out_path.read_text())
    jsonschema.validate(data, REPORT)
    stated = data["bounds"]["T1ii_stated_U"]
    assert stated["asserted"] is False and stated["violations"] >= 3
    assert "expected" in stated["status_note"]
    assert data["summary"]["ok"] is True


def test_sweep_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("ECC_BOUNDS_WORKERS", "2")
    code, a, _ = run(capsys, ["sweep", "--n-max", "4"])
    monkeypatch.setenv("ECC_BOUNDS_WORKERS", "1")
    _, b, _ = run(capsys, ["sweep", "--n-max", "4"])
    assert code == 0 and a == b
    monkeypatch.setenv("ECC_BOUNDS_WORKERS", "zero")
    code, _, err = run(capsys, ["sweep", "--n-max", "4"])
    assert code == 2 and "ECC_BOUNDS_WORKERS" in err


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, ["sweep", "--n-max", "4", "--csv", "--bounds", "T4_U,T13_L"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["id"] for r in rows] == ["T4_U", "T13_L"]


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--n-max", "8"],
        ["sweep", "--bounds", "T99"],
        ["sweep", "--n-min", "1"],
        ["compute", "/nonexistent.g6"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["family", "complete:4", "--json", "--csv"])
    assert info.value.code == 2


def test_parse_error_exit_two(capsys, monkeypatch):
    code, out, err = run(capsys, ["compute", "-"], "C~\nC!\n", monkeypatch)
    assert code == 2 and out == "" and ":2:" in err


def test_disconnected_input(capsys, monkeypatch):
    code, _, err = run(capsys, ["compute", "-"], "D??\n", monkeypatch)
    assert code == 2 and "disconnected" in err


@pytest.mark.parametrize(
    "path, text, fmt",
    [
        ("a.g6", "3 2", "graph6"),
        ("a.edges", "C~", "edgelist"),
        ("-", "# comment\n\n4 3\n", "edgelist"),
        ("-", "C~\n", "graph6"),
        ("-", ">>graph6<<C~\n", "graph6"),
    ],
)
def test_sniff(path, text, fmt):
    assert sniff_format(path, text) == fmt
