"""Command-line interface: exit codes, JSON schema, determinism."""

import json

import pytest

from qpbw import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_transition_json(capsys):
    code, out, err = run(["transition", "--type", "A2", "--from", "2,1,2",
                          "--to", "1,2,1", "--weight", "1,1",
                          "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    block = doc["blocks"][0]
    assert block["type"] == "A2"
    assert block["from"] == [2, 1, 2] and block["to"] == [1, 2, 1]
    assert block["weight"] == [1, 1]
    assert len(block["rows"]) == 2
    for row in block["rows"]:
        assert row["entries"]  # invertible block: no empty rows


def test_transition_deterministic(capsys):
    argv = ["transition", "--type", "B2", "--from", "1,2,1,2",
            "--to", "2,1,2,1", "--height", "2", "--format", "json"]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second


def test_transition_identity_word(capsys):
    code, out, _ = run(["transition", "--type", "A2", "--from", "1,2,1",
                        "--to", "1,2,1", "--weight", "1,1",
                        "--format", "json"], capsys)
    assert code == 0
    block = json.loads(out)["blocks"][0]
    for row in block["rows"]:
        assert row["entries"] == [{"tgt": row["src"], "coeff": "1"}]


def test_transition_bad_inputs(capsys):
    cases = [
        ["transition", "--type", "Z9", "--from", "1", "--to", "1"],
        ["transition", "--type", "A2", "--from", "1,1", "--to", "1,2"],
        ["transition", "--type", "A2", "--from", "1,2,1", "--to", "1,2"],
        ["transition", "--type", "A2", "--from", "1,2,1", "--to", "1,2,1",
         "--family", "nonsense"],
        ["transition", "--type", "A2", "--from", "1,2,1", "--to", "1,2,1",
         "--weight", "1,2,3"],
    ]
    for argv in cases:
        code, _, err = run(argv, capsys)
        assert code == 2
        assert err  # diagnostics go to stderr


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "sl2", "--format", "json"],
                       capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["suite"] == "sl2"
    assert doc["cases"] > 0
    assert doc["failures"] == []


def test_verify_with_type_and_height(capsys):
    code, out, _ = run(["verify", "decomp", "--type", "A2",
                        "--height", "2", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_verify_unknown_suite(capsys):
    code, _, err = run(["verify", "nonsense"], capsys)
    assert code == 2
    assert err


def test_verify_unknown_type(capsys):
    code, _, err = run(["verify", "decomp", "--type", "Z9"],
                       capsys)
    assert code == 2


def test_verify_bad_d_reading(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "conj1", "--type", "A2", "--d-reading", "bogus"],
            capsys)
    assert exc.value.code == 2


def test_env_height(capsys, monkeypatch):
    monkeypatch.setenv("QPBW_HEIGHT", "2")
    code, out, _ = run(["verify", "pairing", "--type", "A2",
                        "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_text_output(capsys):
    code, out, _ = run(["verify", "sl2"], capsys)
    assert code == 0
    assert "0 failures" in out
