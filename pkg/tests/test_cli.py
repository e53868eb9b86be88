import json
from pathlib import Path

import pytest

from crystalkit.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


EMPTY2 = '{"kind":"ms","rank":2,"segments":[]}'


def test_apply_f(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["apply", "f", "-i", "1"], EMPTY2)
    assert code == 0
    assert out.strip() == '{"kind":"ms","rank":2,"segments":[[1,1,1]]}'


def test_apply_e_kills(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["apply", "e", "-i", "1"], EMPTY2)
    assert code == 0 and out.strip() == "null"


def test_apply_star_and_flip(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["apply", "f*", "-i", "1"], '{"kind":"ms","rank":2,"segments":[[2,2,1]]}')
    assert code == 0 and json.loads(out)["segments"] == [[1, 2, 1]]
    code, out, _ = run(capsys, monkeypatch, ["apply", "flip"], '{"kind":"ms","rank":3,"segments":[[1,2,1]]}')
    assert json.loads(out)["segments"] == [[2, 3, 1]]


def test_apply_on_tableau_and_pbw(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["apply", "f", "-i", "1"], '{"kind":"tab","rank":2,"rows":[[0,0],[1]]}')
    assert code == 0 and json.loads(out)["rows"] == [[0, 1], [1]]
    code, out, _ = run(capsys, monkeypatch, ["apply", "f", "-i", "1"], '{"kind":"pbw","rank":2,"exponents":[0,0,0]}')
    assert json.loads(out)["exponents"] == [1, 0, 0]


def test_golden_trace(capsys, monkeypatch):
    src = str(FIXTURES / "example_rank5.json")
    code, out, _ = run(capsys, monkeypatch, ["apply", "sigma-chain", "--trace", "--input", src])
    assert code == 0
    assert out == (FIXTURES / "example_rank5_trace.jsonl").read_text()


def test_output_file(capsys, monkeypatch, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, monkeypatch, ["apply", "f", "-i", "2", "--output", str(dest)], EMPTY2)
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["segments"] == [[2, 2, 1]]


def test_convert(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["convert", "--to", "ms"], '{"kind":"pbw","rank":2,"exponents":[3,1,2]}')
    assert code == 0 and json.loads(out)["segments"] == [[1, 1, 3], [1, 2, 1], [2, 2, 2]]
    code, out, _ = run(capsys, monkeypatch, ["convert", "--to", "pbw"], out)
    assert json.loads(out)["exponents"] == [3, 1, 2]
    code, out, _ = run(capsys, monkeypatch, ["convert", "--to", "ms"], '{"kind":"tab","rank":3,"rows":[[0,1,2,3],[1,2,3],[2,3]]}')
    assert json.loads(out)["segments"] == [[1, 1, 1], [1, 2, 1], [1, 3, 1], [2, 2, 1], [2, 3, 1], [3, 3, 1]]


@pytest.mark.parametrize(
    "argv,stdin,code",
    [
        (["apply", "f"], EMPTY2, 1),  # missing index
        (["apply"], EMPTY2, 1),
        (["apply", "f", "-i", "3"], EMPTY2, 1),
        (["apply", "f", "-i", "1"], "{not json", 2),
        (["apply", "f", "-i", "1"], '{"kind":"xx","rank":2}', 2),
        (["apply", "f", "-i", "1"], '{"kind":"ms","rank":2,"segments":[[1,3,1]]}', 3),
        (["apply", "f", "-i", "1"], '{"kind":"ms","rank":2,"segments":[[1,1,0]]}', 3),
        (["convert", "--to", "tab"], EMPTY2, 1),
        (["verify", "nope"], None, 1),
    ],
)
def test_exit_codes(capsys, monkeypatch, argv, stdin, code):
    got, _, err = run(capsys, monkeypatch, argv, stdin)
    assert got == code
    assert "crystalkit:" in err


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("CRYSTALKIT_BUDGET", "2")
    code, _, err = run(capsys, monkeypatch, ["enumerate", "ms", "--rank", "2", "--max-size", "3"])
    assert code == 4 and "budget" in err


def test_verify_and_enumerate(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "ks", "--rank", "2", "--max-size", "3"])
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, monkeypatch, ["verify", "embedding", "--rank", "2", "--shape", "2,1"])
    assert code == 0 and json.loads(out)["params"]["shape"] == [2, 1]
    code, out, _ = run(capsys, monkeypatch, ["enumerate", "ms", "--rank", "2", "--max-size", "2"])
    assert code == 0 and len(out.splitlines()) == 7


def test_graph(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["graph", "ms", "--rank", "2", "--star", "--format", "dot"])
    assert code == 0 and out.startswith("digraph crystal {") and 'label="f1*", style=dashed' in out
    code, out, _ = run(capsys, monkeypatch, ["graph", "tab", "--rank", "2", "--shape", "2,1", "--format", "json"])
    doc = json.loads(out)
    assert len(doc["nodes"]) == 8 and len(doc["edges"]) == 8
