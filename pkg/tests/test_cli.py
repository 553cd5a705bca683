import json
from fractions import Fraction

from sigwalk.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_schur_example(capsys):
    code, out = _run(capsys, "schur", "--lambda", "2,1", "--theta", "1,1")
    assert code == 0 and out.strip() == "2"


def test_dim(capsys):
    code, out = _run(capsys, "dim", "--lambda", "2,1,0")
    assert code == 0 and out.strip() == "8"


def test_lr_example(capsys):
    code, out = _run(capsys, "lr", "--lambda", "2,1,0",
                     "--mu", "3,2,1", "--tau", "4,3,2")
    assert code == 0 and out.strip() == "2"


def test_weights_json(capsys):
    code, out = _run(capsys, "weights", "--lambda", "1,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["lambda"] == [1, 0]
    assert {tuple(t["x"]): t["mult"] for t in doc["terms"]} \
        == {(1, 0): 1, (0, 1): 1}


def test_kernel_row_json_roundtrip(capsys):
    code, out = _run(capsys, "kernel-row", "--F", "beta-:1/2",
                     "--lambda", "0,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["exact"] is True
    assert doc["n"] == 2 and doc["lambda"] == [0, 0]
    vals = {tuple(e["mu"]): e["value"] for e in doc["entries"]}
    assert vals == {(0, 0): "4/9", (1, 0): "4/9", (1, 1): "1/9"}
    # rational strings survive a parse -> print cycle unchanged
    for e in doc["entries"]:
        assert str(Fraction(e["value"])) == e["value"]
    assert json.loads(json.dumps(doc)) == doc


def test_kernel_row_csv(capsys):
    code, out = _run(capsys, "kernel-row", "--F", "beta-:1/2",
                     "--lambda", "0,0", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "mu,value"
    assert len(lines) == 4


def test_verify_stochastic_pass(capsys):
    code, out = _run(capsys, "verify", "stochastic",
                     "--F", "beta-:1/2", "--n", "2", "--window", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["check"] == "stochastic" and doc["pass"] is True


def test_simulate_json_and_csv(capsys):
    code, out = _run(capsys, "simulate", "--F", "beta-:1/2",
                     "--lambda", "0,0", "--steps", "4", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["steps"] == 4 and doc["seed"] == 7 and doc["n"] == 2
    code, out = _run(capsys, "simulate", "--F", "beta-:1/2",
                     "--lambda", "0,0", "--steps", "2", "--seed", "7",
                     "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "step,i,position"
    assert len(lines) == 1 + 3 * 2


def test_exit_codes(capsys):
    code, _ = _run(capsys, "schur", "--lambda", "1,2", "--theta", "1,1")
    assert code == 3
    code, _ = _run(capsys, "definitely-not-a-verb")
    assert code == 2
    code, _ = _run(capsys, "kernel-row", "--F", "nonsense", "--lambda", "0,0")
    assert code == 3
