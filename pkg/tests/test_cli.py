import json

import pytest

from syt import cli, dynamics
from syt.cli import EXIT_FAIL, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, WORKED_EXAMPLES, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


@pytest.mark.parametrize("argv, expected", WORKED_EXAMPLES, ids=lambda x: " ".join(x) if isinstance(x, list) else None)
def test_worked_example(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == expected


def test_apply_power_and_transpose(capsys):
    t = "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12"
    assert run(capsys, "apply", "--op", "promote", "--power", "0", "--tableau", t)[1] == t
    assert run(capsys, "apply", "--op", "evacuate", "--power", "2", "--tableau", t)[1] == t
    assert run(capsys, "apply", "--op", "transpose", "--tableau", "1 2 6/3 5/4")[1] == "1 3 4/2 5/6"
    fwd = run(capsys, "apply", "--op", "promote", "--power", "-3", "--tableau", t)[1]
    assert run(capsys, "apply", "--op", "dual-promote", "--power", "3", "--tableau", t)[1] == fwd


def test_apply_json(capsys):
    code, out, _ = run(capsys, "apply", "--op", "promote", "--show-path", "--tableau", "1 2/3 4", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["tableau"] == {"shape": [2, 2], "rows": [[1, 3], [2, 4]]}
    assert obj["path"] == [[2, 2], [2, 1], [1, 1]]


def test_embed_json(capsys):
    obj = json.loads(run(capsys, "embed", "--tableau", "1 2 6/3 5/4", "--format", "json")[1])
    assert obj["lower"]["rows"] == [[1, 4, 5], [2, 6], [3]]
    assert obj["rect"]["shape"] == [3, 3, 3, 3]


def test_desc_json(capsys):
    obj = json.loads(run(capsys, "desc", "--tableau", "1 4 5/2 6/3", "--format", "json")[1])
    assert obj == {"vector": "xx..xx..xx..", "length": 12, "dots": [1, 2, 5, 6, 9, 10], "period": 4}


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--shape", "sc:3", "--op", "promote")
    assert code == 0
    assert out.splitlines() == [
        "shape: 3,2,1", "op: promote", "N: 12", "total: 16", "cycles of length 12: 1", "cycles of length 4: 1"
    ]
    assert "cycles of length 2: 1" in run(capsys, "orbits", "--shape", "2^2", "--op", "promote")[1]
    obj = json.loads(run(capsys, "orbits", "--shape", "sc:3", "--op", "evacuate", "--format", "json")[1])
    assert set(obj["cycles"]) <= {"1", "2"} and obj["N"] == 2
    assert "(empirical lcm)" in run(capsys, "orbits", "--shape", "3,1", "--op", "promote")[1]


def test_csp_factors(capsys):
    assert run(capsys, "csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,4^2,6,8,12")[0] == EXIT_OK
    code, out, _ = run(capsys, "csp", "--shape", "sc:3", "--op", "promote", "--factors", "2")
    assert code == EXIT_FAIL and out.endswith("no")


def test_csp_stat(capsys):
    code, out, _ = run(capsys, "csp", "--shape", "2^2", "--op", "promote", "--stat", "qhook")
    assert code == 0
    assert "reduced: 1 + q^2" in out
    assert "is a CSP polynomial: yes" in out
    assert "certifying shifts: 0 2" in out
    obj = json.loads(run(capsys, "csp", "--shape", "3^4", "--op", "promote", "--stat", "maj", "--format", "json")[1])
    assert obj["b"] == 18 and 6 in obj["shifts"]


@pytest.mark.parametrize(
    "argv",
    [
        ["apply", "--op", "promote", "--tableau", "1 2/2 3"],
        ["apply", "--op", "rotate", "--tableau", "1 2/3 4"],
        ["apply", "--op", "evacuate", "--show-path", "--tableau", "1 2/3 4"],
        ["apply", "--op", "promote", "--power", "2", "--show-path", "--tableau", "1 2/3 4"],
        ["embed", "--tableau", "1 2/3 4"],
        ["desc", "--tableau", "1 2 3/4"],
        ["orbits", "--shape", "3,4", "--op", "promote"],
        ["csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,x"],
        ["csp", "--shape", "sc:3", "--op", "promote"],
        ["csp", "--shape", "sc:3", "--op", "promote", "--stat", "maj", "--factors", "2"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_enumeration_limit_exit_code(capsys):
    code, _, err = run(capsys, "orbits", "--shape", "sc:4", "--op", "promote", "--limit", "100")
    assert code == EXIT_LIMIT and "limit" in err


def test_verify_worked_examples(capsys):
    code, out, _ = run(capsys, "verify", "--paper-examples")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == f"{len(WORKED_EXAMPLES)}/{len(WORKED_EXAMPLES)} checks passed"


def test_verify_small_run_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-cells", "6", "--skip", "published-products")
    assert code == EXIT_OK, out
    assert "FAIL" not in out


def test_verify_reports_published_product_failures(capsys):
    code, out, _ = run(capsys, "verify", "--max-cells", "4", "--format", "json")
    obj = json.loads(out)
    failed = [r["check"] for r in obj["results"] if not r["passed"]]
    assert code == EXIT_FAIL and failed == ["published-products"]


def test_verify_catches_a_corrupted_operator(capsys, monkeypatch):
    real = dynamics.evacuate

    def broken(t):
        out = real(t)
        return dynamics.promote(out)[0] if t.n == 5 else out

    monkeypatch.setattr(dynamics, "evacuate", broken)
    code, out, _ = run(capsys, "verify", "--max-cells", "6", "--skip", "published-products")
    # pr.ev is still an involution, so only the identities tying ev to other operators catch this
    assert code == EXIT_FAIL
    assert any(line.startswith("FAIL") for line in out.splitlines())


def test_output_is_deterministic(capsys):
    a = run(capsys, "orbits", "--shape", "3^3", "--op", "promote", "--format", "json")[1]
    b = run(capsys, "orbits", "--shape", "3^3", "--op", "promote", "--format", "json")[1]
    assert a == b


def test_worked_examples_runner():
    assert all(ok for _, ok, _ in cli.run_worked_examples())
