"""CLI surface: grammar round trips, subcommands, exit codes, JSON reports."""

from __future__ import annotations

import json
import random

import pytest

from qdouble.algebra import double, heis_lower, heisenberg, letter, upper
from qdouble.cli import main
from qdouble.errors import ParseError
from qdouble.rootdata import root_datum
from qdouble.scalars import RatFunc
from qdouble.textio import format_element, format_tensor, parse_element, parse_tensor

A1 = root_datum("A1")
A2 = root_datum("A2")


# -- element grammar round trips -----------------------------------------------


def test_parse_element_examples():
    H = heisenberg(A1)
    x = parse_element("r^-1*s f1 e1' + 1", H)
    assert x == (H.f(0) * H.e(0)).scale(A1.mono(-1, 1)) + H.one()
    D = double(A1)
    y = parse_element("(K1 - K1')/(r - s)", D)
    assert y == (D.K(0) - D.Kp(0)).scale(
        (A1.mono(1, 0) - A1.mono(0, 1)).inv())
    assert parse_element("K1^-1 K1", D) == D.K(0, -1) * D.K(0)
    assert parse_element("E1^3", D) == D.E(0) ** 3
    with pytest.raises(ParseError):
        parse_element("e1 f1", H)   # raising generator must be primed
    with pytest.raises(ParseError):
        parse_element("E3 F1", D)   # index out of range


def test_element_round_trip_random():
    rng = random.Random(31)
    H = heisenberg(A2)
    fams = [("e", 0), ("e", 1), ("f", 0), ("f", 1), ("w", 0), ("w'", 1)]
    for _ in range(20):
        word = tuple(letter(f, i) for f, i in
                     (rng.choice(fams) for _ in range(rng.randint(0, 4))))
        x = H.from_word(word).nf()
        if rng.random() < 0.5:
            x = x.scale(A2.mono(rng.randint(-2, 2), rng.randint(-2, 2),
                                rng.randint(1, 3)))
        text = format_element(x)
        assert parse_element(text, H) == x, text


def test_element_round_trip_with_denominators():
    D = double(A1)
    x = (D.E(0) * D.F(0)).nf()
    text = format_element(x)
    assert parse_element(text, D) == x
    assert text == "((r - s) F1 E1 + K1 - K1')/(r - s)"


def test_tensor_round_trip():
    HL = heis_lower(A1)
    t = HL.coproduct(HL.f(0) * HL.f(0))
    text = format_tensor(t)
    assert parse_tensor(text, (HL, HL)) == t


# -- subcommands -----------------------------------------------------------------


def test_cli_normal_form(capsys):
    assert main(["normal-form", "--datum", "A1", "e1' f1"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "r^-1*s f1 e1' + 1"
    assert main(["normal-form", "--datum", "A1", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["normal-form", "--datum", "A1", "E1 F1 - F1 E1"]) == 0
    assert capsys.readouterr().out.strip() == "(K1 - K1')/(r - s)"


def test_cli_normal_form_round_trips_itself(capsys):
    assert main(["normal-form", "--datum", "A2", "e1' e1' f2 w1^-1"]) == 0
    out = capsys.readouterr().out.strip()
    H = heisenberg(A2)
    x = parse_element("e1' e1' f2 w1^-1", H).nf()
    assert parse_element(out, H) == x


def test_cli_parse_error_exit_code(capsys):
    assert main(["normal-form", "--datum", "A1", "e1' +"]) == 2
    capsys.readouterr()


def test_cli_budget_exit_code(capsys):
    code = main(["normal-form", "--datum", "A2", "--budget", "100",
                 "E1 E1 E2 E2"])
    assert code == 3
    capsys.readouterr()
    upper(A2)._nf_memo.clear()
    double(A2)._nf_memo.clear()


def test_cli_pair(capsys):
    assert main(["pair", "--datum", "A2", "--left", "e1' e2'",
                 "--right", "f2 f1"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["pair", "--datum", "A1", "--left", "E1",
                 "--right", "F1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["value"] == "(-1)/(r - s)"


def test_cli_gram_json(capsys):
    assert main(["gram", "--datum", "A2", "--degree", "2 a1 + a2",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["rank"] == 2
    assert len(data["matrix"]) == 3
    assert len(data["radical"]) == 1


def test_cli_gram_height_cap(capsys):
    assert main(["gram", "--datum", "A1", "--degree", "7 a1"]) == 3
    capsys.readouterr()


def test_cli_act_oracle(capsys):
    assert main(["act", "--datum", "A1", "--actor", "E1^2",
                 "--target", "f1^3", "--rep", "schrodinger", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "MATCH" in out
    assert main(["act", "--datum", "A1", "--actor", "F1",
                 "--target", "e1'^2", "--rep", "diagonal", "--oracle"]) == 0
    assert "MATCH" in capsys.readouterr().out


def test_cli_verma_reports(capsys):
    assert main(["verma", "--datum", "A1", "--lambda", "1/2 a1",
                 "--depth", "5", "--report", "all", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 6
    assert all(s["dim"] == 1 for s in data["weights"])
    assert len(data["maximal"]) == 1
    assert data["projector"]["idempotent"] is True


def test_cli_projector(capsys):
    assert main(["projector", "--datum", "A1", "--lambda", "1/2 a1",
                 "--depth", "4"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_cli_verify_suite(capsys):
    assert main(["verify", "--suite", "projector"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_cli_verify_deterministic(capsys):
    assert main(["verify", "--suite", "pairing", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--suite", "pairing", "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["passed"] is True and data["schema"] == 1


def test_cli_config_file(tmp_path, capsys):
    cfg = tmp_path / "datum.json"
    cfg.write_text('{"cartan": [[2, -1], [-2, 2]], "sym": [2, 1]}')
    assert main(["normal-form", "--config", str(cfg), "e1' f2"]) == 0
    out = capsys.readouterr().out.strip()
    H = None
    from qdouble.rootdata import datum_from_config
    datum = datum_from_config({"cartan": [[2, -1], [-2, 2]], "sym": [2, 1]})
    H = heisenberg(datum)
    assert parse_element(out, H) == (H.e(0) * H.f(1)).nf()
