"""CLI behaviour: subcommands, formats, exit codes, file round trips,
and fault injection (a broken core formula must flip verify to nonzero).
"""

import json

import pytest

import idealift.rank_code
import idealift.subspace
from idealift.cli import main
from idealift.rank_code import parse_rank_code
from idealift.ring import parse_ideal, principal_ideal
from idealift.algebra import PrimeField
from idealift.lifting import lift_code
from idealift.rank_code import code_from_matrix_set
from idealift.subspace import parse_subspace_code


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gaussian(capsys):
    code, out, _ = run(capsys, "gaussian", "4", "2", "2")
    assert code == 0
    assert out.strip() == "35"
    code, out, _ = run(capsys, "gaussian", "4", "2", "2", "--format", "json")
    assert json.loads(out)["value"] == 35


def test_gaussian_bad_input(capsys):
    code, _, err = run(capsys, "gaussian", "2", "4", "2")
    assert code == 2
    assert "error" in err


def test_distribution(capsys):
    code, out, _ = run(capsys, "distribution", "3")
    assert code == 0
    assert out.strip() == "1 32 48"
    code, out, _ = run(capsys, "distribution", "4", "--format", "json")
    payload = json.loads(out)
    assert (payload["a0"], payload["a1"], payload["a2"]) == (1, 75, 180)
    code, _, err = run(capsys, "distribution", "6")
    assert code == 2


def test_idempotents(capsys):
    code, out, _ = run(capsys, "idempotents", "2")
    assert code == 0
    assert "nontrivial idempotents: 6" in out
    assert "distinct left ideals:   3" in out
    code, out, _ = run(capsys, "idempotents", "3", "--format", "json")
    payload = json.loads(out)
    assert payload["idempotent_count"] == 12
    assert payload["distinct_left_ideals"] == 4
    assert payload["distinct_right_ideals"] == 4


def test_idempotents_budget_exit(capsys):
    code, _, err = run(capsys, "idempotents", "37")
    assert code == 3
    assert "budget" in err


def test_ideal_file_and_info(tmp_path, capsys):
    path = tmp_path / "ideal.txt"
    code, _, _ = run(capsys, "ideal", "2", "left", "0", "0", "0", "1", "-o", str(path))
    assert code == 0
    parsed = parse_ideal(path.read_text())
    expected = principal_ideal(PrimeField(2).matrix([[0, 0], [0, 1]]), "left")
    assert parsed == expected

    code, out, _ = run(capsys, "rankcode-info", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == 1
    assert payload["omega"] == 1
    assert payload["rho"] == 2
    assert payload["linear"] is True
    assert payload["M"] == 4


def test_ideal_to_stdout(capsys):
    code, out, _ = run(capsys, "ideal", "3", "left", "0", "2", "0", "1")
    assert code == 0
    assert out.startswith("ideal side=left generator=0,2,0,1")
    assert len(parse_ideal(out)) == 9


def test_lift_round_trip(tmp_path, capsys):
    ideal_path = tmp_path / "ideal.txt"
    lifted_path = tmp_path / "lifted.txt"
    run(capsys, "ideal", "2", "left", "0", "0", "0", "1", "-o", str(ideal_path))
    code, out, _ = run(
        capsys, "lift", str(ideal_path), "-o", str(lifted_path), "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["lifted"] == {"n": 4, "M": 4, "d": 2, "k": 2, "q": 2}
    assert payload["theorem_ok"] is True
    assert payload["distance_histogram"] == {"2": 6}

    expected = lift_code(
        code_from_matrix_set(
            principal_ideal(PrimeField(2).matrix([[0, 0], [0, 1]]), "left").elements
        )
    ).code
    assert parse_subspace_code(lifted_path.read_text()) == expected


def test_lift_table_output(tmp_path, capsys):
    ideal_path = tmp_path / "ideal.txt"
    run(capsys, "ideal", "3", "left", "0", "2", "0", "1", "-o", str(ideal_path))
    code, out, _ = run(capsys, "lift", str(ideal_path), "-o", str(tmp_path / "out.txt"))
    assert code == 0
    assert "(4, 9, 2, 2)_3" in out
    assert "parameters verified" in out


def test_rankcode_info_on_rankcode_file(tmp_path, capsys):
    from idealift.rank_code import format_rank_code

    code_obj = code_from_matrix_set(
        principal_ideal(PrimeField(3).matrix([[0, 2], [0, 1]]), "left").elements
    )
    path = tmp_path / "code.txt"
    path.write_text(format_rank_code(code_obj) + "\n")
    code, out, _ = run(capsys, "rankcode-info", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["M"] == 9
    assert parse_rank_code(path.read_text()) == code_obj


def test_bad_file_exit(tmp_path, capsys):
    path = tmp_path / "junk.txt"
    path.write_text("not a code file\n")
    code, _, err = run(capsys, "rankcode-info", str(path))
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "lift", str(tmp_path / "missing.txt"))
    assert code == 2


@pytest.mark.parametrize("p", [2, 3])
def test_verify_passes(p, capsys):
    code, out, _ = run(capsys, "verify", str(p), "--trials", "20", "--samples", "500")
    assert code == 0
    assert f"(4,{p * p},2,2)_{p} OK" in out
    assert "FAIL" not in out


def test_verify_json_and_seed_stability(capsys):
    code1, out1, _ = run(
        capsys, "verify", "2", "--seed", "7", "--trials", "10",
        "--samples", "100", "--format", "json",
    )
    code2, out2, _ = run(
        capsys, "verify", "2", "--seed", "7", "--trials", "10",
        "--samples", "100", "--format", "json",
    )
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] is True
    assert all(check["ok"] for check in payload["checks"])


def test_verify_fault_injection_distribution(monkeypatch, capsys):
    # breaking the group-order formula must flip verify to a nonzero exit
    monkeypatch.setattr(idealift.rank_code, "gl_order", lambda q, n=2: 7)
    code, out, _ = run(capsys, "verify", "2", "--trials", "0", "--samples", "10")
    assert code == 1
    assert "FAIL" in out


def test_verify_fault_injection_distance(monkeypatch, capsys):
    real = idealift.subspace.subspace_distance
    monkeypatch.setattr(
        idealift.subspace, "subspace_distance", lambda a, b: real(a, b) + 1
    )
    code, out, _ = run(capsys, "verify", "2", "--trials", "0", "--samples", "10")
    assert code == 1
    assert "FAIL" in out


def test_weights_report(capsys):
    code, out, _ = run(capsys, "weights-report", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["E"] is False
    assert payload["H"] is True
    assert payload["homogeneous"] is False
    gammas = {(g["gamma_num"], g["gamma_den"]) for g in payload["gamma_values"]}
    assert gammas == {(21, 16), (3, 4)}

    code, out, _ = run(capsys, "weights-report", "2")
    assert code == 0
    assert "egalitarian (E)" in out and "False" in out


def test_weights_report_right_side(capsys):
    code, out, _ = run(capsys, "weights-report", "2", "--side", "right", "--format", "json")
    assert code == 0
    assert json.loads(out)["side"] == "right"


def test_bad_prime_exit(capsys):
    code, _, err = run(capsys, "idempotents", "4")
    assert code == 2
    assert "not prime" in err
