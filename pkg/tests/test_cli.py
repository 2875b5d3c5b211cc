import json

import pytest

from zetaprod import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------- values


def test_values_gauss_integers(capsys):
    code, out, _ = run_cli(
        capsys, "values", "--ring", "gauss", "--target", "integers"
    )
    assert code == 0
    assert "3.708149" in out
    doc = json.loads(out)
    assert doc["command"] == "values"
    assert set(doc) >= {
        "log_value", "numeric_value", "closed_form_value", "discrepancy",
        "modulus",
    }
    assert doc["discrepancy"] < 1e-9


def test_values_natural_primes(capsys):
    code, out, _ = run_cli(
        capsys, "values", "--ring", "natural", "--target", "primes"
    )
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["numeric_value"] - 39.47841760435743) < 1e-9


def test_values_output_is_byte_identical(capsys):
    _, first, _ = run_cli(
        capsys, "values", "--ring", "eisenstein", "--target", "primes"
    )
    _, second, _ = run_cli(
        capsys, "values", "--ring", "eisenstein", "--target", "primes"
    )
    assert first == second


def test_values_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "values", "--ring", "natural", "--target", "integers",
        "--format", "text",
    )
    assert code == 0
    assert "numeric_value = 2.5066282746309976" in out


# ------------------------------------------------------------------- eval


def test_eval_riemann_zeta(capsys):
    code, out, _ = run_cli(capsys, "eval", "--function", "riemann-zeta", "--s", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(1.6449340668482264, abs=1e-12)
    assert "1.6449340668482264" in out  # 17-significant-digit serialization
    assert doc["tail_bound"] >= 0.0
    assert doc["params"]["tail_terms"] == 15


def test_eval_hurwitz_requires_x(capsys):
    code, _, err = run_cli(capsys, "eval", "--function", "hurwitz-zeta", "--s", "2")
    assert code == 2
    assert "--x is required" in err


def test_eval_log_gamma(capsys):
    code, out, _ = run_cli(capsys, "eval", "--function", "log-gamma", "--x", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(0.5723649429247001, abs=1e-12)


def test_eval_partial_prime_zeta(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--function", "partial-prime-zeta", "--modulus", "4",
        "--residue-class", "1", "--s", "3", "--cutoff", "10",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(125.0 / 124.0, abs=1e-14)


def test_eval_pole_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--function", "riemann-zeta", "--s", "1")
    assert code == 2
    assert "pole" in err


def test_unknown_function_rejected(capsys):
    code, _, err = run_cli(capsys, "eval", "--function", "xi", "--s", "2")
    assert code == 2


def test_unknown_command_rejected(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 2


# ------------------------------------------------------------------ primes


def test_primes_csv_eisenstein(capsys):
    code, out, _ = run_cli(
        capsys, "primes", "--ring", "eisenstein", "--max-norm", "3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a,b,norm,class"
    assert len(lines) == 7
    assert all(line.endswith(",3,ramified") for line in lines[1:])


def test_primes_json_gauss(capsys):
    code, out, _ = run_cli(
        capsys, "primes", "--ring", "gauss", "--max-norm", "5"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 12
    norms = sorted(row["norm"] for row in doc["primes"])
    assert norms == [2] * 4 + [5] * 8
    kinds = {row["class"] for row in doc["primes"]}
    assert kinds == {"ramified", "split"}


def test_primes_inert_class_in_output(capsys):
    code, out, _ = run_cli(
        capsys, "primes", "--ring", "gauss", "--max-norm", "9",
        "--format", "csv",
    )
    assert code == 0
    assert "3,0,9,inert" in out


# ------------------------------------------------------------------ verify


def test_verify_power_identity(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "power-identity")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("[")]
    assert len(lines) == 3
    assert all(line.startswith("[PASS]") for line in lines)
    assert "k=4" in out and "k=8" in out and "k=12" in out


def test_verify_lerch_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "lerch", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["failed"] == 0
    assert len(doc["checks"]) == 6
    assert all(chk["pass"] for chk in doc["checks"])


def test_verify_artin_hasse(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "artin-hasse")
    assert code == 0
    assert "[PASS]" in out


def test_verify_forced_failure_with_zero_tolerance(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "factorization", "--tolerance", "0"
    )
    assert code == 1
    assert "[FAIL]" in out


def test_verify_bold_z(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "bold-z")
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("[")]
    assert len(lines) == 2


def test_verify_unknown_suite(capsys):
    code, _, _ = run_cli(capsys, "verify", "--suite", "everything")
    assert code == 2
