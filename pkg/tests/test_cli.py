import json
import subprocess
import sys

import pytest

import resultmod.cli as cli
from resultmod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, (json.loads(out) if out else None), err


class TestResultant:
    def test_all_engines(self, capsys):
        code, doc, err = run_json(capsys, "resultant", "x^6+1", "(x+1)^6+1", "--engine", "all")
        assert code == 0 and err == ""
        assert doc["results"]["value"] == "175760"
        assert doc["results"]["agreement"] is True
        assert set(doc["results"]["engines"].values()) == {"175760"}
        assert doc["inputs"]["g"] == "x^6 + 6*x^5 + 15*x^4 + 20*x^3 + 15*x^2 + 6*x + 2"

    def test_common_root(self, capsys):
        code, doc, _ = run_json(capsys, "resultant", "x-2", "x-2")
        assert code == 0 and doc["results"]["value"] == "0"

    @pytest.mark.parametrize("engine", ["sylvester", "remainder", "euclid"])
    def test_product_formula(self, capsys, engine):
        code, doc, _ = run_json(capsys, "resultant", "x^2-1", "x+3", "--engine", engine)
        assert code == 0 and doc["results"]["value"] == "8"

    def test_parse_error(self, capsys):
        code, out, err = run(capsys, "resultant", "3x", "x")
        assert code == 2 and out == "" and err.startswith("error:")

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        from resultmod.resultants import Engine

        fake = {Engine.SYLVESTER: 1, Engine.REMAINDER_MATRIX: 2, Engine.EUCLIDEAN: 1}
        monkeypatch.setattr(cli, "all_engines", lambda f, g: fake)
        code, doc, _ = run_json(capsys, "resultant", "x", "x+1", "--engine", "all")
        assert code == 3 and doc["results"]["agreement"] is False

    def test_text_output(self, capsys):
        code, out, err = run(capsys, "resultant", "x^6+1", "(x+1)^6+1")
        assert code == 0 and err == ""
        assert "value: 175760" in out


class TestAnalyze:
    def test_worked_example(self, capsys):
        code, doc, err = run_json(capsys, "analyze", "x^6+1", "(x+1)^6+1", "--prime", "13")
        r = doc["results"]
        assert code == 0 and err == ""
        assert (r["ell"], r["rank_p"], r["v_q"]) == (3, 3, 3)
        assert r["common_roots"] == [5, 6, 7]
        assert r["violations"] == []

    def test_coprime(self, capsys):
        code, doc, _ = run_json(capsys, "analyze", "x", "x+1", "--prime", "7", "--strict")
        assert code == 0 and doc["results"]["ell"] == 0 and doc["results"]["v_q"] == 0

    def test_infinite_valuation(self, capsys):
        _, doc, _ = run_json(capsys, "analyze", "x-1", "x-1", "--prime", "5")
        assert doc["results"]["v_q"] == "inf"

    def test_identically_zero(self, capsys):
        code, out, err = run(capsys, "analyze", "13*x^2+26", "x", "--prime", "13")
        assert code == 2 and out == ""
        assert "identically zero" in err

    def test_composite(self, capsys):
        code, _, err = run(capsys, "analyze", "x", "x+1", "--prime", "15")
        assert code == 2 and "prime" in err

    def test_strict_flag_after_subcommand(self, capsys):
        code, _, _ = run(capsys, "analyze", "x", "x+1", "--prime", "7", "--strict", "--format", "json")
        assert code == 0


class TestLucas:
    def test_theorem4_q11(self, capsys):
        code, doc, _ = run_json(capsys, "lucas", "--p", "1", "--q-param", "-1", "--prime", "11")
        eq12, eq13 = doc["results"]["reports"]
        assert code == 0
        assert eq12["label"] == "eq12" and eq12["holds"] and eq12["lhs"] == "2"
        assert eq13["holds"]

    def test_legendre_minus_one(self, capsys):
        code, doc, _ = run_json(capsys, "lucas", "--p", "1", "--q-param", "-1", "--prime", "7", "--strict")
        assert code == 0
        assert all(not r["preconditions_met"] for r in doc["results"]["reports"])

    def test_corollary(self, capsys):
        argv = ("lucas", "--p", "1", "--q-param", "-1", "--prime", "11", "--k", "1")
        code, doc, _ = run_json(capsys, *argv)
        eq15 = doc["results"]["reports"][0]
        assert code == 0 and eq15["label"] == "eq15" and eq15["holds"]

    @pytest.mark.parametrize("prime", ["2", "9"])
    def test_bad_prime(self, capsys, prime):
        code, _, err = run(capsys, "lucas", "--p", "1", "--q-param", "-1", "--prime", prime)
        assert code == 2 and err


class TestSurvey:
    def test_lucas(self, capsys):
        code, doc, _ = run_json(capsys, "survey", "lucas", "--prime-max", "100")
        assert code == 0
        assert doc["results"]["primes"] == [11, 19, 29, 31, 41, 59, 61, 71, 79, 89]
        assert doc["results"]["violations"] == []

    def test_pell_lucas(self, capsys):
        code, doc, _ = run_json(capsys, "survey", "pell-lucas", "--prime-max", "50")
        assert code == 0 and doc["results"]["primes"] == [7, 17, 23, 31, 41, 47]

    def test_empty(self, capsys):
        code, doc, _ = run_json(capsys, "survey", "lucas", "--prime-max", "10")
        assert code == 0 and doc["results"]["primes"] == [] and doc["results"]["checked"] == 0

    def test_limit(self, capsys):
        code, _, err = run(capsys, "survey", "lucas", "--prime-max", str(10**5 + 1))
        assert code == 2 and err

    def test_violation_exit_code(self, capsys, monkeypatch):
        from resultmod.reports import CongruenceReport

        monkeypatch.setattr(
            cli, "survey_section31", lambda q: [CongruenceReport.build("eq19", q, 2, 0, 2)]
        )
        code, doc, _ = run_json(capsys, "survey", "lucas", "--prime-max", "20")
        assert code == 1 and len(doc["results"]["violations"]) == 2


def test_selftest(capsys):
    code, doc, err = run_json(capsys, "selftest")
    assert code == 0 and err == ""
    assert doc["results"]["passed"]
    names = {s["name"] for s in doc["results"]["suites"]}
    assert {"worked_example", "cross_engine", "theorem1_family", "bridge_identity"} <= names


def test_json_is_deterministic_in_process(capsys):
    argv = ("--format", "json", "analyze", "x^6+1", "(x+1)^6+1", "--prime", "13")
    outputs = {run(capsys, *argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "resultmod", "resultant", "x^2-1", "x+3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stderr == ""
    assert "value: 8" in proc.stdout
