import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from qlogops.cli import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VALIDATION,
    main,
)
from qlogops.codefile import parse_code_file
from qlogops.errors import ParseError

GOLDEN = FIXTURES / "golden"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


# -- file format --------------------------------------------------------------


def test_parse_sections_and_comments():
    cf = parse_code_file("# header\nG1:\n1 1 1  # row\n\nG2:\n111\nH2:\n110\n011\n")
    assert cf.kind == "css"
    assert cf.sections == {"G1": ["111"], "G2": ["111"], "H2": ["110", "011"]}
    code = cf.css_code()
    assert (code.n, code.k1, code.k2) == (3, 1, 1)


def test_parse_default_pauli_section():
    cf = parse_code_file("XZ\nZX\nNORMALIZER:\nXX\n")
    assert cf.kind == "pauli"
    assert cf.generators().to_strings() == ["XZ", "ZX"]
    assert cf.normalizer().to_strings() == ["XX"]


def test_parse_empty_file():
    cf = parse_code_file("")
    assert cf.kind == "pauli"
    assert len(cf.generators()) == 0


@pytest.mark.parametrize(
    "text, line, position",
    [
        ("XZ\nXQ\n", 2, 2),
        ("G1:\n10\n12\nG2:\n11\n", 3, 2),
        ("G:\n1w\n0x\n", 3, 2),
        ("XZ\nXZZ\n", 2, None),
        ("FOO:\n", 1, None),
    ],
)
def test_parse_errors_carry_location(text, line, position):
    with pytest.raises(ParseError) as exc:
        parse_code_file(text)
    assert exc.value.line == line
    assert exc.value.position == position


def test_parse_errors_without_location():
    with pytest.raises(ParseError, match="requires section G2"):
        parse_code_file("G1:\n10\n")
    with pytest.raises(ParseError, match="mixed"):
        parse_code_file("G1:\n10\nG:\n1w\n")


# -- analyze ------------------------------------------------------------------


@pytest.mark.parametrize("name", ["steane.css", "five_qubit.pauli", "ea_c1.css", "five_qubit.crss"])
def test_analyze_golden(name):
    code, first = run("analyze", FIXTURES / name, "--format", "json")
    _, second = run("analyze", FIXTURES / name, "--format", "json")
    assert code == EXIT_OK
    assert first == second
    assert first == (GOLDEN / f"{name}.analyze.json").read_text()
    assert json.loads(first)["schema"] == 1


def test_analyze_values():
    _, out = run("analyze", FIXTURES / "steane.css", "--format", "json")
    report = json.loads(out)["report"]
    assert (report["k"], report["c"], len(report["logical_pairs"])) == (1, 0, 1)
    _, out = run("analyze", FIXTURES / "ea_c1.css", "--format", "json")
    assert json.loads(out)["report"]["c"] == 1
    _, out = run("analyze", FIXTURES / "one_qubit.crss", "--format", "json")
    report = json.loads(out)["report"]
    assert (report["k"], report["c"]) == (1, 0)


def test_json_round_trip():
    _, out = run("analyze", FIXTURES / "five_qubit.pauli", "--format", "json")
    obj = json.loads(out)
    assert json.dumps(obj, indent=2) + "\n" == out


def test_analyze_text():
    code, out = run("analyze", FIXTURES / "steane.css")
    assert code == EXIT_OK
    assert "k = 1  c = 0" in out
    assert "FAIL" not in out


def test_analyze_validation_failure(capsys):
    code, _ = run("analyze", FIXTURES / "bad_h.css")
    assert code == EXIT_VALIDATION
    assert "H1 G1^T != 0" in capsys.readouterr().err


def test_analyze_parse_failure(capsys):
    code, _ = run("analyze", FIXTURES / "bad_char.pauli")
    assert code == EXIT_PARSE
    assert "line 2, position 2" in capsys.readouterr().err


def test_analyze_check_failure(capsys):
    code, out = run("analyze", FIXTURES / "five_qubit_incomplete.pauli", "--format", "json")
    assert code == EXIT_CHECK_FAILED
    failed = {c["name"] for c in json.loads(out)["report"]["formula_checks"] if not c["agree"]}
    assert "rank(N) = 2n - rank(S)" in failed
    assert "failed check: rank(N) = 2n - rank(S)" in capsys.readouterr().err


def test_missing_file():
    code, _ = run("analyze", FIXTURES / "does_not_exist.css")
    assert code == EXIT_PARSE


# -- sgsop --------------------------------------------------------------------


def test_sgsop_pair_text():
    code, out = run("sgsop", FIXTURES / "xz.pauli")
    assert code == EXIT_OK
    assert "pair 1: X | Z" in out


def test_sgsop_commuting_text():
    _, out = run("sgsop", FIXTURES / "commuting.pauli")
    assert out.startswith("0 pairs, 2 isotropic")


def test_sgsop_five_qubit_golden():
    code, out = run("sgsop", FIXTURES / "five_qubit_normalizer.pauli", "--format", "json", "--reverse")
    assert code == EXIT_OK
    assert out == (GOLDEN / "five_qubit_normalizer.pauli.sgsop.json").read_text()
    obj = json.loads(out)
    assert len(obj["pairs"]) == 1 and len(obj["isotropic"]) == 4
    assert obj["round_trip"] is True
    assert obj["reverse"] == obj["input"]


def test_sgsop_rejects_css(capsys):
    code, _ = run("sgsop", FIXTURES / "steane.css")
    assert code == EXIT_VALIDATION


# -- entanglement -------------------------------------------------------------


def test_entanglement_both_methods():
    code, out = run("entanglement", FIXTURES / "ea_c1.css", "--format", "json", "--repeats", "3")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["methods"]["G"]["c"] == obj["methods"]["H"]["c"] == 1
    assert obj["agree"] is True
    assert obj["methods"]["G"]["median_us"] >= 0


def test_entanglement_crss_trace_orthogonal():
    code, out = run("entanglement", FIXTURES / "five_qubit.crss", "--format", "json")
    obj = json.loads(out)
    assert obj["methods"]["G"]["c"] == obj["methods"]["H"]["c"] == 0


def test_entanglement_low_rate_css():
    # k1 + k2 much smaller than n; H derived from G
    code, out = run("entanglement", FIXTURES / "low_rate.css", "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["agree"] is True
    assert "H1/H2 derived from G1/G2" in obj["notes"]


def test_entanglement_single_method_text():
    code, out = run("entanglement", FIXTURES / "steane.css", "--method", "G")
    assert code == EXIT_OK
    assert out.startswith("c (G method) = 0")
    assert "agreement" not in out


def test_entanglement_rejects_pauli():
    code, _ = run("entanglement", FIXTURES / "xz.pauli")
    assert code == EXIT_VALIDATION


# -- verify -------------------------------------------------------------------


def test_verify_random():
    code, out = run("verify", "--random", 10, 200, 42)
    assert code == EXIT_OK
    assert "seed=42" in out
    assert out.rstrip().endswith("PASS")


def test_verify_tampered_decomposition():
    code, out = run("verify", FIXTURES / "tampered_decomposition.json")
    assert code == EXIT_CHECK_FAILED
    assert "FAILED replay reproduces input" in out


def test_verify_untampered_decomposition():
    code, _ = run("verify", FIXTURES / "five_qubit_decomposition.json")
    assert code == EXIT_OK


def test_verify_empty_file():
    code, out = run("verify", FIXTURES / "empty.pauli")
    assert code == EXIT_OK
    assert "0 failed" in out


@pytest.mark.parametrize("name", ["steane.css", "five_qubit.crss", "five_qubit.pauli", "ea_c1.css"])
def test_verify_code_files(name):
    code, out = run("verify", FIXTURES / name, "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["passed"] is True


def test_verify_needs_input():
    code, _ = run("verify")
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qlogops", "analyze", str(FIXTURES / "steane.css"), "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "steane.css.analyze.json").read_text()
