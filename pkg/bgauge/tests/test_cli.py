import json

import pytest

from bgauge.cli import main
from bgauge.oracle import OracleAuditor


def run(capsys, *argv):
    with pytest.raises(SystemExit) as e:
        main(list(argv))
    out, err = capsys.readouterr()
    return e.value.code, out, err


def test_verdict_full_theorem(capsys):
    code, out, _ = run(capsys, "verdict", "--group", "SU(2)", "--prime", "5", "--chern", "7", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"]["regime"] == "FullTheorem"


def test_verdict_su2_mod3(capsys):
    code, out, _ = run(capsys, "verdict", "--group", "SU(2)", "--prime", "3", "--chern", "2")
    assert code == 0
    assert "Regime: SU2Mod3" in out


def test_verdict_strict_exits_3(capsys):
    code, out, err = run(capsys, "verdict", "--group", "SU(4)", "--prime", "5", "--strict")
    assert code == 3
    assert "Regime: PRegularOnly" in out
    assert err.startswith("error: PRegularOnly")
    code, _, _ = run(capsys, "verdict", "--group", "SU(4)", "--prime", "5")
    assert code == 0


def test_compute_json(capsys):
    code, out, _ = run(
        capsys, "compute", "--group", "SU(2)", "--prime", "5", "--max-degree", "7", "--format", "json"
    )
    assert code == 0
    dims = json.loads(out)["spaces"]["BGk"]["dims"]
    assert [d for d, dim in dims if dim != "0"] == [0, 4, 7]


def test_compute_is_byte_deterministic(capsys):
    argv = ("compute", "--group", "SU(3)", "--prime", "7", "--max-degree", "40", "--format", "csv")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_compute_regime_failure_exits_3(capsys):
    code, out, err = run(capsys, "compute", "--group", "SU(2)", "--prime", "3", "--chern", "3")
    assert code == 3
    assert out == ""
    assert "(3,k)=1 fails" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--group", "type:2,x", "--prime", "5"),
        ("compute", "--group", "SU(1)", "--prime", "5"),
        ("compute", "--group", "SU(2)", "--prime", "9"),
        ("compute", "--group", "SU(2)", "--prime", "5", "--max-degree", "-3"),
        ("oracle", "--group", "SU(2)", "--prime", "5", "--max-degree", "90"),
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ")


def test_spec_syntax_error_names_the_position(capsys):
    _, _, err = run(capsys, "verdict", "--group", "type:2,x", "--prime", "5")
    assert "position 7" in err


def test_argparse_errors_exit_2(capsys):
    code, _, _ = run(capsys, "compute", "--prime", "5")
    assert code == 2
    code, _, _ = run(capsys, "compute", "--group", "SU(2)", "--prime", "5", "--format", "yaml")
    assert code == 2
    code, _, _ = run(capsys)
    assert code == 2


def test_generators(capsys):
    code, out, _ = run(
        capsys, "generators", "--group", "G2", "--prime", "13", "--space", "bg", "--format", "json"
    )
    assert code == 0
    gens = json.loads(out)["spaces"]["BG"]["generators"]
    assert [g["degree"] for g in gens] == [4, 12]


def test_generators_csv_lists_one_row_per_generator(capsys):
    code, out, _ = run(
        capsys,
        "generators", "--group", "SU(3)", "--prime", "7", "--space", "omega3g3",
        "--max-degree", "20", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "space,label,family,indices,degree,kind,formula"
    assert len(lines) == 4
    assert lines[2].startswith("Omega3G3,abar[k=0],ABAR,\"0,0\",11,exterior,")


def test_generators_not_p_regular_exits_3(capsys):
    code, _, err = run(capsys, "generators", "--group", "E8", "--prime", "13", "--space", "g")
    assert code == 3
    assert "not 13-regular" in err


def test_oracle_pass(capsys):
    code, out, _ = run(capsys, "oracle", "--group", "SU(2)", "--prime", "5", "--max-degree", "60", "--format", "csv")
    assert code == 0
    assert "FAIL" not in out


def test_oracle_mismatch_exits_1(capsys, monkeypatch):
    class FaultyAuditor(OracleAuditor):
        def audit(self, pres, trunc=None):
            report = super().audit(pres, trunc)
            report.checks[4].oracle += 1
            return report

    monkeypatch.setattr("bgauge.calculator.OracleAuditor", FaultyAuditor)
    code, out, err = run(capsys, "oracle", "--group", "SU(2)", "--prime", "5", "--max-degree", "20")
    assert code == 1
    assert "FAIL" in out
    assert "BGk@4" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "bgk.csv"
    code, out, _ = run(
        capsys, "compute", "--group", "SU(2)", "--prime", "5", "--max-degree", "12",
        "--format", "csv", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_bytes().startswith(b"space,degree,dimension\r\n")


def test_no_color_when_piped(capsys, monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    _, out, _ = run(capsys, "verdict", "--group", "SU(2)", "--prime", "5")
    assert "\033[" not in out


def test_schema(capsys):
    code, out, _ = run(capsys, "schema")
    assert code == 0
    assert json.loads(out)["required"] == ["inputs", "verdict", "spaces", "meta"]


def test_sweep(capsys, tmp_path):
    target = tmp_path / "sweep.json"
    code, out, _ = run(
        capsys, "sweep", "--max-prime", "7", "--max-rank", "2", "--max-degree", "20",
        "--output", str(target),
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["passed"]
    assert summary["cases"] == 5 * 4
    saved = json.loads(target.read_text())
    assert saved["primes"] == [2, 3, 5, 7]
