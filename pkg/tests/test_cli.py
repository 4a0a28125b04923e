"""Command-line interface: documents, formats, exit codes, golden files."""

import json
import math
import pathlib
import subprocess
import sys
from fractions import Fraction

import pytest

from zetaseries.cli import main
from zetaseries.exactnum import parse_rational

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_coeff_fraction(capsys):
    code, out = run_cli(capsys, "coeff", "--k", "4", "--j", "3")
    assert code == 0
    assert out == "85/216\n"


def test_coeff_decimal_only_on_request(capsys):
    _, out = run_cli(capsys, "coeff", "--k", "3", "--j", "2")
    assert out.strip() == "-3/4"
    _, out = run_cli(capsys, "coeff", "--k", "3", "--j", "2", "--format", "decimal")
    assert out.strip() == "-0.75"
    _, out = run_cli(capsys, "coeff", "--k", "4", "--j", "3", "--format", "decimal")
    # 15 significant digits
    assert out.strip() == f"{85/216:.15g}"


def test_coeff_scaled(capsys):
    _, out = run_cli(capsys, "coeff", "--k", "6", "--j", "8", "--scaled")
    assert out.strip() == "3355156783231/497871360000"


def test_fraction_round_trip(capsys):
    for k, j in ((3, 2), (4, 3), (6, 8), (5, 7)):
        _, out = run_cli(capsys, "coeff", "--k", str(k), "--j", str(j))
        from zetaseries.coeffs import s2star_rec

        assert parse_rational(out.strip()) == s2star_rec(k, j)


def test_unicode_minus_parses(capsys):
    code, out = run_cli(capsys, "harmonic", "--n", "4", "--k", "1", "--t", "−1/2")
    assert code == 0
    direct = sum(Fraction(-1, 2) ** m / m for m in range(1, 5))
    assert parse_rational(out.strip()) == direct


def test_table_golden_byte_identical(capsys):
    _, out = run_cli(capsys, "table", "--kmax", "6", "--jmax", "8", "--format", "markdown")
    assert out.encode() == (GOLDEN / "table1.md").read_bytes()
    _, out = run_cli(capsys, "table", "--kmax", "6", "--jmax", "8", "--scaled", "--format", "markdown")
    assert out.encode() == (GOLDEN / "table2.md").read_bytes()


def test_table_single_cell_csv(capsys):
    _, out = run_cli(capsys, "table", "--kmax", "0", "--jmax", "0", "--format", "csv")
    assert out == "k,0\n0,1\n"


def test_table_rejects_negative(capsys):
    code, _ = run_cli(capsys, "table", "--kmax", "-1", "--jmax", "3")
    assert code == 1


def test_harmonic_value(capsys):
    _, out = run_cli(capsys, "harmonic", "--n", "4", "--k", "1")
    assert out.strip() == "25/12"


def test_series_example(capsys):
    _, out = run_cli(capsys, "series", "--example", "a", "--k", "1", "--u", "3")
    assert out == "z^0: 0\nz^1: 1\nz^2: 1/2\nz^3: 1/3\n"


def test_series_csv(capsys):
    _, out = run_cli(capsys, "series", "--example", "f", "--k", "1", "--u", "2", "--format", "csv")
    assert out == "n,coeff\n0,0\n1,1\n2,3/4\n"


def test_series_progression(capsys):
    code, out = run_cli(capsys, "series", "--example", "g", "--k", "1", "--u", "3",
                        "--a", "2", "--b", "1")
    assert code == 0
    values = [float(line.split(": ")[1]) for line in out.strip().splitlines()]
    assert values == pytest.approx([1.0, 1 / 3, 1 / 5, 1 / 7], abs=1e-10)


def test_polylog_value(capsys):
    code, out = run_cli(capsys, "polylog", "--s", "2", "--z", "-1")
    assert code == 0
    assert float(out) == pytest.approx(-math.pi**2 / 12, abs=1e-10)


def test_polylog_json_exposes_eval_metadata(capsys):
    _, out = run_cli(capsys, "polylog", "--s", "2", "--z", "0.5", "--format", "json")
    payload = json.loads(out)
    assert payload["domain_warning"] is True
    assert payload["method"] == "direct_fallback"


def test_polylog_pole_exits_one(capsys):
    code, _ = run_cli(capsys, "polylog", "--s", "2", "--z", "1")
    assert code == 1


def test_zetastar_value(capsys):
    code, out = run_cli(capsys, "zetastar", "--s", "1", "--terms", "80")
    assert code == 0
    assert float(out) == pytest.approx(math.log(2), abs=1e-6)


def test_zetastar_methods(capsys):
    _, closed = run_cli(capsys, "zetastar", "--s", "3", "--method", "closed")
    _, harm = run_cli(capsys, "zetastar", "--s", "3", "--method", "harmonic")
    _, euler = run_cli(capsys, "zetastar", "--s", "3", "--method", "euler", "--terms", "200")
    assert float(harm) == pytest.approx(float(closed), abs=1e-8)
    assert float(euler) == pytest.approx(float(closed), abs=5e-6)


def test_fourier_value(capsys):
    _, out = run_cli(capsys, "fourier", "--order", "1", "--x", "5/4")
    assert float(out) == pytest.approx(-0.25, abs=1e-6)


def test_msum_value(capsys):
    _, out = run_cli(capsys, "msum", "--k", "3", "--d", "1", "--n", "1", "--source", "alt")
    assert out.strip() == "-1"
    _, out = run_cli(capsys, "msum", "--k", "3", "--d", "1", "--n", "1")
    assert out.strip() == "1"


def test_verify_core_exits_zero(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "core")
    assert code == 0
    payload = json.loads(out)
    assert all(entry["status"] != "fail" for entry in payload)


def test_verify_msums_report_only(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "msums")
    assert code == 0
    payload = json.loads(out)
    assert any(entry["status"] == "fail" for entry in payload)


def test_verify_unknown_suite_exits_two(capsys):
    code, _ = run_cli(capsys, "verify", "--suite", "bad")
    assert code == 2


def test_verify_csv_format(capsys):
    _, out = run_cli(capsys, "verify", "--suite", "fourier", "--format", "csv")
    assert out.splitlines()[0] == "id,params,status,residual"


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out = run_cli(capsys, "coeff", "--k", "4", "--j", "3", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "85/216\n"


def test_console_script_installed():
    result = subprocess.run(
        [sys.executable, "-m", "zetaseries.cli", "coeff", "--k", "4", "--j", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "85/216"
