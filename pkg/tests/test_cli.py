import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qgenocchi.cli import main
from qgenocchi.genocchi import GenocchiTable, genocchi_table
from qgenocchi.qcore import QContext


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genocchi_csv_classical(capsys):
    code, out, _ = run(capsys, "genocchi", "--alpha", "1", "--order", "4", "--q", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["n", "x^0"]
    assert [r[1] for r in rows[2:6]] == ["1", "-1", "0", "1"]


def test_genocchi_csv_value_column(capsys):
    code, out, _ = run(capsys, "genocchi", "--alpha", "1", "--order", "3", "--q", "1/2", "--format", "csv", "--x", "1/3")
    rows = list(csv.reader(io.StringIO(out)))
    t = genocchi_table(QContext(Fraction(1, 2)), 1, 3)
    assert rows[0][-1] == "value_at_1/3"
    assert [Fraction(r[-1]) for r in rows[1:]] == [p(Fraction(1, 3)) for p in t.polys]


def test_genocchi_order_below_alpha(capsys):
    code, _, err = run(capsys, "genocchi", "--alpha", "2", "--order", "1", "--q", "1/2")
    assert code == 2 and "usage" in err


def test_genocchi_bad_flag(capsys):
    code, _, _ = run(capsys, "genocchi", "--alpha", "x", "--order", "1", "--q", "1/2")
    assert code == 2


@pytest.mark.parametrize("q", ["3/2", "0", "-1/2"])
def test_genocchi_invalid_q(capsys, q):
    code, out, _ = run(capsys, "genocchi", "--alpha", "1", "--order", "2", f"--q={q}")
    assert code == 3 and json.loads(out)["error"] == "InvalidQ"


def test_genocchi_json_and_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "genocchi", "--alpha", "1", "--order", "2", "--q", "1/2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["polys"][2] == ["-9/16", "9/8"]
    path = tmp_path / "t.json"
    run(capsys, "genocchi", "--alpha", "2", "--order", "9", "--q", "2/3", "--out", str(path))
    table = GenocchiTable.from_json(json.loads(path.read_text()))
    assert table == genocchi_table(QContext(Fraction(2, 3)), 2, 9)


def test_genocchi_deterministic(capsys):
    args = ("genocchi", "--alpha", "3", "--order", "9", "--q", "2/3", "--format", "csv")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_gamma_product(capsys):
    code, out, _ = run(capsys, "gamma", "--q", "0.5", "--x", "3", "--method", "product")
    data = json.loads(out)
    assert code == 0 and abs(float(data["value"]) - 1.5) < 1e-15


@pytest.mark.parametrize("method", ["integral", "meromorphic"])
def test_gamma_other_methods(capsys, method):
    code, out, _ = run(capsys, "gamma", "--q", "0.5", "--x", "4", "--method", method, "--tol", "1e-15")
    data = json.loads(out)
    assert code == 0 and abs(float(data["value"]) - 2.625) < 1e-13
    assert data["metadata"]


def test_gamma_pole(capsys):
    code, out, _ = run(capsys, "gamma", "--q", "0.5", "--x", "0", "--method", "product")
    assert code == 3 and json.loads(out)["error"] == "PoleAt"


def test_gamma_bad_q(capsys):
    code, out, _ = run(capsys, "gamma", "--q", "1.5", "--x", "2")
    assert code == 3


def test_gamma_divergent_improper(capsys):
    code, out, _ = run(capsys, "gamma", "--q", "0.6", "--x", "2", "--method", "integral", "--form", "improper")
    assert code == 3 and json.loads(out)["error"] == "DivergentTail"


def test_zeta_exact(capsys):
    code, out, _ = run(capsys, "zeta", "--q", "1", "--alpha", "1", "--neg-n", "1", "--x", "0")
    data = json.loads(out)
    assert code == 0
    assert (data["lhs"], data["rhs"], data["equal"]) == ("-1/2", "-1/2", True)


def test_zeta_numeric(capsys):
    code, out, _ = run(capsys, "zeta", "--q", "0.5", "--z", "1", "--x", "1", "--alpha", "1")
    assert code == 0 and abs(float(json.loads(out)["value"]) - 3 * 0.6931471805599453) < 1e-14


def test_zeta_mode_required(capsys):
    code, _, _ = run(capsys, "zeta", "--q", "1", "--x", "0")
    assert code == 2


def test_zeta_domain_error(capsys):
    code, out, _ = run(capsys, "zeta", "--q", "0.5", "--z", "-1", "--x", "1")
    assert code == 3 and json.loads(out)["error"] == "DomainError"


def test_verify_empty_suites(capsys):
    code, _, _ = run(capsys, "verify", "--suites", "")
    assert code == 2


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suites", "nope")
    assert code == 2


def test_verify_gamma_suite(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--suites", "gamma", "--q", "1/2", "--out", str(path))
    report = json.loads(path.read_text())
    assert code == 0 and report["summary"]["fail"] == 0
    checks = {r["check"] for r in report["records"]}
    assert {"agreement_product_integral", "agreement_integral_meromorphic", "residue"} <= checks


def test_verify_reported_does_not_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "rubin,zeta", "--q", "1/2", "--max-n", "4", "--alpha", "1")
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["reported"] > 0 and report["summary"]["fail"] == 0


def test_verify_deterministic(capsys):
    args = ("verify", "--suites", "expansion,convolution,zeta", "--q", "2/3,1", "--max-n", "5")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_verify_records_unique(capsys):
    _, out, _ = run(capsys, "verify", "--suites", "expansion,qadd,rubin", "--q", "1/2,1", "--max-n", "4")
    keys = [(r["suite"], r["check"], json.dumps(r["params"], sort_keys=True)) for r in json.loads(out)["records"]]
    assert len(keys) == len(set(keys))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qgenocchi", "zeta", "--q", "1", "--alpha", "2",
                           "--neg-n", "0", "--x", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["equal"] is True


def test_precision_env_var(monkeypatch, capsys):
    monkeypatch.setenv("QGEN_PRECISION_BITS", "256")
    code, out, _ = run(capsys, "gamma", "--q", "0.5", "--x", "2.5")
    assert code == 0 and json.loads(out)["precision"] == 256
