import json

import pytest

import hyperwalks.formulas as formulas_module
from hyperwalks.cli import main
from hyperwalks.checks import run_check
from hyperwalks.formulas import recurrence_spec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_closed(capsys):
    code, out, _ = run(capsys, "count", "B", "--r", "1", "--n", "2", "--method", "closed")
    assert code == 0
    assert out.strip() == "28"


def test_count_dp(capsys):
    code, out, _ = run(capsys, "count", "D", "--r", "1", "--n", "3", "--method", "dp")
    assert code == 0
    assert out.strip() == "320"


def test_count_language_flag_spelling(capsys):
    code, out, _ = run(capsys, "count", "--language", "B", "--r", "1", "--n", "2")
    assert code == 0
    assert out.strip() == "28"
    code, _, err = run(capsys, "count", "--r", "1", "--n", "2")
    assert code == 2
    assert "language" in err


def test_count_recurrence_r0(capsys):
    code, out, _ = run(capsys, "count", "E", "--r", "0", "--n", "5", "--method", "recurrence")
    assert code == 0
    assert out.strip() == "0"


def test_count_all_methods_agree(capsys):
    values = set()
    for method in ("closed", "hyper", "recurrence", "dp", "series", "naive"):
        code, out, _ = run(capsys, "count", "F", "--r", "1", "--n", "3", "--method", method)
        assert code == 0
        values.add(out.strip())
    assert values == {"116"}


def test_count_usage_errors(capsys):
    code, _, err = run(capsys, "count", "A", "--r", "1", "--n", "2", "--method", "hyper")
    assert code == 2
    assert "hyper" in err
    code, _, err = run(capsys, "count", "B", "--r", "0", "--n", "1", "--method", "hyper")
    assert code == 2
    code, _, err = run(capsys, "count", "A", "--r", "2", "--n", "9", "--method", "naive")
    assert code == 2
    assert "budget" in err


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "F", "--r", "1", "--terms", "4", "--format", "csv")
    assert code == 0
    assert out.strip() == "1,4,20,116"


def test_series_csv_r0(capsys):
    code, out, _ = run(capsys, "series", "C", "--r", "0", "--terms", "4")
    assert code == 0
    assert out.strip() == "1,2,2,2"


def test_series_bfile(capsys):
    code, out, _ = run(capsys, "series", "A", "--r", "1", "--terms", "3", "--format", "bfile")
    assert code == 0
    assert out == "0 1\n1 8\n2 96\n"


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "B", "--r", "1", "--terms", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[2] == {"language": "B", "r": 1, "n": 2, "method": "series", "value": "28"}


def test_series_rejects_zero_terms(capsys):
    code, _, err = run(capsys, "series", "B", "--r", "1", "--terms", "0")
    assert code == 2


def test_check_green_path(capsys):
    code, out, _ = run(
        capsys, "check", "--r", "1..2", "--n-max", "6", "--suites", "methods,ratios"
    )
    assert code == 0
    assert "OK" in out
    assert "0 disagreements" in out.splitlines()[-1]


def test_check_bijection_suite(capsys):
    code, out, _ = run(capsys, "check", "--suites", "bijection", "--n-max", "4")
    assert code == 0
    assert "[bijection]" in out


def test_check_json_deterministic(capsys, tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    for path in (first, second):
        code, _, _ = run(
            capsys, "check", "--r", "1..1", "--n-max", "5",
            "--suites", "methods,symmetry", "--json", str(path),
        )
        assert code == 0
    assert first.read_bytes() == second.read_bytes()


def test_check_detects_corrupted_initial_condition(capsys, monkeypatch):
    good = recurrence_spec.__wrapped__ if hasattr(recurrence_spec, "__wrapped__") else recurrence_spec

    def corrupted(spec):
        rs = good(spec)
        if spec.id == "C" and spec.r == 1:
            return type(rs)(
                order=rs.order, lead=rs.lead, back1=rs.back1, back2=rs.back2,
                initial=(rs.initial[0], rs.initial[1] + 2), start=rs.start,
            )
        return rs

    monkeypatch.setattr(formulas_module, "recurrence_spec", corrupted)
    code, out, _ = run(capsys, "check", "--r", "1..1", "--n-max", "5", "--suites", "methods")
    assert code == 1
    assert "FAIL" in out


def test_run_check_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run_check([1], 5, ("nonsense",))


def test_oeis_subcommand(capsys):
    code, out, _ = run(capsys, "oeis", "A086871")
    assert code == 0
    assert out.splitlines()[0] == "1 2"
    code, _, err = run(capsys, "oeis", "A000000")
    assert code == 2
    assert "A000000" in err
