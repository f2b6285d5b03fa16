import io
import json
import logging
from fractions import Fraction

import pytest

from conftest import X, qpoly
from src.cli.commands import main
from src.cli.poly_parser import parse_poly
from src.core.exceptions import PolynomialSyntaxError


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_doc(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


class TestParsePoly:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x^4+1", qpoly(1, 0, 0, 0, 1)),
            ("1/2*x^3 - (x+1)^2", qpoly(-1, -2, -1, Fraction(1, 2))),
            ("-x", qpoly(0, -1)),
            ("(x^2 + 1)/4", qpoly(Fraction(1, 4), 0, Fraction(1, 4))),
            ("  3 ", qpoly(3)),
            ("x^0", qpoly(1)),
        ],
    )
    def test_examples(self, text, expected):
        assert parse_poly(text) == expected

    def test_round_trip_through_str(self):
        f = (X + Fraction(2, 3)) ** 3 - 5
        assert parse_poly(str(f)) == f

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("x^2 + y", 6),
            ("x**2", 1),
            ("  x + z", 6),
            ("2.5*x", 0),
        ],
    )
    def test_error_offsets(self, text, offset):
        with pytest.raises(PolynomialSyntaxError) as e:
            parse_poly(text)
        assert e.value.offset == offset
        assert e.value.exit_code == 2

    @pytest.mark.parametrize("text", ["", "x^-1", "x^(1/2)", "x/(x+1)", "x/0", "f(x)", "x^2 +"])
    def test_rejected(self, text):
        with pytest.raises(PolynomialSyntaxError):
            parse_poly(text)


class TestCommands:
    def test_family_then_order(self, capsys, tmp_path):
        code, out, _ = run(capsys, "family", "--label", "Ct10", "--param", "t=1")
        assert code == 0
        curve = json.loads(out)
        assert curve["predicted_order"] == 10
        path = tmp_path / "ct10.json"
        path.write_text(out)
        code, out, _ = run(capsys, "order", "--f", str(path))
        assert code == 0
        assert json.loads(out)["order"] == 10

    def test_construct_then_verify(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "construct", "--alpha", "1", "--beta", "1", "--gamma", "0",
            "--a1", "x+2", "--r", "x+1", "--u", "1",
        )
        assert code == 0
        path = tmp_path / "c13.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--curve", str(path), "--primes", "2")
        assert code == 0
        cert = json.loads(out)
        assert cert["passed"] and cert["order"] == 13 and len(cert["primes"]) == 2

    def test_verify_wrong_order_exits_one(self, capsys, tmp_path):
        _, out, _ = run(capsys, "family", "--label", "C13", "--param", "u=1", "--param", "t=1")
        path = tmp_path / "c13.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--curve", str(path), "--order", "14", "--primes", "1")
        assert code == 1
        assert json.loads(out)["passed"] is False

    def test_construct_quartic(self, capsys):
        code, out, _ = run(capsys, "construct", "--kind", "quartic", "--a1", "x^2", "--r", "x", "--q", "1")
        assert code == 0
        assert json.loads(out)["predicted_order"] == 12

    def test_construct_missing_flag(self, capsys):
        code, _, err = run(capsys, "construct", "--alpha", "1")
        assert code == 2
        assert error_doc(err)["error"] == "missing_flag"

    def test_degenerate_family(self, capsys):
        code, out, err = run(capsys, "family", "--label", "Ct10", "--param", "t=-1")
        assert code == 1
        assert out == ""
        assert error_doc(err)["error"] == "degenerate_parameters"

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["family", "--label", "C99"],
            ["family", "--label", "C13", "--param", "u"],
            ["search", "--label", "Ct10", "--grid", "t=1..2", "--jobs", "0"],
            ["--log-level", "LOUD", "expand", "--f", "x^4+1"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert "error" in error_doc(err)

    @pytest.mark.parametrize(
        "argv, code",
        [
            (["family", "--label", "Ct10", "--param", "t=1/0"], "bad_parameter"),
            (["search", "--label", "Ct10", "--grid", "t=1/0..2"], "bad_grid"),
            (["search", "--label", "Ct10", "--grid", "t=1..2:1/0"], "bad_grid"),
            (["expand", "--f", '["1", "0", "0", "0", "1/0"]'], "bad_coefficients"),
            (["expand", "--f", '["1", "x"]'], "bad_coefficients"),
        ],
    )
    def test_bad_rationals_are_usage_errors(self, capsys, argv, code):
        rc, out, err = run(capsys, *argv)
        assert rc == 2
        assert out == ""
        assert error_doc(err)["error"] == code

    def test_curve_with_zero_denominator(self, capsys, tmp_path):
        _, out, _ = run(capsys, "family", "--label", "Ct10", "--param", "t=1")
        doc = json.loads(out)
        doc["f"][0] = "1/0"
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        rc, _, err = run(capsys, "order", "--f", str(path))
        assert rc == 2
        assert error_doc(err)["error"] == "invalid_curve"

    def test_syntax_error_reports_offset(self, capsys):
        code, _, err = run(capsys, "expand", "--f", "x^2 + y")
        assert code == 2
        doc = error_doc(err)
        assert doc["error"] == "syntax_error"
        assert doc["offset"] == 6

    def test_expand(self, capsys):
        code, out, _ = run(capsys, "expand", "--f", "x^4+1")
        assert code == 0
        doc = json.loads(out)
        assert doc["periodic"] is True
        assert doc["a0"] == ["0", "0", "1"]
        assert doc["quotients"] == [["0", "0", "2"]]
        assert doc["order"] == 2

    def test_expand_coefficient_list_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO('["1", "0", "0", "0", "1"]'))
        code, out, _ = run(capsys, "order", "--f", "-")
        assert code == 0
        assert json.loads(out) == {"order": 2, "genus": 1, "quasi_period": 1, "period": 1, "pell_constant": "-1"}

    def test_order_not_periodic(self, capsys):
        code, out, err = run(capsys, "order", "--f", "x^4+x+2", "--max-order", "13")
        assert code == 1
        assert json.loads(out)["periodic"] is False
        assert error_doc(err)["error"] == "not_periodic"

    def test_galois_poly(self, capsys):
        code, out, _ = run(capsys, "galois", "--poly", "x^3-3*x+1")
        assert code == 0
        assert json.loads(out)["verdict"] == "A_n"

    def test_galois_curve(self, capsys, tmp_path):
        _, out, _ = run(capsys, "family", "--label", "C13", "--param", "u=1", "--param", "t=1")
        path = tmp_path / "c13.json"
        path.write_text(out)
        code, out, _ = run(capsys, "galois", "--curve", str(path))
        assert code == 0
        report = json.loads(out)
        assert report["certificate"]["verdict"] == "S_n"
        assert report["absolutely_simple"] is True

    def test_galois_needs_one_source(self, capsys):
        code, _, _ = run(capsys, "galois", "--poly", "x^2+1", "--curve", "-")
        assert code == 2

    def test_search(self, capsys):
        code, out, _ = run(capsys, "search", "--label", "Ct10", "--grid", "t=-1..3:2", "--no-progress")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert [doc["params"]["t"] for doc in lines] == ["1", "3"]
        assert all(doc["certified_order"] == 10 for doc in lines)

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest")
        report = json.loads(out)
        assert code == 0, [r for r in report["results"] if not r["passed"]]
        assert report["failed"] == 0
        assert report["total"] == 18

    def test_selftest_missing_fixtures(self, capsys, tmp_path):
        code, _, _ = run(capsys, "selftest", "--fixtures", str(tmp_path / "absent"))
        assert code == 2
