import io
import json

import pytest

from bottcheck import cli, theorems
from bottcheck.cli import BundleExpr, InputError, parse_bundle


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestParseBundle:
    def test_line_base(self):
        expr = parse_bundle("P1: O(0)^2 + O(1) + O(2)")
        assert expr == BundleExpr("P1", (0, 0, 1, 2), None)

    def test_abstract_plane(self):
        expr = parse_bundle("P2: rank2(c1=3,c2=3)")
        assert expr == BundleExpr("P2", None, (3, 3))

    def test_whitespace_insensitive(self):
        assert parse_bundle("P1:O(0)^2+O(1)+O(2)") == parse_bundle(
            " P1 : O( 0 ) ^ 2 + O( 1 ) + O( 2 ) "
        )

    def test_parse_render_round_trip(self):
        for text in ["P1: O(0)^2 + O(1) + O(2)", "P2: rank2(c1=3,c2=3)",
                     "P2: O(-1) + O(4)"]:
            expr = parse_bundle(text)
            assert parse_bundle(expr.render()) == expr
            assert parse_bundle(expr.render()).render() == expr.render()

    def test_errors_carry_position(self):
        with pytest.raises(InputError, match="position"):
            parse_bundle("P1: O(0) + X")

    def test_rank2_on_line_rejected(self):
        with pytest.raises(InputError):
            parse_bundle("P1: rank2(c1=1,c2=1)")


class TestThm1Command:
    def test_table8_no1(self):
        code, out, _ = run(
            ["thm1", "--h", "0", "--c13", "4", "--c12H", "6", "--c1H2", "6",
             "--c2H", "24", "--H3", "6"]
        )
        assert code == 0
        assert out == "closed:  14\nderived: 14\nMATCH\n"

    def test_symbolic_h(self):
        code, out, _ = run(
            ["thm1", "--symbolic-h", "--c13", "4", "--c12H", "6", "--c1H2", "6",
             "--c2H", "24", "--H3", "6"]
        )
        assert code == 0
        assert "14 + h" in out

    def test_corrupted_closed_form_trips_the_harness(self, monkeypatch):
        real = theorems.thm1_closed
        monkeypatch.setattr(theorems, "thm1_closed", lambda n: real(n) + 1)
        code, out, _ = run(
            ["thm1", "--h", "0", "--c13", "4", "--c12H", "6", "--c1H2", "6",
             "--c2H", "24", "--H3", "6"]
        )
        assert code == 1
        assert "MISMATCH" in out


class TestThm2Command:
    def test_example(self):
        code, out, _ = run(["thm2", "--bundle", "P1: O(0)^2 + O(1)^2", "--k", "0"])
        assert code == 0
        assert out == "chain:  4\nclosed: 4\nMATCH\n"

    def test_wrong_rank(self):
        code, _, err = run(["thm2", "--bundle", "P1: O(1) + O(2)", "--k", "0"])
        assert code == 2 and "4 summands" in err

    def test_all_distinct_hypothesis_violation(self):
        code, _, err = run(
            ["thm2", "--bundle", "P1: O(0) + O(1) + O(2) + O(3)", "--k", "0"]
        )
        assert code == 2 and "distinct" in err

    def test_corrupted_closed_form_trips_the_harness(self, monkeypatch):
        monkeypatch.setattr(theorems, "thm2_closed", lambda inp: 999)
        code, out, _ = run(["thm2", "--bundle", "P1: O(0)^2 + O(1)^2", "--k", "0"])
        assert code == 1 and "MISMATCH" in out


class TestThm3Command:
    def test_abstract(self):
        code, out, _ = run(["thm3", "--bundle", "P2: rank2(c1=3,c2=3)"])
        assert code == 0
        assert "Q(-1):  0" in out
        assert "closed: 0" in out
        assert "hrr-crosscheck[-3..6]: MATCH" in out
        assert "h0:" not in out

    def test_split_reports_h0(self):
        code, out, _ = run(["thm3", "--bundle", "P2: O(0) + O(3)"])
        assert code == 0
        assert "h0: 3" in out


class TestChiFCommand:
    def test_vanishing_band(self):
        code, out, _ = run(["chi-f", "--x", "0", "--y", "-2", "--p", "5", "--q", "7"])
        assert code == 0
        assert out == "f(0,-2) = 0\n"

    def test_oracle(self):
        code, out, _ = run(
            ["chi-f", "--x", "1", "--y", "1", "--p", "1", "--q", "2", "--oracle"]
        )
        assert code == 0
        assert "f(1,1) = 11" in out and "MATCH" in out

    def test_oracle_domain(self):
        code, _, err = run(
            ["chi-f", "--x", "0", "--y", "-1", "--p", "0", "--q", "0", "--oracle"]
        )
        assert code == 2 and "y >= 0" in err


class TestChowEvalCommand:
    def test_line_reduction(self):
        code, out, _ = run(
            ["chow-eval", "--ring", "line:0,0,1,2", "--expr", "U^4"]
        )
        assert code == 0
        assert out == "class:  3*H*U^3\ndegree: 3\n"

    def test_plane_expression(self):
        code, out, _ = run(
            ["chow-eval", "--ring", "plane:3,3", "--expr", "(U - 3*H) * U"]
        )
        assert code == 0
        assert "-3*H^2" in out

    def test_render_parse_round_trip(self):
        code, out, _ = run(["chow-eval", "--ring", "plane:3,3", "--expr", "U^2"])
        rendered = out.splitlines()[0].split(":", 1)[1].strip()
        code2, out2, _ = run(["chow-eval", "--ring", "plane:3,3", "--expr", rendered])
        assert code2 == 0 and out2 == out

    def test_bad_ring(self):
        code, _, err = run(["chow-eval", "--ring", "cube:1", "--expr", "H"])
        assert code == 2 and "ring" in err

    def test_parse_error(self):
        code, _, err = run(["chow-eval", "--ring", "plane:1,1", "--expr", "H + *"])
        assert code == 2 and "position" in err


class TestBottReportCommand:
    def test_builtin_text(self):
        code, out, _ = run(["bott-report"])
        assert code == 0
        assert "table8-no1" in out and "14 + h" in out

    def test_json(self):
        code, out, _ = run(["bott-report", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert any(row["id"] == "table9" for row in payload)

    def test_cases_file(self, tmp_path):
        path = tmp_path / "cases.ini"
        path.write_text(
            "[only]\ngeometry = table9\nc13 = 2\nc12H = 5\nc1H2 = 10\n"
            "c2H = 45\nH3 = 20\nprovenance = user\n"
        )
        code, out, _ = run(["bott-report", "--cases", str(path)])
        assert code == 0 and "20 + h" in out

    def test_missing_file(self):
        code, _, err = run(["bott-report", "--cases", "/nonexistent.ini"])
        assert code == 2 and "error" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["thm1", "--h", "0", "--c13", "4", "--c12H", "6", "--c1H2", "6",
             "--c2H", "24", "--H3", "6"],
            ["thm2", "--bundle", "P1: O(0)^2 + O(1)^2", "--k", "0"],
            ["thm3", "--bundle", "P2: rank2(c1=3,c2=3)"],
            ["chi-f", "--x", "0", "--y", "-2", "--p", "5", "--q", "7"],
            ["bott-report"],
            ["bott-report", "--json"],
            ["chow-eval", "--ring", "line:0,0,1,2", "--expr", "U^4"],
        ],
    )
    def test_byte_identical_output(self, argv):
        assert run(argv) == run(argv)

    def test_unknown_flag_exits_2(self, capsys):
        code, _, _ = run(["thm1", "--bogus", "1"])
        assert code == 2
        assert "unrecognized arguments" in capsys.readouterr().err
