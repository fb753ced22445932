"""Tests for the command-line entry point."""

import json

import pytest

from src.main import EXIT_CONTRACT, EXIT_OK, EXIT_USAGE, main, parse_args

SMALL_DENSITY = ["--euler-bound", "1000", "--i-max", "20", "--j-max", "20"]


@pytest.fixture(autouse=True)
def no_log_files(mocker):
    """Keep the CLI from touching the user log directory."""
    return mocker.patch("src.main.setup_logging")


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestParseArgs:
    """Tests for parse_args."""

    def test_defaults(self):
        """Test that the Lagarias recurrence is the default."""
        config = parse_args(["sieve", "--limit", "100"])

        assert config.recurrence == (1, 1, 3, 1)
        assert config.sieve.limit == 100
        assert config.sieve.emit_records is False

    def test_negative_coefficients(self):
        """Test that negative integers are accepted as recurrence values."""
        config = parse_args(["classify", "--recurrence", "3", "-2", "1", "5"])

        assert config.recurrence == (3, -2, 1, 5)

    def test_density_flags(self):
        """Test that density truncations reach the settings."""
        config = parse_args(["density", *SMALL_DENSITY])

        assert (config.density.euler_bound, config.density.i_max) == (1000, 20)


class TestMain:
    """Tests for main and its exit codes."""

    def test_classify_text(self, capsys):
        """Test the default classification."""
        assert main(["classify"]) == EXIT_OK

        out = capsys.readouterr().out
        assert "NonTorsion" in out
        assert "-23/22 - 3/22*sqrt(5)" in out

    def test_classify_first_order_is_reported(self, capsys):
        """Test that a0 = 0 is a classification, not an error."""
        assert main(["classify", "--recurrence", "2", "0", "1", "1", "--format", "json"]) == EXIT_OK

        assert _json(capsys)["results"]["kind"] == "FirstOrderReject"

    def test_check_bad_prime_json(self, capsys):
        """Test the decision at p = 11 with its period."""
        assert main(["check", "--prime", "11", "--format", "json"]) == EXIT_OK

        data = _json(capsys)
        results = data["results"]
        assert data["meta"]["subcommand"] == "check"
        assert results["case"] == "bad"
        assert results["method"] == "oracle"
        assert results["divides"] is False
        assert results["agrees"] is True
        assert results["period"] == 5
        assert results["rank_of_apparition"] is None

    def test_check_split_prime(self, capsys):
        """Test that 19 first divides x_13."""
        assert main(["check", "--prime", "19", "--format", "json"]) == EXIT_OK

        results = _json(capsys)["results"]
        assert results["divides"] is True
        assert results["rank_of_apparition"] == 13
        assert results["ord_r"] % results["ord_q"] == 0

    def test_composite_prime_is_usage_error(self, capsys):
        """Test that --prime 15 exits with 1."""
        assert main(["check", "--prime", "15"]) == EXIT_USAGE

        assert "15 is not prime" in capsys.readouterr().err

    def test_invalid_integer_is_usage_error(self, capsys):
        """Test that argparse failures exit with 1 instead of 2."""
        assert main(["sieve", "--limit", "many"]) == EXIT_USAGE

        assert "error" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "args",
        [
            ["density", "--euler-bound", "50"],
            ["artin", "--base", "5", "--artin-prime-bound", "50"],
        ],
    )
    def test_small_prime_bound_is_usage_error(self, args, capsys):
        """Test that a prime bound below 100 exits with 1 and names the flag."""
        assert main(args) == EXIT_USAGE

        assert f"{args[-2]}: must be at least 100" in capsys.readouterr().err

    def test_zero_jobs_is_usage_error(self):
        """Test that non-positive counts exit with 1."""
        assert main(["sieve", "--limit", "100", "--jobs", "0"]) == EXIT_USAGE

    def test_degenerate_sieve_exits_two(self, capsys):
        """Test that a root-of-unity quotient fails with 2."""
        code = main(["sieve", "--recurrence", "0", "-1", "1", "1", "--limit", "100"])

        assert code == EXIT_CONTRACT
        assert "degenerate" in capsys.readouterr().err

    def test_first_order_check_exits_two(self):
        """Test that only classify accepts a0 = 0."""
        assert main(["check", "--recurrence", "2", "0", "1", "1", "--prime", "3"]) == EXIT_CONTRACT

    def test_unsupported_artin_base_exits_two(self):
        """Test that base 4 is refused."""
        assert main(["artin", "--base", "4"]) == EXIT_CONTRACT

    def test_compare_without_prediction_exits_two(self, capsys):
        """Test that compare fails before sieving when no formula is known."""
        code = main(["compare", "--recurrence", "3", "-2", "1", "5", "--limit", "100"])

        assert code == EXIT_CONTRACT
        assert "no density prediction" in capsys.readouterr().err

    def test_sieve_text(self, capsys):
        """Test the summary table at limit 10."""
        assert main(["sieve", "--limit", "10", "--jobs", "1"]) == EXIT_OK

        out = capsys.readouterr().out
        assert "primes <= 10" in out
        assert any(line.split()[:3] == ["total", "4", "4"] for line in out.splitlines())

    def test_sieve_records_csv(self, capsys):
        """Test per-prime CSV output."""
        args = ["sieve", "--limit", "11", "--jobs", "1", "--records", "--format", "csv"]

        assert main(args) == EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "p,case,divides,ord_r,ord_q,method"
        assert lines[-1] == "11,bad,false,,,oracle"

    def test_density_json(self, capsys):
        """Test that density JSON carries the exact total coefficient and round-trips."""
        assert main(["density", *SMALL_DENSITY, "--format", "json"]) == EXIT_OK

        results = _json(capsys)["results"]
        assert results["delta_total"]["fraction"] == "1573727/1569610"
        assert set(results) == {
            "euler_S",
            "delta_split_closed",
            "delta_inert_closed",
            "delta_total",
            "truncated_split_sum",
        }
        assert json.loads(json.dumps(results)) == results

    def test_density_for_lucas(self, capsys):
        """Test that other recurrences with a formula get their prediction."""
        args = ["density", "--recurrence", "1", "1", "2", "1", "--format", "json"]

        assert main(args) == EXIT_OK

        results = _json(capsys)["results"]
        assert results["lucas_total"]["fraction"] == "2/3"

    def test_compare_gaps(self, capsys):
        """Test that each gap matches its empirical and predicted values."""
        args = ["compare", "--limit", "2000", "--jobs", "1", *SMALL_DENSITY, "--format", "json"]

        assert main(args) == EXIT_OK

        rows = _json(capsys)["results"]["rows"]
        assert [row["case"] for row in rows] == ["split", "inert", "total"]
        for row in rows:
            assert row["gap"] == pytest.approx(abs(row["empirical"] - row["predicted"]))

    def test_artin_base_five(self, capsys):
        """Test the ratio to Artin's constant for base 5."""
        args = ["artin", "--base", "5", "--artin-j-max", "2000", "--artin-prime-bound", "1000"]
        args += ["--format", "json"]

        assert main(args) == EXIT_OK

        assert _json(capsys)["results"]["ratio"] == pytest.approx(20 / 19, abs=1e-2)

    def test_out_file(self, tmp_path):
        """Test writing the report to --out."""
        out = tmp_path / "reports" / "classify.json"

        assert main(["classify", "--format", "json", "--out", str(out)]) == EXIT_OK

        assert json.loads(out.read_text())["results"]["kind"] == "NonTorsion"

    def test_logging_configured_after_parsing(self, no_log_files):
        """Test that setup_logging follows --verbose and is skipped on usage errors."""
        main(["classify", "--verbose"])
        main(["check"])

        no_log_files.assert_called_once_with(debug=True)
