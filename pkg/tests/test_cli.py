import io
import json
import math
import polars as pl
import pytest
from click.testing import CliRunner

from goldbach_toolkit.cli import cli, main
from goldbach_toolkit.subsets.io import parse_subset


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def read_csv(text: str) -> pl.DataFrame:
    return pl.read_csv(io.StringIO(text))


def test_gen_prints_and_writes(runner, tmp_path):
    """gen emits the text form on stdout, or into --out."""
    result = runner.invoke(cli, ["gen", "--kind", "primes", "--limit", "30"])
    assert result.exit_code == 0, result.output
    subset = parse_subset(result.stdout)
    assert subset.elements.tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    out = tmp_path / "jitter.txt"
    result = runner.invoke(cli, ["gen", "--kind", "jitter", "--seed", "42", "--limit", "1000", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert out.read_text().startswith("# spec kind=jitter t=- seed=42 limit=1000\n")


def test_similarity_csv(runner):
    result = runner.invoke(cli, ["similarity", "--kind", "shift", "--t", "1", "--limit", "1000"])
    assert result.exit_code == 0, result.output
    frame = read_csv(result.stdout)
    assert frame.columns == ["c_observed", "argmax_n"]
    assert frame.row(0) == (1, 2)


def test_verify_primes_exits_zero(runner, tmp_path):
    """Every even up to 1000 is a sum of two primes."""
    result = runner.invoke(cli, ["verify", "--kind", "primes", "--from", "4", "--to", "1000"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["counterexamples"] == []
    assert report["largest_failing_even"] is None
    assert report["checked_count"] == 499

    path = tmp_path / "report.json"
    result = runner.invoke(cli, ["verify", "--kind", "primes", "--to", "1000", "--jobs", "2", "--report", str(path)])
    assert result.exit_code == 0, result.output
    assert json.loads(path.read_text())["range"] == [4, 1000]


def test_verify_counterexamples_exit_two(runner):
    """Shift t=3 misses 4, 6 and 8; tolerating evens up to 8 turns the exit code back to 0."""
    result = runner.invoke(cli, ["verify", "--kind", "shift", "--t", "3", "--to", "100"])
    assert result.exit_code == 2, result.output
    assert json.loads(result.stdout)["counterexamples"] == [4, 6, 8]
    result = runner.invoke(cli, ["verify", "--kind", "shift", "--t", "3", "--to", "100", "--tolerate-below", "8"])
    assert result.exit_code == 0, result.output


def test_usage_errors_exit_one(runner):
    """Unknown flags, odd endpoints and incomplete recipes are usage errors."""
    for args in (
        ["verify", "--kind", "primes", "--to", "1000", "--bogus"],
        ["verify", "--kind", "primes", "--to", "1001"],
        ["verify", "--kind", "primes", "--from", "2", "--to", "100"],
        ["gen", "--kind", "jitter", "--limit", "100"],
        ["gen", "--kind", "shift", "--t=-1", "--limit", "100"],
        ["prob", "--n", "100", "--form", "exact", "--k1", "3"],
        ["tail", "--from", "100", "--rel-eps", "2"],
        ["alpha", "--n", "1000"],
        ["nonsense"],
    ):
        result = runner.invoke(cli, args)
        assert result.exit_code == 1, f"{args}: exit {result.exit_code}"
        assert "Error" in result.output, f"{args}: no diagnostic"


def test_prob_forms(runner):
    """Bound forms, exact sizes and empirical sizes."""
    result = runner.invoke(cli, ["prob", "--n", "10000"])
    assert result.exit_code == 0, result.output
    frame = read_csv(result.stdout)
    assert frame.columns == ["n", "form", "k1", "k2", "log10"]
    assert frame["log10"][0] == pytest.approx(-51.196, abs=1e-3)

    result = runner.invoke(cli, ["prob", "--n", "4", "--form", "exact", "--k1", "2", "--k2", "2"])
    assert read_csv(result.stdout)["log10"][0] == pytest.approx(math.log10(1 / 6))

    result = runner.invoke(cli, ["prob", "--n", "100", "--form", "exact", "--kind", "primes"])
    row = read_csv(result.stdout).row(0, named=True)
    assert (row["k1"], row["k2"]) == (25, 21)

    result = runner.invoke(cli, ["prob", "--n", "100", "--form", "exact"])
    row = read_csv(result.stdout).row(0, named=True)
    assert (row["k1"], row["k2"]) == (21, 21)


def test_tail_alpha_crossover(runner):
    tail = read_csv(runner.invoke(cli, ["tail", "--from", "20000"]).stdout)
    assert tail.columns == ["N", "log10_sum", "terms_used", "log10_remainder_bound"]
    assert abs(tail["log10_sum"][0] + 86) <= 1

    alpha = read_csv(runner.invoke(cli, ["alpha", "--n", "1e6"]).stdout)
    assert alpha.columns == ["N", "alpha", "residual", "alpha_closed_form", "log10_bound"]
    assert alpha["alpha"][0] == pytest.approx(0.6199, abs=1e-3)
    literal = read_csv(runner.invoke(cli, ["alpha", "--n", "1e6", "--literal"]).stdout)
    assert literal["alpha"][0] == pytest.approx(alpha["alpha"][0], abs=1e-3)

    crossover = read_csv(runner.invoke(cli, ["crossover", "--limit", "20000"]).stdout)
    assert 5_000 < crossover["n0"][0] < 10_000


def test_mc_csv(runner):
    result = runner.invoke(cli, ["mc", "--n", "4", "--k1", "2", "--k2", "2", "--trials", "20000", "--seed", "3"])
    assert result.exit_code == 0, result.output
    frame = read_csv(result.stdout)
    assert frame.columns == ["p_hat", "stderr", "exact_log10"]
    row = frame.row(0, named=True)
    assert abs(row["p_hat"] - 1 / 6) <= 4 * row["stderr"]
    assert row["exact_log10"] == pytest.approx(math.log10(1 / 6))


def test_paper_table_passes(runner, tmp_path):
    """Every reproduced figure matches its published value."""
    result = runner.invoke(cli, ["paper-table"])
    assert result.exit_code == 0, result.output
    frame = read_csv(result.stdout)
    assert frame.columns == ["quantity", "paper_value", "computed_log10", "pass"]
    assert frame["pass"].all(), f"Failing rows: {frame.filter(~pl.col('pass'))}"
    first = frame.row(0, named=True)
    assert first["paper_value"] == "<1e-51"
    assert first["computed_log10"] == pytest.approx(-51.2, abs=0.05)

    out = tmp_path / "table.csv"
    result = runner.invoke(cli, ["paper-table", "--out", str(out)])
    assert result.exit_code == 0
    assert pl.read_csv(out).height == frame.height


def test_main_returns_exit_code(capsys):
    """main() exits with the command's exit code."""
    with pytest.raises(SystemExit) as raised:
        main(["crossover", "--limit", "20000"])
    assert raised.value.code == 0
    assert "n0" in capsys.readouterr().out
