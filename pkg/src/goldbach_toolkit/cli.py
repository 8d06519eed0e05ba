"""Command-line entry point: `goldbach <command> ...`."""
from pathlib import Path
from typing import Optional
import logging
import sys

import click
import polars as pl

from goldbach_toolkit import __version__
from goldbach_toolkit.analytics.paper_table import paper_table
from goldbach_toolkit.config import load_config
from goldbach_toolkit.exceptions import GoldbachError, UsageError
from goldbach_toolkit.montecarlo.simulation import mc_disjoint
from goldbach_toolkit.probmodel.alpha import AlphaEquation, alpha_solve
from goldbach_toolkit.probmodel.lemma import (
    BoundForm,
    exact_disjoint_prob,
    lemma_bound,
    model_disjoint_prob,
)
from goldbach_toolkit.probmodel.tail import inequality_crossover, tail_sum
from goldbach_toolkit.sieve.cache import cached_sieve
from goldbach_toolkit.subsets.builder import build_subset
from goldbach_toolkit.subsets.io import export_subset
from goldbach_toolkit.subsets.similarity import similarity_deviation
from goldbach_toolkit.subsets.spec import SubsetKind, SubsetSpec
from goldbach_toolkit.verifier.runner import verify_range

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLES = 2

KIND_CHOICE = click.Choice([kind.value for kind in SubsetKind])


class ToolkitGroup(click.Group):
    """A click group whose usage errors exit with 1 and whose commands return exit codes."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as error:
            click.echo(f"Error: {error.format_message()}", err=True)
            code = EXIT_USAGE
        except (GoldbachError, FileNotFoundError) as error:
            click.echo(f"Error: {error}", err=True)
            code = EXIT_USAGE
        else:
            code = result if isinstance(result, int) else EXIT_OK
        if standalone_mode:
            sys.exit(code)
        return code


def subset_options(func):
    func = click.option("--seed", type=int, default=None, help="Seed of a jitter subset")(func)
    func = click.option("--t", "t", type=int, default=None, help="Shift amount of a shift subset")(func)
    func = click.option("--kind", type=KIND_CHOICE, required=True, help="Subset construction")(func)
    return func


def _build(kind: str, limit: int, t: Optional[int], seed: Optional[int]):
    spec = SubsetSpec.from_options(kind, limit, t=t, seed=seed)
    table = cached_sieve(spec.reach)
    return build_subset(spec, table), table


def _emit_csv(frame: pl.DataFrame) -> None:
    click.echo(frame.write_csv(), nl=False)


@click.group(cls=ToolkitGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="goldbach")
@click.option("-v", "--verbose", count=True, help="Log to stderr (-v info, -vv debug)")
def cli(verbose: int) -> None:
    """Prime-like subsets, generalized Goldbach verification and violation probabilities."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger("goldbach_toolkit").setLevel(level)


@cli.command("gen")
@subset_options
@click.option("--limit", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def gen(kind: str, t: Optional[int], seed: Optional[int], limit: int, out: Optional[Path]) -> int:
    """Write a subset in text form (spec header, one element per line)."""
    subset, _ = _build(kind, limit, t, seed)
    text = export_subset(subset, out)
    if out is None:
        click.echo(text, nl=False)
    return EXIT_OK


@cli.command("similarity")
@subset_options
@click.option("--limit", type=int, required=True)
def similarity(kind: str, t: Optional[int], seed: Optional[int], limit: int) -> int:
    """Max deviation |pi_Q(n) - pi(n)| over n <= limit, as CSV."""
    subset, table = _build(kind, limit, t, seed)
    report = similarity_deviation(subset, table)
    _emit_csv(pl.DataFrame([report.to_row()]))
    return EXIT_OK


@cli.command("verify")
@subset_options
@click.option("--from", "from_even", type=int, default=4, show_default=True)
@click.option("--to", "to_even", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--tolerate-below", type=int, default=0, show_default=True, help="Ignore counterexamples <= this even")
def verify(
    kind: str,
    t: Optional[int],
    seed: Optional[int],
    from_even: int,
    to_even: int,
    jobs: int,
    report_path: Optional[Path],
    tolerate_below: int,
) -> int:
    """Check every even in [from, to] for a representation q1 + q2 in the subset (JSON report)."""
    if from_even % 2 or to_even % 2:
        raise UsageError(f"--from and --to must be even, got {from_even} and {to_even}")
    subset, _ = _build(kind, max(to_even, 4), t, seed)
    report = verify_range(subset, from_even, to_even, jobs=jobs, config=load_config())
    if report_path is None:
        click.echo(report.to_json(), nl=False)
    else:
        report.write_json(report_path)
    if report.counterexamples_above(tolerate_below):
        return EXIT_COUNTEREXAMPLES
    return EXIT_OK


@cli.command("prob")
@click.option("--n", "n", type=float, required=True)
@click.option("--form", type=click.Choice(["exact", "product", "exp"]), default="exp", show_default=True)
@click.option("--k1", type=int, default=None)
@click.option("--k2", type=int, default=None)
@click.option("--kind", type=KIND_CHOICE, default=None, help="Exact form only: take k1, k2 from this subset")
@click.option("--t", "t", type=int, default=None)
@click.option("--seed", type=int, default=None)
def prob(
    n: float,
    form: str,
    k1: Optional[int],
    k2: Optional[int],
    kind: Optional[str],
    t: Optional[int],
    seed: Optional[int],
) -> int:
    """log10 of the single-n violation probability or bound, as CSV."""
    if form != "exact":
        if k1 is not None or k2 is not None or kind is not None:
            raise UsageError("--k1/--k2/--kind only apply to --form exact")
        value = lemma_bound(n, BoundForm(form))
        _emit_csv(pl.DataFrame({"n": [n], "form": [form], "k1": [None], "k2": [None], "log10": [value.log10]}))
        return EXIT_OK
    if not float(n).is_integer():
        raise UsageError(f"--form exact needs an integer --n, got {n}")
    n = int(n)
    if (k1 is None) != (k2 is None):
        raise UsageError("--k1 and --k2 must be given together")
    if k1 is not None:
        if kind is not None:
            raise UsageError("Give either --k1/--k2 or --kind, not both")
        value = exact_disjoint_prob(n, k1, k2)
    elif kind is not None:
        subset, _ = _build(kind, max(2 * n, 3), t, seed)
        value, k1, k2 = model_disjoint_prob(n, "empirical", subset)
    else:
        value, k1, k2 = model_disjoint_prob(n, "paper")
    _emit_csv(pl.DataFrame({"n": [n], "form": [form], "k1": [k1], "k2": [k2], "log10": [value.log10]}))
    return EXIT_OK


@cli.command("tail")
@click.option("--from", "N", type=int, required=True)
@click.option("--rel-eps", type=float, default=None, help="Relative truncation tolerance (default 1e-12)")
def tail(N: int, rel_eps: Optional[float]) -> int:
    """log10 of sum_{n >= N} exp(-n / ln^2 n), as CSV."""
    result = tail_sum(N, rel_eps, config=load_config())
    _emit_csv(
        pl.DataFrame(
            {
                "N": [result.N],
                "log10_sum": [result.log10],
                "terms_used": [result.terms_used],
                "log10_remainder_bound": [result.remainder_log10],
            }
        )
    )
    return EXIT_OK


@cli.command("alpha")
@click.option("--n", "N", type=float, required=True)
@click.option("--literal", is_flag=True, help="Solve the equation with the signs as printed")
def alpha(N: float, literal: bool) -> int:
    """alpha, residual, closed form and log10 e^(-N^alpha), as CSV."""
    solution = alpha_solve(N, AlphaEquation.LITERAL if literal else AlphaEquation.CONSISTENT)
    _emit_csv(
        pl.DataFrame(
            {
                "N": [solution.N],
                "alpha": [solution.alpha],
                "residual": [solution.residual],
                "alpha_closed_form": [solution.alpha_closed_form],
                "log10_bound": [solution.bound().log10],
            }
        )
    )
    return EXIT_OK


@cli.command("crossover")
@click.option("--limit", "scan_limit", type=int, required=True)
def crossover(scan_limit: int) -> int:
    """Where n / ln^2 n > sqrt n + ln(2 sqrt n) starts to hold for good, as CSV."""
    n0 = inequality_crossover(scan_limit)
    _emit_csv(pl.DataFrame({"scan_limit": [scan_limit], "n0": [n0]}))
    return EXIT_OK


@cli.command("mc")
@click.option("--n", "n", type=int, required=True)
@click.option("--k1", type=int, required=True)
@click.option("--k2", type=int, required=True)
@click.option("--trials", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
def mc(n: int, k1: int, k2: int, trials: int, seed: int, jobs: int) -> int:
    """Monte Carlo estimate of the disjointness probability next to the exact value, as CSV."""
    estimate = mc_disjoint(n, k1, k2, trials, seed, jobs=jobs, config=load_config())
    exact = exact_disjoint_prob(n, k1, k2).log10
    _emit_csv(pl.DataFrame({"p_hat": [estimate.p_hat], "stderr": [estimate.stderr], "exact_log10": [exact]}))
    return EXIT_OK


@cli.command("paper-table")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def paper_table_command(out: Optional[Path]) -> int:
    """Every reproducible figure with its published value and a pass flag, as CSV."""
    frame = paper_table()
    if out is None:
        _emit_csv(frame)
    else:
        frame.write_csv(out)
        logger.info("Wrote paper table to %s", out)
    return EXIT_OK if all(frame["pass"].to_list()) else EXIT_COUNTEREXAMPLES


def main(argv=None) -> int:
    return cli.main(args=argv, prog_name="goldbach")


if __name__ == "__main__":
    main()
