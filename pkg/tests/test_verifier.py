import json
import pytest

from goldbach_toolkit.exceptions import DomainError, OutOfRangeError, UsageError
from goldbach_toolkit.subsets.builder import IntegerSubset, build_subset
from goldbach_toolkit.subsets.spec import SubsetSpec
from goldbach_toolkit.verifier.runner import sweep_witnesses, verify_range, verify_shift_theorem
from goldbach_toolkit.verifier.witness import Witness, build_AB, goldbach_witness

JITTER_SEEDS = [1, 7, 42, 2024, 0xDEADBEEF]


def test_witness_examples(small_table):
    """4 = 2 + 2, 12 = 5 + 7, and 10 = 5 + 5 in the primes shifted by 2."""
    primes = build_subset(SubsetSpec.primes(100), small_table)
    assert goldbach_witness(primes, 2) == Witness(2, 2)
    assert goldbach_witness(primes, 6) == Witness(5, 7)
    assert goldbach_witness(primes, 6).even == 12
    shifted = build_subset(SubsetSpec.shift(2, 100), small_table)
    assert goldbach_witness(shifted, 5) == Witness(5, 5), "5 = 3 + 2 lies in the shifted set"


def test_witness_errors(small_table):
    primes = build_subset(SubsetSpec.primes(100), small_table)
    with pytest.raises(OutOfRangeError):
        goldbach_witness(primes, 51)
    with pytest.raises(DomainError):
        goldbach_witness(primes, 1)


def test_witness_absent_for_sparse_subset():
    subset = IntegerSubset.from_elements(SubsetSpec.primes(20), [3, 5])
    assert goldbach_witness(subset, 2) is None, "4 has no representation in {3, 5}"
    assert goldbach_witness(subset, 4) == Witness(3, 5)


def test_distance_set_examples(small_table):
    """A_5, B_5 and A_4, B_4 for the primes."""
    primes = build_subset(SubsetSpec.primes(100), small_table)
    a5, b5 = build_AB(primes, 5)
    assert a5 == {0, 2, 3} and b5 == {0, 2}
    a4, b4 = build_AB(primes, 4)
    assert a4 == {1, 2} and b4 == {1, 3}
    assert a4 & b4 == {1}, "8 = 3 + 5 shows up as the common distance 1"


def test_distance_sets_contain_zero_for_members(small_table):
    primes = build_subset(SubsetSpec.primes(1_000), small_table)
    for n in (3, 5, 7, 101, 499):
        a, b = build_AB(primes, n)
        assert 0 in a & b, f"{n} is prime, so 0 is a common distance"
        assert max(a | b) < n, "Distances lie in {0, ..., n-1}"


def test_witness_iff_distance_sets_meet(small_table):
    """A representation exists exactly when A_n and B_n intersect, on three kinds of subset."""
    specs = [SubsetSpec.primes(9_990), SubsetSpec.shift(3, 9_990), SubsetSpec.jitter(42, 9_990)]
    for spec in specs:
        subset = build_subset(spec, small_table)
        witnesses = sweep_witnesses(subset, 1, 4_996)
        for n in range(2, 4_996):
            a, b = build_AB(subset, n)
            witness = goldbach_witness(subset, n)
            assert (witness is not None) == bool(a & b), f"{spec.kind.value}: mismatch at n={n}"
            assert witnesses[n - 1] == (0 if witness is None else witness.q1), "Sweep disagrees with the scan"


def test_verify_small_range(small_table):
    """4, 6 and 8 all have representations in the primes up to 10."""
    report = verify_range(build_subset(SubsetSpec.primes(10), small_table), 4, 8)
    assert report.counterexamples == []
    assert report.largest_failing_even is None
    assert report.checked_count == 3
    assert report.max_min_witness == 3, "8 = 3 + 5 needs q1 = 3"


def test_verify_range_errors(small_table):
    primes = build_subset(SubsetSpec.primes(1_000), small_table)
    with pytest.raises(UsageError):
        verify_range(primes, 5, 100)
    with pytest.raises(UsageError):
        verify_range(primes, 4, 101)
    with pytest.raises(UsageError):
        verify_range(primes, 2, 100)
    with pytest.raises(UsageError):
        verify_range(primes, 100, 98)
    with pytest.raises(OutOfRangeError):
        verify_range(primes, 4, 1_002)


def test_shifted_primes_fail_only_at_small_evens(million_table):
    """Shift t=3 misses exactly the evens up to 2t + 2 = 8."""
    subset = build_subset(SubsetSpec.shift(3, 10_000), million_table)
    report = verify_range(subset, 4, 10_000)
    assert report.counterexamples == [4, 6, 8], "Only evens below 2t + 4 = 10 should fail"
    assert report.largest_failing_even == 8
    assert report.counterexamples_above(6) == [8]


def test_report_json_keys(small_table, tmp_path):
    report = verify_range(build_subset(SubsetSpec.primes(1_000), small_table), 4, 1_000)
    path = tmp_path / "report.json"
    report.write_json(path)
    data = json.loads(path.read_text())
    assert set(data) == {
        "spec",
        "range",
        "counterexamples",
        "largest_failing_even",
        "max_min_witness",
        "checked_count",
        "elapsed_ms",
    }
    assert data["spec"] == {"kind": "primes", "t": None, "seed": None, "limit": 1_000}
    assert data["range"] == [4, 1_000]
    assert data["checked_count"] == 499
    assert "elapsed_ms" not in report.outcome()


def test_verify_is_independent_of_jobs(million_table):
    """1, 2 and 8 shards give the same report apart from timing."""
    subset = build_subset(SubsetSpec.jitter(7, 200_000), million_table)
    outcomes = [verify_range(subset, 4, 200_000, jobs=jobs).outcome() for jobs in (1, 2, 8)]
    assert outcomes[0] == outcomes[1] == outcomes[2], "Sharding changed the report"


def test_small_blocks_match_one_block(million_table):
    """Block boundaries inside a shard do not change the result."""
    from goldbach_toolkit.config import ToolkitConfig

    subset = build_subset(SubsetSpec.jitter(1, 50_000), million_table)
    whole = verify_range(subset, 4, 50_000).outcome()
    blocked = verify_range(subset, 4, 50_000, config=ToolkitConfig(verify_block=997)).outcome()
    assert whole == blocked


def test_counterexamples_are_monotone_in_limit(million_table):
    """A counterexample found at one limit is found again at a larger one."""
    previous = None
    for limit in (1_000, 10_000, 100_000):
        subset = build_subset(SubsetSpec.jitter(2024, limit), million_table)
        report = verify_range(subset, 4, limit)
        assert all(even % 2 == 0 and 4 <= even <= limit for even in report.counterexamples)
        if previous is not None:
            still_small = [even for even in report.counterexamples if even <= previous[0]]
            # a jitter subset with a larger limit extends the smaller one
            assert still_small == previous[1], f"Counterexamples below {previous[0]} changed at limit {limit}"
        previous = (limit, report.counterexamples)


def test_shift_theorem(million_table):
    """Shifting by c maps representations of 2n - 2c onto those of 2n."""
    assert verify_shift_theorem(0, 10_000, million_table)
    assert verify_shift_theorem(1, 10_000, million_table)
    with pytest.raises(UsageError):
        verify_shift_theorem(5, 13, million_table)


@pytest.mark.slow
def test_shift_theorem_million(million_table):
    assert verify_shift_theorem(5, 10**6, million_table, jobs=2), "Shift theorem fails for c=5 up to 10^6"


@pytest.mark.slow
def test_goldbach_up_to_ten_million(large_table):
    """Every even in [4, 10^7] is a sum of two primes."""
    primes = build_subset(SubsetSpec.primes(10**7), large_table)
    report = verify_range(primes, 4, 10**7, jobs=4)
    assert report.counterexamples == [], f"Counterexamples: {report.counterexamples[:10]}"
    assert report.checked_count == 10**7 // 2 - 1


@pytest.mark.slow
def test_jittered_primes_up_to_twenty_million(large_table):
    """Each seeded jitter represents every even above 100 up to 2 * 10^7."""
    for seed in JITTER_SEEDS:
        subset = build_subset(SubsetSpec.jitter(seed, 2 * 10**7), large_table)
        report = verify_range(subset, 4, 2 * 10**7, jobs=4)
        assert report.largest_failing_even is None or report.largest_failing_even <= 100, (
            f"Seed {seed}: largest failing even {report.largest_failing_even}"
        )


@pytest.mark.slow
@pytest.mark.extended
def test_goldbach_up_to_two_hundred_million():
    from goldbach_toolkit.sieve.cache import cached_sieve

    table = cached_sieve(2 * 10**8)
    primes = build_subset(SubsetSpec.primes(2 * 10**8), table)
    report = verify_range(primes, 4, 2 * 10**8, jobs=8)
    assert report.counterexamples_above(2) == []
    assert report.checked_count == 10**8 - 1
