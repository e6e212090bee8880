import numpy as np
import pandas as pd
import pytest

from src.fuzz import random_connected_sum, random_generator, run_fuzz, run_iteration
from src.validation import validate_all


def test_random_generators_are_valid_and_effective() -> None:
    rng = np.random.default_rng(3)
    for _ in range(100):
        label, data = random_generator(rng, 10)
        report = validate_all(data)

        assert report.overall, str(label)
        assert report.divisor == 1


def test_random_connected_sums_are_valid() -> None:
    for index in range(30):
        rng = np.random.default_rng([5, index])
        data = random_connected_sum(rng, summands=6, max_param=8)

        assert validate_all(data).overall


def test_small_parameters_fall_back_to_s6() -> None:
    rng = np.random.default_rng(0)
    for _ in range(20):
        label, data = random_generator(rng, 2)

        assert validate_all(data).overall


def test_run_iteration_is_deterministic() -> None:
    first = run_iteration(4, seed=11, max_summands=5, max_param=7)
    second = run_iteration(4, seed=11, max_summands=5, max_param=7)

    assert first == second
    assert first.verified


def test_small_run_verifies() -> None:
    result = run_fuzz(seed=7, iterations=25, max_summands=6, max_param=8)

    assert result.ok, result.errors
    assert [record.iteration for record in result.records] == list(range(25))


def test_worker_pool_gives_the_same_records() -> None:
    serial = run_fuzz(seed=2, iterations=6, max_summands=4, max_param=6)
    pooled = run_fuzz(seed=2, iterations=6, max_summands=4, max_param=6, workers=2)

    assert pooled.records == serial.records


def test_csv_report(tmp_path) -> None:
    result = run_fuzz(seed=1, iterations=5, max_summands=3, max_param=6)
    path = tmp_path / "fuzz.csv"

    result.write_csv(path)
    frame = pd.read_csv(path)

    assert list(frame.columns) == ["iteration", "seed", "summands", "points", "steps", "verified", "error"]
    assert len(frame) == 5
    assert frame["verified"].all()


@pytest.mark.slow
def test_closure_on_large_sums() -> None:
    result = run_fuzz(seed=7, iterations=500, max_summands=12, max_param=10)

    assert result.ok, result.errors
