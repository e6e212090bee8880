"""Randomized closure testing: reduce random connected sums of model manifolds."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from src.errors import FixedPointDataError
from src.fpdata import normalize_effective
from src.generators import connected_sum, gen_s6, generate
from src.models.fixed_point import FixedPoint, FixedPointData
from src.models.reduction import GeneratorFamily, GeneratorLabel
from src.reduction import audit_certificate, reduce_to_empty

logger = logging.getLogger(__name__)

_FAMILIES = list(GeneratorFamily)


@dataclass(frozen=True)
class FuzzRecord:
    iteration: int
    seed: int
    summands: int
    points: int
    steps: int
    verified: bool
    error: Optional[str] = None


@dataclass
class FuzzResult:
    records: List[FuzzRecord]
    failed: List[int]
    errors: Dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(record) for record in self.records])

    def write_csv(self, path: Path) -> None:
        self.to_frame().to_csv(path, index=False)


def _random_params(
    family: GeneratorFamily, rng: np.random.Generator, max_param: int
) -> Optional[Tuple[int, ...]]:
    if family is GeneratorFamily.S6:
        return tuple(int(value) for value in rng.integers(1, max_param + 1, size=3))
    if family is GeneratorFamily.CP3:
        if max_param < 3:
            return None
        return tuple(sorted(int(value) for value in rng.choice(max_param, size=3, replace=False) + 1))
    if family is GeneratorFamily.Z2SUM:
        if max_param < 3:
            return None
        a = int(rng.integers(3, max_param + 1))
        return a, int(rng.integers(1, (a - 1) // 2 + 1))

    n = 1 if family is GeneratorFamily.Z1 else 2
    for _ in range(16):
        a, b, c = (int(value) for value in rng.integers(1, max_param + 1, size=3))
        if b != a and n * c != a and n * c != b:
            return a, b, c
    return None


def random_generator(rng: np.random.Generator, max_param: int) -> Tuple[GeneratorLabel, FixedPointData]:
    """A random model manifold, normalized to an effective action."""

    family = _FAMILIES[int(rng.integers(len(_FAMILIES)))]
    params = _random_params(family, rng, max_param)
    if params is None:
        family = GeneratorFamily.S6
        params = _random_params(family, rng, max_param)
    label = GeneratorLabel(family, params, bool(rng.integers(2)))
    data, _ = normalize_effective(generate(label))
    return label, data


def _matching_pairs(m: FixedPointData, n: FixedPointData) -> List[Tuple[FixedPoint, FixedPoint]]:
    available = n.counter()
    return sorted(
        {(p, p.flipped()) for p in m if available[p.flipped()]},
        key=lambda pair: pair[0].sort_key(),
    )


def random_connected_sum(
    rng: np.random.Generator, summands: int, max_param: int, match_attempts: int = 8
) -> FixedPointData:
    """Glue `summands` random model manifolds one after another at matching fixed points.

    When no attempted summand shares a fixed point with the sum so far, an S^6
    on the weights of a random point is glued instead.
    """

    _, total = random_generator(rng, max_param)
    for _ in range(summands - 1):
        if not total:
            _, total = random_generator(rng, max_param)
            continue
        for _ in range(match_attempts):
            _, summand = random_generator(rng, max_param)
            pairs = _matching_pairs(total, summand)
            if pairs:
                pair = pairs[int(rng.integers(len(pairs)))]
                total = connected_sum(total, summand, [pair])
                break
        else:
            p = total.points[int(rng.integers(len(total)))]
            total = connected_sum(total, gen_s6(*p.weights), [(p, p.flipped())])
    return total


def run_iteration(
    index: int,
    seed: int,
    max_summands: int,
    max_param: int,
    match_attempts: int = 8,
    step_cap_factor: int = 4,
) -> FuzzRecord:
    rng = np.random.default_rng([seed, index])
    summands = int(rng.integers(1, max_summands + 1))
    data = random_connected_sum(rng, summands, max_param, match_attempts)
    try:
        cert = reduce_to_empty(data, step_cap_factor=step_cap_factor)
        audit = audit_certificate(cert)
    except FixedPointDataError as exc:
        logger.error("Iteration %d (seed %d) failed on %s: %s", index, seed, data, exc)
        return FuzzRecord(index, seed, summands, len(data), 0, False, f"{type(exc).__name__}: {exc}")
    if not audit.ok:
        logger.error("Iteration %d (seed %d) produced a bad certificate: %s", index, seed, audit.message)
        return FuzzRecord(index, seed, summands, len(data), len(cert), False, audit.message)
    return FuzzRecord(index, seed, summands, len(data), len(cert), True)


def run_fuzz(
    seed: int,
    iterations: int,
    max_summands: int,
    max_param: int,
    workers: int = 1,
    match_attempts: int = 8,
    step_cap_factor: int = 4,
) -> FuzzResult:
    """Reduce and replay `iterations` random connected sums; iteration i uses rng([seed, i])."""

    task = partial(
        run_iteration,
        seed=seed,
        max_summands=max_summands,
        max_param=max_param,
        match_attempts=match_attempts,
        step_cap_factor=step_cap_factor,
    )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(task, range(iterations)))
    else:
        records = [task(index) for index in range(iterations)]

    failed = [record.iteration for record in records if not record.verified]
    errors = {record.iteration: record.error or "" for record in records if not record.verified}
    logger.info("Fuzzed %d iterations: %d failed", iterations, len(failed))
    return FuzzResult(records=records, failed=failed, errors=errors)
