"""Validate and reduce every small model manifold and tabulate the outcome."""
from __future__ import annotations

import itertools
import sys
from pathlib import Path
from typing import Dict, Iterator, List

import pandas as pd

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.errors import FixedPointDataError
from src.generators import generate
from src.models.reduction import GeneratorFamily, GeneratorLabel
from src.reduction import reduce_to_empty, verify_certificate
from src.validation import validate_all

RESULTS_DIR = ROOT / "data" / "results"
MAX_PARAM = 6


def iter_labels(max_param: int) -> Iterator[GeneratorLabel]:
    values = range(1, max_param + 1)
    for params in itertools.combinations_with_replacement(values, 3):
        yield GeneratorLabel(GeneratorFamily.S6, params)
    for params in itertools.combinations(values, 3):
        yield GeneratorLabel(GeneratorFamily.CP3, params)
    for family, n in ((GeneratorFamily.Z1, 1), (GeneratorFamily.Z2, 2)):
        for a, b, c in itertools.product(values, repeat=3):
            if b != a and n * c != a and n * c != b:
                yield GeneratorLabel(family, (a, b, c))
    for a in values:
        for e in range(1, (a + 1) // 2):
            yield GeneratorLabel(GeneratorFamily.Z2SUM, (a, e))


def sweep(max_param: int) -> pd.DataFrame:
    rows: List[Dict[str, object]] = []
    for label in iter_labels(max_param):
        data = generate(label)
        row: Dict[str, object] = {"label": str(label), "points": len(data), "valid": validate_all(data).overall}
        try:
            cert = reduce_to_empty(data)
            row.update(steps=len(cert), verified=verify_certificate(cert), error="")
        except FixedPointDataError as exc:
            row.update(steps=0, verified=False, error=f"{type(exc).__name__}: {exc}")
        rows.append(row)
    return pd.DataFrame(rows)


def main() -> None:
    frame = sweep(MAX_PARAM)
    RESULTS_DIR.mkdir(parents=True, exist_ok=True)
    output_path = RESULTS_DIR / "generator_sweep.csv"
    frame.to_csv(output_path, index=False)

    verified = int(frame["verified"].sum())
    print(f"생성자 {len(frame)}개 중 {verified}개 환원·검증 완료 → {output_path}")
    failures = frame[~frame["verified"]]
    if not failures.empty:
        print("실패 목록:")
        for _, row in failures.iterrows():
            print(f"  - {row['label']}: {row['error']}")


if __name__ == "__main__":
    main()
