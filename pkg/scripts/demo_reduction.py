"""Reduce the CP^3 example and a Z_2 sum to the empty set and store their certificates."""
from __future__ import annotations

import sys
from pathlib import Path

from dotenv import load_dotenv

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

load_dotenv(ROOT / ".env")

from src.formats import dump_certificate
from src.generators import gen_cp3, gen_z2sum
from src.reduction import reduce_to_empty, summarize_certificate, verify_certificate

RESULTS_DIR = ROOT / "data" / "results"

EXAMPLES = {
    "cp3_1_2_3": gen_cp3(1, 2, 3),
    "z2sum_5_2": gen_z2sum(5, 2),
}


def main() -> None:
    RESULTS_DIR.mkdir(parents=True, exist_ok=True)
    for name, data in EXAMPLES.items():
        cert = reduce_to_empty(data)
        output_path = RESULTS_DIR / f"{name}.json"
        output_path.write_text(dump_certificate(cert), encoding="utf-8")

        print(f"{name}: {len(data)}개 고정점 → {len(cert)}단계 → {output_path}")
        for index, step in enumerate(cert.steps, start=1):
            print(f"  {index}. {step}")
        print(f"  생성자: {summarize_certificate(cert)}")
        print(f"  재검증: {'통과' if verify_certificate(cert) else '실패'}")


if __name__ == "__main__":
    main()
