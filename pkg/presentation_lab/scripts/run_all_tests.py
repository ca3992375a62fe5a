"""Прогон всех модульных тестов.

Run:
  python scripts/run_all_tests.py
"""

import importlib
import logging
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

logging.basicConfig(level=logging.WARNING, format="%(asctime)s %(message)s", datefmt="%H:%M:%S")

from tabulate import tabulate

TEST_MODULES = [
    "entities.test_tower",
    "entities.test_word",
    "utils.test_text_formats",
    "analyzers.test_bs_arith",
    "analyzers.test_hnn_britton",
    "models.test_relator_factory",
    "analyzers.test_small_cancel",
    "models.test_tietze_engine",
    "analyzers.test_area_oracle",
    "diagrams.test_diagrams",
    "test_main",
]


def main() -> int:
    rows = []
    ok_all = True
    for name in TEST_MODULES:
        print(f"\n── {name}")
        started = time.perf_counter()
        try:
            ok = importlib.import_module(name).run_tests()
        except Exception as e:
            logging.exception(f"{name} crashed: {e}")
            ok = False
        ok_all &= ok
        rows.append((name, "✅" if ok else "❌", f"{time.perf_counter() - started:.1f}s"))

    print()
    print(tabulate(rows, headers=["module", "result", "time"], tablefmt="simple"))
    return 0 if ok_all else 1


if __name__ == "__main__":
    raise SystemExit(main())
