#!/usr/bin/env python3
"""
Regenerate every table and figure into one output directory.

Useful for a full overnight run; each target is independent, so a failure
is reported and the remaining targets still run.

    python scripts/reproduce_all.py out/ [--threads 4]
"""
import sys
import time
from pathlib import Path

root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

from app.constants import REPRODUCTION_TARGETS
from app.main import main


def reproduce_all(out_dir: str, extra: list) -> int:
    """Runs every reproduction target, returns the number of failures"""
    failures = 0
    for target in REPRODUCTION_TARGETS:
        print(f"\n📐 Reproducing {target}...")
        started = time.perf_counter()
        code = main(["reproduce", target, "--out", out_dir, *extra])
        elapsed = time.perf_counter() - started
        if code == 0:
            print(f"✅ {target} done in {elapsed:.1f}s")
        else:
            failures += 1
            print(f"❌ {target} failed after {elapsed:.1f}s")
    return failures


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print("Usage: python scripts/reproduce_all.py OUT_DIR [extra flags]")
        sys.exit(2)
    failed = reproduce_all(sys.argv[1], sys.argv[2:])
    print(f"\n{'✅' if failed == 0 else '⚠️'} {len(REPRODUCTION_TARGETS) - failed}/{len(REPRODUCTION_TARGETS)} targets reproduced")
    sys.exit(1 if failed else 0)
