"""Regenerate tests/fixtures/fundamentals.json from the brute-force oracle.

Run from the repository root: python3 tests/oracles/make_fixture.py
"""

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from oracles.fundamentals import brute_fundamentals  # noqa: E402
from trikit import census  # noqa: E402

CAPS = {1: 8, 2: 4}


def main():
    out = {}
    for name in census.names():
        tri = census.load(name)
        if tri.size not in CAPS:
            continue
        cap = CAPS[tri.size]
        t0 = time.time()
        rows = [list(r) for r in tri.gluings]
        fund = brute_fundamentals(rows, cap)
        out[name] = {"cap": cap, "fundamentals": [list(v) for v in fund]}
        print(f"{name}: t={tri.size} cap={cap} {len(fund)} surfaces {time.time() - t0:.1f}s")
    path = Path(__file__).resolve().parents[1] / "fixtures" / "fundamentals.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
