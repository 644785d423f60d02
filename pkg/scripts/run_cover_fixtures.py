#!/usr/bin/env python3
"""Run the covering pipeline on the shipped fixtures and print a summary.

    python scripts/run_cover_fixtures.py [--json out.json]
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ratgrowth.corpus import COVER_FIXTURES, cover_fixture_poly
from ratgrowth.detmethod import cover_pipeline


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--json", default=None, help="write full results here")
    args = parser.parse_args()

    payload = {}
    for name in COVER_FIXTURES:
        f, height = cover_fixture_poly(name)
        t0 = time.perf_counter()
        res = cover_pipeline(f, height)
        elapsed = time.perf_counter() - t0
        print(
            f"{name:24s} d={f.degree:3d} H={height:3d} points={res.counts['points']:3d} "
            f"aux={res.counts['aux']:2d} uncovered={len(res.uncovered)} "
            f"regime_ok={res.regime.ok} ({elapsed:.2f}s)"
        )
        payload[name] = res.to_json_dict()
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2))
        print(f"wrote {args.json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
