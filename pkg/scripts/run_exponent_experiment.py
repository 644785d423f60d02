#!/usr/bin/env python3
"""Reproduce the height-exponent experiment for the cuspidal monomial
family over Q and F_2(t), printing fitted log-log slopes against the
expected 2/d.

    python scripts/run_exponent_experiment.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ratgrowth.globalfield import GlobalField
from ratgrowth.harness import CUSPIDAL_FAMILY, exponent_fit, family_count


def main() -> int:
    Q = GlobalField.rationals()
    F2 = GlobalField.function_field(2)

    print("field      d   counts                          slope    target")
    heights = [10**k for k in range(2, 6)]
    for d in (3, 4, 5):
        counts = [family_count(CUSPIDAL_FAMILY, d, h, Q) for h in heights]
        fit = exponent_fit(CUSPIDAL_FAMILY, d, heights, Q)
        print(f"Q          {d}   {str(counts):30s}  {fit.slope:.4f}   {2 / d:.4f}")
    for d in (3, 4):
        hs = [2 ** (d * j) for j in range(1, 5)]
        counts = [family_count(CUSPIDAL_FAMILY, d, h, F2) for h in hs]
        fit = exponent_fit(CUSPIDAL_FAMILY, d, hs, F2)
        print(f"F_2(t)     {d}   {str(counts):30s}  {fit.slope:.4f}   {2 / d:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
