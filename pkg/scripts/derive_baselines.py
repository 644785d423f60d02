#!/usr/bin/env python3
"""Derive the frozen regression baselines on the seeded corpora.

Run from the repository root:

    python scripts/derive_baselines.py

Prints the measured values recorded in src/ratgrowth/baselines.py.  The
corpora live in ratgrowth.corpus and are replayed verbatim by the
acceptance suite, so these numbers are reproducible bit for bit.
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ratgrowth.corpus import (
    COVER_FIXTURES,
    capture_plane_corpus,
    capture_space_corpus,
    certificate_corpus,
    cover_fixture_poly,
)
from ratgrowth.detmethod import cover_pipeline, interp_det_certificate
from ratgrowth.globalfield import reduce_point_mod_p
from ratgrowth.reduction import high_mult_locus, mult_at_point, reduce_curve_mod_p


def derive_emu_a():
    worst = 0.0
    n = 0
    for curve, prime, pts, d in certificate_corpus():
        reduced = reduce_curve_mod_p(curve, prime)
        rp = reduce_point_mod_p(pts[0], prime)
        mu = mult_at_point(reduced.f_p, rp.coords).mu
        cert = interp_det_certificate(pts, d - 1, prime, mu, a=100.0)
        n += 1
        if cert.det_norm == 0:
            continue
        needed = cert.s / (2.0 * mu) - cert.valuation / cert.s
        worst = max(worst, needed)
    print(f"certificates: {n}, max needed a = {worst:.4f}")
    print(f"EMU_A_BASELINE = {math.ceil(worst * 10) / 10 + 0.1:.1f}")


def derive_capture_n():
    worst = 0.0
    used = 0
    for cyc, k in capture_plane_corpus():
        f = cyc.expanded()
        cap = max(int(4 * k) + 4, 8)
        locus = high_mult_locus(f, k, cap)
        if locus.kind != "ok":
            continue
        worst = max(worst, locus.degree / k)
        used += 1
    print(f"plane fixtures with nonempty locus: {used}")
    print(f"CAPTURE_N_BASELINE = {math.ceil(worst * 10) / 10:.1f}")


def derive_capture_c3():
    worst = 0.0
    used = 0
    for cyc, k in capture_space_corpus():
        f = cyc.expanded()
        cap = max(int(3 * k * k) + 3, 8)
        locus = high_mult_locus(f, k, cap)
        if locus.kind != "ok":
            continue
        worst = max(worst, locus.degree / (k * k))
        used += 1
    print(f"space fixtures with nonempty locus: {used}")
    print(f"CAPTURE_C3_BASELINE = {math.ceil(worst * 100) / 100:.2f}")


def derive_cover_counts():
    print("COVER_COUNT_BASELINES = {")
    for name in COVER_FIXTURES:
        f, height = cover_fixture_poly(name)
        res = cover_pipeline(f, height)
        assert res.uncovered == [], name
        print(f'    "{name}": {res.counts["aux"]},')
    print("}")


if __name__ == "__main__":
    derive_emu_a()
    derive_capture_n()
    derive_capture_c3()
    derive_cover_counts()
