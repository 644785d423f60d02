"""Frozen regression baselines for the unquantified absolute constants.

The underlying inequalities hold with *some* absolute constants; the
package measures them on fixed seeded corpora once and locks the results
here.  scripts/derive_baselines.py reproduces every number bit for bit;
the acceptance suite asserts against these values, so a regression that
worsens any of them fails loudly.
"""

# valuation monitor: verdicts compare the determinant valuation against
# s^2/(2 mu) - A*s.  The certificate corpus needed at most A = 0.5; frozen
# with a 0.1 margin.
EMU_A_BASELINE = 0.6

# capture degree of the high-multiplicity locus, plane-curve case:
# achieved_degree <= CAPTURE_N_BASELINE * k across the 50-fixture corpus.
CAPTURE_N_BASELINE = 1.0

# capture degree, surfaces in P^3: achieved_degree <= CAPTURE_C3_BASELINE * k^2
# across the 10-fixture corpus.
CAPTURE_C3_BASELINE = 0.45

# covering pipeline: auxiliary polynomial counts per acceptance fixture.
COVER_COUNT_BASELINES = {
    "curve_d26_H20_Q": 4,
    "curve_d30_H20_Q": 4,
    "fermat_d26_H20_Q": 4,
    "curve_d26_H16_F2t": 3,
}

# least-squares constant fits: count <= BOUND_C_FIT * bound on every
# in-regime experiment row (kappa = 12 bounds dwarf desk-scale counts).
BOUND_C_FIT = 1.0
