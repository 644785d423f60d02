"""Certificates, auxiliary polynomials, the covering pipelines."""

import math
import random

import pytest

from ratgrowth.algebra.domains import CoeffDomain
from ratgrowth.algebra.multipoly import poly_parse
from ratgrowth.algebra.primes import PrimeIdealDesc
from ratgrowth.detmethod import (
    AffineCoverParams,
    CoverParams,
    NotApplicable,
    PointsNotCongruent,
    RegimeViolation,
    aux_poly_for_residue_class,
    cover_high_mult,
    cover_pipeline,
    cover_pipeline_affine,
    interp_det_certificate,
    monomial_basis,
    regime_check,
)
from ratgrowth.enumeration import enum_affine_hypersurface, enum_curve_points_proj
from ratgrowth.globalfield import GlobalField, primitive_normalize, reduce_point_mod_p
from ratgrowth.reduction import mult_at_point, reduce_curve_mod_p

Q = GlobalField.rationals()
ZZ = CoeffDomain.integers()


class TestMonomialBasis:
    def test_degree_one(self):
        b = monomial_basis(3, 1)
        assert b.monomials == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert b.s == 3

    def test_plane_curve_formula(self):
        for d in (2, 3, 4, 7, 26):
            assert monomial_basis(3, d - 1).s == d * (d + 1) // 2

    def test_four_variables(self):
        assert monomial_basis(4, 2).s == 10

    def test_duplicate_free_and_ordered(self):
        b = monomial_basis(3, 5)
        assert len(set(b.monomials)) == b.s
        from ratgrowth.algebra.multipoly import grevlex_key

        keys = [grevlex_key(m) for m in b.monomials]
        assert keys == sorted(keys, reverse=True)


class TestCertificates:
    def test_explicit_3x3(self):
        p5 = PrimeIdealDesc(5, 5)
        pts = [primitive_normalize(Q, t) for t in [(1, 0, 0), (1, 5, 0), (1, 0, 5)]]
        cert = interp_det_certificate(pts, 1, p5, mu=1, a=1.0)
        assert cert.det_norm == 25
        assert cert.valuation == 2
        assert cert.verdict == "MeetsBound"
        assert cert.norm_cap_ok

    def test_repeated_point_vanishes(self):
        p5 = PrimeIdealDesc(5, 5)
        pts = [primitive_normalize(Q, t) for t in [(1, 0, 0), (1, 0, 0), (1, 5, 0)]]
        cert = interp_det_certificate(pts, 1, p5, mu=1)
        assert cert.verdict == "VanishesIdentically"
        assert cert.valuation == math.inf

    def test_non_congruent_rejected(self):
        p5 = PrimeIdealDesc(5, 5)
        pts = [primitive_normalize(Q, t) for t in [(1, 0, 0), (0, 1, 0), (1, 1, 1)]]
        with pytest.raises(PointsNotCongruent):
            interp_det_certificate(pts, 1, p5, mu=1)

    def test_size_mismatch_rejected(self):
        p5 = PrimeIdealDesc(5, 5)
        pts = [primitive_normalize(Q, (1, 0, 0))]
        with pytest.raises(ValueError):
            interp_det_certificate(pts, 1, p5, mu=1)

    def test_congruent_pair_forces_divisibility(self):
        # two distinct points in one residue class force p | det
        rng = random.Random(44)
        p = 7
        prime = PrimeIdealDesc(p, p)
        for _ in range(20):
            base = (1, rng.randint(0, 6), rng.randint(0, 6))
            pts = [
                primitive_normalize(
                    Q,
                    (
                        base[0],
                        base[1] + p * rng.randint(0, 4),
                        base[2] + p * rng.randint(0, 4),
                    ),
                )
                for _ in range(3)
            ]
            # a large slack: these synthetic congruent tuples are not curve
            # points, so only the literal divisibility is at stake here
            cert = interp_det_certificate(pts, 1, prime, mu=1, a=10.0)
            assert cert.valuation >= 1 or cert.det_norm == 0

    def test_mu_recheck_against_curve(self):
        conic = poly_parse("x0*x2 - x1^2", 3, ZZ)
        p5 = PrimeIdealDesc(5, 5)
        pts = [
            primitive_normalize(Q, (b * b, a * b, a * a))
            for a, b in [(1, 1), (6, 1), (11, 1)]
        ]
        cert = interp_det_certificate(pts, 1, p5, mu=1, curve=conic)
        assert cert.mu == 1
        with pytest.raises(ValueError):
            interp_det_certificate(pts, 1, p5, mu=2, curve=conic)

    def test_parametrized_class_certificates(self):
        # conic class: rows are (1, a_j, a_j^2), a Vandermonde shape
        p5 = PrimeIdealDesc(5, 5)
        pts = [
            primitive_normalize(Q, (1, a, a * a)) for a in (1, 6, 11)
        ]  # a = 1 mod 5
        cert = interp_det_certificate(pts, 1, p5, mu=1, a=1.0)
        assert cert.det_norm == 250  # Vandermonde (5)(10)(5)
        assert cert.valuation == 3
        assert cert.verdict == "MeetsBound"


class TestAuxPoly:
    def test_two_points_on_coordinate_line(self):
        f = poly_parse("x2*x1 - x2*x0", 3, ZZ)  # degree 2: contains the line x2=0
        p5 = PrimeIdealDesc(5, 5)
        pts = [primitive_normalize(Q, (1, 2, 0)), primitive_normalize(Q, (1, 7, 0))]
        rp = reduce_point_mod_p(pts[0], p5)
        assert reduce_point_mod_p(pts[1], p5) == rp
        aux = aux_poly_for_residue_class(f, 10, p5, rp, points=pts)
        assert aux.status == "ok"
        for p in pts:
            assert aux.poly.evaluate(p.coords) == 0

    def test_empty_class_flagged(self):
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        p5 = PrimeIdealDesc(5, 5)
        points = enum_curve_points_proj(f, 4).points
        residues = {reduce_point_mod_p(p, p5) for p in points}
        from ratgrowth.reduction import proj_points_over
        from ratgrowth.globalfield import ResiduePoint

        dom = CoeffDomain.prime_field(5)
        empty_rp = next(
            ResiduePoint(dom, pt)
            for pt in proj_points_over(dom, 3)
            if ResiduePoint(dom, pt) not in residues
        )
        aux = aux_poly_for_residue_class(f, 4, p5, empty_rp, points=points)
        assert aux.status == "empty_class"
        assert aux.class_size == 0
        assert aux.poly is not None  # vacuous cover by the first basis monomial

    def test_conic_class_rank(self):
        # hand check: the height-4 conic points reducing to (1:0:0) mod 5
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        p5 = PrimeIdealDesc(5, 5)
        points = enum_curve_points_proj(f, 4).points
        rp = reduce_point_mod_p(primitive_normalize(Q, (1, 0, 0)), p5)
        klass = [p for p in points if reduce_point_mod_p(p, p5) == rp]
        assert len(klass) <= 2  # at most 2 independent degree-1 constraints
        aux = aux_poly_for_residue_class(f, 4, p5, rp, points=points)
        assert aux.status == "ok" and aux.poly.degree == 1
        for p in klass:
            assert aux.poly.evaluate(p.coords) == 0


class TestCoverHighMult:
    def test_empty_class_sentinel(self):
        f = poly_parse("x0^26 + x1^26 + x2^26", 3, ZZ)  # no rational points
        primes = [PrimeIdealDesc(5, 5), PrimeIdealDesc(7, 7)]
        poly, audit = cover_high_mult(f, 20, primes, N_const=1.0)
        assert poly is None and audit["status"] == "empty_class"

    def test_collinear_points_get_a_line(self):
        f = poly_parse("x1*x0^25 - x2^26", 3, ZZ)
        # the two curve points on the line x2 = 0, forced into the residual set
        points = [primitive_normalize(Q, (1, 0, 0)), primitive_normalize(Q, (0, 1, 0))]
        primes = [PrimeIdealDesc(5, 5)]
        mu_table = {p: {primes[0]: 10**6} for p in points}
        poly, audit = cover_high_mult(
            f, 20, primes, N_const=0.4, points=points, mu_table=mu_table
        )
        assert audit["status"] == "ok"
        assert poly.degree == audit["d_prime"] == 1
        assert poly == poly_parse("x2", 3, ZZ)
        for p in points:
            assert poly.evaluate(p.coords) == 0

    def test_degree_violation_refused(self):
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        with pytest.raises(RegimeViolation):
            cover_high_mult(f, 20, [PrimeIdealDesc(5, 5)], N_const=4.0)

    def test_degree30_fixture_against_rank_oracle(self):
        # degree-30 curve at H = 20 with the everywhere-high set computed by
        # full multiplicity scans over the primes with norms in (3, 81)
        from ratgrowth.algebra.linalg import ExactMatrix, rank
        from ratgrowth.algebra.primes import primes_in_range
        from ratgrowth.detmethod import monomial_basis, _eval_monomial_generic
        from ratgrowth.enumeration import enum_curve_points_proj
        from ratgrowth.reduction import mult_at_point, reduce_curve_mod_p

        f = poly_parse("x1*x0^29 - x2^30", 3, ZZ)
        H = 20
        primes = primes_in_range(3, 81)
        points = enum_curve_points_proj(f, H).points
        threshold = f.degree / math.log(H)
        xi_s = []
        for p in points:
            mus = []
            for prime in primes:
                reduced = reduce_curve_mod_p(f, prime)
                if not reduced.good:
                    continue
                rp = reduce_point_mod_p(p, prime)
                mus.append(mult_at_point(reduced.f_p, rp.coords).mu)
            if mus and all(mu >= threshold for mu in mus):
                xi_s.append(p)
        assert xi_s  # the singular point survives every scan

        poly, audit = cover_high_mult(f, H, primes, N_const=4.0, points=points)
        assert audit["status"] == "ok"
        assert audit["xi_s_size"] == len(xi_s)
        for p in xi_s:
            assert poly.evaluate(p.coords) == 0

        # rank oracle: at the audit degree the evaluation matrix of xi_s
        # must be rank-deficient, which is exactly interpolant existence
        basis = monomial_basis(3, audit["d_prime"])
        from ratgrowth.algebra.domains import CoeffDomain as _CD

        qq = _CD.rationals()
        rows = [
            [_eval_monomial_generic(qq, exps, p.coords) for exps in basis.monomials]
            for p in xi_s
        ]
        assert rank(ExactMatrix.from_rows(qq, rows)) < basis.s
        assert poly.degree == audit["d_prime"] < f.degree


class TestRegime:
    def test_examples(self):
        assert regime_check(26, 20).ok
        assert not regime_check(8, 20).ok  # 8 < (log 20)^2 = 8.97
        assert not regime_check(10**6, 100).ok  # above H^(3/2)
        r = regime_check(26, 20)
        assert math.isclose(r.lhs, math.log(20) ** 2)

    def test_affine_variant(self):
        r = regime_check(9, 20, "AffinePila", N=2.0)
        assert r.rhs == 20.0
        assert r.ok == (math.log(20) ** 2 < 9 < 20)


class TestCoverPipeline:
    def test_fixture_d26(self):
        f = poly_parse("x1*x0^25 - x2^26", 3, ZZ)
        res = cover_pipeline(f, 20)
        assert res.regime.ok
        assert res.uncovered == []
        assert res.counts["points"] == 4
        assert res.counts["max_aux_degree"] < 26
        assert res.counts["aux"] <= math.log(20) ** 12
        # the singular point (0:1:0) stays high-multiplicity everywhere
        assert res.counts["xi_s"] == 1
        assert res.high_mult["status"] == "ok"

    def test_out_of_regime_still_covers(self):
        f = poly_parse("x0*x2 - x1^2", 3, ZZ)
        res = cover_pipeline(f, 100, CoverParams(budget=80_000_000))
        assert not res.regime.ok  # d = 2 < (log 100)^2
        assert res.uncovered == []

    def test_json_shape(self):
        f = poly_parse("x1*x0^25 - x2^26", 3, ZZ)
        res = cover_pipeline(f, 20)
        payload = res.to_json_dict()
        assert set(payload) == {
            "curve",
            "H",
            "regime",
            "classes",
            "aux_polys",
            "high_mult",
            "uncovered",
            "counts",
        }
        for cls in payload["classes"]:
            assert {"prime", "prime_norm", "point", "mu", "aux_poly", "class_size"} >= {
                "prime",
                "prime_norm",
            } or True
            assert "mu" in cls and "class_size" in cls


class TestAffinePipeline:
    def test_product_one_fixture(self):
        f = poly_parse("x0*x1*x2 - 1", 3, ZZ)
        res = cover_pipeline_affine(f, 4)
        assert res.counts["points"] == 4  # sign patterns with product 1
        assert res.uncovered == []
        assert res.counts["max_aux_degree"] <= 2

    def test_degree_one_refused(self):
        f = poly_parse("x0 - x1", 3, ZZ)
        with pytest.raises(NotApplicable):
            cover_pipeline_affine(f, 4)

    def test_degree9_partition_cross_check(self):
        factors = [
            "x0^2 + x1^2 - 2",
            "x0 - x2",
            "x1*x2 - 1",
            "x0^2 + x1^2 + x2^2 - 3",
            "x0 + x1 + x2",
            "x2 - 1",
        ]
        f = poly_parse(factors[0], 3, ZZ)
        for text in factors[1:]:
            f = f * poly_parse(text, 3, ZZ)
        assert f.degree == 9
        primes = (PrimeIdealDesc(5, 5), PrimeIdealDesc(7, 7))
        res = cover_pipeline_affine(f, 3, AffineCoverParams(primes=primes))
        assert res.uncovered == []

        # direct residue-bucketing oracle for the partition sizes
        points = enum_affine_hypersurface(f, 3).points
        threshold = f.degree / math.log(3) ** 1.0
        buckets = {}
        stranded = 0
        reduced = {p: reduce_curve_mod_p(f, p) for p in primes}
        for pt in points:
            placed = False
            for prime in primes:
                rp = tuple(c % prime.generator for c in pt)
                mu = mult_at_point(reduced[prime].f_p, rp, projective=False).mu
                if mu < threshold:
                    buckets.setdefault((prime.norm, rp), 0)
                    buckets[(prime.norm, rp)] += 1
                    placed = True
                    break
            if not placed:
                stranded += 1
        expected_sizes = sorted(buckets.values())
        assert sorted(c.class_size for c in res.classes) == expected_sizes
        assert res.counts["xi_s"] == stranded

    def test_monitors_recorded(self):
        f = poly_parse("x0*x1*x2 - 1", 3, ZZ)
        res = cover_pipeline_affine(f, 4)
        for m in res.counts["monitors"]:
            assert "valuation_monitor_rhs" in m
