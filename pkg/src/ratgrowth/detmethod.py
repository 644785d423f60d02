"""The p-adic interpolation determinant engine.

Evaluation matrices of monomials at bounded-height points, exact
determinants with valuation certificates, auxiliary polynomials that
vanish on residue classes, and the full covering pipeline that writes
the rational points of a curve (or affine hypersurface) into the joint
zero locus of few low-degree forms.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .algebra.domains import CoeffDomain
from .algebra.fqpoly import FqPoly
from .algebra.linalg import ExactMatrix, det_exact, kernel_basis
from .algebra.multipoly import MultiPoly, monomials_of_degree, monomials_up_to_degree
from .algebra.primes import PrimeIdealDesc, primes_in_range
from .baselines import EMU_A_BASELINE
from .enumeration import (
    EnumOptions,
    enum_affine_hypersurface,
    enum_curve_points_proj,
    field_for_poly,
)
from .globalfield import GlobalField, ProjPoint, ResiduePoint, reduce_point_mod_p
from .reduction import mult_at_point, reduce_curve_mod_p


class PipelineError(RuntimeError):
    pass


class RegimeViolation(PipelineError):
    """The requested interpolation degree is not below the curve degree."""


class NotApplicable(PipelineError):
    """Degenerate request (e.g. degree-1 input leaves no monomials)."""


class PointsNotCongruent(ValueError):
    """Certificate points must share a single residue point."""


@dataclass(frozen=True)
class MonomialBasis:
    """All monomials of one total degree in nvars variables, in the global
    grevlex order."""

    nvars: int
    degree: int
    monomials: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.monomials)


def monomial_basis(nvars: int, degree: int) -> MonomialBasis:
    if degree < 0:
        raise ValueError("degree must be >= 0")
    monos = monomials_of_degree(nvars, degree)
    assert len(monos) == math.comb(degree + nvars - 1, nvars - 1)
    return MonomialBasis(nvars, degree, monos)


def _norm_of(field: GlobalField, value) -> int:
    """The absolute norm of a nonzero O_K element (0 for 0)."""
    if field.is_rational:
        return abs(value)
    if not value:
        return 0
    return field.q**value.degree


def _valuation_of(field: GlobalField, value, prime: PrimeIdealDesc) -> int | float:
    if not value:
        return math.inf
    v = 0
    if field.is_rational:
        n = abs(value)
        p = prime.generator
        while n % p == 0:
            n //= p
            v += 1
        return v
    pi = prime.generator
    while True:
        quo, rem = divmod(value, pi)
        if rem:
            return v
        value, v = quo, v + 1


@dataclass(frozen=True)
class ValuationCertificate:
    """One interpolation determinant together with its divisibility audit."""

    prime: PrimeIdealDesc
    residue_point: ResiduePoint
    mu: int
    degree: int
    s: int
    points: tuple[ProjPoint, ...]
    det_norm: int
    valuation: int | float
    a: float
    bound_rhs: float
    verdict: str  # "VanishesIdentically" | "MeetsBound" | "ViolatesBound"
    norm_cap_ok: bool
    log_norm: float
    log_norm_cap: float

    def to_json_dict(self) -> dict:
        return {
            "prime": str(self.prime.generator),
            "prime_norm": self.prime.norm,
            "residue_point": str(self.residue_point),
            "mu": self.mu,
            "degree": self.degree,
            "s": self.s,
            "points": [p.coord_strings() for p in self.points],
            "det_norm": str(self.det_norm),
            "valuation": "inf" if self.valuation == math.inf else self.valuation,
            "a": self.a,
            "bound_rhs": self.bound_rhs,
            "verdict": self.verdict,
            "norm_cap_ok": self.norm_cap_ok,
        }


def interp_det_certificate(
    points,
    degree: int,
    prime: PrimeIdealDesc,
    mu: int,
    a: float = EMU_A_BASELINE,
    curve: MultiPoly | None = None,
) -> ValuationCertificate:
    """Build the square evaluation matrix of all degree-`degree` monomials
    at the given points (all congruent to one residue point mod the prime),
    take its exact determinant and certify the valuation against
    s^2/(2 mu) - a s.

    With `curve` supplied, mu is recomputed on the reduced curve and must
    match.  A ViolatesBound verdict is a red flag for the caller.
    """
    points = tuple(points)
    if not points:
        raise ValueError("certificate needs points")
    field = points[0].field
    basis = monomial_basis(len(points[0].coords), degree)
    if len(points) != basis.s:
        raise ValueError(
            f"need exactly s = {basis.s} points for degree {degree}, got {len(points)}"
        )
    residues = {reduce_point_mod_p(p, prime) for p in points}
    if len(residues) != 1:
        raise PointsNotCongruent(
            f"points fall into {len(residues)} residue classes mod {prime}"
        )
    residue_point = next(iter(residues))
    if curve is not None:
        reduced = reduce_curve_mod_p(curve, prime)
        mu_check = mult_at_point(reduced.f_p, residue_point.coords).mu
        if mu_check != mu:
            raise ValueError(f"stated mu={mu} but reduced curve gives {mu_check}")

    dom = field.integer_domain()
    rows = [
        [_eval_monomial_generic(dom, exps, p.coords) for exps in basis.monomials]
        for p in points
    ]
    delta = det_exact(ExactMatrix.from_rows(dom, rows))
    det_norm = _norm_of(field, delta)
    valuation = _valuation_of(field, delta, prime)
    s = basis.s
    bound_rhs = s * s / (2.0 * mu) - a * s
    if det_norm == 0:
        verdict = "VanishesIdentically"
    elif valuation >= bound_rhs:
        verdict = "MeetsBound"
    else:
        verdict = "ViolatesBound"
    height = max(p.height for p in points)
    log_norm = math.log(det_norm) if det_norm > 0 else float("-inf")
    log_cap = s * math.log(s) + s * degree * field.d_K * math.log(max(height, 2))
    assert log_norm <= log_cap + 1e-9, (
        f"determinant norm {det_norm} breaks the coarse cap (log {log_norm:.3f} "
        f"> {log_cap:.3f}); entries larger than height^degree slipped in"
    )
    if verdict == "ViolatesBound":
        warnings.warn(
            f"valuation {valuation} violates the divisibility bound "
            f"{bound_rhs:.2f} at prime {prime.generator} (a={a}); this "
            "contradicts the expected congruence forcing and must be examined",
            stacklevel=2,
        )
    return ValuationCertificate(
        prime=prime,
        residue_point=residue_point,
        mu=mu,
        degree=degree,
        s=s,
        points=points,
        det_norm=det_norm,
        valuation=valuation,
        a=a,
        bound_rhs=bound_rhs,
        verdict=verdict,
        norm_cap_ok=log_norm <= log_cap + 1e-9,
        log_norm=log_norm,
        log_norm_cap=log_cap,
    )


def _eval_monomial_generic(dom: CoeffDomain, exps, coords):
    acc = dom.one
    for x, e in zip(coords, exps):
        if e:
            acc = dom.mul(acc, dom.pow(dom.coerce(x), e))
    return acc


# ---------------------------------------------------------------------------
# auxiliary polynomials for residue classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AuxPoly:
    poly: MultiPoly | None
    status: str  # "ok" | "empty_class" | "full_rank"
    class_size: int


def _kernel_poly(field: GlobalField, monomials, points_coords, nvars: int) -> MultiPoly | None:
    """A nonzero polynomial on the monomial list vanishing at all the given
    coordinate tuples, with O_K coefficients, or None at full rank."""
    kdom = field.element_domain()
    rows = [
        [_eval_monomial_generic(kdom, exps, coords) for exps in monomials]
        for coords in points_coords
    ]
    basis = kernel_basis(ExactMatrix.from_rows(kdom, rows))
    if not basis:
        return None
    vec = basis[0]
    if field.is_rational:
        denom = 1
        for c in vec:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        ints = [int(c * denom) for c in vec]
        g = 0
        for c in ints:
            g = math.gcd(g, abs(c))
        ints = [c // g for c in ints]
        dom = CoeffDomain.integers()
        return MultiPoly(dom, nvars, dict(zip(monomials, ints)))
    from .algebra.fqpoly import fq_lcm

    denom = FqPoly.one(field.q)
    for c in vec:
        if c:
            denom = fq_lcm(denom, c.den)
    polys = []
    for c in vec:
        scaled = c * denom
        assert scaled.is_integral
        polys.append(scaled.num)
    dom = CoeffDomain.poly_ring(field.q)
    return MultiPoly(dom, nvars, dict(zip(monomials, polys)))


def aux_poly_for_residue_class(
    f: MultiPoly,
    H: int,
    prime: PrimeIdealDesc,
    residue_point: ResiduePoint,
    points=None,
    budget: int | None = None,
) -> AuxPoly:
    """A homogeneous degree-(d-1) form vanishing on every height-<=H point
    of the curve that reduces to the given residue point.

    An empty class returns the first basis monomial as a vacuous cover; a
    full-rank class (possible outside the guaranteed regime) returns None
    and is recorded, not fatal.
    """
    d = f.degree
    if d < 1:
        raise NotApplicable("degree must be at least 1")
    basis = monomial_basis(f.nvars, d - 1)
    if points is None:
        options = EnumOptions(collect=True, budget=budget or 50_000_000)
        points = enum_curve_points_proj(f, H, options).points
    klass = [p for p in points if reduce_point_mod_p(p, prime) == residue_point]
    if not klass:
        poly = MultiPoly.monomial(
            field_for_poly(f).integer_domain(), basis.monomials[0], 1
        )
        return AuxPoly(poly=poly, status="empty_class", class_size=0)
    field = klass[0].field
    poly = _kernel_poly(field, basis.monomials, [p.coords for p in klass], f.nvars)
    if poly is None:
        return AuxPoly(poly=None, status="full_rank", class_size=len(klass))
    for p in klass:
        if not poly.domain.is_zero(poly.evaluate(p.coords)):
            raise AssertionError("auxiliary polynomial fails to vanish on its class")
    return AuxPoly(poly=poly, status="ok", class_size=len(klass))


# ---------------------------------------------------------------------------
# regime bookkeeping
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegimeReport:
    variant: str
    ok: bool
    lhs: float
    d: int
    rhs: float


def regime_check(d: int, H: float, variant: str = "CurveQ", N: float = 2.0) -> RegimeReport:
    """The inequality window in which the covering pipeline is guaranteed:
    (log H)^2 < d < H^(3/2) for plane curves, (log H)^N < d < H for the
    affine hypersurface variant."""
    if d < 1 or H <= 2:
        raise ValueError("need d >= 1 and H > 2")
    log_h = math.log(H)
    if variant in ("CurveQ", "CurveK"):
        lhs, rhs = log_h**2, H**1.5
    elif variant == "AffinePila":
        lhs, rhs = log_h**N, float(H)
    else:
        raise ValueError(f"unknown regime variant {variant!r}")
    return RegimeReport(variant=variant, ok=lhs < d < rhs, lhs=lhs, d=d, rhs=rhs)


# ---------------------------------------------------------------------------
# the covering pipeline (plane curves)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverParams:
    M: float = 4.0
    N: float = 4.0
    a: float = EMU_A_BASELINE
    kappa: int = 12
    c: float = 1.0
    budget: int = 50_000_000


@dataclass(frozen=True)
class ClassRecord:
    prime: PrimeIdealDesc
    residue_point: ResiduePoint
    mu: int
    class_size: int
    aux_status: str
    aux_poly: str | None = None


@dataclass
class CoverResult:
    curve: MultiPoly
    H: int
    regime: RegimeReport
    aux_polys: list  # (poly, provenance) pairs
    classes: list[ClassRecord]
    high_mult: dict
    uncovered: list
    counts: dict

    def to_json_dict(self) -> dict:
        return {
            "curve": str(self.curve),
            "H": self.H,
            "regime": {
                "ok": self.regime.ok,
                "lhs": self.regime.lhs,
                "d": self.regime.d,
                "rhs": self.regime.rhs,
            },
            "classes": [
                {
                    "prime": str(c.prime.generator),
                    "prime_norm": c.prime.norm,
                    "point": str(c.residue_point),
                    "mu": c.mu,
                    "aux_poly": c.aux_poly,
                    "class_size": c.class_size,
                    "aux_status": c.aux_status,
                }
                for c in self.classes
            ],
            "aux_polys": [
                {"poly": str(poly), "provenance": prov} for poly, prov in self.aux_polys
            ],
            "high_mult": self.high_mult,
            "uncovered": [str(p) for p in self.uncovered],
            "counts": self.counts,
        }


def _good_primes(f: MultiPoly, field: GlobalField, H: int, M: float):
    log_h = math.log(H)
    hi = M * log_h**4
    if hi <= log_h + 1:
        hi = log_h + 2
    tag = "Q" if field.is_rational else field.q
    primes = primes_in_range(log_h, hi, tag)
    good = []
    for prime in primes:
        reduced = reduce_curve_mod_p(f, prime)
        if reduced.good:
            good.append((prime, reduced))
    return good


def cover_high_mult(
    f: MultiPoly,
    H: int,
    primes,
    N_const: float = 4.0,
    M_const: float = 4.0,
    points=None,
    mu_table=None,
    degree_override: int | None = None,
) -> tuple[MultiPoly | None, dict]:
    """Interpolate the points that stay high-multiplicity at every prime by
    a single form of degree floor(N log H).

    Returns (poly_or_None, audit); the audit compares the prime-product
    against the coarse determinant norm cap.  Refuses when the degree
    would reach the curve degree.
    """
    d = f.degree
    log_h = math.log(H)
    d_prime = degree_override if degree_override is not None else int(N_const * log_h)
    if d_prime >= d:
        raise RegimeViolation(
            f"interpolation degree {d_prime} reaches the curve degree {d}"
        )
    if d_prime < 1:
        d_prime = 1
    field = field_for_poly(f)
    if points is None:
        points = enum_curve_points_proj(f, H).points
    threshold = d / log_h
    if not primes:
        primes = [prime for prime, _ in _good_primes(f, field, H, M_const)]
    if mu_table is None:
        mu_table = _multiplicity_table(f, field, points, primes)
    xi_s = []
    for p in points:
        mus = mu_table.get(p)
        if mus and all(mu >= threshold for mu in mus.values()):
            xi_s.append(p)
    log_prime_product = sum(math.log(p.norm) for p in primes)
    audit = {
        "d_prime": d_prime,
        "num_primes": len(primes),
        "log_prime_product": log_prime_product,
        "log_norm_cap": 2.0 * field.d_K * d_prime**3 * log_h,
        "xi_s_size": len(xi_s),
    }
    if not xi_s:
        audit["status"] = "empty_class"
        return None, audit
    basis = monomial_basis(f.nvars, d_prime)
    poly = _kernel_poly(field, basis.monomials, [p.coords for p in xi_s], f.nvars)
    if poly is None:
        audit["status"] = "full_rank"
        return None, audit
    for p in xi_s:
        if not poly.domain.is_zero(poly.evaluate(p.coords)):
            raise AssertionError("high-multiplicity interpolant fails to vanish")
    audit["status"] = "ok"
    return poly, audit


def _chunked_interpolants(field: GlobalField, monomials, coords_list, nvars: int):
    """Cover a point list by interpolants on chunks of size s-1 (each chunk
    is rank-deficient by pigeonhole, so a nonzero form always exists)."""
    s = len(monomials)
    chunk_size = max(s - 1, 1)
    for i in range(0, len(coords_list), chunk_size):
        chunk = coords_list[i : i + chunk_size]
        poly = _kernel_poly(field, monomials, chunk, nvars)
        assert poly is not None, "rank-deficient chunk must have a kernel"
        yield poly


def _multiplicity_table(f, field, points, primes):
    """point -> {prime: multiplicity of its reduction on the reduced curve}."""
    table = {p: {} for p in points}
    for prime in primes:
        reduced = reduce_curve_mod_p(f, prime)
        if not reduced.good:
            continue
        mu_cache: dict[ResiduePoint, int] = {}
        for p in points:
            rp = reduce_point_mod_p(p, prime)
            if rp not in mu_cache:
                mu_cache[rp] = mult_at_point(reduced.f_p, rp.coords).mu
            table[p][prime] = mu_cache[rp]
    return table


def cover_pipeline(f: MultiPoly, H: int, params: CoverParams | None = None) -> CoverResult:
    """Cover every height-<=H rational point of the plane curve by
    low-degree auxiliary forms.

    Points of low multiplicity at some prime are grouped into residue
    classes (first qualifying prime in canonical order) and each class is
    interpolated at degree d-1; the points that stay high-multiplicity
    everywhere get one extra form of degree floor(N log H).  The result
    records class data, verifies the cover pointwise, and reports the
    count against c (log H)^kappa.
    """
    params = params or CoverParams()
    if f.is_zero or f.nvars != 3 or not f.is_homogeneous:
        raise ValueError("pipeline expects a nonzero homogeneous 3-variable polynomial")
    d = f.degree
    if d < 2:
        raise NotApplicable("degree must be >= 2 so that degree d-1 forms exist")
    field = field_for_poly(f)
    regime = regime_check(d, H, "CurveQ" if field.is_rational else "CurveK")

    options = EnumOptions(collect=True, budget=params.budget)
    points = enum_curve_points_proj(f, H, options).points

    good = _good_primes(f, field, H, params.M)
    primes = [prime for prime, _ in good]
    reduced_by_prime = dict(good)
    log_h = math.log(H)
    threshold = d / log_h

    mu_table = _multiplicity_table(f, field, points, primes)

    # partition: each point joins the first prime where its reduction has
    # low multiplicity; otherwise it is high-multiplicity everywhere
    classes: dict[tuple, list] = {}
    xi_s = []
    for p in points:
        assigned = False
        for prime in primes:
            mu = mu_table[p].get(prime)
            if mu is not None and mu < threshold:
                rp = reduce_point_mod_p(p, prime)
                classes.setdefault((prime, rp), []).append(p)
                assigned = True
                break
        if not assigned:
            xi_s.append(p)

    basis_low = monomial_basis(f.nvars, d - 1)
    aux_polys = []
    class_records = []
    for (prime, rp) in sorted(classes, key=lambda key: (key[0].sort_key(), key[1].sort_key())):
        klass = classes[(prime, rp)]
        mu = mu_table[klass[0]][prime]
        aux = aux_poly_for_residue_class(f, H, prime, rp, points=klass)
        status = aux.status
        poly_text = None
        if aux.poly is not None:
            aux_polys.append((aux.poly, f"low_mult:{prime.generator}:{rp}"))
            poly_text = str(aux.poly)
        elif aux.status == "full_rank":
            if regime.ok:
                raise PipelineError(
                    f"irrecoverable class at prime {prime.generator}, point {rp}: "
                    "no degree d-1 interpolant exists"
                )
            # out of regime there is no guarantee; fall back to covering the
            # class with several degree d-1 forms on rank-deficient chunks
            status = "chunked"
            chunk_texts = []
            for i, chunk_poly in enumerate(
                _chunked_interpolants(field, basis_low.monomials, [p.coords for p in klass], f.nvars)
            ):
                aux_polys.append(
                    (chunk_poly, f"low_mult_chunk:{prime.generator}:{rp}:{i}")
                )
                chunk_texts.append(str(chunk_poly))
            poly_text = "; ".join(chunk_texts)
        class_records.append(
            ClassRecord(
                prime=prime,
                residue_point=rp,
                mu=mu,
                class_size=len(klass),
                aux_status=status,
                aux_poly=poly_text,
            )
        )

    d_eff = min(int(params.N * log_h), d - 1)
    high_poly, audit = cover_high_mult(
        f,
        H,
        primes,
        params.N,
        params.M,
        points=points,
        mu_table=mu_table,
        degree_override=max(d_eff, 1),
    )
    if high_poly is not None:
        aux_polys.append((high_poly, "high_mult_global"))
    elif xi_s and audit.get("status") == "full_rank":
        if regime.ok:
            raise PipelineError(
                "high-multiplicity set admits no interpolant at degree d'"
            )
        audit["status"] = "chunked"
        for i, chunk_poly in enumerate(
            _chunked_interpolants(field, basis_low.monomials, [p.coords for p in xi_s], f.nvars)
        ):
            aux_polys.append((chunk_poly, f"high_mult_chunk:{i}"))

    # pointwise cover verification, exact
    uncovered = []
    for p in points:
        covered = False
        for poly, _ in aux_polys:
            if poly.domain.is_zero(poly.evaluate(p.coords)):
                covered = True
                break
        if not covered:
            uncovered.append(p)

    bound_value = params.c * (log_h**params.kappa)
    counts = {
        "points": len(points),
        "aux": len(aux_polys),
        "bound_rhs": bound_value,
        "xi_s": len(xi_s),
        "num_primes": len(primes),
        "max_aux_degree": max((poly.degree for poly, _ in aux_polys), default=0),
    }
    return CoverResult(
        curve=f,
        H=H,
        regime=regime,
        aux_polys=aux_polys,
        classes=class_records,
        high_mult={
            "poly": str(high_poly) if high_poly is not None else None,
            "degree": high_poly.degree if high_poly is not None else None,
            **audit,
        },
        uncovered=uncovered,
        counts=counts,
    )


# ---------------------------------------------------------------------------
# the affine hypersurface variant
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineCoverParams:
    alpha: float = 1.0
    C: float = 2.0
    ell: float = 4.0
    M: float = 4.0
    a: float = EMU_A_BASELINE
    kappa: int = 12
    c: float = 1.0
    budget: int = 50_000_000
    primes: tuple[PrimeIdealDesc, ...] | None = None


def cover_pipeline_affine(
    f: MultiPoly, B: int, params: AffineCoverParams | None = None
) -> CoverResult:
    """Covering pipeline for an affine hypersurface over O_K.

    Multiplicities are taken at the reduced affine points; low
    multiplicity means below d/(log B)^alpha.  Interpolation uses all
    monomials of degree < d (equivalently, homogeneous degree d-1 forms
    after prepending a homogenizing coordinate), and the residual
    everywhere-high-multiplicity set gets a single form of degree
    floor((log B)^C).  The valuation monitor exponent for the
    homogenized certificates is recorded per class, never asserted.
    """
    params = params or AffineCoverParams()
    if f.is_zero or f.nvars < 2:
        raise ValueError("pipeline expects a nonzero polynomial in >= 2 variables")
    d = f.degree
    if d < 2:
        raise NotApplicable(
            "degree must be >= 2: degree d-1 = 0 leaves only constant forms"
        )
    field = field_for_poly(f)
    n = f.nvars
    regime = regime_check(d, B, "AffinePila")
    log_b = math.log(B) if B > 1 else 1.0

    options = EnumOptions(collect=True, budget=params.budget)
    points = enum_affine_hypersurface(f, B, options).points

    if params.primes is not None:
        primes = list(params.primes)
        reduced_by_prime = {}
        for prime in primes:
            reduced = reduce_curve_mod_p(f, prime)
            if not reduced.good:
                raise PipelineError(f"supplied prime {prime.generator} has bad reduction")
            reduced_by_prime[prime] = reduced
    else:
        hi = params.M * log_b**params.ell
        if hi <= log_b + 1:
            hi = log_b + 2
        tag = "Q" if field.is_rational else field.q
        candidates = primes_in_range(log_b, hi, tag)
        primes = []
        reduced_by_prime = {}
        for prime in candidates:
            reduced = reduce_curve_mod_p(f, prime)
            if reduced.good:
                primes.append(prime)
                reduced_by_prime[prime] = reduced
    if not primes:
        raise PipelineError("no usable primes in the requested window")

    threshold = d / (log_b**params.alpha)

    # multiplicities of reduced affine points
    mu_table: dict[tuple, dict] = {p: {} for p in points}
    residue_of_point: dict[tuple, dict] = {p: {} for p in points}
    for prime in primes:
        reduced = reduced_by_prime[prime]
        dom_res = reduced.f_p.domain
        mu_cache: dict[tuple, int] = {}
        for p in points:
            rp = tuple(field.residue_of(c, prime) for c in p)
            residue_of_point[p][prime] = rp
            if rp not in mu_cache:
                mu_cache[rp] = mult_at_point(reduced.f_p, rp, projective=False).mu
            mu_table[p][prime] = mu_cache[rp]

    classes: dict[tuple, list] = {}
    xi_s = []
    for p in points:
        assigned = False
        for prime in primes:
            if mu_table[p][prime] < threshold:
                rp = residue_of_point[p][prime]
                classes.setdefault((prime, rp), []).append(p)
                assigned = True
                break
        if not assigned:
            xi_s.append(p)

    monos = monomials_up_to_degree(n, d - 1)
    s = len(monos)
    aux_polys = []
    class_records = []
    bis_exponent = (
        lambda mu: (math.factorial(n - 1) / mu) ** (1.0 / (n - 1))
        * (n - 1)
        / n
        * s ** (1.0 + 1.0 / (n - 1))
        - params.a * s
    )
    monitors = []
    for (prime, rp) in sorted(
        classes, key=lambda key: (key[0].sort_key(), tuple(map(str, key[1])))
    ):
        klass = classes[(prime, rp)]
        mu = mu_table[klass[0]][prime]
        poly = _kernel_poly(field, monos, klass, n)
        if poly is None:
            raise PipelineError(
                f"irrecoverable affine class at prime {prime.generator}: full rank"
            )
        for p in klass:
            if not poly.domain.is_zero(poly.evaluate(p)):
                raise AssertionError("affine auxiliary polynomial fails to vanish")
        aux_polys.append((poly, f"low_mult:{prime.generator}:{rp}"))
        class_records.append(
            ClassRecord(
                prime=prime,
                residue_point=rp,  # affine residue tuple, not projective
                mu=mu,
                class_size=len(klass),
                aux_status="ok",
                aux_poly=str(poly),
            )
        )
        monitors.append(
            {
                "prime": str(prime.generator),
                "mu": mu,
                "class_size": len(klass),
                "valuation_monitor_rhs": bis_exponent(mu),
            }
        )

    d_prime = int(log_b**params.C)
    high_poly = None
    audit = {"d_prime": d_prime, "xi_s_size": len(xi_s)}
    if xi_s:
        if d_prime >= d:
            raise RegimeViolation(
                f"degree floor((log B)^C) = {d_prime} reaches the degree {d}"
            )
        monos_high = monomials_up_to_degree(n, max(d_prime, 1))
        high_poly = _kernel_poly(field, monos_high, xi_s, n)
        if high_poly is None:
            raise PipelineError("residual high-multiplicity set admits no interpolant")
        for p in xi_s:
            if not high_poly.domain.is_zero(high_poly.evaluate(p)):
                raise AssertionError("affine high-multiplicity interpolant fails")
        aux_polys.append((high_poly, "high_mult_global"))
        audit["status"] = "ok"
    else:
        audit["status"] = "empty_class"

    uncovered = []
    for p in points:
        if not any(
            poly.domain.is_zero(poly.evaluate(p)) for poly, _ in aux_polys
        ):
            uncovered.append(p)

    counts = {
        "points": len(points),
        "aux": len(aux_polys),
        "bound_rhs": params.c * log_b**params.kappa,
        "xi_s": len(xi_s),
        "num_primes": len(primes),
        "max_aux_degree": max((poly.degree for poly, _ in aux_polys), default=0),
        "monitors": monitors,
    }
    return CoverResult(
        curve=f,
        H=B,
        regime=regime,
        aux_polys=aux_polys,
        classes=class_records,
        high_mult={
            "poly": str(high_poly) if high_poly is not None else None,
            "degree": high_poly.degree if high_poly is not None else None,
            **audit,
        },
        uncovered=uncovered,
        counts=counts,
    )
