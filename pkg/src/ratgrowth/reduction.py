"""Mod-p geometry and local invariants.

Multiplicity of a point on a hypersurface is the least order with a
nonvanishing Hasse-Taylor coefficient, which works uniformly in every
characteristic.  Local intersection numbers of plane curves are computed
by the classical recursive reduction against the defining axioms, with a
bivariate gcd for detecting shared components.  On top of those sit the
derivative-cycle construction, the intersection bookkeeping for the
cycle audit, and the capture of high-multiplicity loci by low-degree
interpolants.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .algebra.domains import CoeffDomain
from .algebra.linalg import ExactMatrix, kernel_basis
from .algebra.multipoly import MultiPoly, monomials_of_degree
from .algebra.primes import PrimeIdealDesc
from .globalfield import GlobalField


class DerivativeIdenticallyZero(ArithmeticError):
    """Every sampled direction gave a vanishing derivative combination
    (the polynomial is a p-th power or a sum of such)."""


@dataclass(frozen=True)
class ReducedHypersurface:
    """Coefficient-wise reduction of a primitive polynomial modulo a prime."""

    f_p: MultiPoly
    original_degree: int
    reduced_degree: int
    good: bool
    prime: PrimeIdealDesc


@dataclass(frozen=True)
class MultiplicityReport:
    point: tuple
    mu: int
    context: str  # "hypersurface" | "cycle"


def _field_of_integral_domain(domain: CoeffDomain) -> GlobalField:
    if domain.kind in ("integers", "rationals"):
        return GlobalField.rationals()
    if domain.kind in ("poly_ring", "rational_functions"):
        return GlobalField.function_field(domain.q)
    raise ValueError(f"no global field for {domain.describe()}")


def reduce_curve_mod_p(f: MultiPoly, prime: PrimeIdealDesc) -> ReducedHypersurface:
    """Reduce the primitive (content-one) representative of f modulo the
    prime; reports the reduced degree and whether the reduction is still a
    positive-dimensional hypersurface."""
    if f.is_zero:
        raise ValueError("cannot reduce the zero polynomial")
    field = _field_of_integral_domain(f.domain)
    if f.domain.kind == "rationals":
        # clear denominators first
        denom = 1
        for c in f.terms.values():
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        f = f.scale(denom).map_coefficients(CoeffDomain.integers(), lambda c: int(c))
    elif f.domain.kind == "rational_functions":
        raise ValueError("reduce expects O_K coefficients; clear denominators first")
    primitive = f.primitive_part()
    target = field.residue_domain(prime)
    f_p = primitive.map_coefficients(target, lambda c: field.residue_of(c, prime))
    if f_p.is_zero:
        raise AssertionError("content-one polynomial reduced to zero")
    reduced_degree = f_p.degree
    return ReducedHypersurface(
        f_p=f_p,
        original_degree=primitive.degree,
        reduced_degree=reduced_degree,
        good=reduced_degree > 0,
        prime=prime,
    )


# ---------------------------------------------------------------------------
# multiplicities
# ---------------------------------------------------------------------------


def _hasse_coefficient(f: MultiPoly, alpha: tuple[int, ...], powers) -> object:
    """Taylor coefficient of x^alpha for f expanded at the point whose
    coordinate powers are tabulated in `powers`."""
    dom = f.domain
    acc = dom.zero
    for beta, c in f.terms.items():
        term = c
        ok = True
        for i, (b, a) in enumerate(zip(beta, alpha)):
            if b < a:
                ok = False
                break
            if b > a:
                binom = comb(b, a)
                term = dom.mul(term, dom.mul(dom.coerce(binom), powers[i][b - a]))
        if ok:
            acc = dom.add(acc, term)
    return acc


def _affine_mult(f: MultiPoly, point) -> int:
    dom = f.domain
    coords = [dom.coerce(x) for x in point]
    deg = f.degree
    powers = []
    for i, a in enumerate(coords):
        maxe = f.degree_in(i)
        row = [dom.one]
        for _ in range(maxe):
            row.append(dom.mul(row[-1], a))
        powers.append(row)
    for k in range(deg + 1):
        for alpha in monomials_of_degree(f.nvars, k):
            if not dom.is_zero(_hasse_coefficient(f, alpha, powers)):
                return k
    raise AssertionError("nonzero polynomial with no Taylor coefficients")


def mult_at_point(f: MultiPoly, point, projective: bool | None = None) -> MultiplicityReport:
    """Multiplicity of the point on the hypersurface f = 0.

    Projective points are moved to the affine chart of their last nonzero
    coordinate; the multiplicity is the least total degree with a nonzero
    Taylor coefficient there (0 when f does not vanish at the point).
    """
    if f.is_zero:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    if projective is None:
        # bivariate input defaults to affine plane curves; an all-zero point
        # can only be affine (a cone vertex)
        projective = (
            f.is_homogeneous
            and len(point) == f.nvars
            and f.nvars >= 3
            and any(bool(c) for c in point)
        )
    if not projective:
        if len(point) != f.nvars:
            raise ValueError("affine point arity mismatch")
        return MultiplicityReport(tuple(point), _affine_mult(f, point), "hypersurface")
    if len(point) != f.nvars:
        raise ValueError("projective point arity mismatch")
    dom = f.domain
    if not dom.is_field:
        frac = dom.fraction_field()
        f = f.map_coefficients(frac, frac.coerce)
        dom = frac
    coords = [dom.coerce(x) for x in point]
    chart = max(i for i, c in enumerate(coords) if not dom.is_zero(c))
    inv = dom.inv(coords[chart])
    affine_point = [dom.mul(c, inv) for i, c in enumerate(coords) if i != chart]
    chart_poly = f.dehomogenize(chart)
    mu = _affine_mult(chart_poly, affine_point)
    return MultiplicityReport(tuple(point), mu, "hypersurface")


@dataclass(frozen=True)
class FactoredCycle:
    """An effective cycle sum(n_j * C_j) given in factored form.

    Component polynomials must be pairwise non-associate; irreducibility
    is asserted by the caller and not verified (no factorization here).
    """

    components: tuple[tuple[MultiPoly, int], ...]
    nvars: int
    dim: int

    def __post_init__(self):
        if not self.components:
            raise ValueError("empty cycle")
        dom = self.components[0][0].domain
        for poly, mult in self.components:
            if poly.is_zero or poly.domain != dom or poly.nvars != self.nvars:
                raise ValueError("incompatible cycle component")
            if not poly.is_homogeneous:
                raise ValueError("cycle components must be homogeneous")
            if mult < 1:
                raise ValueError("component multiplicities must be >= 1")
        normalized = [self._normal_form(p) for p, _ in self.components]
        if len({hash(p) for p in normalized}) != len(normalized):
            raise ValueError("cycle components must be pairwise non-associate")

    @staticmethod
    def _normal_form(p: MultiPoly) -> MultiPoly:
        dom = p.domain
        if dom.is_field:
            _, lead = p.leading_term()
            return p.scale(dom.inv(lead))
        return p.primitive_part()

    @property
    def domain(self) -> CoeffDomain:
        return self.components[0][0].domain

    @property
    def degree(self) -> int:
        return sum(n * p.degree for p, n in self.components)

    def expanded(self) -> MultiPoly:
        out = MultiPoly.constant(self.domain, self.nvars, 1)
        for poly, mult in self.components:
            out = out * poly**mult
        return out


def cycle_mult(cycle: FactoredCycle, point) -> MultiplicityReport:
    """Multiplicity of a point on an effective cycle: the multiplicity-
    weighted sum over components."""
    total = 0
    for poly, mult in cycle.components:
        total += mult * mult_at_point(poly, point).mu
    return MultiplicityReport(tuple(point), total, "cycle")


def derivative_cycle(
    f: MultiPoly, a=None, rng_seed: int = 0, max_retries: int = 8
) -> MultiPoly:
    """A direction-derivative combination sum(a_i * df/dx_i), resampling the
    direction from a seeded generator whenever the combination vanishes
    identically."""
    if f.is_constant:
        raise ValueError("derivative cycle needs a nonconstant polynomial")
    dom = f.domain
    partials = [f.partial(i) for i in range(f.nvars)]
    rng = random.Random(rng_seed)
    attempts = []
    if a is not None:
        attempts.append([dom.coerce(x) for x in a])
    for attempt in range(max_retries + 1):
        if attempt >= len(attempts):
            attempts.append([dom.sample(rng) for _ in range(f.nvars)])
        direction = attempts[attempt]
        out = MultiPoly.zero(dom, f.nvars)
        for coeff, partial in zip(direction, partials):
            out = out + partial.scale(coeff)
        if not out.is_zero:
            return out
    raise DerivativeIdenticallyZero(
        f"all sampled directions annihilate {f}: every partial derivative "
        "combination vanished"
    )


# ---------------------------------------------------------------------------
# local intersection numbers of plane curves
# ---------------------------------------------------------------------------

INFINITE = math.inf


def _u_trim(dom, a: list) -> list:
    while a and dom.is_zero(a[-1]):
        a.pop()
    return a


def _u_mul(dom, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [dom.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if dom.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = dom.add(out[i + j], dom.mul(x, y))
    return _u_trim(dom, out)


def _u_divmod(dom, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    quo = [dom.zero] * max(len(a) - len(b) + 1, 0)
    inv_lead = dom.inv(b[-1])
    while len(rem) >= len(b):
        _u_trim(dom, rem)
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = dom.mul(rem[-1], inv_lead)
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = dom.sub(rem[shift + i], dom.mul(factor, c))
    return _u_trim(dom, quo), _u_trim(dom, rem)


def _u_gcd(dom, a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(dom, a, b)
        a, b = b, r
    if a:
        inv = dom.inv(a[-1])
        a = [dom.mul(c, inv) for c in a]
    return a


def _to_nested(f: MultiPoly) -> list[list]:
    """2-var polynomial as a list over y-degree of x-coefficient lists."""
    dom = f.domain
    ydeg = f.degree_in(1)
    out = [[] for _ in range(max(ydeg, -1) + 1)]
    xdeg = f.degree_in(0)
    for row in out:
        row.extend([dom.zero] * (xdeg + 1))
    for (ex, ey), c in f.terms.items():
        out[ey][ex] = c
    return [_u_trim(dom, row) for row in out]


def _from_nested(dom: CoeffDomain, nested: list[list]) -> MultiPoly:
    terms = {}
    for ey, row in enumerate(nested):
        for ex, c in enumerate(row):
            if not dom.is_zero(c):
                terms[(ex, ey)] = c
    return MultiPoly(dom, 2, terms)


def _nested_trim(nested: list[list]) -> list[list]:
    while nested and not nested[-1]:
        nested.pop()
    return nested


def _nested_content(dom, nested: list[list]) -> list:
    g: list = []
    for row in nested:
        if row:
            g = list(row) if not g else _u_gcd(dom, g, row)
    return g


def _nested_primitive(dom, nested: list[list]) -> list[list]:
    g = _nested_content(dom, nested)
    if not g or len(g) == 1:
        return nested
    out = []
    for row in nested:
        if not row:
            out.append([])
        else:
            quo, rem = _u_divmod(dom, row, g)
            assert not rem
            out.append(quo)
    return out


def _nested_scale(dom, nested: list[list], c: list) -> list[list]:
    return [_u_mul(dom, row, c) for row in nested]


def _nested_sub(dom, a: list[list], b: list[list]) -> list[list]:
    out = []
    for i in range(max(len(a), len(b))):
        ra = a[i] if i < len(a) else []
        rb = b[i] if i < len(b) else []
        row = [dom.zero] * max(len(ra), len(rb))
        for j, c in enumerate(ra):
            row[j] = c
        for j, c in enumerate(rb):
            row[j] = dom.sub(row[j], c)
        out.append(_u_trim(dom, row))
    return _nested_trim(out)


def _nested_shift_y(nested: list[list], k: int) -> list[list]:
    return [[] for _ in range(k)] + nested


def gcd_bivariate(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd of two 2-variable polynomials over a field (primitive Euclid in
    (F[x])[y]); normalized so the grevlex-leading coefficient is 1."""
    dom = f.domain
    if not dom.is_field:
        raise TypeError("bivariate gcd needs field coefficients")
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    A, B = _nested_trim(_to_nested(f)), _nested_trim(_to_nested(g))
    if len(A) < len(B):
        A, B = B, A
    # y-degree zero cases reduce to univariate gcds in x
    if len(B) == 1:
        content = _nested_content(dom, A)
        h = _u_gcd(dom, content, B[0])
        result = _from_nested(dom, [h])
    else:
        contA, contB = _nested_content(dom, A), _nested_content(dom, B)
        d = _u_gcd(dom, contA, contB)
        A, B = _nested_primitive(dom, A), _nested_primitive(dom, B)
        while True:
            # pseudo-remainder of A by B in y
            while len(A) >= len(B):
                lcA, lcB = A[-1], B[-1]
                shift = len(A) - len(B)
                A = _nested_sub(
                    dom,
                    _nested_scale(dom, A, lcB),
                    _nested_shift_y(_nested_scale(dom, B, lcA), shift),
                )
                if not A:
                    break
            if not A:
                result_nested = B
                break
            A = _nested_primitive(dom, A)
            A, B = B, A
            if len(B) == 1:
                # dropped to y-degree 0: gcd of primitive parts is in F[x]
                content = _nested_content(dom, A)
                result_nested = [_u_gcd(dom, content, B[0])]
                break
        result = _from_nested(dom, _nested_scale(dom, result_nested, d) if d else result_nested)
    if result.is_zero:
        return result
    _, lead = result.leading_term()
    return result.scale(dom.inv(lead))


def _const_term(f: MultiPoly):
    return f.coefficient((0,) * f.nvars)


def _univariate_in_x(f: MultiPoly) -> list:
    """f(x, 0) as a coefficient list."""
    dom = f.domain
    out = [dom.zero] * (f.degree_in(0) + 1)
    for (ex, ey), c in f.terms.items():
        if ey == 0:
            out[ex] = c
    return _u_trim(dom, out)


def _ord_at_zero(dom, coeffs: list) -> int:
    for i, c in enumerate(coeffs):
        if not dom.is_zero(c):
            return i
    raise AssertionError("ord of the zero polynomial")


def _divide_out_y(f: MultiPoly) -> MultiPoly:
    dom = f.domain
    terms = {}
    for (ex, ey), c in f.terms.items():
        assert ey >= 1
        terms[(ex, ey - 1)] = c
    return MultiPoly(dom, 2, terms)


def fulton_intersection_number(f: MultiPoly, g: MultiPoly, point) -> int | float:
    """Local intersection number of two affine plane curves at a point.

    Returns 0 when one of them does not vanish there, INFINITE when they
    share a component through the point, and otherwise the unique value
    satisfying the classical axioms (symmetry, invariance under adding
    multiples, additivity over products, transverse lines give 1).
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("intersection numbers are for affine plane curves")
    dom = f.domain
    if not dom.is_field:
        raise TypeError("intersection numbers need field coefficients")
    if f.is_zero or g.is_zero:
        return INFINITE
    tf = f.translate(point)
    tg = g.translate(point)
    if not dom.is_zero(_const_term(tf)) or not dom.is_zero(_const_term(tg)):
        return 0
    h = gcd_bivariate(tf, tg)
    if h.degree >= 1:
        if dom.is_zero(_const_term(h)):
            return INFINITE
        tf = tf.exact_div(h)
        tg = tg.exact_div(h)
    total = 0
    while True:
        if not dom.is_zero(_const_term(tf)) or not dom.is_zero(_const_term(tg)):
            return total
        a = _univariate_in_x(tf)
        b = _univariate_in_x(tg)
        if not a and not b:
            # both divisible by y despite gcd division: defensive
            return INFINITE
        if not a:
            total += _ord_at_zero(dom, b)
            tf = _divide_out_y(tf)
            continue
        if not b:
            total += _ord_at_zero(dom, a)
            tg = _divide_out_y(tg)
            continue
        if len(a) > len(b):
            tf, tg = tg, tf
            a, b = b, a
        # kill the top coefficient of g(x, 0)
        lc_a, lc_b = a[-1], b[-1]
        shift = len(b) - len(a)
        xshift = MultiPoly.monomial(dom, (shift, 0), lc_b)
        tg = tg.scale(lc_a) - tf * xshift
        if tg.is_zero:
            return INFINITE


# ---------------------------------------------------------------------------
# projective helpers over finite fields
# ---------------------------------------------------------------------------


def proj_points_over(domain: CoeffDomain, nvars: int):
    """Canonical representatives of P^{nvars-1}(F), first nonzero = 1."""
    elems = list(domain.elements())
    one, zero = domain.one, domain.zero
    for lead in range(nvars):
        for tail in product(elems, repeat=nvars - 1 - lead):
            yield (zero,) * lead + (one,) + tail


def _chart_mult(f_charts: list[MultiPoly], point: tuple, domain: CoeffDomain) -> int:
    """Multiplicity via the chart of the leading 1 in a canonical rep."""
    lead = next(i for i, c in enumerate(point) if not domain.is_zero(c))
    affine = point[:lead] + point[lead + 1 :]
    return _affine_mult(f_charts[lead], affine)


@dataclass(frozen=True)
class HighMultLocus:
    kind: str  # "ok" | "empty" | "all_points"
    poly: MultiPoly | None
    degree: int | None
    locus: tuple
    threshold: Fraction


class NoInterpolantError(RuntimeError):
    def __init__(self, cap_degree: int, npoints: int):
        super().__init__(
            f"no nonzero form of degree <= {cap_degree} vanishes on all "
            f"{npoints} high-multiplicity points"
        )


def high_mult_locus(
    f_p: MultiPoly,
    k,
    cap_degree: int,
    strict: bool = True,
    budget: int = 2_000_000,
) -> HighMultLocus:
    """Locate the points of multiplicity above deg(f)/k and produce a
    minimal-degree nonzero form vanishing on all of them.

    With strict=False the threshold is >= instead of >.  If deg(f)/k < 1
    every point of the hypersurface qualifies and the sentinel
    "all_points" is returned (the caller keeps the hypersurface itself).
    """
    if f_p.is_constant:
        raise ValueError("need a nonconstant hypersurface")
    dom = f_p.domain
    if dom.size is None:
        raise TypeError("high-multiplicity scan needs a finite residue field")
    kf = Fraction(k)
    if kf < 1:
        raise ValueError("need k >= 1")
    D = f_p.degree
    threshold = Fraction(D) / kf
    if threshold < 1:
        return HighMultLocus("all_points", None, None, (), threshold)
    n = f_p.nvars
    npoints = sum(dom.size**i for i in range(n))
    if npoints > budget:
        raise BudgetExceededScan(npoints, budget)
    charts = [f_p.dehomogenize(i) for i in range(n)]
    locus = []
    for pt in proj_points_over(dom, n):
        mu = _chart_mult(charts, pt, dom)
        if (mu > threshold) if strict else (mu >= threshold):
            locus.append(pt)
    if not locus:
        return HighMultLocus("empty", None, 0, (), threshold)
    for degree in range(1, cap_degree + 1):
        monos = monomials_of_degree(n, degree)
        rows = []
        for pt in locus:
            rows.append(
                [_eval_monomial(dom, exps, pt) for exps in monos]
            )
        basis = kernel_basis(ExactMatrix.from_rows(dom, rows))
        if basis:
            vec = basis[0]
            h = MultiPoly(dom, n, {exps: c for exps, c in zip(monos, vec)})
            for pt in locus:
                assert dom.is_zero(h.evaluate(pt)), "interpolant fails to vanish"
            return HighMultLocus("ok", h, degree, tuple(locus), threshold)
    raise NoInterpolantError(cap_degree, len(locus))


class BudgetExceededScan(RuntimeError):
    def __init__(self, npoints: int, budget: int):
        super().__init__(f"point scan of size {npoints} exceeds budget {budget}")


def _eval_monomial(dom: CoeffDomain, exps: tuple[int, ...], point: tuple):
    acc = dom.one
    for x, e in zip(point, exps):
        if e:
            acc = dom.mul(acc, dom.pow(x, e))
    return acc


# ---------------------------------------------------------------------------
# the intersection cycle audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleIntersection:
    """The 0-cycle obtained by intersecting each component with its own
    derivative curve and with the other components."""

    point_mults: tuple[tuple[tuple, int], ...]
    total_degree: int
    degree_bound: int  # D^2
    direction: tuple


def cycle_A(
    cycle: FactoredCycle, a=None, seed: int = 0, max_retries: int = 12
) -> CycleIntersection:
    """Point-multiplicity data and exact total degree for the intersection
    cycle sum_j n_j C_j . (n_j C'_j + sum_{l != j} n_l C_l).

    Rational points get their contributions from local intersection
    numbers; the total degree over the closure comes from degree
    bookkeeping on proper pairwise intersections.  Components of degree 1
    have empty derivative cycles and contribute only cross terms.
    """
    dom = cycle.domain
    if not dom.is_field or dom.size is None:
        raise TypeError("cycle audit needs a finite residue field")
    if cycle.nvars != 3:
        raise ValueError("cycle audit is implemented for plane curves")
    rng = random.Random(seed)
    direction = None
    derivs: list[MultiPoly | None] = []
    last_error: Exception | None = None
    for attempt in range(max_retries + 1):
        if attempt == 0 and a is not None:
            candidate = [dom.coerce(x) for x in a]
        else:
            candidate = [dom.sample(rng) for _ in range(3)]
        derivs, ok = [], True
        for poly, _ in cycle.components:
            combo = MultiPoly.zero(dom, 3)
            for coeff, i in zip(candidate, range(3)):
                combo = combo + poly.partial(i).scale(coeff)
            if combo.is_zero:
                ok = False
                last_error = DerivativeIdenticallyZero(
                    f"direction {candidate} annihilates {poly}"
                )
                break
            if combo.is_constant:
                derivs.append(None)  # empty derivative cycle (degree-1 component)
                continue
            # proper intersection requires that the component does not
            # divide its derivative curve
            if _divides(poly, combo):
                ok = False
                last_error = None
                break
            derivs.append(combo)
        if ok:
            direction = tuple(candidate)
            break
    if direction is None:
        if isinstance(last_error, DerivativeIdenticallyZero):
            raise last_error
        raise DerivativeIdenticallyZero(
            "no sampled direction produced proper derivative cycles"
        )

    pairs: list[tuple[MultiPoly, MultiPoly, int]] = []
    for j, (fj, nj) in enumerate(cycle.components):
        dj = derivs[j]
        if dj is not None:
            pairs.append((fj, dj, nj * nj))
        for l, (fl, nl) in enumerate(cycle.components):
            if l != j:
                pairs.append((fj, fl, nj * nl))

    point_mults: dict[tuple, int] = {}
    for fpoly, gpoly, weight in pairs:
        for pt in _common_proj_zeros(fpoly, gpoly):
            contrib = _proj_intersection_number(fpoly, gpoly, pt)
            assert contrib != INFINITE, "non-proper intersection slipped through"
            if contrib:
                point_mults[pt] = point_mults.get(pt, 0) + weight * contrib

    total_degree = 0
    for j, (fj, nj) in enumerate(cycle.components):
        own = fj.degree * derivs[j].degree if derivs[j] is not None else 0
        cross = sum(
            nl * fj.degree * fl.degree
            for l, (fl, nl) in enumerate(cycle.components)
            if l != j
        )
        total_degree += nj * (nj * own + cross)

    D = cycle.degree
    if D >= 3:
        assert total_degree < D * D, (
            f"intersection cycle degree {total_degree} reaches D^2 = {D * D}"
        )

    return CycleIntersection(
        point_mults=tuple(sorted(point_mults.items(), key=lambda kv: _point_key(dom, kv[0]))),
        total_degree=total_degree,
        degree_bound=cycle.degree**2,
        direction=direction,
    )


def _point_key(dom: CoeffDomain, pt: tuple):
    return tuple(dom.sort_key(c) for c in pt)


def _divides(f: MultiPoly, g: MultiPoly) -> bool:
    if g.is_zero:
        return True
    try:
        g.exact_div(f)
        return True
    except (ArithmeticError, ZeroDivisionError):
        return False


def _common_proj_zeros(f: MultiPoly, g: MultiPoly):
    dom = f.domain
    for pt in proj_points_over(dom, 3):
        if dom.is_zero(f.evaluate(pt)) and dom.is_zero(g.evaluate(pt)):
            yield pt


def _proj_intersection_number(f: MultiPoly, g: MultiPoly, pt: tuple) -> int | float:
    dom = f.domain
    chart = max(i for i, c in enumerate(pt) if not dom.is_zero(c))
    inv = dom.inv(pt[chart])
    affine_pt = tuple(dom.mul(c, inv) for i, c in enumerate(pt) if i != chart)
    return fulton_intersection_number(
        f.dehomogenize(chart), g.dehomogenize(chart), affine_pt
    )


def silly_arithmetic_check(xs) -> bool:
    """True iff: whenever every entry is less than half the total, the
    square of the total is less than twice the off-diagonal pair sum."""
    xs = [int(x) for x in xs]
    if any(x < 0 for x in xs):
        raise ValueError("entries must be non-negative")
    total = sum(xs)
    hypothesis = all(2 * x < total for x in xs)
    if not hypothesis:
        return True
    off_diagonal = total * total - sum(x * x for x in xs)  # ordered pairs j != l
    return total * total < 2 * off_diagonal
