"""Global fields Q and F_q(t): places, heights, primitive points, reduction.

Field elements are Fractions over Q and FqRational values over F_q(t);
ring-of-integers elements are ints resp. FqPoly values.  Heights are
exact integers (max coordinate size over Q, q^(max degree) over F_q(t));
logs only appear at reporting boundaries.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .algebra.domains import CoeffDomain
from .algebra.fqpoly import FqPoly, FqRational, fq_factor, fq_gcd, fq_lcm
from .algebra.primes import PrimeIdealDesc


class AllCoordinatesVanish(RuntimeError):
    """Internal error: a primitive point reduced to the zero tuple."""


@dataclass(frozen=True)
class GlobalField:
    """Q or F_q(t) (q prime); d_K = 1 for both supported kinds.

    c2 is the well-definedness floor for point reduction; with d_K = 1
    primitivity already guarantees well-definedness, so it defaults to 1.
    """

    kind: str  # "Q" | "Fq(t)"
    q: int | None = None
    c2: int = 1

    def __post_init__(self):
        if self.kind == "Q":
            if self.q is not None:
                raise ValueError("Q carries no q")
        elif self.kind == "Fq(t)":
            from .algebra.domains import _is_prime_int

            if not _is_prime_int(self.q or 0):
                raise ValueError(f"function-field constant field size {self.q} must be prime")
        else:
            raise NotImplementedError(
                f"global field kind {self.kind!r} is not supported; only Q and "
                "Fq(t) with prime q are implemented (d_K = 1)"
            )

    @classmethod
    def rationals(cls) -> "GlobalField":
        return cls("Q")

    @classmethod
    def function_field(cls, q: int) -> "GlobalField":
        return cls("Fq(t)", q=q)

    @classmethod
    def number_field(cls, *args, **kwargs) -> "GlobalField":
        raise NotImplementedError(
            "number fields beyond Q are not implemented; the interface is "
            "reserved for a future extension"
        )

    @classmethod
    def parse(cls, descriptor: str) -> "GlobalField":
        """CLI field descriptors: "Q" or "Fq(t):q=3"."""
        s = descriptor.strip()
        if s == "Q":
            return cls.rationals()
        if s.startswith("Fq(t):q="):
            return cls.function_field(int(s[len("Fq(t):q=") :]))
        raise ValueError(f"unknown field descriptor {descriptor!r}")

    @property
    def d_K(self) -> int:
        return 1

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    def describe(self) -> str:
        return "Q" if self.is_rational else f"F_{self.q}(t)"

    # -- associated domains -------------------------------------------------

    def element_domain(self) -> CoeffDomain:
        return CoeffDomain.rationals() if self.is_rational else CoeffDomain.rational_functions(self.q)

    def integer_domain(self) -> CoeffDomain:
        return CoeffDomain.integers() if self.is_rational else CoeffDomain.poly_ring(self.q)

    def coerce(self, x):
        """Into K itself (Fraction / FqRational)."""
        return self.element_domain().coerce(x)

    def coerce_integral(self, x):
        """Into O_K (int / FqPoly)."""
        return self.integer_domain().coerce(x)

    def residue_domain(self, prime: PrimeIdealDesc) -> CoeffDomain:
        """The residue field O_K/p as a CoeffDomain.

        Rational primes and degree-1 function-field primes map to
        prime_field; higher-degree function-field primes map to
        residue_field (arithmetic mod pi).
        """
        if prime.is_rational:
            return CoeffDomain.prime_field(prime.generator)
        pi = prime.generator
        if pi.degree == 1:
            return CoeffDomain.prime_field(self.q)
        return CoeffDomain.residue_field(pi)

    def residue_of(self, x, prime: PrimeIdealDesc):
        """Reduce an O_K element modulo the prime."""
        x = self.coerce_integral(x)
        if prime.is_rational:
            return x % prime.generator
        pi = prime.generator
        if pi.degree == 1:
            root = (-pi.coeffs[0]) % self.q
            return x.evaluate(root)
        return x % pi


@dataclass(frozen=True)
class Place:
    """A place of K: archimedean (Q), the degree place v_inf (F_q(t)), or a
    finite prime ideal."""

    kind: str  # "archimedean" | "infinite" | "finite"
    prime: PrimeIdealDesc | None = None
    n_v: int = 1

    @classmethod
    def archimedean(cls) -> "Place":
        return cls("archimedean")

    @classmethod
    def infinite(cls) -> "Place":
        return cls("infinite")

    @classmethod
    def finite(cls, prime: PrimeIdealDesc) -> "Place":
        return cls("finite", prime=prime)


def _ord_int(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("ord of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _ord_poly(f: FqPoly, pi: FqPoly) -> int:
    if not f:
        raise ValueError("ord of zero")
    v = 0
    while True:
        quo, rem = divmod(f, pi)
        if rem:
            return v
        f, v = quo, v + 1


def ord_at(field: GlobalField, x, prime: PrimeIdealDesc) -> int:
    """The valuation ord_p(x) for nonzero x in K."""
    x = field.coerce(x)
    if field.is_rational:
        return _ord_int(x.numerator, prime.generator) - _ord_int(x.denominator, prime.generator)
    return _ord_poly(x.num, prime.generator) - _ord_poly(x.den, prime.generator)


def abs_value(field: GlobalField, x, place: Place) -> Fraction:
    """Normalized absolute value |x|_v as an exact Fraction; 0 for x = 0."""
    x = field.coerce(x)
    if not x:
        return Fraction(0)
    if place.kind == "archimedean":
        if not field.is_rational:
            raise ValueError("archimedean place only exists over Q")
        return abs(x)
    if place.kind == "infinite":
        if field.is_rational:
            raise ValueError("v_inf only exists over F_q(t)")
        e = x.num.degree - x.den.degree
        return Fraction(field.q**e) if e >= 0 else Fraction(1, field.q ** (-e))
    prime = place.prime
    if prime is None:
        raise ValueError("finite place without a prime")
    if field.is_rational and not prime.is_rational:
        raise ValueError("place/field mismatch")
    if not field.is_rational and prime.is_rational:
        raise ValueError("place/field mismatch")
    v = ord_at(field, x, prime)
    return Fraction(1, prime.norm**v) if v >= 0 else Fraction(prime.norm ** (-v))


def _prime_factors_int(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def places_with_nontrivial_value(field: GlobalField, x) -> list[Place]:
    """The finite list of places where |x|_v can differ from 1."""
    x = field.coerce(x)
    if not x:
        raise ValueError("zero has no place decomposition")
    out: list[Place] = []
    if field.is_rational:
        out.append(Place.archimedean())
        for p in sorted(set(_prime_factors_int(x.numerator) + _prime_factors_int(x.denominator))):
            out.append(Place.finite(PrimeIdealDesc(p, p)))
        return out
    out.append(Place.infinite())
    seen = set()
    for f in (x.num, x.den):
        if f.is_constant:
            continue
        for pi, _ in fq_factor(f):
            if pi.coeffs not in seen:
                seen.add(pi.coeffs)
                out.append(Place.finite(PrimeIdealDesc(pi, field.q**pi.degree)))
    return out


def product_formula_check(field: GlobalField, x) -> Fraction:
    """prod_v |x|_v over the places where it can be nontrivial.

    The contract is that this equals 1 exactly for every nonzero x.
    """
    x = field.coerce(x)
    if not x:
        raise ValueError("product formula needs x != 0")
    product = Fraction(1)
    for place in places_with_nontrivial_value(field, x):
        product *= abs_value(field, x, place)
    return product


@dataclass(frozen=True)
class ProjPoint:
    """A projective point in primitive normal form with its exact height.

    Coordinates are O_K elements with unit gcd; over Q the first nonzero
    coordinate is positive, over F_q(t) it is monic.  The representative
    is unique, so equality and hashing are literal.
    """

    field: GlobalField
    coords: tuple
    height: int

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def coord_strings(self) -> list[str]:
        return [str(c) for c in self.coords]

    def sort_key(self):
        if self.field.is_rational:
            return (self.height, self.coords)
        from .algebra.fqpoly import poly_to_index

        return (self.height, tuple(poly_to_index(c) for c in self.coords))


def _int_gcd_many(values) -> int:
    from math import gcd

    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


def primitive_normalize(field: GlobalField, raw) -> ProjPoint:
    """Clear denominators, divide by the gcd, fix the unit: the canonical
    representative of the projective point.  Idempotent."""
    coords = [field.coerce(x) for x in raw]
    if all(not c for c in coords):
        raise ValueError("all-zero tuple does not define a projective point")
    if field.is_rational:
        denom = 1
        for c in coords:
            denom = denom * c.denominator // _gcd2(denom, c.denominator)
        ints = [int(c * denom) for c in coords]
        g = _int_gcd_many(ints)
        ints = [v // g for v in ints]
        first = next(v for v in ints if v)
        if first < 0:
            ints = [-v for v in ints]
        tup = tuple(ints)
        return ProjPoint(field, tup, height_of_primitive(field, tup))
    q = field.q
    denom = FqPoly.one(q)
    for c in coords:
        denom = fq_lcm(denom, c.den)
    polys = []
    for c in coords:
        scaled = c * FqRational(denom)
        assert scaled.is_integral
        polys.append(scaled.num.scale(pow(scaled.den.leading_coeff, q - 2, q)))
    g = FqPoly.zero(q)
    for f in polys:
        if f:
            g = f.monic() if not g else fq_gcd(g, f)
    polys = [f // g for f in polys]
    first = next(f for f in polys if f)
    if first.leading_coeff != 1:
        inv = pow(first.leading_coeff, q - 2, q)
        polys = [f.scale(inv) for f in polys]
    tup = tuple(polys)
    return ProjPoint(field, tup, height_of_primitive(field, tup))


def _gcd2(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def height_of_primitive(field: GlobalField, coords) -> int:
    """Height of a tuple already in primitive form."""
    if field.is_rational:
        return max(abs(c) for c in coords)
    return field.q ** max(c.degree for c in coords if c)


def height_proj(field: GlobalField, point) -> int:
    """Absolute multiplicative projective height; scaling invariant."""
    if isinstance(point, ProjPoint):
        return point.height
    return primitive_normalize(field, point).height


def in_box(field: GlobalField, x, bound) -> bool:
    """Membership of an O_K element in the height box of size `bound`."""
    x = field.coerce_integral(x)
    if field.is_rational:
        return abs(x) <= bound
    if not x:
        return True
    return field.q**x.degree <= bound


@dataclass(frozen=True)
class ResiduePoint:
    """A projective point over a finite residue field, normalized so the
    first nonzero coordinate is 1."""

    domain: CoeffDomain
    coords: tuple

    def __str__(self) -> str:
        return "(" + " : ".join(self.domain.to_str(c) for c in self.coords) + ")"

    def sort_key(self):
        return tuple(self.domain.sort_key(c) for c in self.coords)


def normalize_residue_tuple(domain: CoeffDomain, coords) -> ResiduePoint:
    coords = [domain.coerce(c) for c in coords]
    first = next((c for c in coords if not domain.is_zero(c)), None)
    if first is None:
        raise AllCoordinatesVanish("residue tuple is identically zero")
    inv = domain.inv(first)
    return ResiduePoint(domain, tuple(domain.mul(c, inv) for c in coords))


def reduce_point_mod_p(point: ProjPoint, prime: PrimeIdealDesc) -> ResiduePoint:
    """Coordinate-wise reduction of the primitive representative."""
    field = point.field
    if field.is_rational != prime.is_rational:
        raise ValueError("prime does not belong to the point's field")
    if prime.norm <= field.c2:
        warnings.warn(
            f"prime norm {prime.norm} is at or below the well-definedness floor "
            f"c2={field.c2}; reduction may be ill-defined",
            stacklevel=2,
        )
    domain = field.residue_domain(prime)
    residues = [field.residue_of(c, prime) for c in point.coords]
    if all(domain.is_zero(domain.coerce(r)) for r in residues):
        raise AllCoordinatesVanish(
            f"primitive point {point} reduced to zero mod {prime}; "
            "this indicates non-primitive input"
        )
    return normalize_residue_tuple(domain, residues)
