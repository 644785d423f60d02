"""Coefficient domains with exact arithmetic.

A ``CoeffDomain`` bundles a raw element representation with the exact
ring operations the rest of the package needs:

==================  ==========================================
kind                element representation
==================  ==========================================
integers            int
rationals           fractions.Fraction
prime_field(p)      int in [0, p)
poly_ring(q)        FqPoly              (the ring F_q[t])
rational_functions  FqRational          (the field F_q(t))
residue_field       FqPoly reduced mod an irreducible pi
==================  ==========================================

The residue-field kind covers F_q[t]/(pi) for function-field primes of
any degree; for prime degree 1 callers usually prefer prime_field(q)
via evaluation at the root of pi.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fqpoly import FqPoly, FqRational, fq_xgcd, is_irreducible, poly_from_index

INTEGERS = "integers"
RATIONALS = "rationals"
PRIME_FIELD = "prime_field"
POLY_RING = "poly_ring"
RATIONAL_FUNCTIONS = "rational_functions"
RESIDUE_FIELD = "residue_field"

_FIELD_KINDS = frozenset({RATIONALS, PRIME_FIELD, RATIONAL_FUNCTIONS, RESIDUE_FIELD})
_FF_KINDS = frozenset({POLY_RING, RATIONAL_FUNCTIONS, RESIDUE_FIELD})


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoeffDomain:
    """One of the supported exact coefficient domains."""

    kind: str
    p: int | None = None  # modulus for prime_field
    q: int | None = None  # base characteristic for function-field kinds
    pi: FqPoly | None = None  # modulus for residue_field

    def __post_init__(self):
        if self.kind == PRIME_FIELD and not _is_prime_int(self.p or 0):
            raise ValueError(f"prime_field modulus {self.p} is not prime")
        if self.kind in _FF_KINDS and not _is_prime_int(self.q or 0):
            raise ValueError(f"function-field characteristic {self.q} is not prime")
        if self.kind == RESIDUE_FIELD:
            if self.pi is None or self.pi.q != self.q or not self.pi.is_monic:
                raise ValueError("residue_field needs a monic modulus over F_q")
            if not is_irreducible(self.pi):
                raise ValueError(f"residue_field modulus {self.pi} is reducible")

    # -- constructors ------------------------------------------------------

    @classmethod
    def integers(cls) -> "CoeffDomain":
        return cls(INTEGERS)

    @classmethod
    def rationals(cls) -> "CoeffDomain":
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "CoeffDomain":
        return cls(PRIME_FIELD, p=p)

    @classmethod
    def poly_ring(cls, q: int) -> "CoeffDomain":
        return cls(POLY_RING, q=q)

    @classmethod
    def rational_functions(cls, q: int) -> "CoeffDomain":
        return cls(RATIONAL_FUNCTIONS, q=q)

    @classmethod
    def residue_field(cls, pi: FqPoly) -> "CoeffDomain":
        return cls(RESIDUE_FIELD, q=pi.q, pi=pi)

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in _FIELD_KINDS

    @property
    def is_function_field_kind(self) -> bool:
        return self.kind in _FF_KINDS

    @property
    def characteristic(self) -> int:
        if self.kind == PRIME_FIELD:
            return self.p
        if self.kind in _FF_KINDS:
            return self.q
        return 0

    @property
    def size(self) -> int | None:
        """Number of elements for finite domains, else None."""
        if self.kind == PRIME_FIELD:
            return self.p
        if self.kind == RESIDUE_FIELD:
            return self.q**self.pi.degree
        return None

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    # -- element handling ----------------------------------------------------

    def coerce(self, x):
        """Bring x (int, Fraction, FqPoly, FqRational, or same-domain raw
        element) into this domain's representation."""
        k = self.kind
        if k == INTEGERS:
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            raise TypeError(f"{x!r} is not an integer")
        if k == RATIONALS:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"{x!r} is not rational")
        if k == PRIME_FIELD:
            if isinstance(x, int):
                return x % self.p
            raise TypeError(f"{x!r} is not a prime-field element")
        if k == POLY_RING:
            if isinstance(x, FqPoly) and x.q == self.q:
                return x
            if isinstance(x, int):
                return FqPoly.const(self.q, x)
            if isinstance(x, FqRational) and x.q == self.q and x.is_integral:
                return x.num.scale(pow(x.den.leading_coeff, self.q - 2, self.q))
            raise TypeError(f"{x!r} is not in F_{self.q}[t]")
        if k == RATIONAL_FUNCTIONS:
            if isinstance(x, FqRational) and x.q == self.q:
                return x
            if isinstance(x, FqPoly) and x.q == self.q:
                return FqRational(x)
            if isinstance(x, int):
                return FqRational(FqPoly.const(self.q, x))
            raise TypeError(f"{x!r} is not in F_{self.q}(t)")
        if k == RESIDUE_FIELD:
            if isinstance(x, FqPoly) and x.q == self.q:
                return x % self.pi
            if isinstance(x, int):
                return FqPoly.const(self.q, x)
            raise TypeError(f"{x!r} is not reducible mod {self.pi}")
        raise AssertionError(f"unknown domain kind {k}")

    def is_zero(self, x) -> bool:
        return not x

    def eq(self, a, b) -> bool:
        return self.coerce(a) == self.coerce(b)

    def add(self, a, b):
        if self.kind == RESIDUE_FIELD:
            return (a + b) % self.pi
        if self.kind == PRIME_FIELD:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.kind == RESIDUE_FIELD:
            return (a - b) % self.pi
        if self.kind == PRIME_FIELD:
            return (a - b) % self.p
        return a - b

    def neg(self, a):
        if self.kind == RESIDUE_FIELD:
            return (-a) % self.pi
        if self.kind == PRIME_FIELD:
            return (-a) % self.p
        return -a

    def mul(self, a, b):
        if self.kind == RESIDUE_FIELD:
            return (a * b) % self.pi
        if self.kind == PRIME_FIELD:
            return (a * b) % self.p
        return a * b

    def inv(self, a):
        k = self.kind
        if not a:
            raise ZeroDivisionError("inverting zero")
        if k == RATIONALS:
            return 1 / Fraction(a)
        if k == PRIME_FIELD:
            return pow(a, self.p - 2, self.p)
        if k == RATIONAL_FUNCTIONS:
            return FqRational(FqPoly.one(self.q)) / a
        if k == RESIDUE_FIELD:
            g, u, _ = fq_xgcd(a % self.pi, self.pi)
            if g.degree != 0:
                raise ZeroDivisionError(f"{a} not invertible mod {self.pi}")
            return u % self.pi
        raise TypeError(f"{k} is not a field")

    def div(self, a, b):
        """Field division; exact for fields only."""
        return self.mul(a, self.inv(b))

    def exact_div(self, a, b):
        """Exact division in an integral domain; raises if b does not divide a."""
        k = self.kind
        if k == INTEGERS:
            quo, rem = divmod(a, b)
            if rem:
                raise ArithmeticError(f"{b} does not divide {a} in Z")
            return quo
        if k == POLY_RING:
            quo, rem = divmod(a, b)
            if rem:
                raise ArithmeticError(f"{b} does not divide {a} in F_q[t]")
            return quo
        return self.div(a, b)

    def pow(self, a, n: int):
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self):
        """Iterate all elements of a finite domain in canonical order."""
        if self.kind == PRIME_FIELD:
            return iter(range(self.p))
        if self.kind == RESIDUE_FIELD:
            return (poly_from_index(self.q, i) for i in range(self.size))
        raise TypeError(f"{self.kind} is not finite")

    def sample(self, rng, span: int = 6):
        """Draw one element from a seeded random.Random; used for generic
        vectors and randomized property tests."""
        k = self.kind
        if k == INTEGERS:
            return rng.randint(-span, span)
        if k == RATIONALS:
            return Fraction(rng.randint(-span, span), rng.randint(1, span))
        if k == PRIME_FIELD:
            return rng.randrange(self.p)
        if k == POLY_RING:
            return poly_from_index(self.q, rng.randrange(self.q ** min(span, 4)))
        if k == RATIONAL_FUNCTIONS:
            num = poly_from_index(self.q, rng.randrange(self.q ** min(span, 4)))
            den = FqPoly.zero(self.q)
            while not den:
                den = poly_from_index(self.q, rng.randrange(self.q ** min(span, 3)))
            return FqRational(num, den)
        if k == RESIDUE_FIELD:
            return poly_from_index(self.q, rng.randrange(self.size))
        raise AssertionError(k)

    # -- text / ordering -----------------------------------------------------

    def to_str(self, a) -> str:
        if self.kind == RATIONALS:
            f = Fraction(a)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        if self.kind == RATIONAL_FUNCTIONS and isinstance(a, FqRational):
            if a.is_integral:
                return str(a.num)
            return f"({a.num})/({a.den})"
        return str(a)

    def sort_key(self, a):
        """A total order on elements, used only for canonical output."""
        k = self.kind
        if k in (INTEGERS, PRIME_FIELD):
            return (a,)
        if k == RATIONALS:
            f = Fraction(a)
            return (f.numerator, f.denominator)
        if k in (POLY_RING, RESIDUE_FIELD):
            return (a.degree, a.coeffs)
        if k == RATIONAL_FUNCTIONS:
            return (a.num.degree, a.num.coeffs, a.den.degree, a.den.coeffs)
        raise AssertionError(k)

    def t_element(self):
        """The coefficient-field generator t (function-field kinds only)."""
        if self.kind == POLY_RING:
            return FqPoly.t(self.q)
        if self.kind == RATIONAL_FUNCTIONS:
            return FqRational(FqPoly.t(self.q))
        if self.kind == RESIDUE_FIELD:
            return FqPoly.t(self.q) % self.pi
        raise TypeError(f"t is not an element of {self.describe()}")

    def fraction_field(self) -> "CoeffDomain":
        if self.kind == INTEGERS:
            return CoeffDomain.rationals()
        if self.kind == POLY_RING:
            return CoeffDomain.rational_functions(self.q)
        if self.is_field:
            return self
        raise AssertionError(self.kind)

    def describe(self) -> str:
        k = self.kind
        if k == INTEGERS:
            return "Z"
        if k == RATIONALS:
            return "Q"
        if k == PRIME_FIELD:
            return f"F_{self.p}"
        if k == POLY_RING:
            return f"F_{self.q}[t]"
        if k == RATIONAL_FUNCTIONS:
            return f"F_{self.q}(t)"
        if k == RESIDUE_FIELD:
            return f"F_{self.q}[t]/({self.pi})"
        raise AssertionError(k)
