"""Univariate polynomials and rational functions over small prime fields.

``FqPoly`` is an element of F_q[t] stored as a coefficient tuple (low
degree first, no trailing zeros, empty tuple = 0).  ``FqRational`` is a
normalized numerator/denominator pair, i.e. an element of F_q(t).  q is
restricted to primes so residue arithmetic stays on plain integers.
Everything is immutable and hashable, which lets the rest of the package
treat these values exactly like ints and Fractions.
"""

from __future__ import annotations

from functools import lru_cache


def _check_same_q(a: "FqPoly", b: "FqPoly") -> None:
    if a.q != b.q:
        raise ValueError(f"mixed characteristics: F_{a.q}[t] vs F_{b.q}[t]")


class FqPoly:
    """A polynomial in F_q[t].

    The zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs) -> None:
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("FqPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "FqPoly":
        return cls(q, ())

    @classmethod
    def one(cls, q: int) -> "FqPoly":
        return cls(q, (1,))

    @classmethod
    def const(cls, q: int, c: int) -> "FqPoly":
        return cls(q, (c,))

    @classmethod
    def t(cls, q: int) -> "FqPoly":
        return cls(q, (0, 1))

    @classmethod
    def parse(cls, q: int, text: str) -> "FqPoly":
        """Parse strings like ``t^3+2*t+1`` (the format __str__ emits)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        # split into signed monomial chunks
        chunks = []
        cur = ""
        for ch in s:
            if ch in "+-" and cur:
                chunks.append(cur)
                cur = ch if ch == "-" else ""
            else:
                cur += ch
        chunks.append(cur)
        coeffs: dict[int, int] = {}
        for chunk in chunks:
            if not chunk or chunk in ("+", "-"):
                raise ValueError(f"bad monomial in {text!r}")
            sign = 1
            if chunk[0] == "-":
                sign, chunk = -1, chunk[1:]
            elif chunk[0] == "+":
                chunk = chunk[1:]
            coef, power = 1, 0
            parts = chunk.split("*")
            for part in parts:
                if part == "t":
                    power += 1
                elif part.startswith("t^"):
                    power += int(part[2:])
                elif part.isdigit():
                    coef *= int(part)
                else:
                    raise ValueError(f"bad token {part!r} in {text!r}")
            coeffs[power] = coeffs.get(power, 0) + sign * coef
        deg = max(coeffs) if coeffs else 0
        return cls(q, [coeffs.get(i, 0) for i in range(deg + 1)])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FqPoly):
            return self.q == other.q and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FqPoly(self.q, (other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FqPoly):
            _check_same_q(self, other)
            return other
        if isinstance(other, int):
            return FqPoly(self.q, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.q
        return FqPoly(self.q, out)

    __radd__ = __add__

    def __neg__(self):
        return FqPoly(self.q, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return FqPoly.zero(self.q)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return FqPoly(self.q, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        q, p = self.q, o
        inv_lead = pow(p.leading_coeff, q - 2, q)
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(p.coeffs) + 1, 0)
        while len(rem) >= len(p.coeffs):
            while rem and rem[-1] % q == 0:
                rem.pop()
            if len(rem) < len(p.coeffs):
                break
            shift = len(rem) - len(p.coeffs)
            factor = (rem[-1] * inv_lead) % q
            quo[shift] = factor
            for i, c in enumerate(p.coeffs):
                rem[shift + i] = (rem[shift + i] - factor * c) % q
        return FqPoly(q, quo), FqPoly(q, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent for FqPoly")
        result = FqPoly.one(self.q)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "FqPoly":
        return FqPoly(self.q, [a * c for a in self.coeffs])

    def monic(self) -> "FqPoly":
        if not self.coeffs:
            return self
        inv = pow(self.leading_coeff, self.q - 2, self.q)
        return self.scale(inv)

    def shift(self, k: int) -> "FqPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return FqPoly(self.q, (0,) * k + self.coeffs)

    def evaluate(self, a: int) -> int:
        """Evaluate at a in F_q (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.q
        return acc

    def derivative(self) -> "FqPoly":
        return FqPoly(self.q, [i * c for i, c in enumerate(self.coeffs)][1:])

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"FqPoly(q={self.q}, {self})"


def fq_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic gcd in F_q[t]."""
    _check_same_q(a, b)
    while b:
        a, b = b, a % b
    return a.monic()


def fq_lcm(a: FqPoly, b: FqPoly) -> FqPoly:
    if not a or not b:
        return FqPoly.zero(a.q)
    return ((a * b) // fq_gcd(a, b)).monic()


def fq_xgcd(a: FqPoly, b: FqPoly) -> tuple[FqPoly, FqPoly, FqPoly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    q = a.q
    r0, r1 = a, b
    s0, s1 = FqPoly.one(q), FqPoly.zero(q)
    t0, t1 = FqPoly.zero(q), FqPoly.one(q)
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not r0:
        return r0, s0, t0
    inv = pow(r0.leading_coeff, q - 2, q)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_from_index(q: int, idx: int) -> FqPoly:
    """Decode the canonical integer encoding sum(c_i * q^i) -> polynomial."""
    coeffs = []
    while idx:
        idx, c = divmod(idx, q)
        coeffs.append(c)
    return FqPoly(q, coeffs)


def poly_to_index(f: FqPoly) -> int:
    idx = 0
    for c in reversed(f.coeffs):
        idx = idx * f.q + c
    return idx


def all_polys(q: int, max_deg: int):
    """All polynomials of degree <= max_deg in canonical (index) order."""
    for idx in range(q ** (max_deg + 1)):
        yield poly_from_index(q, idx)


def monic_polys_of_degree(q: int, n: int):
    """All monic degree-n polynomials, ordered by the index of their tail."""
    if n == 0:
        yield FqPoly.one(q)
        return
    for idx in range(q**n):
        tail = poly_from_index(q, idx)
        coeffs = list(tail.coeffs) + [0] * (n - len(tail.coeffs)) + [1]
        yield FqPoly(q, coeffs)


@lru_cache(maxsize=None)
def _irreducible_cache(q: int, coeffs: tuple) -> bool:
    f = FqPoly(q, coeffs)
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    # trial division by all monic polynomials of degree 1..deg/2
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys_of_degree(q, d):
            if not (f % g):
                return False
    return True


def is_irreducible(f: FqPoly) -> bool:
    return _irreducible_cache(f.q, f.coeffs)


@lru_cache(maxsize=None)
def monic_irreducibles_of_degree(q: int, n: int) -> tuple:
    """All monic irreducible degree-n polynomials, canonically ordered."""
    return tuple(g for g in monic_polys_of_degree(q, n) if is_irreducible(g))


def count_monic_irreducibles(q: int, n: int) -> int:
    """Necklace-counting formula (1/n) * sum_{d | n} mu(d) q^{n/d}."""
    total = 0
    for d in range(1, n + 1):
        if n % d:
            continue
        total += _moebius(d) * q ** (n // d)
    assert total % n == 0
    return total // n


def _moebius(n: int) -> int:
    result, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def fq_factor(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Factor into monic irreducibles by trial division, plus unit scaling.

    Returns [(pi, e), ...] sorted by (degree, index); the unit is dropped.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    factors: list[tuple[FqPoly, int]] = []
    g = f.monic()
    d = 1
    while g.degree >= 1:
        if d > g.degree // 2:
            factors.append((g, 1))
            break
        for pi in monic_irreducibles_of_degree(f.q, d):
            if g.degree < d:
                break
            e = 0
            while True:
                quo, rem = divmod(g, pi)
                if rem:
                    break
                g, e = quo, e + 1
            if e:
                factors.append((pi, e))
        d += 1
    factors.sort(key=lambda fe: (fe[0].degree, poly_to_index(fe[0])))
    return factors


class FqRational:
    """An element of F_q(t): normalized num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: FqPoly, den: FqPoly | None = None) -> None:
        if den is None:
            den = FqPoly.one(num.q)
        _check_same_q(num, den)
        if not den:
            raise ZeroDivisionError("zero denominator in F_q(t)")
        if not num:
            den = FqPoly.one(num.q)
        else:
            g = fq_gcd(num, den)
            if g.degree >= 1:
                num, den = num // g, den // g
            lead_inv = pow(den.leading_coeff, den.q - 2, den.q)
            num, den = num.scale(lead_inv), den.scale(lead_inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FqRational is immutable")

    @property
    def q(self) -> int:
        return self.num.q

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_integral(self) -> bool:
        """True when the value lies in F_q[t]."""
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, FqRational):
            if other.q != self.q:
                raise ValueError("mixed characteristics in F_q(t)")
            return other
        if isinstance(other, FqPoly):
            return FqRational(other)
        if isinstance(other, int):
            return FqRational(FqPoly.const(self.q, other))
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FqRational(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero in F_q(t)")
        return FqRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return FqRational(FqPoly.one(self.q)) / self ** (-n)
        return FqRational(self.num**n, self.den**n)

    def __str__(self) -> str:
        if self.den.degree == 0 and self.den.leading_coeff == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"FqRational(q={self.q}, {self})"
