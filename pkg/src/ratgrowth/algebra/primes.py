"""Prime ideals of Z and F_q[t]: enumeration and Chebyshev-style sums.

Ideals are described by a generator (a prime number, or a monic
irreducible polynomial) together with its norm.  All tests are
deterministic: trial division for integers, exhaustive factor search
for polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .domains import CoeffDomain, _is_prime_int
from .fqpoly import (
    FqPoly,
    count_monic_irreducibles,
    is_irreducible,
    monic_irreducibles_of_degree,
    poly_to_index,
)


@dataclass(frozen=True)
class PrimeIdealDesc:
    """A finite prime of Q (generator: int) or F_q(t) (generator: monic
    irreducible FqPoly); norm is p resp. q^deg."""

    generator: object
    norm: int

    def __post_init__(self):
        g = self.generator
        if isinstance(g, int):
            if not _is_prime_int(g):
                raise ValueError(f"{g} is not prime")
            if self.norm != g:
                raise ValueError(f"norm {self.norm} != p = {g}")
        elif isinstance(g, FqPoly):
            if not g.is_monic or not is_irreducible(g):
                raise ValueError(f"{g} is not monic irreducible")
            if self.norm != g.q**g.degree:
                raise ValueError(f"norm {self.norm} != q^deg = {g.q ** g.degree}")
        else:
            raise TypeError(f"bad prime generator {g!r}")

    @property
    def is_rational(self) -> bool:
        return isinstance(self.generator, int)

    @property
    def q(self) -> int | None:
        return None if self.is_rational else self.generator.q

    @property
    def residue_degree(self) -> int:
        return 1 if self.is_rational else self.generator.degree

    def sort_key(self):
        if self.is_rational:
            return (self.norm, 0)
        return (self.norm, poly_to_index(self.generator))

    def __str__(self) -> str:
        return str(self.generator)


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(math.isqrt(limit)) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


def rational_primes_below(limit: float) -> tuple[int, ...]:
    """Primes p < limit (strict)."""
    if limit <= 2:
        return ()
    top = math.ceil(limit) - (1 if float(limit).is_integer() else 0)
    sieved = _sieve(max(int(top), 2))
    return tuple(p for p in sieved if p < limit)


def _field_context(field) -> tuple[str, int | None]:
    """Accept 'Q', an int q, or a CoeffDomain and return ('Q'|'FF', q)."""
    if field is None or field == "Q":
        return ("Q", None)
    if isinstance(field, int):
        return ("FF", field)
    if isinstance(field, CoeffDomain):
        if field.kind in ("integers", "rationals"):
            return ("Q", None)
        if field.is_function_field_kind:
            return ("FF", field.q)
    kind = getattr(field, "kind", None)
    if kind == "Q":
        return ("Q", None)
    if kind == "Fq(t)":
        return ("FF", field.q)
    raise TypeError(f"cannot interpret field tag {field!r}")


def primes_in_range(lo: float, hi: float, field="Q") -> list[PrimeIdealDesc]:
    """All prime ideals with lo < norm < hi (strict), sorted by norm and
    then by the canonical generator order."""
    if not (1 <= lo < hi):
        raise ValueError(f"need 1 <= lo < hi, got ({lo}, {hi})")
    tag, q = _field_context(field)
    out: list[PrimeIdealDesc] = []
    if tag == "Q":
        for p in rational_primes_below(hi):
            if p > lo:
                out.append(PrimeIdealDesc(p, p))
        return out
    deg = 1
    while q**deg < hi:
        norm = q**deg
        if norm > lo:
            for g in monic_irreducibles_of_degree(q, deg):
                out.append(PrimeIdealDesc(g, norm))
        deg += 1
    out.sort(key=PrimeIdealDesc.sort_key)
    return out


def chebyshev_theta(T: float, field="Q") -> float:
    """sum of log(norm) over prime ideals of norm < T (strict).

    Diagnostic only; function-field counts use the exact irreducible-count
    formula rather than enumeration so large T stays cheap.
    """
    if T < 2:
        raise ValueError("need T >= 2")
    tag, q = _field_context(field)
    if tag == "Q":
        return float(sum(math.log(p) for p in rational_primes_below(T)))
    total = 0.0
    deg = 1
    while q**deg < T:
        total += count_monic_irreducibles(q, deg) * deg * math.log(q)
        deg += 1
    return total


def recheck_prime(desc: PrimeIdealDesc) -> bool:
    """Independent re-verification: 6k+-1 trial division for integers,
    divisibility against *all* lower-degree monic polynomials for FqPoly."""
    g = desc.generator
    if isinstance(g, int):
        if g in (2, 3):
            return True
        if g % 2 == 0 or g % 3 == 0:
            return False
        f = 5
        while f * f <= g:
            if g % f == 0 or g % (f + 2) == 0:
                return False
            f += 6
        return True
    from .fqpoly import all_polys

    if g.degree < 1:
        return False
    for h in all_polys(g.q, g.degree - 1):
        if h.degree >= 1 and not (g % h):
            return False
    return True
