"""Sparse multivariate polynomials over an exact coefficient domain.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
The global monomial order is graded reverse lexicographic with
x0 > x1 > ... ; it fixes printing, parsing round-trips and the ordering
of monomial bases.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .domains import INTEGERS, POLY_RING, RATIONAL_FUNCTIONS, CoeffDomain
from .fqpoly import FqPoly, fq_gcd


def grevlex_key(exps: tuple[int, ...]):
    """Sort key; larger key = larger monomial in grevlex with x0 > x1 > ..."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _has_toplevel_sign(text: str) -> bool:
    """True when '+' or '-' occurs outside parentheses (printer helper:
    such coefficients need wrapping before '*monomial')."""
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            return True
    return False


class ParseError(ValueError):
    """Syntax or domain error in polynomial text, with a position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class MultiPoly:
    """Immutable sparse polynomial in nvars variables over a CoeffDomain."""

    __slots__ = ("domain", "nvars", "terms")

    def __init__(self, domain: CoeffDomain, nvars: int, terms) -> None:
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: dict[tuple[int, ...], object] = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for nvars={nvars}")
            c = domain.coerce(coeff)
            if domain.is_zero(c):
                continue
            clean[exps] = c
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, domain: CoeffDomain, nvars: int) -> "MultiPoly":
        return cls(domain, nvars, {})

    @classmethod
    def constant(cls, domain: CoeffDomain, nvars: int, c) -> "MultiPoly":
        return cls(domain, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, domain: CoeffDomain, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for nvars={nvars}")
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(domain, nvars, {exps: 1})

    @classmethod
    def monomial(cls, domain: CoeffDomain, exps: tuple[int, ...], coeff=1) -> "MultiPoly":
        return cls(domain, len(exps), {tuple(exps): coeff})

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        return max(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    def coefficient(self, exps: tuple[int, ...]):
        return self.terms.get(tuple(exps), self.domain.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.nvars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.domain != other.domain or self.nvars != other.nvars:
            raise ValueError("incompatible polynomials")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        dom = self.domain
        out = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in out:
                s = dom.add(out[exps], c)
                if dom.is_zero(s):
                    del out[exps]
                else:
                    out[exps] = s
            else:
                out[exps] = c
        return MultiPoly(dom, self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        dom = self.domain
        return MultiPoly(dom, self.nvars, {e: dom.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        dom = self.domain
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = dom.mul(c1, c2)
                if exps in out:
                    s = dom.add(out[exps], prod)
                    if dom.is_zero(s):
                        del out[exps]
                    else:
                        out[exps] = s
                else:
                    out[exps] = prod
        return MultiPoly(dom, self.nvars, out)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.domain, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        dom = self.domain
        c = dom.coerce(c)
        return MultiPoly(dom, self.nvars, {e: dom.mul(v, c) for e, v in self.terms.items()})

    def exact_div_scalar(self, c) -> "MultiPoly":
        dom = self.domain
        return MultiPoly(
            dom, self.nvars, {e: dom.exact_div(v, c) for e, v in self.terms.items()}
        )

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact multivariate division by a known factor (grevlex leading-term
        loop); raises ArithmeticError when the division is not exact."""
        self._check_compatible(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.domain
        rem = self
        quo: dict[tuple[int, ...], object] = {}
        lt_e, lt_c = divisor.leading_term()
        while rem:
            re, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re, lt_e))
            if any(e < 0 for e in qe):
                raise ArithmeticError("division is not exact")
            qc = dom.exact_div(rc, lt_c)
            quo[qe] = qc
            rem = rem - divisor * MultiPoly.monomial(dom, qe, qc)
        return MultiPoly(dom, self.nvars, quo)

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, point):
        """Evaluate at a tuple of domain elements (exact)."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        dom = self.domain
        vals = [dom.coerce(x) for x in point]
        acc = dom.zero
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term = dom.mul(term, dom.pow(x, e))
            acc = dom.add(acc, term)
        return acc

    def partial(self, i: int) -> "MultiPoly":
        """Formal partial derivative with respect to x_i."""
        dom = self.domain
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            ne = exps[:i] + (e - 1,) + exps[i + 1 :]
            v = dom.mul(c, dom.coerce(e))
            if dom.is_zero(v):
                continue
            if ne in out:
                v = dom.add(out[ne], v)
            if dom.is_zero(v):
                out.pop(ne, None)
            else:
                out[ne] = v
        return MultiPoly(dom, self.nvars, out)

    def translate(self, point) -> "MultiPoly":
        """Substitute x_i -> x_i + a_i; the result's coefficients are the
        Taylor coefficients of self at the point."""
        dom = self.domain
        a = [dom.coerce(x) for x in point]
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            # expand prod_i (x_i + a_i)^{e_i} term by term
            partials = [((0,) * self.nvars, c)]
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                powers = [dom.one]
                for _ in range(e):
                    powers.append(dom.mul(powers[-1], a[i]))
                nxt = []
                for base_e, base_c in partials:
                    for k in range(e + 1):
                        coeff = dom.mul(base_c, dom.coerce(comb(e, k)))
                        coeff = dom.mul(coeff, powers[e - k])
                        if dom.is_zero(coeff):
                            continue
                        ne = base_e[:i] + (k,) + base_e[i + 1 :]
                        nxt.append((ne, coeff))
                partials = nxt
            for ne, nc in partials:
                if ne in out:
                    s = dom.add(out[ne], nc)
                    if dom.is_zero(s):
                        del out[ne]
                    else:
                        out[ne] = s
                else:
                    out[ne] = nc
        return MultiPoly(dom, self.nvars, out)

    def dehomogenize(self, i: int) -> "MultiPoly":
        """Set x_i = 1 and drop the variable."""
        dom = self.domain
        out: dict[tuple[int, ...], object] = {}
        for exps, c in self.terms.items():
            ne = exps[:i] + exps[i + 1 :]
            if ne in out:
                s = dom.add(out[ne], c)
                if dom.is_zero(s):
                    del out[ne]
                else:
                    out[ne] = s
            else:
                out[ne] = c
        return MultiPoly(dom, self.nvars - 1, out)

    def homogenize(self, position: int = 0) -> "MultiPoly":
        """Insert a fresh homogenizing variable at the given position."""
        d = max(self.degree, 0)
        out = {}
        for exps, c in self.terms.items():
            extra = d - sum(exps)
            ne = exps[:position] + (extra,) + exps[position:]
            out[ne] = c
        return MultiPoly(self.domain, self.nvars + 1, out)

    def homogeneous_part(self, k: int) -> "MultiPoly":
        return MultiPoly(
            self.domain,
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e) == k},
        )

    def lowest_degree(self) -> int:
        """Smallest total degree with a nonzero term; -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def map_coefficients(self, target: CoeffDomain, func) -> "MultiPoly":
        return MultiPoly(target, self.nvars, {e: func(c) for e, c in self.terms.items()})

    def permute_variables(self, perm) -> "MultiPoly":
        """Apply x_i -> x_{perm[i]}."""
        out = {}
        for exps, c in self.terms.items():
            ne = [0] * self.nvars
            for i, e in enumerate(exps):
                ne[perm[i]] = e
            out[tuple(ne)] = c
        return MultiPoly(self.domain, self.nvars, out)

    # -- content (Z and F_q[t] coefficients) -----------------------------------

    def content(self):
        """gcd of the coefficients for integers / poly_ring domains."""
        kind = self.domain.kind
        if kind == INTEGERS:
            from math import gcd

            g = 0
            for c in self.terms.values():
                g = gcd(g, abs(c))
            return g
        if kind == POLY_RING:
            g = FqPoly.zero(self.domain.q)
            for c in self.terms.values():
                g = c.monic() if not g else fq_gcd(g, c)
            return g
        raise TypeError(f"content undefined over {self.domain.describe()}")

    def primitive_part(self) -> "MultiPoly":
        """Divide by the content and normalize the sign / leading unit of the
        grevlex-leading coefficient."""
        if self.is_zero:
            return self
        kind = self.domain.kind
        c = self.content()
        out = self.exact_div_scalar(c)
        _, lead = out.leading_term()
        if kind == INTEGERS and lead < 0:
            out = -out
        elif kind == POLY_RING and lead.leading_coeff != 1:
            inv = pow(lead.leading_coeff, self.domain.q - 2, self.domain.q)
            out = out.scale(inv)
        return out

    # -- text ---------------------------------------------------------------

    def _var_name(self, i: int) -> str:
        return f"x{i}"

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        dom = self.domain
        pieces = []
        for exps, c in self.sorted_terms():
            cs = dom.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            mono = "*".join(
                self._var_name(i) if e == 1 else f"{self._var_name(i)}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                if _has_toplevel_sign(cs):
                    cs = f"({cs})"
                body = f"{cs}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    __str__ = to_string

    def __repr__(self) -> str:
        return f"MultiPoly({self.domain.describe()}, nvars={self.nvars}, {self})"


# -- parsing -------------------------------------------------------------------

_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}


class _Parser:
    """Recursive-descent parser for the polynomial grammar.

    atoms: integer | x<k> | x|y|z|w (nvars <= 4) | t (function-field
    domains) | parenthesized expression; operators + - * / ^ with the
    usual precedence, '^' taking a nonnegative integer exponent.
    """

    def __init__(self, text: str, nvars: int, domain: CoeffDomain):
        self.text = text
        self.pos = 0
        self.nvars = nvars
        self.domain = domain

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> MultiPoly:
        result = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return result

    def expr(self) -> MultiPoly:
        ch = self.peek()
        if ch == "-":
            self.take()
            acc = -self.term()
        else:
            if ch == "+":
                self.take()
            acc = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                acc = acc + self.term()
            elif ch == "-":
                self.take()
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.take()
                acc = acc * self.factor()
            elif ch == "/":
                op_pos = self.pos
                self.take()
                divisor = self.factor()
                acc = self._divide(acc, divisor, op_pos)
            else:
                return acc

    def _divide(self, acc: MultiPoly, divisor: MultiPoly, op_pos: int) -> MultiPoly:
        if not divisor.is_constant:
            raise ParseError("'/' only divides by coefficient constants", op_pos)
        if divisor.is_zero:
            raise ParseError("division by zero", op_pos)
        c = divisor.coefficient((0,) * self.nvars)
        dom = self.domain
        try:
            if dom.is_field:
                inv = dom.inv(c)
                return acc.scale(inv)
            return acc.exact_div_scalar(c)
        except ArithmeticError:
            raise ParseError("coefficient not in domain after division", op_pos)

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() == "-":
                self.error("negative exponent")
            num_pos = self.pos
            digits = ""
            while self.peek().isdigit():
                digits += self.take()
            if not digits:
                raise ParseError("expected integer exponent after '^'", num_pos)
            return base ** int(digits)
        return base

    def atom(self) -> MultiPoly:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.take()
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if ch == "-":
            self.take()
            return -self.atom()
        if ch.isdigit():
            digits = ""
            while self.peek().isdigit():
                digits += self.take()
            return MultiPoly.constant(self.domain, self.nvars, int(digits))
        if ch == "t" and not self._lookahead_is_name_char(1):
            if self.domain.kind not in (POLY_RING, RATIONAL_FUNCTIONS):
                if self.domain.kind == "residue_field":
                    self.take()
                    return MultiPoly.constant(
                        self.domain, self.nvars, self.domain.t_element()
                    )
                self.error("'t' is reserved for function-field domains")
            self.take()
            return MultiPoly.constant(self.domain, self.nvars, self.domain.t_element())
        if ch == "x" and self._lookahead_digit(1):
            self.take()
            digits = ""
            while self.peek().isdigit():
                digits += self.take()
            idx = int(digits)
            if idx >= self.nvars:
                raise ParseError(f"variable x{idx} out of range (nvars={self.nvars})", start)
            return MultiPoly.variable(self.domain, self.nvars, idx)
        if ch in _ALIASES and not self._lookahead_is_name_char(1):
            if self.nvars > 4:
                self.error("aliases x,y,z,w only apply for nvars <= 4")
            idx = _ALIASES[ch]
            if idx >= self.nvars:
                raise ParseError(f"alias {ch!r} out of range (nvars={self.nvars})", start)
            self.take()
            return MultiPoly.variable(self.domain, self.nvars, idx)
        self.error(f"unexpected character {ch!r}" if ch else "unexpected end of input")

    def _lookahead_digit(self, offset: int) -> bool:
        self._skip_ws()
        j = self.pos + offset
        return j < len(self.text) and self.text[j].isdigit()

    def _lookahead_is_name_char(self, offset: int) -> bool:
        self._skip_ws()
        j = self.pos + offset
        return j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_")


def poly_parse(text: str, nvars: int, domain: CoeffDomain) -> MultiPoly:
    """Parse polynomial text into canonical sparse form."""
    return _Parser(text, nvars, domain).parse()


def monomials_of_degree(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given total degree, grevlex-descending."""
    return _monomials_cached(nvars, degree)


@lru_cache(maxsize=None)
def _monomials_cached(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    def gen(rest: int, total: int):
        if rest == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for tail in gen(rest - 1, total - first):
                yield (first,) + tail

    monos = sorted(gen(nvars, degree), key=grevlex_key, reverse=True)
    return tuple(monos)


def monomials_up_to_degree(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of total degree <= degree, grevlex-descending."""
    out = []
    for d in range(degree, -1, -1):
        out.extend(monomials_of_degree(nvars, d))
    return tuple(out)
